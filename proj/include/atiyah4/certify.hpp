#pragma once

// Certificate files and the exact residual checks for the central identities.

#include "atiyah4/catalog.hpp"
#include "atiyah4/polyring.hpp"

#include <array>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace atiyah4 {

inline constexpr const char* kSec3Id = "sec3-188/3";
inline constexpr const char* kEq42Id = "eq42";
inline constexpr const char* kEq53Id = "eq53";

/// Maps printed digit group g (0..3) to triangular group slot_mapping[g],
/// where group k covers t_{3k+1}..t_{3k+3}.
using SlotMapping = std::array<int, 4>;
inline constexpr SlotMapping kIdentityMapping = {0, 1, 2, 3};

struct CertTerm {
    MultiIndex12 alpha;  // as printed, before the slot mapping
    BigInt coeff;

    friend bool operator==(const CertTerm& l, const CertTerm& r) { return l.alpha == r.alpha && l.coeff == r.coeff; }
};

struct Certificate {
    std::string id;
    BigInt scale;
    SlotMapping slot_mapping = kIdentityMapping;
    std::string source;
    /// Free-form header records kept verbatim, in file order ("note", "correction").
    std::vector<std::pair<std::string, std::string>> header;
    std::vector<CertTerm> terms;
    /// Only eq53: the degree-6 terms multiplied by (4 z4 + v4^2).
    std::vector<CertTerm> multiplier_terms;

    friend bool operator==(const Certificate&, const Certificate&) = default;
};

class CertificateError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Required scale and term orders for a known identity id.
struct IdentityShape {
    BigInt scale;
    int term_order;
    int multiplier_order;  // -1 when multiplier terms are not allowed
};
IdentityShape identity_shape(const std::string& id);

/// Throws CertificateError (with the line number) on malformed input,
/// unknown fields, wrong orders or non-positive coefficients.
Certificate parse_certificate(const std::string& text);
Certificate load_certificate(const std::filesystem::path& path);
std::string format_certificate(const Certificate& cert);
void save_certificate(const Certificate& cert, const std::filesystem::path& path);

/// Applies the slot mapping, yielding exponents over t_1..t_12.
MultiIndex12 to_triangular(const MultiIndex12& printed, const SlotMapping& mapping);

struct ResidualReport {
    std::string id;
    Poly6 residual;
    bool pass = false;
    std::vector<Term> worst_monomials;  // up to 10, largest |coeff| first
    double seconds = 0.0;
};

/// sum_alpha coeff * 24 av[t^alpha], i.e. the certificate side without the
/// 1/24 so everything stays integral.
Poly6 certificate_sum24(const std::vector<CertTerm>& terms, const SlotMapping& mapping);

/// 3 d4 - (188 p4 + 10 z4 + 4 n4 + 2 v4^2 + sum lambda av[t^alpha]).
ResidualReport check_sec3(const Certificate& cert);
/// 64 p4 m4 - sum lambda av[t^alpha].
ResidualReport check_eq42(const Certificate& cert);
/// 128 M4 - (4 z4 + v4^2) sum mu av[t^alpha] - sum nu av[t^alpha].
ResidualReport check_eq53(const Certificate& cert);
/// d4^2 - P4 - (4 z4 + v4^2)(d4 + 32 p4 + m4) - M4.
ResidualReport check_eq52();
/// Dispatches on cert.id.
ResidualReport check_certificate(const Certificate& cert);

/// Tries the 24 group orderings on a sec3 certificate; returns the first
/// mapping with zero residual, or nullopt.
std::optional<SlotMapping> find_slot_mapping(const Certificate& cert);

/// Exact evaluations on the 21 listed vectors where d4 = 64 p4.
struct SpecialVectorReport {
    int d4_eq_64p4 = 0;
    int z4_zero = 0;
    int v4_zero = 0;
    int first15_d4_p4_zero = 0;  // among the first fifteen
    int last6_p4_nonzero = 0;    // among the remaining six
    int n4_nonzero = 0;
    BigRat d4_at_ustar;          // d4(9,8,1,1,7,8)
    bool ok() const;
};
SpecialVectorReport check_special_vectors();

}  // namespace atiyah4
