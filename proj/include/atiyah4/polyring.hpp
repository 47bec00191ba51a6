#pragma once

// Exact sparse polynomials in the six edge-length variables (a,b,c,x,y,z).

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace atiyah4 {

/// Arbitrary-precision rational. GMP keeps every value canonical
/// (lowest terms, positive denominator, zero stored as 0/1).
using BigRat = mpq_class;
using BigInt = mpz_class;

inline constexpr int kNumVars = 6;

/// Variable slots in the fixed order a, b, c, x, y, z.
enum class Var : int { a = 0, b = 1, c = 2, x = 3, y = 4, z = 5 };

inline constexpr std::array<char, kNumVars> kVarNames = {'a', 'b', 'c', 'x', 'y', 'z'};

/// Monomial a^e0 b^e1 c^e2 x^e3 y^e4 z^e5.
///
/// Packed into one 64-bit key: total degree in the top byte, then the six
/// exponents from a down to z. Comparing keys numerically is exactly the
/// graded lexicographic order (degree first, ties broken by a, then b, ...).
class Monomial6 {
public:
    using Exponents = std::array<int, kNumVars>;

    constexpr Monomial6() = default;
    explicit Monomial6(const Exponents& e);

    static Monomial6 from_key(std::uint64_t key) {
        Monomial6 m;
        m.key_ = key;
        return m;
    }

    int exponent(int slot) const { return static_cast<int>((key_ >> (8 * (kNumVars - 1 - slot))) & 0xFF); }
    int exponent(Var v) const { return exponent(static_cast<int>(v)); }
    Exponents exponents() const;
    int degree() const { return static_cast<int>(key_ >> 48); }
    std::uint64_t key() const { return key_; }

    Monomial6 operator*(const Monomial6& other) const;

    friend bool operator==(const Monomial6&, const Monomial6&) = default;
    friend auto operator<=>(const Monomial6& l, const Monomial6& r) { return l.key_ <=> r.key_; }

    /// `a^e1 b^e2 c^e3 x^e4 y^e5 z^e6`, all six factors always present.
    std::string to_string() const;

private:
    std::uint64_t key_ = 0;
};

struct Term {
    Monomial6 mono;
    BigRat coeff;

    friend bool operator==(const Term& l, const Term& r) { return l.mono == r.mono && l.coeff == r.coeff; }
};

/// Sparse polynomial over BigRat. Terms are kept sorted with the graded-lex
/// largest monomial first and no zero coefficient is ever stored, so two
/// polynomials are equal iff their term vectors are equal.
class Poly6 {
public:
    Poly6() = default;

    static Poly6 constant(const BigRat& c);
    static Poly6 variable(Var v);
    static Poly6 monomial(const Monomial6& m, const BigRat& c = 1);
    /// Normalizes: merges repeated monomials, drops zeros, sorts.
    static Poly6 from_terms(std::vector<Term> terms);

    std::span<const Term> terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    /// Leading coefficient of the graded-lex order; undefined for zero.
    const Term& leading() const { return terms_.front(); }

    /// Total degree, or nullopt for the zero polynomial.
    std::optional<int> degree() const;
    bool is_homogeneous(int d) const;
    /// True when every coefficient has denominator 1.
    bool is_integral() const;
    BigRat coefficient(const Monomial6& m) const;

    Poly6 operator-() const;
    Poly6& operator+=(const Poly6& q);
    Poly6& operator-=(const Poly6& q);
    Poly6& operator*=(const BigRat& c);

    friend Poly6 operator+(Poly6 p, const Poly6& q) { return p += q; }
    friend Poly6 operator-(Poly6 p, const Poly6& q) { return p -= q; }
    friend Poly6 operator*(const Poly6& p, const Poly6& q);
    friend Poly6 operator*(Poly6 p, const BigRat& c) { return p *= c; }
    friend Poly6 operator*(const BigRat& c, Poly6 p) { return p *= c; }
    friend Poly6 operator*(Poly6 p, long c) { return p *= BigRat(c); }
    friend Poly6 operator*(long c, Poly6 p) { return p *= BigRat(c); }

    friend bool operator==(const Poly6&, const Poly6&) = default;

    std::size_t hash() const;

private:
    explicit Poly6(std::vector<Term> sorted) : terms_(std::move(sorted)) {}
    std::vector<Term> terms_;
};

Poly6 add(const Poly6& p, const Poly6& q);
Poly6 mul(const Poly6& p, const Poly6& q);
/// p^0 is 1 for every p, including the zero polynomial.
Poly6 pow(const Poly6& p, unsigned k);
/// Sum of many polynomials in a single merge pass.
Poly6 sum(std::span<const Poly6> polys);

using Point6 = std::array<BigRat, kNumVars>;
using Point6f = std::array<double, kNumVars>;

BigRat evaluate(const Poly6& p, const Point6& u);
/// Direct term-by-term double evaluation. Throws on non-finite input.
double evaluate_float(const Poly6& p, const Point6f& u);

Point6 to_point6(const std::array<long, kNumVars>& u);

/// One term per line, `coeff * a^e1 b^e2 c^e3 x^e4 y^e5 z^e6`, graded-lex
/// descending. The zero polynomial prints as a single line `0`.
std::string to_text(const Poly6& p);
/// Inverse of to_text. Throws std::invalid_argument with a line number.
Poly6 parse_poly(std::string_view text);

}  // namespace atiyah4

template <>
struct std::hash<atiyah4::Poly6> {
    std::size_t operator()(const atiyah4::Poly6& p) const noexcept { return p.hash(); }
};
