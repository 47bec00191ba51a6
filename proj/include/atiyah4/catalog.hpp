#pragma once

// Named polynomials of the four-point problem and the triangular-variable
// machinery built on top of them.

#include "atiyah4/polyring.hpp"

#include <array>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace atiyah4 {

inline constexpr int kNumTriangular = 12;

/// Exponent vector over t_1..t_12 (index 0 is t_1).
struct MultiIndex12 {
    std::array<int, kNumTriangular> alpha{};

    int order() const;
    friend bool operator==(const MultiIndex12&, const MultiIndex12&) = default;
    friend auto operator<=>(const MultiIndex12&, const MultiIndex12&) = default;
};

/// Compact form: four space-free groups of three digits, "000,001,010,112".
std::string to_string(const MultiIndex12& m);

/// t_1..t_12, the triangle-inequality linear forms of the four faces.
const std::array<Poly6, kNumTriangular>& triangular_basis();

/// (-v1+v2+v3)(v1-v2+v3)(v1+v2-v3). Throws on repeated variables.
Poly6 make_d3(Var v1, Var v2, Var v3);
/// The same product with arbitrary polynomial arguments.
Poly6 d3_of(const Poly6& p, const Poly6& q, const Poly6& r);

Poly6 make_p4();
Poly6 make_n4();
Poly6 make_z4();
Poly6 make_w4();
Poly6 make_v4();
Poly6 make_d4();
Poly6 make_m4();
Poly6 make_P4();
Poly6 make_M4();
Poly6 make_F4();

/// Every named polynomial, built once on first use.
struct NamedPolynomials {
    Poly6 d3;  // d3(x,y,z)
    Poly6 p4, n4, z4, w4, v4, v4sq, d4, m4, P4, M4, F4;
};
const NamedPolynomials& named();

/// Lookup by name: d3 p4 n4 z4 w4 v4 v4sq d4 m4 P4 M4 F4 (case-sensitive).
/// Throws std::invalid_argument for anything else.
const Poly6& named_polynomial(std::string_view name);
std::vector<std::string> polynomial_names();

/// Expected degree and symmetry class of each named polynomial.
struct NamedSpec {
    std::string_view name;
    int degree;
    bool skew;  // otherwise symmetric
};
const std::vector<NamedSpec>& named_specs();

/// Expanded t^alpha.
Poly6 t_alpha_expand(const MultiIndex12& alpha);
/// av[t^alpha].
Poly6 av_t_alpha(const MultiIndex12& alpha);

/// All weak compositions of `order` into 12 parts, lexicographically
/// descending (the first has all weight on t_1).
std::vector<MultiIndex12> multi_indices(int order);

struct TEntry {
    MultiIndex12 alpha;  // first multi-index (in multi_indices order) producing poly
    Poly6 poly;
};

/// T_ell with duplicate polynomials removed, keeping the first occurrence.
/// Throws std::invalid_argument for ell > 6.
std::vector<TEntry> enumerate_T(int ell);

}  // namespace atiyah4
