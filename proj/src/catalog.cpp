#include "atiyah4/catalog.hpp"

#include "atiyah4/symmetry.hpp"

#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace atiyah4 {

namespace {

Poly6 var(Var v) { return Poly6::variable(v); }

Poly6 sq(const Poly6& p) { return p * p; }

// Linear form sum_k sign_k * var_k.
Poly6 linear(std::initializer_list<std::pair<int, Var>> parts) {
    Poly6 r;
    for (auto [s, v] : parts) r += Poly6::variable(v) * static_cast<long>(s);
    return r;
}

constexpr int kMaxEnumerationOrder = 6;

}  // namespace

int MultiIndex12::order() const { return std::accumulate(alpha.begin(), alpha.end(), 0); }

std::string to_string(const MultiIndex12& m) {
    std::string s;
    for (int k = 0; k < kNumTriangular; ++k) {
        if (k && k % 3 == 0) s += ',';
        s += std::to_string(m.alpha[k]);
    }
    return s;
}

const std::array<Poly6, kNumTriangular>& triangular_basis() {
    using enum Var;
    static const std::array<Poly6, kNumTriangular> t = {
        linear({{-1, a}, {1, b}, {1, x}}),  // t1
        linear({{1, a}, {-1, b}, {1, x}}),  // t2
        linear({{1, a}, {1, b}, {-1, x}}),  // t3
        linear({{-1, b}, {1, c}, {1, y}}),  // t4
        linear({{1, b}, {-1, c}, {1, y}}),  // t5
        linear({{1, b}, {1, c}, {-1, y}}),  // t6
        linear({{-1, a}, {1, c}, {1, z}}),  // t7
        linear({{1, a}, {-1, c}, {1, z}}),  // t8
        linear({{1, a}, {1, c}, {-1, z}}),  // t9
        linear({{-1, x}, {1, y}, {1, z}}),  // t10
        linear({{1, x}, {-1, y}, {1, z}}),  // t11
        linear({{1, x}, {1, y}, {-1, z}}),  // t12
    };
    return t;
}

Poly6 d3_of(const Poly6& p, const Poly6& q, const Poly6& r) {
    return (q + r - p) * (p - q + r) * (p + q - r);
}

Poly6 make_d3(Var v1, Var v2, Var v3) {
    if (v1 == v2 || v1 == v3 || v2 == v3) throw std::invalid_argument("make_d3: variables must be distinct");
    return d3_of(var(v1), var(v2), var(v3));
}

Poly6 make_p4() {
    return Poly6::monomial(Monomial6({1, 1, 1, 1, 1, 1}));
}

Poly6 make_n4() {
    using enum Var;
    return make_p4() - d3_of(var(x) * var(c), var(a) * var(y), var(b) * var(z));
}

Poly6 make_z4() {
    using enum Var;
    const Poly6 A = sq(var(a)), B = sq(var(b)), C = sq(var(c));
    const Poly6 X = sq(var(x)), Y = sq(var(y)), Z = sq(var(z));
    Poly6 r = A * Y * (B + C + X + Z) + B * Z * (A + C + X + Y) + C * X * (A + B + Y + Z);
    r -= sq(A) * Y + A * sq(Y) + sq(B) * Z + B * sq(Z) + sq(C) * X + C * sq(X);
    r -= A * B * X + A * C * Z + B * C * Y + X * Y * Z;
    return r;
}

Poly6 make_w4() {
    using enum Var;
    const Poly6 A = var(a), B = var(b), C = var(c), X = var(x), Y = var(y), Z = var(z);
    Poly6 r = (sq(A) + sq(Y)) * (B - C - X + Z) + (sq(B) + sq(Z)) * (C + X - A - Y) + (sq(C) + sq(X)) * (A - B + Y - Z);
    r += 2L * ((C * X + Y * Z) * (B - A) + (A * Y + X * Z) * (C - B) + (B * Z + X * Y) * (A - C));
    return r;
}

Poly6 make_v4() {
    using enum Var;
    const Poly6 A = var(a), B = var(b), C = var(c), X = var(x), Y = var(y), Z = var(z);
    return (B + Z - C - X) * (C + X - A - Y) * (A + Y - B - Z);
}

Poly6 make_d4() {
    using enum Var;
    const Poly6 inner = var(a) * (sq(var(b) + var(c)) - sq(var(y))) * make_d3(x, y, z);
    return 60L * make_p4() + 4L * make_n4() + 2L * make_z4() + 12L * sym_average(inner);
}

Poly6 make_m4() {
    return make_d4() - (64L * make_p4() + 4L * make_z4() + sq(make_v4()));
}

Poly6 make_P4() {
    using enum Var;
    auto face = [](Var p, Var q, Var r) { return 8L * (var(p) * var(q) * var(r)) + make_d3(p, q, r); };
    return face(x, y, z) * face(a, b, x) * face(a, c, z) * face(b, c, y);
}

Poly6 make_M4() {
    const Poly6 p4 = make_p4();
    const Poly6 g = 4L * make_z4() + sq(make_v4());
    return sq(64L * p4 + make_m4()) + 32L * p4 * g - make_P4();
}

Poly6 make_F4() { return sq(make_w4()) * make_z4(); }

const NamedPolynomials& named() {
    static const NamedPolynomials n = [] {
        using enum Var;
        NamedPolynomials r;
        r.d3 = make_d3(x, y, z);
        r.p4 = make_p4();
        r.n4 = make_n4();
        r.z4 = make_z4();
        r.w4 = make_w4();
        r.v4 = make_v4();
        r.v4sq = r.v4 * r.v4;
        r.d4 = make_d4();
        r.m4 = r.d4 - (64L * r.p4 + 4L * r.z4 + r.v4sq);
        const Poly6 g = 4L * r.z4 + r.v4sq;
        r.P4 = make_P4();
        r.M4 = sq(64L * r.p4 + r.m4) + 32L * r.p4 * g - r.P4;
        r.F4 = sq(r.w4) * r.z4;
        return r;
    }();
    return n;
}

const std::vector<NamedSpec>& named_specs() {
    static const std::vector<NamedSpec> specs = {
        {"p4", 6, false}, {"n4", 6, false}, {"z4", 6, false},  {"w4", 3, true},
        {"v4", 3, true},  {"v4sq", 6, false}, {"d4", 6, false}, {"m4", 6, false},
        {"P4", 12, false}, {"M4", 12, false}, {"F4", 12, false},
    };
    return specs;
}

const Poly6& named_polynomial(std::string_view name) {
    const auto& n = named();
    if (name == "d3") return n.d3;
    if (name == "p4") return n.p4;
    if (name == "n4") return n.n4;
    if (name == "z4") return n.z4;
    if (name == "w4") return n.w4;
    if (name == "v4") return n.v4;
    if (name == "v4sq") return n.v4sq;
    if (name == "d4") return n.d4;
    if (name == "m4") return n.m4;
    if (name == "P4") return n.P4;
    if (name == "M4") return n.M4;
    if (name == "F4") return n.F4;
    throw std::invalid_argument("unknown polynomial '" + std::string(name) + "'");
}

std::vector<std::string> polynomial_names() {
    return {"d3", "p4", "n4", "z4", "w4", "v4", "v4sq", "d4", "m4", "P4", "M4", "F4"};
}

Poly6 t_alpha_expand(const MultiIndex12& alpha) {
    const auto& t = triangular_basis();
    Poly6 r = Poly6::constant(1);
    for (int k = 0; k < kNumTriangular; ++k) {
        if (alpha.alpha[k] < 0) throw std::invalid_argument("t_alpha_expand: negative exponent");
        for (int e = 0; e < alpha.alpha[k]; ++e) r = r * t[k];
    }
    return r;
}

Poly6 av_t_alpha(const MultiIndex12& alpha) { return sym_average(t_alpha_expand(alpha)); }

std::vector<MultiIndex12> multi_indices(int order) {
    if (order < 0) throw std::invalid_argument("multi_indices: negative order");
    std::vector<MultiIndex12> out;
    MultiIndex12 cur;
    auto rec = [&](auto&& self, int slot, int remaining) -> void {
        if (slot == kNumTriangular - 1) {
            cur.alpha[slot] = remaining;
            out.push_back(cur);
            return;
        }
        for (int e = remaining; e >= 0; --e) {
            cur.alpha[slot] = e;
            self(self, slot + 1, remaining - e);
        }
    };
    rec(rec, 0, order);
    return out;
}

std::vector<TEntry> enumerate_T(int ell) {
    if (ell < 0 || ell > kMaxEnumerationOrder) {
        throw std::invalid_argument("enumerate_T: order " + std::to_string(ell) + " outside 0..6");
    }
    std::vector<TEntry> out;
    std::unordered_multimap<std::size_t, std::size_t> seen;
    for (const auto& alpha : multi_indices(ell)) {
        Poly6 p = av_t_alpha(alpha);
        const std::size_t h = p.hash();
        bool dup = false;
        auto [lo, hi] = seen.equal_range(h);
        for (auto it = lo; it != hi && !dup; ++it) dup = out[it->second].poly == p;
        if (dup) continue;
        seen.emplace(h, out.size());
        out.push_back({alpha, std::move(p)});
    }
    return out;
}

}  // namespace atiyah4
