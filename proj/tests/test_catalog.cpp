#include <doctest.h>

#include "atiyah4/atiyah.hpp"
#include "atiyah4/catalog.hpp"
#include "atiyah4/symmetry.hpp"

#include <cmath>
#include <random>
#include <unordered_set>

using namespace atiyah4;

namespace {

Point6 ones() { return to_point6({1, 1, 1, 1, 1, 1}); }

Point6f as_float(const DistanceVector& u) { return {u[0], u[1], u[2], u[3], u[4], u[5]}; }

double triangle_area(const Point3& p, const Point3& q, const Point3& r) {
    const Point3 u = q - p, v = r - p;
    const double cx = u.y * v.z - u.z * v.y, cy = u.z * v.x - u.x * v.z, cz = u.x * v.y - u.y * v.x;
    return 0.5 * std::sqrt(cx * cx + cy * cy + cz * cz);
}

long binomial(int n, int k) {
    long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace

TEST_CASE("named polynomials have the stated degree and symmetry") {
    for (const auto& s : named_specs()) {
        CAPTURE(s.name);
        const Poly6& p = named_polynomial(s.name);
        CHECK(p.is_homogeneous(s.degree));
        if (s.skew) {
            CHECK(is_skew_symmetric(p));
        } else {
            CHECK(is_symmetric(p));
        }
    }
    CHECK(is_skew_symmetric(named().w4));
    CHECK(is_skew_symmetric(named().v4));
    CHECK(named().d3.is_homogeneous(3));
    CHECK(named().v4sq == named().v4 * named().v4);
    CHECK_THROWS_AS(named_polynomial("q7"), std::invalid_argument);
    CHECK_THROWS_AS(named_polynomial("D4"), std::invalid_argument);
    CHECK(polynomial_names().size() == 12);
}

TEST_CASE("values at the all-ones vector") {
    const Point6 u = ones();
    CHECK(evaluate(named().p4, u) == 1);
    CHECK(evaluate(named().n4, u) == 0);
    CHECK(evaluate(named().z4, u) == 2);
    CHECK(evaluate(named().d4, u) == 100);
    CHECK(evaluate(named().m4, u) == 28);
    CHECK(evaluate(named().P4, u) == 6561);
    CHECK(evaluate(named().M4, u) == 2159);
    CHECK(evaluate(named().w4, u) == 0);
    CHECK(evaluate(named().v4, u) == 0);
    CHECK(evaluate(named().F4, u) == 0);
    // d4^2 = P4 + (4 z4 + v4^2)(d4 + 32 p4 + m4) + M4 at u = 1
    CHECK(BigRat(100 * 100) == BigRat(6561 + 8 * (100 + 32 + 28) + 2159));
}

TEST_CASE("p4 is the product of the six distances") {
    Poly6 prod = Poly6::constant(1);
    for (int v = 0; v < kNumVars; ++v) prod = prod * Poly6::variable(static_cast<Var>(v));
    CHECK(named().p4 == prod);
}

TEST_CASE("d3 matches Heron's formula") {
    using enum Var;
    CHECK_THROWS_AS(make_d3(x, x, y), std::invalid_argument);
    CHECK(make_d3(x, y, z) == named().d3);
    CHECK(d3_of(Poly6::variable(x), Poly6::variable(y), Poly6::variable(z)) == named().d3);
    std::mt19937_64 rng(21);
    std::uniform_real_distribution<double> U(-1, 1);
    for (int i = 0; i < 200; ++i) {
        const Point3 p(U(rng), U(rng), U(rng)), q(U(rng), U(rng), U(rng)), r(U(rng), U(rng), U(rng));
        const double sx = distance(p, q), sy = distance(q, r), sz = distance(p, r);
        const double area = triangle_area(p, q, r);
        const double lhs = evaluate_float(named().d3, {0, 0, 0, sx, sy, sz}) * (sx + sy + sz);
        CHECK(lhs == doctest::Approx(16 * area * area).epsilon(1e-9).scale(std::pow(sx + sy + sz, 4)));
    }
}

TEST_CASE("d3 is the product of the last three triangular variables") {
    const auto& t = triangular_basis();
    CHECK(t[9] * t[10] * t[11] == named().d3);
    CHECK(evaluate(named().d3, to_point6({0, 0, 0, 1, 1, 1})) == 1);
    CHECK(evaluate(named().d3, to_point6({0, 0, 0, 2, 1, 1})) == 0);
}

TEST_CASE("named values at listed vectors") {
    CHECK(evaluate(named().d4, to_point6({9, 8, 1, 1, 7, 8})) == 258048);
    CHECK(evaluate(named().p4, to_point6({9, 8, 1, 1, 7, 8})) == 4032);
    CHECK(evaluate(named().v4, to_point6({0, 6, 0, 6, 6, 0})) == 0);
    CHECK(evaluate(named().P4, to_point6({0, 1, 1, 1, 2, 1})) == 0);
}

TEST_CASE("skew polynomials vanish on vectors fixed by an odd permutation") {
    std::mt19937_64 rng(8);
    std::uniform_int_distribution<long> val(1, 12);
    for (int i = 1; i < kGroupOrder; i += 2) {
        const auto& slots = perm_table()[i].slots;
        // constant on the cycles of the slot permutation
        std::array<long, kNumVars> u{};
        std::array<bool, kNumVars> done{};
        for (int s = 0; s < kNumVars; ++s) {
            if (done[s]) continue;
            const long v = val(rng);
            for (int t = s; !done[t]; t = slots[t]) {
                done[t] = true;
                u[t] = v;
            }
        }
        const Point6 pt = to_point6(u);
        CAPTURE(i);
        CHECK(evaluate(named().w4, pt) == 0);
        CHECK(evaluate(named().v4, pt) == 0);
        CHECK(evaluate(named().F4, pt) == 0);
    }
}

TEST_CASE("triangular variables and F4 are nonnegative on geometric vectors") {
    for (std::uint64_t k = 0; k < 300; ++k) {
        const auto pts = sample_config(4, 1000 + k, SampleMode::Generic);
        const Point6f u = as_float(distance_vector(pts));
        for (const auto& t : triangular_basis()) CHECK(evaluate_float(t, u) >= -1e-12);
        const double z4 = evaluate_float(named().z4, u);
        CHECK(z4 >= 0);
        CHECK(evaluate_float(named().F4, u) >= -1e-12);
    }
    for (const auto& t : triangular_basis()) CHECK(t.is_homogeneous(1));
}

TEST_CASE("multi-index enumeration") {
    for (int ell = 0; ell <= 6; ++ell) CHECK(static_cast<long>(multi_indices(ell).size()) == binomial(ell + 11, 11));
    const auto m6 = multi_indices(6);
    CHECK(m6.size() == 12376);
    CHECK(m6.front().alpha[0] == 6);
    CHECK(m6.back().alpha[11] == 6);
    for (std::size_t i = 1; i < m6.size(); ++i) CHECK(m6[i - 1] > m6[i]);
    for (const auto& m : m6) CHECK(m.order() == 6);
    CHECK(to_string(m6.front()) == "600,000,000,000");
}

TEST_CASE("t^alpha and its average") {
    MultiIndex12 m;
    m.alpha[0] = 2;
    m.alpha[5] = 1;
    const auto& t = triangular_basis();
    CHECK(t_alpha_expand(m) == t[0] * t[0] * t[5]);
    CHECK(av_t_alpha(m) == sym_average(t[0] * t[0] * t[5]));
    CHECK(t_alpha_expand(MultiIndex12{}) == Poly6::constant(1));
}

TEST_CASE("deduplicated T_ell") {
    CHECK_THROWS_AS(enumerate_T(7), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_T(-1), std::invalid_argument);
    const auto t0 = enumerate_T(0);
    REQUIRE(t0.size() == 1);
    CHECK(t0[0].poly == Poly6::constant(1));

    const auto t2 = enumerate_T(2);
    std::unordered_set<Poly6> seen;
    for (const auto& e : t2) {
        CHECK(e.poly == av_t_alpha(e.alpha));
        CHECK(e.poly.is_homogeneous(2));
        CHECK(seen.insert(e.poly).second);
    }
    // every multi-index of order 2 is represented
    for (const auto& m : multi_indices(2)) CHECK(seen.count(av_t_alpha(m)) == 1);
    MESSAGE("T2: " << multi_indices(2).size() << " multi-indices, " << t2.size() << " distinct averages");

    const auto t6 = enumerate_T(6);
    std::unordered_set<Poly6> seen6;
    for (const auto& e : t6) {
        CHECK(e.poly.is_homogeneous(6));
        CHECK(seen6.insert(e.poly).second);
    }
    std::mt19937_64 rng(6);
    const auto m6 = multi_indices(6);
    std::uniform_int_distribution<std::size_t> pick(0, m6.size() - 1);
    for (int i = 0; i < 100; ++i) CHECK(seen6.count(av_t_alpha(m6[pick(rng)])) == 1);
    MESSAGE("T6: " << m6.size() << " multi-indices, " << t6.size() << " distinct averages");
}
