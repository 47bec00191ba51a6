#include <doctest.h>

#include "atiyah4/atiyah.hpp"
#include "atiyah4/catalog.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

using namespace atiyah4;

namespace {

Point6f as_float(const DistanceVector& u) { return {u[0], u[1], u[2], u[3], u[4], u[5]}; }

double rel(Complex got, Complex want) { return std::abs(got - want) / std::max(std::abs(want), 1e-300); }

std::vector<Point3> regular_tetrahedron() {
    const double s = 1 / (2 * std::numbers::sqrt2);
    return {Point3(s, s, s), Point3(s, -s, -s), Point3(-s, s, -s), Point3(-s, -s, s)};
}

// Rotation from a random unit quaternion.
Point3 rotate(const std::array<double, 4>& q, const Point3& p) {
    const auto [w, x, y, z] = q;
    return {(1 - 2 * (y * y + z * z)) * p.x + 2 * (x * y - w * z) * p.y + 2 * (x * z + w * y) * p.z,
            2 * (x * y + w * z) * p.x + (1 - 2 * (x * x + z * z)) * p.y + 2 * (y * z - w * x) * p.z,
            2 * (x * z - w * y) * p.x + 2 * (y * z + w * x) * p.y + (1 - 2 * (x * x + y * y)) * p.z};
}

std::array<double, 4> random_quaternion(std::mt19937_64& rng) {
    std::normal_distribution<double> N;
    std::array<double, 4> q{N(rng), N(rng), N(rng), N(rng)};
    const double n = std::sqrt(q[0] * q[0] + q[1] * q[1] + q[2] * q[2] + q[3] * q[3]);
    for (auto& v : q) v /= n;
    return q;
}

Complex At(const std::vector<Point3>& p) { return atiyah_det(p).value; }

}  // namespace

TEST_CASE("Hopf lift is a right inverse of the Hopf map") {
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> U(-2, 2);
    for (int i = 0; i < 500; ++i) {
        const Point3 v(U(rng), U(rng), U(rng));
        const Spinor s = hopf_lift(v);
        const Point3 back = hopf_map(s);
        CHECK(distance(back, v) <= 1e-14 * (1 + norm(v)));
        const Point3 opp = hopf_map(paired_lift(s));
        CHECK(distance(opp, Point3(-v.x, -v.y, -v.z)) <= 1e-14 * (1 + norm(v)));
        CHECK(std::norm(s.z) + std::norm(s.w) == doctest::Approx(2 * norm(v)).epsilon(1e-14));
    }
    const Spinor e = hopf_lift(Point3(1, 0, 0));
    CHECK(e.z == Complex(std::sqrt(2.0), 0));
    CHECK(std::abs(e.w) == 0);
    const Spinor f = hopf_lift(Point3(-1, 0, 0));
    CHECK(std::abs(f.z) == 0);
    CHECK(f.w == Complex(std::sqrt(2.0), 0));
    CHECK_THROWS_AS(hopf_lift(Point3(0, 0, 0)), std::domain_error);
    CHECK_THROWS_AS(Point3(0, std::nan(""), 0), std::invalid_argument);
}

TEST_CASE("two points give twice the distance") {
    std::mt19937_64 rng(2);
    std::uniform_real_distribution<double> U(-1, 1);
    for (int i = 0; i < 100; ++i) {
        const std::vector<Point3> p = {Point3(U(rng), U(rng), U(rng)), Point3(U(rng), U(rng), U(rng))};
        CHECK(rel(At(p), 2 * distance(p[0], p[1])) <= 1e-12);
    }
}

TEST_CASE("three points give 8xyz + d3(x,y,z)") {
    for (std::uint64_t k = 0; k < 1000; ++k) {
        const auto p = sample_config(3, 500 + k, SampleMode::Generic);
        const double x = distance(p[0], p[1]), y = distance(p[1], p[2]), z = distance(p[0], p[2]);
        const double want = 8 * x * y * z + (-x + y + z) * (x - y + z) * (x + y - z);
        CHECK(rel(At(p), want) <= 1e-9);
    }
}

TEST_CASE("unit regular tetrahedron") {
    const auto p = regular_tetrahedron();
    CHECK(distance(p[0], p[1]) == doctest::Approx(1).epsilon(1e-15));
    CHECK(rel(At(p), Complex(100, 0)) <= 1e-9);
    const DistanceVector u = distance_vector(p);
    CHECK(cayley_menger(u) == doctest::Approx(4).epsilon(1e-12));
    CHECK(*volume_squared_scaled(u) == doctest::Approx(2).epsilon(1e-12));
}

TEST_CASE("four points: real part is d4, imaginary part squared is w4^2 z4") {
    for (std::uint64_t k = 0; k < 300; ++k) {
        const auto p = sample_config(4, 900 + k, SampleMode::Generic);
        const Complex at = At(p);
        const Point6f u = as_float(distance_vector(p));
        const double mag = std::abs(at);
        CHECK(std::abs(at.real() - evaluate_float(named().d4, u)) <= 1e-10 * mag);
        CHECK(std::abs(at.imag() * at.imag() - evaluate_float(named().F4, u)) <= 1e-10 * mag * mag);
    }
}

TEST_CASE("P4 is the product of the four face determinants") {
    for (std::uint64_t k = 0; k < 200; ++k) {
        const auto p = sample_config(4, 40 + k, SampleMode::Generic);
        const auto face = [&](int i, int j, int l) {
            const std::vector<Point3> f = {p[i], p[j], p[l]};
            return At(f).real();
        };
        const double prod = face(0, 1, 2) * face(0, 1, 3) * face(0, 2, 3) * face(1, 2, 3);
        const double P4 = evaluate_float(named().P4, as_float(distance_vector(p)));
        CHECK(P4 == doctest::Approx(prod).epsilon(1e-10));
    }
}

TEST_CASE("invariance under relabeling, rigid motions and scaling; conjugation under reflection") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> U(-1, 1);
    for (int n = 2; n <= 6; ++n) {
        for (int trial = 0; trial < 20; ++trial) {
            auto p = sample_config(n, 7000 + 31 * n + trial, SampleMode::Generic);
            const Complex base = At(p);
            CAPTURE(n);

            auto perm = p;
            std::shuffle(perm.begin(), perm.end(), rng);
            CHECK(rel(At(perm), base) <= 1e-9);

            const auto q = random_quaternion(rng);
            const Point3 shift(U(rng), U(rng), U(rng));
            std::vector<Point3> moved;
            for (const auto& pt : p) {
                const Point3 r = rotate(q, pt);
                moved.emplace_back(r.x + shift.x, r.y + shift.y, r.z + shift.z);
            }
            CHECK(rel(At(moved), base) <= 1e-9);

            std::vector<Point3> scaled;
            for (const auto& pt : p) scaled.emplace_back(3 * pt.x, 3 * pt.y, 3 * pt.z);
            CHECK(rel(At(scaled), base * std::pow(3.0, n * (n - 1) / 2)) <= 1e-9);

            std::vector<Point3> mirrored;
            for (const auto& pt : p) mirrored.emplace_back(pt.x, pt.y, -pt.z);
            CHECK(rel(At(mirrored), std::conj(base)) <= 1e-9);
        }
    }
}

TEST_CASE("determinant does not depend on the lift phases") {
    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> theta(0, 2 * std::numbers::pi);
    for (int n = 2; n <= 5; ++n) {
        for (int trial = 0; trial < 20; ++trial) {
            const auto p = sample_config(n, 300 + 17 * n + trial, SampleMode::Generic);
            std::vector<double> phases(n * (n - 1) / 2);
            for (auto& t : phases) t = theta(rng);
            CHECK(rel(atiyah_det(p, phases).value, At(p)) <= 1e-12);
        }
    }
    const auto p = regular_tetrahedron();
    std::vector<double> wrong(3, 0.0);
    CHECK_THROWS_AS(atiyah_det(p, wrong), std::invalid_argument);
}

TEST_CASE("determinant of a small matrix") {
    ComplexMatrix m{2, {Complex(1, 1), Complex(2, 0), Complex(0, 3), Complex(4, -1)}};
    // column-major: [[1+i, 3i], [2, 4-i]]
    CHECK(rel(determinant(m), Complex(1, 1) * Complex(4, -1) - Complex(0, 3) * Complex(2, 0)) <= 1e-15);
    ComplexMatrix z{2, {Complex(1, 0), Complex(2, 0), Complex(2, 0), Complex(4, 0)}};
    CHECK(std::abs(determinant(z)) <= 1e-15);
}

TEST_CASE("coincident points are rejected") {
    const std::vector<Point3> p = {Point3(0, 0, 1), Point3(0, 0, 1)};
    CHECK_THROWS_AS(atiyah_det(p), std::invalid_argument);
    CHECK_THROWS_AS(atiyah_det(std::vector<Point3>{}), std::invalid_argument);
}

TEST_CASE("z4 agrees with the Cayley-Menger volume") {
    for (std::uint64_t k = 0; k < 1000; ++k) {
        const auto p = sample_config(4, 12000 + k, SampleMode::Generic);
        const DistanceVector u = distance_vector(p);
        REQUIRE(is_geometric_candidate(u));
        const auto v = volume_squared_scaled(u);
        REQUIRE(v.has_value());
        Point6 ue;
        for (int i = 0; i < kNumVars; ++i) ue[i] = BigRat(u[i]);
        const double z4 = evaluate(named().z4, ue).get_d();
        CHECK(std::abs(z4 - *v) <= 1e-9 * std::abs(*v));
    }
}

TEST_CASE("geometric candidates") {
    CHECK_FALSE(is_geometric_candidate({1, 1, 1, 5, 1, 1}));
    CHECK_FALSE(volume_squared_scaled({1, 1, 1, 5, 1, 1}).has_value());
    // four coplanar points: unit square, diagonals sqrt 2
    const double r2 = std::sqrt(2.0);
    const DistanceVector sq = {1, r2, 1, 1, 1, r2};
    CHECK(is_geometric_candidate(sq));
    CHECK(std::abs(cayley_menger(sq)) <= 1e-12);
    CHECK(distance_vector(std::vector<Point3>{Point3(0, 0, 0), Point3(1, 0, 0), Point3(1, 1, 0), Point3(0, 1, 0)}) ==
          sq);
    CHECK_THROWS_AS(distance_vector(std::vector<Point3>{Point3(0, 0, 0)}), std::invalid_argument);
}

TEST_CASE("special vectors are listed with the first fifteen degenerate") {
    const auto& v = special_vectors();
    CHECK(v.size() == 21);
    for (int i = 0; i < 15; ++i) CHECK(std::count(v[i].begin(), v[i].end(), 0L) >= 1);
    CHECK(v[18] == std::array<long, 6>{9, 8, 1, 1, 7, 8});
}

TEST_CASE("sampler is deterministic and respects its mode") {
    for (auto mode : {SampleMode::Generic, SampleMode::NearPlanar, SampleMode::NearCollinear, SampleMode::NearCoincident}) {
        CAPTURE(to_string(mode));
        CHECK(sample_config(4, 42, mode) == sample_config(4, 42, mode));
        CHECK(parse_sample_mode(to_string(mode)) == mode);
    }
    CHECK(sample_config(4, 42, SampleMode::Generic) != sample_config(4, 43, SampleMode::Generic));
    CHECK_THROWS_AS(parse_sample_mode("planar"), std::invalid_argument);
    CHECK_THROWS_AS(sample_config(7, 1, SampleMode::Generic), std::invalid_argument);
    CHECK_THROWS_AS(sample_config(1, 1, SampleMode::Generic), std::invalid_argument);

    for (std::uint64_t s = 0; s < 200; ++s) {
        const auto p = sample_config(5, s, SampleMode::Generic, 0.05);
        for (std::size_t i = 0; i < p.size(); ++i)
            for (std::size_t j = i + 1; j < p.size(); ++j) CHECK(distance(p[i], p[j]) >= 0.05);
        const auto q = sample_config(4, s, SampleMode::NearPlanar);
        const DistanceVector u = distance_vector(q);
        const double scale = std::pow(*std::max_element(u.begin(), u.end()), 6);
        CHECK(std::abs(cayley_menger(u)) <= 1e-2 * scale);
        CHECK(std::abs(cayley_menger(u)) > 0);
    }
    CHECK(config_seed(1, 0) == config_seed(1, 0));
    CHECK(config_seed(1, 0) != config_seed(1, 1));
    CHECK(config_seed(1, 0) != config_seed(2, 0));
}

TEST_CASE("small campaigns") {
    CampaignOptions o;
    o.count = 200;
    for (int n = 2; n <= 6; ++n) {
        o.n = n;
        const CampaignReport r = run_campaign(o);
        CAPTURE(n);
        CHECK(r.evaluated == 200);
        CHECK(r.ok());
        CHECK(r.conj2.violations == 0);
        if (n == 2) CHECK(r.two_point.worst <= 1e-12);
        if (n == 3) CHECK(r.im_planar.worst <= 1e-8);
        if (n == 4) {
            CHECK(r.re_identity.seen);
            CHECK(r.conj3_poly.violations == 0);
        }
    }
    o.n = 4;
    o.mode = SampleMode::NearPlanar;
    const CampaignReport planar = run_campaign(o);
    CHECK(planar.ok());
    // a nearly planar configuration has a nearly real determinant
    const auto p = sample_config(4, 5, SampleMode::NearPlanar);
    const Complex at = At(p);
    CHECK(std::abs(at.imag()) <= 1e-2 * std::abs(at));
}
