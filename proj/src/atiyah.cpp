#include "atiyah4/atiyah.hpp"

#include "atiyah4/catalog.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>

namespace atiyah4 {

namespace {

// Double-precision copy of an exact polynomial for fast repeated evaluation.
class FloatPoly {
public:
    explicit FloatPoly(const Poly6& p) {
        for (const auto& t : p.terms()) terms_.push_back({t.mono.exponents(), t.coeff.get_d()});
    }

    double operator()(const DistanceVector& u) const {
        std::array<std::array<double, 13>, kNumVars> pw{};
        for (int v = 0; v < kNumVars; ++v) {
            pw[v][0] = 1.0;
            for (int e = 1; e < 13; ++e) pw[v][e] = pw[v][e - 1] * u[v];
        }
        double s = 0.0;
        for (const auto& [e, c] : terms_) {
            double term = c;
            for (int v = 0; v < kNumVars; ++v) term *= pw[v][e[v]];
            s += term;
        }
        return s;
    }

private:
    std::vector<std::pair<Monomial6::Exponents, double>> terms_;
};

struct FloatCatalog {
    FloatPoly p4, d4, w4, z4, P4;
};

const FloatCatalog& float_catalog() {
    static const FloatCatalog c = [] {
        const auto& n = named();
        return FloatCatalog{FloatPoly(n.p4), FloatPoly(n.d4), FloatPoly(n.w4), FloatPoly(n.z4), FloatPoly(n.P4)};
    }();
    return c;
}

// Random rotation from a uniformly distributed unit quaternion.
std::array<std::array<double, 3>, 3> random_rotation(std::mt19937_64& gen) {
    std::normal_distribution<double> nd;
    double q0 = nd(gen), q1 = nd(gen), q2 = nd(gen), q3 = nd(gen);
    const double len = std::sqrt(q0 * q0 + q1 * q1 + q2 * q2 + q3 * q3);
    q0 /= len;
    q1 /= len;
    q2 /= len;
    q3 /= len;
    return {{{1 - 2 * (q2 * q2 + q3 * q3), 2 * (q1 * q2 - q0 * q3), 2 * (q1 * q3 + q0 * q2)},
             {2 * (q1 * q2 + q0 * q3), 1 - 2 * (q1 * q1 + q3 * q3), 2 * (q2 * q3 - q0 * q1)},
             {2 * (q1 * q3 - q0 * q2), 2 * (q2 * q3 + q0 * q1), 1 - 2 * (q1 * q1 + q2 * q2)}}};
}

Point3 rotate(const std::array<std::array<double, 3>, 3>& r, const Point3& p) {
    return {r[0][0] * p.x + r[0][1] * p.y + r[0][2] * p.z, r[1][0] * p.x + r[1][1] * p.y + r[1][2] * p.z,
            r[2][0] * p.x + r[2][1] * p.y + r[2][2] * p.z};
}

// Signed offset with magnitude in [1e-6, 1e-3].
double small_offset(std::mt19937_64& gen) {
    std::uniform_real_distribution<double> mag(1e-6, 1e-3);
    std::bernoulli_distribution coin;
    return coin(gen) ? mag(gen) : -mag(gen);
}

double min_pairwise(std::span<const Point3> pts) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t j = i + 1; j < pts.size(); ++j) best = std::min(best, distance(pts[i], pts[j]));
    }
    return best;
}

bool has_coincident(std::span<const Point3> pts) {
    for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            if (pts[i] == pts[j]) return true;
        }
    }
    return false;
}

}  // namespace

Point3::Point3(double x_, double y_, double z_) : x(x_), y(y_), z(z_) {
    if (!std::isfinite(x) || !std::isfinite(y) || !std::isfinite(z)) {
        throw std::invalid_argument("Point3: non-finite coordinate");
    }
}

double norm(const Point3& v) { return std::hypot(v.x, v.y, v.z); }

double distance(const Point3& p, const Point3& q) { return norm(p - q); }

Point3 hopf_map(const Spinor& s) {
    const Complex zw = s.z * std::conj(s.w);
    return {(std::norm(s.z) - std::norm(s.w)) / 2, zw.real(), zw.imag()};
}

Spinor hopf_lift(const Point3& v) {
    const double r = norm(v);
    if (r == 0.0) throw std::domain_error("hopf_lift: zero vector (coincident points)");
    const double t = v.x;
    const Complex zeta(v.y, v.z);
    if (t >= 0) {
        const double z = std::sqrt(r + t);
        return {Complex(z, 0), std::conj(zeta) / z};
    }
    const double w = std::sqrt(r - t);
    return {zeta / w, Complex(w, 0)};
}

Spinor paired_lift(const Spinor& s) { return {-std::conj(s.w), std::conj(s.z)}; }

ComplexMatrix atiyah_matrix(std::span<const Point3> points, std::span<const double> pair_phases) {
    const std::size_t n = points.size();
    if (n < 1) throw std::invalid_argument("atiyah_matrix: need at least one point");
    if (!pair_phases.empty() && pair_phases.size() != n * (n - 1) / 2) {
        throw std::invalid_argument("atiyah_matrix: expected one phase per pair");
    }
    // lifts[j][k]: observer j looking at point k.
    std::vector<std::vector<Spinor>> lifts(n, std::vector<Spinor>(n));
    std::size_t pair = 0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j, ++pair) {
            if (points[i] == points[j]) throw std::invalid_argument("atiyah_matrix: coincident points");
            Spinor s = hopf_lift(points[j] - points[i]);
            if (!pair_phases.empty()) {
                const Complex ph = std::polar(1.0, pair_phases[pair]);
                s.z *= ph;
                s.w *= ph;
            }
            lifts[i][j] = s;
            lifts[j][i] = paired_lift(s);
        }
    }
    ComplexMatrix m{n, std::vector<Complex>(n * n)};
    for (std::size_t j = 0; j < n; ++j) {
        // Coefficients of xi^{n-1-e} eta^e.
        std::vector<Complex> coef{Complex(1, 0)};
        for (std::size_t k = 0; k < n; ++k) {
            if (k == j) continue;
            const Spinor& s = lifts[j][k];
            std::vector<Complex> next(coef.size() + 1);
            for (std::size_t e = 0; e < coef.size(); ++e) {
                next[e] += coef[e] * s.z;
                next[e + 1] += coef[e] * s.w;
            }
            coef = std::move(next);
        }
        for (std::size_t r = 0; r < n; ++r) m(r, j) = coef[r];
    }
    return m;
}

Complex determinant(ComplexMatrix m) {
    const std::size_t n = m.n;
    Complex det(1, 0);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        for (std::size_t r = c + 1; r < n; ++r) {
            if (std::abs(m(r, c)) > std::abs(m(piv, c))) piv = r;
        }
        if (m(piv, c) == Complex(0, 0)) return {0, 0};
        if (piv != c) {
            for (std::size_t k = 0; k < n; ++k) std::swap(m(piv, k), m(c, k));
            det = -det;
        }
        det *= m(c, c);
        for (std::size_t r = c + 1; r < n; ++r) {
            const Complex f = m(r, c) / m(c, c);
            for (std::size_t k = c + 1; k < n; ++k) m(r, k) -= f * m(c, k);
        }
    }
    return det;
}

AtiyahResult atiyah_det(std::span<const Point3> points, std::span<const double> pair_phases) {
    AtiyahResult res;
    res.n = points.size();
    res.value = determinant(atiyah_matrix(points, pair_phases));
    double smallest = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < points.size(); ++i) {
        for (std::size_t j = i + 1; j < points.size(); ++j) {
            // |lift|^2 = |z|^2 + |w|^2 = 2 r.
            smallest = std::min(smallest, std::sqrt(2 * distance(points[i], points[j])));
        }
    }
    res.condition_hint = smallest;
    return res;
}

DistanceVector distance_vector(const Point3& A, const Point3& B, const Point3& C, const Point3& D) {
    return {distance(A, D), distance(B, D), distance(C, D), distance(A, B), distance(B, C), distance(A, C)};
}

DistanceVector distance_vector(std::span<const Point3> four) {
    if (four.size() != 4) throw std::invalid_argument("distance_vector: need exactly four points");
    return distance_vector(four[0], four[1], four[2], four[3]);
}

double cayley_menger(const DistanceVector& u) {
    using Real = long double;
    const auto [a, b, c, x, y, z] = u;
    const Real AB = Real(x) * x, AC = Real(z) * z, AD = Real(a) * a, BC = Real(y) * y, BD = Real(b) * b,
               CD = Real(c) * c;
    // Bordered squared-distance matrix in point order A, B, C, D.
    Real m[5][5] = {
        {0, 1, 1, 1, 1},
        {1, 0, AB, AC, AD},
        {1, AB, 0, BC, BD},
        {1, AC, BC, 0, CD},
        {1, AD, BD, CD, 0},
    };
    // Extended precision: the determinant cancels heavily for flat tetrahedra.
    Real det = 1;
    for (int col = 0; col < 5; ++col) {
        int piv = col;
        for (int r = col + 1; r < 5; ++r) {
            if (std::fabs(m[r][col]) > std::fabs(m[piv][col])) piv = r;
        }
        if (m[piv][col] == 0) return 0;
        if (piv != col) {
            std::swap(m[piv], m[col]);
            det = -det;
        }
        det *= m[col][col];
        for (int r = col + 1; r < 5; ++r) {
            const Real f = m[r][col] / m[col][col];
            for (int k = col; k < 5; ++k) m[r][k] -= f * m[col][k];
        }
    }
    return static_cast<double>(det);
}

bool is_geometric_candidate(const DistanceVector& u) {
    double scale = 0;
    for (double d : u) {
        if (!std::isfinite(d) || d < 0) return false;
        scale = std::max(scale, d);
    }
    if (scale == 0) return true;
    const auto [a, b, c, x, y, z] = u;
    const std::array<double, kNumTriangular> t = {
        -a + b + x, a - b + x, a + b - x, -b + c + y, b - c + y, b + c - y,
        -a + c + z, a - c + z, a + c - z, -x + y + z, x - y + z, x + y - z,
    };
    const double slack = 1e-12 * scale;
    if (std::any_of(t.begin(), t.end(), [slack](double v) { return v < -slack; })) return false;
    return cayley_menger(u) >= -1e-9 * std::pow(scale, 6);
}

std::optional<double> volume_squared_scaled(const DistanceVector& u) {
    if (!is_geometric_candidate(u)) return std::nullopt;
    return cayley_menger(u) / 2;
}

const std::array<std::array<long, kNumVars>, 21>& special_vectors() {
    static const std::array<std::array<long, kNumVars>, 21> v = {{
        {0, 1, 4, 1, 4, 4},     {0, 4, 8, 4, 7, 8},      {0, 6, 0, 6, 6, 0},
        {0, 1, 1, 1, 2, 1},     {0, 5, 5, 5, 5, 5},      {0, 8, 8, 8, 1, 8},
        {0, 1, 3, 1, 4, 3},     {0, 6, 3, 6, 8, 3},      {0, 6, 7, 6, 3, 7},
        {0, 6, 6, 6, 9, 6},     {0, 1, 1, 1, 0, 1},      {0, 5, 3, 5, 3, 3},
        {3, 3, 1, 0, 2, 2},     {9, 9, 7, 0, 2, 2},      {13, 13, 7, 0, 6, 6},
        {19, 11, 7, 8, 4, 12},  {17, 13, 4, 4, 9, 13},   {15, 8, 7, 7, 1, 8},
        {9, 8, 1, 1, 7, 8},     {11, 9, 8, 2, 1, 3},     {17, 9, 2, 8, 7, 15},
    }};
    return v;
}

SampleMode parse_sample_mode(const std::string& s) {
    if (s == "generic") return SampleMode::Generic;
    if (s == "near-planar") return SampleMode::NearPlanar;
    if (s == "near-collinear") return SampleMode::NearCollinear;
    if (s == "near-coincident") return SampleMode::NearCoincident;
    throw std::invalid_argument("unknown sample mode '" + s + "'");
}

const char* to_string(SampleMode m) {
    switch (m) {
        case SampleMode::Generic: return "generic";
        case SampleMode::NearPlanar: return "near-planar";
        case SampleMode::NearCollinear: return "near-collinear";
        case SampleMode::NearCoincident: return "near-coincident";
    }
    return "?";
}

std::vector<Point3> sample_config(int n, std::uint64_t seed, SampleMode mode, double min_separation) {
    if (n < 2 || n > 6) throw std::invalid_argument("sample_config: n must be in 2..6");
    std::mt19937_64 gen(seed);
    std::uniform_real_distribution<double> box(-1.0, 1.0);
    std::vector<Point3> pts(static_cast<std::size_t>(n));

    auto draw = [&](auto&& make) {
        for (int attempt = 0;; ++attempt) {
            for (auto& p : pts) p = make();
            if (min_pairwise(pts) >= min_separation) return;
            if (attempt > 10000) throw std::runtime_error("sample_config: separation constraint unsatisfiable");
        }
    };

    switch (mode) {
        case SampleMode::Generic:
            draw([&] { return Point3(box(gen), box(gen), box(gen)); });
            return pts;
        case SampleMode::NearPlanar:
            draw([&] { return Point3(box(gen), box(gen), small_offset(gen)); });
            break;
        case SampleMode::NearCollinear:
            draw([&] { return Point3(box(gen), small_offset(gen), small_offset(gen)); });
            break;
        case SampleMode::NearCoincident: {
            draw([&] { return Point3(box(gen), box(gen), box(gen)); });
            std::normal_distribution<double> nd;
            Point3 dir(nd(gen), nd(gen), nd(gen));
            const double len = norm(dir);
            std::uniform_real_distribution<double> mag(1e-6, 1e-3);
            const double r = mag(gen) / len;
            pts[1] = Point3(pts[0].x + r * dir.x, pts[0].y + r * dir.y, pts[0].z + r * dir.z);
            break;
        }
    }
    const auto rot = random_rotation(gen);
    for (auto& p : pts) p = rotate(rot, p);
    return pts;
}

void Margin::update_min(double v, std::size_t idx, bool violated) {
    if (!seen || v < worst) {
        worst = v;
        worst_index = idx;
    }
    seen = true;
    if (violated) ++violations;
}

void Margin::update_max(double v, std::size_t idx, bool violated) {
    if (!seen || v > worst) {
        worst = v;
        worst_index = idx;
    }
    seen = true;
    if (violated) ++violations;
}

bool CampaignReport::ok() const {
    for (const Margin* m : {&conj2, &conj3, &conj2_poly, &conj3_poly, &d4sq_vs_P4, &re_identity, &im_identity,
                            &im_planar, &two_point}) {
        if (m->violations) return false;
    }
    return true;
}

std::uint64_t config_seed(std::uint64_t seed, std::size_t index) {
    // splitmix64 of the pair
    std::uint64_t s = seed * 0x9E3779B97F4A7C15ULL + static_cast<std::uint64_t>(index) + 0x632BE59BD9B4E019ULL;
    s = (s ^ (s >> 30)) * 0xBF58476D1CE4E5B9ULL;
    s = (s ^ (s >> 27)) * 0x94D049BB133111EBULL;
    return s ^ (s >> 31);
}

CampaignReport run_campaign(const CampaignOptions& opt) {
    if (opt.n < 2 || opt.n > 6) throw std::invalid_argument("run_campaign: n must be in 2..6");
    CampaignReport rep;
    rep.options = opt;
    const auto& fc = float_catalog();
    const std::size_t n = static_cast<std::size_t>(opt.n);

    for (std::size_t idx = 0; idx < opt.count; ++idx) {
        const auto pts = sample_config(opt.n, config_seed(opt.seed, idx), opt.mode, opt.min_separation);
        if (has_coincident(pts)) {
            // |At| = 0 with a zero right-hand side: both inequalities hold trivially.
            ++rep.degenerate;
            continue;
        }
        ++rep.evaluated;
        const Complex at = atiyah_det(pts).value;
        const double mag = std::abs(at);

        double pair_product = 1;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) pair_product *= 2 * distance(pts[i], pts[j]);
        }
        rep.conj2.update_min(mag / pair_product - 1, idx, mag < pair_product * (1 - opt.ineq_tol));

        if (n >= 3) {
            double sub_product = 1;
            std::vector<Point3> sub(n - 1);
            for (std::size_t k = 0; k < n; ++k) {
                std::size_t w = 0;
                for (std::size_t i = 0; i < n; ++i) {
                    if (i != k) sub[w++] = pts[i];
                }
                sub_product *= std::abs(atiyah_det(sub).value);
            }
            const double lhs = std::pow(mag, static_cast<double>(n - 2));
            rep.conj3.update_min(lhs / sub_product - 1, idx, lhs < sub_product * (1 - opt.ineq_tol));
        }

        if (n == 2) {
            const double x = distance(pts[0], pts[1]);
            const double err = std::abs(at - Complex(2 * x, 0)) / mag;
            rep.two_point.update_max(err, idx, err > opt.tol);
        } else if (n == 3) {
            const double err = std::abs(at.imag()) / mag;
            rep.im_planar.update_max(err, idx, err > opt.tol);
        } else if (n == 4) {
            const DistanceVector u = distance_vector(pts);
            const double p4 = fc.p4(u), d4 = fc.d4(u), w4 = fc.w4(u), z4 = fc.z4(u), P4 = fc.P4(u);
            rep.conj2_poly.update_min(mag / (64 * p4) - 1, idx, mag < 64 * p4 * (1 - opt.ineq_tol));
            rep.conj3_poly.update_min(mag * mag / P4 - 1, idx, mag * mag < P4 * (1 - opt.ineq_tol));
            rep.d4sq_vs_P4.update_min(d4 * d4 / P4 - 1, idx, d4 * d4 < P4 * (1 - opt.ineq_tol));
            const double re_err = std::abs(at.real() - d4) / mag;
            rep.re_identity.update_max(re_err, idx, re_err > opt.tol);
            const double im_err = std::abs(at.imag() * at.imag() - w4 * w4 * z4) / (mag * mag);
            rep.im_identity.update_max(im_err, idx, im_err > opt.tol);
        }
    }
    return rep;
}

}  // namespace atiyah4
