#pragma once

// Floating-point Atiyah determinant for n points in R^3 and the
// distance-geometry helpers used to compare it with the exact polynomials.

#include "atiyah4/polyring.hpp"

#include <array>
#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace atiyah4 {

using Complex = std::complex<double>;

struct Point3 {
    double x = 0, y = 0, z = 0;

    Point3() = default;
    /// Throws std::invalid_argument on non-finite coordinates.
    Point3(double x_, double y_, double z_);

    friend Point3 operator-(const Point3& p, const Point3& q) { return {p.x - q.x, p.y - q.y, p.z - q.z}; }
    friend bool operator==(const Point3&, const Point3&) = default;
};

double norm(const Point3& v);
double distance(const Point3& p, const Point3& q);

/// A point of C^2.
struct Spinor {
    Complex z, w;
};

/// h(z,w) = ((|z|^2 - |w|^2)/2, z conj(w)), returned as a real 3-vector
/// (t, Re, Im) with R^3 identified with R x C.
Point3 hopf_map(const Spinor& s);

/// A preimage of v under the Hopf map. Branch: z = sqrt(r+t), w = conj(zeta)/z
/// for t >= 0, otherwise w = sqrt(r-t), z = zeta/w.
/// Throws std::domain_error for the zero vector.
Spinor hopf_lift(const Point3& v);

/// Lift of P_j P_i forced by the normalization when `lift_ij` lifts P_i P_j:
/// (-conj(w), conj(z)).
Spinor paired_lift(const Spinor& lift_ij);

/// Column-major n x n complex matrix.
struct ComplexMatrix {
    std::size_t n = 0;
    std::vector<Complex> data;

    Complex& operator()(std::size_t r, std::size_t c) { return data[c * n + r]; }
    const Complex& operator()(std::size_t r, std::size_t c) const { return data[c * n + r]; }
};

/// Column j holds the coefficients of prod_{k != j} (z_k xi + w_k eta) in
/// xi^{n-1}, xi^{n-2} eta, ..., eta^{n-1}, built from observer j's lifts.
/// `pair_phases`, when non-empty, multiplies the lift of P_i P_j (i < j) by
/// exp(i theta) before pairing; one entry per pair in (0,1),(0,2),...,(n-2,n-1)
/// order. Throws std::invalid_argument for coincident points or n < 1.
ComplexMatrix atiyah_matrix(std::span<const Point3> points, std::span<const double> pair_phases = {});

/// LU with partial pivoting.
Complex determinant(ComplexMatrix m);

struct AtiyahResult {
    Complex value;
    std::size_t n = 0;
    double condition_hint = 0;  // smallest lift norm
};

AtiyahResult atiyah_det(std::span<const Point3> points, std::span<const double> pair_phases = {});

/// u = (a,b,c,x,y,z) = (|AD|, |BD|, |CD|, |AB|, |BC|, |AC|).
using DistanceVector = std::array<double, kNumVars>;
DistanceVector distance_vector(const Point3& A, const Point3& B, const Point3& C, const Point3& D);
DistanceVector distance_vector(std::span<const Point3> four);

/// Cayley-Menger determinant of the squared distances; equals 288 V^2.
double cayley_menger(const DistanceVector& u);

/// All twelve triangle inequalities hold and the Cayley-Menger determinant is
/// not below -1e-9 times the sixth power of the largest distance.
bool is_geometric_candidate(const DistanceVector& u);

/// 144 V^2, or nullopt when u is not geometric.
std::optional<double> volume_squared_scaled(const DistanceVector& u);

/// The 21 distance vectors on which d4 = 64 p4, in listing order
/// (the first fifteen have d4 = p4 = 0).
const std::array<std::array<long, kNumVars>, 21>& special_vectors();

enum class SampleMode { Generic, NearPlanar, NearCollinear, NearCoincident };
/// Parses generic | near-planar | near-collinear | near-coincident.
SampleMode parse_sample_mode(const std::string& s);
const char* to_string(SampleMode m);

/// Reproducible configuration of n points (2 <= n <= 6). Generic mode draws
/// from [-1,1]^3 with pairwise separation >= min_separation; degenerate modes
/// sit within 1e-3 of the named degeneracy, never exactly on it.
std::vector<Point3> sample_config(int n, std::uint64_t seed, SampleMode mode, double min_separation = 1e-2);

/// Sampling campaign over `count` configurations (index k uses the seed
/// derived from (seed, k)); tracks margins of the conjectured inequalities
/// and, for n = 4, the Re/Im identities against the exact polynomials.
struct CampaignOptions {
    int n = 4;
    std::size_t count = 10000;
    std::uint64_t seed = 1;
    SampleMode mode = SampleMode::Generic;
    double tol = 1e-8;           // identity tolerance, relative to |At| (or |At|^2)
    double ineq_tol = 1e-9;      // slack for the inequalities
    double min_separation = 1e-2;
};

struct Margin {
    double worst = 0;               // minimum relative margin observed (or max error)
    std::size_t worst_index = 0;
    std::size_t violations = 0;
    bool seen = false;
    void update_min(double v, std::size_t idx, bool violated);
    void update_max(double v, std::size_t idx, bool violated);
};

struct CampaignReport {
    CampaignOptions options;
    std::size_t evaluated = 0;
    std::size_t degenerate = 0;  // coincident points, |At| = 0 by convention
    Margin conj2;                // |At| / prod(2 r_ij) - 1
    Margin conj3;                // |At|^{n-2} / prod |At_k| - 1
    Margin conj2_poly;           // n = 4: |At| / (64 p4) - 1
    Margin conj3_poly;           // n = 4: |At|^2 / P4 - 1
    Margin d4sq_vs_P4;           // n = 4: d4(u)^2 / P4 - 1
    Margin re_identity;          // n = 4: |Re At - d4(u)| / |At|
    Margin im_identity;          // n = 4: |(Im At)^2 - w4^2 z4| / |At|^2
    Margin im_planar;            // n = 3: |Im At| / |At|
    Margin two_point;            // n = 2: |At - 2x| / |At|
    bool ok() const;
};

/// Derives a per-configuration seed.
std::uint64_t config_seed(std::uint64_t seed, std::size_t index);

CampaignReport run_campaign(const CampaignOptions& opt);

}  // namespace atiyah4
