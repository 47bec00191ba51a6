#pragma once

// Exact linear program: maximize alpha subject to
//   d4 = alpha * p4 + sum_j lambda_j f_j,  lambda >= 0,
// with one equality per monomial and alpha free.

#include "atiyah4/polyring.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace atiyah4 {

struct LpProblem {
    std::vector<Monomial6> rows;               // graded-lex descending
    std::vector<Poly6> columns;                // [0] = p4 (alpha), then the basis
    std::vector<std::string> column_names;
    std::vector<std::vector<BigRat>> matrix;   // rows x columns
    std::vector<BigRat> rhs;                   // coefficients of d4
    Poly6 target;                              // d4
};

enum class LpStatus { Optimal, Infeasible, Unbounded };
const char* to_string(LpStatus s);

struct LpSolution {
    LpStatus status = LpStatus::Infeasible;
    BigRat alpha;
    std::vector<BigRat> multipliers;  // one per basis polynomial (column 1..)
    std::vector<std::size_t> support; // basis indices with lambda > 0
    std::size_t pivots = 0;
    std::size_t active_rows = 0;      // equality rows left after removing duplicates
};

/// Throws std::invalid_argument if a basis element is not homogeneous of degree 6.
LpProblem build_program(std::span<const Poly6> basis, std::vector<std::string> names = {});

/// Two-phase exact simplex with Bland's rule. Deterministic for a given
/// column order.
LpSolution solve(const LpProblem& prob);

/// d4 - alpha p4 - sum lambda_j f_j; zero for a correct optimum.
Poly6 reconstruction_residual(const LpProblem& prob, const LpSolution& sol);

/// The evaluation bound at u* = (9,8,1,1,7,8), where d4 = 64 p4 > 0.
struct BoundCheck {
    bool applicable = false;
    BigRat bound;
    std::string reason;  // set when not applicable
};
BoundCheck upper_bound_check(std::span<const Poly6> basis);

/// Named program bases: "t6" plus any of "z4", "n4", "v4sq" as extras.
struct NamedBasis {
    std::vector<Poly6> polys;
    std::vector<std::string> names;
};
/// Extras first (in the given order), then the deduplicated T6.
/// Throws std::invalid_argument for an unknown name.
NamedBasis make_basis(const std::string& base, const std::vector<std::string>& extras);

}  // namespace atiyah4
