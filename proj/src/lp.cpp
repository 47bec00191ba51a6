#include "atiyah4/lp.hpp"

#include "atiyah4/catalog.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace atiyah4 {

namespace {

using Row = std::vector<BigRat>;

// Dense tableau. Columns [0, num_vars) are structural, then one artificial
// per row, then the right-hand side. The last row holds reduced costs d_j
// (maximization) and minus the objective value in the rhs slot.
class Tableau {
public:
    Tableau(std::vector<Row> a, std::vector<BigRat> b, std::size_t num_vars)
        : m_(a.size()), n_(num_vars), width_(num_vars + a.size() + 1) {
        t_.assign(m_ + 1, Row(width_));
        basis_.resize(m_);
        for (std::size_t i = 0; i < m_; ++i) {
            const bool flip = sgn(b[i]) < 0;
            for (std::size_t j = 0; j < n_; ++j) t_[i][j] = flip ? BigRat(-a[i][j]) : a[i][j];
            t_[i][n_ + i] = 1;
            t_[i][rhs()] = flip ? BigRat(-b[i]) : b[i];
            basis_[i] = n_ + i;
        }
    }

    std::size_t rhs() const { return width_ - 1; }
    bool is_artificial(std::size_t j) const { return j >= n_ && j < rhs(); }

    // Phase I: maximize -sum(artificials).
    void set_phase_one_objective() {
        Row& d = t_[m_];
        std::fill(d.begin(), d.end(), BigRat(0));
        for (std::size_t i = 0; i < m_; ++i) {
            for (std::size_t j = 0; j < n_; ++j) d[j] += t_[i][j];
            d[rhs()] += t_[i][rhs()];
        }
    }

    void set_objective(const std::vector<BigRat>& cost) {
        Row& d = t_[m_];
        for (std::size_t j = 0; j < width_; ++j) d[j] = j < n_ ? cost[j] : BigRat(0);
        for (std::size_t i = 0; i < m_; ++i) {
            const std::size_t bj = basis_[i];
            const BigRat cb = bj < n_ ? cost[bj] : BigRat(0);
            if (sgn(cb) == 0) continue;
            for (std::size_t j = 0; j < width_; ++j) {
                if (sgn(t_[i][j]) != 0) d[j] -= cb * t_[i][j];
            }
        }
    }

    BigRat objective() const { return -t_[m_][rhs()]; }

    enum class Outcome { Optimal, Unbounded };

    // Bland's rule: lowest-index improving column enters; among minimum
    // ratio rows the lowest-index basic variable leaves.
    Outcome run(bool allow_artificial_entry, std::size_t& pivots) {
        for (;;) {
            std::size_t enter = width_;
            const std::size_t limit = allow_artificial_entry ? rhs() : n_;
            for (std::size_t j = 0; j < limit; ++j) {
                if (sgn(t_[m_][j]) > 0) {
                    enter = j;
                    break;
                }
            }
            if (enter == width_) return Outcome::Optimal;
            std::size_t leave = m_;
            BigRat best;
            for (std::size_t i = 0; i < m_; ++i) {
                if (sgn(t_[i][enter]) <= 0) continue;
                BigRat ratio = t_[i][rhs()] / t_[i][enter];
                if (leave == m_ || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
                    leave = i;
                    best = std::move(ratio);
                }
            }
            if (leave == m_) return Outcome::Unbounded;
            pivot(leave, enter);
            ++pivots;
        }
    }

    void pivot(std::size_t r, std::size_t c) {
        Row& pr = t_[r];
        const BigRat inv = 1 / pr[c];
        for (auto& v : pr) {
            if (sgn(v) != 0) v *= inv;
        }
        // Only touch columns where the pivot row is nonzero.
        std::vector<std::size_t> nz;
        for (std::size_t j = 0; j < width_; ++j) {
            if (sgn(pr[j]) != 0) nz.push_back(j);
        }
        BigRat f;
        for (std::size_t i = 0; i <= m_; ++i) {
            if (i == r || sgn(t_[i][c]) == 0) continue;
            f = t_[i][c];
            Row& row = t_[i];
            for (std::size_t j : nz) row[j] -= f * pr[j];
        }
        basis_[r] = c;
    }

    // After phase I: pivot zero-level artificials out of the basis, dropping
    // rows that turn out to be linear combinations of the others.
    void expel_artificials(std::size_t& pivots) {
        for (std::size_t i = 0; i < m_;) {
            if (!is_artificial(basis_[i])) {
                ++i;
                continue;
            }
            std::size_t col = n_;
            for (std::size_t j = 0; j < n_; ++j) {
                if (sgn(t_[i][j]) != 0) {
                    col = j;
                    break;
                }
            }
            if (col < n_) {
                pivot(i, col);
                ++pivots;
                ++i;
            } else {
                t_.erase(t_.begin() + static_cast<std::ptrdiff_t>(i));
                basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
                --m_;
            }
        }
    }

    std::vector<BigRat> primal() const {
        std::vector<BigRat> x(n_);
        for (std::size_t i = 0; i < m_; ++i) {
            if (basis_[i] < n_) x[basis_[i]] = t_[i][rhs()];
        }
        return x;
    }

    std::size_t rows() const { return m_; }

private:
    std::size_t m_, n_, width_;
    std::vector<Row> t_;
    std::vector<std::size_t> basis_;
};

const std::vector<TEntry>& cached_t6() {
    static const std::vector<TEntry> t6 = enumerate_T(6);
    return t6;
}

}  // namespace

const char* to_string(LpStatus s) {
    switch (s) {
        case LpStatus::Optimal: return "optimal";
        case LpStatus::Infeasible: return "infeasible";
        case LpStatus::Unbounded: return "unbounded";
    }
    return "?";
}

LpProblem build_program(std::span<const Poly6> basis, std::vector<std::string> names) {
    const auto& n = named();
    LpProblem prob;
    prob.target = n.d4;
    prob.columns.push_back(n.p4);
    prob.column_names.push_back("p4");
    for (std::size_t j = 0; j < basis.size(); ++j) {
        if (basis[j].is_zero() || !basis[j].is_homogeneous(6)) {
            throw std::invalid_argument("build_program: basis element " + std::to_string(j) +
                                        " is not homogeneous of degree 6");
        }
        prob.columns.push_back(basis[j]);
        prob.column_names.push_back(j < names.size() ? names[j] : "f" + std::to_string(j + 1));
    }

    std::set<Monomial6, std::greater<>> monos;
    for (const auto& t : prob.target.terms()) monos.insert(t.mono);
    for (const auto& c : prob.columns) {
        for (const auto& t : c.terms()) monos.insert(t.mono);
    }
    prob.rows.assign(monos.begin(), monos.end());

    std::map<Monomial6, std::size_t> row_of;
    for (std::size_t i = 0; i < prob.rows.size(); ++i) row_of[prob.rows[i]] = i;
    prob.matrix.assign(prob.rows.size(), std::vector<BigRat>(prob.columns.size()));
    prob.rhs.assign(prob.rows.size(), BigRat(0));
    for (std::size_t j = 0; j < prob.columns.size(); ++j) {
        for (const auto& t : prob.columns[j].terms()) prob.matrix[row_of[t.mono]][j] = t.coeff;
    }
    for (const auto& t : prob.target.terms()) prob.rhs[row_of[t.mono]] = t.coeff;
    return prob;
}

LpSolution solve(const LpProblem& prob) {
    const std::size_t k = prob.columns.size() - 1;
    LpSolution sol;
    sol.multipliers.assign(k, BigRat(0));

    // Structural variables: alpha+ , alpha-, lambda_1..lambda_k.
    const std::size_t num_vars = k + 2;
    std::vector<Row> a;
    std::vector<BigRat> b;
    std::set<std::vector<BigRat>> seen;
    for (std::size_t i = 0; i < prob.rows.size(); ++i) {
        Row row(num_vars + 1);
        row[0] = prob.matrix[i][0];
        row[1] = -prob.matrix[i][0];
        for (std::size_t j = 1; j <= k; ++j) row[j + 1] = prob.matrix[i][j];
        row[num_vars] = prob.rhs[i];
        const bool all_zero = std::all_of(row.begin(), row.end() - 1, [](const BigRat& v) { return sgn(v) == 0; });
        if (all_zero) {
            if (sgn(row.back()) != 0) return sol;  // 0 = nonzero
            continue;
        }
        // Symmetric columns give identical rows across each monomial orbit.
        if (!seen.insert(row).second) continue;
        b.push_back(row.back());
        row.pop_back();
        a.push_back(std::move(row));
    }

    Tableau tab(std::move(a), std::move(b), num_vars);
    tab.set_phase_one_objective();
    tab.run(true, sol.pivots);
    if (sgn(tab.objective()) != 0) {
        sol.status = LpStatus::Infeasible;
        return sol;
    }
    tab.expel_artificials(sol.pivots);
    sol.active_rows = tab.rows();

    std::vector<BigRat> cost(num_vars, BigRat(0));
    cost[0] = 1;
    cost[1] = -1;
    tab.set_objective(cost);
    if (tab.run(false, sol.pivots) == Tableau::Outcome::Unbounded) {
        sol.status = LpStatus::Unbounded;
        return sol;
    }
    auto x = tab.primal();
    sol.status = LpStatus::Optimal;
    sol.alpha = x[0] - x[1];
    for (std::size_t j = 0; j < k; ++j) {
        sol.multipliers[j] = x[j + 2];
        if (sgn(x[j + 2]) > 0) sol.support.push_back(j);
    }
    return sol;
}

Poly6 reconstruction_residual(const LpProblem& prob, const LpSolution& sol) {
    Poly6 r = prob.target - prob.columns[0] * sol.alpha;
    for (std::size_t j : sol.support) r -= prob.columns[j + 1] * sol.multipliers[j];
    return r;
}

BoundCheck upper_bound_check(std::span<const Poly6> basis) {
    const Point6 ustar = to_point6({9, 8, 1, 1, 7, 8});
    BoundCheck out;
    for (std::size_t j = 0; j < basis.size(); ++j) {
        if (sgn(evaluate(basis[j], ustar)) < 0) {
            out.reason = "basis element " + std::to_string(j) + " is negative at (9,8,1,1,7,8)";
            return out;
        }
    }
    const auto& n = named();
    const BigRat p = evaluate(n.p4, ustar);
    out.applicable = true;
    out.bound = evaluate(n.d4, ustar) / p;
    return out;
}

NamedBasis make_basis(const std::string& base, const std::vector<std::string>& extras) {
    NamedBasis nb;
    for (const auto& e : extras) {
        if (e != "z4" && e != "n4" && e != "v4sq") throw std::invalid_argument("unknown extra basis polynomial '" + e + "'");
        nb.polys.push_back(named_polynomial(e));
        nb.names.push_back(e);
    }
    if (base == "t6") {
        for (const auto& entry : cached_t6()) {
            nb.polys.push_back(entry.poly);
            nb.names.push_back("av[t^(" + to_string(entry.alpha) + ")]");
        }
    } else if (base != "none") {
        throw std::invalid_argument("unknown basis '" + base + "'");
    }
    return nb;
}

}  // namespace atiyah4
