#pragma once

// The 24 permutations of (a,b,c,x,y,z) induced by relabeling the four points.

#include "atiyah4/polyring.hpp"

#include <array>
#include <string_view>

namespace atiyah4 {

inline constexpr int kGroupOrder = 24;

/// One row of the permutation table: slot s of u_i holds variable `slots[s]`.
struct PermRow {
    std::array<int, kNumVars> slots;
    int sign;  // (-1)^i
};

/// Row i as printed, e.g. "a,x,z,b,y,c" for i = 1.
std::string_view perm_row_text(int i);
const std::array<PermRow, kGroupOrder>& perm_table();

/// Index of the row equal to `slots`, or -1.
int find_perm_row(const std::array<int, kNumVars>& slots);

/// Slot map of "apply row i, then row j", i.e. u -> (u_i)_j.
std::array<int, kNumVars> compose_rows(int i, int j);

/// Outcome of the table's group self-test.
struct GroupCheck {
    bool identity_first = false;
    bool closed = false;
    bool sign_homomorphism = false;
    int even_rows = 0;
    bool ok() const { return identity_first && closed && sign_homomorphism && even_rows == kGroupOrder / 2; }
};
GroupCheck check_perm_group();

Monomial6 apply_perm(const Monomial6& m, int i);
/// The polynomial u -> p(u_i). Throws std::out_of_range for i outside 0..23.
Poly6 apply_perm(const Poly6& p, int i);

/// (1/24) sum_i p(u_i).
Poly6 sym_average(const Poly6& p);
/// sum_i p(u_i) without the 1/24; integral whenever p is.
Poly6 sym_sum(const Poly6& p);

bool is_symmetric(const Poly6& p);
bool is_skew_symmetric(const Poly6& p);

/// Graded-lex largest monomial in the orbit of m.
Monomial6 orbit_canonical(const Monomial6& m);

}  // namespace atiyah4
