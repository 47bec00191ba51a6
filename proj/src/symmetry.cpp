#include "atiyah4/symmetry.hpp"

#include <stdexcept>
#include <string>

namespace atiyah4 {

namespace {

// u_0 .. u_23, in the normative listing order. The sign of row i is (-1)^i.
constexpr std::array<std::string_view, kGroupOrder> kRows = {
    "a,b,c,x,y,z", "a,x,z,b,y,c", "b,c,a,y,z,x", "x,b,y,a,c,z",
    "c,a,b,z,x,y", "z,y,c,x,b,a", "y,z,c,x,a,b", "c,b,a,y,x,z",
    "x,y,b,z,c,a", "a,c,b,z,y,x", "z,x,a,y,b,c", "b,a,c,x,z,y",
    "z,c,y,a,b,x", "x,z,a,y,c,b", "x,a,z,b,c,y", "y,x,b,z,a,c",
    "y,b,x,c,a,z", "y,c,z,b,a,x", "c,y,z,b,x,a", "z,a,x,c,b,y",
    "b,x,y,a,z,c", "c,z,y,a,x,b", "a,z,x,c,y,b", "b,y,x,c,z,a",
};

int var_index(char ch) {
    for (int v = 0; v < kNumVars; ++v) {
        if (kVarNames[v] == ch) return v;
    }
    throw std::logic_error(std::string("unknown variable ") + ch);
}

std::array<PermRow, kGroupOrder> build_table() {
    std::array<PermRow, kGroupOrder> t{};
    for (int i = 0; i < kGroupOrder; ++i) {
        std::string_view r = kRows[i];
        for (int s = 0; s < kNumVars; ++s) t[i].slots[s] = var_index(r[2 * s]);
        t[i].sign = (i % 2 == 0) ? 1 : -1;
    }
    return t;
}

void check_index(int i) {
    if (i < 0 || i >= kGroupOrder) throw std::out_of_range("permutation index " + std::to_string(i) + " outside 0..23");
}

}  // namespace

std::string_view perm_row_text(int i) {
    check_index(i);
    return kRows[i];
}

const std::array<PermRow, kGroupOrder>& perm_table() {
    static const auto table = build_table();
    return table;
}

int find_perm_row(const std::array<int, kNumVars>& slots) {
    const auto& t = perm_table();
    for (int i = 0; i < kGroupOrder; ++i) {
        if (t[i].slots == slots) return i;
    }
    return -1;
}

std::array<int, kNumVars> compose_rows(int i, int j) {
    check_index(i);
    check_index(j);
    const auto& t = perm_table();
    std::array<int, kNumVars> out{};
    for (int s = 0; s < kNumVars; ++s) out[s] = t[j].slots[t[i].slots[s]];
    return out;
}

GroupCheck check_perm_group() {
    const auto& t = perm_table();
    GroupCheck g;
    g.identity_first = t[0].slots == std::array<int, kNumVars>{0, 1, 2, 3, 4, 5} && t[0].sign == 1;
    g.closed = true;
    g.sign_homomorphism = true;
    for (int i = 0; i < kGroupOrder; ++i) {
        if (t[i].sign == 1) ++g.even_rows;
        for (int j = 0; j < kGroupOrder; ++j) {
            int k = find_perm_row(compose_rows(i, j));
            if (k < 0) {
                g.closed = false;
                g.sign_homomorphism = false;
                continue;
            }
            if (t[k].sign != t[i].sign * t[j].sign) g.sign_homomorphism = false;
        }
    }
    return g;
}

Monomial6 apply_perm(const Monomial6& m, int i) {
    check_index(i);
    const auto& row = perm_table()[i];
    Monomial6::Exponents e{};
    for (int s = 0; s < kNumVars; ++s) e[row.slots[s]] += m.exponent(s);
    return Monomial6(e);
}

Poly6 apply_perm(const Poly6& p, int i) {
    check_index(i);
    std::vector<Term> out;
    out.reserve(p.size());
    for (const auto& t : p.terms()) out.push_back({apply_perm(t.mono, i), t.coeff});
    return Poly6::from_terms(std::move(out));
}

Poly6 sym_sum(const Poly6& p) {
    std::vector<Term> all;
    all.reserve(p.size() * kGroupOrder);
    for (int i = 0; i < kGroupOrder; ++i) {
        for (const auto& t : p.terms()) all.push_back({apply_perm(t.mono, i), t.coeff});
    }
    return Poly6::from_terms(std::move(all));
}

Poly6 sym_average(const Poly6& p) { return sym_sum(p) * BigRat(1, kGroupOrder); }

bool is_symmetric(const Poly6& p) {
    for (int i = 1; i < kGroupOrder; ++i) {
        if (apply_perm(p, i) != p) return false;
    }
    return true;
}

bool is_skew_symmetric(const Poly6& p) {
    const Poly6 neg = -p;
    for (int i = 1; i < kGroupOrder; ++i) {
        if (apply_perm(p, i) != (i % 2 == 0 ? p : neg)) return false;
    }
    return true;
}

Monomial6 orbit_canonical(const Monomial6& m) {
    Monomial6 best = m;
    for (int i = 1; i < kGroupOrder; ++i) {
        Monomial6 img = apply_perm(m, i);
        if (img > best) best = img;
    }
    return best;
}

}  // namespace atiyah4
