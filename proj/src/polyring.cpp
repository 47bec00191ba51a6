#include "atiyah4/polyring.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace atiyah4 {

namespace {

constexpr int kMaxExponent = 0xFF;

bool key_desc(const Term& l, const Term& r) { return l.mono.key() > r.mono.key(); }

// Sorts descending and merges equal monomials, dropping zeros.
std::vector<Term> canonicalize(std::vector<Term> terms) {
    for (auto& t : terms) t.coeff.canonicalize();
    std::stable_sort(terms.begin(), terms.end(), key_desc);
    std::vector<Term> out;
    out.reserve(terms.size());
    for (auto& t : terms) {
        if (!out.empty() && out.back().mono == t.mono) {
            out.back().coeff += t.coeff;
        } else {
            if (!out.empty() && sgn(out.back().coeff) == 0) out.pop_back();
            out.push_back(std::move(t));
        }
    }
    if (!out.empty() && sgn(out.back().coeff) == 0) out.pop_back();
    return out;
}

std::vector<Term> merge(std::span<const Term> p, std::span<const Term> q, bool negate_q) {
    std::vector<Term> out;
    out.reserve(p.size() + q.size());
    std::size_t i = 0, j = 0;
    while (i < p.size() || j < q.size()) {
        if (j == q.size() || (i < p.size() && p[i].mono.key() > q[j].mono.key())) {
            out.push_back(p[i++]);
        } else if (i == p.size() || q[j].mono.key() > p[i].mono.key()) {
            out.push_back(q[j++]);
            if (negate_q) out.back().coeff = -out.back().coeff;
        } else {
            BigRat c = negate_q ? BigRat(p[i].coeff - q[j].coeff) : BigRat(p[i].coeff + q[j].coeff);
            if (sgn(c) != 0) out.push_back({p[i].mono, std::move(c)});
            ++i;
            ++j;
        }
    }
    return out;
}

}  // namespace

Monomial6::Monomial6(const Exponents& e) {
    int deg = 0;
    for (int s = 0; s < kNumVars; ++s) {
        if (e[s] < 0 || e[s] > kMaxExponent) throw std::out_of_range("Monomial6: exponent out of range");
        deg += e[s];
        key_ |= static_cast<std::uint64_t>(e[s]) << (8 * (kNumVars - 1 - s));
    }
    if (deg > kMaxExponent) throw std::out_of_range("Monomial6: total degree out of range");
    key_ |= static_cast<std::uint64_t>(deg) << 48;
}

Monomial6::Exponents Monomial6::exponents() const {
    Exponents e{};
    for (int s = 0; s < kNumVars; ++s) e[s] = exponent(s);
    return e;
}

Monomial6 Monomial6::operator*(const Monomial6& other) const {
    if (degree() + other.degree() > kMaxExponent) throw std::out_of_range("Monomial6: total degree out of range");
    // No byte can carry: each exponent is bounded by the total degree.
    return from_key(key_ + other.key_);
}

std::string Monomial6::to_string() const {
    std::string s;
    for (int v = 0; v < kNumVars; ++v) {
        if (v) s += ' ';
        s += kVarNames[v];
        s += '^';
        s += std::to_string(exponent(v));
    }
    return s;
}

Poly6 Poly6::constant(const BigRat& c) { return monomial(Monomial6{}, c); }

Poly6 Poly6::variable(Var v) {
    Monomial6::Exponents e{};
    e[static_cast<int>(v)] = 1;
    return monomial(Monomial6(e));
}

Poly6 Poly6::monomial(const Monomial6& m, const BigRat& c) {
    if (sgn(c) == 0) return {};
    Term t{m, c};
    t.coeff.canonicalize();
    return Poly6(std::vector<Term>{std::move(t)});
}

Poly6 Poly6::from_terms(std::vector<Term> terms) { return Poly6(canonicalize(std::move(terms))); }

std::optional<int> Poly6::degree() const {
    if (terms_.empty()) return std::nullopt;
    // Graded order puts the highest degree first.
    return terms_.front().mono.degree();
}

bool Poly6::is_homogeneous(int d) const {
    return std::all_of(terms_.begin(), terms_.end(), [d](const Term& t) { return t.mono.degree() == d; });
}

bool Poly6::is_integral() const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [](const Term& t) { return t.coeff.get_den() == 1; });
}

BigRat Poly6::coefficient(const Monomial6& m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term& t, const Monomial6& k) { return t.mono.key() > k.key(); });
    if (it != terms_.end() && it->mono == m) return it->coeff;
    return 0;
}

Poly6 Poly6::operator-() const {
    Poly6 r = *this;
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
}

Poly6& Poly6::operator+=(const Poly6& q) {
    terms_ = merge(terms_, q.terms_, false);
    return *this;
}

Poly6& Poly6::operator-=(const Poly6& q) {
    terms_ = merge(terms_, q.terms_, true);
    return *this;
}

Poly6& Poly6::operator*=(const BigRat& c) {
    if (sgn(c) == 0) {
        terms_.clear();
    } else {
        BigRat k = c;
        k.canonicalize();
        for (auto& t : terms_) t.coeff *= k;
    }
    return *this;
}

Poly6 operator*(const Poly6& p, const Poly6& q) {
    if (p.is_zero() || q.is_zero()) return {};
    std::unordered_map<std::uint64_t, std::size_t> slot;
    slot.reserve(p.size() * q.size());
    std::vector<Monomial6> monos;
    std::vector<Term> out;

    if (p.is_integral() && q.is_integral()) {
        // Integer fast path: accumulate numerators only.
        std::vector<BigInt> acc;
        for (const auto& s : p.terms_) {
            for (const auto& t : q.terms_) {
                Monomial6 m = s.mono * t.mono;
                auto [it, fresh] = slot.try_emplace(m.key(), acc.size());
                if (fresh) {
                    monos.push_back(m);
                    acc.emplace_back(0);
                }
                mpz_addmul(acc[it->second].get_mpz_t(), s.coeff.get_num_mpz_t(), t.coeff.get_num_mpz_t());
            }
        }
        out.reserve(acc.size());
        for (std::size_t k = 0; k < acc.size(); ++k) {
            if (sgn(acc[k]) != 0) out.push_back({monos[k], BigRat(acc[k])});
        }
    } else {
        std::vector<BigRat> acc;
        for (const auto& s : p.terms_) {
            for (const auto& t : q.terms_) {
                Monomial6 m = s.mono * t.mono;
                auto [it, fresh] = slot.try_emplace(m.key(), acc.size());
                if (fresh) {
                    monos.push_back(m);
                    acc.emplace_back(0);
                }
                acc[it->second] += s.coeff * t.coeff;
            }
        }
        out.reserve(acc.size());
        for (std::size_t k = 0; k < acc.size(); ++k) {
            if (sgn(acc[k]) != 0) out.push_back({monos[k], std::move(acc[k])});
        }
    }
    std::sort(out.begin(), out.end(), key_desc);
    return Poly6(std::move(out));
}

std::size_t Poly6::hash() const {
    std::size_t h = terms_.size();
    for (const auto& t : terms_) {
        std::size_t k = std::hash<std::uint64_t>{}(t.mono.key());
        k ^= mpz_get_ui(t.coeff.get_num_mpz_t()) * 0x9E3779B97F4A7C15ULL;
        k ^= static_cast<std::size_t>(sgn(t.coeff) + 1) << 7;
        k ^= mpz_get_ui(t.coeff.get_den_mpz_t()) << 17;
        h = h * 1099511628211ULL ^ k;
    }
    return h;
}

Poly6 add(const Poly6& p, const Poly6& q) { return p + q; }

Poly6 mul(const Poly6& p, const Poly6& q) { return p * q; }

Poly6 pow(const Poly6& p, unsigned k) {
    Poly6 result = Poly6::constant(1);
    Poly6 base = p;
    while (k) {
        if (k & 1U) result = result * base;
        k >>= 1U;
        if (k) base = base * base;
    }
    return result;
}

Poly6 sum(std::span<const Poly6> polys) {
    std::vector<Term> all;
    std::size_t n = 0;
    for (const auto& p : polys) n += p.size();
    all.reserve(n);
    for (const auto& p : polys) all.insert(all.end(), p.terms().begin(), p.terms().end());
    return Poly6::from_terms(std::move(all));
}

BigRat evaluate(const Poly6& p, const Point6& u) {
    if (p.is_zero()) return 0;
    std::array<std::vector<BigRat>, kNumVars> powers;
    int top = p.leading().mono.degree();
    for (int v = 0; v < kNumVars; ++v) {
        powers[v].reserve(top + 1);
        powers[v].emplace_back(1);
        for (int e = 1; e <= top; ++e) powers[v].emplace_back(powers[v].back() * u[v]);
    }
    BigRat total = 0;
    BigRat term;
    for (const auto& t : p.terms()) {
        term = t.coeff;
        for (int v = 0; v < kNumVars; ++v) {
            int e = t.mono.exponent(v);
            if (e) term *= powers[v][e];
        }
        total += term;
    }
    return total;
}

double evaluate_float(const Poly6& p, const Point6f& u) {
    for (double d : u) {
        if (!std::isfinite(d)) throw std::invalid_argument("evaluate_float: non-finite input");
    }
    double total = 0.0;
    for (const auto& t : p.terms()) {
        double term = t.coeff.get_d();
        for (int v = 0; v < kNumVars; ++v) {
            for (int e = t.mono.exponent(v); e > 0; --e) term *= u[v];
        }
        total += term;
    }
    return total;
}

Point6 to_point6(const std::array<long, kNumVars>& u) {
    Point6 r;
    for (int v = 0; v < kNumVars; ++v) r[v] = u[v];
    return r;
}

std::string to_text(const Poly6& p) {
    if (p.is_zero()) return "0\n";
    std::string out;
    for (const auto& t : p.terms()) {
        out += t.coeff.get_str();
        out += " * ";
        out += t.mono.to_string();
        out += '\n';
    }
    return out;
}

Poly6 parse_poly(std::string_view text) {
    std::vector<Term> terms;
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    bool saw_zero = false;
    auto fail = [&](const std::string& why) {
        throw std::invalid_argument("parse_poly: line " + std::to_string(lineno) + ": " + why);
    };
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::istringstream ls(line);
        std::string coeff_tok, star;
        ls >> coeff_tok;
        if (coeff_tok == "0" && !(ls >> star)) {
            saw_zero = true;
            continue;
        }
        if (!(ls >> star) || star != "*") fail("expected '*' after coefficient");
        BigRat c;
        if (c.set_str(coeff_tok, 10) != 0) fail("bad coefficient '" + coeff_tok + "'");
        if (c.get_den() == 0) fail("zero denominator");
        c.canonicalize();
        Monomial6::Exponents e{};
        for (int v = 0; v < kNumVars; ++v) {
            std::string f;
            if (!(ls >> f)) fail("missing factor for variable " + std::string(1, kVarNames[v]));
            if (f.size() < 3 || f[0] != kVarNames[v] || f[1] != '^') fail("malformed factor '" + f + "'");
            try {
                std::size_t used = 0;
                e[v] = std::stoi(f.substr(2), &used);
                if (used != f.size() - 2) fail("malformed exponent '" + f + "'");
            } catch (const std::logic_error&) {
                fail("malformed exponent '" + f + "'");
            }
        }
        std::string extra;
        if (ls >> extra) fail("trailing text '" + extra + "'");
        try {
            terms.push_back({Monomial6(e), std::move(c)});
        } catch (const std::out_of_range& ex) {
            fail(ex.what());
        }
    }
    if (saw_zero && !terms.empty()) throw std::invalid_argument("parse_poly: '0' mixed with terms");
    return Poly6::from_terms(std::move(terms));
}

}  // namespace atiyah4
