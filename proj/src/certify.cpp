#include "atiyah4/certify.hpp"

#include "atiyah4/atiyah.hpp"
#include "atiyah4/symmetry.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <fstream>
#include <sstream>

namespace atiyah4 {

namespace {

std::string trim(std::string_view s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

BigInt parse_int(const std::string& tok, int lineno) {
    bool ok = !tok.empty() && std::all_of(tok.begin() + (tok[0] == '-' ? 1 : 0), tok.end(),
                                          [](unsigned char ch) { return std::isdigit(ch); });
    if (!ok || tok == "-") throw CertificateError("line " + std::to_string(lineno) + ": bad integer '" + tok + "'");
    return BigInt(tok, 10);
}

MultiIndex12 parse_alpha(const std::string& value, int lineno) {
    auto fail = [&](const std::string& why) {
        throw CertificateError("line " + std::to_string(lineno) + ": alpha " + why);
    };
    if (value.size() < 2 || value.front() != '[' || value.back() != ']') fail("must be written as [12 integers]");
    std::string body = value.substr(1, value.size() - 2);
    std::replace(body.begin(), body.end(), ',', ' ');
    std::istringstream in(body);
    std::vector<long> parts;
    std::string tok;
    while (in >> tok) {
        BigInt v = parse_int(tok, lineno);
        if (sgn(v) < 0 || !v.fits_slong_p() || v > 255) fail("entry out of range");
        parts.push_back(v.get_si());
    }
    if (parts.size() != kNumTriangular) fail("has " + std::to_string(parts.size()) + " entries, expected 12");
    MultiIndex12 m;
    for (int k = 0; k < kNumTriangular; ++k) m.alpha[k] = static_cast<int>(parts[k]);
    return m;
}

SlotMapping parse_mapping(const std::string& value, int lineno) {
    std::istringstream in(value);
    SlotMapping m{};
    std::array<bool, 4> used{};
    for (int g = 0; g < 4; ++g) {
        int v = -1;
        if (!(in >> v) || v < 0 || v > 3 || used[v]) {
            throw CertificateError("line " + std::to_string(lineno) + ": slot_mapping must be a permutation of 0 1 2 3");
        }
        used[v] = true;
        m[g] = v;
    }
    std::string extra;
    if (in >> extra) throw CertificateError("line " + std::to_string(lineno) + ": trailing text in slot_mapping");
    return m;
}

std::string format_alpha(const MultiIndex12& m) {
    std::string s = "[";
    for (int k = 0; k < kNumTriangular; ++k) {
        if (k) s += ", ";
        s += std::to_string(m.alpha[k]);
    }
    return s + "]";
}

void validate(const Certificate& cert) {
    const IdentityShape shape = identity_shape(cert.id);
    if (cert.scale != shape.scale) {
        throw CertificateError("certificate " + cert.id + ": scale " + cert.scale.get_str() + ", expected " +
                               shape.scale.get_str());
    }
    auto check_terms = [&](const std::vector<CertTerm>& terms, int order, const char* what) {
        for (const auto& t : terms) {
            if (t.alpha.order() != order) {
                throw CertificateError("certificate " + cert.id + ": " + what + " alpha " + to_string(t.alpha) +
                                       " has order " + std::to_string(t.alpha.order()) + ", expected " +
                                       std::to_string(order));
            }
            if (sgn(t.coeff) <= 0) {
                throw CertificateError("certificate " + cert.id + ": non-positive coefficient for " + to_string(t.alpha));
            }
        }
    };
    check_terms(cert.terms, shape.term_order, "term");
    if (shape.multiplier_order < 0 && !cert.multiplier_terms.empty()) {
        throw CertificateError("certificate " + cert.id + ": multiplier terms are only valid for eq53");
    }
    check_terms(cert.multiplier_terms, shape.multiplier_order, "multiplier term");
}

std::vector<Term> worst_terms(const Poly6& residual) {
    std::vector<Term> all(residual.terms().begin(), residual.terms().end());
    std::stable_sort(all.begin(), all.end(), [](const Term& l, const Term& r) { return abs(l.coeff) > abs(r.coeff); });
    if (all.size() > 10) all.resize(10);
    return all;
}

ResidualReport make_report(std::string id, Poly6 residual, std::chrono::steady_clock::time_point start) {
    ResidualReport r;
    r.id = std::move(id);
    r.pass = residual.is_zero();
    r.worst_monomials = worst_terms(residual);
    r.residual = std::move(residual);
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

void require_id(const Certificate& cert, const char* id) {
    if (cert.id != id) throw CertificateError("expected certificate '" + std::string(id) + "', got '" + cert.id + "'");
    validate(cert);
}

const BigRat kInv24(1, kGroupOrder);

}  // namespace

IdentityShape identity_shape(const std::string& id) {
    if (id == kSec3Id) return {3, 6, -1};
    if (id == kEq42Id) return {64, 12, -1};
    if (id == kEq53Id) return {128, 12, 6};
    throw CertificateError("unknown certificate id '" + id + "'");
}

Certificate parse_certificate(const std::string& text) {
    Certificate cert;
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    enum class Section { Header, Term, Multiplier } section = Section::Header;
    bool have_id = false, have_scale = false;
    struct Pending {
        std::optional<MultiIndex12> alpha;
        std::optional<BigInt> coeff;
        int line = 0;
    } pending;

    auto flush = [&]() {
        if (section == Section::Header) return;
        if (!pending.alpha || !pending.coeff) {
            throw CertificateError("line " + std::to_string(pending.line) + ": term record needs both alpha and coeff");
        }
        auto& dest = section == Section::Term ? cert.terms : cert.multiplier_terms;
        dest.push_back({*pending.alpha, *pending.coeff});
        pending = {};
    };

    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = trim(raw);
        if (line.empty() || line[0] == '#') continue;
        if (line == "[term]" || line == "[multiplier_term]") {
            flush();
            section = line == "[term]" ? Section::Term : Section::Multiplier;
            pending.line = lineno;
            continue;
        }
        if (line.front() == '[') throw CertificateError("line " + std::to_string(lineno) + ": unknown section " + line);
        auto eq = line.find('=');
        if (eq == std::string::npos) throw CertificateError("line " + std::to_string(lineno) + ": expected key = value");
        std::string key = trim(std::string_view(line).substr(0, eq));
        std::string value = trim(std::string_view(line).substr(eq + 1));

        if (section == Section::Header) {
            if (key == "id") {
                cert.id = value;
                have_id = true;
            } else if (key == "scale") {
                cert.scale = parse_int(value, lineno);
                have_scale = true;
            } else if (key == "slot_mapping") {
                cert.slot_mapping = parse_mapping(value, lineno);
            } else if (key == "source") {
                cert.source = value;
            } else if (key == "note" || key == "correction") {
                cert.header.emplace_back(key, value);
            } else {
                throw CertificateError("line " + std::to_string(lineno) + ": unknown header field '" + key + "'");
            }
        } else if (key == "alpha") {
            if (pending.alpha) throw CertificateError("line " + std::to_string(lineno) + ": duplicate alpha");
            pending.alpha = parse_alpha(value, lineno);
        } else if (key == "coeff") {
            if (pending.coeff) throw CertificateError("line " + std::to_string(lineno) + ": duplicate coeff");
            pending.coeff = parse_int(value, lineno);
            if (sgn(*pending.coeff) <= 0) {
                throw CertificateError("line " + std::to_string(lineno) + ": coefficient must be positive");
            }
        } else {
            throw CertificateError("line " + std::to_string(lineno) + ": unknown term field '" + key + "'");
        }
    }
    flush();
    if (!have_id) throw CertificateError("missing 'id' header");
    if (!have_scale) throw CertificateError("missing 'scale' header");
    validate(cert);
    return cert;
}

Certificate load_certificate(const std::filesystem::path& path) {
    std::ifstream f(path);
    if (!f) throw CertificateError("cannot open certificate " + path.string());
    std::stringstream ss;
    ss << f.rdbuf();
    try {
        return parse_certificate(ss.str());
    } catch (const CertificateError& e) {
        throw CertificateError(path.string() + ": " + e.what());
    }
}

std::string format_certificate(const Certificate& cert) {
    std::ostringstream out;
    out << "id = " << cert.id << '\n';
    out << "scale = " << cert.scale.get_str() << '\n';
    out << "slot_mapping = " << cert.slot_mapping[0] << ' ' << cert.slot_mapping[1] << ' ' << cert.slot_mapping[2]
        << ' ' << cert.slot_mapping[3] << '\n';
    if (!cert.source.empty()) out << "source = " << cert.source << '\n';
    for (const auto& [k, v] : cert.header) out << k << " = " << v << '\n';
    auto emit = [&](const std::vector<CertTerm>& terms, const char* tag) {
        for (const auto& t : terms) {
            out << '\n' << tag << '\n';
            out << "alpha = " << format_alpha(t.alpha) << '\n';
            out << "coeff = " << t.coeff.get_str() << '\n';
        }
    };
    emit(cert.multiplier_terms, "[multiplier_term]");
    emit(cert.terms, "[term]");
    return out.str();
}

void save_certificate(const Certificate& cert, const std::filesystem::path& path) {
    std::ofstream f(path);
    if (!f) throw CertificateError("cannot write certificate " + path.string());
    f << format_certificate(cert);
}

MultiIndex12 to_triangular(const MultiIndex12& printed, const SlotMapping& mapping) {
    MultiIndex12 out;
    for (int g = 0; g < 4; ++g) {
        for (int k = 0; k < 3; ++k) out.alpha[3 * mapping[g] + k] = printed.alpha[3 * g + k];
    }
    return out;
}

Poly6 certificate_sum24(const std::vector<CertTerm>& terms, const SlotMapping& mapping) {
    std::vector<Poly6> parts;
    parts.reserve(terms.size());
    for (const auto& t : terms) parts.push_back(t_alpha_expand(to_triangular(t.alpha, mapping)) * BigRat(t.coeff));
    return sym_sum(sum(parts));
}

ResidualReport check_sec3(const Certificate& cert) {
    auto start = std::chrono::steady_clock::now();
    require_id(cert, kSec3Id);
    const auto& n = named();
    Poly6 lhs = 3L * n.d4 - (188L * n.p4 + 10L * n.z4 + 4L * n.n4 + 2L * n.v4sq);
    Poly6 residual = (24L * lhs - certificate_sum24(cert.terms, cert.slot_mapping)) * kInv24;
    return make_report(cert.id, std::move(residual), start);
}

ResidualReport check_eq42(const Certificate& cert) {
    auto start = std::chrono::steady_clock::now();
    require_id(cert, kEq42Id);
    const auto& n = named();
    Poly6 lhs = 64L * (n.p4 * n.m4);
    Poly6 residual = (24L * lhs - certificate_sum24(cert.terms, cert.slot_mapping)) * kInv24;
    return make_report(cert.id, std::move(residual), start);
}

ResidualReport check_eq53(const Certificate& cert) {
    auto start = std::chrono::steady_clock::now();
    require_id(cert, kEq53Id);
    const auto& n = named();
    const Poly6 g = 4L * n.z4 + n.v4sq;
    Poly6 residual = 24L * 128L * n.M4;
    residual -= g * certificate_sum24(cert.multiplier_terms, cert.slot_mapping);
    residual -= certificate_sum24(cert.terms, cert.slot_mapping);
    residual *= kInv24;
    return make_report(cert.id, std::move(residual), start);
}

ResidualReport check_eq52() {
    auto start = std::chrono::steady_clock::now();
    const auto& n = named();
    const Poly6 g = 4L * n.z4 + n.v4sq;
    Poly6 residual = n.d4 * n.d4 - n.P4 - g * (n.d4 + 32L * n.p4 + n.m4) - n.M4;
    return make_report("eq52", std::move(residual), start);
}

ResidualReport check_certificate(const Certificate& cert) {
    if (cert.id == kSec3Id) return check_sec3(cert);
    if (cert.id == kEq42Id) return check_eq42(cert);
    if (cert.id == kEq53Id) return check_eq53(cert);
    throw CertificateError("unknown certificate id '" + cert.id + "'");
}

std::optional<SlotMapping> find_slot_mapping(const Certificate& cert) {
    SlotMapping m = kIdentityMapping;
    do {
        Certificate trial = cert;
        trial.slot_mapping = m;
        if (check_sec3(trial).pass) return m;
    } while (std::next_permutation(m.begin(), m.end()));
    return std::nullopt;
}

bool SpecialVectorReport::ok() const {
    return d4_eq_64p4 == 21 && z4_zero == 21 && v4_zero == 21 && first15_d4_p4_zero == 15 && last6_p4_nonzero == 6 &&
           n4_nonzero >= 1 && d4_at_ustar == 258048;
}

SpecialVectorReport check_special_vectors() {
    const auto& n = named();
    SpecialVectorReport r;
    const auto& vecs = special_vectors();
    for (std::size_t i = 0; i < vecs.size(); ++i) {
        const Point6 u = to_point6(vecs[i]);
        const BigRat d4 = evaluate(n.d4, u), p4 = evaluate(n.p4, u);
        if (d4 == 64 * p4) ++r.d4_eq_64p4;
        if (sgn(evaluate(n.z4, u)) == 0) ++r.z4_zero;
        if (sgn(evaluate(n.v4, u)) == 0) ++r.v4_zero;
        if (sgn(evaluate(n.n4, u)) != 0) ++r.n4_nonzero;
        if (i < 15 && sgn(d4) == 0 && sgn(p4) == 0) ++r.first15_d4_p4_zero;
        if (i >= 15 && sgn(p4) != 0) ++r.last6_p4_nonzero;
    }
    r.d4_at_ustar = evaluate(n.d4, to_point6({9, 8, 1, 1, 7, 8}));
    return r;
}

}  // namespace atiyah4
