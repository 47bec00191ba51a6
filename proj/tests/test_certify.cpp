#include <doctest.h>

#include "atiyah4/atiyah.hpp"
#include "atiyah4/catalog.hpp"
#include "atiyah4/certify.hpp"
#include "atiyah4/symmetry.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace atiyah4;

namespace {

const std::filesystem::path kCerts = ATIYAH4_CERT_DIR;

MultiIndex12 mi(std::array<int, 12> a) { return MultiIndex12{a}; }

CertTerm* find_term(Certificate& c, const MultiIndex12& alpha) {
    for (auto& t : c.terms)
        if (t.alpha == alpha) return &t;
    return nullptr;
}

const char* kMinimal =
    "id = sec3-188/3\n"
    "scale = 3\n"
    "slot_mapping = 0 1 2 3\n"
    "source = test\n"
    "[term]\n"
    "alpha = [6, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0]\n"
    "coeff = 5\n";

std::string replace(std::string s, const std::string& from, const std::string& to) {
    const auto pos = s.find(from);
    REQUIRE(pos != std::string::npos);
    s.replace(pos, from.size(), to);
    return s;
}

}  // namespace

TEST_CASE("certificate files load with the expected shape") {
    const Certificate s = load_certificate(kCerts / "sec3.cert");
    CHECK(s.id == kSec3Id);
    CHECK(s.scale == 3);
    CHECK(s.terms.size() == 6);
    CHECK(s.multiplier_terms.empty());
    CHECK(s.slot_mapping == kIdentityMapping);

    const Certificate e42 = load_certificate(kCerts / "eq42.cert");
    CHECK(e42.scale == 64);
    CHECK(e42.terms.size() == 64);
    for (const auto& t : e42.terms) CHECK(t.alpha.order() == 12);

    const Certificate e53 = load_certificate(kCerts / "eq53.cert");
    CHECK(e53.scale == 128);
    CHECK(e53.multiplier_terms.size() == 6);
    CHECK(e53.terms.size() == 114);
    for (const auto& t : e53.multiplier_terms) CHECK(t.alpha.order() == 6);
    int corrections = 0;
    for (const auto& [k, v] : e53.header) corrections += k == "correction";
    CHECK(corrections == 2);
}

TEST_CASE("format and parse round trip") {
    for (const char* name : {"sec3.cert", "eq42.cert", "eq53.cert"}) {
        const Certificate c = load_certificate(kCerts / name);
        CHECK(parse_certificate(format_certificate(c)) == c);
        const auto tmp = std::filesystem::temp_directory_path() / ("atiyah4_rt_" + std::string(name));
        save_certificate(c, tmp);
        CHECK(load_certificate(tmp) == c);
        std::filesystem::remove(tmp);
    }
}

TEST_CASE("malformed certificates are rejected") {
    CHECK_NOTHROW(parse_certificate(kMinimal));
    CHECK_THROWS_AS(parse_certificate(replace(kMinimal, "coeff = 5", "coeff = 0")), CertificateError);
    CHECK_THROWS_AS(parse_certificate(replace(kMinimal, "coeff = 5", "coeff = -5")), CertificateError);
    CHECK_THROWS_AS(parse_certificate(replace(kMinimal, "0, 0]", "0, 0, 0]")), CertificateError);
    CHECK_THROWS_AS(parse_certificate(replace(kMinimal, "[6,", "[5,")), CertificateError);
    CHECK_THROWS_AS(parse_certificate(replace(kMinimal, "scale = 3", "scale = 4")), CertificateError);
    CHECK_THROWS_AS(parse_certificate(replace(kMinimal, "id = sec3-188/3", "id = eq99")), CertificateError);
    CHECK_THROWS_AS(parse_certificate(replace(kMinimal, "source = test", "colour = blue")), CertificateError);
    CHECK_THROWS_AS(parse_certificate(replace(kMinimal, "[term]", "[multiplier_term]")), CertificateError);
    CHECK_THROWS_AS(parse_certificate(replace(kMinimal, "[term]", "[bogus]")), CertificateError);
    CHECK_THROWS_AS(parse_certificate(replace(kMinimal, "0 1 2 3", "0 1 1 3")), CertificateError);
    CHECK_THROWS_AS(load_certificate(kCerts / "no_such_file.cert"), CertificateError);
    try {
        parse_certificate(replace(kMinimal, "coeff = 5", "coeff = 0"));
    } catch (const CertificateError& e) {
        CHECK(std::string(e.what()).find("line 7") != std::string::npos);
    }
}

TEST_CASE("slot mapping permutes the digit groups") {
    const MultiIndex12 m = mi({1, 2, 3, 0, 0, 0, 0, 0, 0, 0, 0, 0});
    CHECK(to_triangular(m, kIdentityMapping) == m);
    CHECK(to_triangular(m, {2, 0, 1, 3}) == mi({0, 0, 0, 0, 0, 0, 1, 2, 3, 0, 0, 0}));
}

TEST_CASE("the degree-6 identity holds exactly and fixes the slot mapping") {
    Certificate c = load_certificate(kCerts / "sec3.cert");
    const ResidualReport r = check_sec3(c);
    CHECK(r.pass);
    CHECK(r.residual.is_zero());
    const auto found = find_slot_mapping(c);
    REQUIRE(found.has_value());
    CHECK(*found == kIdentityMapping);

    c.slot_mapping = {1, 0, 2, 3};
    const ResidualReport wrong = check_sec3(c);
    CHECK_FALSE(wrong.pass);
    CHECK_FALSE(wrong.worst_monomials.empty());
}

TEST_CASE("degree-12 identities hold exactly") {
    CHECK(check_certificate(load_certificate(kCerts / "eq42.cert")).pass);
    CHECK(check_certificate(load_certificate(kCerts / "eq53.cert")).pass);
    CHECK(check_eq52().pass);
    CHECK(check_eq52().residual.is_zero());
}

TEST_CASE("a one-unit perturbation leaves exactly that term as residual") {
    Certificate c = load_certificate(kCerts / "eq42.cert");
    const MultiIndex12 alpha = c.terms[17].alpha;
    c.terms[17].coeff += 1;
    const ResidualReport r = check_eq42(c);
    CHECK_FALSE(r.pass);
    CHECK(r.residual == -av_t_alpha(to_triangular(alpha, c.slot_mapping)));
    CHECK(r.worst_monomials.size() <= 10);
    for (std::size_t i = 1; i < r.worst_monomials.size(); ++i)
        CHECK(abs(r.worst_monomials[i - 1].coeff) >= abs(r.worst_monomials[i].coeff));
}

TEST_CASE("the printed values of two entries leave a localized residual") {
    Certificate c = load_certificate(kCerts / "eq53.cert");
    const MultiIndex12 p1 = mi({0, 0, 1, 1, 2, 0, 2, 0, 2, 1, 2, 1});
    const MultiIndex12 p2 = mi({0, 0, 1, 1, 2, 1, 2, 0, 1, 2, 2, 0});
    CertTerm* t1 = find_term(c, p1);
    CertTerm* t2 = find_term(c, p2);
    REQUIRE(t1);
    REQUIRE(t2);
    CHECK(t1->coeff == 768);
    CHECK(t2->coeff == 60);
    t1->coeff = 76;
    t2->coeff = 6;
    const ResidualReport r = check_eq53(c);
    CHECK_FALSE(r.pass);
    const Poly6 expected = 692L * av_t_alpha(p1) + 54L * av_t_alpha(p2);
    CHECK(r.residual == expected);
    CHECK(to_string(p1) == "001,120,202,121");
    CHECK(to_string(p2) == "001,121,201,220");
}

TEST_CASE("wrong identity id is rejected by the dispatcher") {
    Certificate c = load_certificate(kCerts / "sec3.cert");
    c.id = "eq42";
    CHECK_THROWS_AS(check_certificate(c), CertificateError);
}

TEST_CASE("consequence of the degree-6 identity holds at random geometric points") {
    // 3 d4 - (188 p4 + 10 z4 + 4 n4 + 2 v4^2) is a positive combination of
    // triangular products, so it is nonnegative on geometric vectors.
    const auto& n = named();
    const Poly6 rest = 3L * n.d4 - (188L * n.p4 + 10L * n.z4 + 4L * n.n4 + 2L * n.v4sq);
    for (std::uint64_t k = 0; k < 500; ++k) {
        const auto pts = sample_config(4, 77 + k, SampleMode::Generic);
        const DistanceVector u = distance_vector(pts);
        const Point6f uf{u[0], u[1], u[2], u[3], u[4], u[5]};
        const double scale = evaluate_float(n.d4, uf);
        CHECK(evaluate_float(rest, uf) >= -1e-12 * scale);
    }
}

TEST_CASE("special vectors") {
    const SpecialVectorReport v = check_special_vectors();
    CHECK(v.d4_eq_64p4 == 21);
    CHECK(v.z4_zero == 21);
    CHECK(v.v4_zero == 21);
    CHECK(v.first15_d4_p4_zero == 15);
    CHECK(v.last6_p4_nonzero == 6);
    CHECK(v.n4_nonzero >= 1);
    CHECK(v.d4_at_ustar == 258048);
    CHECK(v.ok());
    // independent recount
    int hits = 0;
    for (const auto& s : special_vectors()) {
        const Point6 u = to_point6(s);
        hits += evaluate(named().d4, u) == 64 * evaluate(named().p4, u);
    }
    CHECK(hits == 21);
}
