#include "atiyah4/cli.hpp"

#include "atiyah4/atiyah.hpp"
#include "atiyah4/catalog.hpp"
#include "atiyah4/certify.hpp"
#include "atiyah4/lp.hpp"
#include "atiyah4/symmetry.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace atiyah4 {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

std::string sci(double v) {
    std::ostringstream s;
    s << std::setprecision(3) << std::scientific << v;
    return s.str();
}

std::string describe(const ResidualReport& r) {
    if (r.pass) return "residual = 0";
    std::string s = "residual has " + std::to_string(r.residual.size()) + " terms; largest:";
    for (const auto& t : r.worst_monomials) s += " [" + t.coeff.get_str() + " * " + t.mono.to_string() + "]";
    return s;
}

std::string mapping_text(const SlotMapping& m) {
    return std::to_string(m[0]) + " " + std::to_string(m[1]) + " " + std::to_string(m[2]) + " " + std::to_string(m[3]);
}

struct VerifyContext {
    const GlobalOptions& g;
    std::size_t factorization_count;
    RunReport& report;
    bool missing_file = false;
};

// Returns false when the certificate could not be loaded.
bool load_into(VerifyContext& ctx, const std::string& file, Certificate& out, const std::string& name) {
    const auto path = ctx.g.certs / file;
    if (!std::filesystem::exists(path)) {
        ctx.missing_file = true;
        ctx.report.add({name, false, "missing certificate file " + path.string(), 0});
        return false;
    }
    try {
        out = load_certificate(path);
    } catch (const CertificateError& e) {
        ctx.report.add({name, false, e.what(), 0});
        return false;
    }
    return true;
}

bool verify_sec3(VerifyContext& ctx) {
    Certificate cert;
    if (!load_into(ctx, "sec3.cert", cert, "sec3")) return false;
    auto t0 = Clock::now();
    ResidualReport r = check_sec3(cert);
    std::string detail = describe(r) + ", slot_mapping = " + mapping_text(cert.slot_mapping);
    if (!r.pass) {
        if (auto alt = find_slot_mapping(cert)) {
            detail += "; the identity holds with slot_mapping = " + mapping_text(*alt) + ", record it in the header";
        } else {
            detail += "; no group ordering gives a zero residual";
        }
    }
    ctx.report.add({"sec3", r.pass, detail, ms_since(t0)});
    return r.pass;
}

void verify_cert(VerifyContext& ctx, const std::string& name, const std::string& file) {
    Certificate cert;
    if (!load_into(ctx, file, cert, name)) return;
    auto t0 = Clock::now();
    try {
        ResidualReport r = check_certificate(cert);
        ctx.report.add({name, r.pass, describe(r), ms_since(t0)});
    } catch (const CertificateError& e) {
        ctx.report.add({name, false, e.what(), ms_since(t0)});
    }
}

void verify_eq52(VerifyContext& ctx) {
    auto t0 = Clock::now();
    ResidualReport r = check_eq52();
    ctx.report.add({"eq52", r.pass, describe(r), ms_since(t0)});
}

void verify_vectors(VerifyContext& ctx) {
    auto t0 = Clock::now();
    SpecialVectorReport v = check_special_vectors();
    std::ostringstream s;
    s << v.d4_eq_64p4 << "/21 satisfy d4 = 64 p4; z4 = 0 on " << v.z4_zero << "/21; v4 = 0 on " << v.v4_zero
      << "/21; d4 = p4 = 0 on " << v.first15_d4_p4_zero << "/15 of the first fifteen; n4 != 0 on " << v.n4_nonzero
      << "; d4(9,8,1,1,7,8) = " << v.d4_at_ustar.get_str();
    ctx.report.add({"vectors34", v.ok(), s.str(), ms_since(t0)});
}

void verify_symmetry(VerifyContext& ctx) {
    auto t0 = Clock::now();
    const GroupCheck gc = check_perm_group();
    std::ostringstream s;
    s << "closed=" << gc.closed << " even_rows=" << gc.even_rows << " sign_homomorphism=" << gc.sign_homomorphism;
    bool ok = gc.ok();
    for (const auto& spec : named_specs()) {
        const Poly6& p = named_polynomial(spec.name);
        const bool cls = spec.skew ? is_skew_symmetric(p) : is_symmetric(p);
        const bool hom = p.is_homogeneous(spec.degree);
        if (!cls || !hom) {
            ok = false;
            s << "; " << spec.name << (cls ? "" : " wrong symmetry") << (hom ? "" : " not homogeneous");
        }
    }
    if (ok) s << "; all named polynomials have the expected degree and symmetry";
    ctx.report.add({"symmetry", ok, s.str(), ms_since(t0)});
}

void verify_factorization(VerifyContext& ctx) {
    auto t0 = Clock::now();
    CampaignOptions opt;
    opt.n = 4;
    opt.count = ctx.factorization_count;
    opt.seed = ctx.g.seed;
    opt.tol = ctx.g.tol;
    const CampaignReport r = run_campaign(opt);
    const bool ok = r.im_identity.violations == 0 && r.re_identity.violations == 0;
    std::ostringstream s;
    s << r.evaluated << " configurations: max |(Im At)^2 - w4^2 z4| / |At|^2 = " << sci(r.im_identity.worst)
      << ", max |Re At - d4| / |At| = " << sci(r.re_identity.worst) << ", tol " << sci(opt.tol);
    ctx.report.add({"factorization", ok, s.str(), ms_since(t0)});
}

BigRat parse_rational(const std::string& tok) {
    BigRat q;
    if (tok.empty() || q.set_str(tok, 10) != 0 || q.get_den() == 0) {
        throw std::invalid_argument("not a rational number: '" + tok + "'");
    }
    q.canonicalize();
    return q;
}

std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, ',')) {
        if (!cur.empty()) out.push_back(cur);
    }
    return out;
}

}  // namespace

void RunReport::add(CheckLine line) {
    if (!line.pass && exit_code == kExitPass) exit_code = kExitFail;
    checks.push_back(std::move(line));
}

std::string RunReport::text() const {
    std::ostringstream out;
    out << "command: " << command << '\n';
    for (const auto& c : checks) {
        out << (c.pass ? "[PASS] " : "[FAIL] ") << c.name << ": " << c.detail << " (" << std::fixed
            << std::setprecision(1) << c.ms << " ms)\n";
    }
    out << "overall: " << (exit_code == kExitPass ? "PASS" : "FAIL") << " (exit " << exit_code << ")\n";
    return out.str();
}

std::string RunReport::json() const {
    nlohmann::json j;
    j["command"] = command;
    j["checks"] = nlohmann::json::array();
    for (const auto& c : checks) {
        j["checks"].push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}, {"ms", c.ms}});
    }
    j["exit_code"] = exit_code;
    j["pass"] = exit_code == kExitPass;
    return j.dump(2) + "\n";
}

RunReport cmd_verify(const std::string& target, const GlobalOptions& g, std::size_t factorization_count) {
    RunReport report;
    report.command = "verify " + target;
    VerifyContext ctx{g, factorization_count, report};

    static const std::vector<std::string> known = {"all",  "sec3",          "eq42",      "eq52",
                                                   "eq53", "factorization", "vectors34", "symmetry"};
    if (std::find(known.begin(), known.end(), target) == known.end()) {
        report.add({"verify", false, "unknown target '" + target + "'", 0});
        report.exit_code = kExitUsage;
        return report;
    }
    const bool all = target == "all";

    if (all) {
        // sec3 validates the multi-index slot mapping used by the degree-12 tables.
        const bool sec3_ok = verify_sec3(ctx);
        verify_eq52(ctx);
        if (sec3_ok) {
            verify_cert(ctx, "eq42", "eq42.cert");
            verify_cert(ctx, "eq53", "eq53.cert");
        } else {
            report.add({"eq42", false, "skipped: sec3 did not confirm the slot mapping", 0});
            report.add({"eq53", false, "skipped: sec3 did not confirm the slot mapping", 0});
        }
        verify_vectors(ctx);
        verify_symmetry(ctx);
        verify_factorization(ctx);
    } else if (target == "sec3") {
        verify_sec3(ctx);
    } else if (target == "eq42") {
        verify_cert(ctx, "eq42", "eq42.cert");
    } else if (target == "eq53") {
        verify_cert(ctx, "eq53", "eq53.cert");
    } else if (target == "eq52") {
        verify_eq52(ctx);
    } else if (target == "vectors34") {
        verify_vectors(ctx);
    } else if (target == "symmetry") {
        verify_symmetry(ctx);
    } else if (target == "factorization") {
        verify_factorization(ctx);
    }
    if (ctx.missing_file) report.exit_code = kExitUsage;
    return report;
}

RunReport cmd_lp(const std::string& base, const std::vector<std::string>& extras) {
    RunReport report;
    report.command = "lp --basis " + base;
    if (!extras.empty()) {
        report.command += " --extra ";
        for (std::size_t i = 0; i < extras.size(); ++i) report.command += (i ? "," : "") + extras[i];
    }
    NamedBasis nb;
    try {
        nb = make_basis(base, extras);
    } catch (const std::invalid_argument& e) {
        report.add({"basis", false, e.what(), 0});
        report.exit_code = kExitUsage;
        return report;
    }
    auto t0 = Clock::now();
    const LpProblem prob = build_program(nb.polys, nb.names);
    const LpSolution sol = solve(prob);
    const double solve_ms = ms_since(t0);

    std::ostringstream s;
    s << "status = " << to_string(sol.status);
    if (sol.status == LpStatus::Optimal) {
        s << ", alpha = " << sol.alpha.get_str() << ", support size = " << sol.support.size();
    }
    s << ", columns = " << prob.columns.size() << ", rows = " << prob.rows.size() << " (" << sol.active_rows
      << " distinct), pivots = " << sol.pivots;
    report.add({"solve", sol.status == LpStatus::Optimal, s.str(), solve_ms});

    if (sol.status == LpStatus::Optimal) {
        t0 = Clock::now();
        const Poly6 res = reconstruction_residual(prob, sol);
        std::string detail = res.is_zero() ? "d4 - alpha p4 - sum lambda_j f_j = 0"
                                           : "residual has " + std::to_string(res.size()) + " terms";
        std::string named_support;
        for (std::size_t j : sol.support) {
            if (j < extras.size()) named_support += " " + nb.names[j] + "=" + sol.multipliers[j].get_str();
        }
        if (!named_support.empty()) detail += "; extras:" + named_support;
        report.add({"reconstruction", res.is_zero(), detail, ms_since(t0)});

        const BoundCheck bc = upper_bound_check(nb.polys);
        if (bc.applicable) {
            const bool below = sol.alpha <= bc.bound;
            report.add({"upper_bound", below, "alpha <= " + bc.bound.get_str() + " from the value at (9,8,1,1,7,8)", 0});
        } else {
            report.add({"upper_bound", true, "bound not applicable: " + bc.reason, 0});
        }
    }
    return report;
}

RunReport cmd_sample(int n, std::size_t count, const std::string& mode, double min_separation, double ineq_tol,
                     const GlobalOptions& g) {
    RunReport report;
    std::ostringstream cmd;
    cmd << "sample --n " << n << " --count " << count << " --mode " << mode << " --seed " << g.seed << " --tol "
        << g.tol;
    report.command = cmd.str();
    CampaignOptions opt;
    try {
        opt.mode = parse_sample_mode(mode);
    } catch (const std::invalid_argument& e) {
        report.add({"sample", false, e.what(), 0});
        report.exit_code = kExitUsage;
        return report;
    }
    if (n < 2 || n > 6) {
        report.add({"sample", false, "n must be in 2..6", 0});
        report.exit_code = kExitUsage;
        return report;
    }
    opt.n = n;
    opt.count = count;
    opt.seed = g.seed;
    opt.tol = g.tol;
    opt.ineq_tol = ineq_tol;
    opt.min_separation = min_separation;

    auto t0 = Clock::now();
    const CampaignReport r = run_campaign(opt);
    const double ms = ms_since(t0);

    auto line = [&](const std::string& name, const Margin& m, const std::string& what) {
        if (!m.seen) return;
        std::ostringstream s;
        s << what << " = " << sci(m.worst) << " at index " << m.worst_index << " (seed " << g.seed << ", config seed "
          << config_seed(g.seed, m.worst_index) << "), violations = " << m.violations << "/" << r.evaluated;
        report.add({name, m.violations == 0, s.str(), 0});
    };
    line("conjecture2", r.conj2, "min |At|/prod(2 r_ij) - 1");
    line("conjecture3", r.conj3, "min |At|^(n-2)/prod|At_k| - 1");
    line("conjecture2_p4", r.conj2_poly, "min |At|/(64 p4) - 1");
    line("conjecture3_P4", r.conj3_poly, "min |At|^2/P4 - 1");
    line("d4sq_vs_P4", r.d4sq_vs_P4, "min d4^2/P4 - 1");
    line("re_identity", r.re_identity, "max |Re At - d4|/|At|");
    line("im_identity", r.im_identity, "max |(Im At)^2 - w4^2 z4|/|At|^2");
    line("im_planar", r.im_planar, "max |Im At|/|At|");
    line("two_point", r.two_point, "max |At - 2x|/|At|");
    std::ostringstream s;
    s << r.evaluated << " evaluated, " << r.degenerate << " with coincident points (|At| = 0 by convention)";
    report.add({"campaign", true, s.str(), ms});
    return report;
}

RunReport cmd_eval(const std::string& name, const std::vector<std::string>& u) {
    RunReport report;
    report.command = "eval " + name;
    for (const auto& v : u) report.command += " " + v;
    const Poly6* p = nullptr;
    try {
        p = &named_polynomial(name);
    } catch (const std::invalid_argument& e) {
        report.add({"eval", false, e.what(), 0});
        report.exit_code = kExitUsage;
        return report;
    }
    if (u.size() != kNumVars) {
        report.add({"eval", false, "expected six values (a b c x y z)", 0});
        report.exit_code = kExitUsage;
        return report;
    }
    Point6 pt;
    try {
        for (int i = 0; i < kNumVars; ++i) pt[i] = parse_rational(u[i]);
    } catch (const std::invalid_argument& e) {
        report.add({"eval", false, e.what(), 0});
        report.exit_code = kExitUsage;
        return report;
    }
    auto t0 = Clock::now();
    const BigRat v = evaluate(*p, pt);
    report.add({name, true, v.get_str(), ms_since(t0)});
    return report;
}

int run_cli(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact verification of the four-point Atiyah determinant identities", "atiyah4"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOptions g;
    std::string certs = g.certs.string();
    app.add_option("--certs", certs, "Certificate directory")->capture_default_str();
    app.add_option("--tol", g.tol, "Numeric tolerance")->capture_default_str();
    app.add_option("--seed", g.seed, "Base random seed")->capture_default_str();
    app.add_flag("--json", g.json, "Machine-readable output");

    std::string target = "all";
    std::size_t fact_count = 1000;
    auto* verify = app.add_subcommand("verify", "Run exact identity checks");
    verify->add_option("target", target, "all|sec3|eq42|eq52|eq53|factorization|vectors34|symmetry")
        ->capture_default_str();
    verify->add_option("--count", fact_count, "Configurations for the factorization campaign")->capture_default_str();

    std::string basis = "t6";
    std::string extra;
    std::string lp_action = "solve";
    auto* lp = app.add_subcommand("lp", "Solve the exact linear program for alpha");
    lp->add_option("action", lp_action, "solve (default)")->check(CLI::IsMember({"solve"}));
    lp->add_option("--basis", basis, "t6|none")->capture_default_str();
    lp->add_option("--extra", extra, "Comma-separated extras from z4,n4,v4sq");

    int n = 4;
    std::size_t count = 10000;
    std::string mode = "generic";
    double sep = 1e-2;
    double ineq_tol = 1e-9;
    auto* sample = app.add_subcommand("sample", "Numeric sampling campaign");
    sample->add_option("--n", n, "Number of points (2..6)")->capture_default_str();
    sample->add_option("--count", count, "Configurations")->capture_default_str();
    sample->add_option("--mode", mode, "generic|near-planar|near-collinear|near-coincident")->capture_default_str();
    sample->add_option("--sep", sep, "Minimum pairwise separation")->capture_default_str();
    sample->add_option("--ineq-tol", ineq_tol, "Relative slack for the inequalities")->capture_default_str();

    std::string poly_name;
    std::vector<std::string> values;
    auto* eval = app.add_subcommand("eval", "Evaluate a named polynomial exactly");
    eval->add_option("name", poly_name, "Polynomial name")->required();
    eval->add_option("u", values, "a b c x y z")->expected(6)->allow_extra_args(false);

    std::string dump_name;
    auto* catalog = app.add_subcommand("catalog", "Inspect named polynomials");
    catalog->require_subcommand(1);
    auto* dump = catalog->add_subcommand("dump", "Print a polynomial in text form");
    dump->add_option("name", dump_name, "Polynomial name")->required();
    auto* list = catalog->add_subcommand("list", "List polynomial names");

    std::vector<std::string> args(argv.rbegin(), argv.rend());
    if (!args.empty()) args.pop_back();  // program name
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitPass;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitPass;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return kExitUsage;
    }
    g.certs = certs;

    if (*catalog) {
        if (*list) {
            for (const auto& name : polynomial_names()) out << name << '\n';
            return kExitPass;
        }
        try {
            out << to_text(named_polynomial(dump_name));
        } catch (const std::invalid_argument& e) {
            err << "error: " << e.what() << '\n';
            return kExitUsage;
        }
        return kExitPass;
    }

    RunReport report;
    try {
        if (*verify) {
            report = cmd_verify(target, g, fact_count);
        } else if (*lp) {
            report = cmd_lp(basis, split_csv(extra));
        } else if (*sample) {
            report = cmd_sample(n, count, mode, sep, ineq_tol, g);
        } else if (*eval) {
            report = cmd_eval(poly_name, values);
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitFail;
    }
    out << (g.json ? report.json() : report.text());
    return report.exit_code;
}

}  // namespace atiyah4
