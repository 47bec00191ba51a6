#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "atiyah4/atiyah.hpp"
#include "atiyah4/catalog.hpp"
#include "atiyah4/certify.hpp"
#include "atiyah4/cli.hpp"
#include "atiyah4/lp.hpp"
#include "atiyah4/symmetry.hpp"

#include <sstream>

namespace py = pybind11;
using namespace atiyah4;

namespace {

// Rationals cross the boundary as strings ("-3/2") so nothing is rounded.
BigRat to_rational(const py::handle& h) {
    const std::string s = py::str(h);
    BigRat q;
    if (q.set_str(s, 10) != 0 || q.get_den() == 0) throw py::value_error("not a rational number: '" + s + "'");
    q.canonicalize();
    return q;
}

std::vector<Point3> to_points(const std::vector<std::array<double, 3>>& pts) {
    std::vector<Point3> out;
    out.reserve(pts.size());
    for (const auto& p : pts) out.emplace_back(p[0], p[1], p[2]);
    return out;
}

py::dict report_dict(const RunReport& r) {
    py::list checks;
    for (const auto& c : r.checks) {
        py::dict d;
        d["name"] = c.name;
        d["pass"] = c.pass;
        d["detail"] = c.detail;
        d["ms"] = c.ms;
        checks.append(d);
    }
    py::dict out;
    out["command"] = r.command;
    out["checks"] = checks;
    out["exit_code"] = r.exit_code;
    return out;
}

py::dict residual_dict(const ResidualReport& r) {
    py::dict d;
    d["id"] = r.id;
    d["pass"] = r.pass;
    d["residual_terms"] = r.residual.size();
    d["seconds"] = r.seconds;
    return d;
}

}  // namespace

PYBIND11_MODULE(_atiyah4, m) {
    m.doc() = "Exact polynomial identities and the floating-point Atiyah determinant for four points";

    m.def("polynomial_names", &polynomial_names);
    m.def(
        "polynomial_text", [](const std::string& name) { return to_text(named_polynomial(name)); }, py::arg("name"),
        "Named polynomial in line-per-term text form.");
    m.def(
        "evaluate",
        [](const std::string& name, const py::sequence& u) {
            if (u.size() != kNumVars) throw py::value_error("expected six values (a, b, c, x, y, z)");
            Point6 pt;
            for (int i = 0; i < kNumVars; ++i) pt[i] = to_rational(u[i]);
            return evaluate(named_polynomial(name), pt).get_str();
        },
        py::arg("name"), py::arg("u"), "Exact value of a named polynomial, as a fraction string.");
    m.def(
        "evaluate_float",
        [](const std::string& name, const std::array<double, kNumVars>& u) {
            return evaluate_float(named_polynomial(name), u);
        },
        py::arg("name"), py::arg("u"));
    m.def("is_symmetric", [](const std::string& name) { return is_symmetric(named_polynomial(name)); });
    m.def("is_skew_symmetric", [](const std::string& name) { return is_skew_symmetric(named_polynomial(name)); });
    m.def("check_perm_group", [] {
        const GroupCheck g = check_perm_group();
        py::dict d;
        d["closed"] = g.closed;
        d["even_rows"] = g.even_rows;
        d["sign_homomorphism"] = g.sign_homomorphism;
        d["ok"] = g.ok();
        return d;
    });

    m.def(
        "check_certificate",
        [](const std::string& path) { return residual_dict(check_certificate(load_certificate(path))); },
        py::arg("path"));
    m.def("check_eq52", [] { return residual_dict(check_eq52()); });
    m.def("check_special_vectors", [] {
        const SpecialVectorReport v = check_special_vectors();
        py::dict d;
        d["d4_eq_64p4"] = v.d4_eq_64p4;
        d["z4_zero"] = v.z4_zero;
        d["v4_zero"] = v.v4_zero;
        d["first15_d4_p4_zero"] = v.first15_d4_p4_zero;
        d["n4_nonzero"] = v.n4_nonzero;
        d["d4_at_ustar"] = v.d4_at_ustar.get_str();
        d["ok"] = v.ok();
        return d;
    });

    m.def(
        "solve_lp",
        [](const std::string& base, const std::vector<std::string>& extras) {
            const NamedBasis nb = make_basis(base, extras);
            const LpProblem prob = build_program(nb.polys, nb.names);
            const LpSolution sol = solve(prob);
            py::dict d;
            d["status"] = std::string(to_string(sol.status));
            d["alpha"] = sol.status == LpStatus::Optimal ? py::object(py::str(sol.alpha.get_str())) : py::none();
            d["support_size"] = sol.support.size();
            d["pivots"] = sol.pivots;
            d["reconstruction_exact"] =
                sol.status == LpStatus::Optimal && reconstruction_residual(prob, sol).is_zero();
            py::dict named_mult;
            for (std::size_t j = 0; j < extras.size(); ++j) named_mult[py::str(extras[j])] = sol.multipliers[j].get_str();
            d["extras"] = named_mult;
            return d;
        },
        py::arg("base") = "t6", py::arg("extras") = std::vector<std::string>{},
        "Maximize alpha with d4 - alpha p4 in the cone of the basis.");

    m.def(
        "atiyah_det",
        [](const std::vector<std::array<double, 3>>& pts, const std::vector<double>& phases) {
            return atiyah_det(to_points(pts), phases).value;
        },
        py::arg("points"), py::arg("phases") = std::vector<double>{});
    m.def(
        "distance_vector",
        [](const std::vector<std::array<double, 3>>& pts) { return distance_vector(to_points(pts)); },
        py::arg("points"), "(|AD|, |BD|, |CD|, |AB|, |BC|, |AC|)");
    m.def("cayley_menger", &cayley_menger, py::arg("u"));
    m.def(
        "sample_config",
        [](int n, std::uint64_t seed, const std::string& mode, double min_sep) {
            std::vector<std::array<double, 3>> out;
            for (const auto& p : sample_config(n, seed, parse_sample_mode(mode), min_sep)) out.push_back({p.x, p.y, p.z});
            return out;
        },
        py::arg("n"), py::arg("seed"), py::arg("mode") = "generic", py::arg("min_separation") = 1e-2);

    m.def(
        "run_cli",
        [](const std::vector<std::string>& args) {
            std::vector<std::string> argv{"atiyah4"};
            argv.insert(argv.end(), args.begin(), args.end());
            std::ostringstream out, err;
            const int code = run_cli(argv, out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "Run the command-line entry point; returns (exit_code, stdout, stderr).");
    m.def(
        "verify",
        [](const std::string& target, const std::string& certs, std::size_t count) {
            GlobalOptions g;
            g.certs = certs;
            return report_dict(cmd_verify(target, g, count));
        },
        py::arg("target") = "all", py::arg("certs") = "certificates", py::arg("factorization_count") = 1000);

    py::register_exception<CertificateError>(m, "CertificateError", PyExc_ValueError);
}
