#pragma once

// Command-line workflows: verify, lp, sample, eval, catalog.

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace atiyah4 {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

struct CheckLine {
    std::string name;
    bool pass = false;
    std::string detail;
    double ms = 0;
};

struct RunReport {
    std::string command;
    std::vector<CheckLine> checks;
    int exit_code = kExitPass;

    void add(CheckLine line);
    /// Line-oriented text: one `[PASS]`/`[FAIL]` line per check, then `overall:`.
    std::string text() const;
    std::string json() const;
};

struct GlobalOptions {
    std::filesystem::path certs = "certificates";
    double tol = 1e-8;
    std::uint64_t seed = 1;
    bool json = false;
};

/// target: all | sec3 | eq42 | eq52 | eq53 | factorization | vectors34 | symmetry
RunReport cmd_verify(const std::string& target, const GlobalOptions& g, std::size_t factorization_count = 1000);
/// base: t6 | none; extras from z4, n4, v4sq.
RunReport cmd_lp(const std::string& base, const std::vector<std::string>& extras);
RunReport cmd_sample(int n, std::size_t count, const std::string& mode, double min_separation, double ineq_tol,
                     const GlobalOptions& g);
/// Six rationals such as "9", "-3/2".
RunReport cmd_eval(const std::string& name, const std::vector<std::string>& u);

/// Full entry point; argv[0] is the program name. Returns the exit code.
int run_cli(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

}  // namespace atiyah4
