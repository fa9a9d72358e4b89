// casimir-wedge: command-line front end (stress, torque, limit-table, green,
// verify) emitting machine-readable CSV/JSON documents.

#pragma once

#include <limits>
#include <string>

namespace casimir::cli {

// Effective run configuration after merging flags > config file > defaults.
// Unset numeric parameters are NaN (or 0 for the integer counts).
struct RunConfig {
    std::string command;  // stress | torque | limit-table | green | verify
    double beta = std::numeric_limits<double>::quiet_NaN();
    double rho = std::numeric_limits<double>::quiet_NaN();
    double phi = std::numeric_limits<double>::quiet_NaN();
    double phi_prime = std::numeric_limits<double>::quiet_NaN();
    double rho_prime = std::numeric_limits<double>::quiet_NaN();
    double lambda = std::numeric_limits<double>::quiet_NaN();
    double d = std::numeric_limits<double>::quiet_NaN();
    double beta_start = std::numeric_limits<double>::quiet_NaN();
    double beta_end = std::numeric_limits<double>::quiet_NaN();
    int steps = 0;
    int m_max = 25;
    std::string method = "closed";  // stress: closed | series
    std::string suite = "all";      // verify
    double tol = 1.0e-8;
    std::string units = "natural";  // natural | si
    std::string format = "json";    // json | csv
    std::string out_path;           // empty: stdout
};

struct RunOutcome {
    int exit_code = 0;        // 0 success, 1 validation error, 2 numerical failure
    std::string document;     // complete CSV/JSON document ("" on validation errors)
    std::string diagnostic;   // human-readable message for stderr on failure
};

// Executes one validated command; never emits a partial document.
RunOutcome run(const RunConfig& config);

// Full command-line entry point: parse, merge config file, run, write output.
int main_entry(int argc, char** argv);

}  // namespace casimir::cli
