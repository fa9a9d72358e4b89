// casimir-wedge: built-in verification suites behind the `verify` subcommand.

#pragma once

#include <string>
#include <vector>

namespace casimir::verify {

struct CheckResult {
    std::string suite;
    std::string name;
    bool passed;
    double observed;   // the measured figure of merit (max error, count, ...)
    double threshold;  // pass iff observed <= threshold
    std::string detail;
};

// suite: "all", "specfun", "quad", "wedge", or "greenfn".  tol feeds the
// checks with a caller-facing tolerance (integral identity target and the
// extrapolation tolerance); structural thresholds are fixed.
std::vector<CheckResult> run_suite(const std::string& suite, double tol);

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace casimir::verify
