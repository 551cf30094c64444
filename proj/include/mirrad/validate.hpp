#pragma once

#include <optional>
#include <string>
#include <vector>

namespace mirrad {

struct CheckResult {
    std::string name;
    bool passed = false;
    bool report_only = false;  // informational, never fails the run
    std::string detail;
};

struct ValidationReport {
    std::vector<CheckResult> checks;
    bool all_passed = true;
};

// Built-in cross checks between the closed forms, the quadrature route, and
// the known limits. tol, when given, replaces every relative tolerance;
// the fixed absolute criteria (intercept values, the 3/x decay bound) are
// part of the result statements themselves and stay as they are.
ValidationReport run_validation(std::optional<double> tol = {});

}  // namespace mirrad
