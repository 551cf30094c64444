#pragma once

#include <cstddef>
#include <functional>
#include <stdexcept>

namespace mirrad {

struct QuadratureOptions {
    double rel_tol = 1e-10;
    double abs_floor = 1e-15;
    std::size_t max_intervals = 10000;
};

struct QuadratureResult {
    double value = 0.0;
    double abs_error = 0.0;
    std::size_t evaluations = 0;
};

struct QuadratureError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Adaptive Gauss-Kronrod 7/15 on [lo, hi]. Deterministic: the subdivision
// order depends only on the integrand values, never on timing or threads.
// Throws QuadratureError if the interval budget is exhausted before the
// requested tolerance is met.
QuadratureResult adaptive_quad(const std::function<double(double)>& f, double lo, double hi,
                               const QuadratureOptions& opts = {});

}  // namespace mirrad
