#pragma once

#include <functional>
#include <stdexcept>

namespace fluxatom {

/// Thrown when an adaptive integration cannot reach the requested tolerance
/// within its subdivision budget.
struct QuadratureError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct QuadratureResult {
    double value;
    double error_estimate;
    int evaluations;
};

/// Adaptive Gauss-Kronrod (G7, K15) integration of f over [a, b].
///
/// Intervals are bisected until the local K15-G7 error estimate satisfies
/// err <= max(abs_tol, rel_tol * |integral|) scaled by interval fraction.
/// Throws QuadratureError after max_depth levels of bisection fail to
/// converge on some subinterval.
QuadratureResult integrate_adaptive(const std::function<double(double)>& f,
                                    double a, double b,
                                    double rel_tol = 1e-12,
                                    double abs_tol = 0.0,
                                    int max_depth = 48);

} // namespace fluxatom
