#pragma once

#include <cstddef>

namespace carlson {

// Auxiliary functions from the monotonicity argument for F_a. Each takes
// x in (0,1); the names describe the role each one plays.
//
//   F_a'(x) = √(1−x²)(a√(x+1)+2) / (2(x−1)²(x+1)) · derivative_kernel(a,x)
//   d/dx derivative_kernel = kernel_slope_factor(a,x)·√(1−x) / ((1+x)(a√(x+1)+2)²)
//   F_a'(x) = √(1−x²) / (2(x−1)²(x+1)) · scaled_derivative_kernel(a,x)
//   d/dx scaled_derivative_kernel = arccos x / (2√(x+1)) · (a − slope_threshold(x))
//   d/dx slope_threshold ∝ threshold_slope_factor(x) with a positive factor

/// 2(x−1)(a√(x+1)+x+1) / (√(1−x²)(a√(x+1)+2)) + arccos x.
/// Requires a ∉ (−2, −√2). Evaluated as √(1−x)·[arccos x/√(1−x) − 2(a+u)/(au+2)]
/// with u = √(1+x), which stays finite as x → 1⁻.
double derivative_kernel(double a, double x);

/// a²√(x+1) − ax − a − 4√(x+1).
double kernel_slope_factor(double a, double x);

/// 2(x−1)(a√(x+1)+x+1)/√(1−x²) + (a√(x+1)+2)·arccos x. Requires a ∉ (−2, −√2).
double scaled_derivative_kernel(double a, double x);

/// 4√(1−x) / arccos x; increases from 8/π to 2√2.
double slope_threshold(double x);

/// 2√(1−x²)/(x+1) − arccos x; positive and decreasing to 0.
double threshold_slope_factor(double x);

struct RootPair {
    double low;   // (x+1 − √(x²+18x+17)) / (2√(x+1))
    double high;  // (x+1 + √(x²+18x+17)) / (2√(x+1))
};

/// The two zeros in a of kernel_slope_factor(·, x).
RootPair slope_factor_roots(double x);

struct MinimumResult {
    double a;
    double x0;
    double f_min;
    double residual;
    int iterations;
};

/// Unique interior minimizer of F_a for a in (A*, 2√2), found by bisection on
/// the sign of derivative_kernel. Throws RegimeError outside the interval and
/// ConvergenceError if no sign change can be bracketed.
MinimumResult find_minimum(double a);

/// F_a at a stationary point x0, rewritten through the stationarity
/// condition: 2(a+u)²/(au+2) with u = √(1+x0).
double stationary_value(double a, double x0);

/// 8(1 − 2/a²), the lower bound on the interior minimum. Accepts
/// a in (A*, 2√2]; at 2√2 it equals Carlson's constant 6.
double min_value_lower(double a);

/// min over n uniformly spaced u in (1, √2) of 2(a+u)²/(au+2) − 8(1−2/a²).
/// Requires a > 0 and n ≥ 2.
double min_value_step_margin(double a, std::size_t n);

}  // namespace carlson
