#pragma once

#include "carlson/core_bounds.hpp"

namespace carlson {

/// Shape parameter at which the two candidate upper constants 2+√2·a and
/// π(1+a)/2 coincide, (4−π)/(π−2√2). The upper bound of the middle regime is
/// tightest there.
inline constexpr double kBestUpperShape = (4.0 - kPi) / (kPi - kTwoSqrt2);

inline constexpr double kOnePlusSqrt3 = 1.0 + std::numbers::sqrt3;

/// λ(x) = cos(⅓·arctan √((1−x)/(1+x))), strictly increasing from cos(π/12)
/// to 1 on (0,1).
double lambda_kernel(double x);

/// Lower bound 2(4λ²−1)√(1−x) / ((2√2·λ + √(1+x))·λ²): the middle-regime
/// bound evaluated at the shape that maximizes it pointwise.
double lambda_lower_bound(double x);

/// π(2−√2)√(1−x) / ((4−π) + (π−2√2)√(1+x)).
double best_upper_bound(double x);

struct Bracket {
    double lower;
    double upper;
};

/// Best-constant pair at a = 2(π−2)/(4−π):
/// π²√(1−x) / (2[2(π−2)+(4−π)√(1+x)]) and
/// 2[2(2−√2)+(√2−1)π]√(1−x) / (2(π−2)+(4−π)√(1+x)).
Bracket threshold_pair(double x);

/// Carlson's pair at a = 2√2, reversed orientation:
/// 6√(1−x)/(2√2+√(1+x)) below, π(1+2√2)√(1−x)/(2[2√2+√(1+x)]) above.
Bracket carlson_pair(double x);

/// 8[1−2/(1+√3)²]√(1−x) / (1+√3+√(1+x)).
double root3_lower_bound(double x);

// Weight of the middle-regime lower bound as a function of the shape:
// h_x(a) = (1 − 2/a²)/(a + √(1+x)). Requires a in (A*, 2√2).
double shape_weight(double a, double x);

/// argmax over a of shape_weight, 2√2·λ(x). Lies in (1+√3, 2√2).
double optimal_shape(double x);

/// Closed form of the maximum weight, (4λ²−1)/(4λ²(2√2·λ+√(1+x))),
/// evaluated without going through shape_weight.
double max_shape_weight(double x);

struct SharpBounds {
    double x;
    double lower_lambda;
    double lower_pi2;
    double lower_best;
    double upper_best;
};

double best_lower(double x);

SharpBounds best_pair(double x);

/// Abscissa where lambda_lower_bound and threshold_pair(x).lower cross,
/// located by bisection on their difference over [lo, hi] to width `tol`.
/// Throws ConvergenceError if the difference does not change sign.
double lower_crossover(double lo, double hi, double tol = 1e-10);

}  // namespace carlson
