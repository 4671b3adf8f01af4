#pragma once

#include <numbers>
#include <string_view>

namespace carlson {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kSqrt2 = std::numbers::sqrt2;
inline constexpr double kTwoSqrt2 = 2.0 * std::numbers::sqrt2;

/// Largest shape parameter for which F_a is increasing on (0,1): 2(π−2)/(4−π).
inline constexpr double kIncreasingThreshold = 2.0 * (kPi - 2.0) / (4.0 - kPi);

/// Smallest shape parameter for which F_a is decreasing on (0,1): 2√2.
inline constexpr double kDecreasingThreshold = kTwoSqrt2;

/// k units in the last place of |value|; the strict-inequality tolerance used
/// throughout (k = 4 by default).
double fp_tolerance(double value, int ulps = 4);

/// arccos x on [−1,1]. For x ≥ 0 it is evaluated as 2·asin(√((1−x)/2)) so
/// that quotients by √(1−x) keep full relative accuracy as x → 1⁻.
double arccos_stable(double x);

/// arccos x / √(1−x) for x in [0,1), computed as √2·asin(t)/t with
/// t = √((1−x)/2). Tends to √2 as x → 1⁻.
double acos_over_sqrt(double x);

enum class Regime { Increasing, Decreasing, InteriorMinimum };

std::string_view to_string(Regime r);

/// F_a(x) = (a + √(1+x))·arccos x / √(1−x), x in (0,1). Finite for all real a.
double family_value(double a, double x);

/// Limits of F_a at the ends of (0,1): π(1+a)/2 as x → 0⁺ and 2+√2·a as x → 1⁻.
double left_limit(double a);
double right_limit(double a);

/// Closed at both thresholds: A* maps to Increasing, 2√2 to Decreasing.
Regime classify_regime(double a);

/// Best constants c such that c·√(1−x)/(a+√(1+x)) bounds arccos x on (0,1).
/// Requires a > −1.
double lower_constant(double a);
double upper_constant(double a);

struct BoundPair {
    double x;
    double lower;
    double upper;
    double c_lower;
    double c_upper;
    double a;
};

/// The template c·√(1−x)/(a+√(1+x)). Requires a > −1, x in (0,1).
double bound_template(double c, double a, double x);

BoundPair bound_pair(double a, double x);

}  // namespace carlson
