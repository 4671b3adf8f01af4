#include "carlson/sharp_family.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "carlson/core_bounds.hpp"
#include "carlson/errors.hpp"

namespace carlson {

namespace {

using Ext = long double;
constexpr Ext kPiE = std::numbers::pi_v<Ext>;
constexpr Ext kSqrt2E = std::numbers::sqrt2_v<Ext>;
constexpr Ext kTwoSqrt2E = 2.0L * kSqrt2E;
constexpr Ext kOnePlusSqrt3E = 1.0L + std::numbers::sqrt3_v<Ext>;

void require_open_unit(double x, const char* op) {
    if (!(x > 0.0 && x < 1.0)) {
        throw DomainError(std::string(op) + ": x must lie in (0,1), got " + std::to_string(x));
    }
}

Ext lambda_ext(Ext x) {
    // One square root of the quotient keeps the argument accurate near both ends.
    return std::cos(std::atan(std::sqrt((1.0L - x) / (1.0L + x))) / 3.0L);
}

Ext lambda_lower_ext(Ext x) {
    const Ext lam = lambda_ext(x);
    const Ext lam2 = lam * lam;
    return 2.0L * (4.0L * lam2 - 1.0L) * std::sqrt(1.0L - x) /
           ((kTwoSqrt2E * lam + std::sqrt(1.0L + x)) * lam2);
}

Ext threshold_lower_ext(Ext x) {
    return kPiE * kPiE * std::sqrt(1.0L - x) /
           (2.0L * (2.0L * (kPiE - 2.0L) + (4.0L - kPiE) * std::sqrt(1.0L + x)));
}

}  // namespace

double lambda_kernel(double x) {
    require_open_unit(x, "lambda_kernel");
    return static_cast<double>(lambda_ext(x));
}

double lambda_lower_bound(double x) {
    require_open_unit(x, "lambda_lower_bound");
    return static_cast<double>(lambda_lower_ext(x));
}

double best_upper_bound(double x) {
    require_open_unit(x, "best_upper_bound");
    const Ext xe = x;
    return static_cast<double>(kPiE * (2.0L - kSqrt2E) * std::sqrt(1.0L - xe) /
                               ((4.0L - kPiE) + (kPiE - kTwoSqrt2E) * std::sqrt(1.0L + xe)));
}

Bracket threshold_pair(double x) {
    require_open_unit(x, "threshold_pair");
    const Ext xe = x;
    const Ext s = std::sqrt(1.0L - xe);
    const Ext den = 2.0L * (kPiE - 2.0L) + (4.0L - kPiE) * std::sqrt(1.0L + xe);
    const Ext upper = 2.0L * (2.0L * (2.0L - kSqrt2E) + (kSqrt2E - 1.0L) * kPiE) * s / den;
    return {static_cast<double>(threshold_lower_ext(xe)), static_cast<double>(upper)};
}

Bracket carlson_pair(double x) {
    require_open_unit(x, "carlson_pair");
    const Ext xe = x;
    const Ext s = std::sqrt(1.0L - xe);
    const Ext den = kTwoSqrt2E + std::sqrt(1.0L + xe);
    return {static_cast<double>(6.0L * s / den),
            static_cast<double>(kPiE * (1.0L + kTwoSqrt2E) * s / (2.0L * den))};
}

double root3_lower_bound(double x) {
    require_open_unit(x, "root3_lower_bound");
    const Ext xe = x;
    const Ext c = 8.0L * (1.0L - 2.0L / (kOnePlusSqrt3E * kOnePlusSqrt3E));
    return static_cast<double>(c * std::sqrt(1.0L - xe) / (kOnePlusSqrt3E + std::sqrt(1.0L + xe)));
}

double shape_weight(double a, double x) {
    require_open_unit(x, "shape_weight");
    if (!(a > kIncreasingThreshold && a < kDecreasingThreshold)) {
        throw DomainError("shape_weight: a must lie in (A*, 2*sqrt(2)), got " + std::to_string(a));
    }
    const Ext ae = a;
    return static_cast<double>((1.0L - 2.0L / (ae * ae)) / (ae + std::sqrt(1.0L + Ext{x})));
}

double optimal_shape(double x) {
    require_open_unit(x, "optimal_shape");
    return static_cast<double>(kTwoSqrt2E * lambda_ext(x));
}

double max_shape_weight(double x) {
    require_open_unit(x, "max_shape_weight");
    const Ext lam = lambda_ext(x);
    const Ext four_lam2 = 4.0L * lam * lam;
    return static_cast<double>((four_lam2 - 1.0L) /
                               (four_lam2 * (kTwoSqrt2E * lam + std::sqrt(1.0L + Ext{x}))));
}

double best_lower(double x) {
    require_open_unit(x, "best_lower");
    return static_cast<double>(std::max(lambda_lower_ext(x), threshold_lower_ext(x)));
}

SharpBounds best_pair(double x) {
    const double lam = lambda_lower_bound(x);
    const double pi2 = threshold_pair(x).lower;
    return SharpBounds{x, lam, pi2, std::max(lam, pi2), best_upper_bound(x)};
}

double lower_crossover(double lo, double hi, double tol) {
    require_open_unit(lo, "lower_crossover");
    require_open_unit(hi, "lower_crossover");
    auto diff = [](double x) { return lambda_lower_ext(x) - threshold_lower_ext(x); };
    Ext flo = diff(lo);
    const Ext fhi = diff(hi);
    if ((flo > 0.0L) == (fhi > 0.0L)) {
        throw ConvergenceError("lower_crossover: no sign change on [" + std::to_string(lo) + ", " +
                               std::to_string(hi) + "]");
    }
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        const Ext fm = diff(mid);
        if ((fm > 0.0L) == (flo > 0.0L)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace carlson
