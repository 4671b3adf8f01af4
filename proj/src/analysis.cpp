#include "carlson/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "carlson/core_bounds.hpp"
#include "carlson/errors.hpp"
#include "extended.hpp"

namespace carlson {

namespace {

void require_open_unit(double x, const char* op) {
    if (!(x > 0.0 && x < 1.0)) {
        throw DomainError(std::string(op) + ": x must lie in (0,1), got " + std::to_string(x));
    }
}

void require_nonvanishing(double a, const char* op) {
    if (a > -2.0 && a < -kSqrt2) {
        throw DomainError(std::string(op) + ": a must not lie in (-2, -sqrt(2)), got " +
                          std::to_string(a));
    }
}

using detail::Ext;
using detail::acos_over_sqrt_ext;

// Same sign as derivative_kernel on (0,1); it is that kernel divided by √(1−x).
Ext kernel_sign_part(Ext a, Ext x) {
    const Ext u = std::sqrt(1.0L + x);
    return acos_over_sqrt_ext(x) - 2.0L * (a + u) / (a * u + 2.0L);
}

}  // namespace

double derivative_kernel(double a, double x) {
    require_open_unit(x, "derivative_kernel");
    require_nonvanishing(a, "derivative_kernel");
    return static_cast<double>(std::sqrt(1.0L - Ext{x}) * kernel_sign_part(a, x));
}

double kernel_slope_factor(double a, double x) {
    require_open_unit(x, "kernel_slope_factor");
    const Ext ae = a;
    const Ext xe = x;
    const Ext u = std::sqrt(xe + 1.0L);
    return static_cast<double>(ae * ae * u - ae * xe - ae - 4.0L * u);
}

double scaled_derivative_kernel(double a, double x) {
    require_open_unit(x, "scaled_derivative_kernel");
    require_nonvanishing(a, "scaled_derivative_kernel");
    const Ext ae = a;
    const Ext xe = x;
    const Ext u = std::sqrt(1.0L + xe);
    return static_cast<double>(std::sqrt(1.0L - xe) *
                               ((ae * u + 2.0L) * acos_over_sqrt_ext(xe) - 2.0L * (ae + u)));
}

double slope_threshold(double x) {
    require_open_unit(x, "slope_threshold");
    return static_cast<double>(4.0L / acos_over_sqrt_ext(x));
}

double threshold_slope_factor(double x) {
    require_open_unit(x, "threshold_slope_factor");
    const Ext xe = x;
    return static_cast<double>(std::sqrt(1.0L - xe) * (2.0L / std::sqrt(1.0L + xe) - acos_over_sqrt_ext(xe)));
}

RootPair slope_factor_roots(double x) {
    require_open_unit(x, "slope_factor_roots");
    const Ext xe = x;
    const Ext disc = std::sqrt(xe * xe + 18.0L * xe + 17.0L);
    const Ext den = 2.0L * std::sqrt(xe + 1.0L);
    return {static_cast<double>((xe + 1.0L - disc) / den), static_cast<double>((xe + 1.0L + disc) / den)};
}

MinimumResult find_minimum(double a) {
    if (!(a > kIncreasingThreshold && a < kDecreasingThreshold)) {
        throw RegimeError("find_minimum: a must lie in (A*, 2*sqrt(2)) = (" +
                          std::to_string(kIncreasingThreshold) + ", " +
                          std::to_string(kDecreasingThreshold) + "), got " + std::to_string(a));
    }

    // Kernel is negative left of the minimizer and positive right of it.
    double lo = 1e-9;
    double hi = 1.0 - 1e-9;
    for (double step = 1e-10; kernel_sign_part(a, lo) >= 0.0; step *= 0.1) {
        if (step < 1e-300) throw ConvergenceError("find_minimum: kernel not negative near x = 0");
        lo = step;
    }
    for (double step = 1e-10; kernel_sign_part(a, hi) <= 0.0; step *= 0.1) {
        const double cand = 1.0 - step;
        if (cand == 1.0 || cand == hi) {
            throw ConvergenceError("find_minimum: kernel not positive near x = 1");
        }
        hi = cand;
    }

    int iterations = 0;
    while (hi - lo >= 1e-13) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        if (kernel_sign_part(a, mid) < 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
        ++iterations;
    }

    const double x0 = 0.5 * (lo + hi);
    return MinimumResult{a, x0, family_value(a, x0), std::fabs(derivative_kernel(a, x0)),
                         iterations};
}

double stationary_value(double a, double x0) {
    require_open_unit(x0, "stationary_value");
    const Ext ae = a;
    const Ext u = std::sqrt(1.0L + Ext{x0});
    return static_cast<double>(2.0L * (ae + u) * (ae + u) / (ae * u + 2.0L));
}

double min_value_lower(double a) {
    if (!(a > kIncreasingThreshold && a <= kDecreasingThreshold)) {
        throw RegimeError("min_value_lower: a must lie in (A*, 2*sqrt(2)], got " +
                          std::to_string(a));
    }
    return static_cast<double>(8.0L * (1.0L - 2.0L / (Ext{a} * a)));
}

double min_value_step_margin(double a, std::size_t n) {
    if (!(a > 0.0) || n < 2) {
        throw DomainError("min_value_step_margin: requires a > 0 and n >= 2");
    }
    const Ext ae = a;
    const Ext bound = 8.0L * (1.0L - 2.0L / (ae * ae));
    Ext worst = std::numeric_limits<Ext>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
        // Interior points of (1, √2).
        const Ext u = 1.0L + (detail::kSqrt2E - 1.0L) * (static_cast<Ext>(i) + 0.5L) / static_cast<Ext>(n);
        worst = std::min(worst, 2.0L * (ae + u) * (ae + u) / (ae * u + 2.0L) - bound);
    }
    return static_cast<double>(worst);
}

}  // namespace carlson
