#include "carlson/core_bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "carlson/errors.hpp"
#include "extended.hpp"

namespace carlson {

namespace {

using detail::Ext;
using detail::acos_over_sqrt_ext;
constexpr Ext kSqrt2Ext = detail::kSqrt2E;

void require_open_unit(double x, const char* op) {
    if (!(x > 0.0 && x < 1.0)) {
        throw DomainError(std::string(op) + ": x must lie in (0,1), got " + std::to_string(x));
    }
}

void require_shape(double a, const char* op) {
    if (!std::isfinite(a) || !(a > -1.0)) {
        throw DomainError(std::string(op) + ": a must be finite and > -1, got " + std::to_string(a));
    }
}

}  // namespace

double fp_tolerance(double value, int ulps) {
    const double m = std::fabs(value);
    const double ulp = std::nextafter(m, std::numeric_limits<double>::infinity()) - m;
    return ulps * ulp;
}

double arccos_stable(double x) {
    if (!(x >= -1.0 && x <= 1.0)) {
        throw DomainError("arccos_stable: x must lie in [-1,1], got " + std::to_string(x));
    }
    if (x < 0.0) return static_cast<double>(std::acos(static_cast<Ext>(x)));
    return static_cast<double>(2.0L * std::asin(std::sqrt(0.5L * (1.0L - static_cast<Ext>(x)))));
}

double acos_over_sqrt(double x) {
    if (!(x >= 0.0 && x < 1.0)) {
        throw DomainError("acos_over_sqrt: x must lie in [0,1), got " + std::to_string(x));
    }
    return static_cast<double>(acos_over_sqrt_ext(x));
}

std::string_view to_string(Regime r) {
    switch (r) {
        case Regime::Increasing: return "Increasing";
        case Regime::Decreasing: return "Decreasing";
        case Regime::InteriorMinimum: return "InteriorMinimum";
    }
    return "?";
}

double family_value(double a, double x) {
    require_open_unit(x, "family_value");
    const Ext xe = x;
    return static_cast<double>((a + std::sqrt(1.0L + xe)) * acos_over_sqrt_ext(xe));
}

double left_limit(double a) {
    return static_cast<double>(0.5L * std::numbers::pi_v<Ext> * (1.0L + a));
}

double right_limit(double a) { return static_cast<double>(2.0L + kSqrt2Ext * a); }

Regime classify_regime(double a) {
    if (a <= kIncreasingThreshold) return Regime::Increasing;
    if (a >= kDecreasingThreshold) return Regime::Decreasing;
    return Regime::InteriorMinimum;
}

double lower_constant(double a) {
    require_shape(a, "lower_constant");
    switch (classify_regime(a)) {
        case Regime::Increasing: return left_limit(a);
        case Regime::InteriorMinimum: return static_cast<double>(8.0L * (1.0L - 2.0L / (Ext{a} * a)));
        case Regime::Decreasing: return right_limit(a);
    }
    return 0.0;
}

double upper_constant(double a) {
    require_shape(a, "upper_constant");
    switch (classify_regime(a)) {
        case Regime::Increasing: return right_limit(a);
        case Regime::InteriorMinimum: return std::max(right_limit(a), left_limit(a));
        case Regime::Decreasing: return left_limit(a);
    }
    return 0.0;
}

double bound_template(double c, double a, double x) {
    require_shape(a, "bound_template");
    require_open_unit(x, "bound_template");
    const Ext xe = x;
    return static_cast<double>(c * std::sqrt(1.0L - xe) / (a + std::sqrt(1.0L + xe)));
}

BoundPair bound_pair(double a, double x) {
    require_shape(a, "bound_pair");
    require_open_unit(x, "bound_pair");
    const double cl = lower_constant(a);
    const double cu = upper_constant(a);
    return BoundPair{x, bound_template(cl, a, x), bound_template(cu, a, x), cl, cu, a};
}

}  // namespace carlson
