#pragma once

// Extended-precision helpers shared by the evaluation modules. Results are
// rounded to binary64 once, at the public API boundary.

#include <cmath>
#include <numbers>

namespace carlson::detail {

using Ext = long double;

inline constexpr Ext kPiE = std::numbers::pi_v<Ext>;
inline constexpr Ext kSqrt2E = std::numbers::sqrt2_v<Ext>;

/// arccos x / √(1−x) for x in [0,1), as √2·asin(t)/t with t = √((1−x)/2).
inline Ext acos_over_sqrt_ext(Ext x) {
    const Ext t = std::sqrt(0.5L * (1.0L - x));
    return kSqrt2E * (std::asin(t) / t);
}

}  // namespace carlson::detail
