#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

namespace carlson {

enum class Spacing { Uniform, EndpointRefined };

std::string_view to_string(Spacing s);

/// Sampling grid over [lo, hi].
///
/// EndpointRefined puts a quarter of the points geometrically within
/// 10⁻³ of each end (measured as distance from 0 and from 1, so it needs
/// 0 < lo < hi < 1) and spreads the other half uniformly in between.
struct GridSpec {
    double lo = 1e-9;
    double hi = 1.0 - 1e-9;
    std::size_t n = 1'000'000;
    Spacing spacing = Spacing::EndpointRefined;

    static GridSpec uniform(double lo, double hi, std::size_t n) {
        return {lo, hi, n, Spacing::Uniform};
    }
    static GridSpec refined(std::size_t n, double lo = 1e-9, double hi = 1.0 - 1e-9) {
        return {lo, hi, n, Spacing::EndpointRefined};
    }
};

/// Strictly increasing abscissas. Throws DomainError on an invalid spec.
std::vector<double> make_grid(const GridSpec& spec);

}  // namespace carlson
