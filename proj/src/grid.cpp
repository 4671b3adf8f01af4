#include "carlson/grid.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "carlson/errors.hpp"

namespace carlson {

std::string_view to_string(Spacing s) {
    return s == Spacing::Uniform ? "uniform" : "refined";
}

namespace {

void append_uniform(std::vector<double>& out, double lo, double hi, std::size_t n) {
    if (n == 1) {
        out.push_back(0.5 * (lo + hi));
        return;
    }
    const double step = (hi - lo) / static_cast<double>(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) out.push_back(lo + step * static_cast<double>(i));
    out.push_back(hi);
}

// m distances geometric from d0 (inclusive) to d1 (exclusive).
std::vector<double> geometric(double d0, double d1, std::size_t m) {
    std::vector<double> d;
    d.reserve(m);
    const double log_ratio = std::log(d1 / d0);
    for (std::size_t k = 0; k < m; ++k) {
        d.push_back(d0 * std::exp(log_ratio * static_cast<double>(k) / static_cast<double>(m)));
    }
    return d;
}

}  // namespace

std::vector<double> make_grid(const GridSpec& spec) {
    if (!(spec.lo < spec.hi) || !std::isfinite(spec.lo) || !std::isfinite(spec.hi)) {
        throw DomainError("grid: need finite lo < hi");
    }
    if (spec.n < 2) throw DomainError("grid: need n >= 2, got " + std::to_string(spec.n));

    std::vector<double> xs;
    xs.reserve(spec.n);
    if (spec.spacing == Spacing::Uniform) {
        append_uniform(xs, spec.lo, spec.hi, spec.n);
    } else {
        if (!(spec.lo > 0.0 && spec.hi < 1.0)) {
            throw DomainError("grid: endpoint-refined spacing needs 0 < lo < hi < 1");
        }
        const double width = std::min(1e-3, (spec.hi - spec.lo) / 4.0);
        const std::size_t m = spec.n / 4;
        for (double d : geometric(spec.lo, spec.lo + width, m)) xs.push_back(d);
        append_uniform(xs, spec.lo + width, spec.hi - width, spec.n - 2 * m);
        const double gap = 1.0 - spec.hi;
        auto right = geometric(gap, gap + width, m);
        for (auto it = right.rbegin(); it != right.rend(); ++it) xs.push_back(1.0 - *it);
        std::sort(xs.begin(), xs.end());
        xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    }
    return xs;
}

}  // namespace carlson
