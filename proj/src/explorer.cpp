#include "carlson/explorer.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "carlson/core_bounds.hpp"
#include "carlson/errors.hpp"

namespace carlson {

std::string_view to_string(Verdict v) {
    switch (v) {
        case Verdict::Increasing: return "Increasing";
        case Verdict::Decreasing: return "Decreasing";
        case Verdict::NonMonotone: return "NonMonotone";
        case Verdict::Undetermined: return "Undetermined";
    }
    return "?";
}

namespace {

void require_open_unit(double x, const char* op) {
    if (!(x > 0.0 && x < 1.0)) {
        throw DomainError(std::string(op) + ": x must lie in (0,1), got " + std::to_string(x));
    }
}

double numerator(double beta, double gamma, double x) {
    const double n = gamma + std::pow(1.0 + x, beta);
    if (n == 0.0) {
        throw SingularFamilyError("f_abc: gamma + (1+x)^beta vanishes at x = " + std::to_string(x));
    }
    return n;
}

}  // namespace

double f_abc(double alpha, double beta, double gamma, double x) {
    require_open_unit(x, "f_abc");
    return numerator(beta, gamma, x) / std::pow(1.0 - x, alpha) * arccos_stable(x);
}

double log_abs_f_abc(double alpha, double beta, double gamma, double x) {
    require_open_unit(x, "log_abs_f_abc");
    return std::log(std::fabs(numerator(beta, gamma, x))) - alpha * std::log1p(-x) +
           std::log(arccos_stable(x));
}

void check_nonsingular(double alpha, double beta, double gamma, double lo, double hi) {
    (void)alpha;
    // (1+x)^β is monotone in x, so the numerator vanishes on [lo, hi] iff −γ
    // lies between its endpoint values.
    const double p0 = std::pow(1.0 + lo, beta);
    const double p1 = std::pow(1.0 + hi, beta);
    if (-gamma >= std::min(p0, p1) && -gamma <= std::max(p0, p1)) {
        throw SingularFamilyError("gamma + (1+x)^beta vanishes on the scanned interval (gamma=" +
                                  std::to_string(gamma) + ", beta=" + std::to_string(beta) + ")");
    }
}

ScanClassification classify_abc(double alpha, double beta, double gamma, const GridSpec& grid) {
    if (!std::isfinite(alpha) || !std::isfinite(beta) || !std::isfinite(gamma)) {
        throw DomainError("classify_abc: alpha, beta, gamma must be finite");
    }
    const auto xs = make_grid(grid);
    check_nonsingular(alpha, beta, gamma, xs.front(), xs.back());

    ScanClassification out;
    out.alpha = alpha;
    out.beta = beta;
    out.gamma = gamma;

    // Relative forward differences; in log space the difference of log|F| is
    // already relative, and its sign flips when F < 0.
    const bool log_space = alpha > kLogSpaceAlpha;
    const double orientation = (log_space && numerator(beta, gamma, xs.front()) < 0.0) ? -1.0 : 1.0;
    std::vector<double> rel(xs.size() - 1);
    if (log_space) {
        double prev = log_abs_f_abc(alpha, beta, gamma, xs[0]);
        for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
            const double next = log_abs_f_abc(alpha, beta, gamma, xs[i + 1]);
            rel[i] = orientation * (next - prev);
            prev = next;
        }
    } else {
        double prev = f_abc(alpha, beta, gamma, xs[0]);
        for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
            const double next = f_abc(alpha, beta, gamma, xs[i + 1]);
            const double scale = std::max(std::fabs(prev), std::fabs(next));
            rel[i] = scale > 0.0 ? (next - prev) / scale : 0.0;
            prev = next;
        }
    }

    std::size_t ups = 0, downs = 0;
    double max_up = 0.0, max_down = 0.0;
    std::size_t max_up_i = 0, max_down_i = 0;
    double min_sig = 0.0;
    std::size_t min_sig_i = 0;
    bool have_sig = false;
    for (std::size_t i = 0; i < rel.size(); ++i) {
        const double d = rel[i];
        if (std::fabs(d) <= kSignThreshold) continue;
        if (d > 0.0) {
            ++ups;
            if (d > max_up) { max_up = d; max_up_i = i; }
        } else {
            ++downs;
            if (-d > max_down) { max_down = -d; max_down_i = i; }
        }
        if (!have_sig || std::fabs(d) < min_sig) {
            have_sig = true;
            min_sig = std::fabs(d);
            min_sig_i = i;
        }
    }
    if (ups > 0) out.rising_x = xs[max_up_i];
    if (downs > 0) out.falling_x = xs[max_down_i];

    if (ups > 0 && downs > 0) {
        out.verdict = Verdict::NonMonotone;
        const bool rising_majority = ups >= downs;
        out.evidence_x = rising_majority ? xs[max_down_i] : xs[max_up_i];
        out.margin = rising_majority ? max_down : max_up;
    } else if (ups > 0 || downs > 0) {
        out.verdict = ups > 0 ? Verdict::Increasing : Verdict::Decreasing;
        out.evidence_x = xs[min_sig_i];
        out.margin = min_sig;
    } else {
        out.verdict = Verdict::Undetermined;
        std::size_t imax = 0;
        for (std::size_t i = 1; i < rel.size(); ++i) {
            if (std::fabs(rel[i]) > std::fabs(rel[imax])) imax = i;
        }
        out.evidence_x = xs[imax];
        out.margin = std::fabs(rel[imax]);
    }
    return out;
}

std::vector<double> AxisRange::values() const {
    if (count == 0) throw DomainError("scan axis: count must be >= 1");
    if (!std::isfinite(lo) || !std::isfinite(hi)) throw DomainError("scan axis: range must be finite");
    if (count == 1) return {lo};
    std::vector<double> v(count);
    for (std::size_t i = 0; i < count; ++i) {
        v[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(count - 1);
    }
    v.back() = hi;
    return v;
}

std::vector<ScanClassification> scan_grid(const AxisRange& alpha, const AxisRange& beta,
                                          const AxisRange& gamma, const GridSpec& grid) {
    const auto as = alpha.values();
    const auto bs = beta.values();
    const auto gs = gamma.values();
    std::vector<ScanClassification> out;
    out.reserve(as.size() * bs.size() * gs.size());
    for (double a : as) {
        for (double b : bs) {
            for (double g : gs) {
                try {
                    out.push_back(classify_abc(a, b, g, grid));
                } catch (const std::exception& e) {
                    ScanClassification failed;
                    failed.alpha = a;
                    failed.beta = b;
                    failed.gamma = g;
                    failed.error = e.what();
                    out.push_back(std::move(failed));
                }
            }
        }
    }
    return out;
}

}  // namespace carlson
