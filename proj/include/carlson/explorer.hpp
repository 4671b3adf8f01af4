#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "carlson/grid.hpp"

namespace carlson {

// Numerical scan of F_{α,β,γ}(x) = (γ + (1+x)^β)/(1−x)^α · arccos x.
// Verdicts are sampled evidence, never a proof of monotonicity.

enum class Verdict { Increasing, Decreasing, NonMonotone, Undetermined };

std::string_view to_string(Verdict v);

struct ScanClassification {
    double alpha = 0.0;
    double beta = 0.0;
    double gamma = 0.0;
    Verdict verdict = Verdict::Undetermined;
    // Increasing/Decreasing: where the weakest significant difference sits.
    // NonMonotone: strongest sample against the majority sign.
    double evidence_x = 0.0;
    // Relative size of the difference at evidence_x (log-space difference
    // when the family is scanned in log space).
    double margin = 0.0;
    std::optional<double> rising_x;   // a significant increase, when one was seen
    std::optional<double> falling_x;  // a significant decrease, when one was seen
    std::optional<std::string> error;  // set when the triple could not be scanned
};

/// Relative threshold below which a forward difference counts as zero.
inline constexpr double kSignThreshold = 1e-12;

/// α above which differences are taken on log|F|.
inline constexpr double kLogSpaceAlpha = 10.0;

/// Literal evaluation. Throws SingularFamilyError when γ + (1+x)^β = 0 at x,
/// DomainError when x ∉ (0,1).
double f_abc(double alpha, double beta, double gamma, double x);

/// log|F_{α,β,γ}(x)|, finite even when the power of (1−x) overflows.
double log_abs_f_abc(double alpha, double beta, double gamma, double x);

/// Throws SingularFamilyError when γ + (1+x)^β vanishes somewhere in [lo, hi].
void check_nonsingular(double alpha, double beta, double gamma, double lo, double hi);

ScanClassification classify_abc(double alpha, double beta, double gamma, const GridSpec& grid);

struct AxisRange {
    double lo;
    double hi;
    std::size_t count;  // count == 1 samples lo only

    std::vector<double> values() const;
};

/// Row-major (α outermost, γ innermost) scan. Per-triple failures are
/// recorded in that entry's `error`; the scan always completes.
std::vector<ScanClassification> scan_grid(const AxisRange& alpha, const AxisRange& beta,
                                          const AxisRange& gamma, const GridSpec& grid);

}  // namespace carlson
