#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "carlson/grid.hpp"

namespace carlson {

/// Outcome of checking one claim over a grid.
///
/// worst_margin is the signed margin (positive = satisfied) at the sample
/// whose margin is smallest relative to its own tolerance, so
/// passed == (worst_margin > -tolerance) for pointwise claims. Existence
/// claims (a witness must be found) require worst_margin > +tolerance.
struct VerificationReport {
    std::string claim_id;
    bool passed = true;
    std::size_t samples = 0;
    double worst_margin = 0.0;
    double worst_x = 0.0;
    double tolerance = 0.0;
    std::string notes;
};

/// One pointwise sample: margin and the tolerance it is judged against.
struct Sample {
    double margin;
    double tolerance;
};

/// Folds pointwise samples into a report. Order-independent: ties in
/// margin/tolerance break toward the smaller abscissa.
class MarginAccumulator {
public:
    void add(double x, Sample s);
    void merge(const MarginAccumulator& other);
    VerificationReport finish(std::string claim_id, std::string notes = {}) const;

    bool empty() const { return samples_ == 0; }
    std::size_t samples() const { return samples_; }

private:
    std::size_t samples_ = 0;
    bool have_ = false;
    double scaled_ = 0.0;
    double margin_ = 0.0;
    double tol_ = 0.0;
    double x_ = 0.0;
};

/// Containment of arccos x by bound_pair(a, x), orientation per regime.
VerificationReport verify_bounds(double a, const GridSpec& grid);

/// Forward-difference signs of F_a over the grid against classify_regime(a):
/// one sign for the monotone regimes, exactly one − to + change otherwise.
VerificationReport verify_monotonicity(double a, const GridSpec& grid);

/// Cells [x_i, x_j] in which significant forward differences of F_a switch
/// sign, in increasing x. Differences within 4 ulp count as zero.
std::vector<std::pair<double, double>> sign_change_cells(double a, const GridSpec& grid);

/// Endpoint limits π(1+a)/2 and 2+√2·a approached monotonically along
/// eps_list, to within 10⁻⁶ at the last eps, and grid extrema of F_a
/// converging to the constants the regime calls best possible.
VerificationReport verify_limits_and_sharpness(double a, const std::vector<double>& eps_list);

std::vector<double> default_eps_list();

enum class LowerCandidate { ThresholdPair, Carlson, Root3, Lambda };
enum class UpperCandidate { ThresholdPair, Carlson, Best };

struct DominanceRow {
    double x;
    LowerCandidate best_lower;
    UpperCandidate best_upper;
};

struct DominanceTable {
    VerificationReport lambda_dominates;   // λ-lower ≥ Carlson and (1+√3) lowers
    VerificationReport non_inclusion;      // λ-lower vs threshold lower, both orders
    VerificationReport upper_dominates;    // best upper ≤ threshold and Carlson uppers
    std::optional<double> crossover;       // λ-lower = threshold lower
    std::size_t lower_wins[4] = {0, 0, 0, 0};
    std::size_t upper_wins[3] = {0, 0, 0};
    std::vector<DominanceRow> rows;        // filled only when requested
};

DominanceTable compare_bounds(const GridSpec& grid, bool keep_rows = false);

std::string_view to_string(LowerCandidate c);
std::string_view to_string(UpperCandidate c);

/// Entry of the static claim registry.
struct Claim {
    std::string id;
    std::string description;
    std::vector<double> default_shapes;  // empty for claims without a shape parameter
    std::function<VerificationReport(const std::vector<double>& shapes, const GridSpec& grid)> run;

    bool parametric() const { return !default_shapes.empty(); }
};

const std::vector<Claim>& claim_registry();

const Claim* find_claim(const std::string& id);

/// Runs a claim, substituting `shapes` for its defaults when given and the
/// claim is parametric.
VerificationReport run_claim(const Claim& claim, const GridSpec& grid,
                             const std::optional<std::vector<double>>& shapes = std::nullopt);

}  // namespace carlson
