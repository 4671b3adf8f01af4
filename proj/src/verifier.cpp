#include "carlson/verifier.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <type_traits>

#include "carlson/analysis.hpp"
#include "carlson/core_bounds.hpp"
#include "carlson/errors.hpp"
#include "carlson/sharp_family.hpp"

namespace carlson {

// ---------------------------------------------------------------------------
// Reduction

void MarginAccumulator::add(double x, Sample s) {
    ++samples_;
    const double scaled = s.margin / s.tolerance;
    if (!have_ || scaled < scaled_ || (scaled == scaled_ && x < x_)) {
        have_ = true;
        scaled_ = scaled;
        margin_ = s.margin;
        tol_ = s.tolerance;
        x_ = x;
    }
}

void MarginAccumulator::merge(const MarginAccumulator& other) {
    if (!other.have_) return;
    const std::size_t total = samples_ + other.samples_;
    if (!have_ || other.scaled_ < scaled_ || (other.scaled_ == scaled_ && other.x_ < x_)) {
        *this = other;
    }
    samples_ = total;
}

VerificationReport MarginAccumulator::finish(std::string claim_id, std::string notes) const {
    VerificationReport r;
    r.claim_id = std::move(claim_id);
    r.samples = samples_;
    r.notes = std::move(notes);
    if (!have_) {
        r.passed = false;
        r.notes += r.notes.empty() ? "no samples" : "; no samples";
        return r;
    }
    r.worst_margin = margin_;
    r.worst_x = x_;
    r.tolerance = tol_;
    r.passed = margin_ > -tol_;
    return r;
}

namespace {

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(10);
    os << v;
    return os.str();
}

// Worst-of merge over several reports; all must pass.
VerificationReport combine(const std::string& id, const std::vector<VerificationReport>& parts) {
    VerificationReport out;
    out.claim_id = id;
    bool have = false;
    double worst_scaled = 0.0;
    for (const auto& p : parts) {
        out.samples += p.samples;
        out.passed = out.passed && p.passed;
        if (!out.notes.empty()) out.notes += " | ";
        out.notes += p.notes;
        const double scaled = p.tolerance > 0.0 ? p.worst_margin / p.tolerance : p.worst_margin;
        if (!have || scaled < worst_scaled || (scaled == worst_scaled && p.worst_x < out.worst_x)) {
            have = true;
            worst_scaled = scaled;
            out.worst_margin = p.worst_margin;
            out.worst_x = p.worst_x;
            out.tolerance = p.tolerance;
        }
    }
    if (!have) out.passed = false;
    return out;
}


template <typename Lower, typename Upper>
VerificationReport bracket_report(const std::string& id, const std::vector<double>& xs, Lower lower,
                                  Upper upper, std::string notes) {
    MarginAccumulator acc;
    for (double x : xs) {
        const double ac = arccos_stable(x);
        double margin = std::numeric_limits<double>::infinity();
        if constexpr (!std::is_same_v<Lower, std::nullptr_t>) margin = std::min(margin, ac - lower(x));
        if constexpr (!std::is_same_v<Upper, std::nullptr_t>) margin = std::min(margin, upper(x) - ac);
        acc.add(x, {margin, fp_tolerance(ac)});
    }
    return acc.finish(id, std::move(notes));
}

std::string shape_note(double a) {
    return "a=" + fmt(a) + " (" + std::string(to_string(classify_regime(a))) + ")";
}

enum class Side { Both, Lower, Upper };

VerificationReport bound_side_report(const std::string& id, double a, const std::vector<double>& xs,
                                     Side side) {
    const double cl = lower_constant(a);
    const double cu = upper_constant(a);
    auto lo = [&](double x) { return bound_template(cl, a, x); };
    auto up = [&](double x) { return bound_template(cu, a, x); };
    std::string notes = shape_note(a) + ", c_lower=" + fmt(cl) + ", c_upper=" + fmt(cu);
    switch (side) {
        case Side::Lower: return bracket_report(id, xs, lo, nullptr, notes);
        case Side::Upper: return bracket_report(id, xs, nullptr, up, notes);
        case Side::Both: break;
    }
    return bracket_report(id, xs, lo, up, notes);
}

std::vector<double> family_values(double a, const std::vector<double>& xs) {
    std::vector<double> f(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) f[i] = family_value(a, xs[i]);
    return f;
}

double diff_tolerance(double f0, double f1) {
    return fp_tolerance(std::max(std::fabs(f0), std::fabs(f1)));
}

int significant_sign(double d, double tol) {
    if (d > tol) return 1;
    if (d < -tol) return -1;
    return 0;
}

struct SignChange {
    std::size_t last_before;  // index of last significant difference before the change
    std::size_t first_after;  // index of first significant difference after it
};

std::vector<SignChange> sign_changes(const std::vector<double>& f) {
    std::vector<SignChange> out;
    int prev = 0;
    std::size_t prev_idx = 0;
    for (std::size_t i = 0; i + 1 < f.size(); ++i) {
        const int s = significant_sign(f[i + 1] - f[i], diff_tolerance(f[i], f[i + 1]));
        if (s == 0) continue;
        if (prev != 0 && s != prev) out.push_back({prev_idx, i});
        prev = s;
        prev_idx = i;
    }
    return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Engine operations

VerificationReport verify_bounds(double a, const GridSpec& grid) {
    if (!(a > -1.0)) throw DomainError("verify_bounds: a must be > -1, got " + fmt(a));
    return bound_side_report("bounds", a, make_grid(grid), Side::Both);
}

std::vector<std::pair<double, double>> sign_change_cells(double a, const GridSpec& grid) {
    const auto xs = make_grid(grid);
    const auto f = family_values(a, xs);
    std::vector<std::pair<double, double>> cells;
    for (const auto& c : sign_changes(f)) cells.emplace_back(xs[c.last_before], xs[c.first_after + 1]);
    return cells;
}

VerificationReport verify_monotonicity(double a, const GridSpec& grid) {
    if (!std::isfinite(a)) throw DomainError("verify_monotonicity: a must be finite");
    const auto xs = make_grid(grid);
    const auto f = family_values(a, xs);
    const Regime regime = classify_regime(a);
    std::string notes = shape_note(a);

    if (regime != Regime::InteriorMinimum) {
        const double sign = regime == Regime::Increasing ? 1.0 : -1.0;
        MarginAccumulator acc;
        for (std::size_t i = 0; i + 1 < f.size(); ++i) {
            acc.add(xs[i], {sign * (f[i + 1] - f[i]), diff_tolerance(f[i], f[i + 1])});
        }
        return acc.finish("monotonicity", notes);
    }

    const auto changes = sign_changes(f);
    const bool falling_then_rising =
        changes.size() == 1 && f[changes[0].last_before + 1] < f[changes[0].last_before];
    if (!falling_then_rising) {
        VerificationReport r;
        r.claim_id = "monotonicity";
        r.passed = false;
        r.samples = f.size() - 1;
        r.worst_margin = -1.0;
        r.worst_x = changes.empty() ? xs.front() : xs[changes[0].first_after];
        r.tolerance = 0.0;
        r.notes = notes + "; found " + std::to_string(changes.size()) +
                  " significant sign change(s), expected exactly one from - to +";
        return r;
    }

    const std::size_t split = changes[0].first_after;
    MarginAccumulator acc;
    for (std::size_t i = 0; i + 1 < f.size(); ++i) {
        const double d = f[i + 1] - f[i];
        acc.add(xs[i], {i < split ? -d : d, diff_tolerance(f[i], f[i + 1])});
    }
    notes += "; sign change in [" + fmt(xs[changes[0].last_before]) + ", " +
             fmt(xs[changes[0].first_after + 1]) + "]";
    return acc.finish("monotonicity", notes);
}

std::vector<double> default_eps_list() {
    return {1e-4, 1e-5, 1e-6, 1e-7, 1e-8, 1e-9, 1e-10, 1e-11, 1e-12};
}

VerificationReport verify_limits_and_sharpness(double a, const std::vector<double>& eps_list) {
    if (!(a > -1.0)) throw DomainError("verify_limits_and_sharpness: a must be > -1, got " + fmt(a));
    if (eps_list.empty()) throw DomainError("verify_limits_and_sharpness: eps_list is empty");
    for (std::size_t i = 0; i < eps_list.size(); ++i) {
        if (!(eps_list[i] > 0.0 && eps_list[i] < 0.5) || (i > 0 && !(eps_list[i] < eps_list[i - 1]))) {
            throw DomainError("verify_limits_and_sharpness: eps_list must decrease within (0, 0.5)");
        }
    }

    const double left = left_limit(a);
    const double right = right_limit(a);
    MarginAccumulator acc;

    auto approach = [&](double limit, auto point) {
        const double tol = fp_tolerance(limit);
        double prev_err = std::numeric_limits<double>::infinity();
        for (double eps : eps_list) {
            const double x = point(eps);
            const double err = std::fabs(family_value(a, x) - limit);
            if (std::isfinite(prev_err)) acc.add(x, {prev_err - err, tol});
            prev_err = err;
        }
        acc.add(point(eps_list.back()), {1e-6 - prev_err, tol});
    };
    approach(left, [](double eps) { return eps; });
    approach(right, [](double eps) { return 1.0 - eps; });

    // Grid extrema against the constants each regime calls best possible.
    const double eps = eps_list.back();
    const auto xs = make_grid(GridSpec::refined(100'000, eps, 1.0 - eps));
    const auto f = family_values(a, xs);
    const auto [min_it, max_it] = std::minmax_element(f.begin(), f.end());
    const double fmin = *min_it;
    const double fmax = *max_it;
    const double xmin = xs[static_cast<std::size_t>(min_it - f.begin())];
    const double xmax = xs[static_cast<std::size_t>(max_it - f.begin())];

    const Regime regime = classify_regime(a);
    const double sup = regime == Regime::Increasing ? right
                       : regime == Regime::Decreasing ? left
                                                      : std::max(left, right);
    acc.add(xmax, {sup - fmax, fp_tolerance(sup)});
    acc.add(xmax, {1e-4 - std::fabs(sup - fmax), fp_tolerance(sup)});
    if (regime == Regime::InteriorMinimum) {
        const double floor = 8.0 * (1.0 - 2.0 / (a * a));
        acc.add(xmin, {fmin - floor, fp_tolerance(floor)});
    } else {
        const double inf = regime == Regime::Increasing ? left : right;
        acc.add(xmin, {fmin - inf, fp_tolerance(inf)});
        acc.add(xmin, {1e-4 - std::fabs(fmin - inf), fp_tolerance(inf)});
    }

    return acc.finish("limits", shape_note(a) + ", left limit " + fmt(left) + ", right limit " +
                                    fmt(right) + ", grid min " + fmt(fmin) + ", grid max " + fmt(fmax));
}

std::string_view to_string(LowerCandidate c) {
    switch (c) {
        case LowerCandidate::ThresholdPair: return "threshold";
        case LowerCandidate::Carlson: return "carlson";
        case LowerCandidate::Root3: return "root3";
        case LowerCandidate::Lambda: return "lambda";
    }
    return "?";
}

std::string_view to_string(UpperCandidate c) {
    switch (c) {
        case UpperCandidate::ThresholdPair: return "threshold";
        case UpperCandidate::Carlson: return "carlson";
        case UpperCandidate::Best: return "best";
    }
    return "?";
}

DominanceTable compare_bounds(const GridSpec& grid, bool keep_rows) {
    const auto xs = make_grid(grid);
    DominanceTable table;
    MarginAccumulator item1;
    MarginAccumulator item3;

    double above = -std::numeric_limits<double>::infinity();  // max λ-lower − threshold lower
    double below = -std::numeric_limits<double>::infinity();  // max threshold lower − λ-lower
    double above_x = 0.0, below_x = 0.0, above_tol = 0.0, below_tol = 0.0;
    int prev_sign = 0;
    std::size_t crossings = 0;
    double cross_lo = 0.0, cross_hi = 0.0;
    double prev_x = 0.0;

    if (keep_rows) table.rows.reserve(xs.size());
    for (double x : xs) {
        const double ac = arccos_stable(x);
        const double tol = fp_tolerance(ac);
        const Bracket t = threshold_pair(x);
        const Bracket c = carlson_pair(x);
        const double r3 = root3_lower_bound(x);
        const double lam = lambda_lower_bound(x);
        const double best_up = best_upper_bound(x);

        item1.add(x, {std::min(lam - c.lower, lam - r3), tol});
        item3.add(x, {std::min(t.upper - best_up, c.upper - best_up), tol});

        const double d = lam - t.lower;
        if (d > above) { above = d; above_x = x; above_tol = tol; }
        if (-d > below) { below = -d; below_x = x; below_tol = tol; }
        const int s = significant_sign(d, tol);
        if (s != 0) {
            if (prev_sign != 0 && s != prev_sign) {
                if (crossings == 0) { cross_lo = prev_x; cross_hi = x; }
                ++crossings;
            }
            prev_sign = s;
            prev_x = x;
        }

        const double lowers[4] = {t.lower, c.lower, r3, lam};
        const double uppers[3] = {t.upper, c.upper, best_up};
        const auto li = static_cast<std::size_t>(std::max_element(lowers, lowers + 4) - lowers);
        const auto ui = static_cast<std::size_t>(std::min_element(uppers, uppers + 3) - uppers);
        ++table.lower_wins[li];
        ++table.upper_wins[ui];
        if (keep_rows) {
            table.rows.push_back({x, static_cast<LowerCandidate>(li), static_cast<UpperCandidate>(ui)});
        }
    }

    table.lambda_dominates = item1.finish("rem4-item1", "lambda lower >= carlson and root3 lowers");
    table.upper_dominates = item3.finish("rem4-item3", "best upper <= threshold and carlson uppers");

    VerificationReport& ni = table.non_inclusion;
    ni.claim_id = "rem4-item2";
    ni.samples = xs.size();
    const bool above_weaker = above <= below;
    ni.worst_margin = above_weaker ? above : below;
    ni.worst_x = above_weaker ? above_x : below_x;
    ni.tolerance = above_weaker ? above_tol : below_tol;
    ni.passed = ni.worst_margin > ni.tolerance;
    ni.notes = "lambda lower above threshold lower by up to " + fmt(above) + " (x=" + fmt(above_x) +
               "), below by up to " + fmt(below) + " (x=" + fmt(below_x) + ")";
    if (crossings > 0) {
        table.crossover = lower_crossover(cross_lo, cross_hi, 1e-10);
        ni.notes += "; " + std::to_string(crossings) + " crossing(s), first at x=" +
                    fmt(*table.crossover);
    }
    return table;
}

// ---------------------------------------------------------------------------
// Claim registry

namespace {

constexpr double kHalfLo = 1e-12;

VerificationReport per_shape(const std::string& id, const std::vector<double>& shapes,
                             const std::function<VerificationReport(double)>& one) {
    std::vector<VerificationReport> parts;
    parts.reserve(shapes.size());
    for (double a : shapes) parts.push_back(one(a));
    return combine(id, parts);
}

VerificationReport unique_min_claim(const std::string& id, double a, const GridSpec& grid) {
    auto r = verify_monotonicity(a, grid);
    r.claim_id = id;
    if (classify_regime(a) != Regime::InteriorMinimum) return r;
    const auto cells = sign_change_cells(a, grid);
    const MinimumResult m = find_minimum(a);
    if (cells.size() == 1) {
        const bool inside = m.x0 >= cells[0].first && m.x0 <= cells[0].second;
        r.notes += "; minimizer x0=" + fmt(m.x0) + (inside ? " inside" : " OUTSIDE") + " that cell";
        if (!inside) {
            r.passed = false;
            r.worst_margin = -1.0;
            r.worst_x = m.x0;
            r.tolerance = 0.0;
        }
    }
    return r;
}

VerificationReport min_value_claim(const std::string& id, double a) {
    const MinimumResult m = find_minimum(a);
    MarginAccumulator acc;
    const double floor = min_value_lower(a);
    const double tol = fp_tolerance(m.f_min);
    acc.add(m.x0, {1e-12 - m.residual, fp_tolerance(1e-12)});
    acc.add(m.x0, {m.f_min - floor, tol});
    acc.add(m.x0, {std::min(left_limit(a), right_limit(a)) - m.f_min, tol});
    acc.add(m.x0, {1e-10 - std::fabs(stationary_value(a, m.x0) - m.f_min), tol});
    acc.add(m.x0, {min_value_step_margin(a, 100'000), fp_tolerance(floor)});
    return acc.finish(id, shape_note(a) + ", x0=" + fmt(m.x0) + ", F(x0)=" + fmt(m.f_min) +
                              ", 8(1-2/a^2)=" + fmt(floor) + ", residual=" + fmt(m.residual));
}

VerificationReport maximizer_claim(const std::string& id) {
    MarginAccumulator acc;
    constexpr std::size_t kXs = 100;
    constexpr std::size_t kShapes = 10'000;
    for (std::size_t i = 0; i < kXs; ++i) {
        const double x = (static_cast<double>(i) + 0.5) / kXs;
        const double opt = optimal_shape(x);
        const double best = shape_weight(opt, x);
        const double tol = fp_tolerance(best);
        for (std::size_t j = 0; j < kShapes; ++j) {
            const double a = kIncreasingThreshold + (kDecreasingThreshold - kIncreasingThreshold) *
                                                        (static_cast<double>(j) + 0.5) / kShapes;
            acc.add(x, {best - shape_weight(a, x), tol});
        }
        acc.add(x, {-std::fabs(max_shape_weight(x) - best), fp_tolerance(best, 8)});
        acc.add(x, {std::min(opt - kOnePlusSqrt3, kDecreasingThreshold - opt), fp_tolerance(opt)});
    }
    acc.add(kHalfLo, {1e-8 - std::fabs(optimal_shape(kHalfLo) - kOnePlusSqrt3), fp_tolerance(kOnePlusSqrt3)});
    return acc.finish(id, "optimal shape 2*sqrt(2)*lambda(x) maximizes the lower-bound weight over a 1e4-point shape grid at 100 x");
}

VerificationReport proof_limits_claim(const std::string& id) {
    MarginAccumulator acc;
    auto near = [&](double x, double value, double target, double within) {
        acc.add(x, {within - std::fabs(value - target), fp_tolerance(target)});
    };
    const double x0 = 1e-10;
    const double x1 = 1.0 - 1e-12;
    for (double a : {0.0, 1.0, 3.0}) {
        near(x0, derivative_kernel(a, x0), ((kPi - 4.0) * a + 2.0 * (kPi - 2.0)) / (2.0 * (a + 2.0)), 1e-5);
        near(x1, derivative_kernel(a, x1), 0.0, 1e-5);
        near(x1, scaled_derivative_kernel(a, x1), 0.0, 1e-5);
    }
    near(x0, slope_threshold(x0), 8.0 / kPi, 1e-5);
    near(x1, slope_threshold(x1), kTwoSqrt2, 1e-5);
    near(x1, threshold_slope_factor(x1), 0.0, 1e-5);
    const RootPair r0 = slope_factor_roots(kHalfLo);
    const RootPair r1 = slope_factor_roots(x1);
    near(kHalfLo, r0.low, (1.0 - std::sqrt(17.0)) / 2.0, 1e-6);
    near(kHalfLo, r0.high, (1.0 + std::sqrt(17.0)) / 2.0, 1e-6);
    near(x1, r1.low, -kSqrt2, 1e-6);
    near(x1, r1.high, kTwoSqrt2, 1e-6);
    for (std::size_t i = 0; i < 100; ++i) {
        const double x = (static_cast<double>(i) + 0.5) / 100.0;
        const RootPair r = slope_factor_roots(x);
        near(x, kernel_slope_factor(r.high, x), 0.0, 1e-10);
        near(x, kernel_slope_factor(r.low, x), 0.0, 1e-10);
    }
    return acc.finish(id, "endpoint limits of the derivative kernels, slope threshold and slope-factor roots");
}

VerificationReport proof_signs_claim(const std::string& id, const GridSpec& grid) {
    const auto xs = make_grid(grid);
    MarginAccumulator acc;

    const double root17 = (1.0 + std::sqrt(17.0)) / 2.0;
    for (double x : xs) {
        const double u = std::sqrt(1.0 + x);
        for (double a : {-3.0, -2.0, kTwoSqrt2, 3.0, 4.0}) {
            acc.add(x, {kernel_slope_factor(a, x), fp_tolerance(a * a * u)});
        }
        for (double a : {-kSqrt2, 0.0, 1.0, root17}) {
            acc.add(x, {-kernel_slope_factor(a, x), fp_tolerance(std::max(a * a * u, 4.0 * u))});
        }
        const double ac = arccos_stable(x);
        acc.add(x, {threshold_slope_factor(x), fp_tolerance(ac)});
        for (double a : {0.0, 1.0, 8.0 / kPi}) {
            acc.add(x, {scaled_derivative_kernel(a, x), fp_tolerance((a * u + 2.0) * ac)});
        }
        for (double a : {kTwoSqrt2, 3.0}) {
            acc.add(x, {-scaled_derivative_kernel(a, x), fp_tolerance((a * u + 2.0) * ac)});
        }
    }

    for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
        const RootPair r0 = slope_factor_roots(xs[i]);
        const RootPair r1 = slope_factor_roots(xs[i + 1]);
        acc.add(xs[i], {r1.low - r0.low, fp_tolerance(r0.low)});
        acc.add(xs[i], {r1.high - r0.high, fp_tolerance(r0.high)});
        const double p0 = slope_threshold(xs[i]);
        const double p1 = slope_threshold(xs[i + 1]);
        acc.add(xs[i], {p1 - p0, fp_tolerance(p1)});
        const double q0 = threshold_slope_factor(xs[i]);
        const double q1 = threshold_slope_factor(xs[i + 1]);
        acc.add(xs[i], {q0 - q1, fp_tolerance(arccos_stable(xs[i]))});
    }

    // Sign of F_a differences against the sign of the derivative kernel.
    const auto coarse = make_grid(GridSpec::uniform(1e-4, 1.0 - 1e-4, 10'000));
    for (double a : {0.0, kIncreasingThreshold, 2.7, kTwoSqrt2, 4.0}) {
        for (std::size_t i = 0; i + 1 < coarse.size(); ++i) {
            const double g0 = derivative_kernel(a, coarse[i]);
            const double g1 = derivative_kernel(a, coarse[i + 1]);
            const double tol = fp_tolerance(arccos_stable(coarse[i]));
            if ((g0 > 0.0) != (g1 > 0.0) || std::fabs(g0) <= tol || std::fabs(g1) <= tol) continue;
            const double f0 = family_value(a, coarse[i]);
            const double f1 = family_value(a, coarse[i + 1]);
            if (std::fabs(f1 - f0) <= diff_tolerance(f0, f1)) continue;
            const bool agree = (f1 > f0) == (g0 > 0.0);
            const double mag = std::min(std::fabs(g0), std::fabs(g1));
            acc.add(coarse[i], {agree ? mag : -mag, tol});
        }
    }
    return acc.finish(id, "sign regimes of the slope factor and scaled kernel, monotone roots and slope threshold, positive decreasing threshold slope factor, derivative-sign consistency");
}

std::vector<Claim> build_registry() {
    std::vector<Claim> reg;
    const std::vector<double> increasing = {-3.0, -0.5, 0.0, 1.0, 2.0, kIncreasingThreshold};
    const std::vector<double> bound_increasing = {-0.5, 0.0, 1.0, 2.0, kIncreasingThreshold};
    const std::vector<double> decreasing = {kTwoSqrt2, 3.0, 4.0, 5.0};
    const std::vector<double> middle = {2.7, 2.75, 2.8};

    reg.push_back({"carlson-eq1-lower", "6*sqrt(1-x)/(2*sqrt(2)+sqrt(1+x)) < arccos x", {},
                   [](const std::vector<double>&, const GridSpec& g) {
                       return bracket_report("carlson-eq1-lower", make_grid(g),
                                             [](double x) { return carlson_pair(x).lower; }, nullptr,
                                             "Carlson lower bound, constant 6");
                   }});
    reg.push_back({"thm1-increasing", "F_a strictly increasing for a <= 2(pi-2)/(4-pi)", increasing,
                   [](const std::vector<double>& as, const GridSpec& g) {
                       return per_shape("thm1-increasing", as, [&](double a) { return verify_monotonicity(a, g); });
                   }});
    reg.push_back({"thm1-decreasing", "F_a strictly decreasing for a >= 2*sqrt(2)", decreasing,
                   [](const std::vector<double>& as, const GridSpec& g) {
                       return per_shape("thm1-decreasing", as, [&](double a) { return verify_monotonicity(a, g); });
                   }});
    reg.push_back({"thm1-unique-min", "F_a has a unique interior minimum in the middle regime", middle,
                   [](const std::vector<double>& as, const GridSpec& g) {
                       return per_shape("thm1-unique-min", as,
                                        [&](double a) { return unique_min_claim("thm1-unique-min", a, g); });
                   }});
    reg.push_back({"thm2-eq5-lower", "pi(1+a)/2 * sqrt(1-x)/(a+sqrt(1+x)) < arccos x", bound_increasing,
                   [](const std::vector<double>& as, const GridSpec& g) {
                       const auto xs = make_grid(g);
                       return per_shape("thm2-eq5-lower", as, [&](double a) {
                           return bound_side_report("thm2-eq5-lower", a, xs, Side::Lower);
                       });
                   }});
    reg.push_back({"thm2-eq5-upper", "arccos x < (2+sqrt(2)a) * sqrt(1-x)/(a+sqrt(1+x))", bound_increasing,
                   [](const std::vector<double>& as, const GridSpec& g) {
                       const auto xs = make_grid(g);
                       return per_shape("thm2-eq5-upper", as, [&](double a) {
                           return bound_side_report("thm2-eq5-upper", a, xs, Side::Upper);
                       });
                   }});
    reg.push_back({"thm2-eq5-reversed", "reversed bracket for a >= 2*sqrt(2)", {kTwoSqrt2, 3.0, 5.0},
                   [](const std::vector<double>& as, const GridSpec& g) {
                       const auto xs = make_grid(g);
                       return per_shape("thm2-eq5-reversed", as, [&](double a) {
                           return bound_side_report("thm2-eq5-reversed", a, xs, Side::Both);
                       });
                   }});
    reg.push_back({"thm2-eq6-middle", "8(1-2/a^2) lower and max-constant upper in the middle regime", middle,
                   [](const std::vector<double>& as, const GridSpec& g) {
                       const auto xs = make_grid(g);
                       return per_shape("thm2-eq6-middle", as, [&](double a) {
                           return bound_side_report("thm2-eq6-middle", a, xs, Side::Both);
                       });
                   }});
    reg.push_back({"thm2-best-constants", "endpoint limits pi(1+a)/2 and 2+sqrt(2)a are attained",
                   {-0.5, 0.0, 1.0, kIncreasingThreshold, kTwoSqrt2, 3.0, 5.0},
                   [](const std::vector<double>& as, const GridSpec&) {
                       return per_shape("thm2-best-constants", as, [&](double a) {
                           return verify_limits_and_sharpness(a, default_eps_list());
                       });
                   }});
    reg.push_back({"thm2-min-value", "interior minimum satisfies the stationarity equation and F(x0) >= 8(1-2/a^2)", middle,
                   [](const std::vector<double>& as, const GridSpec&) {
                       return per_shape("thm2-min-value", as,
                                        [&](double a) { return min_value_claim("thm2-min-value", a); });
                   }});
    reg.push_back({"rem2-eq7", "best-constant bracket at a = 2(pi-2)/(4-pi)", {},
                   [](const std::vector<double>&, const GridSpec& g) {
                       return bracket_report("rem2-eq7", make_grid(g),
                                             [](double x) { return threshold_pair(x).lower; },
                                             [](double x) { return threshold_pair(x).upper; },
                                             "pi^2 lower, threshold upper");
                   }});
    reg.push_back({"rem2-eq8", "Carlson bracket at a = 2*sqrt(2)", {},
                   [](const std::vector<double>&, const GridSpec& g) {
                       return bracket_report("rem2-eq8", make_grid(g),
                                             [](double x) { return carlson_pair(x).lower; },
                                             [](double x) { return carlson_pair(x).upper; },
                                             "constant 6 lower, (1/2+sqrt(2))pi upper");
                   }});
    reg.push_back({"rem3-eq9", "a = 1+sqrt(3) lower and best upper bracket", {},
                   [](const std::vector<double>&, const GridSpec& g) {
                       return bracket_report("rem3-eq9", make_grid(g), root3_lower_bound, best_upper_bound,
                                             "root3 lower, best upper");
                   }});
    reg.push_back({"rem3-eq10", "lambda lower bound < arccos x", {},
                   [](const std::vector<double>&, const GridSpec& g) {
                       return bracket_report("rem3-eq10", make_grid(g), lambda_lower_bound, nullptr,
                                             "lambda lower bound");
                   }});
    reg.push_back({"rem3-maximizer", "2*sqrt(2)*lambda(x) maximizes the lower-bound weight", {},
                   [](const std::vector<double>&, const GridSpec&) { return maximizer_claim("rem3-maximizer"); }});
    reg.push_back({"rem4-item1", "lambda lower dominates the Carlson and 1+sqrt(3) lowers", {},
                   [](const std::vector<double>&, const GridSpec& g) { return compare_bounds(g).lambda_dominates; }});
    reg.push_back({"rem4-item2", "lambda lower and pi^2 lower are not ordered", {},
                   [](const std::vector<double>&, const GridSpec& g) { return compare_bounds(g).non_inclusion; }});
    reg.push_back({"rem4-item3", "best upper beats the threshold and Carlson uppers", {},
                   [](const std::vector<double>&, const GridSpec& g) { return compare_bounds(g).upper_dominates; }});
    reg.push_back({"rem4-best-pair", "max(lambda lower, pi^2 lower) < arccos x < best upper", {},
                   [](const std::vector<double>&, const GridSpec& g) {
                       return bracket_report("rem4-best-pair", make_grid(g), best_lower, best_upper_bound,
                                             "combined best double inequality");
                   }});
    reg.push_back({"proof-limits", "endpoint limits of the proof's auxiliary functions", {},
                   [](const std::vector<double>&, const GridSpec&) { return proof_limits_claim("proof-limits"); }});
    reg.push_back({"proof-signs", "sign and monotonicity facts used by the monotonicity proof", {},
                   [](const std::vector<double>&, const GridSpec& g) { return proof_signs_claim("proof-signs", g); }});
    return reg;
}

}  // namespace

const std::vector<Claim>& claim_registry() {
    static const std::vector<Claim> registry = build_registry();
    return registry;
}

const Claim* find_claim(const std::string& id) {
    for (const auto& c : claim_registry()) {
        if (c.id == id) return &c;
    }
    return nullptr;
}

VerificationReport run_claim(const Claim& claim, const GridSpec& grid,
                             const std::optional<std::vector<double>>& shapes) {
    const std::vector<double>& as = (shapes && claim.parametric()) ? *shapes : claim.default_shapes;
    VerificationReport r = claim.run(as, grid);
    r.claim_id = claim.id;
    if (shapes && !claim.parametric()) r.notes += "; shape override ignored (claim has no shape parameter)";
    return r;
}

}  // namespace carlson
