// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <carlson/analysis.hpp>
#include <carlson/cli.hpp>
#include <carlson/core_bounds.hpp>
#include <carlson/errors.hpp>
#include <carlson/explorer.hpp>
#include <carlson/grid.hpp>
#include <carlson/report_io.hpp>
#include <carlson/sharp_family.hpp>
#include <carlson/verifier.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace carlson;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void fail_if(bool bad, const std::string& why) {
        if (bad) {
            pass = false;
            detail += (detail.empty() ? "" : "; ") + why;
        }
    }
    void note(const std::string& s) { detail += (detail.empty() ? "" : "; ") + s; }
};

std::string g(double v, int digits = 6) { return format_number(v, digits); }

int failures = 0;

void criterion(int id, const char* name, double budget_s, const std::function<Outcome()>& body) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o.pass = false;
        o.detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (budget_s > 0 && secs >= budget_s) {
        o.pass = false;
        o.note("over time budget " + g(budget_s) + " s");
    }
    if (!o.pass) ++failures;
    std::printf("[%s] %d %s (%.2f s): %s\n", o.pass ? "PASS" : "FAIL", id, name, secs, o.detail.c_str());
    std::fflush(stdout);
}

const GridSpec kGrid = GridSpec::refined(1'000'000);

// containment of arccos x by lo/up (either may be null) with the 4-ulp rule
struct Containment {
    std::size_t points = 0, violations = 0, strictly_positive = 0;
    double worst_scaled = INFINITY, worst_x = 0;
    double nonpositive_depth = 0;  // largest min(x, 1-x) among points with computed margin <= 0
};

Containment contain(const std::vector<double>& xs, const std::function<double(double)>& lo,
                    const std::function<double(double)>& up) {
    Containment c;
    for (double x : xs) {
        const double ac = arccos_stable(x);
        const double tol = fp_tolerance(ac);
        double m = INFINITY;
        if (lo) m = std::min(m, ac - lo(x));
        if (up) m = std::min(m, up(x) - ac);
        ++c.points;
        if (m > 0) ++c.strictly_positive;
        else c.nonpositive_depth = std::max(c.nonpositive_depth, std::min(x, 1 - x));
        if (!(m > -tol)) ++c.violations;
        if (m / tol < c.worst_scaled) c.worst_scaled = m / tol, c.worst_x = x;
    }
    return c;
}

std::string describe(const Containment& c) {
    return std::to_string(c.points) + " pts, " + std::to_string(c.violations) + " beyond 4 ulp, worst " +
           g(c.worst_scaled, 3) + " ulp-units at x=" + g(c.worst_x, 10);
}

}  // namespace

int main() {
    const auto xs = make_grid(kGrid);
    const double a_star = kIncreasingThreshold;

    criterion(1, "Carlson lower bound 6(1-x)^1/2/(2sqrt2+(1+x)^1/2) < arccos x", 5.0, [&] {
        Outcome o;
        auto c = contain(xs, [](double x) { return carlson_pair(x).lower; }, nullptr);
        o.fail_if(c.violations > 0, "violations");
        o.note(describe(c));
        o.note(std::to_string(c.strictly_positive) + " with computed margin > 0");
        if (c.strictly_positive < c.points) {
            o.note("margins <= 0 (within rounding) only where min(x,1-x) <= " + g(c.nonpositive_depth, 3));
        }
        return o;
    });

    criterion(2, "two-sided brackets per regime, 4 ulp", 30.0, [&] {
        Outcome o;
        for (double a : {-0.5, 0.0, 1.0, a_star}) {
            const double cl = kPi * (1 + a) / 2, cu = 2 + kSqrt2 * a;
            auto c = contain(xs, [&](double x) { return bound_template(cl, a, x); },
                             [&](double x) { return bound_template(cu, a, x); });
            o.fail_if(c.violations > 0, "a=" + g(a) + ": " + describe(c));
        }
        for (double a : {kTwoSqrt2, 3.0, 5.0}) {
            const double cl = 2 + kSqrt2 * a, cu = kPi * (1 + a) / 2;
            auto c = contain(xs, [&](double x) { return bound_template(cl, a, x); },
                             [&](double x) { return bound_template(cu, a, x); });
            o.fail_if(c.violations > 0, "reversed a=" + g(a) + ": " + describe(c));
        }
        for (double a : {2.3, 2.5, 2.7}) {
            const double cl = 8 * (1 - 2 / (a * a));
            auto c = contain(xs, [&](double x) { return bound_template(cl, a, x); }, nullptr);
            o.fail_if(c.violations > 0, "8(1-2/a^2) a=" + g(a) + ": " + describe(c));
        }
        if (o.pass) o.note("10 shapes x " + std::to_string(xs.size()) + " pts, no violation");
        return o;
    });

    criterion(3, "best-possible constants as endpoint limits", 0, [&] {
        Outcome o;
        double worst = 0;
        for (double a : {-0.5, 0.0, 1.0, a_star, kTwoSqrt2, 3.0, 5.0}) {
            double d0 = std::fabs(family_value(a, 1e-12) - kPi * (1 + a) / 2);
            double d1 = std::fabs(family_value(a, 1 - 1e-12) - (2 + kSqrt2 * a));
            o.fail_if(!(d0 < 1e-6 && d1 < 1e-6), "a=" + g(a) + " off by " + g(d0) + ", " + g(d1));
            worst = std::max({worst, d0, d1});
        }
        double six = family_value(kTwoSqrt2, 1 - 1e-12);
        double carl = family_value(kTwoSqrt2, 1e-12);
        o.fail_if(std::fabs(six - 6) >= 1e-6, "a=2sqrt2 right limit " + g(six, 12));
        o.fail_if(std::fabs(carl - (0.5 + kSqrt2) * kPi) >= 1e-6, "a=2sqrt2 left limit " + g(carl, 12));
        o.note("max deviation " + g(worst, 3) + "; a=2sqrt2 gives " + g(six, 10) + " and " + g(carl, 10));
        return o;
    });

    criterion(4, "monotonicity regimes and interior minimum", 0, [&] {
        Outcome o;
        for (double a : {-3.0, 0.0, 2.0, a_star, kTwoSqrt2, 4.0}) {
            auto r = verify_monotonicity(a, kGrid);
            o.fail_if(!r.passed, "monotone a=" + g(a) + ": " + r.notes);
        }
        for (double a : {2.3, 2.5, 2.7}) {
            auto cells = sign_change_cells(a, kGrid);
            o.fail_if(cells.size() != 1, "a=" + g(a) + ": " + std::to_string(cells.size()) +
                                             " difference sign changes (regime " +
                                             std::string(to_string(classify_regime(a))) + ")");
            MinimumResult m;
            try {
                m = find_minimum(a);
            } catch (const RegimeError& e) {
                o.fail_if(true, "find_minimum(" + g(a) + "): " + e.what());
                continue;
            }
            const int n = 10'000'000;
            double bx = 0, bf = INFINITY;
            for (int i = 1; i < n; ++i) {
                double x = static_cast<double>(i) / n;
                double f = family_value(a, x);
                if (f < bf) bf = f, bx = x;
            }
            double dx = std::fabs(m.x0 - bx), df = std::fabs(m.f_min - bf);
            o.fail_if(!(dx < 1e-6 && df < 1e-10), "a=" + g(a) + " dx0=" + g(dx) + " dF=" + g(df));
            o.note("a=" + g(a) + " x0=" + g(m.x0, 10) + " |dx0|=" + g(dx, 2) + " |dF|=" + g(df, 2));
        }
        return o;
    });

    criterion(5, "proof-apparatus limits", 0, [&] {
        Outcome o;
        for (double a : {0.0, 1.0, 3.0}) {
            double want = ((kPi - 4) * a + 2 * (kPi - 2)) / (2 * (a + 2));
            double d = std::fabs(derivative_kernel(a, 1e-10) - want);
            o.fail_if(d >= 1e-5, "g limit a=" + g(a) + " off by " + g(d));
        }
        double p0 = std::fabs(slope_threshold(1e-10) - 8 / kPi);
        double p1 = std::fabs(slope_threshold(1 - 1e-10) - kTwoSqrt2);
        o.fail_if(p0 >= 1e-5 || p1 >= 1e-5, "p endpoints off by " + g(p0) + ", " + g(p1));
        RootPair r0 = slope_factor_roots(1e-12), r1 = slope_factor_roots(1 - 1e-12);
        double e = std::max({std::fabs(r0.low - (1 - std::sqrt(17.0)) / 2),
                             std::fabs(r0.high - (1 + std::sqrt(17.0)) / 2), std::fabs(r1.low + kSqrt2),
                             std::fabs(r1.high - kTwoSqrt2)});
        o.fail_if(e >= 1e-6, "root limits off by " + g(e));
        double hmax = 0;
        for (int i = 0; i < 100; ++i) {
            double x = (i + 0.5) / 100;
            hmax = std::max(hmax, std::fabs(kernel_slope_factor(slope_factor_roots(x).high, x)));
        }
        o.fail_if(hmax >= 1e-10, "H(a2(x),x) up to " + g(hmax));
        o.note("root limits within " + g(e, 2) + ", max |H(a2(x),x)| " + g(hmax, 2) + " over 100 x");
        return o;
    });

    criterion(6, "dominance and non-inclusion of the sharp bounds", 0, [&] {
        Outcome o;
        DominanceTable t = compare_bounds(kGrid);
        o.fail_if(!t.lambda_dominates.passed, "lambda lower not dominant: " + g(t.lambda_dominates.worst_margin));
        o.fail_if(!t.upper_dominates.passed, "best upper not dominant: " + g(t.upper_dominates.worst_margin));
        o.fail_if(!t.non_inclusion.passed, "no witness of both orderings");
        o.fail_if(!t.crossover.has_value(), "no crossover");
        if (t.crossover) {
            double c = *t.crossover;
            auto d = [](double x) { return lambda_lower_bound(x) - threshold_pair(x).lower; };
            bool brackets = (d(c - 1e-10) < 0) != (d(c + 1e-10) < 0);
            o.fail_if(!brackets, "crossover not located to 1e-10");
            o.note("crossover x=" + g(c, 12) + ", lower winners threshold/lambda " +
                   std::to_string(t.lower_wins[0]) + "/" + std::to_string(t.lower_wins[3]));
        }
        return o;
    });

    criterion(7, "optimal shape 2sqrt2*lambda(x) maximizes the weight", 0, [&] {
        Outcome o;
        std::size_t beaten = 0;
        const int n = 10000;
        for (int i = 0; i < 100; ++i) {
            double x = (i + 0.5) / 100;
            double best = shape_weight(optimal_shape(x), x);
            for (int k = 1; k <= n; ++k) {
                double a = a_star + (kTwoSqrt2 - a_star) * k / (n + 1.0);
                if (shape_weight(a, x) > best + fp_tolerance(best)) ++beaten;
            }
        }
        o.fail_if(beaten > 0, std::to_string(beaten) + " grid shapes beat the optimum");
        double lim = optimal_shape(1e-12);
        o.fail_if(std::fabs(lim - kOnePlusSqrt3) >= 1e-8, "limit " + g(lim, 12));
        o.note("100 x times " + std::to_string(n) + " shapes; shape at x=1e-12 minus (1+sqrt3) = " +
               g(lim - kOnePlusSqrt3, 2));
        return o;
    });

    criterion(8, "three-parameter slice agrees with the regimes", 0, [&] {
        Outcome o;
        const auto grid = GridSpec::refined(100'000);
        std::mt19937_64 rng(20261018);
        std::uniform_real_distribution<double> dist(-4.0, 6.0);
        int checked = 0, agree = 0;
        while (checked < 50) {
            double gam = dist(rng);
            if (std::fabs(gam - a_star) < 1e-3 || std::fabs(gam - kTwoSqrt2) < 1e-3) continue;
            if (gam > -kSqrt2 - 1e-3 && gam < -1 + 1e-3) continue;  // numerator has a zero in (0,1)
            ++checked;
            Verdict v = classify_abc(0.5, 0.5, gam, grid).verdict;
            Regime r = classify_regime(gam);
            bool ok = (r == Regime::Increasing && v == Verdict::Increasing) ||
                      (r == Regime::Decreasing && v == Verdict::Decreasing) ||
                      (r == Regime::InteriorMinimum && v == Verdict::NonMonotone);
            agree += ok;
            o.fail_if(!ok, "gamma=" + g(gam, 10) + " -> " + std::string(to_string(v)));
        }
        o.note(std::to_string(agree) + "/50 agree");
        return o;
    });

    criterion(9, "verify --claims all", 120.0, [&] {
        Outcome o;
        std::ostringstream out, err;
        int code = cli::run({"verify", "--claims", "all", "--format", "json"}, out, err, false);
        auto doc = nlohmann::json::parse(out.str());
        std::size_t passed = 0;
        for (const auto& row : doc["rows"]) {
            if (row["passed"].get<bool>()) ++passed;
            else o.fail_if(true, row["claim_id"].get<std::string>() + " failed");
        }
        o.fail_if(code != 0, "exit status " + std::to_string(code));
        o.fail_if(doc["rows"].size() != claim_registry().size(), "missing claims");
        o.note(std::to_string(passed) + "/" + std::to_string(doc["rows"].size()) + " claims passed, exit " +
               std::to_string(code));
        return o;
    });

    std::printf("%d criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
