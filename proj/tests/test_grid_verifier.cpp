#include <doctest.h>

#include <carlson/core_bounds.hpp>
#include <carlson/errors.hpp>
#include <carlson/grid.hpp>
#include <carlson/sharp_family.hpp>
#include <carlson/verifier.hpp>

#include <algorithm>
#include <cmath>
#include <set>

using namespace carlson;

TEST_CASE("make_grid uniform") {
    auto g = make_grid(GridSpec::uniform(0.25, 0.75, 3));
    REQUIRE(g.size() == 3);
    CHECK(g[0] == 0.25);
    CHECK(g[1] == 0.5);
    CHECK(g[2] == 0.75);

    auto two = make_grid(GridSpec::uniform(0.1, 0.9, 2));
    REQUIRE(two.size() == 2);
    CHECK(two.front() == 0.1);
    CHECK(two.back() == 0.9);

    CHECK_THROWS_AS(make_grid(GridSpec::uniform(0.1, 0.9, 1)), DomainError);
    CHECK_THROWS_AS(make_grid(GridSpec::uniform(0.9, 0.1, 10)), DomainError);
}

TEST_CASE("make_grid refined") {
    auto g = make_grid(GridSpec::refined(10000));
    CHECK(g.size() > 9000);
    CHECK(g.size() <= 10000);
    CHECK(g.front() == 1e-9);
    CHECK(g.back() == 1 - 1e-9);
    CHECK(std::is_sorted(g.begin(), g.end()));
    CHECK(std::adjacent_find(g.begin(), g.end()) == g.end());
    // geometric clustering at both ends
    auto near0 = std::count_if(g.begin(), g.end(), [](double x) { return x < 1e-3; });
    auto near1 = std::count_if(g.begin(), g.end(), [](double x) { return x > 1 - 1e-3; });
    CHECK(near0 > 2000);
    CHECK(near1 > 2000);
    CHECK(std::count_if(g.begin(), g.end(), [](double x) { return x < 1e-6; }) > 500);

    CHECK_THROWS_AS(make_grid(GridSpec::refined(100, 0.0, 0.5)), DomainError);
    CHECK_THROWS_AS(make_grid(GridSpec::refined(100, 0.5, 1.0)), DomainError);
}

TEST_CASE("MarginAccumulator") {
    MarginAccumulator acc;
    acc.add(0.1, {1e-3, 1e-16});
    acc.add(0.2, {-1e-17, 1e-16});
    acc.add(0.3, {5e-4, 1e-16});
    auto r = acc.finish("demo");
    CHECK(r.passed);
    CHECK(r.samples == 3);
    CHECK(r.worst_x == 0.2);
    CHECK(r.worst_margin == -1e-17);

    MarginAccumulator other;
    other.add(0.05, {-2e-16, 1e-16});
    acc.merge(other);
    auto r2 = acc.finish("demo");
    CHECK_FALSE(r2.passed);
    CHECK(r2.worst_x == 0.05);
    CHECK(r2.samples == 4);

    // merge order does not matter, ties go to the smaller x
    MarginAccumulator p, q;
    p.add(0.7, {-1.0, 1.0});
    q.add(0.3, {-1.0, 1.0});
    MarginAccumulator pq = p, qp = q;
    pq.merge(q);
    qp.merge(p);
    CHECK(pq.finish("t").worst_x == 0.3);
    CHECK(qp.finish("t").worst_x == 0.3);
}

TEST_CASE("verify_bounds and report soundness") {
    auto grid = GridSpec::refined(100000);
    for (double a : {-0.5, 0.0, 1.0, kIncreasingThreshold, 2.7, kTwoSqrt2, 3.0, 5.0}) {
        auto r = verify_bounds(a, grid);
        CAPTURE(a);
        CHECK(r.passed);
        CHECK(r.samples > 0);
        CHECK(r.worst_margin > -r.tolerance);
        // worst_x is a grid point whose margin is reproducible
        auto pts = make_grid(grid);
        CHECK(std::binary_search(pts.begin(), pts.end(), r.worst_x));
        BoundPair b = bound_pair(a, r.worst_x);
        double ac = arccos_stable(r.worst_x);
        double m = std::min(ac - b.lower, b.upper - ac);
        CHECK(m == doctest::Approx(r.worst_margin).epsilon(1e-6));
    }
}

TEST_CASE("verify_bounds is deterministic") {
    auto grid = GridSpec::refined(50000);
    auto r1 = verify_bounds(1.0, grid);
    auto r2 = verify_bounds(1.0, grid);
    CHECK(r1.worst_margin == r2.worst_margin);
    CHECK(r1.worst_x == r2.worst_x);
    CHECK(r1.samples == r2.samples);
}

TEST_CASE("refined grid finds tighter margins than uniform") {
    // the increasing-regime bounds are sharp at the ends
    auto ref = verify_bounds(0.0, GridSpec::refined(20000));
    auto uni = verify_bounds(0.0, GridSpec::uniform(1e-9, 1 - 1e-9, 20000));
    CHECK(std::fabs(ref.worst_margin) <= std::fabs(uni.worst_margin));
}

TEST_CASE("verify_monotonicity") {
    auto grid = GridSpec::refined(100000);
    for (double a : {-3.0, 0.0, 2.0, kIncreasingThreshold, 2.5, 2.7, 2.8, kTwoSqrt2, 4.0}) {
        CAPTURE(a);
        CHECK(verify_monotonicity(a, grid).passed);
    }
    auto cells = sign_change_cells(2.7, grid);
    REQUIRE(cells.size() == 1);
    CHECK(cells[0].first < 0.2042752999);
    CHECK(cells[0].second > 0.2042752999);
    CHECK(sign_change_cells(2.5, grid).empty());
    CHECK(sign_change_cells(4.0, grid).empty());
}

TEST_CASE("limits and sharpness") {
    for (double a : {-0.5, 0.0, 1.0, kIncreasingThreshold, kTwoSqrt2, 3.0, 5.0}) {
        CAPTURE(a);
        CHECK(verify_limits_and_sharpness(a, default_eps_list()).passed);
    }
    auto eps = default_eps_list();
    CHECK(eps.front() == 1e-4);
    CHECK(eps.back() == 1e-12);
}

TEST_CASE("compare_bounds") {
    auto t = compare_bounds(GridSpec::refined(20000), true);
    CHECK(t.lambda_dominates.passed);
    CHECK(t.upper_dominates.passed);
    CHECK(t.non_inclusion.passed);
    REQUIRE(t.crossover.has_value());
    CHECK(std::fabs(*t.crossover - 0.3409060161913676) < 1e-10);
    CHECK(t.rows.size() == t.lambda_dominates.samples);
    std::size_t total = 0;
    for (auto w : t.lower_wins) total += w;
    CHECK(total == t.rows.size());
    // the threshold lower wins somewhere left of the crossover and the λ lower right of it
    CHECK(t.lower_wins[static_cast<int>(LowerCandidate::ThresholdPair)] > 0);
    CHECK(t.lower_wins[static_cast<int>(LowerCandidate::Lambda)] > 0);
    CHECK(t.upper_wins[static_cast<int>(UpperCandidate::Best)] == t.rows.size());
    CHECK(compare_bounds(GridSpec::refined(1000)).rows.empty());
}

TEST_CASE("claim registry") {
    const auto& reg = claim_registry();
    CHECK(reg.size() >= 20);
    std::set<std::string> ids;
    for (const auto& c : reg) ids.insert(c.id);
    CHECK(ids.size() == reg.size());
    CHECK(find_claim("thm2-eq5-lower") != nullptr);
    CHECK(find_claim("nope") == nullptr);

    auto grid = GridSpec::refined(20000);
    auto r = run_claim(*find_claim("thm2-eq5-lower"), grid, std::vector<double>{0.0});
    CHECK(r.passed);
    CHECK(r.claim_id == "thm2-eq5-lower");

    // monotonicity claims check each shape against its own regime and say which
    auto other = run_claim(*find_claim("thm1-decreasing"), grid, std::vector<double>{1.0});
    CHECK(other.notes.find("Increasing") != std::string::npos);

    for (const auto& c : reg) {
        CAPTURE(c.id);
        CHECK(run_claim(c, grid).passed);
    }
}
