#include <catch2/catch_amalgamated.hpp>

#include "gapforge/alpha.hpp"
#include "gapforge/prng.hpp"
#include "gapforge/sweeps.hpp"
#include "gapforge/threegap.hpp"
#include "oracles.hpp"

using namespace gapforge;

TEST_CASE("orbit of 5/8 with five points", "[threegap]") {
    auto o = orbit(Rat(5, 8), 5);
    REQUIRE(o.size() == 5);
    CHECK(o.point(0) == Rat(1, 8));
    CHECK(o.label(0) == 5);
    CHECK(o.point(1) == Rat(2, 8));
    CHECK(o.label(1) == 2);
    CHECK(o.point(2) == Rat(4, 8));
    CHECK(o.label(2) == 4);
    CHECK(o.point(3) == Rat(5, 8));
    CHECK(o.label(3) == 1);
    CHECK(o.point(4) == Rat(7, 8));
    CHECK(o.label(4) == 3);
}

TEST_CASE("tiny orbits", "[threegap]") {
    auto o1 = orbit(Rat(1, 2), 1);
    CHECK(o1.size() == 1);
    CHECK(o1.point(0) == Rat(1, 2));
    auto o2 = orbit(Rat(1, 3), 2);
    CHECK(o2.point(0) == Rat(1, 3));
    CHECK(o2.label(0) == 1);
    CHECK(o2.point(1) == Rat(2, 3));
    CHECK(o2.label(1) == 2);
    CHECK_THROWS_AS(orbit(Rat(1, 3), 4), degenerate_input); // n=1 and n=4 collide
}

TEST_CASE("gap closure", "[threegap]") {
    Rng rng(91);
    for (int t = 0; t < 30; ++t) {
        std::int64_t n = rng.in(2, 60);
        Rat alpha = random_alpha(rng, n);
        auto o = orbit(alpha, n);
        Rat cyclic_total(0);
        for (std::int64_t i = 0; i < n; ++i) cyclic_total += Rat(o.gap_num(i), o.denom());
        CHECK(cyclic_total == 1);
        Rat linear_total(0);
        for (std::int64_t i = 0; i + 1 < n; ++i) linear_total += o.point(i + 1) - o.point(i);
        CHECK(linear_total == o.point(n - 1) - o.point(0));
    }
}

TEST_CASE("cyclic windows of 5/8", "[threegap]") {
    auto o = orbit(Rat(5, 8), 5);
    auto d1 = cyclic_r_diffs(o, 1);
    CHECK(d1.size() == 2); // gaps 1/8 and 2/8 (wrap 7/8 -> 1/8 is 2/8)
    CHECK(d1.count({Rat(1, 8)}) == 1);
    CHECK(d1.count({Rat(1, 4)}) == 1);
    CHECK_THROWS_AS(cyclic_r_diffs(o, 5), invalid_input);
}

TEST_CASE("window count degenerates to N when r = N - 1", "[threegap]") {
    Rng rng(92);
    for (int t = 0; t < 10; ++t) {
        std::int64_t n = rng.in(3, 12);
        Rat alpha = random_alpha(rng, n);
        auto o = orbit(alpha, n);
        CHECK(cyclic_r_diffs(o, static_cast<int>(n - 1)).size() <= static_cast<std::size_t>(n));
    }
}

TEST_CASE("Steinhaus base case and the generalized ceiling", "[threegap]") {
    Rng rng(93);
    for (int t = 0; t < 60; ++t) {
        int r = static_cast<int>(rng.in(1, 5));
        std::int64_t n = rng.in(r + 1, 400);
        Rat alpha = random_alpha(rng, n);
        auto o = orbit(alpha, n);
        CHECK(cyclic_r_diffs(o, 1).size() <= 3);
        CHECK(cyclic_r_diffs(o, r).size() <= static_cast<std::size_t>(2 * r + 1));
    }
    // golden convergent, N = 20, r = 2
    Rat g = resolve_alpha(AlphaSpec::parse("cf:[0,1,1,1,1,1,1,1,1,1,1,1,1,1]"), 20);
    CHECK(cyclic_r_diffs(orbit(g, 20), 2).size() <= 5);
}

TEST_CASE("neighbor frame around {alpha}", "[threegap]") {
    auto o = orbit(Rat(5, 8), 5);
    auto f = neighbor_frame(o, 1);
    CHECK(f.left == std::vector<std::int64_t>{4});
    CHECK(f.right == std::vector<std::int64_t>{3});
    CHECK_THROWS_AS(neighbor_frame(o, 4), invalid_input); // not enough neighbors
}

TEST_CASE("breakpoint table on a small golden orbit", "[threegap]") {
    Rat g = resolve_alpha(AlphaSpec::parse("cf:[0,1,1,1,1,1,1,1,1,1,1,1,1,1]"), 10);
    auto o = orbit(g, 10);
    auto t = breakpoint_table(o, 1);
    CHECK(t.breakpoints.size() == 3);
    CHECK(t.breakpoints.front() == 1);
    CHECK(check_breakpoint_table(o, t, 1).holds);
    auto iv = t.intervals();
    CHECK(iv.front().first == 1);
    CHECK(iv.back().second == 10);
}

TEST_CASE("breakpoint soundness across random certified orbits", "[threegap]") {
    Rng rng(94);
    int built = 0;
    for (int t = 0; t < 40 && built < 25; ++t) {
        int r = static_cast<int>(rng.in(1, 4));
        std::int64_t n = rng.in(4 * r + 4, 300);
        Rat alpha = random_alpha(rng, n);
        auto o = orbit(alpha, n);
        try {
            auto table = breakpoint_table(o, r);
            CHECK(check_breakpoint_table(o, table, r).holds);
            CHECK(table.breakpoints.size() == static_cast<std::size_t>(2 * r + 1));
            ++built;
        } catch (const invalid_input&) {
        } catch (const degenerate_input&) {
        }
    }
    CHECK(built >= 10);
}

TEST_CASE("reversal symmetry", "[threegap]") {
    CHECK(reversal_check(orbit(Rat(5, 8), 5)).holds);
    CHECK(reversal_check(orbit(Rat(1, 2), 1)).holds);
    Rng rng(95);
    for (int t = 0; t < 40; ++t) {
        std::int64_t n = rng.in(2, 500);
        Rat alpha = random_alpha(rng, n);
        auto o = orbit(alpha, n);
        CHECK(reversal_check(o).holds);
        CHECK(oracle::run_based_reversal(o)); // independent pairwise oracle
    }
}

TEST_CASE("multishift reduces to the plain orbit for a single zero shift", "[threegap]") {
    Rng rng(96);
    for (int t = 0; t < 20; ++t) {
        int r = static_cast<int>(rng.in(1, 3));
        std::int64_t n = rng.in(r + 1, 200);
        Rat alpha = random_alpha(rng, n);
        auto ms = multishift_orbit(alpha, {Rat(0)}, {n}, r);
        CHECK(ms.within_bound);
        CHECK(ms.diffs == cyclic_r_diffs(orbit(alpha, n), r));
    }
}

TEST_CASE("multishift union bound", "[threegap]") {
    Rat g = resolve_alpha(AlphaSpec::parse("cf:[0,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1]"), 41);
    auto ms = multishift_orbit(g, {Rat(0), Rat(1, 2)}, {20, 20}, 1);
    CHECK(ms.points.size() == 40);
    CHECK(ms.diffs.size() <= 6); // (2r+1) k with r = 1, k = 2
    CHECK(ms.within_bound);

    Rng rng(97);
    for (int t = 0; t < 20; ++t) {
        std::int64_t n = rng.in(10, 150);
        Rat alpha = random_alpha(rng, 3 * n);
        try {
            auto m2 = multishift_orbit(alpha, {Rat(0), random_phi(rng, 40)}, {n, n}, 2);
            CHECK(m2.diffs.size() <= 10);
        } catch (const degenerate_input&) {
            // collision; acceptable for arbitrary shifts
        }
    }
}

TEST_CASE("multishift rejects colliding shifts", "[threegap]") {
    Rat alpha(3, 7); // lambda = alpha makes point n=1 of copy 1 collide with n=2 shifted... build explicit collision
    CHECK_THROWS_AS(multishift_orbit(alpha, {Rat(0), Rat(0)}, {3, 3}, 1), degenerate_input);
}
