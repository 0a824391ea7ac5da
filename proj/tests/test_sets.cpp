#include <catch2/catch_amalgamated.hpp>

#include "gapforge/prng.hpp"
#include "gapforge/sets.hpp"
#include "oracles.hpp"

using namespace gapforge;

namespace {

SortedSet ints(std::initializer_list<long> xs) {
    std::vector<Rat> v;
    for (long x : xs) v.emplace_back(Int(x));
    return SortedSet::of(std::move(v));
}

SortedSet random_set(Rng& rng, std::size_t k, long range) {
    std::set<long> vals;
    while (vals.size() < k) vals.insert(rng.in(0, range));
    std::vector<Rat> v;
    for (long x : vals) v.emplace_back(Int(x));
    return SortedSet::from_sorted(std::move(v));
}

} // namespace

TEST_CASE("sumset basics", "[sets]") {
    CHECK(sumset(ints({0, 1}), ints({0, 2})) == ints({0, 1, 2, 3}));
    SortedSet a = ints({2, 5, 11});
    CHECK(sumset(a, ints({0})) == a);
    // brute-force oracle for {0,1,3} + {0,1,3}
    auto brute = oracle::brute_sumset(ints({0, 1, 3}).values(), ints({0, 1, 3}).values());
    CHECK(std::vector<Rat>(brute.begin(), brute.end()) == ints({0, 1, 2, 3, 4, 6}).values());
    CHECK(sumset(ints({0, 1, 3}), ints({0, 1, 3})) == ints({0, 1, 2, 3, 4, 6}));
}

TEST_CASE("sumset size bounds and commutativity", "[sets]") {
    Rng rng(21);
    for (int t = 0; t < 40; ++t) {
        SortedSet a = random_set(rng, static_cast<std::size_t>(rng.in(1, 12)), 60);
        SortedSet b = random_set(rng, static_cast<std::size_t>(rng.in(1, 12)), 60);
        SortedSet s = sumset(a, b);
        CHECK(s.size() <= a.size() * b.size());
        CHECK(s.size() >= a.size() + b.size() - 1);
        CHECK(s == sumset(b, a));
        auto brute = oracle::brute_sumset(a.values(), b.values());
        CHECK(s.size() == brute.size());
    }
}

TEST_CASE("consecutive difference windows", "[sets]") {
    auto w = consecutive_r_diffs(ints({0, 1, 3, 6}), 1);
    REQUIRE(w.size() == 3);
    CHECK(w[0] == RDiffTuple{Rat(1)});
    CHECK(w[1] == RDiffTuple{Rat(2)});
    CHECK(w[2] == RDiffTuple{Rat(3)});
    CHECK(distinct_r_diffs(ints({0, 1, 3, 6}), 1).size() == 3);

    CHECK(distinct_r_diffs(ints({0, 2, 4, 6}), 2).size() == 1); // arithmetic progression

    auto w2 = consecutive_r_diffs(ints({0, 1, 3, 4}), 2);
    REQUIRE(w2.size() == 2);
    CHECK(w2[0] == RDiffTuple{Rat(1), Rat(2)});
    CHECK(w2[1] == RDiffTuple{Rat(2), Rat(1)});

    CHECK_THROWS_AS(consecutive_r_diffs(ints({0, 1}), 2), invalid_input);
    CHECK_THROWS_AS(consecutive_r_diffs(ints({5}), 1), invalid_input);
}

TEST_CASE("distinctness predicate", "[sets]") {
    CHECK(has_distinct_consecutive_r_diffs(ints({0, 1, 3, 6}), 1)); // convex
    CHECK_FALSE(has_distinct_consecutive_r_diffs(ints({0, 2, 4, 6}), 1));
    CHECK(has_distinct_consecutive_r_diffs(ints({0, 1, 2, 4}), 2)); // (1,1) != (1,2)
}

TEST_CASE("distinctness is preserved by widening the window", "[sets]") {
    Rng rng(33);
    for (int t = 0; t < 60; ++t) {
        std::size_t k = static_cast<std::size_t>(rng.in(4, 12));
        SortedSet a = random_set(rng, k, 200);
        for (int r = 1; r + 1 < static_cast<int>(k); ++r) {
            if (!has_distinct_consecutive_r_diffs(a, r)) continue;
            for (int rp = r + 1; rp < static_cast<int>(k); ++rp)
                CHECK(has_distinct_consecutive_r_diffs(a, rp));
        }
    }
}

TEST_CASE("translation invariance of difference windows", "[sets]") {
    Rng rng(34);
    for (int t = 0; t < 40; ++t) {
        std::size_t k = static_cast<std::size_t>(rng.in(3, 10));
        SortedSet a = random_set(rng, k, 100);
        Rat c{Int(rng.in(-50, 50)), Int(rng.in(1, 9))};
        std::vector<Rat> shifted;
        for (const Rat& x : a) shifted.push_back(x + c);
        SortedSet ac = SortedSet::from_sorted(std::move(shifted));
        for (int r = 1; r < static_cast<int>(k); ++r)
            CHECK(distinct_r_diffs(a, r) == distinct_r_diffs(ac, r));
    }
}

TEST_CASE("sliding windows equal independently materialized windows", "[sets]") {
    Rng rng(35);
    for (int t = 0; t < 80; ++t) {
        std::size_t k = static_cast<std::size_t>(rng.in(2, 8));
        SortedSet a = random_set(rng, k, 40);
        for (int r = 1; r < static_cast<int>(k); ++r) {
            auto lib = distinct_r_diffs(a, r);
            auto ref = oracle::materialized_windows(a.values(), r);
            CHECK(std::set<RDiffTuple>(lib.begin(), lib.end()) == ref);
        }
    }
}

TEST_CASE("d-tuple distinctness", "[sets]") {
    CHECK(has_distinct_dtuples({ints({0, 2, 4}), ints({0, 1, 3})}, 1)); // (2,1) != (2,2)
    CHECK_FALSE(has_distinct_dtuples({ints({0, 2, 4}), ints({0, 2, 4})}, 1));
    // d = 1 reduces to the plain predicate
    Rng rng(36);
    for (int t = 0; t < 30; ++t) {
        SortedSet a = random_set(rng, 6, 60);
        CHECK(has_distinct_dtuples({a}, 2) == has_distinct_consecutive_r_diffs(a, 2));
    }
    CHECK_THROWS_AS(has_distinct_dtuples({ints({0, 1, 2}), ints({0, 1})}, 1), invalid_input);
}

TEST_CASE("mod-p ordering by smallest positive representative", "[sets]") {
    CHECK(order_mod_p({Int(3), Int(6), Int(1)}, Int(7)) == ints({1, 3, 6}));
    CHECK(order_mod_p({Int(0), Int(5)}, Int(7)) == ints({5, 7})); // zero maps to p
    CHECK(order_mod_p({Int(10), Int(2)}, Int(7)) == ints({2, 3}));
    CHECK_THROWS_AS(order_mod_p({Int(1), Int(8)}, Int(7)), invalid_input);
}

TEST_CASE("mod-p sumset and fullness", "[sets]") {
    std::vector<Int> all{0, 1, 2, 3, 4};
    CHECK(sumset_mod_p(all, all, Int(5)).full);
    auto r = sumset_mod_p({Int(0)}, {Int(1), Int(2)}, Int(5));
    CHECK_FALSE(r.full);
    CHECK(r.residues == std::vector<Int>{1, 2});
    auto r2 = sumset_mod_p({Int(1), Int(2), Int(4)}, {Int(1), Int(2), Int(4)}, Int(7));
    CHECK_FALSE(r2.full); // misses 0
    CHECK(r2.residues == std::vector<Int>{1, 2, 3, 4, 5, 6});
}
