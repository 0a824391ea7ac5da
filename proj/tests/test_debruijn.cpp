#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "gapforge/debruijn.hpp"

using namespace gapforge;

TEST_CASE("overlap graph shape", "[debruijn]") {
    OverlapGraph g21(2, 1);
    CHECK(g21.vertex_count() == 2);
    CHECK(g21.out_degree() == 1);
    CHECK(g21.successors(0) == std::vector<std::size_t>{1});
    CHECK(g21.successors(1) == std::vector<std::size_t>{0});

    OverlapGraph g32(3, 2);
    CHECK(g32.vertex_count() == 6);
    CHECK(g32.out_degree() == 2);

    OverlapGraph g43(4, 3);
    CHECK(g43.vertex_count() == 36);
    CHECK(g43.out_degree() == 3);

    CHECK_THROWS_AS(OverlapGraph(1, 2), invalid_input);
    CHECK_THROWS_AS(OverlapGraph(3, 0), invalid_input);
}

TEST_CASE("tuple rank round-trip and in-degree regularity", "[debruijn]") {
    OverlapGraph g(4, 3);
    std::vector<std::size_t> indeg(g.vertex_count(), 0);
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        auto t = g.tuple_of(v);
        CHECK(g.id_of(t) == v);
        for (std::size_t i = 1; i < t.size(); ++i) CHECK(t[i] != t[i - 1]);
        for (std::size_t u : g.successors(v)) ++indeg[u];
    }
    for (std::size_t d : indeg) CHECK(d == static_cast<std::size_t>(g.out_degree()));
}

TEST_CASE("eulerian circuit covers every edge once", "[debruijn]") {
    OverlapGraph g(3, 1);
    auto walk = eulerian_circuit(g);
    CHECK(walk.size() == g.edge_count() + 1); // 3*2 edges
    CHECK(walk.front() == walk.back());
    std::set<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t i = 0; i + 1 < walk.size(); ++i)
        CHECK(edges.insert({walk[i], walk[i + 1]}).second);
    CHECK(edges.size() == 6);

    OverlapGraph g32(3, 2);
    CHECK(eulerian_circuit(g32).size() == 13); // 12 edges
}

TEST_CASE("window sequences satisfy all three properties", "[debruijn]") {
    auto s21 = window_sequence(2, 1);
    CHECK(s21.size() == 2);

    auto s31 = window_sequence(3, 1);
    CHECK(s31.size() == 6);
    CHECK(verify_sequence(s31, 3, 1).all_pass());
    // the 6 cyclic pairs are exactly the ordered pairs of distinct symbols
    std::set<std::pair<int, int>> pairs;
    for (std::size_t j = 0; j < s31.size(); ++j)
        pairs.insert({s31[j], s31[(j + 1) % s31.size()]});
    CHECK(pairs.size() == 6);

    auto s32 = window_sequence(3, 2);
    CHECK(s32.size() == 12);
    CHECK(verify_sequence(s32, 3, 2).all_pass());
}

TEST_CASE("cyclic windows biject onto repetition-free tuples", "[debruijn]") {
    for (int m = 2; m <= 5; ++m) {
        for (int r = 1; r <= 3; ++r) {
            auto seq = window_sequence(m, r);
            std::size_t k = static_cast<std::size_t>(m);
            for (int i = 0; i < r; ++i) k *= static_cast<std::size_t>(m - 1);
            REQUIRE(seq.size() == k);
            std::set<std::vector<int>> windows;
            for (std::size_t j = 0; j < k; ++j) {
                std::vector<int> w;
                for (int i = 0; i <= r; ++i) w.push_back(seq[(j + static_cast<std::size_t>(i)) % k]);
                windows.insert(std::move(w));
            }
            CHECK(windows.size() == k); // distinct and hence all of them
        }
    }
}

TEST_CASE("verify_sequence reports witnesses", "[debruijn]") {
    std::vector<int> bad1{0, 0, 1};
    auto r1 = verify_sequence(bad1, 2, 1);
    CHECK_FALSE(r1.adjacent_distinct.pass);
    CHECK_FALSE(r1.length_expected.pass);

    std::vector<int> bad2{0, 1, 0, 1};
    auto r2 = verify_sequence(bad2, 2, 1);
    CHECK_FALSE(r2.windows_distinct.pass); // window (0,1) repeats
    CHECK_FALSE(r2.length_expected.pass);  // k should be 2
    CHECK(r2.adjacent_distinct.pass);

    auto good = window_sequence(4, 2);
    CHECK(verify_sequence(good, 4, 2).all_pass());
}

TEST_CASE("circuit construction is deterministic", "[debruijn]") {
    CHECK(window_sequence(4, 2) == window_sequence(4, 2));
    CHECK(window_sequence(5, 3) == window_sequence(5, 3));
}
