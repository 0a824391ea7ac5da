#include <catch2/catch_amalgamated.hpp>

#include "gapforge/sidon.hpp"
#include "oracles.hpp"

using namespace gapforge;

TEST_CASE("greedy Sidon sequence matches the brute-force oracle", "[sidon]") {
    // independent oracle: grow greedily, testing candidates with the
    // quadruple-enumeration Sidon check
    std::vector<Int> ref;
    Int cand = 1;
    while (ref.size() < 8) {
        std::vector<Int> probe = ref;
        probe.push_back(cand);
        if (oracle::naive_is_sidon(probe)) ref = std::move(probe);
        ++cand;
    }
    CHECK(ref == std::vector<Int>{1, 2, 4, 8, 13, 21, 31, 45});

    CHECK(mian_chowla(1).elems == std::vector<Int>{1});
    CHECK(mian_chowla(4).elems == std::vector<Int>{1, 2, 4, 8});
    CHECK(mian_chowla(8).elems == ref);
}

TEST_CASE("sidon violation witnesses", "[sidon]") {
    auto w = sidon_violation({Int(1), Int(2), Int(3)});
    REQUIRE(w.has_value());
    CHECK(w->a + w->b == w->c + w->d);
    CHECK(is_sidon({Int(1), Int(2), Int(4), Int(8)}));
    CHECK(is_sidon({Int(7)}));
    CHECK(is_sidon({}));
}

TEST_CASE("prefixes of the greedy sequence stay Sidon", "[sidon]") {
    auto s = mian_chowla(16);
    for (std::size_t n = 1; n <= s.elems.size(); ++n) {
        std::vector<Int> prefix(s.elems.begin(), s.elems.begin() + static_cast<std::ptrdiff_t>(n));
        CHECK(is_sidon(prefix));
    }
}

TEST_CASE("greedy choice is minimal", "[sidon]") {
    auto s = mian_chowla(20);
    for (std::size_t n = 1; n < s.elems.size(); ++n) {
        std::vector<Int> prefix(s.elems.begin(), s.elems.begin() + static_cast<std::ptrdiff_t>(n));
        for (Int m = prefix.back() + 1; m < s.elems[n]; ++m) {
            std::vector<Int> probe = prefix;
            probe.push_back(m);
            CHECK_FALSE(is_sidon(probe));
        }
    }
}
