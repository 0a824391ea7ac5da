#include <catch2/catch_amalgamated.hpp>

#include "gapforge/alpha.hpp"
#include "gapforge/continued_fraction.hpp"
#include "gapforge/prng.hpp"
#include "gapforge/rational.hpp"
#include "gapforge/roots.hpp"
#include "gapforge/threegap.hpp"

using namespace gapforge;

TEST_CASE("fractional part on the circle", "[numeric]") {
    CHECK(frac(Rat(7, 3)).value == Rat(1, 3));
    CHECK(frac(Rat(-1, 4)).value == Rat(3, 4));
    CHECK(frac(Rat(5, 1)).value == 0);

    Rng rng(7);
    for (int i = 0; i < 200; ++i) {
        Rat x{Int(rng.in(-5000, 5000)), Int(rng.in(1, 97))};
        Rat f = frac(x).value;
        CHECK(f >= 0);
        CHECK(f < 1);
        Rat whole = x - f;
        CHECK(rat_den(whole) == 1); // x - frac(x) is an integer
    }
}

TEST_CASE("rational parsing round-trips", "[numeric]") {
    CHECK(parse_rat("3/4") == Rat(3, 4));
    CHECK(parse_rat("-6/8") == Rat(-3, 4));
    CHECK(parse_rat("17") == Rat(17));
    CHECK(parse_rat("0.25") == Rat(1, 4));
    CHECK(parse_rat("-0.2") == Rat(-1, 5));
    CHECK(rat_to_string(Rat(-3, 4)) == "-3/4");
    CHECK(rat_to_string(Rat(5)) == "5");
    CHECK_THROWS_AS(parse_rat("1/0"), invalid_input);
    CHECK_THROWS_AS(parse_rat("abc"), invalid_input);
    CHECK_THROWS_AS(parse_rat(""), invalid_input);
}

TEST_CASE("canonical form is maintained", "[numeric]") {
    Rat x(-6, 8);
    CHECK(rat_num(x) == -3);
    CHECK(rat_den(x) == 4);
    CHECK(gcd(abs(rat_num(x)), rat_den(x)) == 1);
}

TEST_CASE("continued fraction of rationals terminates with the Euclidean expansion", "[numeric]") {
    auto cf = continued_fraction(Rat(5, 8));
    CHECK(cf == std::vector<Int>{0, 1, 1, 1, 2});
    auto conv = convergents(cf);
    REQUIRE(conv.size() == 5);
    CHECK(conv[0].value() == Rat(0));
    CHECK(conv[1].value() == Rat(1));
    CHECK(conv[2].value() == Rat(1, 2));
    CHECK(conv[3].value() == Rat(2, 3));
    CHECK(conv[4].value() == Rat(5, 8));

    CHECK(continued_fraction(Rat(1, 3)) == std::vector<Int>{0, 3});
    CHECK(continued_fraction(Rat(7, 1)) == std::vector<Int>{7});
    CHECK_THROWS_AS(continued_fraction(Rat(0)), invalid_input);
}

TEST_CASE("convergents alternate around x with the standard error bound", "[numeric]") {
    Rng rng(11);
    for (int t = 0; t < 50; ++t) {
        Rat x{Int(rng.in(1, 4000)), Int(rng.in(1, 4000))};
        auto cf = continued_fraction(x);
        auto conv = convergents(cf);
        REQUIRE(conv.back().value() == x);
        for (std::size_t i = 0; i + 1 < conv.size(); ++i) {
            Rat err = rat_abs(x - conv[i].value());
            Rat bound{1, conv[i].q * conv[i + 1].q};
            // equality is attained exactly at the penultimate convergent of
            // a rational; all earlier indices are strict
            if (i + 2 < conv.size()) CHECK(err < bound);
            else CHECK(err == bound);
            if (i + 2 < conv.size()) {
                // consecutive convergents straddle x
                bool below = conv[i].value() <= x;
                bool next_below = conv[i + 1].value() <= x;
                CHECK(below != next_below);
            }
        }
    }
}

TEST_CASE("golden-ratio spec resolves to a certified convergent", "[alpha]") {
    auto spec = AlphaSpec::parse("cf:[0,1,1,1,1,1,1,1,1,1,1,1]");
    Rat a = resolve_alpha(spec, 5);
    CHECK(a == Rat(8, 13)); // first convergent past the q > 2N gate
    CHECK(rat_den(a) > 5);
    auto o = LabeledOrbit::build(a, 5);
    CHECK(o.size() == 5);
}

TEST_CASE("decimal spec of log10(2) resolves for N = 100", "[alpha]") {
    auto spec = AlphaSpec::parse("dec:0.30102999566398119521:20");
    Rat a = resolve_alpha(spec, 100);
    const Int& q = rat_den(a);
    CHECK(q > 100);
    // a convergent of anything in the decimal interval: within 2/q^2 of it
    Rat err = rat_abs(a - parse_rat("0.30102999566398119521"));
    CHECK(err < Rat(2, q * q));
    CHECK(LabeledOrbit::build(a, 100).size() == 100);
}

TEST_CASE("exact rational specs pass through or report degeneracy", "[alpha]") {
    CHECK(resolve_alpha(AlphaSpec::from_rational(Rat(5, 8)), 5) == Rat(5, 8));
    CHECK_THROWS_AS(resolve_alpha(AlphaSpec::from_rational(Rat(1, 3)), 5), degenerate_input);
    CHECK_THROWS_AS(resolve_alpha(AlphaSpec::from_rational(Rat(2)), 2), degenerate_input);
}

TEST_CASE("decimal spec refuses to certify beyond its digits", "[alpha]") {
    auto spec = AlphaSpec::parse("dec:0.301:3");
    CHECK_THROWS_AS(resolve_alpha(spec, 100000), insufficient_precision);
    CHECK_THROWS_AS(AlphaSpec::parse("dec:0.301:7"), invalid_input); // digit count mismatch
}

TEST_CASE("cf spec runs out of certified terms", "[alpha]") {
    auto spec = AlphaSpec::parse("cf:[0,1,1]");
    CHECK_THROWS_AS(resolve_alpha(spec, 50), insufficient_precision);
}

TEST_CASE("integer nth root", "[roots]") {
    CHECK(iroot_floor(Int(0), 3) == 0);
    CHECK(iroot_floor(Int(26), 3) == 2);
    CHECK(iroot_floor(Int(27), 3) == 3);
    CHECK(iroot_floor(Int(28), 3) == 3);
    Rng rng(3);
    for (int t = 0; t < 100; ++t) {
        Int x = Int(rng.in(0, 1000000));
        unsigned m = static_cast<unsigned>(rng.in(1, 6));
        Int y = iroot_floor(x, m);
        CHECK(pow(y, m) <= x);
        CHECK(pow(y + 1, m) > x);
    }
}

TEST_CASE("nth root brackets enclose and are tight", "[roots]") {
    Rng rng(5);
    for (int t = 0; t < 50; ++t) {
        Rat x{Int(rng.in(1, 100000)), Int(rng.in(1, 1000))};
        unsigned m = static_cast<unsigned>(rng.in(2, 5));
        Bracket b = nth_root_bracket(x, m, 64);
        CHECK(rat_pow(b.lo, m) <= x);
        CHECK(rat_pow(b.hi, m) >= x);
        CHECK(b.width() <= Rat(1, Int(1) << 62));
    }
    // exact roots collapse to a point or near-point bracket
    Bracket b = nth_root_bracket(Rat(27), 3, 64);
    CHECK(b.lo <= 3);
    CHECK(b.hi >= 3);
}

TEST_CASE("e bracket encloses e", "[roots]") {
    Bracket b = e_bracket(64);
    // 2.718281828459045235 < e < 2.718281828459045236
    CHECK(b.lo < parse_rat("2.718281828459045236"));
    CHECK(b.hi > parse_rat("2.718281828459045235"));
    CHECK(b.width() < Rat(1, Int(1) << 60));
    Bracket wide = e_bracket(8);
    Bracket narrow = e_bracket(128);
    CHECK(narrow.width() < wide.width());
    CHECK(narrow.lo >= wide.lo);
    CHECK(narrow.hi <= wide.hi);
}

TEST_CASE("per-trial rng streams are independent and deterministic", "[prng]") {
    Rng a = trial_rng(42, 0), b = trial_rng(42, 0), c = trial_rng(42, 1);
    CHECK(a.u64() == b.u64());
    Rng a2 = trial_rng(42, 0);
    (void)c;
    std::uint64_t first = a2.u64();
    Rng c2 = trial_rng(42, 1);
    CHECK(first != c2.u64()); // overwhelmingly likely distinct streams
    for (int i = 0; i < 1000; ++i) {
        std::uint64_t v = a.below(17);
        CHECK(v < 17);
    }
}
