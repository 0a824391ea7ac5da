#pragma once

// Finite encodings of a rotation number and their resolution into a rational
// approximant that is provably safe for a bounded orbit length.
//
// An irrational target is replaced by a continued-fraction convergent p/q
// deepened until (a) q > 2N and (b) every circle distance ||m p/q|| for
// 1 <= m <= 2N strictly exceeds 2N times the approximation error bound
// 1/(q q_next). Under (a)+(b) the first N orbit points of p/q have the same
// [0,1)-ordering and the same pattern of equal differences as the target's,
// so any ordinal statement checked on the approximant holds for the target.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "gapforge/continued_fraction.hpp"
#include "gapforge/errors.hpp"
#include "gapforge/rational.hpp"

namespace gapforge {

struct AlphaSpec {
    enum class Kind { exact, cf, decimal };

    Kind kind = Kind::exact;
    Rat exact;
    std::vector<Int> cf_coeffs;
    Rat decimal_value;
    int decimal_digits = 0;

    static AlphaSpec from_rational(Rat x) {
        AlphaSpec s;
        s.kind = Kind::exact;
        s.exact = std::move(x);
        return s;
    }

    static AlphaSpec from_cf(std::vector<Int> coeffs) {
        if (coeffs.empty()) throw invalid_input("alpha cf: empty coefficient list");
        for (std::size_t i = 1; i < coeffs.size(); ++i)
            if (coeffs[i] < 1) throw invalid_input("alpha cf: partial quotients after the first must be positive");
        AlphaSpec s;
        s.kind = Kind::cf;
        s.cf_coeffs = std::move(coeffs);
        return s;
    }

    static AlphaSpec from_decimal(std::string_view text, int digits) {
        auto dot = text.find('.');
        if (dot == std::string_view::npos)
            throw invalid_input("alpha decimal: expected a decimal point");
        int actual = static_cast<int>(text.size() - dot - 1);
        if (actual != digits)
            throw invalid_input("alpha decimal: stated digit count " + std::to_string(digits) +
                                " does not match the string (" + std::to_string(actual) + " digits)");
        if (digits < 1) throw invalid_input("alpha decimal: needs at least one digit");
        AlphaSpec s;
        s.kind = Kind::decimal;
        s.decimal_value = parse_rat(text);
        s.decimal_digits = digits;
        return s;
    }

    /// "p/q" (or plain number) | "cf:[a0,a1,...]" | "dec:0.301029995663981:15"
    static AlphaSpec parse(std::string_view text) {
        if (text.rfind("cf:", 0) == 0) {
            std::string_view body = text.substr(3);
            if (body.size() < 2 || body.front() != '[' || body.back() != ']')
                throw invalid_input("alpha cf: expected cf:[a0,a1,...]");
            body = body.substr(1, body.size() - 2);
            std::vector<Int> coeffs;
            std::size_t start = 0;
            while (start <= body.size()) {
                std::size_t comma = body.find(',', start);
                std::string_view tok = body.substr(start, comma == std::string_view::npos ? body.size() - start : comma - start);
                if (tok.empty()) throw invalid_input("alpha cf: empty coefficient");
                coeffs.emplace_back(std::string(tok));
                if (comma == std::string_view::npos) break;
                start = comma + 1;
            }
            return from_cf(std::move(coeffs));
        }
        if (text.rfind("dec:", 0) == 0) {
            std::string_view body = text.substr(4);
            auto colon = body.rfind(':');
            if (colon == std::string_view::npos)
                throw invalid_input("alpha decimal: expected dec:value:digits");
            int digits = 0;
            try {
                digits = std::stoi(std::string(body.substr(colon + 1)));
            } catch (const std::exception&) {
                throw invalid_input("alpha decimal: bad digit count");
            }
            return from_decimal(body.substr(0, colon), digits);
        }
        return from_rational(parse_rat(text));
    }
};

/// True when every x with |x - a| <= eps has the same orbit structure as
/// a = p/q over labels 1..N: checks q > 2N and min_{1<=m<=2N} ||m a|| > 2N eps.
inline bool orbit_stable_under(const Rat& a, const Rat& eps, std::int64_t N) {
    const Int& q = rat_den(a);
    if (q <= 2 * Int(N)) return false;
    Int p = mod_pos(rat_num(a), q);
    Rat threshold = Rat(2 * N) * eps;
    Int res = 0;
    for (std::int64_t m = 1; m <= 2 * N; ++m) {
        res += p;
        if (res >= q) res -= q;
        Int dist = res <= q - res ? res : q - res;
        if (Rat(dist, q) <= threshold) return false;
    }
    return true;
}

namespace detail {

inline Rat resolve_from_cf(const std::vector<Int>& coeffs, std::int64_t N, bool certified_tail,
                           const char* what) {
    auto conv = convergents(coeffs);
    // conv[i+1] supplies both q_next for the error bound and, when the list
    // is itself a certified common prefix, the guarantee that conv[i] is a
    // convergent of the target.
    for (std::size_t i = 0; i + 1 < conv.size(); ++i) {
        const Int& q = conv[i].q;
        if (q <= 2 * Int(N)) continue;
        Rat cand(conv[i].p, conv[i].q);
        Rat eps(1, q * conv[i + 1].q);
        if (orbit_stable_under(cand, eps, N)) return cand;
    }
    (void)certified_tail;
    throw insufficient_precision(std::string(what) +
                                 ": not enough certified continued-fraction terms for N = " + std::to_string(N));
}

} // namespace detail

/// Resolves a rotation-number spec into a rational safe for orbit length N.
/// Exact rationals pass through after a distinctness check; other kinds
/// return a certified convergent (see header comment).
inline Rat resolve_alpha(const AlphaSpec& spec, std::int64_t N) {
    if (N < 1) throw invalid_input("resolve_alpha: N must be >= 1");
    switch (spec.kind) {
    case AlphaSpec::Kind::exact: {
        // {n a} for n1 < n2 <= N collide iff den | (n2 - n1), so distinctness
        // over 1..N is exactly den >= N.
        if (rat_den(spec.exact) < N)
            throw degenerate_input("resolve_alpha: exact rational repeats an orbit point within 1.." +
                                   std::to_string(N));
        return spec.exact;
    }
    case AlphaSpec::Kind::cf:
        return detail::resolve_from_cf(spec.cf_coeffs, N, false, "alpha cf");
    case AlphaSpec::Kind::decimal: {
        Rat lo = spec.decimal_value;
        Int scale = 1;
        for (int i = 0; i < spec.decimal_digits; ++i) scale *= 10;
        Rat hi = lo + Rat(1, scale); // truncated decimal: target in [lo, hi]
        auto prefix = shared_cf_prefix(lo, hi);
        if (prefix.size() < 2)
            throw insufficient_precision("alpha decimal: interval too wide to certify any convergent");
        return detail::resolve_from_cf(prefix, N, true, "alpha decimal");
    }
    }
    throw invalid_input("resolve_alpha: unknown spec kind");
}

} // namespace gapforge
