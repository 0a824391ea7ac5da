#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "gapforge/errors.hpp"
#include "gapforge/rational.hpp"

namespace gapforge {

/// Simple continued fraction expansion [a0; a1, a2, ...] of x > 0.
/// A rational input terminates (last partial quotient >= 2 unless x is an
/// integer or the expansion is a single step).
inline std::vector<Int> continued_fraction(Rat x, std::size_t max_terms = 256) {
    if (x <= 0) throw invalid_input("continued_fraction: requires x > 0");
    std::vector<Int> a;
    while (a.size() < max_terms) {
        Int ai = floor_int(x);
        a.push_back(ai);
        x -= Rat(ai);
        if (x == 0) break;
        x = Rat(1) / x;
    }
    return a;
}

struct Convergent {
    Int p, q;

    Rat value() const { return Rat(p, q); }
};

/// Convergents p_i/q_i of a coefficient list, via the standard recurrence
/// p_i = a_i p_{i-1} + p_{i-2}, q_i = a_i q_{i-1} + q_{i-2}.
inline std::vector<Convergent> convergents(std::span<const Int> coeffs) {
    std::vector<Convergent> out;
    out.reserve(coeffs.size());
    Int p_prev2 = 0, p_prev1 = 1; // p_{-2} = 0, p_{-1} = 1
    Int q_prev2 = 1, q_prev1 = 0;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (i > 0 && coeffs[i] < 1)
            throw invalid_input("convergents: partial quotients after the first must be positive");
        Int p = coeffs[i] * p_prev1 + p_prev2;
        Int q = coeffs[i] * q_prev1 + q_prev2;
        out.push_back({p, q});
        p_prev2 = std::move(p_prev1);
        p_prev1 = std::move(p);
        q_prev2 = std::move(q_prev1);
        q_prev1 = std::move(q);
    }
    return out;
}

/// Longest continued fraction prefix shared by every x in [lo, hi], lo < hi.
/// The prefix is certified: each emitted coefficient is the partial quotient
/// of every number in the interval.
inline std::vector<Int> shared_cf_prefix(Rat lo, Rat hi, std::size_t max_terms = 256) {
    if (!(lo < hi)) throw invalid_input("shared_cf_prefix: requires lo < hi");
    std::vector<Int> a;
    while (a.size() < max_terms) {
        Int fl = floor_int(lo);
        if (floor_int(hi) != fl) break;
        a.push_back(fl);
        lo -= Rat(fl);
        hi -= Rat(fl);
        if (lo == 0) break; // interval touches the coefficient boundary
        Rat new_lo = Rat(1) / hi;
        Rat new_hi = Rat(1) / lo;
        lo = std::move(new_lo);
        hi = std::move(new_hi);
    }
    return a;
}

} // namespace gapforge
