#pragma once

// Exact verifiers for the inequalities. Rational comparisons are decided by
// cross-multiplication or integer powering; the only transcendental constant,
// (2e)^{-r}, is decided against certified brackets of e that are refined
// until the comparison resolves. A reported pass is mathematically certain.

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "gapforge/errors.hpp"
#include "gapforge/rational.hpp"
#include "gapforge/roots.hpp"
#include "gapforge/sets.hpp"

namespace gapforge {

/// Exact binomial coefficient; k > n yields 0.
inline Int binom(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    Int acc = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        acc *= Int(n - k + i);
        acc /= Int(i);
    }
    return acc;
}

/// t consecutive blocks of a totally ordered set, sizes differing by <= 1.
inline std::vector<std::size_t> balanced_blocks(std::size_t total, std::size_t t) {
    if (t == 0 || t > total) throw invalid_input("balanced_blocks: need 1 <= t <= total");
    std::vector<std::size_t> sizes(t, total / t);
    for (std::size_t i = 0; i < total % t; ++i) ++sizes[i];
    return sizes;
}

struct BoundReport {
    Bracket lhs, rhs; // exact when lo == hi
    bool holds = false;
    Bracket ratio; // lhs / rhs
    std::string branch; // "", "trivial", "full"
};

namespace detail {

inline Bracket exact(const Rat& x) { return {x, x}; }

} // namespace detail

/// Block-counting inequality for C = A + B split into t = floor(|D_r(A)|/2r)
/// balanced blocks: (|D_r(A)| - (t-1) r) |B| <= sum_u binom(|C_u|, r+1).
/// With |D_r(A)| <= 2r the statement degenerates to |A+B| >= |B|.
inline BoundReport counting_check(const SortedSet& A, const SortedSet& B, int r) {
    if (B.empty()) throw invalid_input("counting_check: B must be nonempty");
    std::size_t D = distinct_r_diffs(A, r).size();
    std::size_t sum_size = sumset(A, B).size();
    BoundReport rep;
    if (D <= static_cast<std::size_t>(2 * r)) {
        rep.branch = "trivial";
        rep.lhs = detail::exact(Rat(Int(B.size())));
        rep.rhs = detail::exact(Rat(Int(sum_size)));
        rep.holds = B.size() <= sum_size;
        rep.ratio = detail::exact(Rat(Int(B.size()), Int(sum_size)));
        return rep;
    }
    std::size_t t = D / static_cast<std::size_t>(2 * r);
    Int lhs = (Int(D) - Int(t - 1) * r) * Int(B.size());
    Int rhs = 0;
    for (std::size_t sz : balanced_blocks(sum_size, t))
        rhs += binom(sz, static_cast<std::uint64_t>(r) + 1);
    rep.lhs = detail::exact(Rat(lhs));
    rep.rhs = detail::exact(Rat(rhs));
    rep.holds = lhs <= rhs;
    rep.ratio = rhs > 0 ? detail::exact(Rat(lhs, rhs)) : detail::exact(Rat(0));
    return rep;
}

/// |A+B| >= (2e)^{-r} |A| |B|^{1/(r+1)} decided from set sizes alone.
/// Equivalent to sum^{r+1} (2e)^{r(r+1)} >= a^{r+1} b, so brackets of e are
/// refined until one side certainly dominates (a tie is impossible: the
/// power of 2e is transcendental, the rest is rational).
inline BoundReport sumset_lower_bound_sizes(std::size_t a, std::size_t b, std::size_t sum, int r) {
    if (a == 0 || b == 0) throw invalid_input("sumset_lower_bound: empty set");
    const unsigned e1 = static_cast<unsigned>(r) + 1;
    const unsigned ee = static_cast<unsigned>(r) * e1; // r(r+1)
    Rat lhs_pow = rat_pow(Rat(Int(sum)), e1);
    Rat rhs_pow = rat_pow(Rat(Int(a)), e1) * Rat(Int(b));

    BoundReport rep;
    unsigned bits = 64;
    for (;;) {
        Bracket e = e_bracket(bits);
        if (lhs_pow * rat_pow(2 * e.lo, ee) >= rhs_pow) {
            rep.holds = true;
            break;
        }
        if (lhs_pow * rat_pow(2 * e.hi, ee) < rhs_pow) {
            rep.holds = false;
            break;
        }
        bits *= 2;
        if (bits > 1u << 16)
            throw std::logic_error("sumset_lower_bound: bracket refinement failed to decide");
    }

    Bracket e = e_bracket(96);
    Bracket root = nth_root_bracket(Rat(Int(b)), e1, 96);
    Rat a_r{Int(a)};
    // rhs = (2e)^{-r} a b^{1/(r+1)}
    rep.rhs = {a_r * root.lo / rat_pow(2 * e.hi, static_cast<unsigned>(r)),
               a_r * root.hi / rat_pow(2 * e.lo, static_cast<unsigned>(r))};
    rep.lhs = detail::exact(Rat(Int(sum)));
    rep.ratio = {rep.lhs.lo / rep.rhs.hi, rep.lhs.lo / rep.rhs.lo};
    return rep;
}

/// Same bound with the distinctness precondition checked on A.
inline BoundReport sumset_lower_bound_check(const SortedSet& A, const SortedSet& B, int r) {
    if (!has_distinct_consecutive_r_diffs(A, r))
        throw invalid_input("sumset_lower_bound: A lacks distinct consecutive r-differences");
    if (B.empty()) throw invalid_input("sumset_lower_bound: B must be nonempty");
    return sumset_lower_bound_sizes(A.size(), B.size(), sumset(A, B).size(), r);
}

/// For A subset B: |D_r(A)| <= C_r |B|^{1-1/(r+1)} |A+B|/|B| + r with
/// C_r = 2 r^{1-1/(r+1)} / ((r+1)!)^{1/(r+1)}. Decided exactly:
/// (D - r)^{r+1} r (r+1)! |B| <= (2r |A+B|)^{r+1}.
inline BoundReport subset_diff_bound_check(const SortedSet& A, const SortedSet& B, int r) {
    if (!A.subset_of(B)) throw invalid_input("subset_diff_bound: A must be a subset of B");
    if (A.size() <= static_cast<std::size_t>(r))
        throw invalid_input("subset_diff_bound: requires |A| > r");
    const unsigned e1 = static_cast<unsigned>(r) + 1;
    std::size_t D = distinct_r_diffs(A, r).size();
    std::size_t sum_size = sumset(A, B).size();

    Int factorial = 1;
    for (unsigned i = 2; i <= e1; ++i) factorial *= i;

    BoundReport rep;
    if (D <= static_cast<std::size_t>(r)) {
        rep.branch = "trivial";
        rep.holds = true;
    } else {
        Int lhs_pow = pow(Int(D) - r, e1) * r * factorial * Int(B.size());
        Int rhs_pow = pow(2 * Int(r) * Int(sum_size), e1);
        rep.holds = lhs_pow <= rhs_pow;
    }

    // displayed enclosure: rhs = 2r |A+B| (r (r+1)! |B|)^{-1/(r+1)} + r
    Bracket root = nth_root_bracket(Rat(Int(r) * factorial * Int(B.size())), e1, 96);
    Rat top = 2 * Rat(Int(r)) * Rat(Int(sum_size));
    rep.rhs = {top / root.hi + r, top / root.lo + r};
    rep.lhs = detail::exact(Rat(Int(D)));
    rep.ratio = {rep.lhs.lo / rep.rhs.hi, rep.lhs.lo / rep.rhs.lo};
    return rep;
}

/// Mod-p dichotomy: either A + B covers all residues, or the sumset lower
/// bound applies to the representative sets.
inline BoundReport mod_p_dichotomy_check(const std::vector<Int>& A, const std::vector<Int>& B,
                                         const Int& p, int r) {
    if (B.empty()) throw invalid_input("mod_p_dichotomy: B must be nonempty");
    ModSumset ms = sumset_mod_p(A, B, p);
    if (ms.full) {
        // the covering branch needs no hypothesis on A
        BoundReport rep;
        rep.branch = "full";
        rep.holds = true;
        rep.lhs = detail::exact(Rat(p));
        rep.rhs = detail::exact(Rat(p));
        rep.ratio = detail::exact(Rat(1));
        return rep;
    }
    SortedSet reps = order_mod_p(A, p);
    if (!has_distinct_consecutive_r_diffs(reps, r))
        throw invalid_input("mod_p_dichotomy: A lacks distinct consecutive r-differences mod p");
    SortedSet repsB = order_mod_p(B, p);
    return sumset_lower_bound_sizes(reps.size(), repsB.size(), ms.residues.size(), r);
}

/// Product-form ratio for d families: prod |A_m + B_m| over
/// (k^{dr+1} l_1 ... l_d)^{1/(d(r+1))}. No threshold is asserted; the ratio
/// enclosure is returned for logging.
struct MultidimReport {
    Bracket ratio;
    bool trivial_branch = false; // k < 2 r d
    std::vector<std::size_t> sum_sizes;
};

inline MultidimReport multidim_ratio(const std::vector<SortedSet>& As, const std::vector<SortedSet>& Bs,
                                     int r) {
    if (As.empty() || As.size() != Bs.size())
        throw invalid_input("multidim_ratio: need matching nonempty family lists");
    if (!has_distinct_dtuples(As, r))
        throw invalid_input("multidim_ratio: families lack distinct d-tuples of consecutive r-differences");
    const std::size_t d = As.size();
    const std::size_t k = As.front().size();

    MultidimReport rep;
    Int prod_sums = 1;
    Int denom = pow(Int(k), static_cast<unsigned>(d) * static_cast<unsigned>(r) + 1);
    for (std::size_t m = 0; m < d; ++m) {
        if (Bs[m].empty()) throw invalid_input("multidim_ratio: empty B family");
        std::size_t s = sumset(As[m], Bs[m]).size();
        rep.sum_sizes.push_back(s);
        prod_sums *= Int(s);
        denom *= Int(Bs[m].size());
    }
    unsigned root_deg = static_cast<unsigned>(d) * (static_cast<unsigned>(r) + 1);
    Bracket root = nth_root_bracket(Rat(denom), root_deg, 96);
    rep.ratio = bracket_div_into(Rat(prod_sums), root);
    rep.trivial_branch = k < static_cast<std::size_t>(2 * r) * d;
    return rep;
}

} // namespace gapforge
