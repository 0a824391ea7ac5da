#pragma once

// Explicit extremal constructions: the planar pair (i, s_i), (i, 0) embedded
// into the integers by phi(u, v) = M u + v, whose sumset stays within
// 2 k |S| while the first set keeps distinct consecutive r-differences; the
// nested pair A subset B built from partial sums of a window sequence; and
// the self-sumset diagnostics for the embedded set.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <set>
#include <vector>

#include "gapforge/debruijn.hpp"
#include "gapforge/errors.hpp"
#include "gapforge/rational.hpp"
#include "gapforge/roots.hpp"
#include "gapforge/sets.hpp"
#include "gapforge/sidon.hpp"

namespace gapforge {

struct ExtremalPair {
    SortedSet A, B;           // embedded integer sets, |A| = |B| = k
    Int M;                    // embedding modulus, > 2(max S - min S)
    std::size_t k = 0;        // |S| (|S|-1)^r
    int r = 0;
    std::vector<Int> symbols; // s_1..s_k along the window sequence
    std::size_t sumset_size = 0; // |A+B|, exact
    std::size_t sumset_cap = 0;  // 2 k |S|
};

namespace detail {

// |{(i+j, s_i)}| summed over u = i+j, with certified block disjointness of
// the embedded values M u + s_i. Returns the count, or 0 if some adjacent
// blocks would overlap under M (caller then enlarges M).
inline std::size_t embedded_sumset_size(const std::vector<int>& idx, const std::vector<Int>& alphabet,
                                        const Int& M) {
    const std::size_t k = idx.size();
    const std::size_t m = alphabet.size();
    std::vector<std::size_t> count(m, 0);
    std::size_t distinct = 0;
    std::size_t total = 0;
    bool have_prev = false;
    Int prev_max;
    // window of symbol indices i in [max(1, u-k), min(k, u-1)], 1-based
    for (std::size_t u = 2; u <= 2 * k; ++u) {
        std::size_t add = u - 1; // i joining the window
        if (add <= k) {
            std::size_t s = static_cast<std::size_t>(idx[add - 1]);
            if (count[s]++ == 0) ++distinct;
        }
        if (u > k + 1) {
            std::size_t drop = u - k - 1;
            std::size_t s = static_cast<std::size_t>(idx[drop - 1]);
            if (--count[s] == 0) --distinct;
        }
        total += distinct;
        Int mn, mx;
        bool first = true;
        for (std::size_t s = 0; s < m; ++s) {
            if (count[s] == 0) continue;
            if (first || alphabet[s] < mn) mn = alphabet[s];
            if (first || alphabet[s] > mx) mx = alphabet[s];
            first = false;
        }
        Int block_min = M * Int(u) + mn;
        if (have_prev && prev_max >= block_min) return 0; // blocks interleave
        prev_max = M * Int(u) + mx;
        have_prev = true;
    }
    return total;
}

} // namespace detail

/// The sharp pair for a Sidon alphabet: A = {M i + s_i}, B = {M i} with
/// |A+B| <= 2 k |S|. M starts at 2(max S - min S) + 1 and doubles until the
/// embedding provably preserves the planar sumset size.
inline ExtremalPair extremal_pair(const SidonSet& S, int r) {
    if (S.elems.size() < 2) throw invalid_input("extremal_pair: |S| must be >= 2");
    if (r < 1) throw invalid_input("extremal_pair: r must be >= 1");
    if (auto w = sidon_violation(S.elems))
        throw invalid_input("extremal_pair: alphabet is not Sidon (" + w->a.str() + "+" + w->b.str() +
                            " = " + w->c.str() + "+" + w->d.str() + ")");

    ExtremalPair out;
    out.r = r;
    std::vector<int> idx = window_sequence(static_cast<int>(S.elems.size()), r);
    out.k = idx.size();
    out.symbols.reserve(out.k);
    for (int i : idx) out.symbols.push_back(S.elems[static_cast<std::size_t>(i)]);

    Int spread = S.elems.back() - S.elems.front();
    out.M = 2 * spread + 1;
    for (;;) {
        std::size_t size = detail::embedded_sumset_size(idx, S.elems, out.M);
        if (size != 0) {
            out.sumset_size = size;
            break;
        }
        out.M *= 2;
    }

    std::vector<Rat> a_vals, b_vals;
    a_vals.reserve(out.k);
    b_vals.reserve(out.k);
    for (std::size_t i = 1; i <= out.k; ++i) {
        a_vals.emplace_back(out.M * Int(i) + out.symbols[i - 1]);
        b_vals.emplace_back(out.M * Int(i));
    }
    out.A = SortedSet::from_sorted(std::move(a_vals));
    out.B = SortedSet::from_sorted(std::move(b_vals));
    out.sumset_cap = 2 * out.k * S.elems.size();
    return out;
}

/// Certified enclosure of sum / (a * b^{1/(r+1)}).
inline Bracket sumset_ratio(std::size_t sum, std::size_t a, std::size_t b, int r, unsigned bits = 96) {
    if (a == 0 || b == 0) throw invalid_input("sumset_ratio: empty set");
    Bracket root = nth_root_bracket(Rat(Int(b)), static_cast<unsigned>(r) + 1, bits);
    return bracket_div_into(Rat(Int(sum)), bracket_scale(root, Rat(Int(a))));
}

/// Exact decision of sum <= c * a * b^{1/(r+1)} by raising to the (r+1)-th
/// power (c rational, everything nonnegative).
inline bool ratio_at_most(std::size_t sum, std::size_t a, std::size_t b, int r, const Rat& c) {
    unsigned e = static_cast<unsigned>(r) + 1;
    return rat_pow(Rat(Int(sum)), e) <= rat_pow(c * Rat(Int(a)), e) * Rat(Int(b));
}

struct SubsetExample {
    SortedSet A, B; // A subset B = {0..m^{r+1}}
    int m = 0, r = 0;
};

/// Partial sums a_i = s_1 + ... + s_i of a sequence over {1..m} whose cyclic
/// r-windows are distinct (order r-1 overlap construction; for r = 1 the
/// identity permutation suffices), inside B = {0..m^{r+1}}.
inline SubsetExample subset_example(int m, int r) {
    if (m < 2) throw invalid_input("subset_example: m must be >= 2");
    if (r < 1) throw invalid_input("subset_example: r must be >= 1");
    std::vector<int> idx;
    if (r == 1) {
        idx.resize(static_cast<std::size_t>(m));
        for (int i = 0; i < m; ++i) idx[static_cast<std::size_t>(i)] = i;
    } else {
        idx = window_sequence(m, r - 1);
    }

    SubsetExample out;
    out.m = m;
    out.r = r;
    std::vector<Rat> a_vals;
    a_vals.reserve(idx.size());
    Int acc = 0;
    for (int i : idx) {
        acc += i + 1; // symbols 1..m
        a_vals.emplace_back(acc);
    }
    out.A = SortedSet::from_sorted(std::move(a_vals));

    Int n = pow(Int(m), static_cast<unsigned>(r) + 1);
    std::vector<Rat> b_vals;
    b_vals.reserve(static_cast<std::size_t>(to_int64(n)) + 1);
    for (Int v = 0; v <= n; ++v) b_vals.emplace_back(v);
    out.B = SortedSet::from_sorted(std::move(b_vals));
    if (!out.A.subset_of(out.B)) throw std::logic_error("subset_example: A escapes B");
    return out;
}

struct SelfSumsetReport {
    std::size_t self_sumset = 0; // |A+A|
    Int ruzsa_lhs, ruzsa_rhs;    // |A+A| |B| <= |A+B|^2
    bool ruzsa_holds = false;
    double exponent_estimate = 0; // log|A+A| / log|A|, informational
};

/// Self-sumset diagnostics for an extremal pair. |A+A| is counted blockwise
/// over u = i+j; block disjointness holds since M > 2(max S - min S).
inline SelfSumsetReport self_sumset_report(const ExtremalPair& pair) {
    const std::size_t k = pair.k;
    std::set<Int> block;
    std::size_t total = 0;
    for (std::size_t u = 2; u <= 2 * k; ++u) {
        block.clear();
        std::size_t i_lo = u > k ? u - k : 1;
        std::size_t i_hi = std::min(k, u - 1);
        for (std::size_t i = i_lo; i <= i_hi; ++i)
            block.insert(pair.symbols[i - 1] + pair.symbols[u - i - 1]);
        total += block.size();
    }
    SelfSumsetReport rep;
    rep.self_sumset = total;
    rep.ruzsa_lhs = Int(total) * Int(pair.B.size());
    rep.ruzsa_rhs = Int(pair.sumset_size) * Int(pair.sumset_size);
    rep.ruzsa_holds = rep.ruzsa_lhs <= rep.ruzsa_rhs;
    rep.exponent_estimate = std::log(static_cast<double>(total)) / std::log(static_cast<double>(pair.A.size()));
    return rep;
}

} // namespace gapforge
