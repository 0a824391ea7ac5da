#pragma once

// Finite ordered sets of rationals: sumsets, consecutive difference windows,
// distinctness predicates, and the mod-p ordering variant.

#include <algorithm>
#include <cstddef>
#include <set>
#include <vector>

#include "gapforge/errors.hpp"
#include "gapforge/rational.hpp"

namespace gapforge {

/// An r-tuple of consecutive differences. Compared componentwise with exact
/// rational equality; vectors order lexicographically.
using RDiffTuple = std::vector<Rat>;

class SortedSet {
public:
    SortedSet() = default;

    /// Sorts and deduplicates.
    static SortedSet of(std::vector<Rat> values) {
        std::sort(values.begin(), values.end());
        values.erase(std::unique(values.begin(), values.end()), values.end());
        SortedSet s;
        s.v_ = std::move(values);
        return s;
    }

    /// Accepts a strictly increasing sequence as-is.
    static SortedSet from_sorted(std::vector<Rat> values) {
        for (std::size_t i = 1; i < values.size(); ++i)
            if (!(values[i - 1] < values[i]))
                throw invalid_input("SortedSet: sequence not strictly increasing");
        SortedSet s;
        s.v_ = std::move(values);
        return s;
    }

    std::size_t size() const { return v_.size(); }
    bool empty() const { return v_.empty(); }
    const Rat& operator[](std::size_t i) const { return v_[i]; }
    const std::vector<Rat>& values() const { return v_; }
    auto begin() const { return v_.begin(); }
    auto end() const { return v_.end(); }

    bool contains(const Rat& x) const {
        return std::binary_search(v_.begin(), v_.end(), x);
    }

    bool subset_of(const SortedSet& other) const {
        return std::includes(other.v_.begin(), other.v_.end(), v_.begin(), v_.end());
    }

    friend bool operator==(const SortedSet& a, const SortedSet& b) { return a.v_ == b.v_; }

private:
    std::vector<Rat> v_;
};

/// A + B = {a + b : a in A, b in B}. Empty factors yield an empty sumset.
inline SortedSet sumset(const SortedSet& A, const SortedSet& B) {
    std::vector<Rat> sums;
    sums.reserve(A.size() * B.size());
    for (const Rat& a : A)
        for (const Rat& b : B)
            sums.push_back(a + b);
    return SortedSet::of(std::move(sums));
}

/// The k - r windows (a_{i+1}-a_i, ..., a_{i+r}-a_{i+r-1}), i = 0..k-r-1.
inline std::vector<RDiffTuple> consecutive_r_diffs(const SortedSet& A, int r) {
    if (r < 1) throw invalid_input("consecutive_r_diffs: r must be >= 1");
    std::size_t k = A.size();
    if (k <= static_cast<std::size_t>(r))
        throw invalid_input("consecutive_r_diffs: requires |A| > r");
    std::vector<Rat> gaps(k - 1);
    for (std::size_t i = 0; i + 1 < k; ++i) gaps[i] = A[i + 1] - A[i];
    std::vector<RDiffTuple> out;
    out.reserve(k - r);
    for (std::size_t i = 0; i + r <= gaps.size(); ++i)
        out.emplace_back(gaps.begin() + i, gaps.begin() + i + r);
    return out;
}

inline std::set<RDiffTuple> distinct_r_diffs(const SortedSet& A, int r) {
    auto windows = consecutive_r_diffs(A, r);
    return {windows.begin(), windows.end()};
}

/// True iff all k - r windows are pairwise distinct.
inline bool has_distinct_consecutive_r_diffs(const SortedSet& A, int r) {
    auto windows = consecutive_r_diffs(A, r);
    std::set<RDiffTuple> seen(windows.begin(), windows.end());
    return seen.size() == windows.size();
}

/// Distinctness of the concatenated (d*r)-tuples across d families of equal
/// cardinality.
inline bool has_distinct_dtuples(const std::vector<SortedSet>& families, int r) {
    if (families.empty()) throw invalid_input("has_distinct_dtuples: no families");
    std::size_t k = families.front().size();
    for (const auto& f : families)
        if (f.size() != k) throw invalid_input("has_distinct_dtuples: families must have equal cardinality");
    std::vector<std::vector<RDiffTuple>> windows;
    windows.reserve(families.size());
    for (const auto& f : families) windows.push_back(consecutive_r_diffs(f, r));
    std::set<RDiffTuple> seen;
    for (std::size_t i = 0; i + r < k; ++i) {
        RDiffTuple cat;
        cat.reserve(families.size() * static_cast<std::size_t>(r));
        for (const auto& w : windows)
            cat.insert(cat.end(), w[i].begin(), w[i].end());
        if (!seen.insert(std::move(cat)).second) return false;
    }
    return true;
}

/// Elements of F_p listed by their smallest positive representative: each
/// residue maps into {1..p}, with 0 represented as p.
inline SortedSet order_mod_p(const std::vector<Int>& residues, const Int& p) {
    if (p < 2) throw invalid_input("order_mod_p: modulus must be >= 2");
    std::vector<Rat> reps;
    reps.reserve(residues.size());
    for (const Int& x : residues) {
        Int r = mod_pos(x, p);
        reps.emplace_back(r == 0 ? p : r);
    }
    std::sort(reps.begin(), reps.end());
    for (std::size_t i = 1; i < reps.size(); ++i)
        if (reps[i - 1] == reps[i]) throw invalid_input("order_mod_p: duplicate residues");
    return SortedSet::from_sorted(std::move(reps));
}

struct ModSumset {
    std::vector<Int> residues; // sorted, in 0..p-1
    bool full = false;
};

inline ModSumset sumset_mod_p(const std::vector<Int>& A, const std::vector<Int>& B, const Int& p) {
    if (p < 2) throw invalid_input("sumset_mod_p: modulus must be >= 2");
    std::set<Int> sums;
    for (const Int& a : A)
        for (const Int& b : B)
            sums.insert(mod_pos(a + b, p));
    ModSumset out;
    out.residues.assign(sums.begin(), sums.end());
    out.full = Int(out.residues.size()) == p;
    return out;
}

} // namespace gapforge
