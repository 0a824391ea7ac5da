#pragma once

// Rotation orbits S_alpha(N) = {{n alpha} : 1 <= n <= N} sorted in [0,1),
// their cyclic consecutive r-difference windows, the neighbor frame around
// {alpha}, the label breakpoint table that makes window lookup piecewise
// constant in n, the reversal symmetry n -> N+1-n, and multi-shift unions.
//
// All points share the denominator of alpha, so the orbit is stored as
// sorted integer numerators; every comparison is exact.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "gapforge/errors.hpp"
#include "gapforge/rational.hpp"
#include "gapforge/sets.hpp"

namespace gapforge {

class LabeledOrbit {
public:
    /// Sorted labeled orbit of {n alpha}, n = 1..N. Throws degenerate_input
    /// if two labels land on the same point.
    static LabeledOrbit build(const Rat& alpha, std::int64_t N) {
        if (N < 1) throw invalid_input("orbit: N must be >= 1");
        LabeledOrbit o;
        o.alpha_ = alpha;
        o.n_ = N;
        o.q_ = rat_den(alpha);
        Int p = mod_pos(rat_num(alpha), o.q_);
        std::vector<std::pair<Int, std::int64_t>> pts;
        pts.reserve(static_cast<std::size_t>(N));
        Int res = 0;
        for (std::int64_t n = 1; n <= N; ++n) {
            res += p;
            if (res >= o.q_) res -= o.q_;
            pts.emplace_back(res, n);
        }
        std::sort(pts.begin(), pts.end());
        for (std::size_t i = 1; i < pts.size(); ++i)
            if (pts[i - 1].first == pts[i].first)
                throw degenerate_input("orbit: labels " + std::to_string(pts[i - 1].second) + " and " +
                                       std::to_string(pts[i].second) + " share a point");
        o.nums_.reserve(pts.size());
        o.labels_.reserve(pts.size());
        o.pos_of_label_.assign(static_cast<std::size_t>(N) + 1, -1);
        for (std::size_t i = 0; i < pts.size(); ++i) {
            o.nums_.push_back(std::move(pts[i].first));
            o.labels_.push_back(pts[i].second);
            o.pos_of_label_[static_cast<std::size_t>(pts[i].second)] = static_cast<std::int64_t>(i);
        }
        return o;
    }

    const Rat& alpha() const { return alpha_; }
    std::int64_t size() const { return n_; }
    const Int& denom() const { return q_; }

    Rat point(std::int64_t pos) const { return Rat(nums_[idx(pos)], q_); }
    std::int64_t label(std::int64_t pos) const { return labels_[idx(pos)]; }
    std::int64_t position_of_label(std::int64_t n) const {
        if (n < 1 || n > n_) throw invalid_input("orbit: label out of range");
        return pos_of_label_[static_cast<std::size_t>(n)];
    }
    const std::vector<Int>& point_nums() const { return nums_; }
    const std::vector<std::int64_t>& labels() const { return labels_; }

    /// Numerator of the cyclic gap from position pos to pos+1 (the wrap gap
    /// closes the circle, so all N gaps sum to exactly q, i.e. to 1).
    Int gap_num(std::int64_t pos) const {
        std::size_t i = idx(pos);
        if (i + 1 < nums_.size()) return nums_[i + 1] - nums_[i];
        return nums_.front() + q_ - nums_.back();
    }

    /// r cyclic gaps starting at position pos, as numerators over denom().
    std::vector<Int> window_nums(std::int64_t pos, int r) const {
        std::vector<Int> w;
        w.reserve(static_cast<std::size_t>(r));
        for (int i = 0; i < r; ++i) w.push_back(gap_num((pos + i) % n_));
        return w;
    }

    RDiffTuple window(std::int64_t pos, int r) const {
        RDiffTuple t;
        t.reserve(static_cast<std::size_t>(r));
        for (const Int& g : window_nums(pos, r)) t.emplace_back(g, q_);
        return t;
    }

private:
    std::size_t idx(std::int64_t pos) const {
        if (pos < 0 || pos >= n_) throw invalid_input("orbit: position out of range");
        return static_cast<std::size_t>(pos);
    }

    Rat alpha_;
    std::int64_t n_ = 0;
    Int q_;
    std::vector<Int> nums_;
    std::vector<std::int64_t> labels_;
    std::vector<std::int64_t> pos_of_label_;
};

inline LabeledOrbit orbit(const Rat& alpha, std::int64_t N) { return LabeledOrbit::build(alpha, N); }

/// Distinct cyclic r-windows of consecutive gaps (indices wrap, differences
/// taken mod 1). At most 2r+1 tuples occur for any rotation orbit.
inline std::set<RDiffTuple> cyclic_r_diffs(const LabeledOrbit& o, int r) {
    if (r < 1) throw invalid_input("cyclic_r_diffs: r must be >= 1");
    if (o.size() <= r) throw invalid_input("cyclic_r_diffs: requires N > r");
    std::set<std::vector<Int>> nums;
    for (std::int64_t i = 0; i < o.size(); ++i) nums.insert(o.window_nums(i, r));
    std::set<RDiffTuple> out;
    for (const auto& w : nums) {
        RDiffTuple t;
        t.reserve(w.size());
        for (const Int& g : w) t.emplace_back(g, o.denom());
        out.insert(std::move(t));
    }
    return out;
}

/// Labels of the r points on each side of {alpha}: left[0] < ... < left[r-1]
/// < {alpha} < right[0] < ... < right[r-1] in point order (left[0] is the
/// outermost left neighbor, right[0] the innermost right neighbor).
struct NeighborFrame {
    std::vector<std::int64_t> left, right;
};

inline NeighborFrame neighbor_frame(const LabeledOrbit& o, int r) {
    if (r < 1) throw invalid_input("neighbor_frame: r must be >= 1");
    std::int64_t pos = o.position_of_label(1);
    if (pos - r < 0 || pos + r >= o.size())
        throw invalid_input("neighbor_frame: N too small, {alpha} lacks " + std::to_string(r) +
                            " neighbors on each side");
    NeighborFrame f;
    for (int t = 1; t <= r; ++t) f.left.push_back(o.label(pos - r + t - 1));
    for (int t = 1; t <= r; ++t) f.right.push_back(o.label(pos + t));
    return f;
}

/// Sorted labels p_0 = 1 < p_1 < ... < p_{2r} from
/// {1, L_1..L_r, N+2-R_1..N+2-R_r}; the r-window starting at {n alpha} is
/// constant on each [p_i, p_{i+1}) and on [p_{2r}, N].
struct BreakpointTable {
    std::vector<std::int64_t> breakpoints;
    std::vector<std::vector<Int>> window_nums; // per breakpoint, over denom
    Int denom;
    std::int64_t n = 0;

    std::vector<std::pair<std::int64_t, std::int64_t>> intervals() const {
        std::vector<std::pair<std::int64_t, std::int64_t>> iv;
        for (std::size_t i = 0; i < breakpoints.size(); ++i) {
            std::int64_t hi = i + 1 < breakpoints.size() ? breakpoints[i + 1] - 1 : n;
            iv.emplace_back(breakpoints[i], hi);
        }
        return iv;
    }

    const std::vector<Int>& lookup_nums(std::int64_t label) const {
        auto it = std::upper_bound(breakpoints.begin(), breakpoints.end(), label);
        if (it == breakpoints.begin()) throw invalid_input("breakpoint lookup: label below 1");
        return window_nums[static_cast<std::size_t>(it - breakpoints.begin() - 1)];
    }

    RDiffTuple lookup(std::int64_t label) const {
        RDiffTuple t;
        for (const Int& g : lookup_nums(label)) t.emplace_back(g, denom);
        return t;
    }
};

inline BreakpointTable breakpoint_table(const LabeledOrbit& o, int r) {
    NeighborFrame f = neighbor_frame(o, r);
    std::vector<std::int64_t> cands{1};
    for (std::int64_t l : f.left) cands.push_back(l);
    for (std::int64_t rr : f.right) cands.push_back(o.size() + 2 - rr);
    std::sort(cands.begin(), cands.end());
    for (std::size_t i = 1; i < cands.size(); ++i)
        if (cands[i - 1] == cands[i])
            throw degenerate_input("breakpoint_table: candidate label " + std::to_string(cands[i]) +
                                   " occurs twice (neighbor frame collision)");
    if (cands.back() > o.size())
        throw degenerate_input("breakpoint_table: candidate label exceeds N");

    BreakpointTable t;
    t.breakpoints = std::move(cands);
    t.denom = o.denom();
    t.n = o.size();
    t.window_nums.reserve(t.breakpoints.size());
    for (std::int64_t p : t.breakpoints)
        t.window_nums.push_back(o.window_nums(o.position_of_label(p), r));
    return t;
}

/// Compares the table lookup with the directly extracted window for every
/// label 1..N-r.
struct TableSoundness {
    bool holds = true;
    std::int64_t first_mismatch = 0;
};

inline TableSoundness check_breakpoint_table(const LabeledOrbit& o, const BreakpointTable& t, int r) {
    TableSoundness s;
    for (std::int64_t n = 1; n + r <= o.size(); ++n) {
        if (t.lookup_nums(n) != o.window_nums(o.position_of_label(n), r)) {
            s.holds = false;
            s.first_mismatch = n;
            return s;
        }
    }
    return s;
}

/// The map n -> N+1-n sends the cyclic sequence of sorted labels to its own
/// reversal up to rotation (the reflection x -> {(N+1)alpha - x} reverses
/// the circle). Verified exhaustively.
struct ReversalReport {
    bool holds = true;
    std::int64_t witness_index = -1; // cyclic position of the first mismatch
};

inline ReversalReport reversal_check(const LabeledOrbit& o) {
    const auto& labels = o.labels();
    const std::int64_t N = o.size();
    ReversalReport rep;
    if (N == 1) return rep;
    // image[i] = N+1 - labels[N-1-i] must be a rotation of labels
    std::int64_t offset = o.position_of_label(N + 1 - labels.back());
    for (std::int64_t i = 0; i < N; ++i) {
        std::int64_t image = N + 1 - labels[static_cast<std::size_t>(N - 1 - i)];
        if (labels[static_cast<std::size_t>((offset + i) % N)] != image) {
            rep.holds = false;
            rep.witness_index = i;
            return rep;
        }
    }
    return rep;
}

/// Union of k shifted orbits {alpha n + lambda_i}, n = 1..N_i, with its
/// distinct cyclic r-windows and the (2r+1)k ceiling.
struct MultiShift {
    std::vector<Rat> points; // sorted
    std::set<RDiffTuple> diffs;
    std::size_t bound = 0; // (2r+1) * number of shifts
    bool within_bound = false;
};

inline MultiShift multishift_orbit(const Rat& alpha, const std::vector<Rat>& lambdas,
                                   const std::vector<std::int64_t>& Ns, int r) {
    if (lambdas.empty() || lambdas.size() != Ns.size())
        throw invalid_input("multishift_orbit: need one N per shift");
    if (r < 1) throw invalid_input("multishift_orbit: r must be >= 1");
    Int L = rat_den(alpha);
    for (const Rat& l : lambdas) L = lcm(L, rat_den(l));
    Int step = mod_pos(rat_num(alpha) * (L / rat_den(alpha)), L);
    std::vector<Int> res;
    for (std::size_t i = 0; i < lambdas.size(); ++i) {
        if (Ns[i] < 1) throw invalid_input("multishift_orbit: N must be >= 1");
        Int base = mod_pos(rat_num(lambdas[i]) * (L / rat_den(lambdas[i])), L);
        Int cur = base;
        for (std::int64_t n = 1; n <= Ns[i]; ++n) {
            cur += step;
            if (cur >= L) cur -= L;
            res.push_back(cur);
        }
    }
    std::sort(res.begin(), res.end());
    for (std::size_t i = 1; i < res.size(); ++i)
        if (res[i - 1] == res[i]) throw degenerate_input("multishift_orbit: two shifts share a point");

    MultiShift out;
    const std::size_t n = res.size();
    if (n <= static_cast<std::size_t>(r))
        throw invalid_input("multishift_orbit: fewer than r+1 points");
    std::vector<Int> gaps(n);
    for (std::size_t i = 0; i + 1 < n; ++i) gaps[i] = res[i + 1] - res[i];
    gaps[n - 1] = res.front() + L - res.back();
    for (std::size_t i = 0; i < n; ++i) {
        RDiffTuple t;
        for (int j = 0; j < r; ++j) t.emplace_back(gaps[(i + static_cast<std::size_t>(j)) % n], L);
        out.diffs.insert(std::move(t));
    }
    out.points.reserve(n);
    for (const Int& x : res) out.points.emplace_back(x, L);
    out.bound = static_cast<std::size_t>(2 * r + 1) * lambdas.size();
    out.within_bound = out.diffs.size() <= out.bound;
    return out;
}

} // namespace gapforge
