#pragma once

// Returning times R_theta(phi) = {T >= 1 : {T theta} < phi}, the minimal
// Slater pair (a, b), the analytic partitions of [0, phi) that determine the
// next one and next two gaps from {s theta}, empirical distinct-window
// counts, and the exact duality with a rotation orbit for rational theta.

#include <cstdint>
#include <limits>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "gapforge/errors.hpp"
#include "gapforge/rational.hpp"
#include "gapforge/threegap.hpp"

namespace gapforge {

struct ReturnSet {
    Rat theta, phi;
    std::int64_t t_max = 0;
    std::vector<std::int64_t> times;
};

namespace detail {

// {T theta} < phi as a pure residue comparison: with theta = p/q and
// phi = n/d, keep T iff res(T) * d < n * q. Returns the integer threshold K
// and whether res == K would hit {T theta} == phi exactly.
struct ResidueThreshold {
    Int limit;       // keep iff res < limit (exact) or res <= limit (inexact)
    bool exact_hit;  // boundary res == limit means {T theta} == phi
};

inline ResidueThreshold residue_threshold(const Rat& phi, const Int& q) {
    Int t = rat_num(phi) * q;
    const Int& d = rat_den(phi);
    ResidueThreshold r;
    r.limit = t / d;
    r.exact_hit = (t % d == 0);
    return r;
}

inline bool residue_below(const Int& res, const ResidueThreshold& th) {
    return th.exact_hit ? res < th.limit : res <= th.limit;
}

} // namespace detail

/// Exact enumeration of R_theta(phi) up to t_max. A boundary hit
/// {T theta} == phi is reported as degenerate rather than resolved.
inline ReturnSet returning_times(const Rat& theta, const Rat& phi, std::int64_t t_max) {
    if (theta <= 0 || theta >= 1) throw invalid_input("returning_times: theta must be in (0,1)");
    if (phi <= 0 || phi >= 1) throw invalid_input("returning_times: phi must be in (0,1)");
    if (t_max < 1) throw invalid_input("returning_times: t_max must be >= 1");

    ReturnSet out;
    out.theta = theta;
    out.phi = phi;
    out.t_max = t_max;

    const Int& q = rat_den(theta);
    Int p = mod_pos(rat_num(theta), q);
    auto th = detail::residue_threshold(phi, q);

    if (q <= (Int(1) << 31)) {
        // residues fit comfortably in 64 bits
        std::int64_t qi = to_int64(q), pi = to_int64(p), ki = to_int64(th.limit);
        std::int64_t res = 0;
        for (std::int64_t T = 1; T <= t_max; ++T) {
            res += pi;
            if (res >= qi) res -= qi;
            if (th.exact_hit && res == ki)
                throw degenerate_input("returning_times: {T theta} == phi exactly at T = " + std::to_string(T));
            if (th.exact_hit ? res < ki : res <= ki) out.times.push_back(T);
        }
    } else {
        Int res = 0;
        for (std::int64_t T = 1; T <= t_max; ++T) {
            res += p;
            if (res >= q) res -= q;
            if (th.exact_hit && res == th.limit)
                throw degenerate_input("returning_times: {T theta} == phi exactly at T = " + std::to_string(T));
            if (detail::residue_below(res, th)) out.times.push_back(T);
        }
    }
    return out;
}

/// Minimal a with {a theta} < phi and minimal b with 1 - {b theta} < phi,
/// together with alpha = {a theta} and beta = 1 - {b theta}. The defining
/// minimality forces phi > max(alpha, beta) and phi <= alpha + beta.
struct SlaterPair {
    std::int64_t a = 0, b = 0;
    Rat alpha, beta;
};

inline SlaterPair slater_pair(const Rat& theta, const Rat& phi) {
    if (theta <= 0 || theta >= 1) throw invalid_input("slater_pair: theta must be in (0,1)");
    if (phi <= 0 || phi >= 1) throw invalid_input("slater_pair: phi must be in (0,1)");

    const Int& q = rat_den(theta);
    Int p = mod_pos(rat_num(theta), q);
    auto low = detail::residue_threshold(phi, q);        // res/q <  phi
    auto high = detail::residue_threshold(Rat(1) - phi, q); // res/q > 1 - phi <=> !(res/q <= 1-phi)

    SlaterPair s;
    Int res = 0;
    std::int64_t qi_bound = q > Int(std::numeric_limits<std::int64_t>::max()) ? std::numeric_limits<std::int64_t>::max()
                                                                              : to_int64(q);
    for (std::int64_t m = 1; m <= qi_bound; ++m) {
        res += p;
        if (res >= q) res -= q;
        if (s.a == 0 && detail::residue_below(res, low)) {
            s.a = m;
            s.alpha = Rat(res, q);
        }
        // res/q > 1 - phi reduces to res > limit in both threshold cases
        if (s.b == 0 && res > high.limit) {
            s.b = m;
            s.beta = Rat(1) - Rat(res, q);
        }
        if (s.a != 0 && s.b != 0) break;
    }
    if (s.a == 0 || s.b == 0)
        throw degenerate_input("slater_pair: no return within one period (phi <= 1/q)");
    if (!(phi > s.alpha && phi > s.beta) || !(phi <= s.alpha + s.beta))
        throw std::logic_error("slater_pair: minimality invariants violated");
    return s;
}

/// Labeled partition of [0, phi) into half-open cells; cells may be empty
/// when adjacent breakpoints coincide.
struct GapPartition {
    std::vector<Rat> bounds;                      // bounds[0] = 0, bounds.back() = phi
    std::vector<std::vector<std::int64_t>> labels; // one tuple per cell
    int case_id = 0;                              // 0 for order 1; 1..3 for order 2

    const std::vector<std::int64_t>* cell_of(const Rat& x) const {
        for (std::size_t i = 0; i + 1 < bounds.size(); ++i)
            if (bounds[i] <= x && x < bounds[i + 1]) return &labels[i];
        return nullptr;
    }

    /// Labels of nonempty cells, deduplicated.
    std::set<std::vector<std::int64_t>> nonempty_labels() const {
        std::set<std::vector<std::int64_t>> out;
        for (std::size_t i = 0; i + 1 < bounds.size(); ++i)
            if (bounds[i] < bounds[i + 1]) out.insert(labels[i]);
        return out;
    }
};

/// Next-gap partition: [0, phi-alpha) -> a, [phi-alpha, beta) -> a+b,
/// [beta, phi) -> b.
inline GapPartition next_gap_partition(const SlaterPair& s, const Rat& phi) {
    GapPartition g;
    g.bounds = {Rat(0), phi - s.alpha, s.beta, phi};
    g.labels = {{s.a}, {s.a + s.b}, {s.b}};
    for (std::size_t i = 0; i + 1 < g.bounds.size(); ++i)
        if (g.bounds[i] > g.bounds[i + 1])
            throw std::logic_error("next_gap_partition: breakpoints out of order");
    return g;
}

/// Next-two-gaps partition. Exactly one of three strict orderings of
/// {phi-alpha, phi-beta, alpha, beta} is handled; boundary equalities or the
/// unlisted ordering yield an unmatched result with a note.
struct NextTwoGaps {
    std::optional<GapPartition> partition;
    std::string note; // set when no case matches
};

inline NextTwoGaps next_two_gaps_partition(const SlaterPair& s, const Rat& phi) {
    const Rat& al = s.alpha;
    const Rat& be = s.beta;
    const std::int64_t a = s.a, b = s.b, ab = s.a + s.b;
    NextTwoGaps out;

    auto make = [&](int case_id, std::vector<Rat> bounds,
                    std::vector<std::vector<std::int64_t>> labels) {
        GapPartition g;
        g.bounds = std::move(bounds);
        g.labels = std::move(labels);
        g.case_id = case_id;
        for (std::size_t i = 0; i + 1 < g.bounds.size(); ++i)
            if (g.bounds[i] > g.bounds[i + 1])
                throw std::logic_error("next_two_gaps_partition: breakpoints out of order");
        out.partition = std::move(g);
    };

    if (phi - al < phi - be && phi - be < be && be < al) {
        make(1, {Rat(0), phi - al, 2 * be - al, be, phi - al + be, phi},
             {{a, b}, {ab, ab}, {ab, b}, {b, a}, {b, ab}});
    } else if (phi - be < phi - al && phi - al < al && al < be) {
        make(2, {Rat(0), be - al, phi - al, phi - 2 * al + be, be, phi},
             {{a, ab}, {a, b}, {ab, a}, {ab, ab}, {b, a}});
    } else if (phi - be < al && al < phi - al && phi - al < be) {
        make(3, {Rat(0), phi - 2 * al, be - al, phi - al, be, phi},
             {{a, a}, {a, ab}, {a, b}, {ab, a}, {b, a}});
    } else {
        out.note = "no strict case ordering matches (boundary equality or unlisted ordering)";
    }
    return out;
}

/// Distinct sliding r-windows of the gap sequence, with the trailing r
/// windows near the horizon discarded.
inline std::set<std::vector<std::int64_t>> empirical_r_diffs(const ReturnSet& rs, int r) {
    if (r < 1) throw invalid_input("empirical_r_diffs: r must be >= 1");
    const auto& t = rs.times;
    if (t.size() < static_cast<std::size_t>(2 * r + 1))
        throw invalid_input("empirical_r_diffs: too few returns below the horizon");
    std::vector<std::int64_t> gaps(t.size() - 1);
    for (std::size_t i = 0; i + 1 < t.size(); ++i) gaps[i] = t[i + 1] - t[i];
    std::set<std::vector<std::int64_t>> windows;
    // windows i = 0 .. (#gaps - r), minus the trailing r of them
    std::size_t total = gaps.size() - static_cast<std::size_t>(r) + 1;
    for (std::size_t i = 0; i + static_cast<std::size_t>(r) < total; ++i)
        windows.insert(std::vector<std::int64_t>(gaps.begin() + static_cast<std::ptrdiff_t>(i),
                                                 gaps.begin() + static_cast<std::ptrdiff_t>(i + static_cast<std::size_t>(r))));
    return windows;
}

/// Pointwise check that each observed tuple of `order` consecutive gaps
/// matches the partition cell of {s theta}.
struct PartitionMatch {
    bool all_match = true;
    std::int64_t mismatch_time = 0;
    std::string detail;
    std::int64_t checked = 0;
};

inline PartitionMatch check_gap_partition(const ReturnSet& rs, const GapPartition& part, int order) {
    PartitionMatch rep;
    const Int& q = rat_den(rs.theta);
    Int p = mod_pos(rat_num(rs.theta), q);
    for (std::size_t i = 0; i + static_cast<std::size_t>(order) < rs.times.size(); ++i) {
        std::int64_t s = rs.times[i];
        std::vector<std::int64_t> observed(static_cast<std::size_t>(order));
        for (int j = 0; j < order; ++j)
            observed[static_cast<std::size_t>(j)] =
                rs.times[i + static_cast<std::size_t>(j) + 1] - rs.times[i + static_cast<std::size_t>(j)];
        Rat x(mod_pos(Int(s) * p, q), q);
        const auto* expected = part.cell_of(x);
        ++rep.checked;
        if (expected == nullptr || *expected != observed) {
            rep.all_match = false;
            rep.mismatch_time = s;
            rep.detail = expected == nullptr ? "{s theta} outside every cell" : "tuple differs from cell label";
            return rep;
        }
    }
    return rep;
}

/// Exact duality between one period of R_{p/q}(N/q) and the orbit of
/// p' / q (p p' == 1 mod q): the period set equals the orbit scaled by q and
/// translated by -p', and the cyclic r-window sets coincide after scaling.
/// The unshifted set equality is also evaluated and reported.
struct DualityReport {
    Int p_prime;
    std::vector<std::int64_t> period_set;    // {1 <= s <= q : {s p/q} < N/q}
    bool translated_set_equal = false;
    bool unshifted_set_equal = false;
    bool cyclic_diffs_scaled = false;
};

inline DualityReport duality_check(std::int64_t p, std::int64_t q, std::int64_t N, int r) {
    if (q < 2 || p < 1) throw invalid_input("duality_check: need q >= 2, p >= 1");
    if (gcd(Int(p), Int(q)) != 1) throw invalid_input("duality_check: p and q must be coprime");
    if (N < 1 || N >= q) throw invalid_input("duality_check: need 1 <= N < q");
    if (r < 1 || N <= r) throw invalid_input("duality_check: need N > r >= 1");

    DualityReport rep;

    // p' = p^{-1} mod q by extended Euclid
    {
        std::int64_t old_r = p % q, rr = q, old_s = 1, ss = 0;
        while (rr != 0) {
            std::int64_t quot = old_r / rr;
            std::int64_t tmp = old_r - quot * rr;
            old_r = rr;
            rr = tmp;
            tmp = old_s - quot * ss;
            old_s = ss;
            ss = tmp;
        }
        rep.p_prime = mod_pos(Int(old_s), Int(q));
    }
    std::int64_t pp = to_int64(rep.p_prime);

    for (std::int64_t s = 1; s <= q; ++s)
        if ((s * (p % q)) % q < N) rep.period_set.push_back(s);

    // orbit residues q * {t p'/q} for t = 1..N
    std::vector<std::int64_t> orbit_resid;
    orbit_resid.reserve(static_cast<std::size_t>(N));
    for (std::int64_t t = 1; t <= N; ++t) orbit_resid.push_back((t * pp) % q);
    std::vector<std::int64_t> orbit_sorted = orbit_resid;
    std::sort(orbit_sorted.begin(), orbit_sorted.end());

    rep.unshifted_set_equal = rep.period_set == orbit_sorted;

    std::vector<std::int64_t> translated;
    translated.reserve(static_cast<std::size_t>(N));
    for (std::int64_t t = 0; t < N; ++t) {
        std::int64_t v = (t * pp) % q;
        translated.push_back(v == 0 ? q : v); // representative in 1..q
    }
    std::sort(translated.begin(), translated.end());
    rep.translated_set_equal = rep.period_set == translated;

    // cyclic r-window sets on the circle Z/q: translation-invariant, so the
    // two sides must agree exactly after scaling by q
    auto cyclic_windows = [&](const std::vector<std::int64_t>& pts) {
        std::size_t n = pts.size();
        std::vector<std::int64_t> gaps(n);
        for (std::size_t i = 0; i + 1 < n; ++i) gaps[i] = pts[i + 1] - pts[i];
        gaps[n - 1] = pts.front() + q - pts.back();
        std::set<std::vector<std::int64_t>> w;
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<std::int64_t> t(static_cast<std::size_t>(r));
            for (int j = 0; j < r; ++j) t[static_cast<std::size_t>(j)] = gaps[(i + static_cast<std::size_t>(j)) % n];
            w.insert(std::move(t));
        }
        return w;
    };
    rep.cyclic_diffs_scaled = cyclic_windows(rep.period_set) == cyclic_windows(orbit_sorted);
    return rep;
}

} // namespace gapforge
