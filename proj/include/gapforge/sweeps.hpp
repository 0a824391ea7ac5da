#pragma once

// Randomized verification sweeps. Each trial derives its own RNG stream from
// (seed, index), runs one instance, and reports a replayable witness on
// failure. Trials are independent and may be fanned across workers; the
// result is identical either way.

#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "gapforge/alpha.hpp"
#include "gapforge/bounds.hpp"
#include "gapforge/errors.hpp"
#include "gapforge/prng.hpp"
#include "gapforge/rational.hpp"
#include "gapforge/returning.hpp"
#include "gapforge/sets.hpp"
#include "gapforge/threegap.hpp"

namespace gapforge {

struct SweepCaps {
    std::size_t k = 200;        // |A|
    std::size_t l = 50;         // |B|
    std::int64_t n = 3000;      // orbit length
    std::int64_t t_max = 100000;
    int r = 3;
    int d = 2;
};

struct SweepResult {
    std::string suite;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    std::vector<std::pair<std::uint64_t, std::string>> failures; // (trial, witness)
    double min_ratio = 0;  // informational, suites that track ratios
    double max_ratio = 0;
    bool has_ratios = false;

    bool ok() const { return failures.empty(); }
};

inline unsigned worker_count(std::uint64_t trials) {
    unsigned n = std::thread::hardware_concurrency();
    if (n == 0) n = 1;
    if (const char* env = std::getenv("GAPFORGE_THREADS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v >= 1) n = static_cast<unsigned>(v);
    }
    if (trials < n) n = static_cast<unsigned>(trials);
    return n == 0 ? 1 : n;
}

/// Runs fn(trial) for trial = 0..trials-1 across workers.
template <typename F>
void parallel_trials(std::uint64_t trials, F&& fn) {
    unsigned workers = worker_count(trials);
    if (workers <= 1) {
        for (std::uint64_t i = 0; i < trials; ++i) fn(i);
        return;
    }
    std::atomic<std::uint64_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (;;) {
                std::uint64_t i = next.fetch_add(1);
                if (i >= trials) return;
                fn(i);
            }
        });
    }
    for (auto& t : pool) t.join();
}

// ---- random instance generators ----

inline std::string set_to_string(const SortedSet& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ",";
        out += rat_to_string(s[i]);
    }
    return out + "}";
}

/// k distinct integers in [0, range], as a sorted set.
inline SortedSet random_sorted_set(Rng& rng, std::size_t k, std::int64_t range) {
    std::set<std::int64_t> vals;
    while (vals.size() < k) vals.insert(rng.in(0, range));
    std::vector<Rat> v;
    v.reserve(k);
    for (std::int64_t x : vals) v.emplace_back(Int(x));
    return SortedSet::from_sorted(std::move(v));
}

/// Cumulative sums of k-1 distinct shuffled gaps: all consecutive windows
/// are distinct for every order r < k.
inline SortedSet random_distinct_gap_set(Rng& rng, std::size_t k) {
    std::set<std::int64_t> gapset;
    while (gapset.size() + 1 < k) gapset.insert(rng.in(1, static_cast<std::int64_t>(4 * k)));
    std::vector<std::int64_t> gaps(gapset.begin(), gapset.end());
    rng.shuffle(gaps);
    std::vector<Rat> v;
    v.reserve(k);
    Int acc = rng.in(0, 100);
    v.emplace_back(acc);
    for (std::int64_t g : gaps) {
        acc += g;
        v.emplace_back(acc);
    }
    return SortedSet::from_sorted(std::move(v));
}

/// Random rotation number via a random continued fraction, resolved to a
/// certified convergent for orbit length N.
inline Rat random_alpha(Rng& rng, std::int64_t N) {
    std::vector<Int> coeffs{0};
    for (int i = 0; i < 48; ++i) coeffs.emplace_back(rng.in(1, 9));
    return resolve_alpha(AlphaSpec::from_cf(std::move(coeffs)), N);
}

inline Rat random_phi(Rng& rng, std::int64_t max_den) {
    std::int64_t d = rng.in(2, max_den);
    std::int64_t n = rng.in(1, d - 1);
    return Rat(Int(n), Int(d));
}

// ---- verify suites ----

inline SweepResult run_counting_sweep(std::uint64_t seed, std::uint64_t trials, const SweepCaps& caps) {
    SweepResult res;
    res.suite = "dcd";
    res.trials = trials;
    res.seed = seed;
    std::vector<std::string> fail(trials);
    parallel_trials(trials, [&](std::uint64_t i) {
        Rng rng = trial_rng(seed, i);
        int r = static_cast<int>(rng.in(1, caps.r));
        std::size_t k = static_cast<std::size_t>(rng.in(3 * r + 2, static_cast<std::int64_t>(caps.k)));
        std::size_t l = static_cast<std::size_t>(rng.in(1, static_cast<std::int64_t>(caps.l)));
        SortedSet A;
        for (int attempt = 0;; ++attempt) {
            A = random_sorted_set(rng, k, static_cast<std::int64_t>(8 * k * k));
            if (distinct_r_diffs(A, r).size() > static_cast<std::size_t>(2 * r)) break;
            if (attempt > 100) {
                fail[i] = "could not generate |D_r(A)| > 2r";
                return;
            }
        }
        SortedSet B = random_sorted_set(rng, l, static_cast<std::int64_t>(8 * l * l + 16));
        auto rep = counting_check(A, B, r);
        if (!rep.holds)
            fail[i] = "r=" + std::to_string(r) + " A=" + set_to_string(A) + " B=" + set_to_string(B);
    });
    for (std::uint64_t i = 0; i < trials; ++i)
        if (!fail[i].empty()) res.failures.emplace_back(i, fail[i]);
    return res;
}

inline SweepResult run_lower_bound_sweep(std::uint64_t seed, std::uint64_t trials, const SweepCaps& caps) {
    SweepResult res;
    res.suite = "main2";
    res.trials = trials;
    res.seed = seed;
    std::vector<std::string> fail(trials);
    parallel_trials(trials, [&](std::uint64_t i) {
        Rng rng = trial_rng(seed, i);
        int r = static_cast<int>(rng.in(1, caps.r));
        std::size_t k = static_cast<std::size_t>(rng.in(r + 2, static_cast<std::int64_t>(caps.k)));
        std::size_t l = static_cast<std::size_t>(rng.in(1, static_cast<std::int64_t>(caps.l)));
        SortedSet A = random_distinct_gap_set(rng, k);
        SortedSet B = random_sorted_set(rng, l, static_cast<std::int64_t>(8 * l * l + 16));
        auto rep = sumset_lower_bound_check(A, B, r);
        if (!rep.holds)
            fail[i] = "r=" + std::to_string(r) + " A=" + set_to_string(A) + " B=" + set_to_string(B);
    });
    for (std::uint64_t i = 0; i < trials; ++i)
        if (!fail[i].empty()) res.failures.emplace_back(i, fail[i]);
    return res;
}

inline SweepResult run_subset_bound_sweep(std::uint64_t seed, std::uint64_t trials, const SweepCaps& caps) {
    SweepResult res;
    res.suite = "dcd2";
    res.trials = trials;
    res.seed = seed;
    std::vector<std::string> fail(trials);
    parallel_trials(trials, [&](std::uint64_t i) {
        Rng rng = trial_rng(seed, i);
        int r = static_cast<int>(rng.in(1, caps.r));
        std::size_t l = static_cast<std::size_t>(rng.in(r + 2, static_cast<std::int64_t>(caps.k)));
        SortedSet B = random_sorted_set(rng, l, static_cast<std::int64_t>(4 * l * l + 16));
        std::size_t ka = static_cast<std::size_t>(rng.in(r + 1, static_cast<std::int64_t>(l)));
        // random subset of B of size ka
        std::vector<std::size_t> pick(l);
        for (std::size_t j = 0; j < l; ++j) pick[j] = j;
        rng.shuffle(pick);
        pick.resize(ka);
        std::sort(pick.begin(), pick.end());
        std::vector<Rat> av;
        av.reserve(ka);
        for (std::size_t j : pick) av.push_back(B[j]);
        SortedSet A = SortedSet::from_sorted(std::move(av));
        auto rep = subset_diff_bound_check(A, B, r);
        if (!rep.holds)
            fail[i] = "r=" + std::to_string(r) + " A=" + set_to_string(A) + " B=" + set_to_string(B);
    });
    for (std::uint64_t i = 0; i < trials; ++i)
        if (!fail[i].empty()) res.failures.emplace_back(i, fail[i]);
    return res;
}

inline SweepResult run_mod_p_sweep(std::uint64_t seed, std::uint64_t trials, const SweepCaps& caps) {
    static const std::int64_t primes[] = {53, 101, 211, 409, 601, 809, 1009};
    SweepResult res;
    res.suite = "fp";
    res.trials = trials;
    res.seed = seed;
    std::vector<std::string> fail(trials);
    parallel_trials(trials, [&](std::uint64_t i) {
        Rng rng = trial_rng(seed, i);
        int r = static_cast<int>(rng.in(1, caps.r));
        std::int64_t p = primes[rng.below(sizeof(primes) / sizeof(primes[0]))];
        std::size_t ka = static_cast<std::size_t>(rng.in(r + 2, std::min<std::int64_t>(40, p - 1)));
        std::size_t lb = static_cast<std::size_t>(rng.in(1, std::min<std::int64_t>(40, p - 1)));
        std::vector<Int> A, B;
        for (int attempt = 0;; ++attempt) {
            std::set<std::int64_t> av;
            while (av.size() < ka) av.insert(rng.in(0, p - 1));
            A.assign(av.begin(), av.end());
            if (has_distinct_consecutive_r_diffs(order_mod_p(A, Int(p)), r)) break;
            if (attempt > 200) {
                fail[i] = "could not generate distinct-difference A mod p";
                return;
            }
        }
        std::set<std::int64_t> bv;
        while (bv.size() < lb) bv.insert(rng.in(0, p - 1));
        B.assign(bv.begin(), bv.end());
        auto rep = mod_p_dichotomy_check(A, B, Int(p), r);
        if (!rep.holds) {
            std::ostringstream os;
            os << "p=" << p << " r=" << r << " |A|=" << ka << " |B|=" << lb;
            fail[i] = os.str();
        }
    });
    for (std::uint64_t i = 0; i < trials; ++i)
        if (!fail[i].empty()) res.failures.emplace_back(i, fail[i]);
    return res;
}

inline SweepResult run_multidim_sweep(std::uint64_t seed, std::uint64_t trials, const SweepCaps& caps) {
    SweepResult res;
    res.suite = "multidim";
    res.trials = trials;
    res.seed = seed;
    std::vector<std::string> fail(trials);
    std::vector<double> ratios(trials, 0.0);
    parallel_trials(trials, [&](std::uint64_t i) {
        Rng rng = trial_rng(seed, i);
        int r = static_cast<int>(rng.in(1, caps.r));
        int d = static_cast<int>(rng.in(1, caps.d));
        std::size_t k = static_cast<std::size_t>(rng.in(r + 2, 40));
        std::vector<SortedSet> As, Bs;
        As.push_back(random_distinct_gap_set(rng, k)); // guarantees the d-tuple property
        for (int m = 1; m < d; ++m) As.push_back(random_sorted_set(rng, k, static_cast<std::int64_t>(8 * k * k)));
        for (int m = 0; m < d; ++m) {
            std::size_t l = static_cast<std::size_t>(rng.in(1, static_cast<std::int64_t>(caps.l)));
            Bs.push_back(random_sorted_set(rng, l, static_cast<std::int64_t>(8 * l * l + 16)));
        }
        auto rep = multidim_ratio(As, Bs, r);
        if (rep.ratio.lo <= 0) {
            fail[i] = "nonpositive ratio, d=" + std::to_string(d) + " r=" + std::to_string(r);
            return;
        }
        ratios[i] = static_cast<double>(rep.ratio.midpoint());
    });
    for (std::uint64_t i = 0; i < trials; ++i) {
        if (!fail[i].empty()) res.failures.emplace_back(i, fail[i]);
        if (ratios[i] > 0) {
            if (!res.has_ratios || ratios[i] < res.min_ratio) res.min_ratio = ratios[i];
            if (!res.has_ratios || ratios[i] > res.max_ratio) res.max_ratio = ratios[i];
            res.has_ratios = true;
        }
    }
    return res;
}

// ---- orbit and returning-time sweeps ----

inline SweepResult run_orbit_bound_sweep(std::uint64_t seed, std::uint64_t trials, const SweepCaps& caps) {
    SweepResult res;
    res.suite = "orbit-bound";
    res.trials = trials;
    res.seed = seed;
    std::vector<std::string> fail(trials);
    parallel_trials(trials, [&](std::uint64_t i) {
        Rng rng = trial_rng(seed, i);
        int r = static_cast<int>(rng.in(1, caps.r));
        std::int64_t N = rng.in(r + 1, caps.n);
        Rat alpha = random_alpha(rng, N);
        auto o = orbit(alpha, N);
        std::size_t count = cyclic_r_diffs(o, r).size();
        std::size_t bound = static_cast<std::size_t>(2 * r + 1);
        if (count > bound)
            fail[i] = "alpha=" + rat_to_string(alpha) + " N=" + std::to_string(N) + " r=" +
                      std::to_string(r) + " |D_r|=" + std::to_string(count);
    });
    for (std::uint64_t i = 0; i < trials; ++i)
        if (!fail[i].empty()) res.failures.emplace_back(i, fail[i]);
    return res;
}

inline SweepResult run_breakpoint_sweep(std::uint64_t seed, std::uint64_t trials, const SweepCaps& caps) {
    SweepResult res;
    res.suite = "breakpoints";
    res.trials = trials;
    res.seed = seed;
    std::vector<std::string> fail(trials);
    parallel_trials(trials, [&](std::uint64_t i) {
        Rng rng = trial_rng(seed, i);
        int r = static_cast<int>(rng.in(1, caps.r));
        for (int attempt = 0;; ++attempt) {
            std::int64_t N = rng.in(4 * r + 4, caps.n);
            Rat alpha = random_alpha(rng, N);
            auto o = orbit(alpha, N);
            try {
                auto table = breakpoint_table(o, r);
                auto sound = check_breakpoint_table(o, table, r);
                if (!sound.holds)
                    fail[i] = "alpha=" + rat_to_string(alpha) + " N=" + std::to_string(N) + " r=" +
                              std::to_string(r) + " first mismatch at n=" + std::to_string(sound.first_mismatch);
                return;
            } catch (const invalid_input&) {
                // {alpha} too close to the edge of the orbit for this N
            } catch (const degenerate_input&) {
                // breakpoint collision
            }
            if (attempt > 50) {
                fail[i] = "no valid breakpoint instance after 50 attempts";
                return;
            }
        }
    });
    for (std::uint64_t i = 0; i < trials; ++i)
        if (!fail[i].empty()) res.failures.emplace_back(i, fail[i]);
    return res;
}

inline SweepResult run_reversal_sweep(std::uint64_t seed, std::uint64_t trials, const SweepCaps& caps) {
    SweepResult res;
    res.suite = "reversal";
    res.trials = trials;
    res.seed = seed;
    std::vector<std::string> fail(trials);
    parallel_trials(trials, [&](std::uint64_t i) {
        Rng rng = trial_rng(seed, i);
        std::int64_t N = rng.in(2, caps.n);
        Rat alpha = random_alpha(rng, N);
        auto rep = reversal_check(orbit(alpha, N));
        if (!rep.holds)
            fail[i] = "alpha=" + rat_to_string(alpha) + " N=" + std::to_string(N) + " index=" +
                      std::to_string(rep.witness_index);
    });
    for (std::uint64_t i = 0; i < trials; ++i)
        if (!fail[i].empty()) res.failures.emplace_back(i, fail[i]);
    return res;
}

/// Gap partitions and window bound for random rational rotations.
inline SweepResult run_returning_sweep(std::uint64_t seed, std::uint64_t trials, const SweepCaps& caps) {
    SweepResult res;
    res.suite = "returning";
    res.trials = trials;
    res.seed = seed;
    std::vector<std::string> fail(trials);
    parallel_trials(trials, [&](std::uint64_t i) {
        Rng rng = trial_rng(seed, i);
        for (int attempt = 0;; ++attempt) {
            std::int64_t q = rng.in(5, 10000);
            std::int64_t p = rng.in(1, q - 1);
            if (gcd(Int(p), Int(q)) != 1) continue;
            Rat theta{Int(p), Int(q)};
            Rat phi = random_phi(rng, 9973); // denominator usually coprime to q
            try {
                ReturnSet rs = returning_times(theta, phi, caps.t_max);
                if (rs.times.size() < 12) continue; // too sparse to exercise anything
                SlaterPair sp = slater_pair(theta, phi);
                auto part1 = next_gap_partition(sp, phi);
                auto m1 = check_gap_partition(rs, part1, 1);
                if (!m1.all_match) {
                    fail[i] = "next-gap mismatch theta=" + rat_to_string(theta) + " phi=" +
                              rat_to_string(phi) + " at T=" + std::to_string(m1.mismatch_time);
                    return;
                }
                auto part2 = next_two_gaps_partition(sp, phi);
                if (part2.partition) {
                    auto m2 = check_gap_partition(rs, *part2.partition, 2);
                    if (!m2.all_match) {
                        fail[i] = "two-gap mismatch (case " + std::to_string(part2.partition->case_id) +
                                  ") theta=" + rat_to_string(theta) + " phi=" + rat_to_string(phi) +
                                  " at T=" + std::to_string(m2.mismatch_time);
                        return;
                    }
                }
                for (int r = 1; r <= caps.r; ++r) {
                    if (rs.times.size() < static_cast<std::size_t>(2 * r + 2)) break;
                    auto windows = empirical_r_diffs(rs, r);
                    if (windows.size() > static_cast<std::size_t>(2 * r + 1)) {
                        fail[i] = "window bound exceeded theta=" + rat_to_string(theta) + " phi=" +
                                  rat_to_string(phi) + " r=" + std::to_string(r) + " count=" +
                                  std::to_string(windows.size());
                        return;
                    }
                }
                return;
            } catch (const degenerate_input&) {
                // boundary hit or phi <= 1/q; draw a fresh instance
            }
            if (attempt > 50) {
                fail[i] = "no valid returning instance after 50 attempts";
                return;
            }
        }
    });
    for (std::uint64_t i = 0; i < trials; ++i)
        if (!fail[i].empty()) res.failures.emplace_back(i, fail[i]);
    return res;
}

inline SweepResult run_duality_sweep(std::uint64_t seed, std::uint64_t trials, const SweepCaps& caps) {
    SweepResult res;
    res.suite = "duality";
    res.trials = trials;
    res.seed = seed;
    std::vector<std::string> fail(trials);
    parallel_trials(trials, [&](std::uint64_t i) {
        Rng rng = trial_rng(seed, i);
        for (;;) {
            std::int64_t q = rng.in(8, 1000);
            std::int64_t p = rng.in(1, q - 1);
            if (gcd(Int(p), Int(q)) != 1) continue;
            int r = static_cast<int>(rng.in(1, caps.r));
            std::int64_t N = rng.in(r + 1, q - 1);
            auto rep = duality_check(p, q, N, r);
            if (!rep.translated_set_equal || !rep.cyclic_diffs_scaled)
                fail[i] = "p=" + std::to_string(p) + " q=" + std::to_string(q) + " N=" +
                          std::to_string(N) + " r=" + std::to_string(r);
            return;
        }
    });
    for (std::uint64_t i = 0; i < trials; ++i)
        if (!fail[i].empty()) res.failures.emplace_back(i, fail[i]);
    return res;
}

inline SweepResult run_multishift_sweep(std::uint64_t seed, std::uint64_t trials, const SweepCaps& caps) {
    SweepResult res;
    res.suite = "multishift";
    res.trials = trials;
    res.seed = seed;
    std::vector<std::string> fail(trials);
    parallel_trials(trials, [&](std::uint64_t i) {
        Rng rng = trial_rng(seed, i);
        int r = static_cast<int>(rng.in(1, caps.r));
        for (int attempt = 0;; ++attempt) {
            std::int64_t n_total = rng.in(r + 1, std::min<std::int64_t>(caps.n, 500));
            Rat alpha = random_alpha(rng, 2 * n_total + 2);
            int shifts = static_cast<int>(rng.in(1, 3));
            std::vector<Rat> lambdas;
            std::vector<std::int64_t> Ns;
            lambdas.emplace_back(0);
            Ns.push_back(n_total);
            for (int s = 1; s < shifts; ++s) {
                lambdas.push_back(random_phi(rng, 64));
                Ns.push_back(rng.in(r + 1, n_total));
            }
            try {
                auto ms = multishift_orbit(alpha, lambdas, Ns, r);
                if (!ms.within_bound)
                    fail[i] = "alpha=" + rat_to_string(alpha) + " shifts=" + std::to_string(shifts) +
                              " r=" + std::to_string(r) + " |D_r|=" + std::to_string(ms.diffs.size()) +
                              " bound=" + std::to_string(ms.bound);
                return;
            } catch (const degenerate_input&) {
                // point collision between shifted copies
            }
            if (attempt > 50) {
                fail[i] = "no collision-free multishift instance after 50 attempts";
                return;
            }
        }
    });
    for (std::uint64_t i = 0; i < trials; ++i)
        if (!fail[i].empty()) res.failures.emplace_back(i, fail[i]);
    return res;
}

} // namespace gapforge
