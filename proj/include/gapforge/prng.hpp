#pragma once

// Deterministic randomness for sweeps. Every trial derives its own stream
// from (seed, trial index), so a report is reproducible regardless of how
// trials are scheduled across workers, and a single failing trial can be
// replayed standalone.

#include <cstdint>
#include <vector>

namespace gapforge {

inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

class Rng {
public:
    explicit Rng(std::uint64_t seed, std::uint64_t stream = 0) {
        state_ = seed;
        (void)splitmix64(state_);
        state_ ^= (stream + 1) * 0xD1B54A32D192ED03ull;
        (void)splitmix64(state_);
    }

    std::uint64_t u64() { return splitmix64(state_); }

    /// Unbiased draw from [0, n).
    std::uint64_t below(std::uint64_t n) {
        std::uint64_t reject = (-n) % n;
        for (;;) {
            std::uint64_t r = u64();
            if (r >= reject) return r % n;
        }
    }

    /// Inclusive range draw.
    std::int64_t in(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    bool coin() { return (u64() & 1) != 0; }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    std::uint64_t state_;
};

/// Counter-based per-trial stream derivation.
inline Rng trial_rng(std::uint64_t seed, std::uint64_t trial) { return Rng(seed, trial); }

} // namespace gapforge
