#pragma once

// Integer Sidon sets: all pairwise sums a + b (a <= b) distinct.

#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "gapforge/errors.hpp"
#include "gapforge/rational.hpp"

namespace gapforge {

struct SidonSet {
    std::vector<Int> elems; // strictly increasing positive integers
};

struct SidonWitness {
    Int a, b, c, d; // a + b == c + d with {a,b} != {c,d}
};

/// nullopt iff S is Sidon; otherwise a colliding sum pair.
inline std::optional<SidonWitness> sidon_violation(const std::vector<Int>& elems) {
    std::map<Int, std::pair<Int, Int>> sums; // sum -> first (a, b) producing it
    for (std::size_t i = 0; i < elems.size(); ++i) {
        for (std::size_t j = i; j < elems.size(); ++j) {
            Int s = elems[i] + elems[j];
            auto [it, inserted] = sums.try_emplace(s, std::make_pair(elems[i], elems[j]));
            if (!inserted)
                return SidonWitness{it->second.first, it->second.second, elems[i], elems[j]};
        }
    }
    return std::nullopt;
}

inline bool is_sidon(const std::vector<Int>& elems) { return !sidon_violation(elems).has_value(); }

/// First n terms of the greedy Sidon sequence starting at 1
/// (1, 2, 4, 8, 13, 21, 31, 45, ...).
inline SidonSet mian_chowla(int n) {
    if (n < 1) throw invalid_input("mian_chowla: n must be >= 1");
    SidonSet s;
    std::set<Int> sums; // all pairwise sums of the elements so far
    Int candidate = 1;
    while (static_cast<int>(s.elems.size()) < n) {
        // appending m keeps the set Sidon iff no a + m is an existing sum
        bool ok = true;
        for (const Int& a : s.elems) {
            if (sums.count(a + candidate)) {
                ok = false;
                break;
            }
        }
        if (ok && sums.count(candidate + candidate)) ok = false;
        if (ok) {
            for (const Int& a : s.elems) sums.insert(a + candidate);
            sums.insert(candidate + candidate);
            s.elems.push_back(candidate);
        }
        ++candidate;
    }
    return s;
}

} // namespace gapforge
