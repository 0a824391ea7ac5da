#pragma once

// Cyclic sequences over an alphabet of size m whose cyclic (r+1)-windows are
// all distinct and whose adjacent symbols always differ. Built from an
// Eulerian circuit on the overlap digraph of repetition-free r-tuples:
// m (m-1)^(r-1) vertices, each of in/out degree m-1, strongly connected,
// giving a sequence of length k = m (m-1)^r.

#include <algorithm>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "gapforge/errors.hpp"

namespace gapforge {

class OverlapGraph {
public:
    /// Vertices are all r-tuples over {0..alphabet-1} with no two equal
    /// adjacent entries; u -> v when u's last r-1 entries equal v's first r-1.
    OverlapGraph(int alphabet, int r) : m_(alphabet), r_(r) {
        if (alphabet < 2) throw invalid_input("OverlapGraph: alphabet must have >= 2 symbols");
        if (r < 1) throw invalid_input("OverlapGraph: window order must be >= 1");
        nv_ = static_cast<std::size_t>(m_);
        for (int i = 1; i < r_; ++i) nv_ *= static_cast<std::size_t>(m_ - 1);
        validate();
    }

    int alphabet() const { return m_; }
    int order() const { return r_; }
    std::size_t vertex_count() const { return nv_; }
    std::size_t edge_count() const { return nv_ * static_cast<std::size_t>(m_ - 1); }
    int out_degree() const { return m_ - 1; }

    std::vector<int> tuple_of(std::size_t id) const {
        std::vector<int> t(static_cast<std::size_t>(r_));
        for (int i = r_ - 1; i >= 1; --i) {
            int digit = static_cast<int>(id % static_cast<std::size_t>(m_ - 1));
            id /= static_cast<std::size_t>(m_ - 1);
            t[static_cast<std::size_t>(i)] = digit; // placeholder, fixed up below
        }
        t[0] = static_cast<int>(id);
        for (int i = 1; i < r_; ++i) {
            // digit d encodes the i-th symbol skipping the previous one
            int d = t[static_cast<std::size_t>(i)];
            t[static_cast<std::size_t>(i)] = d < t[static_cast<std::size_t>(i - 1)] ? d : d + 1;
        }
        return t;
    }

    std::size_t id_of(std::span<const int> t) const {
        if (t.size() != static_cast<std::size_t>(r_)) throw invalid_input("OverlapGraph: tuple length mismatch");
        std::size_t id = static_cast<std::size_t>(t[0]);
        for (int i = 1; i < r_; ++i) {
            int prev = t[static_cast<std::size_t>(i - 1)];
            int cur = t[static_cast<std::size_t>(i)];
            if (cur == prev) throw invalid_input("OverlapGraph: tuple has equal adjacent symbols");
            int d = cur < prev ? cur : cur - 1;
            id = id * static_cast<std::size_t>(m_ - 1) + static_cast<std::size_t>(d);
        }
        return id;
    }

    /// Successor ids in ascending appended-symbol order (fixed canonical
    /// order, so circuits are deterministic).
    std::vector<std::size_t> successors(std::size_t id) const {
        auto t = tuple_of(id);
        int last = t[static_cast<std::size_t>(r_ - 1)];
        std::vector<int> next(t.begin() + (r_ > 1 ? 1 : 0), t.end());
        if (r_ == 1) next.clear();
        next.push_back(0);
        std::vector<std::size_t> out;
        out.reserve(static_cast<std::size_t>(m_ - 1));
        for (int x = 0; x < m_; ++x) {
            if (x == last) continue;
            next.back() = x;
            out.push_back(id_of(next));
        }
        return out;
    }

    /// Lexicographically least vertex: (0, 1, 0, 1, ...).
    std::size_t lex_least_vertex() const {
        std::vector<int> t(static_cast<std::size_t>(r_));
        for (int i = 0; i < r_; ++i) t[static_cast<std::size_t>(i)] = i % 2;
        return id_of(t);
    }

private:
    void validate() const {
        // Regular degrees are structural; strong connectivity is checked by a
        // forward and a reverse reachability sweep from vertex 0.
        if (!reaches_all(false) || !reaches_all(true))
            throw invalid_input("OverlapGraph: not strongly connected");
    }

    bool reaches_all(bool reversed) const {
        std::vector<char> seen(nv_, 0);
        std::vector<std::size_t> stack{0};
        seen[0] = 1;
        std::size_t count = 1;
        std::vector<std::vector<std::size_t>> reverse_adj;
        if (reversed) {
            reverse_adj.assign(nv_, {});
            for (std::size_t v = 0; v < nv_; ++v)
                for (std::size_t u : successors(v))
                    reverse_adj[u].push_back(v);
        }
        while (!stack.empty()) {
            std::size_t v = stack.back();
            stack.pop_back();
            const auto nexts = reversed ? reverse_adj[v] : successors(v);
            for (std::size_t u : nexts) {
                if (!seen[u]) {
                    seen[u] = 1;
                    ++count;
                    stack.push_back(u);
                }
            }
        }
        return count == nv_;
    }

    int m_, r_;
    std::size_t nv_;
};

/// Closed walk v_0, ..., v_k with v_k = v_0 traversing every edge exactly
/// once (Hierholzer). Deterministic: starts at the lex-least vertex and
/// consumes out-edges in canonical order.
inline std::vector<std::size_t> eulerian_circuit(const OverlapGraph& g) {
    const std::size_t nv = g.vertex_count();
    const std::size_t ne = g.edge_count();
    std::vector<std::vector<std::size_t>> adj(nv);
    for (std::size_t v = 0; v < nv; ++v) adj[v] = g.successors(v);

    std::vector<std::size_t> next_edge(nv, 0);
    std::vector<std::size_t> stack{g.lex_least_vertex()};
    std::vector<std::size_t> circuit;
    circuit.reserve(ne + 1);
    while (!stack.empty()) {
        std::size_t v = stack.back();
        if (next_edge[v] < adj[v].size()) {
            std::size_t u = adj[v][next_edge[v]++];
            stack.push_back(u);
        } else {
            circuit.push_back(v);
            stack.pop_back();
        }
    }
    if (circuit.size() != ne + 1)
        throw invalid_input("eulerian_circuit: graph does not admit a circuit");
    std::reverse(circuit.begin(), circuit.end());
    return circuit;
}

/// The length-k symbol sequence (first coordinates along the circuit):
/// cyclic (r+1)-windows all distinct, adjacent symbols never equal,
/// k = m (m-1)^r. Symbols are 0..m-1.
inline std::vector<int> window_sequence(int alphabet, int r) {
    OverlapGraph g(alphabet, r);
    auto walk = eulerian_circuit(g);
    std::vector<int> seq;
    seq.reserve(walk.size() - 1);
    for (std::size_t j = 0; j + 1 < walk.size(); ++j)
        seq.push_back(g.tuple_of(walk[j])[0]);
    return seq;
}

struct SequenceCheck {
    struct Item {
        bool pass = true;
        std::string witness;
    };
    Item windows_distinct; // all cyclic (r+1)-windows distinct
    Item length_expected;  // k == m (m-1)^r
    Item adjacent_distinct;

    bool all_pass() const {
        return windows_distinct.pass && length_expected.pass && adjacent_distinct.pass;
    }
};

inline SequenceCheck verify_sequence(std::span<const int> seq, int alphabet, int r) {
    SequenceCheck rep;
    const std::size_t k = seq.size();

    std::size_t expected = static_cast<std::size_t>(alphabet);
    for (int i = 0; i < r; ++i) expected *= static_cast<std::size_t>(alphabet - 1);
    if (k != expected) {
        rep.length_expected.pass = false;
        rep.length_expected.witness =
            "length " + std::to_string(k) + ", expected " + std::to_string(expected);
    }

    if (k == 0) {
        rep.windows_distinct.pass = false;
        rep.windows_distinct.witness = "empty sequence";
        return rep;
    }

    for (std::size_t j = 0; j < k; ++j) {
        if (seq[j] == seq[(j + 1) % k]) {
            rep.adjacent_distinct.pass = false;
            rep.adjacent_distinct.witness = "positions " + std::to_string(j + 1) + "," +
                                            std::to_string((j + 1) % k + 1) + " both " +
                                            std::to_string(seq[j]);
            break;
        }
    }

    std::map<std::vector<int>, std::size_t> seen;
    for (std::size_t j = 0; j < k; ++j) {
        std::vector<int> w(static_cast<std::size_t>(r) + 1);
        for (int i = 0; i <= r; ++i) w[static_cast<std::size_t>(i)] = seq[(j + static_cast<std::size_t>(i)) % k];
        auto [it, inserted] = seen.try_emplace(std::move(w), j);
        if (!inserted) {
            rep.windows_distinct.pass = false;
            rep.windows_distinct.witness = "window at position " + std::to_string(j + 1) +
                                           " repeats position " + std::to_string(it->second + 1);
            break;
        }
    }
    return rep;
}

} // namespace gapforge
