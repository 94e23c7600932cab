// entropy.hpp — topological entropy and word counting.

#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "rotspec/graph.hpp"
#include "rotspec/perron.hpp"
#include "rotspec/sofic.hpp"

namespace rotspec {

// log of the spectral radius of the adjacency matrix, in nats. Reducible
// graphs take the max over strongly connected components; components without
// a cycle contribute nothing.
inline double topological_entropy(const TransitionGraph& g) {
    if (g.edge_count() == 0) throw std::invalid_argument("topological_entropy: empty graph");
    auto run = [](const TransitionGraph& h) {
        std::vector<double> w(h.edge_count(), 1.0);
        return std::log(perron_right(h, w).lambda);
    };
    if (g.irreducible()) return run(g);
    auto comps = g.component_edge_lists();
    if (comps.empty())
        throw std::invalid_argument("topological_entropy: graph has no cycles (empty shift)");
    double best = -std::numeric_limits<double>::infinity();
    for (const auto& comp : comps) best = std::max(best, run(g.edge_subgraph(comp)));
    return best;
}

// Exact number of length-m words. Labeled graphs count distinct label words
// via the determinized presentation; unlabeled graphs count m-edge paths.
inline std::uint64_t count_words(const TransitionGraph& g, int m) {
    if (m < 1) throw std::invalid_argument("count_words: m must be >= 1");
    auto checked_add = [](std::uint64_t a, std::uint64_t b) {
        std::uint64_t r;
        if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("count_words: overflow");
        return r;
    };
    if (!g.labeled()) {
        // paths of length m, counted by DP over vertices
        std::vector<std::uint64_t> cnt(g.vertex_count(), 1);
        for (int step = 0; step < m; ++step) {
            std::vector<std::uint64_t> nxt(g.vertex_count(), 0);
            for (const Edge& e : g.edges()) nxt[e.source] = checked_add(nxt[e.source], cnt[e.target]);
            cnt = std::move(nxt);
        }
        std::uint64_t total = 0;
        for (auto c : cnt) total = checked_add(total, c);
        return total;
    }
    // Word w occurs iff the subset walk from the full vertex set survives w.
    Determinization det = determinize(g);
    std::vector<std::uint64_t> cnt(det.graph.vertex_count(), 1);
    for (int step = 0; step < m; ++step) {
        std::vector<std::uint64_t> nxt(det.graph.vertex_count(), 0);
        for (const Edge& e : det.graph.edges()) nxt[e.source] = checked_add(nxt[e.source], cnt[e.target]);
        cnt = std::move(nxt);
    }
    return cnt[det.root];
}

}  // namespace rotspec
