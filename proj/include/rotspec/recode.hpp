// recode.hpp — higher-block presentations.
//
// Recoding with window k replaces vertices by admissible (k-1)-edge words and
// edges by admissible k-edge words; the edge shifts before and after are
// conjugate and cylinder functions of k consecutive edges become
// edge-constant. k = 1 reproduces the input graph.

#pragma once

#include <functional>
#include <map>
#include <stdexcept>
#include <vector>

#include "rotspec/graph.hpp"
#include "rotspec/potential.hpp"

namespace rotspec {

// Hard cap on materialized windows; deeper cylinders are handled symbolically
// by the callers that need them.
inline constexpr int kRecodeWindowCap = 12;

using WordPotential = std::function<std::vector<double>(const std::vector<int>&)>;

struct HigherBlockRecode {
    TransitionGraph graph;
    CylinderPotential potential;
    // For k >= 2: edge_words[e'] is the k-edge word of the original graph an
    // edge stands for; vertex start/end of the word give the old endpoints.
    // For k = 1 the words are the singleton {old edge index}.
    std::vector<std::vector<int>> edge_words;
    int window = 1;
};

inline std::vector<std::vector<int>> admissible_edge_words(const TransitionGraph& g, int length) {
    std::vector<std::vector<int>> words;
    if (length == 0) return words;
    std::vector<int> cur;
    // DFS in edge-index order keeps the enumeration lexicographic.
    std::function<void()> grow = [&]() {
        if (static_cast<int>(cur.size()) == length) {
            words.push_back(cur);
            return;
        }
        if (cur.empty()) {
            for (int e = 0; e < g.edge_count(); ++e) {
                cur.push_back(e);
                grow();
                cur.pop_back();
            }
        } else {
            int v = g.edge(cur.back()).target;
            for (int e : g.out_edges(v)) {
                cur.push_back(e);
                grow();
                cur.pop_back();
            }
        }
    };
    grow();
    std::sort(words.begin(), words.end());
    return words;
}

inline HigherBlockRecode higher_block_recode(const TransitionGraph& g, int window,
                                             const WordPotential& raw, int potential_dim) {
    if (window < 1) throw std::invalid_argument("higher_block_recode: window must be >= 1");
    if (window > kRecodeWindowCap)
        throw std::invalid_argument("higher_block_recode: window exceeds recoding cap");

    HigherBlockRecode out;
    out.window = window;
    if (window == 1) {
        std::vector<std::vector<double>> vals;
        vals.reserve(g.edge_count());
        out.edge_words.reserve(g.edge_count());
        for (int e = 0; e < g.edge_count(); ++e) {
            std::vector<int> w = {e};
            std::vector<double> v = raw(w);
            if (static_cast<int>(v.size()) != potential_dim)
                throw std::invalid_argument("higher_block_recode: raw potential dimension mismatch");
            vals.push_back(std::move(v));
            out.edge_words.push_back(std::move(w));
        }
        out.graph = g;
        out.potential = CylinderPotential(potential_dim, std::move(vals));
        return out;
    }

    auto vertex_words = admissible_edge_words(g, window - 1);
    std::map<std::vector<int>, int> vertex_id;
    for (int i = 0; i < static_cast<int>(vertex_words.size()); ++i) vertex_id[vertex_words[i]] = i;

    auto words = admissible_edge_words(g, window);
    std::vector<Edge> edges;
    std::vector<std::vector<double>> vals;
    edges.reserve(words.size());
    vals.reserve(words.size());
    for (const auto& w : words) {
        std::vector<int> src(w.begin(), w.end() - 1);
        std::vector<int> dst(w.begin() + 1, w.end());
        std::vector<double> v = raw(w);
        if (static_cast<int>(v.size()) != potential_dim)
            throw std::invalid_argument("higher_block_recode: raw potential dimension mismatch");
        // Label of the first edge keeps label sequences of paths unchanged.
        edges.push_back({vertex_id.at(src), vertex_id.at(dst), g.edge(w.front()).label});
        vals.push_back(std::move(v));
    }
    if (edges.empty()) throw std::invalid_argument("higher_block_recode: no admissible words");
    out.graph = TransitionGraph(static_cast<int>(vertex_words.size()), std::move(edges), g.alphabet());
    out.potential = CylinderPotential(potential_dim, std::move(vals));
    out.edge_words = std::move(words);
    return out;
}

// Lift an edge-constant potential through a recode: value of the first edge
// of the word. Any fixed position gives the same integrals against invariant
// measures and the same cycle averages.
inline HigherBlockRecode recode_with_lift(const TransitionGraph& g, const CylinderPotential& phi,
                                          int window) {
    phi.check_graph(g);
    return higher_block_recode(
        g, window, [&](const std::vector<int>& w) { return phi.value(w.front()); },
        phi.dimension());
}

// Lift a periodic orbit: the recoded cycle walks the k-edge windows of the
// original cycle. Requires window - 1 <= period is NOT necessary; windows
// wrap around the cycle.
inline PeriodicOrbit lift_orbit(const HigherBlockRecode& rc, const TransitionGraph& base,
                                const PeriodicOrbit& orbit) {
    if (rc.window == 1) return orbit;
    std::map<std::vector<int>, int> edge_id;
    for (int i = 0; i < static_cast<int>(rc.edge_words.size()); ++i) edge_id[rc.edge_words[i]] = i;
    const auto& cyc = orbit.edges();
    const int p = orbit.period();
    std::vector<int> lifted;
    lifted.reserve(p);
    for (int i = 0; i < p; ++i) {
        std::vector<int> w(rc.window);
        for (int j = 0; j < rc.window; ++j) w[j] = cyc[(i + j) % p];
        auto it = edge_id.find(w);
        if (it == edge_id.end()) throw std::logic_error("lift_orbit: window not admissible");
        lifted.push_back(it->second);
    }
    (void)base;
    return PeriodicOrbit(rc.graph, std::move(lifted));
}

}  // namespace rotspec
