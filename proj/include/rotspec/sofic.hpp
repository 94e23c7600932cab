// sofic.hpp — sofic presentations: flower automata over loop families and
// subset determinization.

#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "rotspec/graph.hpp"

namespace rotspec {

inline constexpr std::size_t kDeterminizeCap = 100'000;

// Flower automaton of a loop family: one base vertex, one petal per loop.
// Its label shift is the smallest subshift containing all bi-infinite loop
// concatenations (petal interiors have a single outgoing edge, so every
// bi-infinite path factors through the base vertex).
inline TransitionGraph flower_automaton(const LoopFamily& family, int alphabet) {
    family.validate(alphabet);
    std::vector<Edge> edges;
    int next_vertex = 1;  // 0 is the base
    for (const auto& loop : family.loops) {
        int at = 0;
        for (size_t i = 0; i < loop.size(); ++i) {
            int to = (i + 1 == loop.size()) ? 0 : next_vertex++;
            edges.push_back({at, to, loop[i]});
            at = to;
        }
    }
    return TransitionGraph(next_vertex, std::move(edges), alphabet);
}

struct Determinization {
    TransitionGraph graph;  // right-resolving: per vertex, at most one edge per label
    int root = 0;           // image of the full vertex set
    std::vector<std::vector<int>> subsets;
};

// Subset construction seeded with the full vertex set. A word is in the
// language iff the walk from the root survives it, which is all the word
// counter needs; trimming to the essential part afterwards yields a
// right-resolving presentation of the same sofic shift.
inline Determinization determinize(const TransitionGraph& g, std::size_t cap = kDeterminizeCap) {
    if (!g.labeled()) throw std::invalid_argument("determinize: graph is unlabeled");
    const int d = g.alphabet();
    std::map<std::vector<int>, int> id;
    std::vector<std::vector<int>> subsets;
    std::vector<Edge> edges;

    std::vector<int> full(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) full[v] = v;
    id[full] = 0;
    subsets.push_back(full);

    for (std::size_t k = 0; k < subsets.size(); ++k) {
        for (int a = 0; a < d; ++a) {
            std::vector<char> hit(g.vertex_count(), 0);
            for (int v : subsets[k])
                for (int ei : g.out_edges(v)) {
                    const Edge& e = g.edge(ei);
                    if (e.label == a) hit[e.target] = 1;
                }
            std::vector<int> next;
            for (int v = 0; v < g.vertex_count(); ++v)
                if (hit[v]) next.push_back(v);
            if (next.empty()) continue;
            auto it = id.find(next);
            int to;
            if (it == id.end()) {
                if (subsets.size() >= cap)
                    throw std::runtime_error("determinize: subset cap exceeded");
                to = static_cast<int>(subsets.size());
                id[next] = to;
                subsets.push_back(next);
            } else {
                to = it->second;
            }
            edges.push_back({static_cast<int>(k), to, a});
        }
    }
    Determinization out{TransitionGraph(static_cast<int>(subsets.size()), std::move(edges),
                                        g.alphabet()),
                        0, std::move(subsets)};
    return out;
}

// Right-resolving presentation of the closure of all bi-infinite loop
// concatenations: flower automaton -> subset determinization -> essential
// part.
inline TransitionGraph sofic_closure(const LoopFamily& family, int alphabet,
                                     std::size_t cap = kDeterminizeCap) {
    TransitionGraph flower = flower_automaton(family, alphabet);
    Determinization det = determinize(flower, cap);
    return det.graph.essential();
}

}  // namespace rotspec
