// cycles.hpp — cycle machinery: Johnson-style simple-cycle enumeration,
// primitive periodic orbits up to a period bound, and Karp's maximum mean
// cycle recurrence.

#pragma once

#include <cmath>
#include <functional>
#include <limits>
#include <set>
#include <stdexcept>
#include <vector>

#include "rotspec/graph.hpp"

namespace rotspec {

inline constexpr std::size_t kCycleCap = 1'000'000;

// All elementary (vertex-simple) circuits as edge sequences, each once up to
// rotation, in (period, lexicographic) order. Errors out beyond the cap.
inline std::vector<PeriodicOrbit> simple_cycles(const TransitionGraph& g,
                                                std::size_t cap = kCycleCap) {
    const int n = g.vertex_count();
    std::vector<PeriodicOrbit> found;
    std::vector<char> blocked(n, 0);
    std::vector<std::set<int>> block_map(n);
    std::vector<int> estack;

    std::function<void(int)> unblock = [&](int v) {
        blocked[v] = 0;
        auto targets = block_map[v];
        block_map[v].clear();
        for (int w : targets)
            if (blocked[w]) unblock(w);
    };

    for (int root = 0; root < n; ++root) {
        std::fill(blocked.begin(), blocked.end(), 0);
        for (auto& s : block_map) s.clear();

        std::function<bool(int)> circuit = [&](int v) -> bool {
            bool closed = false;
            blocked[v] = 1;
            for (int ei : g.out_edges(v)) {
                int t = g.edge(ei).target;
                if (t < root) continue;
                if (t == root) {
                    estack.push_back(ei);
                    if (found.size() >= cap)
                        throw std::runtime_error("simple_cycles: cycle cap exceeded");
                    found.emplace_back(g, estack);
                    estack.pop_back();
                    closed = true;
                } else if (!blocked[t]) {
                    estack.push_back(ei);
                    if (circuit(t)) closed = true;
                    estack.pop_back();
                }
            }
            if (closed) {
                unblock(v);
            } else {
                for (int ei : g.out_edges(v)) {
                    int t = g.edge(ei).target;
                    if (t >= root) block_map[t].insert(v);
                }
            }
            return closed;
        };
        circuit(root);
    }
    std::sort(found.begin(), found.end());
    return found;
}

// All primitive periodic orbits of period <= max_period, i.e. primitive
// closed edge walks up to rotation. The walk's first edge is pinned to its
// minimal edge index, so each orbit is generated once per occurrence of that
// edge; the canonical rotation collapses the duplicates. Errors beyond the
// cap (counted in DFS steps as well as emitted orbits).
inline std::vector<PeriodicOrbit> enumerate_periodic_orbits(const TransitionGraph& g,
                                                            int max_period,
                                                            std::size_t cap = kCycleCap) {
    if (max_period < 1)
        throw std::invalid_argument("enumerate_periodic_orbits: max_period must be >= 1");
    std::set<std::vector<int>> canon;
    std::size_t work = 0;
    std::vector<int> walk;

    auto emit = [&]() {
        const int p = static_cast<int>(walk.size());
        for (int d = 1; d < p; ++d) {
            if (p % d != 0) continue;
            bool power = true;
            for (int i = 0; i + d < p && power; ++i)
                if (walk[i] != walk[i + d]) power = false;
            if (power) return;  // not primitive
        }
        if (canon.size() >= cap)
            throw std::runtime_error("enumerate_periodic_orbits: orbit cap exceeded");
        canon.insert(PeriodicOrbit::least_rotation(walk));
    };

    for (int e0 = 0; e0 < g.edge_count(); ++e0) {
        const int home = g.edge(e0).source;
        walk = {e0};
        std::function<void(int)> dfs = [&](int at) {
            if (++work > 64 * cap)
                throw std::runtime_error("enumerate_periodic_orbits: enumeration cap exceeded");
            if (at == home) emit();
            if (static_cast<int>(walk.size()) >= max_period) return;
            for (int ei : g.out_edges(at)) {
                if (ei < e0) continue;  // keep e0 minimal in the walk
                walk.push_back(ei);
                dfs(g.edge(ei).target);
                walk.pop_back();
            }
        };
        dfs(g.edge(e0).target);
    }

    std::vector<PeriodicOrbit> out;
    out.reserve(canon.size());
    for (const auto& c : canon) out.emplace_back(g, c);
    std::sort(out.begin(), out.end());
    return out;
}

// Karp's recurrence: maximum mean weight over all cycles. Deterministic,
// reproducible to float rounding. Requires a strongly connected graph.
inline double max_cycle_mean(const TransitionGraph& g, const std::vector<double>& edge_weight) {
    if (!g.irreducible()) throw std::invalid_argument("max_cycle_mean: graph must be irreducible");
    if (static_cast<int>(edge_weight.size()) != g.edge_count())
        throw std::invalid_argument("max_cycle_mean: weight count mismatch");
    const int n = g.vertex_count();
    const double ninf = -std::numeric_limits<double>::infinity();
    // D[k][v] = max weight of a k-edge walk from vertex 0 to v.
    std::vector<std::vector<double>> D(n + 1, std::vector<double>(n, ninf));
    D[0][0] = 0.0;
    for (int k = 1; k <= n; ++k) {
        for (int e = 0; e < g.edge_count(); ++e) {
            const Edge& ed = g.edge(e);
            if (D[k - 1][ed.source] == ninf) continue;
            double cand = D[k - 1][ed.source] + edge_weight[e];
            if (cand > D[k][ed.target]) D[k][ed.target] = cand;
        }
    }
    double best = ninf;
    for (int v = 0; v < n; ++v) {
        if (D[n][v] == ninf) continue;
        double worst = std::numeric_limits<double>::infinity();
        for (int k = 0; k < n; ++k) {
            if (D[k][v] == ninf) continue;
            worst = std::min(worst, (D[n][v] - D[k][v]) / (n - k));
        }
        best = std::max(best, worst);
    }
    if (best == ninf) throw std::logic_error("max_cycle_mean: no cycle found");
    return best;
}

}  // namespace rotspec
