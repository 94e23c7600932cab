// graph.hpp — finite presentations of shift spaces.
//
// A TransitionGraph is a finite directed multigraph; its bi-infinite edge
// paths form a subshift of finite type (edge shift). Optional edge labels
// over a finite alphabet turn it into a sofic presentation. One- vs
// two-sidedness never enters any computation here: entropy and integrals of
// cylinder functions against invariant measures agree for both conventions.

#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace rotspec {

struct Edge {
    int source = 0;
    int target = 0;
    int label = -1;  // -1 = unlabeled
};

class TransitionGraph {
public:
    TransitionGraph() = default;

    TransitionGraph(int vertex_count, std::vector<Edge> edges, int alphabet = 0,
                    std::vector<std::string> vertex_names = {})
        : vertex_count_(vertex_count),
          edges_(std::move(edges)),
          alphabet_(alphabet),
          names_(std::move(vertex_names)) {
        if (vertex_count_ <= 0) throw std::invalid_argument("graph: vertex count must be positive");
        if (!names_.empty() && static_cast<int>(names_.size()) != vertex_count_)
            throw std::invalid_argument("graph: vertex name count mismatch");
        bool any_label = false, any_unlabeled = false;
        for (const Edge& e : edges_) {
            if (e.source < 0 || e.source >= vertex_count_ || e.target < 0 || e.target >= vertex_count_)
                throw std::invalid_argument("graph: dangling vertex reference in edge");
            if (e.label >= 0) {
                any_label = true;
                if (alphabet_ > 0 && e.label >= alphabet_)
                    throw std::invalid_argument("graph: edge label outside alphabet");
            } else {
                any_unlabeled = true;
            }
        }
        if (any_label && any_unlabeled)
            throw std::invalid_argument("graph: mixed labeled and unlabeled edges");
        labeled_ = any_label;
        if (labeled_ && alphabet_ == 0) {
            for (const Edge& e : edges_) alphabet_ = std::max(alphabet_, e.label + 1);
        }
        out_.assign(vertex_count_, {});
        in_.assign(vertex_count_, {});
        for (int i = 0; i < static_cast<int>(edges_.size()); ++i) {
            out_[edges_[i].source].push_back(i);
            in_[edges_[i].target].push_back(i);
        }
        scc_ids_ = compute_scc();
        int n_scc = scc_ids_.empty() ? 0 : *std::max_element(scc_ids_.begin(), scc_ids_.end()) + 1;
        irreducible_ = (n_scc == 1);
    }

    int vertex_count() const { return vertex_count_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(int i) const { return edges_.at(i); }
    const std::vector<int>& out_edges(int v) const { return out_.at(v); }
    const std::vector<int>& in_edges(int v) const { return in_.at(v); }
    bool labeled() const { return labeled_; }
    int alphabet() const { return alphabet_; }
    bool irreducible() const { return irreducible_; }
    const std::vector<int>& scc_ids() const { return scc_ids_; }

    const std::string& vertex_name(int v) const {
        static const std::string empty;
        return names_.empty() ? empty : names_.at(v);
    }
    const std::vector<std::string>& vertex_names() const { return names_; }

    // Subgraph induced by a subset of edges. Vertices touched by no kept edge
    // are dropped; maps from new to old indices are returned on request.
    TransitionGraph edge_subgraph(const std::vector<int>& keep_edges,
                                  std::vector<int>* vertex_map = nullptr,
                                  std::vector<int>* edge_map = nullptr) const {
        std::vector<int> new_id(vertex_count_, -1);
        std::vector<int> old_vertex;
        for (int ei : keep_edges) {
            const Edge& e = edges_.at(ei);
            for (int v : {e.source, e.target}) {
                if (new_id[v] < 0) {
                    new_id[v] = static_cast<int>(old_vertex.size());
                    old_vertex.push_back(v);
                }
            }
        }
        if (old_vertex.empty()) throw std::invalid_argument("edge_subgraph: empty edge set");
        std::vector<Edge> sub;
        sub.reserve(keep_edges.size());
        for (int ei : keep_edges) {
            const Edge& e = edges_[ei];
            sub.push_back({new_id[e.source], new_id[e.target], e.label});
        }
        std::vector<std::string> sub_names;
        if (!names_.empty()) {
            for (int v : old_vertex) sub_names.push_back(names_[v]);
        }
        if (vertex_map) *vertex_map = old_vertex;
        if (edge_map) *edge_map = keep_edges;
        return TransitionGraph(static_cast<int>(old_vertex.size()), std::move(sub), alphabet_,
                               std::move(sub_names));
    }

    // Restrict to vertices with both an outgoing and an incoming edge,
    // iterated to a fixed point. Every bi-infinite path lives in the result.
    TransitionGraph essential(std::vector<int>* edge_map = nullptr) const {
        std::vector<char> alive(vertex_count_, 1);
        bool changed = true;
        while (changed) {
            changed = false;
            for (int v = 0; v < vertex_count_; ++v) {
                if (!alive[v]) continue;
                bool has_out = false, has_in = false;
                for (int ei : out_[v])
                    if (alive[edges_[ei].target]) { has_out = true; break; }
                for (int ei : in_[v])
                    if (alive[edges_[ei].source]) { has_in = true; break; }
                if (!has_out || !has_in) {
                    alive[v] = 0;
                    changed = true;
                }
            }
        }
        std::vector<int> keep;
        for (int i = 0; i < edge_count(); ++i)
            if (alive[edges_[i].source] && alive[edges_[i].target]) keep.push_back(i);
        if (keep.empty()) throw std::invalid_argument("essential: graph carries no bi-infinite path");
        return edge_subgraph(keep, nullptr, edge_map);
    }

    // Largest-entropy strongly connected piece is what callers usually want;
    // here we just hand back the edge lists per nontrivial component.
    std::vector<std::vector<int>> component_edge_lists() const {
        int n_scc = scc_ids_.empty() ? 0 : *std::max_element(scc_ids_.begin(), scc_ids_.end()) + 1;
        std::vector<std::vector<int>> comp(n_scc);
        for (int i = 0; i < edge_count(); ++i) {
            const Edge& e = edges_[i];
            if (scc_ids_[e.source] == scc_ids_[e.target]) comp[scc_ids_[e.source]].push_back(i);
        }
        comp.erase(std::remove_if(comp.begin(), comp.end(),
                                  [](const std::vector<int>& c) { return c.empty(); }),
                   comp.end());
        return comp;
    }

private:
    // Iterative Tarjan.
    std::vector<int> compute_scc() const {
        const int n = vertex_count_;
        std::vector<int> ids(n, -1), low(n, 0), num(n, -1), stack_pos(n, 0);
        std::vector<int> stk;
        std::vector<char> on_stack(n, 0);
        int counter = 0, comp = 0;
        struct Frame { int v; size_t ei; };
        std::vector<Frame> call;
        for (int s = 0; s < n; ++s) {
            if (num[s] >= 0) continue;
            call.push_back({s, 0});
            num[s] = low[s] = counter++;
            stk.push_back(s);
            on_stack[s] = 1;
            while (!call.empty()) {
                Frame& f = call.back();
                if (f.ei < out_[f.v].size()) {
                    int w = edges_[out_[f.v][f.ei++]].target;
                    if (num[w] < 0) {
                        num[w] = low[w] = counter++;
                        stk.push_back(w);
                        on_stack[w] = 1;
                        call.push_back({w, 0});
                    } else if (on_stack[w]) {
                        low[f.v] = std::min(low[f.v], num[w]);
                    }
                } else {
                    int v = f.v;
                    call.pop_back();
                    if (!call.empty()) call.back().ei = call.back().ei;  // no-op; low update below
                    if (low[v] == num[v]) {
                        while (true) {
                            int w = stk.back();
                            stk.pop_back();
                            on_stack[w] = 0;
                            ids[w] = comp;
                            if (w == v) break;
                        }
                        ++comp;
                    }
                    if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[v]);
                }
            }
        }
        return ids;
    }

    int vertex_count_ = 0;
    std::vector<Edge> edges_;
    int alphabet_ = 0;
    std::vector<std::string> names_;
    bool labeled_ = false;
    bool irreducible_ = false;
    std::vector<std::vector<int>> out_, in_;
    std::vector<int> scc_ids_;
};

// A primitive cycle of edges, stored in its lexicographically least rotation
// so equal orbits compare equal.
class PeriodicOrbit {
public:
    PeriodicOrbit(const TransitionGraph& g, std::vector<int> cycle_edges) {
        if (cycle_edges.empty()) throw std::invalid_argument("periodic orbit: empty cycle");
        const int p = static_cast<int>(cycle_edges.size());
        for (int i = 0; i < p; ++i) {
            const Edge& a = g.edge(cycle_edges[i]);
            const Edge& b = g.edge(cycle_edges[(i + 1) % p]);
            if (a.target != b.source)
                throw std::invalid_argument("periodic orbit: cycle does not close");
        }
        for (int d = 1; d < p; ++d) {
            if (p % d != 0) continue;
            bool power = true;
            for (int i = 0; i + d < p && power; ++i)
                if (cycle_edges[i] != cycle_edges[i + d]) power = false;
            if (power) throw std::invalid_argument("periodic orbit: cycle is a power of a shorter cycle");
        }
        edges_ = least_rotation(std::move(cycle_edges));
    }

    const std::vector<int>& edges() const { return edges_; }
    int period() const { return static_cast<int>(edges_.size()); }

    friend bool operator==(const PeriodicOrbit& a, const PeriodicOrbit& b) {
        return a.edges_ == b.edges_;
    }
    friend bool operator<(const PeriodicOrbit& a, const PeriodicOrbit& b) {
        if (a.period() != b.period()) return a.period() < b.period();
        return a.edges_ < b.edges_;
    }

    static std::vector<int> least_rotation(std::vector<int> w) {
        const int p = static_cast<int>(w.size());
        int best = 0;
        for (int i = 1; i < p; ++i) {
            for (int k = 0; k < p; ++k) {
                int a = w[(i + k) % p], b = w[(best + k) % p];
                if (a != b) {
                    if (a < b) best = i;
                    break;
                }
            }
        }
        std::rotate(w.begin(), w.begin() + best, w.end());
        return w;
    }

private:
    std::vector<int> edges_;
};

// First-return loops at a base vertex, given as label words. Only the words
// matter for sofic closures; the base vertex is bookkeeping.
struct LoopFamily {
    std::vector<std::vector<int>> loops;
    std::string base_name = "v0";

    void validate(int alphabet) const {
        if (loops.empty()) throw std::invalid_argument("loop family: empty");
        for (const auto& g : loops) {
            if (g.empty()) throw std::invalid_argument("loop family: empty loop word");
            for (int s : g)
                if (s < 0 || s >= alphabet)
                    throw std::invalid_argument("loop family: symbol outside alphabet");
        }
    }
};

// The full shift on d symbols: one vertex, d labeled self-loops.
inline TransitionGraph full_shift(int d) {
    if (d < 1) throw std::invalid_argument("full_shift: need at least one symbol");
    std::vector<Edge> edges;
    for (int a = 0; a < d; ++a) edges.push_back({0, 0, a});
    return TransitionGraph(1, std::move(edges), d);
}

// Golden-mean shift: binary sequences with no "11", right-resolving
// presentation on two vertices.
inline TransitionGraph golden_mean_shift() {
    std::vector<Edge> edges = {{0, 0, 0}, {0, 1, 1}, {1, 0, 0}};
    return TransitionGraph(2, std::move(edges), 2);
}

}  // namespace rotspec
