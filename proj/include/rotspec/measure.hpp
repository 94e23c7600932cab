// measure.hpp — stationary Markov measures, the computable stand-in for
// shift-invariant measures: entropy, rotation vectors, periodic-orbit
// measures, and lifts through higher-block recodes.

#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "rotspec/graph.hpp"
#include "rotspec/potential.hpp"
#include "rotspec/recode.hpp"

namespace rotspec {

struct MarkovMeasure {
    std::vector<double> kernel;      // per edge: P(edge | source vertex)
    std::vector<double> stationary;  // per vertex

    void validate(const TransitionGraph& g, double row_tol = 1e-12, double stat_tol = 1e-10) const {
        if (static_cast<int>(kernel.size()) != g.edge_count())
            throw std::invalid_argument("markov measure: kernel size mismatch");
        if (static_cast<int>(stationary.size()) != g.vertex_count())
            throw std::invalid_argument("markov measure: stationary size mismatch");
        std::vector<double> row(g.vertex_count(), 0.0), flow(g.vertex_count(), 0.0);
        double mass = 0;
        for (int e = 0; e < g.edge_count(); ++e) {
            if (kernel[e] < -1e-15) throw std::invalid_argument("markov measure: negative kernel entry");
            const Edge& ed = g.edge(e);
            row[ed.source] += kernel[e];
            flow[ed.target] += stationary[ed.source] * kernel[e];
        }
        for (int v = 0; v < g.vertex_count(); ++v) {
            mass += stationary[v];
            if (stationary[v] > 0 && std::abs(row[v] - 1.0) > row_tol)
                throw std::invalid_argument("markov measure: kernel row does not sum to 1");
            if (std::abs(flow[v] - stationary[v]) > stat_tol)
                throw std::invalid_argument("markov measure: distribution not stationary");
        }
        if (std::abs(mass - 1.0) > 1e-10)
            throw std::invalid_argument("markov measure: stationary mass not 1");
    }

    // mu(edge cylinder): frequency of the edge.
    std::vector<double> edge_frequencies(const TransitionGraph& g) const {
        std::vector<double> f(g.edge_count());
        for (int e = 0; e < g.edge_count(); ++e) f[e] = stationary[g.edge(e).source] * kernel[e];
        return f;
    }

    // mu of the cylinder given by a fixed edge word.
    double word_probability(const TransitionGraph& g, const std::vector<int>& word) const {
        if (word.empty()) return 1.0;
        double p = stationary[g.edge(word.front()).source];
        for (int e : word) p *= kernel[e];
        return p;
    }
};

inline double measure_entropy(const TransitionGraph& g, const MarkovMeasure& mu) {
    double h = 0;
    for (int e = 0; e < g.edge_count(); ++e) {
        double k = mu.kernel[e];
        if (k <= 0) continue;
        h -= mu.stationary[g.edge(e).source] * k * std::log(k);
    }
    return std::max(h, 0.0);
}

inline std::vector<double> measure_rotation_vector(const TransitionGraph& g, const MarkovMeasure& mu,
                                                   const CylinderPotential& phi) {
    phi.check_graph(g);
    std::vector<double> rv(phi.dimension(), 0.0);
    for (int e = 0; e < g.edge_count(); ++e) {
        double f = mu.stationary[g.edge(e).source] * mu.kernel[e];
        const auto& val = phi.value(e);
        for (int k = 0; k < phi.dimension(); ++k) rv[k] += f * val[k];
    }
    return rv;
}

// Cycle average of Phi along a periodic orbit; equals the rotation vector of
// its orbit measure.
inline std::vector<double> orbit_rotation_vector(const TransitionGraph& g,
                                                 const CylinderPotential& phi,
                                                 const PeriodicOrbit& orbit) {
    phi.check_graph(g);
    std::vector<double> rv(phi.dimension(), 0.0);
    for (int e : orbit.edges())
        for (int k = 0; k < phi.dimension(); ++k) rv[k] += phi.value(e)[k];
    for (double& x : rv) x /= orbit.period();
    return rv;
}

// Measure supported on a periodic orbit whose cycle is vertex-simple:
// deterministic kernel along the cycle, uniform mass on the visited vertices.
inline MarkovMeasure orbit_measure(const TransitionGraph& g, const PeriodicOrbit& orbit) {
    std::vector<char> seen(g.vertex_count(), 0);
    for (int e : orbit.edges()) {
        int v = g.edge(e).source;
        if (seen[v])
            throw std::invalid_argument("orbit_measure: cycle revisits a vertex; recode first");
        seen[v] = 1;
    }
    MarkovMeasure mu;
    mu.kernel.assign(g.edge_count(), 0.0);
    mu.stationary.assign(g.vertex_count(), 0.0);
    for (int e : orbit.edges()) {
        mu.kernel[e] = 1.0;
        mu.stationary[g.edge(e).source] = 1.0 / orbit.period();
    }
    return mu;
}

struct RecodedOrbitMeasure {
    HigherBlockRecode recode;  // graph + lifted potential
    PeriodicOrbit orbit;       // lifted cycle (vertex-simple on recode.graph)
    MarkovMeasure measure;
};

// Recode until the lifted cycle is vertex-simple (window = period + 1 always
// suffices for a primitive cycle; smaller windows are tried first), then
// build the orbit measure there. Subject to the materialized-window cap.
inline RecodedOrbitMeasure orbit_measure_recoded(const TransitionGraph& g,
                                                 const CylinderPotential& phi,
                                                 const PeriodicOrbit& orbit) {
    for (int window = 1; window <= kRecodeWindowCap; ++window) {
        HigherBlockRecode rc = recode_with_lift(g, phi, window);
        PeriodicOrbit lifted = lift_orbit(rc, g, orbit);
        std::vector<char> seen(rc.graph.vertex_count(), 0);
        bool simple = true;
        for (int e : lifted.edges()) {
            int v = rc.graph.edge(e).source;
            if (seen[v]) {
                simple = false;
                break;
            }
            seen[v] = 1;
        }
        if (simple) {
            MarkovMeasure mu = orbit_measure(rc.graph, lifted);
            return {std::move(rc), std::move(lifted), std::move(mu)};
        }
    }
    throw std::runtime_error("orbit_measure: no recoding level within the window cap makes the cycle simple");
}

// Lift a Markov measure through a higher-block recode: the kernel only sees
// the newest edge, the stationary weight of a word is its cylinder mass.
inline MarkovMeasure lift_markov(const TransitionGraph& base, const MarkovMeasure& mu,
                                 const HigherBlockRecode& rc) {
    if (rc.window == 1) return mu;
    const int k = rc.window;
    MarkovMeasure out;
    out.kernel.assign(rc.graph.edge_count(), 0.0);
    out.stationary.assign(rc.graph.vertex_count(), 0.0);
    for (int e = 0; e < rc.graph.edge_count(); ++e) {
        const auto& word = rc.edge_words[e];
        out.kernel[e] = mu.kernel[word.back()];
        std::vector<int> prefix(word.begin(), word.end() - 1);
        out.stationary[rc.graph.edge(e).source] = mu.word_probability(base, prefix);
    }
    (void)k;
    return out;
}

}  // namespace rotspec
