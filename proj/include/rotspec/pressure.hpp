// pressure.hpp — topological pressure of <v, Phi> and its equilibrium state.
//
// For an edge-constant potential on an irreducible edge shift the pressure is
// log of the Perron root of the weighted matrix B_e = exp(<v, Phi(e)>), and
// the (unique) equilibrium state is the Markov measure built from the Perron
// pair:
//
//   kernel(e)    = B_e r(target(e)) / (lambda r(source(e)))
//   stationary_u = l_u r_u                 with <l, r> = 1
//
// Weights are rescaled by the maximum cycle mean before exponentiating, which
// pins the scaled Perron root into [1, #edges] for any direction v; the
// rescale shifts log lambda by exactly the cycle mean.

#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "rotspec/cycles.hpp"
#include "rotspec/graph.hpp"
#include "rotspec/measure.hpp"
#include "rotspec/perron.hpp"
#include "rotspec/potential.hpp"

namespace rotspec {

struct PressureReport {
    std::vector<double> direction;
    double pressure = 0;               // nats
    std::vector<double> left, right;   // Perron pair of the rescaled matrix
    MarkovMeasure equilibrium;
    int iterations = 0;
    double residual = 0;
};

struct PressureOptions {
    PerronOptions perron;
    // Warm starts across nearby directions; optimizer loops reuse these.
    std::vector<double> warm_right, warm_left;
};

inline PressureReport pressure(const TransitionGraph& g, const CylinderPotential& phi,
                               const std::vector<double>& v, PressureOptions* opts = nullptr) {
    if (!g.irreducible()) throw std::invalid_argument("pressure: graph must be irreducible");
    phi.check_graph(g);
    if (static_cast<int>(v.size()) != phi.dimension())
        throw std::invalid_argument("pressure: direction dimension mismatch");

    const int n = g.vertex_count();
    std::vector<double> w(g.edge_count());
    for (int e = 0; e < g.edge_count(); ++e) w[e] = phi.weight(e, v);
    const double scale = max_cycle_mean(g, w);

    std::vector<double> b(g.edge_count());
    for (int e = 0; e < g.edge_count(); ++e) {
        b[e] = std::exp(w[e] - scale);
        if (!std::isfinite(b[e])) throw std::runtime_error("pressure: weight overflow");
        // Floor keeps the matrix strictly positive when far-off-cycle weights
        // underflow (deep boundary dives); the Perron root shift is O(1e-300).
        if (b[e] < 1e-300) b[e] = 1e-300;
    }

    PerronOptions popt;
    PerronOptions popt_left;
    if (opts) {
        popt = opts->perron;
        popt_left = opts->perron;
        popt.warm_start = opts->warm_right.empty() ? nullptr : &opts->warm_right;
        popt_left.warm_start = opts->warm_left.empty() ? nullptr : &opts->warm_left;
    }
    PerronResult right = perron_right(g, b, popt);
    PerronResult left = perron_left(g, b, popt_left);
    const double lambda = right.lambda;
    if (!(lambda > 0)) throw std::runtime_error("pressure: nonpositive Perron root");

    PressureReport rep;
    rep.direction = v;
    rep.pressure = scale + std::log(lambda);
    rep.iterations = right.iterations + left.iterations;
    rep.residual = std::max(right.residual, left.residual);

    // Normalize <l, r> = 1.
    double lr = 0;
    for (int i = 0; i < n; ++i) lr += left.vec[i] * right.vec[i];
    for (int i = 0; i < n; ++i) left.vec[i] /= lr;
    rep.right = right.vec;
    rep.left = left.vec;

    MarkovMeasure mu;
    mu.kernel.assign(g.edge_count(), 0.0);
    mu.stationary.assign(n, 0.0);
    for (int e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edge(e);
        mu.kernel[e] = b[e] * right.vec[ed.target] / (lambda * right.vec[ed.source]);
    }
    // Row-normalize to shed the eigen residual.
    std::vector<double> row(n, 0.0);
    for (int e = 0; e < g.edge_count(); ++e) row[g.edge(e).source] += mu.kernel[e];
    for (int e = 0; e < g.edge_count(); ++e) mu.kernel[e] /= row[g.edge(e).source];
    double mass = 0;
    for (int i = 0; i < n; ++i) mass += left.vec[i] * right.vec[i];
    for (int i = 0; i < n; ++i) mu.stationary[i] = left.vec[i] * right.vec[i] / mass;
    // One power step of the kernel tightens stationarity to the same order
    // as the eigen residual.
    std::vector<double> next(n, 0.0);
    for (int e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edge(e);
        next[ed.target] += mu.stationary[ed.source] * mu.kernel[e];
    }
    double nmass = 0;
    for (double x : next) nmass += x;
    for (int i = 0; i < n; ++i) mu.stationary[i] = next[i] / nmass;
    rep.equilibrium = std::move(mu);

    if (opts) {
        opts->warm_right = rep.right;
        opts->warm_left = rep.left;
    }
    return rep;
}

}  // namespace rotspec
