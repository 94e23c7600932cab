// perron.hpp — dominant eigendata of nonnegative edge-weighted transition
// matrices by power iteration.
//
// The matrix never materializes: B[u][v] = sum of weights of edges u -> v,
// and matvecs run over the edge list. Periodic irreducible graphs are
// handled by iterating on B + eps*I; since B is nonnegative and I commutes,
// lambda(B) = lambda(B + eps*I) - eps exactly.

#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "rotspec/graph.hpp"

namespace rotspec {

struct PerronOptions {
    double shift = 1e-3;
    double tol = 1e-12;      // relative eigen residual, sup norm
    int max_iterations = 1'000'000;
    const std::vector<double>* warm_start = nullptr;
};

struct PerronResult {
    double lambda = 0;  // of B itself, shift removed
    std::vector<double> vec;
    int iterations = 0;
    double residual = 0;
};

namespace detail {

inline PerronResult power_iterate(const TransitionGraph& g, const std::vector<double>& weight,
                                  bool transpose, const PerronOptions& opt) {
    const int n = g.vertex_count();
    std::vector<double> x(n, 1.0 / n), y(n);
    if (opt.warm_start && static_cast<int>(opt.warm_start->size()) == n) {
        x = *opt.warm_start;
        double s = 0;
        for (double v : x) s += std::abs(v);
        if (s <= 0 || !std::isfinite(s)) {
            x.assign(n, 1.0 / n);
        } else {
            for (double& v : x) v = std::abs(v) / s;
        }
    }
    double lambda = 0, resid = 0;
    int it = 0;
    for (; it < opt.max_iterations; ++it) {
        for (int v = 0; v < n; ++v) y[v] = opt.shift * x[v];
        // B[u][v] = total weight of edges u -> v; the row action sends mass
        // from targets back to sources.
        for (int e = 0; e < g.edge_count(); ++e) {
            const Edge& ed = g.edge(e);
            if (transpose)
                y[ed.target] += weight[e] * x[ed.source];
            else
                y[ed.source] += weight[e] * x[ed.target];
        }
        double s = 0;
        for (double v : y) s += v;
        if (!(s > 0) || !std::isfinite(s))
            throw std::runtime_error("perron: iteration collapsed (weights degenerate)");
        lambda = s;  // ||x||_1 = 1, so sum(B'x) -> lambda at the fixed point
        resid = 0;
        for (int v = 0; v < n; ++v) {
            double r = std::abs(y[v] - lambda * x[v]);
            if (r > resid) resid = r;
        }
        for (int v = 0; v < n; ++v) x[v] = y[v] / s;
        if (resid <= opt.tol * lambda) {
            ++it;
            break;
        }
    }
    if (resid > opt.tol * lambda)
        throw std::runtime_error("perron: power iteration failed to converge");
    PerronResult out;
    out.lambda = lambda - opt.shift;
    out.vec = std::move(x);
    out.iterations = it;
    out.residual = resid / lambda;
    return out;
}

}  // namespace detail

// Right Perron data of the weighted adjacency matrix.
inline PerronResult perron_right(const TransitionGraph& g, const std::vector<double>& weight,
                                 const PerronOptions& opt = {}) {
    return detail::power_iterate(g, weight, false, opt);
}

// Left Perron data (right eigenvector of the transpose).
inline PerronResult perron_left(const TransitionGraph& g, const std::vector<double>& weight,
                                const PerronOptions& opt = {}) {
    return detail::power_iterate(g, weight, true, opt);
}

}  // namespace rotspec
