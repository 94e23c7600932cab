// potential.hpp — vector-valued potentials constant on edges.

#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "rotspec/graph.hpp"

namespace rotspec {

// Phi = (phi_1, ..., phi_m) as one real vector per edge. Cylinder functions
// of longer words become edge-constant after higher-block recoding.
class CylinderPotential {
public:
    CylinderPotential() = default;

    CylinderPotential(int dimension, std::vector<std::vector<double>> values)
        : dimension_(dimension), values_(std::move(values)) {
        if (dimension_ < 0) throw std::invalid_argument("potential: negative dimension");
        for (const auto& v : values_) {
            if (static_cast<int>(v.size()) != dimension_)
                throw std::invalid_argument("potential: vector length mismatch across edges");
            for (double x : v)
                if (!std::isfinite(x)) throw std::invalid_argument("potential: non-finite entry");
        }
    }

    int dimension() const { return dimension_; }
    int edge_count() const { return static_cast<int>(values_.size()); }
    const std::vector<double>& value(int edge) const { return values_.at(edge); }
    const std::vector<std::vector<double>>& values() const { return values_; }

    void check_graph(const TransitionGraph& g) const {
        if (g.edge_count() != edge_count())
            throw std::invalid_argument("potential: edge count does not match graph");
    }

    double weight(int edge, const std::vector<double>& direction) const {
        const auto& v = values_.at(edge);
        if (direction.size() != v.size())
            throw std::invalid_argument("potential: direction dimension mismatch");
        double s = 0;
        for (size_t i = 0; i < v.size(); ++i) s += direction[i] * v[i];
        return s;
    }

    // Single coordinate as a 1-dimensional potential.
    CylinderPotential coordinate(int k) const {
        std::vector<std::vector<double>> vals(values_.size());
        for (size_t e = 0; e < values_.size(); ++e) vals[e] = {values_[e].at(k)};
        return CylinderPotential(1, std::move(vals));
    }

    // First `count` coordinates.
    CylinderPotential slice(int count) const {
        if (count < 0 || count > dimension_) throw std::invalid_argument("potential: bad slice");
        std::vector<std::vector<double>> vals(values_.size());
        for (size_t e = 0; e < values_.size(); ++e)
            vals[e].assign(values_[e].begin(), values_[e].begin() + count);
        return CylinderPotential(count, std::move(vals));
    }

    // (Phi, psi) stacked; psi must be 1-dimensional over the same edges.
    CylinderPotential extend(const CylinderPotential& psi) const {
        if (psi.dimension() != 1) throw std::invalid_argument("extend: auxiliary potential must be 1-dimensional");
        if (psi.edge_count() != edge_count()) throw std::invalid_argument("extend: edge count mismatch");
        std::vector<std::vector<double>> vals = values_;
        for (size_t e = 0; e < vals.size(); ++e) vals[e].push_back(psi.value(static_cast<int>(e))[0]);
        return CylinderPotential(dimension_ + 1, std::move(vals));
    }

    bool is_constant(double tol = 0.0) const {
        if (values_.empty()) return true;
        for (const auto& v : values_)
            for (int k = 0; k < dimension_; ++k)
                if (std::abs(v[k] - values_[0][k]) > tol) return false;
        return true;
    }

private:
    int dimension_ = 0;
    std::vector<std::vector<double>> values_;
};

// First-symbol potential on a labeled graph: phi(e) = label(e).
inline CylinderPotential label_potential(const TransitionGraph& g) {
    if (!g.labeled()) throw std::invalid_argument("label_potential: graph is unlabeled");
    std::vector<std::vector<double>> vals;
    vals.reserve(g.edge_count());
    for (const Edge& e : g.edges()) vals.push_back({static_cast<double>(e.label)});
    return CylinderPotential(1, std::move(vals));
}

inline CylinderPotential constant_potential(const TransitionGraph& g, const std::vector<double>& c) {
    std::vector<std::vector<double>> vals(g.edge_count(), c);
    return CylinderPotential(static_cast<int>(c.size()), std::move(vals));
}

}  // namespace rotspec
