// rotation.hpp — exact rotation sets of edge-constant potentials.
//
// Every invariant measure's edge-frequency vector is a convex combination of
// uniform simple-cycle frequencies, and the rotation vector map is linear in
// edge frequencies, so Rot(Phi) is exactly the convex hull of the rotation
// vectors of simple cycles. The support function has an independent route:
// the maximum cycle mean of <v, Phi>, computed by Karp's recurrence. The two
// must agree; rotation_set checks its own facets against the Karp route.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "rotspec/cycles.hpp"
#include "rotspec/graph.hpp"
#include "rotspec/hull.hpp"
#include "rotspec/measure.hpp"
#include "rotspec/potential.hpp"
#include "rotspec/simplex.hpp"

namespace rotspec {

// max over invariant measures of <v, rv(mu)>: the maximum mean cycle of the
// weighted graph.
inline double support_function(const TransitionGraph& g, const CylinderPotential& phi,
                               const std::vector<double>& v) {
    phi.check_graph(g);
    std::vector<double> w(g.edge_count());
    for (int e = 0; e < g.edge_count(); ++e) w[e] = phi.weight(e, v);
    return max_cycle_mean(g, w);
}

struct Halfspace {
    Vec direction;  // ambient, unit
    double offset;  // <direction, x> <= offset
};

enum class PointClass { interior, relative_interior, boundary, exterior };

inline const char* to_string(PointClass c) {
    switch (c) {
        case PointClass::interior: return "interior";
        case PointClass::relative_interior: return "relative-interior";
        case PointClass::boundary: return "boundary";
        case PointClass::exterior: return "exterior";
    }
    return "?";
}

struct RotationPolytope {
    int dimension = 0;                    // ambient m
    std::vector<Vec> vertices;            // extreme points, ambient coords
    int affine_dim = 0;
    AffineFrame frame;
    std::vector<Halfspace> halfspaces;    // facets lifted to ambient + hull equalities
    std::vector<Facet> facets_local;      // in frame coordinates
    bool facets_exact = true;             // false above affine dimension 3
    std::vector<Vec> local_vertices;
};

// Build the polytope of an explicit point cloud (rotation vectors of cycles,
// certificate corners, ...). Vertices are recovered by cutting-plane
// refinement: facets of a small candidate set are checked against the whole
// cloud and violating argmax points (extreme by the lexicographic tie-break)
// join the candidates until the hull closes. Point clouds here can reach ~1e5
// entries; true vertex counts stay tiny.
inline RotationPolytope make_polytope(std::vector<Vec> points, double rank_tol = 1e-9) {
    if (points.empty()) throw std::invalid_argument("make_polytope: no points");
    const int m = static_cast<int>(points[0].size());
    std::sort(points.begin(), points.end());
    std::vector<Vec> dedup;
    for (const Vec& p : points) {
        if (!dedup.empty()) {
            double d = 0;
            for (int k = 0; k < m; ++k) d = std::max(d, std::abs(p[k] - dedup.back()[k]));
            if (d <= 1e-12) continue;
        }
        dedup.push_back(p);
    }

    RotationPolytope P;
    P.dimension = m;
    P.frame = affine_frame(dedup, rank_tol);
    P.affine_dim = P.frame.dim;
    const int r = P.affine_dim;

    std::vector<Vec> local;
    local.reserve(dedup.size());
    for (const Vec& p : dedup) local.push_back(P.frame.project(p));

    // argmax over a direction, lexicographic tie-break: always an extreme point
    auto argmax_dir = [&](const Vec& dir) {
        int best = 0;
        double bv = -1e300;
        for (int i = 0; i < static_cast<int>(local.size()); ++i) {
            double v = dot(dir, local[i]);
            if (v > bv + 1e-12 || (v > bv - 1e-12 && local[i] < local[best])) {
                bv = std::max(bv, v);
                best = i;
            }
        }
        return best;
    };

    std::vector<int> cand;
    auto add_cand = [&](int i) {
        if (std::find(cand.begin(), cand.end(), i) == cand.end()) {
            cand.push_back(i);
            return true;
        }
        return false;
    };

    if (r == 0) {
        cand = {0};
    } else if (r <= 3) {
        for (int j = 0; j < r; ++j) {
            Vec dir(r, 0.0);
            dir[j] = 1.0;
            add_cand(argmax_dir(dir));
            dir[j] = -1.0;
            add_cand(argmax_dir(dir));
        }
        for (int round = 0; round < 4096; ++round) {
            std::vector<Vec> cl;
            for (int i : cand) cl.push_back(local[i]);
            auto facets = hull_facets(cl, r);
            bool grew = false;
            for (const Facet& f : facets) {
                int am = argmax_dir(f.normal);
                if (dot(f.normal, local[am]) > f.offset + 1e-12)
                    if (add_cand(am)) grew = true;
            }
            if (!grew) break;
        }
        // drop candidates that ended up non-extreme (argmax ties on faces)
        std::vector<Vec> cl;
        for (int i : cand) cl.push_back(local[i]);
        std::vector<int> keep = extreme_points(cl);
        std::vector<int> final_cand;
        for (int i : keep) final_cand.push_back(cand[i]);
        cand = std::move(final_cand);
    } else {
        // no facet enumeration above dimension 3: every deduplicated point is
        // kept as a vertex candidate after an LP extreme filter
        std::vector<int> keep = extreme_points(local);
        cand = keep;
        P.facets_exact = false;
    }

    std::sort(cand.begin(), cand.end());
    for (int i : cand) {
        P.vertices.push_back(dedup[i]);
        P.local_vertices.push_back(local[i]);
    }

    if (r <= 3) {
        P.facets_local = hull_facets(P.local_vertices, r);
        for (const Facet& f : P.facets_local) {
            Vec dir = P.frame.lift_direction(f.normal);
            P.halfspaces.push_back({dir, f.offset + dot(dir, P.frame.origin)});
        }
    }
    // Affine-hull equalities as opposing halfspace pairs, so the halfspace
    // list cuts out the polytope even when it is degenerate.
    if (P.affine_dim < m) {
        // complete the frame basis to an orthonormal basis of R^m
        std::vector<Vec> full = P.frame.basis;
        for (int k = 0; k < m && static_cast<int>(full.size()) < m; ++k) {
            Vec cand(m, 0.0);
            cand[k] = 1.0;
            for (const Vec& b : full) {
                double s = dot(cand, b);
                for (int j = 0; j < m; ++j) cand[j] -= s * b[j];
            }
            double len = norm(cand);
            if (len > 1e-7) {
                for (double& x : cand) x /= len;
                full.push_back(cand);
            }
        }
        for (int i = P.affine_dim; i < static_cast<int>(full.size()); ++i) {
            double c = dot(full[i], P.frame.origin);
            P.halfspaces.push_back({full[i], c});
            Vec neg = full[i];
            for (double& x : neg) x = -x;
            P.halfspaces.push_back({neg, -c});
        }
    }
    return P;
}

enum class RotationMethod {
    automatic,         // cycle hull, except 1-dim potentials on large graphs
    cycle_hull,        // always enumerate simple cycles
    support_interval,  // 1-dim only: endpoints from the Karp support function
};

// Exact rotation set: hull of simple-cycle rotation vectors, cross-checked
// facet by facet against the Karp support function. For 1-dimensional
// potentials on large graphs the interval endpoints come from Karp directly
// (the two routes coincide in one dimension and cycle enumeration explodes
// on deep recodings).
inline RotationPolytope rotation_set(const TransitionGraph& g, const CylinderPotential& phi,
                                     std::size_t cycle_cap = kCycleCap,
                                     RotationMethod method = RotationMethod::automatic) {
    if (!g.irreducible()) throw std::invalid_argument("rotation_set: graph must be irreducible");
    phi.check_graph(g);
    if (method == RotationMethod::automatic)
        method = (phi.dimension() == 1 && g.edge_count() > 96) ? RotationMethod::support_interval
                                                               : RotationMethod::cycle_hull;
    if (method == RotationMethod::support_interval) {
        if (phi.dimension() != 1)
            throw std::invalid_argument("rotation_set: interval method needs a 1-dim potential");
        double hi = support_function(g, phi, {1.0});
        double lo = -support_function(g, phi, {-1.0});
        return make_polytope({{lo}, {hi}});
    }
    auto cycles = simple_cycles(g, cycle_cap);
    std::vector<Vec> rvs;
    rvs.reserve(cycles.size());
    for (const auto& c : cycles) rvs.push_back(orbit_rotation_vector(g, phi, c));
    RotationPolytope P = make_polytope(std::move(rvs));
    for (const Halfspace& h : P.halfspaces) {
        double s = support_function(g, phi, h.direction);
        if (std::abs(s - h.offset) > 1e-9)
            throw std::runtime_error("rotation_set: hull facet disagrees with support function");
    }
    return P;
}

// L1 distance from w to the set of rotation vectors realized by the
// edge-frequency polytope: an exact LP membership route that never touches
// cycle enumeration. Zero (up to LP tolerance) iff w is in Rot(Phi).
inline double rotation_class_distance(const TransitionGraph& g, const CylinderPotential& phi,
                                      const Vec& w) {
    phi.check_graph(g);
    const int m = phi.dimension();
    if (static_cast<int>(w.size()) != m)
        throw std::invalid_argument("rotation_class_distance: dimension mismatch");
    const int E = g.edge_count(), V = g.vertex_count();
    LinearProgram lp;
    lp.rows = V + 1 + m;
    lp.cols = E + 2 * m;  // frequencies + rv slack pairs
    lp.A.assign(static_cast<size_t>(lp.rows) * lp.cols, 0.0);
    lp.b.assign(lp.rows, 0.0);
    lp.c.assign(lp.cols, 0.0);
    for (int e = 0; e < E; ++e) {
        const Edge& ed = g.edge(e);
        lp.at(ed.source, e) += 1.0;
        lp.at(ed.target, e) -= 1.0;
        lp.at(V, e) = 1.0;
        for (int i = 0; i < m; ++i) lp.at(V + 1 + i, e) = phi.value(e)[i];
    }
    lp.b[V] = 1.0;
    for (int i = 0; i < m; ++i) {
        lp.b[V + 1 + i] = w[i];
        lp.at(V + 1 + i, E + 2 * i) = 1.0;
        lp.at(V + 1 + i, E + 2 * i + 1) = -1.0;
        lp.c[E + 2 * i] = 1.0;
        lp.c[E + 2 * i + 1] = 1.0;
    }
    LpResult res = solve_lp(lp);
    if (res.status != LpStatus::optimal)
        throw std::runtime_error("rotation_class_distance: LP failed");
    return res.objective;
}

inline PointClass classify_point(const RotationPolytope& P, const Vec& w, double tol = 1e-9) {
    if (static_cast<int>(w.size()) != P.dimension)
        throw std::invalid_argument("classify_point: dimension mismatch");
    if (P.frame.offset_distance(w) > tol) return PointClass::exterior;
    if (P.affine_dim == 0) return PointClass::relative_interior;

    Vec t = P.frame.project(w);
    if (P.facets_exact) {
        double worst = -1e300;
        for (const Facet& f : P.facets_local) worst = std::max(worst, dot(f.normal, t) - f.offset);
        if (worst > tol) return PointClass::exterior;
        if (worst >= -tol) return PointClass::boundary;
        return P.affine_dim == P.dimension ? PointClass::interior : PointClass::relative_interior;
    }
    // No facets: LP membership plus probes along the frame directions.
    if (!in_convex_hull(P.local_vertices, t)) return PointClass::exterior;
    for (int j = 0; j < P.affine_dim; ++j) {
        for (double s : {tol, -tol}) {
            Vec q = t;
            q[j] += 2 * s;
            if (!in_convex_hull(P.local_vertices, q)) return PointClass::boundary;
        }
    }
    return P.affine_dim == P.dimension ? PointClass::interior : PointClass::relative_interior;
}

struct CaratheodoryDecomposition {
    std::vector<double> coefficients;  // strictly positive, sum to 1
    std::vector<int> orbit_indices;    // into the orbit list handed in
};

// w as a positive convex combination of at most m+1 periodic-orbit rotation
// vectors. LP over the orbit weights; the documented tie-break minimizes
// sum(i * c_i), which Bland's rule resolves deterministically.
inline CaratheodoryDecomposition caratheodory_decompose(const RotationPolytope& P,
                                                        const std::vector<Vec>& orbit_rvs,
                                                        const Vec& w, double tol = 1e-9) {
    if (orbit_rvs.empty()) throw std::invalid_argument("caratheodory_decompose: no orbits");
    PointClass cls = classify_point(P, w, tol);
    if (cls == PointClass::exterior)
        throw std::invalid_argument("caratheodory_decompose: w is exterior");

    const int r = P.affine_dim;
    const int n = static_cast<int>(orbit_rvs.size());
    LinearProgram lp;
    lp.rows = r + 1;
    lp.cols = n;
    lp.A.assign(static_cast<size_t>(lp.rows) * lp.cols, 0.0);
    lp.b.assign(lp.rows, 0.0);
    lp.c.assign(lp.cols, 0.0);
    for (int j = 0; j < n; ++j) {
        Vec t = P.frame.project(orbit_rvs[j]);
        for (int i = 0; i < r; ++i) lp.at(i, j) = t[i];
        lp.at(r, j) = 1.0;
        lp.c[j] = static_cast<double>(j);
    }
    Vec tw = P.frame.project(w);
    for (int i = 0; i < r; ++i) lp.b[i] = tw[i];
    lp.b[r] = 1.0;

    LpResult res = solve_lp(lp);
    if (res.status != LpStatus::optimal)
        throw std::invalid_argument(
            "caratheodory_decompose: infeasible (w exterior or max_period too small)");

    CaratheodoryDecomposition out;
    double total = 0;
    for (int j = 0; j < n; ++j) {
        if (res.x[j] > 1e-12) {
            out.orbit_indices.push_back(j);
            out.coefficients.push_back(res.x[j]);
            total += res.x[j];
        }
    }
    for (double& c : out.coefficients) c /= total;

    // soundness: recombination reproduces w
    Vec check(P.dimension, 0.0);
    for (size_t k = 0; k < out.orbit_indices.size(); ++k)
        for (int i = 0; i < P.dimension; ++i)
            check[i] += out.coefficients[k] * orbit_rvs[out.orbit_indices[k]][i];
    for (int i = 0; i < P.dimension; ++i)
        if (std::abs(check[i] - w[i]) > 1e-9)
            throw std::runtime_error("caratheodory_decompose: recombination drifted from w");
    return out;
}

}  // namespace rotspec
