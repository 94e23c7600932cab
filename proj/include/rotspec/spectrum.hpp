// spectrum.hpp — entropy spectra of rotation classes.
//
// Pipeline for an interior w: decompose w over periodic-orbit rotation
// vectors, take X' = union of those orbits, append the truncated distance
// potential phi_aux(x) = dist(x, X') (a cylinder function after higher-block
// recoding), compute the fiber interval I = [0, b] of aux values available in
// the rotation class, and scan x |-> H(w, x) over I. The value at x = 0 is 0
// (the fiber consists of combinations of the orbit measures), the maximum is
// H(w), and concavity makes the sampled range an interval up to grid
// resolution.

#pragma once

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "rotspec/localized.hpp"
#include "rotspec/recode.hpp"
#include "rotspec/rotation.hpp"
#include "rotspec/simplex.hpp"

namespace rotspec {

// Metric convention: d(x, y) = 2^{-k}, k = min{|i| : x_i != y_i}. The
// truncated distance to X' on a (2k+1)-window is therefore dyadic: 0 when the
// window occurs in X', else 2^{-rho} with rho the largest radius whose
// central subword occurs in X'.
struct DistanceTarget {
    // Orbit union: label words of the periodic orbits (e.g. {"0"}, {"01"}).
    std::vector<std::vector<int>> orbit_words;
    // Sub-SFT alternative: a labeled presentation plus its memory (forbidden
    // word length - 1). Used when orbit_words is empty.
    const TransitionGraph* sub_shift = nullptr;
    int memory = 0;

    int max_orbit_period() const {
        int p = 0;
        for (const auto& w : orbit_words) p = std::max(p, static_cast<int>(w.size()));
        return p;
    }
};

struct DistancePotential {
    HigherBlockRecode recode;     // graph at window 2k+1 with (Phi, aux) stacked
    int aux_coordinate = 0;       // index of the distance coordinate
    int window_radius = 0;        // k
};

namespace detail {

// Does the label word occur in the target set?
struct FactorOracle {
    // orbit union: all circular factors per length, cached
    const DistanceTarget* target;
    mutable std::vector<std::set<std::vector<int>>> orbit_factors;  // by length

    bool occurs(const std::vector<int>& word) const {
        if (!target->orbit_words.empty()) {
            size_t len = word.size();
            if (orbit_factors.size() <= len) orbit_factors.resize(len + 1);
            auto& cache = orbit_factors[len];
            if (cache.empty()) {
                for (const auto& orb : target->orbit_words) {
                    const int p = static_cast<int>(orb.size());
                    for (int s = 0; s < p; ++s) {
                        std::vector<int> f(len);
                        for (size_t i = 0; i < len; ++i) f[i] = orb[(s + i) % p];
                        cache.insert(std::move(f));
                    }
                }
            }
            return cache.count(word) > 0;
        }
        // sub-SFT: word occurs iff some path in the presentation carries it
        const TransitionGraph& y = *target->sub_shift;
        std::vector<char> alive(y.vertex_count(), 1);
        for (int s : word) {
            std::vector<char> next(y.vertex_count(), 0);
            bool any = false;
            for (int e = 0; e < y.edge_count(); ++e) {
                const Edge& ed = y.edge(e);
                if (ed.label == s && alive[ed.source]) {
                    next[ed.target] = 1;
                    any = true;
                }
            }
            if (!any) return false;
            alive = std::move(next);
        }
        return true;
    }
};

}  // namespace detail

// Truncated distance value of a (2k+1)-label word.
inline double truncated_distance_value(const std::vector<int>& word, int k,
                                       const detail::FactorOracle& oracle) {
    if (static_cast<int>(word.size()) != 2 * k + 1)
        throw std::invalid_argument("truncated_distance_value: window length mismatch");
    if (oracle.occurs(word)) return 0.0;
    for (int rho = k; rho >= 1; --rho) {
        std::vector<int> center(word.begin() + (k - rho + 1), word.begin() + (k + rho));
        if (oracle.occurs(center)) return std::ldexp(1.0, -rho);  // 2^{-rho}
    }
    return 1.0;  // even the central symbol never occurs in X'
}

// Recode to window 2k+1 and append the truncated distance to X' as the last
// potential coordinate. k below the zero-set-exactness threshold is refused:
// 2k+1 >= 2*max period for orbit unions, k >= memory for sub-SFTs.
inline DistancePotential distance_potential(const TransitionGraph& g,
                                            const CylinderPotential& phi,
                                            const DistanceTarget& target, int k) {
    if (k < 1) throw std::invalid_argument("distance_potential: window radius must be >= 1");
    if (!g.labeled()) throw std::invalid_argument("distance_potential: graph must be labeled");
    if (!target.orbit_words.empty()) {
        int p = target.max_orbit_period();
        if (2 * k + 1 < 2 * p)
            throw std::invalid_argument(
                "distance_potential: window below zero-set-exactness threshold (need 2k+1 >= 2p)");
        for (const auto& w : target.orbit_words)
            if (w.empty()) throw std::invalid_argument("distance_potential: empty orbit word");
    } else if (target.sub_shift != nullptr) {
        if (k < target.memory)
            throw std::invalid_argument(
                "distance_potential: window below zero-set-exactness threshold (need k >= memory)");
    } else {
        throw std::invalid_argument("distance_potential: empty target");
    }

    detail::FactorOracle oracle{&target, {}};
    const int window = 2 * k + 1;
    const int m = phi.dimension();
    auto raw = [&](const std::vector<int>& edge_word) {
        std::vector<double> v = m > 0 ? phi.value(edge_word.front()) : std::vector<double>{};
        std::vector<int> labels(edge_word.size());
        for (size_t i = 0; i < edge_word.size(); ++i) labels[i] = g.edge(edge_word[i]).label;
        v.push_back(truncated_distance_value(labels, k, oracle));
        return v;
    };
    DistancePotential out;
    out.recode = higher_block_recode(g, window, raw, m + 1);
    out.aux_coordinate = m;
    out.window_radius = k;
    return out;
}

// Endpoints of the fiber interval {int aux d mu : mu in the rotation class
// of w}: two LPs over the edge-frequency polytope (flow conservation +
// normalization + rotation-vector equalities). The fiber is an interval by
// convexity of the rotation class.
struct FiberInterval {
    double lo = 0, hi = 0;
};

inline FiberInterval fiber_interval(const TransitionGraph& g, const CylinderPotential& ext,
                                    const Vec& w) {
    const int m = static_cast<int>(w.size());
    if (ext.dimension() != m + 1)
        throw std::invalid_argument("fiber_interval: potential must extend w by one aux coordinate");
    ext.check_graph(g);
    const int E = g.edge_count(), V = g.vertex_count();

    LinearProgram lp;
    lp.rows = V + 1 + m;
    lp.cols = E;
    lp.A.assign(static_cast<size_t>(lp.rows) * lp.cols, 0.0);
    lp.b.assign(lp.rows, 0.0);
    lp.c.assign(lp.cols, 0.0);
    for (int e = 0; e < E; ++e) {
        const Edge& ed = g.edge(e);
        lp.at(ed.source, e) += 1.0;   // outflow
        lp.at(ed.target, e) -= 1.0;   // inflow
        lp.at(V, e) = 1.0;            // total mass
        for (int i = 0; i < m; ++i) lp.at(V + 1 + i, e) = ext.value(e)[i];
        lp.c[e] = -ext.value(e)[m];   // maximize aux integral
    }
    lp.b[V] = 1.0;
    for (int i = 0; i < m; ++i) lp.b[V + 1 + i] = w[i];

    LpResult res = solve_lp(lp);
    if (res.status != LpStatus::optimal)
        throw std::invalid_argument("fiber_interval: infeasible (w outside the rotation set)");
    FiberInterval out;
    out.hi = -res.objective;
    for (int e = 0; e < E; ++e) lp.c[e] = ext.value(e)[m];
    res = solve_lp(lp);
    if (res.status != LpStatus::optimal)
        throw std::runtime_error("fiber_interval: minimization LP failed after feasible maximization");
    out.lo = res.objective;
    return out;
}

// Right endpoint of the fiber interval I = [0, b].
inline double interval_endpoint_b(const TransitionGraph& g, const CylinderPotential& ext,
                                  const Vec& w) {
    double b = fiber_interval(g, ext, w).hi;
    if (b <= 1e-12)
        throw std::invalid_argument("interval_endpoint_b: degenerate auxiliary potential (b = 0)");
    return b;
}

struct SpectrumScan {
    Vec w;
    double b = 0;
    std::vector<double> grid;            // x values, grid[0] = 0, grid[n] = b
    std::vector<double> H;               // H(w, x)
    std::vector<double> v_norm;
    std::vector<char> boundary_flag;
    std::vector<double> residual;
    double x_max = 0;                    // grid argmax
    double H_w = 0;                      // max H value
    double range_min = 0, range_max = 0;
    double max_sorted_gap = 0;           // max adjacent gap of sorted H values
};

// Endpoint-clustered grid on [0, b]: x_j = b sin^2(j pi / 2n). Quadratic
// refinement at both endpoints, where H(w, .) is steep.
inline std::vector<double> clustered_grid(double b, int n) {
    std::vector<double> x(n + 1);
    for (int j = 0; j <= n; ++j) {
        double s = std::sin(0.5 * M_PI * j / n);
        x[j] = b * s * s;
    }
    x[0] = 0.0;
    x[n] = b;
    return x;
}

// Scan H(w, x) over the fiber interval. The extended potential's last
// coordinate is the aux potential; w is the base target.
// On graphs small enough for exact cycle hulls the polytope does all
// classification; above the size threshold an orbit-sampled frame carries the
// affine geometry and membership is decided by the exact edge-frequency LP.
struct ScanGeometry {
    RotationPolytope polytope;
    bool exact_polytope = true;
};

inline ScanGeometry scan_geometry(const TransitionGraph& g, const CylinderPotential& ext) {
    ScanGeometry geo;
    if (g.edge_count() <= 96) {
        geo.polytope = rotation_set(g, ext);
        return geo;
    }
    geo.exact_polytope = false;
    auto orbits = enumerate_periodic_orbits(g, 8);
    std::vector<Vec> rvs;
    for (const auto& o : orbits) rvs.push_back(orbit_rotation_vector(g, ext, o));
    geo.polytope = make_polytope(std::move(rvs));
    return geo;
}

inline SpectrumScan spectrum_scan(const TransitionGraph& g, const CylinderPotential& ext,
                                  const Vec& w, int n, const RotationPolytope* ext_polytope = nullptr,
                                  const LocalizedOptions& lopt_in = {}) {
    if (n < 3) throw std::invalid_argument("spectrum_scan: grid size must be >= 3");
    ScanGeometry geo;
    const RotationPolytope* P = ext_polytope;
    bool exact_polytope = true;
    if (!P) {
        geo = scan_geometry(g, ext);
        P = &geo.polytope;
        exact_polytope = geo.exact_polytope;
    }

    SpectrumScan scan;
    scan.w = w;
    FiberInterval fiber = fiber_interval(g, ext, w);
    if (fiber.hi <= 1e-12)
        throw std::invalid_argument("spectrum_scan: degenerate auxiliary potential (b = 0)");
    if (fiber.lo > 1e-9)
        throw std::invalid_argument(
            "spectrum_scan: fiber does not reach 0 (aux potential not grounded at w)");
    scan.b = fiber.hi;
    scan.grid = clustered_grid(scan.b, n);

    // The scan must attain H(w) exactly, so the aux integral of the base
    // problem's entropy maximizer joins the grid.
    {
        const int m = static_cast<int>(w.size());
        CylinderPotential base = ext.slice(m);
        LocalizedOptions blopt = lopt_in;
        ScanGeometry bgeo = scan_geometry(g, base);
        if (!bgeo.exact_polytope) {
            if (rotation_class_distance(g, base, w) > 1e-8)
                throw std::invalid_argument("spectrum_scan: w outside the rotation set");
            blopt.class_hint = PointClass::interior;
        }
        LocalizedEntropyResult base_le = localized_entropy(g, base, w, bgeo.polytope, blopt);
        double xm = measure_rotation_vector(g, base_le.certificate, ext)[m];
        if (xm > 0 && xm < scan.b) {
            scan.grid.push_back(xm);
            std::sort(scan.grid.begin(), scan.grid.end());
            scan.grid.erase(std::unique(scan.grid.begin(), scan.grid.end(),
                                        [](double a, double b) { return std::abs(a - b) < 1e-12; }),
                            scan.grid.end());
        }
    }
    const int points = static_cast<int>(scan.grid.size());
    scan.H.assign(points, 0.0);
    scan.v_norm.assign(points, 0.0);
    scan.boundary_flag.assign(points, 0);
    scan.residual.assign(points, 0.0);

    LocalizedOptions lopt = lopt_in;
    Vec warm;
    for (int j = 0; j < points; ++j) {
        if (j == 0) {
            // H(w, 0) = 0: the zero fiber consists of combinations of the X'
            // orbit measures. The Legendre route cannot attain boundary
            // points; the value is analytic.
            scan.H[0] = 0.0;
            scan.boundary_flag[0] = 1;
            continue;
        }
        Vec target = w;
        target.push_back(scan.grid[j]);
        if (exact_polytope) {
            if (classify_point(*P, target) == PointClass::exterior)
                throw std::runtime_error(
                    "spectrum_scan: grid point classified exterior (b overestimated)");
            lopt.class_hint.reset();
        } else {
            // the fiber endpoints are exact, so membership along the segment
            // reduces to the interval check
            lopt.class_hint = (scan.grid[j] >= scan.b * (1 - 1e-12)) ? PointClass::boundary
                                                                     : PointClass::interior;
        }
        lopt.initial_direction = warm.empty() ? std::optional<Vec>{} : std::optional<Vec>(warm);
        LocalizedEntropyResult le = localized_entropy(g, ext, target, *P, lopt);
        scan.H[j] = le.H;
        scan.v_norm[j] = norm(le.v_star);
        scan.boundary_flag[j] = le.boundary ? 1 : 0;
        scan.residual[j] = le.gradient_residual;
        if (!le.boundary) warm = le.v_star;
    }

    int arg = 0;
    for (int j = 0; j < points; ++j)
        if (scan.H[j] > scan.H[arg]) arg = j;
    scan.x_max = scan.grid[arg];
    scan.H_w = scan.H[arg];
    std::vector<double> sorted = scan.H;
    std::sort(sorted.begin(), sorted.end());
    scan.range_min = sorted.front();
    scan.range_max = sorted.back();
    scan.max_sorted_gap = 0;
    for (size_t i = 1; i < sorted.size(); ++i)
        scan.max_sorted_gap = std::max(scan.max_sorted_gap, sorted[i] - sorted[i - 1]);
    return scan;
}

struct TracePoint {
    double s = 0;          // aux target
    double entropy = 0;    // of the equilibrium certificate (an ergodic measure)
    double rv_residual = 0;
    double v_norm = 0;
    double pressure = 0;
    Vec direction;
    MarkovMeasure certificate;
};

struct ErgodicTrace {
    Vec w;
    double b = 0;
    double x_max = 0;              // aux integral of the entropy maximizer
    std::vector<TracePoint> points;
    double covered_min = 0, covered_max = 0, max_sorted_gap = 0;
};

// Geometric refinement towards both endpoints of (0, b), plus x_max itself.
inline std::vector<double> trace_grid(double b, int n, double x_max) {
    std::set<double> pts;
    int half = n / 2;
    double lo = b * 1e-3;
    for (int i = 0; i < half; ++i) {
        double f = lo * std::pow((0.5 * b) / lo, static_cast<double>(i) / (half - 1));
        pts.insert(f);
        pts.insert(b - f);
    }
    if (x_max > 0 && x_max < b) pts.insert(x_max);
    return {pts.begin(), pts.end()};
}

// Equilibrium certificates along the fiber: each trace point's certificate is
// an ergodic measure in the rotation class of w, and its entropy is H(w, s).
// Together they sweep an entropy subinterval reaching H(w) at s = x_max.
inline ErgodicTrace ergodic_spectrum_trace(const TransitionGraph& g, const CylinderPotential& ext,
                                           const Vec& w, int n,
                                           const RotationPolytope* ext_polytope = nullptr,
                                           const LocalizedOptions& lopt_in = {}) {
    if (n < 8) throw std::invalid_argument("ergodic_spectrum_trace: need at least 8 trace points");
    ScanGeometry geo;
    const RotationPolytope* P = ext_polytope;
    bool exact_polytope = true;
    if (!P) {
        geo = scan_geometry(g, ext);
        P = &geo.polytope;
        exact_polytope = geo.exact_polytope;
    }

    ErgodicTrace tr;
    tr.w = w;
    FiberInterval fiber = fiber_interval(g, ext, w);
    if (fiber.hi <= 1e-12)
        throw std::invalid_argument("ergodic trace: degenerate auxiliary potential (b = 0)");
    tr.b = fiber.hi;

    // x_max = aux integral of the entropy maximizer over the rotation class
    // of w, from the base localized problem in the first m coordinates.
    const int m = static_cast<int>(w.size());
    CylinderPotential base = ext.slice(m);
    {
        LocalizedOptions blopt = lopt_in;
        ScanGeometry bgeo = scan_geometry(g, base);
        if (!bgeo.exact_polytope) {
            if (rotation_class_distance(g, base, w) > 1e-8)
                throw std::invalid_argument("ergodic trace: w outside the rotation set");
            blopt.class_hint = PointClass::interior;
        }
        LocalizedEntropyResult base_le = localized_entropy(g, base, w, bgeo.polytope, blopt);
        Vec rv_max = measure_rotation_vector(g, base_le.certificate, ext);
        tr.x_max = rv_max[m];
    }

    LocalizedOptions lopt = lopt_in;
    Vec warm;
    for (double s : trace_grid(tr.b, n, tr.x_max)) {
        Vec target = w;
        target.push_back(s);
        if (exact_polytope) {
            if (classify_point(*P, target) == PointClass::exterior)
                throw std::runtime_error("spectrum trace: target exterior");
            lopt.class_hint.reset();
        } else {
            if (s < fiber.lo - 1e-9 || s > fiber.hi + 1e-9)
                throw std::runtime_error("spectrum trace: target outside the fiber interval");
            lopt.class_hint = (s >= tr.b * (1 - 1e-12)) ? PointClass::boundary
                                                        : PointClass::interior;
        }
        lopt.initial_direction = warm.empty() ? std::optional<Vec>{} : std::optional<Vec>(warm);
        LocalizedEntropyResult le = localized_entropy(g, ext, target, *P, lopt);
        TracePoint pt;
        pt.s = s;
        pt.entropy = measure_entropy(g, le.certificate);
        pt.rv_residual = le.gradient_residual;
        pt.v_norm = norm(le.v_star);
        pt.pressure = le.pressure_value;
        pt.direction = le.v_star;
        pt.certificate = le.certificate;
        tr.points.push_back(std::move(pt));
        if (!le.boundary) warm = le.v_star;
    }

    std::vector<double> hs;
    for (const auto& p : tr.points) hs.push_back(p.entropy);
    std::sort(hs.begin(), hs.end());
    tr.covered_min = hs.front();
    tr.covered_max = hs.back();
    tr.max_sorted_gap = 0;
    for (size_t i = 1; i < hs.size(); ++i)
        tr.max_sorted_gap = std::max(tr.max_sorted_gap, hs[i] - hs[i - 1]);
    return tr;
}

}  // namespace rotspec
