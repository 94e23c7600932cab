// localized.hpp — localized entropy H(w) by Legendre-Fenchel duality.
//
// For w in the (relative) interior of the rotation set,
//
//     H(w) = inf_v  P(<v, Phi>) - <v, w>,
//
// a smooth convex minimization whose gradient is rv(mu_v) - w for the
// equilibrium state mu_v. The infimum is attained at finite v and the
// equilibrium there is the entropy-maximizing measure in the rotation class
// of w (its entropy certifies H(w)). For boundary w the infimum is only
// approached as ||v|| -> infinity; the optimizer reports the divergence (the
// boundary flag) together with the best objective value, and never claims
// attainment there.
//
// Degenerate rotation sets are handled by minimizing in the affine-hull
// coordinates of Rot(Phi); directions orthogonal to the hull leave the
// objective constant when w lies in the hull.

#pragma once

#include <cmath>
#include <optional>
#include <stdexcept>
#include <vector>

#include "rotspec/pressure.hpp"
#include "rotspec/rotation.hpp"

namespace rotspec {

struct LocalizedEntropyResult {
    Vec w;
    double H = 0;
    Vec v_star;              // optimal (or last) direction, ambient coordinates
    MarkovMeasure certificate;
    double gradient_residual = 0;  // ||rv(certificate) - w||
    bool boundary = false;         // divergence cap hit
    int iterations = 0;
    double pressure_value = 0;     // P(<v*, Phi>)
};

struct LocalizedOptions {
    double divergence_cap = 1e3;   // ||v|| beyond which boundary behavior is declared
    int max_iterations = 10'000;
    double residual_tol = 1e-7;
    double armijo_c = 1e-4;
    std::optional<Vec> initial_direction;  // ambient; grid scans warm-start here
    double classify_tol = 1e-9;
    double newton_trigger = 5e-2;  // gradient norm below which Newton steps start
    int stagnation_limit = 120;    // boundary mode: stop when the best value freezes
    // Callers with an exact membership route on large graphs (LP over edge
    // frequencies) pass the classification instead of trusting an inner
    // polytope approximation.
    std::optional<PointClass> class_hint;
};

inline LocalizedEntropyResult localized_entropy(const TransitionGraph& g,
                                                const CylinderPotential& phi, const Vec& w,
                                                const RotationPolytope& P,
                                                const LocalizedOptions& opt = {}) {
    if (static_cast<int>(w.size()) != phi.dimension())
        throw std::invalid_argument("localized_entropy: w dimension mismatch");
    PointClass cls = opt.class_hint ? *opt.class_hint : classify_point(P, w, opt.classify_tol);
    if (cls == PointClass::exterior)
        throw std::invalid_argument("localized_entropy: w lies outside the rotation set");

    const int r = P.affine_dim;
    PressureOptions popts;

    LocalizedEntropyResult res;
    res.w = w;
    // The polytope is exact, so boundary points are known up front; for them
    // the infimum is only approached and the result reports the best value.
    res.boundary = (cls == PointClass::boundary);

    if (r == 0) {
        // Singleton rotation set: the class is all of M, H(w) = h_top.
        PressureReport rep = pressure(g, phi, Vec(phi.dimension(), 0.0), &popts);
        res.H = rep.pressure;
        res.v_star.assign(phi.dimension(), 0.0);
        res.certificate = rep.equilibrium;
        Vec rv = measure_rotation_vector(g, res.certificate, phi);
        double d2 = 0;
        for (size_t i = 0; i < w.size(); ++i) d2 += (rv[i] - w[i]) * (rv[i] - w[i]);
        res.gradient_residual = std::sqrt(d2);
        res.pressure_value = rep.pressure;
        return res;
    }

    // Work in frame coordinates t; v = B t.
    Vec t(r, 0.0);
    if (opt.initial_direction) {
        const Vec& v0 = *opt.initial_direction;
        for (int j = 0; j < r; ++j) t[j] = dot(P.frame.basis[j], v0);
    }

    auto lift = [&](const Vec& tt) { return P.frame.lift_direction(tt); };

    struct Eval {
        double objective;
        double pressure;
        Vec gradient;       // frame coords
        Vec ambient_resid;  // rv - w
        MarkovMeasure eq;
    };
    auto evaluate = [&](const Vec& tt) -> Eval {
        Vec v = lift(tt);
        PressureReport rep = pressure(g, phi, v, &popts);
        Eval ev;
        ev.pressure = rep.pressure;
        ev.objective = rep.pressure - dot(v, w);
        Vec rv = measure_rotation_vector(g, rep.equilibrium, phi);
        ev.ambient_resid.resize(w.size());
        for (size_t i = 0; i < w.size(); ++i) ev.ambient_resid[i] = rv[i] - w[i];
        ev.gradient.resize(r);
        for (int j = 0; j < r; ++j) ev.gradient[j] = dot(P.frame.basis[j], ev.ambient_resid);
        ev.eq = std::move(rep.equilibrium);
        return ev;
    };

    Eval cur = evaluate(t);
    double best_obj = cur.objective;
    Eval best = cur;
    Vec best_t = t;

    double step = 1.0;
    int it = 0;
    bool capped = false;
    int stagnant = 0;
    for (; it < opt.max_iterations; ++it) {
        if (res.boundary && stagnant >= opt.stagnation_limit) break;
        double vnorm = norm(t);  // = ||v|| for an orthonormal frame
        double resid = norm(cur.ambient_resid);
        double target = std::min(opt.residual_tol, 1e-8 / std::max(1.0, vnorm));
        if (resid <= target) break;
        if (vnorm >= opt.divergence_cap) {
            capped = true;
            if (!res.boundary)
                throw std::runtime_error(
                    "localized_entropy: direction diverged at a point classified interior");
            break;
        }

        // Newton refinement once the gradient is small: finite-difference
        // Hessian of the pressure in frame coordinates.
        Vec dir(r, 0.0);
        bool have_newton = false;
        if (norm(cur.gradient) <= opt.newton_trigger) {
            const double h = 1e-5;
            std::vector<Vec> H(r, Vec(r, 0.0));
            bool ok = true;
            for (int j = 0; j < r && ok; ++j) {
                Vec tp = t, tm = t;
                tp[j] += h;
                tm[j] -= h;
                Eval ep = evaluate(tp), em = evaluate(tm);
                for (int i = 0; i < r; ++i) H[i][j] = (ep.gradient[i] - em.gradient[i]) / (2 * h);
            }
            // solve H dir = -grad by Gaussian elimination with a small ridge
            std::vector<Vec> A = H;
            Vec rhs(r);
            for (int i = 0; i < r; ++i) {
                A[i][i] += 1e-12;
                rhs[i] = -cur.gradient[i];
            }
            for (int col = 0; col < r && ok; ++col) {
                int piv = col;
                for (int row = col + 1; row < r; ++row)
                    if (std::abs(A[row][col]) > std::abs(A[piv][col])) piv = row;
                if (std::abs(A[piv][col]) < 1e-14) {
                    ok = false;
                    break;
                }
                std::swap(A[col], A[piv]);
                std::swap(rhs[col], rhs[piv]);
                for (int row = col + 1; row < r; ++row) {
                    double f = A[row][col] / A[col][col];
                    for (int k = col; k < r; ++k) A[row][k] -= f * A[col][k];
                    rhs[row] -= f * rhs[col];
                }
            }
            if (ok) {
                for (int i = r - 1; i >= 0; --i) {
                    double s = rhs[i];
                    for (int k = i + 1; k < r; ++k) s -= A[i][k] * dir[k];
                    dir[i] = s / A[i][i];
                }
                // accept only descent directions
                if (dot(dir, cur.gradient) < 0) have_newton = true;
            }
        }
        if (!have_newton)
            for (int j = 0; j < r; ++j) dir[j] = -cur.gradient[j];

        // Armijo backtracking; successful full steps let the trial step grow,
        // which is what carries boundary dives to the cap quickly.
        double alpha = have_newton ? 1.0 : step;
        double slope = dot(dir, cur.gradient);
        bool moved = false;
        for (int bt = 0; bt < 60; ++bt) {
            Vec tn = t;
            for (int j = 0; j < r; ++j) tn[j] += alpha * dir[j];
            Eval en = evaluate(tn);
            bool accept = en.objective <= cur.objective + opt.armijo_c * alpha * slope;
            // Near the optimum objective differences underflow while the
            // gradient is still well resolved; Newton steps that contract the
            // residual are progress on the stationarity system rv(v) = w.
            if (!accept && have_newton &&
                norm(en.ambient_resid) <= 0.9 * norm(cur.ambient_resid))
                accept = true;
            if (accept) {
                t = tn;
                cur = std::move(en);
                moved = true;
                if (!have_newton) step = (bt == 0) ? std::min(step * 2, 1e12) : alpha;
                break;
            }
            alpha /= 2;
        }
        if (cur.objective < best_obj - 1e-13) {
            best_obj = cur.objective;
            best = cur;
            best_t = t;
            stagnant = 0;
        } else {
            ++stagnant;
        }
        if (!moved) {
            // flat to machine precision: treat as converged if the residual is
            // tiny, otherwise report the numerical failure loudly
            if (res.boundary || norm(cur.ambient_resid) <= 10 * opt.residual_tol) break;
            throw std::runtime_error("localized_entropy: line search stalled before convergence");
        }
    }

    if (!res.boundary && it >= opt.max_iterations)
        throw std::runtime_error("localized_entropy: iteration cap reached without convergence");

    const bool use_best = res.boundary || capped;
    const Eval& fin = use_best ? best : cur;
    const Vec& fin_t = use_best ? best_t : t;
    res.H = std::max(fin.objective, 0.0);
    res.v_star = lift(fin_t);
    res.certificate = fin.eq;
    res.gradient_residual = norm(fin.ambient_resid);
    res.iterations = it;
    res.pressure_value = fin.pressure;
    return res;
}

inline LocalizedEntropyResult localized_entropy(const TransitionGraph& g,
                                                const CylinderPotential& phi, const Vec& w,
                                                const LocalizedOptions& opt = {}) {
    RotationPolytope P = rotation_set(g, phi);
    return localized_entropy(g, phi, w, P, opt);
}

// Entropy of an affine combination of periodic-orbit measures, evaluated
// through the measure machinery rather than asserted: entropy is affine on
// convex combinations with disjoint supports and each orbit measure has
// entropy zero, so this returns ~0 and grounds the H(0) = 0 endpoint.
inline double entropy_of_combination(const TransitionGraph& g, const CylinderPotential& phi,
                                     const std::vector<PeriodicOrbit>& orbits,
                                     const CaratheodoryDecomposition& dec) {
    if (dec.coefficients.size() != dec.orbit_indices.size() || dec.coefficients.empty())
        throw std::invalid_argument("entropy_of_combination: malformed decomposition");
    double total = 0, h = 0;
    for (size_t k = 0; k < dec.coefficients.size(); ++k) {
        total += dec.coefficients[k];
        const PeriodicOrbit& orb = orbits.at(dec.orbit_indices[k]);
        RecodedOrbitMeasure om = orbit_measure_recoded(g, phi, orb);
        h += dec.coefficients[k] * measure_entropy(om.recode.graph, om.measure);
    }
    if (std::abs(total - 1.0) > 1e-12)
        throw std::invalid_argument("entropy_of_combination: coefficients do not sum to 1");
    return h;
}

}  // namespace rotspec
