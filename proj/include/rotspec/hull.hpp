// hull.hpp — affine hulls and convex hulls of small point clouds.
//
// Exact facet enumeration is provided for affine dimension <= 3; higher
// dimensions carry vertices only and answer membership queries by LP
// (rotation.hpp). Extreme points are filtered by LP membership tests, which
// sidesteps the classic coplanar-input degeneracies of incremental hulls;
// point counts here are tiny.

#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "rotspec/simplex.hpp"

namespace rotspec {

using Vec = std::vector<double>;

inline double dot(const Vec& a, const Vec& b) {
    double s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline double norm(const Vec& a) { return std::sqrt(dot(a, a)); }

// Jacobi eigendecomposition of a small symmetric matrix, deterministic sweep
// order, eigenpairs sorted by descending eigenvalue.
inline void jacobi_eigen(std::vector<Vec> A, std::vector<double>& eigval,
                         std::vector<Vec>& eigvec) {
    const int n = static_cast<int>(A.size());
    std::vector<Vec> V(n, Vec(n, 0.0));
    for (int i = 0; i < n; ++i) V[i][i] = 1.0;
    for (int sweep = 0; sweep < 120; ++sweep) {
        double off = 0;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) off += A[p][q] * A[p][q];
        if (off < 1e-30) break;
        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) {
                if (std::abs(A[p][q]) < 1e-300) continue;
                double theta = (A[q][q] - A[p][p]) / (2 * A[p][q]);
                double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1));
                double c = 1 / std::sqrt(t * t + 1), s = t * c;
                for (int k = 0; k < n; ++k) {
                    double akp = A[k][p], akq = A[k][q];
                    A[k][p] = c * akp - s * akq;
                    A[k][q] = s * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    double apk = A[p][k], aqk = A[q][k];
                    A[p][k] = c * apk - s * aqk;
                    A[q][k] = s * apk + c * aqk;
                }
                for (int k = 0; k < n; ++k) {
                    double vkp = V[k][p], vkq = V[k][q];
                    V[k][p] = c * vkp - s * vkq;
                    V[k][q] = s * vkp + c * vkq;
                }
            }
        }
    }
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (A[a][a] != A[b][b]) return A[a][a] > A[b][b];
        return a < b;
    });
    eigval.resize(n);
    eigvec.assign(n, Vec(n));
    for (int i = 0; i < n; ++i) {
        eigval[i] = A[order[i]][order[i]];
        for (int k = 0; k < n; ++k) eigvec[i][k] = V[k][order[i]];
        // sign convention: first component of largest magnitude positive
        int arg = 0;
        for (int k = 1; k < n; ++k)
            if (std::abs(eigvec[i][k]) > std::abs(eigvec[i][arg])) arg = k;
        if (eigvec[i][arg] < 0)
            for (double& x : eigvec[i]) x = -x;
    }
}

struct AffineFrame {
    Vec origin;                 // first point
    std::vector<Vec> basis;     // orthonormal, spans the hull directions
    std::vector<double> singular_values;
    int dim = 0;

    Vec project(const Vec& p) const {
        Vec t(dim);
        for (int j = 0; j < dim; ++j) {
            double s = 0;
            for (size_t k = 0; k < origin.size(); ++k) s += basis[j][k] * (p[k] - origin[k]);
            t[j] = s;
        }
        return t;
    }

    Vec lift(const Vec& t) const {
        Vec p = origin;
        for (int j = 0; j < dim; ++j)
            for (size_t k = 0; k < p.size(); ++k) p[k] += t[j] * basis[j][k];
        return p;
    }

    // Direction in ambient space from local coordinates (no origin shift).
    Vec lift_direction(const Vec& t) const {
        Vec d(origin.size(), 0.0);
        for (int j = 0; j < dim; ++j)
            for (size_t k = 0; k < d.size(); ++k) d[k] += t[j] * basis[j][k];
        return d;
    }

    // Distance of p from the affine subspace.
    double offset_distance(const Vec& p) const {
        Vec r(p.size());
        for (size_t k = 0; k < p.size(); ++k) r[k] = p[k] - origin[k];
        for (int j = 0; j < dim; ++j) {
            double s = 0;
            for (size_t k = 0; k < p.size(); ++k) s += basis[j][k] * r[k];
            for (size_t k = 0; k < p.size(); ++k) r[k] -= s * basis[j][k];
        }
        return norm(r);
    }
};

// Rank via singular values of the difference matrix; sigma > tol counts.
inline AffineFrame affine_frame(const std::vector<Vec>& points, double tol = 1e-9) {
    if (points.empty()) throw std::invalid_argument("affine_frame: no points");
    const int m = static_cast<int>(points[0].size());
    AffineFrame f;
    f.origin = points[0];
    std::vector<Vec> G(m, Vec(m, 0.0));
    for (const Vec& p : points)
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) G[i][j] += (p[i] - f.origin[i]) * (p[j] - f.origin[j]);
    std::vector<double> eigval;
    std::vector<Vec> eigvec;
    jacobi_eigen(G, eigval, eigvec);
    for (int i = 0; i < m; ++i) {
        double sigma = std::sqrt(std::max(eigval[i], 0.0));
        f.singular_values.push_back(sigma);
        if (sigma > tol) {
            f.basis.push_back(eigvec[i]);
            ++f.dim;
        }
    }
    return f;
}

// Is q in the convex hull of the given points (both in local coordinates)?
// Feasibility LP; dist_out reports the L1 infeasibility when not.
inline bool in_convex_hull(const std::vector<Vec>& pts, const Vec& q, double eps = 1e-9) {
    const int r = static_cast<int>(q.size());
    const int n = static_cast<int>(pts.size());
    if (n == 0) return false;
    LinearProgram lp;
    lp.rows = r + 1;
    lp.cols = n;
    lp.A.assign(static_cast<size_t>(lp.rows) * lp.cols, 0.0);
    lp.b.assign(lp.rows, 0.0);
    lp.c.assign(lp.cols, 0.0);
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < r; ++i) lp.at(i, j) = pts[j][i];
        lp.at(r, j) = 1.0;
    }
    for (int i = 0; i < r; ++i) lp.b[i] = q[i];
    lp.b[r] = 1.0;
    LpResult res = solve_lp(lp, eps);
    return res.status == LpStatus::optimal;
}

// Indices of extreme points: p is extreme iff p is not in the hull of the
// others. Deterministic, robust to collinear/coplanar input.
inline std::vector<int> extreme_points(const std::vector<Vec>& pts, double eps = 1e-9) {
    const int n = static_cast<int>(pts.size());
    std::vector<int> out;
    for (int i = 0; i < n; ++i) {
        std::vector<Vec> rest;
        rest.reserve(n - 1);
        for (int j = 0; j < n; ++j)
            if (j != i) rest.push_back(pts[j]);
        if (rest.empty() || !in_convex_hull(rest, pts[i], eps)) out.push_back(i);
    }
    return out;
}

struct Facet {
    Vec normal;      // unit, outward, local coordinates
    double offset;   // <normal, x> <= offset
};

// Facets of the hull of extreme points in local dimension r <= 3.
inline std::vector<Facet> hull_facets(const std::vector<Vec>& V, int r, double eps = 1e-12) {
    std::vector<Facet> facets;
    if (V.empty()) return facets;
    if (r == 0) return facets;
    if (r == 1) {
        double lo = V[0][0], hi = V[0][0];
        for (const Vec& p : V) {
            lo = std::min(lo, p[0]);
            hi = std::max(hi, p[0]);
        }
        facets.push_back({{1.0}, hi});
        facets.push_back({{-1.0}, -lo});
        return facets;
    }
    if (r == 2) {
        // monotone chain; V are extreme points, possibly unsorted
        std::vector<Vec> P = V;
        std::sort(P.begin(), P.end());
        auto cross = [](const Vec& o, const Vec& a, const Vec& b) {
            return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
        };
        std::vector<Vec> h;
        for (const Vec& p : P) {  // lower
            while (h.size() >= 2 && cross(h[h.size() - 2], h.back(), p) <= eps) h.pop_back();
            h.push_back(p);
        }
        size_t lower = h.size() + 1;
        for (auto it = P.rbegin() + 1; it != P.rend(); ++it) {  // upper
            while (h.size() >= lower && cross(h[h.size() - 2], h.back(), *it) <= eps) h.pop_back();
            h.push_back(*it);
        }
        h.pop_back();  // last == first
        const int k = static_cast<int>(h.size());
        for (int i = 0; i < k; ++i) {
            const Vec& p = h[i];
            const Vec& q = h[(i + 1) % k];
            Vec n = {q[1] - p[1], -(q[0] - p[0])};
            double len = norm(n);
            if (len <= eps) continue;
            n[0] /= len;
            n[1] /= len;
            facets.push_back({n, dot(n, p)});
        }
        return facets;
    }
    if (r == 3) {
        const int n = static_cast<int>(V.size());
        double scale = 0;
        for (const Vec& p : V) scale = std::max(scale, norm(p));
        scale = std::max(scale, 1.0);
        auto plane_seen = [&](const Vec& nrm, double off) {
            for (const Facet& f : facets)
                if (std::abs(f.offset - off) < 1e-9 * scale && norm({f.normal[0] - nrm[0],
                                                                     f.normal[1] - nrm[1],
                                                                     f.normal[2] - nrm[2]}) < 1e-9)
                    return true;
            return false;
        };
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                for (int c = b + 1; c < n; ++c) {
                    Vec u = {V[b][0] - V[a][0], V[b][1] - V[a][1], V[b][2] - V[a][2]};
                    Vec w = {V[c][0] - V[a][0], V[c][1] - V[a][1], V[c][2] - V[a][2]};
                    Vec nrm = {u[1] * w[2] - u[2] * w[1], u[2] * w[0] - u[0] * w[2],
                               u[0] * w[1] - u[1] * w[0]};
                    double len = norm(nrm);
                    if (len <= 1e-12 * scale * scale) continue;
                    for (double& x : nrm) x /= len;
                    double off = dot(nrm, V[a]);
                    bool above = false, below = false;
                    for (const Vec& p : V) {
                        double d = dot(nrm, p) - off;
                        if (d > 1e-9 * scale) above = true;
                        if (d < -1e-9 * scale) below = true;
                    }
                    if (above && below) continue;
                    if (above) {  // flip so all points are <=
                        for (double& x : nrm) x = -x;
                        off = -off;
                    }
                    if (!plane_seen(nrm, off)) facets.push_back({nrm, off});
                    if (!above && !below) {
                        // coplanar point set: keep both orientations so callers
                        // scanning for violated facets see both sides
                        Vec neg = nrm;
                        for (double& x : neg) x = -x;
                        if (!plane_seen(neg, -off)) facets.push_back({neg, -off});
                    }
                }
        return facets;
    }
    throw std::invalid_argument("hull_facets: facet enumeration only for dimension <= 3");
}

}  // namespace rotspec
