// simplex.hpp — dense two-phase primal simplex with Bland's rule.
//
// Small, deterministic, cycle-free; every LP in this library is a dense
// problem with at most a few thousand nonzeros. Standard form:
//
//     min c.x   s.t.  A x = b,  x >= 0.

#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace rotspec {

struct LinearProgram {
    int rows = 0, cols = 0;
    std::vector<double> A;  // row-major, rows x cols
    std::vector<double> b;
    std::vector<double> c;

    double& at(int r, int col) { return A[static_cast<size_t>(r) * cols + col]; }
    double at(int r, int col) const { return A[static_cast<size_t>(r) * cols + col]; }
};

enum class LpStatus { optimal, infeasible, unbounded };

struct LpResult {
    LpStatus status = LpStatus::infeasible;
    std::vector<double> x;
    double objective = 0;
};

namespace detail {

class SimplexTableau {
public:
    SimplexTableau(const LinearProgram& lp, double eps) : eps_(eps), m_(lp.rows), n_(lp.cols) {
        // columns: structural 0..n-1, artificial n..n+m-1
        width_ = n_ + m_;
        T_.assign(static_cast<size_t>(m_) * width_, 0.0);
        rhs_.resize(m_);
        basis_.resize(m_);
        for (int r = 0; r < m_; ++r) {
            double sign = lp.b[r] < 0 ? -1.0 : 1.0;
            for (int j = 0; j < n_; ++j) t(r, j) = sign * lp.at(r, j);
            rhs_[r] = sign * lp.b[r];
            t(r, n_ + r) = 1.0;
            basis_[r] = n_ + r;
        }
    }

    // Price out with Bland's rule on the given objective (size width_).
    // Returns false when optimal.
    bool iterate(std::vector<double>& reduced, const std::vector<double>& cost) {
        // reduced costs via basis cost row: z_j - c_j computed directly
        std::vector<double> y(m_);
        for (int r = 0; r < m_; ++r) y[r] = cost[basis_[r]];
        for (int j = 0; j < width_; ++j) {
            double z = 0;
            for (int r = 0; r < m_; ++r) z += y[r] * t(r, j);
            reduced[j] = cost[j] - z;
        }
        int enter = -1;
        for (int j = 0; j < width_; ++j) {
            if (reduced[j] < -eps_ && !banned_[j]) {
                enter = j;
                break;  // Bland: smallest index
            }
        }
        if (enter < 0) return false;
        int leave = -1;
        double best = std::numeric_limits<double>::infinity();
        for (int r = 0; r < m_; ++r) {
            if (t(r, enter) > eps_) {
                double ratio = rhs_[r] / t(r, enter);
                if (ratio < best - eps_ * std::max(1.0, std::abs(best)) ||
                    (std::abs(ratio - best) <= eps_ * std::max(1.0, std::abs(best)) &&
                     (leave < 0 || basis_[r] < basis_[leave]))) {
                    best = ratio;
                    leave = r;
                }
            }
        }
        if (leave < 0) throw UnboundedError{};
        pivot(leave, enter);
        return true;
    }

    void pivot(int r, int j) {
        double p = t(r, j);
        for (int col = 0; col < width_; ++col) t(r, col) /= p;
        rhs_[r] /= p;
        for (int rr = 0; rr < m_; ++rr) {
            if (rr == r) continue;
            double f = t(rr, j);
            if (f == 0) continue;
            for (int col = 0; col < width_; ++col) t(rr, col) -= f * t(r, col);
            rhs_[rr] -= f * rhs_[r];
        }
        basis_[r] = j;
    }

    struct UnboundedError {};

    double& t(int r, int j) { return T_[static_cast<size_t>(r) * width_ + j]; }
    double tval(int r, int j) const { return T_[static_cast<size_t>(r) * width_ + j]; }

    double eps_;
    int m_, n_, width_;
    std::vector<double> T_, rhs_;
    std::vector<int> basis_;
    std::vector<char> banned_;
};

}  // namespace detail

inline LpResult solve_lp(const LinearProgram& lp, double eps = 1e-9, int max_pivots = 200'000) {
    if (static_cast<int>(lp.b.size()) != lp.rows || static_cast<int>(lp.c.size()) != lp.cols ||
        static_cast<int>(lp.A.size()) != lp.rows * lp.cols)
        throw std::invalid_argument("solve_lp: inconsistent dimensions");

    detail::SimplexTableau tab(lp, eps);
    tab.banned_.assign(tab.width_, 0);

    // Phase 1: minimize the artificial mass.
    std::vector<double> cost1(tab.width_, 0.0);
    for (int j = tab.n_; j < tab.width_; ++j) cost1[j] = 1.0;
    std::vector<double> reduced(tab.width_);
    int pivots = 0;
    try {
        while (tab.iterate(reduced, cost1)) {
            if (++pivots > max_pivots) throw std::runtime_error("solve_lp: pivot cap exceeded (phase 1)");
        }
    } catch (const detail::SimplexTableau::UnboundedError&) {
        throw std::runtime_error("solve_lp: phase 1 unbounded (should not happen)");
    }
    double art = 0;
    for (int r = 0; r < tab.m_; ++r)
        if (tab.basis_[r] >= tab.n_) art += tab.rhs_[r];
    if (art > 1e-7) {
        LpResult res;
        res.status = LpStatus::infeasible;
        res.objective = art;
        return res;
    }
    // Drive surviving artificials out of the basis where possible; rows that
    // cannot pivot are redundant (all-zero structural row) and stay put with
    // value ~0.
    for (int r = 0; r < tab.m_; ++r) {
        if (tab.basis_[r] < tab.n_) continue;
        int j = -1;
        for (int col = 0; col < tab.n_; ++col)
            if (std::abs(tab.tval(r, col)) > 1e-7) {
                j = col;
                break;
            }
        if (j >= 0) tab.pivot(r, j);
    }
    // Ban artificial columns from re-entering.
    for (int j = tab.n_; j < tab.width_; ++j) tab.banned_[j] = 1;

    // Phase 2.
    std::vector<double> cost2(tab.width_, 0.0);
    for (int j = 0; j < tab.n_; ++j) cost2[j] = lp.c[j];
    try {
        while (tab.iterate(reduced, cost2)) {
            if (++pivots > max_pivots) throw std::runtime_error("solve_lp: pivot cap exceeded (phase 2)");
        }
    } catch (const detail::SimplexTableau::UnboundedError&) {
        LpResult res;
        res.status = LpStatus::unbounded;
        return res;
    }

    LpResult res;
    res.status = LpStatus::optimal;
    res.x.assign(lp.cols, 0.0);
    for (int r = 0; r < tab.m_; ++r)
        if (tab.basis_[r] < tab.n_) res.x[tab.basis_[r]] = tab.rhs_[r];
    for (double& v : res.x)
        if (v < 0 && v > -1e-9) v = 0;
    res.objective = 0;
    for (int j = 0; j < lp.cols; ++j) res.objective += lp.c[j] * res.x[j];
    return res;
}

}  // namespace rotspec
