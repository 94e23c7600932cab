// Shared systems and independent oracles for the test suites. Oracles here
// must stay independent of the library code paths they check.

#pragma once

#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "rotspec/rotspec.hpp"

namespace testsupport {

using namespace rotspec;

// full 2-shift recoded to 2-blocks with Phi = (x0, x0*x1)
inline HigherBlockRecode pair_potential_system() {
    TransitionGraph g = full_shift(2);
    auto raw = [&](const std::vector<int>& word) {
        double a = g.edge(word[0]).label;
        double b = g.edge(word[1]).label;
        return std::vector<double>{a, a * b};
    };
    return higher_block_recode(g, 2, raw, 2);
}

// full 2-shift recoded to 2-blocks with the degenerate pair Phi = (x0, x1)
inline HigherBlockRecode diagonal_degenerate_system() {
    TransitionGraph g = full_shift(2);
    auto raw = [&](const std::vector<int>& word) {
        double a = g.edge(word[0]).label;
        double b = g.edge(word[1]).label;
        return std::vector<double>{a, b};
    };
    return higher_block_recode(g, 2, raw, 2);
}

// seeded irreducible multigraph with a random m-dim potential
struct RandomSystem {
    TransitionGraph graph;
    CylinderPotential potential;
};

inline RandomSystem random_irreducible_system(std::uint64_t seed, int vertices = 4, int extra = 5,
                                              int m = 2) {
    std::mt19937_64 rng(seed);
    std::vector<Edge> edges;
    for (int v = 0; v < vertices; ++v) edges.push_back({v, (v + 1) % vertices, -1});
    std::uniform_int_distribution<int> pick(0, vertices - 1);
    for (int i = 0; i < extra; ++i) edges.push_back({pick(rng), pick(rng), -1});
    TransitionGraph g(vertices, std::move(edges));
    std::uniform_real_distribution<double> val(-1.0, 1.0);
    std::vector<std::vector<double>> vals;
    for (int e = 0; e < g.edge_count(); ++e) {
        std::vector<double> v(m);
        for (int k = 0; k < m; ++k) v[k] = val(rng);
        vals.push_back(std::move(v));
    }
    return {g, CylinderPotential(m, std::move(vals))};
}

inline std::vector<double> random_direction(std::mt19937_64& rng, int m, double max_norm) {
    std::normal_distribution<double> n01(0.0, 1.0);
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    std::vector<double> v(m);
    double s = 0;
    for (double& x : v) {
        x = n01(rng);
        s += x * x;
    }
    double scale = max_norm * u01(rng) / std::sqrt(std::max(s, 1e-30));
    for (double& x : v) x *= scale;
    return v;
}

// --- oracles -------------------------------------------------------------

inline double binary_entropy(double w) {
    if (w <= 0.0 || w >= 1.0) return 0.0;
    return -w * std::log(w) - (1 - w) * std::log(1 - w);
}

// number of primitive binary necklaces of period exactly p (Moebius count)
inline std::uint64_t primitive_binary_necklaces(int p) {
    auto moebius = [](int n) {
        int result = 1;
        for (int d = 2; d * d <= n; ++d) {
            if (n % d == 0) {
                n /= d;
                if (n % d == 0) return 0;
                result = -result;
            }
        }
        if (n > 1) result = -result;
        return result;
    };
    std::int64_t total = 0;
    for (int d = 1; d <= p; ++d)
        if (p % d == 0) total += moebius(p / d) * (std::int64_t(1) << d);
    return static_cast<std::uint64_t>(total / p);
}

// brute-force golden-mean word count: binary words of length m avoiding "11"
inline std::uint64_t golden_words_brute(int m) {
    std::uint64_t count = 0;
    for (std::uint64_t x = 0; x < (std::uint64_t(1) << m); ++x) {
        bool ok = true;
        for (int i = 0; i + 1 < m; ++i)
            if ((x >> i) & (x >> (i + 1)) & 1) ok = false;
        if (ok) ++count;
    }
    return count;
}

// pressure of the full 2-shift with the first-symbol potential, closed form
inline double full2_pressure(double t) { return std::log(1.0 + std::exp(t)); }

}  // namespace testsupport
