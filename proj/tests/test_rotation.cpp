#include <catch2/catch_amalgamated.hpp>

#include "test_support.hpp"

using namespace rotspec;
using namespace testsupport;
using Catch::Approx;

TEST_CASE("support function examples") {
    TransitionGraph g = full_shift(2);
    CylinderPotential phi = label_potential(g);
    CHECK(support_function(g, phi, {1.0}) == Approx(1.0).margin(1e-12));
    CHECK(support_function(g, phi, {-2.0}) == Approx(0.0).margin(1e-12));

    TransitionGraph gm = golden_mean_shift();
    CHECK(support_function(gm, label_potential(gm), {1.0}) == Approx(0.5).margin(1e-12));
}

TEST_CASE("rotation set examples") {
    SECTION("full 2-shift segment") {
        TransitionGraph g = full_shift(2);
        RotationPolytope P = rotation_set(g, label_potential(g));
        REQUIRE(P.vertices.size() == 2);
        CHECK(P.vertices[0][0] == Approx(0.0));
        CHECK(P.vertices[1][0] == Approx(1.0));
        CHECK(P.affine_dim == 1);
    }
    SECTION("constant potential is a point") {
        TransitionGraph g = golden_mean_shift();
        RotationPolytope P = rotation_set(g, constant_potential(g, {0.37}));
        CHECK(P.affine_dim == 0);
        REQUIRE(P.vertices.size() == 1);
        CHECK(P.vertices[0][0] == Approx(0.37));
    }
    SECTION("pair potential triangle") {
        auto sys = pair_potential_system();
        RotationPolytope P = rotation_set(sys.graph, sys.potential);
        CHECK(P.affine_dim == 2);
        REQUIRE(P.vertices.size() == 3);
        std::vector<Vec> expect = {{0.0, 0.0}, {0.5, 0.0}, {1.0, 1.0}};
        for (const Vec& e : expect) {
            bool found = false;
            for (const Vec& v : P.vertices)
                if (std::abs(v[0] - e[0]) < 1e-12 && std::abs(v[1] - e[1]) < 1e-12) found = true;
            CHECK(found);
        }
    }
    SECTION("degenerate diagonal") {
        auto sys = diagonal_degenerate_system();
        RotationPolytope P = rotation_set(sys.graph, sys.potential);
        CHECK(P.affine_dim == 1);
        CHECK(classify_point(P, {0.5, 0.5}) == PointClass::relative_interior);
    }
}

TEST_CASE("classification") {
    TransitionGraph g = full_shift(2);
    RotationPolytope P = rotation_set(g, label_potential(g));
    CHECK(classify_point(P, {0.5}) == PointClass::interior);
    CHECK(classify_point(P, {0.0}) == PointClass::boundary);
    CHECK(classify_point(P, {1.0}) == PointClass::boundary);
    CHECK(classify_point(P, {1.5}) == PointClass::exterior);
    CHECK(classify_point(P, {-1e-3}) == PointClass::exterior);
}

TEST_CASE("exactness duality: hull of cycles vs Karp support function") {
    std::mt19937_64 rng(123456);
    auto check = [&](const TransitionGraph& g, const CylinderPotential& phi) {
        RotationPolytope P = rotation_set(g, phi);
        for (int i = 0; i < 200; ++i) {
            auto v = random_direction(rng, phi.dimension(), 1.0);
            double n = norm(v);
            if (n < 1e-6) continue;
            for (double& x : v) x /= n;
            double hull_max = -1e300;
            for (const Vec& vert : P.vertices) hull_max = std::max(hull_max, dot(v, vert));
            CHECK(std::abs(hull_max - support_function(g, phi, v)) <= 1e-9);
        }
    };
    check(full_shift(2), label_potential(full_shift(2)));
    check(golden_mean_shift(), label_potential(golden_mean_shift()));
    auto sys = pair_potential_system();
    check(sys.graph, sys.potential);
    auto diag = diagonal_degenerate_system();
    check(diag.graph, diag.potential);
    auto rnd = random_irreducible_system(5);
    check(rnd.graph, rnd.potential);
}

TEST_CASE("orbit rotation vectors stay inside the polytope") {
    auto sys = pair_potential_system();
    RotationPolytope P = rotation_set(sys.graph, sys.potential);
    for (int L = 1; L <= 8; ++L) {
        for (const auto& orb : enumerate_periodic_orbits(sys.graph, L)) {
            Vec rv = orbit_rotation_vector(sys.graph, sys.potential, orb);
            CHECK(classify_point(P, rv) != PointClass::exterior);
        }
    }
}

TEST_CASE("equilibrium rotation vectors are never exterior") {
    std::mt19937_64 rng(31337);
    auto rnd = random_irreducible_system(17);
    RotationPolytope P = rotation_set(rnd.graph, rnd.potential);
    for (int i = 0; i < 25; ++i) {
        auto v = random_direction(rng, 2, 4.0);
        Vec rv = measure_rotation_vector(rnd.graph, pressure(rnd.graph, rnd.potential, v).equilibrium,
                                         rnd.potential);
        CHECK(classify_point(P, rv) != PointClass::exterior);
    }
}

TEST_CASE("caratheodory decomposition") {
    TransitionGraph g = full_shift(2);
    CylinderPotential phi = label_potential(g);
    RotationPolytope P = rotation_set(g, phi);
    auto orbits = enumerate_periodic_orbits(g, 2);
    std::vector<Vec> rvs;
    for (const auto& o : orbits) rvs.push_back(orbit_rotation_vector(g, phi, o));

    SECTION("midpoint over the two fixed points") {
        CaratheodoryDecomposition dec = caratheodory_decompose(P, rvs, {0.5});
        double recombined = 0, total = 0;
        for (size_t k = 0; k < dec.coefficients.size(); ++k) {
            CHECK(dec.coefficients[k] > 0.0);
            recombined += dec.coefficients[k] * rvs[dec.orbit_indices[k]][0];
            total += dec.coefficients[k];
        }
        CHECK(total == Approx(1.0).margin(1e-12));
        CHECK(recombined == Approx(0.5).margin(1e-9));
        CHECK(dec.coefficients.size() <= 2);
    }
    SECTION("deterministic tie-break prefers low orbit indices") {
        CaratheodoryDecomposition a = caratheodory_decompose(P, rvs, {0.5});
        CaratheodoryDecomposition b = caratheodory_decompose(P, rvs, {0.5});
        CHECK(a.orbit_indices == b.orbit_indices);
        CHECK(a.coefficients == b.coefficients);
    }
    SECTION("exterior point is infeasible") {
        CHECK_THROWS_AS(caratheodory_decompose(P, rvs, {1.5}), std::invalid_argument);
    }
    SECTION("2-dim decomposition recombines and has entropy 0") {
        auto sys = pair_potential_system();
        RotationPolytope P2 = rotation_set(sys.graph, sys.potential);
        auto orbs2 = enumerate_periodic_orbits(sys.graph, 4);
        std::vector<Vec> rvs2;
        for (const auto& o : orbs2) rvs2.push_back(orbit_rotation_vector(sys.graph, sys.potential, o));
        Vec w = {0.5, 0.25};
        CaratheodoryDecomposition dec = caratheodory_decompose(P2, rvs2, w);
        CHECK(dec.coefficients.size() <= 3);
        Vec back(2, 0.0);
        for (size_t k = 0; k < dec.coefficients.size(); ++k)
            for (int i = 0; i < 2; ++i) back[i] += dec.coefficients[k] * rvs2[dec.orbit_indices[k]][i];
        CHECK(back[0] == Approx(w[0]).margin(1e-9));
        CHECK(back[1] == Approx(w[1]).margin(1e-9));
        CHECK(entropy_of_combination(sys.graph, sys.potential, orbs2, dec) ==
              Approx(0.0).margin(1e-12));
    }
}

TEST_CASE("rotation class distance agrees with classification") {
    auto sys = pair_potential_system();
    RotationPolytope P = rotation_set(sys.graph, sys.potential);
    CHECK(rotation_class_distance(sys.graph, sys.potential, {0.5, 0.25}) <= 1e-10);
    CHECK(rotation_class_distance(sys.graph, sys.potential, {0.25, 0.0}) <= 1e-10);
    double d = rotation_class_distance(sys.graph, sys.potential, {0.9, 0.1});
    CHECK(classify_point(P, {0.9, 0.1}) == PointClass::exterior);
    CHECK(d > 1e-3);
}

TEST_CASE("interval method matches the cycle hull on one-dimensional sets") {
    TransitionGraph gm = golden_mean_shift();
    CylinderPotential phi = label_potential(gm);
    RotationPolytope a = rotation_set(gm, phi, kCycleCap, RotationMethod::cycle_hull);
    RotationPolytope b = rotation_set(gm, phi, kCycleCap, RotationMethod::support_interval);
    REQUIRE(a.vertices.size() == b.vertices.size());
    for (size_t i = 0; i < a.vertices.size(); ++i)
        CHECK(a.vertices[i][0] == Approx(b.vertices[i][0]).margin(1e-12));
}
