#include <catch2/catch_amalgamated.hpp>

#include "test_support.hpp"

using namespace rotspec;
using namespace testsupport;
using Catch::Approx;

TEST_CASE("localized entropy closed form on the full 2-shift") {
    TransitionGraph g = full_shift(2);
    CylinderPotential phi = label_potential(g);
    RotationPolytope P = rotation_set(g, phi);

    SECTION("symmetric point is the entropy maximum") {
        auto le = localized_entropy(g, phi, {0.5}, P);
        CHECK(le.H == Approx(std::log(2.0)).margin(1e-9));
        CHECK(norm(le.v_star) <= 1e-6);
        CHECK_FALSE(le.boundary);
    }
    SECTION("w = 0.75 has the Bernoulli certificate") {
        auto le = localized_entropy(g, phi, {0.75}, P);
        CHECK(le.H == Approx(binary_entropy(0.75)).margin(1e-9));
        CHECK(le.v_star[0] == Approx(std::log(3.0)).margin(1e-5));
        CHECK(le.certificate.kernel[1] == Approx(0.75).margin(1e-7));
    }
    SECTION("99-point grid against the closed form") {
        for (int j = 1; j <= 99; ++j) {
            double w = j / 100.0;
            auto le = localized_entropy(g, phi, {w}, P);
            CHECK(le.H == Approx(binary_entropy(w)).margin(1e-6));
            CHECK_FALSE(le.boundary);
        }
    }
    SECTION("boundary points flagged with vanishing value") {
        for (double w : {0.0, 1.0}) {
            auto le = localized_entropy(g, phi, {w}, P);
            CHECK(le.boundary);
            CHECK(le.H <= 1e-6);
        }
    }
    SECTION("exterior point rejected") {
        CHECK_THROWS_AS(localized_entropy(g, phi, {1.2}, P), std::invalid_argument);
    }
}

TEST_CASE("localized entropy certificates satisfy the stated invariants") {
    TransitionGraph g = golden_mean_shift();
    CylinderPotential phi = label_potential(g);
    RotationPolytope P = rotation_set(g, phi);
    double htop = topological_entropy(g);
    for (double w : {0.05, 0.15, 0.25, 0.3819660112501051, 0.45}) {
        auto le = localized_entropy(g, phi, {w}, P);
        CHECK_FALSE(le.boundary);
        CHECK(le.gradient_residual <= 1e-7);
        CHECK(std::abs(le.H - measure_entropy(g, le.certificate)) <= 1e-8);
        CHECK(le.H <= htop + 1e-12);
        CHECK(le.H >= 0.0);
        CHECK(le.H > 0.0);  // interior positivity
        // duality gap: pressure(v*) - <v*, w> - H <= 1e-8
        CHECK(std::abs(le.pressure_value - le.v_star[0] * w - le.H) <= 1e-8);
    }
}

TEST_CASE("localized entropy is concave") {
    auto sys = pair_potential_system();
    RotationPolytope P = rotation_set(sys.graph, sys.potential);
    std::mt19937_64 rng(5150);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    auto sample_interior = [&]() {
        // barycentric sample strictly inside the triangle (0,0),(0.5,0),(1,1)
        double a = 0.2 + 0.6 * u(rng), b = (1 - a) * (0.1 + 0.8 * u(rng)), c = 1 - a - b;
        Vec w(2);
        w[0] = b * 0.5 + c * 1.0;
        w[1] = c * 1.0;
        return w;
    };
    for (int i = 0; i < 8; ++i) {
        Vec w1 = sample_interior(), w2 = sample_interior();
        double h1 = localized_entropy(sys.graph, sys.potential, w1, P).H;
        double h2 = localized_entropy(sys.graph, sys.potential, w2, P).H;
        for (double t : {0.25, 0.5, 0.75}) {
            Vec mid(2);
            for (int k = 0; k < 2; ++k) mid[k] = t * w1[k] + (1 - t) * w2[k];
            double hm = localized_entropy(sys.graph, sys.potential, mid, P).H;
            CHECK(hm >= t * h1 + (1 - t) * h2 - 1e-6);
        }
    }
}

TEST_CASE("degenerate rotation sets minimize in the affine hull") {
    auto sys = diagonal_degenerate_system();
    RotationPolytope P = rotation_set(sys.graph, sys.potential);
    REQUIRE(P.affine_dim == 1);
    auto le = localized_entropy(sys.graph, sys.potential, {0.5, 0.5}, P);
    CHECK_FALSE(le.boundary);
    CHECK(le.H == Approx(std::log(2.0)).margin(1e-8));
    auto le2 = localized_entropy(sys.graph, sys.potential, {0.75, 0.75}, P);
    CHECK(le2.H == Approx(binary_entropy(0.75)).margin(1e-7));
}

TEST_CASE("singleton rotation set gives full entropy") {
    TransitionGraph g = golden_mean_shift();
    CylinderPotential c = constant_potential(g, {1.0});
    RotationPolytope P = rotation_set(g, c);
    auto le = localized_entropy(g, c, {1.0}, P);
    CHECK(le.H == Approx(topological_entropy(g)).margin(1e-10));
}

TEST_CASE("entropy of periodic combinations vanishes") {
    TransitionGraph g = full_shift(2);
    CylinderPotential phi = label_potential(g);
    auto orbits = enumerate_periodic_orbits(g, 3);
    RotationPolytope P = rotation_set(g, phi);
    std::vector<Vec> rvs;
    for (const auto& o : orbits) rvs.push_back(orbit_rotation_vector(g, phi, o));
    for (double w : {0.5, 1.0 / 3.0, 0.25}) {
        auto dec = caratheodory_decompose(P, rvs, {w});
        CHECK(entropy_of_combination(g, phi, orbits, dec) == Approx(0.0).margin(1e-12));
    }
}
