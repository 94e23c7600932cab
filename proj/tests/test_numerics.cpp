#include <catch2/catch_amalgamated.hpp>

#include "test_support.hpp"

using namespace rotspec;
using Catch::Approx;

TEST_CASE("simplex solves small reference problems") {
    SECTION("bounded minimum") {
        // min -x - y  s.t.  x + y + s1 = 4, x + 3y + s2 = 6
        LinearProgram lp;
        lp.rows = 2;
        lp.cols = 4;
        lp.A = {1, 1, 1, 0, 1, 3, 0, 1};
        lp.b = {4, 6};
        lp.c = {-1, -1, 0, 0};
        LpResult res = solve_lp(lp);
        REQUIRE(res.status == LpStatus::optimal);
        CHECK(res.objective == Approx(-4.0).margin(1e-9));
    }
    SECTION("infeasible") {
        // x = 1 and x = 2
        LinearProgram lp;
        lp.rows = 2;
        lp.cols = 1;
        lp.A = {1, 1};
        lp.b = {1, 2};
        lp.c = {0};
        CHECK(solve_lp(lp).status == LpStatus::infeasible);
    }
    SECTION("unbounded") {
        // min -x s.t. x - y = 0
        LinearProgram lp;
        lp.rows = 1;
        lp.cols = 2;
        lp.A = {1, -1};
        lp.b = {0};
        lp.c = {-1, 0};
        CHECK(solve_lp(lp).status == LpStatus::unbounded);
    }
    SECTION("redundant rows tolerated") {
        LinearProgram lp;
        lp.rows = 2;
        lp.cols = 2;
        lp.A = {1, 1, 2, 2};
        lp.b = {1, 2};
        lp.c = {1, 0};
        LpResult res = solve_lp(lp);
        REQUIRE(res.status == LpStatus::optimal);
        CHECK(res.objective == Approx(0.0).margin(1e-9));
    }
}

TEST_CASE("affine frames") {
    SECTION("full rank square") {
        AffineFrame f = affine_frame({{0, 0}, {1, 0}, {0, 1}, {1, 1}});
        CHECK(f.dim == 2);
    }
    SECTION("collinear points") {
        AffineFrame f = affine_frame({{0, 0}, {0.5, 0.5}, {1, 1}});
        CHECK(f.dim == 1);
        CHECK(std::abs(f.basis[0][0] - f.basis[0][1]) < 1e-12);
        CHECK(f.offset_distance({2.0, 2.0}) < 1e-12);
        CHECK(f.offset_distance({0.0, 1.0}) == Approx(std::sqrt(0.5)).margin(1e-12));
    }
    SECTION("single point") {
        AffineFrame f = affine_frame({{3, 4, 5}});
        CHECK(f.dim == 0);
    }
}

TEST_CASE("hull facets in two dimensions") {
    std::vector<Vec> square = {{0, 0}, {1, 0}, {1, 1}, {0, 1}};
    auto facets = hull_facets(square, 2);
    CHECK(facets.size() == 4);
    for (const auto& f : facets) {
        for (const Vec& p : square) CHECK(dot(f.normal, p) <= f.offset + 1e-12);
        bool active = false;
        for (const Vec& p : square)
            if (std::abs(dot(f.normal, p) - f.offset) < 1e-12) active = true;
        CHECK(active);
    }
}

TEST_CASE("hull facets in three dimensions") {
    std::vector<Vec> cube;
    for (int i = 0; i < 8; ++i)
        cube.push_back({double(i & 1), double((i >> 1) & 1), double((i >> 2) & 1)});
    auto facets = hull_facets(cube, 3);
    CHECK(facets.size() == 6);
    for (const auto& f : facets)
        for (const Vec& p : cube) CHECK(dot(f.normal, p) <= f.offset + 1e-12);

    // a simplex with an interior point: the interior point supports no facet
    std::vector<Vec> tetra = {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {0.2, 0.2, 0.2}};
    auto tf = hull_facets(tetra, 3);
    CHECK(tf.size() == 4);
}

TEST_CASE("make_polytope recovers vertices from crowded clouds") {
    std::mt19937_64 rng(2222);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    // triangle plus many interior samples
    std::vector<Vec> pts = {{0, 0}, {1, 0}, {0, 1}};
    for (int i = 0; i < 400; ++i) {
        double a = u(rng), b = u(rng) * (1 - a);
        pts.push_back({a * 1.0 + 1e-3, b * 1.0});
        pts.back()[0] = std::min(pts.back()[0], 1 - pts.back()[1]);
    }
    RotationPolytope P = make_polytope(pts);
    CHECK(P.affine_dim == 2);
    CHECK(P.vertices.size() == 3);
    CHECK(classify_point(P, {0.2, 0.2}) == PointClass::interior);
    CHECK(classify_point(P, {0.0, 0.0}) == PointClass::boundary);
    CHECK(classify_point(P, {0.7, 0.7}) == PointClass::exterior);
}

TEST_CASE("power iteration matches known spectra") {
    SECTION("golden mean adjacency") {
        TransitionGraph g = golden_mean_shift();
        std::vector<double> w(g.edge_count(), 1.0);
        PerronResult r = perron_right(g, w);
        CHECK(r.lambda == Approx((1 + std::sqrt(5.0)) / 2).margin(1e-11));
        // right eigenvector proportional to (phi, 1)
        CHECK(r.vec[0] / r.vec[1] == Approx((1 + std::sqrt(5.0)) / 2).margin(1e-9));
        PerronResult l = perron_left(g, w);
        CHECK(l.lambda == Approx(r.lambda).margin(1e-11));
    }
    SECTION("periodic graph handled by the identity shift") {
        TransitionGraph c2(2, {{0, 1, -1}, {1, 0, -1}});
        std::vector<double> w(2, 1.0);
        PerronResult r = perron_right(c2, w);
        CHECK(r.lambda == Approx(1.0).margin(1e-10));
    }
}
