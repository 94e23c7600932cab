#include <catch2/catch_amalgamated.hpp>

#include "test_support.hpp"

using namespace rotspec;
using Catch::Approx;

namespace {

const char* kFull2 =
    "[meta]\n"
    "name=full-2-shift\n"
    "alphabet=2\n"
    "[vertices]\n"
    "q0\n"
    "[edges]\n"
    "q0 -> q0 label=0 phi=0\n"
    "q0 -> q0 label=1 phi=1\n";

const char* kGolden =
    "[meta]\n"
    "name=golden-mean\n"
    "alphabet=2\n"
    "[vertices]\n"
    "a\n"
    "b\n"
    "[edges]\n"
    "a -> a label=0 phi=0\n"
    "a -> b label=1 phi=1\n"
    "b -> a label=0 phi=0\n";

}  // namespace

TEST_CASE("parsing the reference documents") {
    ParsedSystem full2 = parse_system(kFull2);
    CHECK(full2.graph.vertex_count() == 1);
    CHECK(full2.graph.edge_count() == 2);
    CHECK(full2.potential.dimension() == 1);
    CHECK(full2.name == "full-2-shift");

    ParsedSystem gm = parse_system(kGolden);
    CHECK(gm.graph.vertex_count() == 2);
    CHECK(gm.graph.edge_count() == 3);
    CHECK(topological_entropy(gm.graph) == Approx(0.481211825).margin(1e-8));
}

TEST_CASE("parse errors") {
    SECTION("dangling vertex") {
        const char* doc =
            "[vertices]\nq0\nq1\n[edges]\nq0 -> q2 phi=0\n";
        try {
            parse_system(doc);
            FAIL("expected parse error");
        } catch (const std::invalid_argument& e) {
            CHECK(std::string(e.what()).find("dangling vertex") != std::string::npos);
        }
    }
    SECTION("potential length mismatch") {
        const char* doc =
            "[vertices]\nq0\n[edges]\nq0 -> q0 phi=0,1\nq0 -> q0 phi=0\n";
        CHECK_THROWS_AS(parse_system(doc), std::invalid_argument);
    }
    SECTION("malformed edge line") {
        CHECK_THROWS_AS(parse_system("[vertices]\nq0\n[edges]\nq0 q0\n"), std::invalid_argument);
    }
    SECTION("unknown section") {
        CHECK_THROWS_AS(parse_system("[stuff]\nx\n"), std::invalid_argument);
    }
    SECTION("no vertices") {
        CHECK_THROWS_AS(parse_system("[edges]\n"), std::invalid_argument);
    }
}

TEST_CASE("emit/parse round-trip is bit-identical") {
    for (const char* doc : {kFull2, kGolden}) {
        ParsedSystem sys = parse_system(doc);
        std::string emitted = emit_system(sys.graph, sys.potential, sys.name);
        ParsedSystem again = parse_system(emitted);
        CHECK(emit_system(again.graph, again.potential, again.name) == emitted);
        CHECK(again.graph.vertex_count() == sys.graph.vertex_count());
        CHECK(again.graph.edge_count() == sys.graph.edge_count());
        for (int e = 0; e < sys.graph.edge_count(); ++e) {
            CHECK(again.graph.edge(e).source == sys.graph.edge(e).source);
            CHECK(again.graph.edge(e).target == sys.graph.edge(e).target);
            CHECK(again.graph.edge(e).label == sys.graph.edge(e).label);
            CHECK(again.potential.value(e) == sys.potential.value(e));
        }
    }
}

TEST_CASE("round-trip preserves 17-digit potentials") {
    TransitionGraph g = full_shift(2);
    CylinderPotential phi(1, {{0.1234567890123456789}, {1.0 / 3.0}});
    std::string emitted = emit_system(g, phi, "t");
    ParsedSystem again = parse_system(emitted);
    CHECK(again.potential.value(0)[0] == phi.value(0)[0]);
    CHECK(again.potential.value(1)[0] == phi.value(1)[0]);
}
