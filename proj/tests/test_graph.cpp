#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "graphlap/graph.hpp"

using namespace graphlap;

namespace {

std::shared_ptr<const WeightedGraph> half_line_unit() {
    FamilySpec spec;
    spec.kind = FamilySpec::Kind::HalfLinePower;
    spec.params = {{"alpha", 0.0}, {"beta", 0.0}};
    return build_family(spec);
}

}  // namespace

TEST_CASE("half-line neighbors") {
    auto g = half_line_unit();
    CHECK(g->neighbors(1) == std::vector<VertexId>{2});
    CHECK(g->neighbors(5) == std::vector<VertexId>{4, 6});
    CHECK_THROWS_AS(g->neighbors(0), DomainError);
}

TEST_CASE("finite triangle neighbors") {
    FiniteGraph g;
    g.add_edge(1, 2, 1.0);
    g.add_edge(2, 3, 1.0);
    g.add_edge(1, 3, 1.0);
    g.freeze();
    CHECK(g.neighbors(2) == std::vector<VertexId>{1, 3});
    CHECK(g.conductance(3, 1) == g.conductance(1, 3));
}

TEST_CASE("finite graph rejects bad construction") {
    FiniteGraph g;
    CHECK_THROWS_AS(g.add_edge(1, 1, 1.0), DomainError);
    CHECK_THROWS_AS(g.add_edge(1, 2, 0.0), DomainError);
    CHECK_THROWS_AS(g.set_omega(1, -2.0), DomainError);
    g.add_edge(1, 2, 1.0);
    CHECK_THROWS_AS(g.add_edge(2, 1, 3.0), DomainError);  // duplicate edge
}

TEST_CASE("valence bounds") {
    auto g = half_line_unit();
    CHECK(valence_bound(*g, combinatorial_ball(*g, 1, 5)) == 2);

    BinaryTreeGraph tree;
    CHECK(valence_bound(tree, combinatorial_ball(tree, 1, 2)) == 3);

    FiniteGraph isolated;
    isolated.set_omega(7, 1.0);
    isolated.freeze();
    auto region = FiniteRegion::from_vertices(isolated, {7});
    CHECK(valence_bound(isolated, region) == 0);
}

TEST_CASE("combinatorial balls") {
    auto g = half_line_unit();

    auto b0 = combinatorial_ball(*g, 1, 0);
    CHECK(b0.vertices() == std::vector<VertexId>{1});
    CHECK(b0.interior().empty());
    CHECK(b0.boundary() == std::vector<VertexId>{1});

    auto b3 = combinatorial_ball(*g, 1, 3);
    CHECK(b3.vertices() == std::vector<VertexId>{1, 2, 3, 4});
    CHECK(b3.interior() == std::vector<VertexId>{1, 2, 3});
    CHECK(b3.boundary() == std::vector<VertexId>{4});

    auto b1 = combinatorial_ball(*g, 5, 1);
    CHECK(b1.vertices() == std::vector<VertexId>{4, 5, 6});
    CHECK(b1.interior() == std::vector<VertexId>{5});
    CHECK(b1.boundary() == std::vector<VertexId>{4, 6});
}

TEST_CASE("ball nesting and interior exhaustion") {
    auto g = half_line_unit();
    for (int n = 1; n <= 6; ++n) {
        auto inner = combinatorial_ball(*g, 3, n - 1);
        auto outer = combinatorial_ball(*g, 3, n);
        for (VertexId x : inner.vertices()) {
            CHECK(outer.contains(x));
            CHECK(outer.is_interior(x));
        }
    }
}

TEST_CASE("interior connectivity") {
    auto g = half_line_unit();
    CHECK(is_connected_interior(*g, combinatorial_ball(*g, 1, 3)).connected);

    auto vacuous = FiniteRegion::from_vertices(*g, {2, 4, 10, 12});
    CHECK(vacuous.interior().empty());
    auto conn = is_connected_interior(*g, vacuous);
    CHECK(conn.connected);
    CHECK(conn.vacuous);

    auto split = FiniteRegion::from_vertices(*g, {4, 5, 6, 49, 50, 51});
    auto conn2 = is_connected_interior(*g, split);
    CHECK_FALSE(conn2.connected);
    CHECK_FALSE(conn2.vacuous);
}

TEST_CASE("power family closed forms") {
    FamilySpec spec;
    spec.kind = FamilySpec::Kind::HalfLinePower;
    spec.params = {{"alpha", 1.0}, {"beta", 0.0}, {"start", 1.0}};
    auto g = build_family(spec);
    CHECK(g->omega(5) == doctest::Approx(0.2).epsilon(1e-15));
    CHECK(g->conductance(5, 6) == 1.0);
    CHECK(g->ray_start() == VertexId{1});
    CHECK(g->valence_hint() == 2);
}

TEST_CASE("log family closed forms") {
    FamilySpec spec;
    spec.kind = FamilySpec::Kind::HalfLineLog;
    auto g = build_family(spec);
    CHECK(g->omega(2) == doctest::Approx(1.0 / (2.0 * std::log(2.0))).epsilon(1e-15));
    CHECK(g->conductance(3, 4) == 1.0);

    FamilySpec bad = spec;
    bad.params["start"] = 1.0;
    CHECK_THROWS_AS(build_family(bad), DomainError);
}

TEST_CASE("epsilon shorthand sets the conductance exponent") {
    FamilySpec spec;
    spec.kind = FamilySpec::Kind::HalfLinePower;
    spec.params = {{"alpha", 0.0}, {"epsilon", 1.0}};
    CHECK(power_family_beta(spec) == -3.0);
    auto g = build_family(spec);
    CHECK(g->conductance(2, 3) == doctest::Approx(8.0).epsilon(1e-15));  // n^(2+eps)

    spec.params["beta"] = 0.0;  // explicit beta wins
    CHECK(power_family_beta(spec) == 0.0);
}

TEST_CASE("family symmetry and purity on sampled edges") {
    FamilySpec spec;
    spec.kind = FamilySpec::Kind::HalfLinePower;
    spec.params = {{"alpha", 2.0}, {"beta", -1.0}};
    auto g1 = build_family(spec);
    auto g2 = build_family(spec);
    for (VertexId n = 1; n <= 50; ++n) {
        CHECK(g1->conductance(n, n + 1) == g1->conductance(n + 1, n));
        CHECK(g1->omega(n) == g2->omega(n));
        CHECK(g1->conductance(n, n + 1) == g2->conductance(n, n + 1));
        for (VertexId y : g1->neighbors(n)) {
            auto back = g1->neighbors(y);
            CHECK(std::find(back.begin(), back.end(), n) != back.end());
        }
    }
}
