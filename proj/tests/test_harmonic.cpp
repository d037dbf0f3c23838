#include "doctest.h"

#include <cmath>
#include <random>

#include "graphlap/harmonic.hpp"

using namespace graphlap;

namespace {

std::shared_ptr<const WeightedGraph> power_graph(double alpha, double beta, double offset = 0.0) {
    FamilySpec spec;
    spec.kind = FamilySpec::Kind::HalfLinePower;
    spec.params = {{"alpha", alpha}, {"beta", beta}, {"conductance-offset", offset}};
    return build_family(spec);
}

}  // namespace

TEST_CASE("constant profile on the plain half-line") {
    auto g = power_graph(0, 0);
    auto op = SchrodingerData::from_conductance(g);
    auto phi = build_harmonic(op, 1, 40, 8);
    CHECK(phi.converged);
    CHECK(phi.values.at(1) == 1.0);
    for (const auto& [x, val] : phi.values) CHECK(val == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(phi.residual <= 1e-8 * 2.0);
}

TEST_CASE("gauge family profile converges") {
    auto g = power_graph(1, -2, 1.0);
    auto op = gauge_to_schrodinger(g);
    auto phi = build_harmonic(op, 1, 200, 30, 1e-8);
    CHECK(phi.converged);
    CHECK(phi.values.at(1) == 1.0);
    for (const auto& [x, val] : phi.values) CHECK(val > 0.0);
    CHECK(phi.residual <= 1e-7 * (1.0 + [&] {
              double m = 0.0;
              for (const auto& [x, val] : phi.values) m = std::max(m, std::abs(val));
              return m;
          }()));
}

TEST_CASE("history is stable under a larger horizon") {
    auto g = power_graph(1, -2, 1.0);
    auto op = gauge_to_schrodinger(g);
    auto small = build_harmonic(op, 1, 40, 10);
    auto large = build_harmonic(op, 1, 60, 10);
    REQUIRE(small.history.size() <= large.history.size());
    for (std::size_t i = 0; i < small.history.size(); ++i) {
        CHECK(small.history[i].n == large.history[i].n);
        for (const auto& [x, val] : small.history[i].phi)
            CHECK(large.history[i].phi.at(x) == val);
    }
}

TEST_CASE("insufficient iterations flag unconverged") {
    auto g = power_graph(0, 0);
    auto op = SchrodingerData::from_conductance(g);
    auto phi = build_harmonic(op, 1, 11, 10);
    CHECK_FALSE(phi.converged);
    CHECK(phi.history.size() <= 2);
}

TEST_CASE("build_harmonic rejects bad inputs") {
    auto g = power_graph(0, 0);
    auto op = SchrodingerData::from_conductance(g);
    CHECK_THROWS_AS(build_harmonic(op, 0, 40, 8), DomainError);
    CHECK_THROWS_AS(build_harmonic(op, 1, 40, 0), DomainError);

    SchrodingerData sour(g, [](VertexId, VertexId) { return 1.0; },
                         [](VertexId) { return -40.0; });
    CHECK_THROWS_AS(build_harmonic(sour, 1, 40, 8), PreconditionError);
}

TEST_CASE("unitarize identity gauge") {
    auto g = power_graph(0, 0);
    auto op = SchrodingerData::from_conductance(g);
    auto phi = build_harmonic(op, 1, 40, 8);
    auto lap = unitarize(op, phi);
    CHECK(lap.graph->omega(3) == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(lap.graph->conductance(3, 4) == doctest::Approx(1.0).epsilon(1e-10));
    auto back = gauge_to_schrodinger(lap.graph);
    CHECK(back.w(3) == doctest::Approx(0.0).epsilon(1e-10));
}

TEST_CASE("unitarize product formula") {
    auto g = power_graph(0, 0);
    auto op = SchrodingerData::from_conductance(g);
    HarmonicProfile phi;
    phi.anchor = 1;
    phi.window = combinatorial_ball(*g, 1, 10);
    for (VertexId x = 1; x <= 11; ++x) phi.values[x] = static_cast<double>(x);
    phi.converged = true;
    auto lap = unitarize(op, phi);
    CHECK(lap.graph->conductance(4, 5) == doctest::Approx(20.0).epsilon(1e-12));
    CHECK(lap.graph->omega(4) == 4.0);
}

TEST_CASE("round trip recovers the operator on the interior") {
    auto g = power_graph(1, -2, 1.0);
    auto op = gauge_to_schrodinger(g);
    auto phi = build_harmonic(op, 1, 200, 30, 1e-8);
    REQUIRE(phi.converged);
    auto lap = unitarize(op, phi);
    auto back = gauge_to_schrodinger(lap.graph);
    // Interior of the window, one vertex of margin for the potential's sum.
    for (VertexId x = 2; x <= 29; ++x) {
        CHECK(back.a(x, x + 1) == doctest::Approx(op.a(x, x + 1)).epsilon(1e-9));
        CHECK(back.w(x) == doctest::Approx(op.w(x)).epsilon(1e-9));
    }
}

TEST_CASE("form equality over random test functions") {
    auto g = power_graph(1, -2, 1.0);
    auto op = gauge_to_schrodinger(g);
    auto phi = build_harmonic(op, 1, 200, 30, 1e-8);
    REQUIRE(phi.converged);
    auto lap = unitarize(op, phi);
    std::mt19937_64 rng(97);
    std::uniform_int_distribution<VertexId> pick(5, 25);
    std::uniform_real_distribution<double> val(-1.0, 1.0);
    for (int t = 0; t < 40; ++t) {
        FiniteSupportFn gfn;
        for (int i = 0; i < 5; ++i) gfn.set(pick(rng), val(rng));
        auto pair = unitarize_form_pair(op, phi, lap, gfn);
        const double scale = std::max({1.0, std::abs(pair.schrodinger_side)});
        CHECK(std::abs(pair.schrodinger_side - pair.laplacian_side) <= 1e-8 * scale);
    }

    FiniteSupportFn edge_hugger;
    edge_hugger.set(30, 1.0);
    CHECK_THROWS_AS(unitarize_form_pair(op, phi, lap, edge_hugger), DomainError);
}
