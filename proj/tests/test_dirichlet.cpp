#include "doctest.h"

#include <cmath>
#include <random>

#include "graphlap/dirichlet.hpp"

using namespace graphlap;

namespace {

// Path 0..n_last plus one guard vertex off each end, so that the region
// {0..n_last} has boundary {0, n_last}.
std::shared_ptr<const FiniteGraph> path_graph(VertexId n_last) {
    auto g = std::make_shared<FiniteGraph>();
    for (VertexId i = 0; i < n_last; ++i) g->add_edge(i, i + 1, 1.0);
    g->add_edge(0, 1000, 1.0);
    g->add_edge(n_last, 1001, 1.0);
    g->freeze();
    return g;
}

SchrodingerData with_potential(std::shared_ptr<const FiniteGraph> g,
                               std::function<double(VertexId)> w) {
    return SchrodingerData(
        g, [g](VertexId x, VertexId y) { return g->conductance(x, y); }, std::move(w));
}

FiniteRegion path_region(const FiniteGraph& g, VertexId n_last) {
    std::vector<VertexId> verts;
    for (VertexId i = 0; i <= n_last; ++i) verts.push_back(i);
    return FiniteRegion::from_vertices(g, verts);
}

}  // namespace

TEST_CASE("dirichlet hand cases") {
    auto g = path_graph(3);
    auto op = SchrodingerData::from_conductance(g);
    DirichletProblem p{op, path_region(*g, 3), {{0, 0.0}, {3, 3.0}}};
    auto sol = solve_dirichlet(p);
    CHECK(sol.values(1) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(sol.values(2) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(sol.residual <= 1e-10 * (1.0 + sol.values.max_abs()));

    auto g2 = path_graph(2);
    auto op2 = with_potential(g2, [](VertexId x) { return x == 1 ? 1.0 : 0.0; });
    auto sol2 = solve_dirichlet({op2, path_region(*g2, 2), {{0, 1.0}, {2, 1.0}}});
    CHECK(sol2.values(1) == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("zero boundary forces zero") {
    auto g = path_graph(5);
    auto op = SchrodingerData::from_conductance(g);
    auto sol = solve_dirichlet({op, path_region(*g, 5), {{0, 0.0}, {5, 0.0}}});
    for (VertexId x = 0; x <= 5; ++x) CHECK(std::abs(sol.values(x)) <= 1e-14);
}

TEST_CASE("dirichlet rejects malformed problems") {
    auto g = path_graph(3);
    auto op = SchrodingerData::from_conductance(g);
    auto region = path_region(*g, 3);
    CHECK_THROWS_AS(solve_dirichlet({op, region, {{0, 1.0}}}), DomainError);  // missing datum
    CHECK_THROWS_AS(solve_dirichlet({op, region, {{0, 1.0}, {3, 1.0}, {1, 1.0}}}), DomainError);
    auto vac = FiniteRegion::from_vertices(*g, {0, 3});
    CHECK_THROWS_AS(solve_dirichlet({op, vac, {{0, 1.0}, {3, 1.0}}}), DomainError);

    auto sour = with_potential(g, [](VertexId) { return -50.0; });  // form not positive definite
    CHECK_THROWS_AS(solve_dirichlet({sour, region, {{0, 1.0}, {3, 1.0}}}), PreconditionError);
}

TEST_CASE("linearity and uniqueness") {
    auto g = path_graph(8);
    auto op = with_potential(g, [](VertexId x) { return 0.1 * static_cast<double>(x % 3); });
    auto region = path_region(*g, 8);
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> val(-3.0, 3.0);
    for (int t = 0; t < 25; ++t) {
        std::map<VertexId, double> u{{0, val(rng)}, {8, val(rng)}};
        std::map<VertexId, double> w{{0, val(rng)}, {8, val(rng)}};
        std::map<VertexId, double> diff{{0, u[0] - w[0]}, {8, u[8] - w[8]}};
        auto fu = solve_dirichlet({op, region, u});
        auto fu2 = solve_dirichlet({op, region, u});
        auto fw = solve_dirichlet({op, region, w});
        auto fd = solve_dirichlet({op, region, diff});
        for (VertexId x = 0; x <= 8; ++x) {
            CHECK(fu.values(x) == doctest::Approx(fu2.values(x)).epsilon(1e-12));
            CHECK(fu.values(x) - fw.values(x) == doctest::Approx(fd.values(x)).epsilon(1e-10));
        }
    }
}

TEST_CASE("strict interior positivity") {
    std::mt19937_64 rng(29);
    std::uniform_real_distribution<double> val(0.0, 2.0);
    for (int t = 0; t < 30; ++t) {
        auto g = path_graph(10);
        auto op = with_potential(g, [](VertexId x) { return 0.05 * static_cast<double>(x + 1); });
        std::map<VertexId, double> u{{0, 0.0}, {10, 0.0}};
        u[t % 2 == 0 ? 0 : 10] = val(rng) + 0.1;  // u >= 0, not identically 0
        auto sol = solve_dirichlet({op, path_region(*g, 10), u});
        for (VertexId x = 1; x <= 9; ++x) CHECK(sol.values(x) > 0.0);
    }
}

TEST_CASE("minimum principle verdicts") {
    auto g = path_graph(4);
    auto op = with_potential(g, [](VertexId) { return 1.0; });
    auto region = path_region(*g, 4);

    FiniteSupportFn minus_one;
    for (VertexId x = 0; x <= 4; ++x) minus_one.set(x, -1.0);
    CHECK(minimum_principle_check(op, region, minus_one) == MinimumPrincipleVerdict::NotApplicable);

    FiniteSupportFn zero;
    for (VertexId x = 0; x <= 4; ++x) zero.set(x, 0.0);
    CHECK(minimum_principle_check(op, region, zero) == MinimumPrincipleVerdict::ApplicableAndConstant);

    // Solutions with positive boundary data never violate the lemma.
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> val(0.5, 2.0);
    for (int t = 0; t < 20; ++t) {
        auto sol = solve_dirichlet({op, region, {{0, val(rng)}, {4, val(rng)}}});
        CHECK(minimum_principle_check(op, region, sol.values) != MinimumPrincipleVerdict::Violation);
    }

    auto zero_w = SchrodingerData::from_conductance(g);
    CHECK_THROWS_AS(minimum_principle_check(zero_w, region, zero), PreconditionError);
}

TEST_CASE("harnack constant") {
    auto g = path_graph(4);
    auto region = path_region(*g, 4);
    auto op = SchrodingerData::from_conductance(g);
    auto cert = harnack_constant(op, region);
    CHECK(cert.alpha == 1.0);
    CHECK(cert.edge_sum == 4.0);
    CHECK(cert.max_w == 0.0);
    CHECK(cert.k0 == 4.0);

    auto ordered = harnack_constant(op, region, true);
    CHECK(ordered.edge_sum == 8.0);
    CHECK(ordered.k0 == 8.0);

    SchrodingerData scaled(g, [g](VertexId x, VertexId y) { return 7.5 * g->conductance(x, y); },
                           [](VertexId) { return 0.0; });
    CHECK(harnack_constant(scaled, region).k0 == doctest::Approx(4.0).epsilon(1e-14));

    auto with_w = with_potential(g, [](VertexId) { return 2.0; });
    CHECK(harnack_constant(with_w, region).k0 == 6.0);

    auto lonely = std::make_shared<FiniteGraph>();
    lonely->set_omega(1, 1.0);
    lonely->freeze();
    CHECK_THROWS_AS(
        harnack_constant(SchrodingerData::from_conductance(lonely),
                         FiniteRegion::from_vertices(*lonely, {1})),
        DomainError);
}

TEST_CASE("harnack verify hand case") {
    auto g = path_graph(4);
    auto op = SchrodingerData::from_conductance(g);
    auto region = path_region(*g, 4);
    FiniteSupportFn phi;
    for (VertexId x = 0; x <= 4; ++x) phi.set(x, static_cast<double>(x) + 1.0);
    auto v = harnack_verify(op, region, phi, 1, 3);
    CHECK(v.ratio == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(v.distance == 2);
    CHECK(v.bound == doctest::Approx(16.0).epsilon(1e-12));
    CHECK(v.holds);
    CHECK(v.bound_tight == doctest::Approx(4.0).epsilon(1e-12));

    auto same = harnack_verify(op, region, phi, 2, 2);
    CHECK(same.ratio == 1.0);
    CHECK(same.holds);

    CHECK_THROWS_AS(harnack_verify(op, region, phi, 0, 2), DomainError);  // boundary vertex
}

TEST_CASE("harnack bound across randomized solutions") {
    std::mt19937_64 rng(41);
    std::uniform_real_distribution<double> val(0.2, 3.0);
    auto g = path_graph(12);
    auto op = with_potential(g, [](VertexId x) { return 0.02 * static_cast<double>(x); });
    auto region = path_region(*g, 12);
    for (int t = 0; t < 15; ++t) {
        auto sol = solve_dirichlet({op, region, {{0, val(rng)}, {12, val(rng)}}});
        for (VertexId x = 1; x <= 11; ++x)
            for (VertexId y = x; y <= 11; ++y)
                CHECK(harnack_verify(op, region, sol.values, x, y).holds);
    }
}
