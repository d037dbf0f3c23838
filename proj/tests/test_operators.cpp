#include "doctest.h"

#include <cmath>
#include <random>

#include "graphlap/operators.hpp"

using namespace graphlap;

namespace {

std::shared_ptr<const WeightedGraph> power_graph(double alpha, double beta, double offset = 0.0) {
    FamilySpec spec;
    spec.kind = FamilySpec::Kind::HalfLinePower;
    spec.params = {{"alpha", alpha}, {"beta", beta}, {"conductance-offset", offset}};
    return build_family(spec);
}

FiniteSupportFn indicator(VertexId x) {
    FiniteSupportFn f;
    f.set(x, 1.0);
    return f;
}

FiniteSupportFn random_fn(std::mt19937_64& rng, VertexId lo, VertexId hi, int count) {
    std::uniform_int_distribution<VertexId> pick(lo, hi);
    std::uniform_real_distribution<double> val(-2.0, 2.0);
    FiniteSupportFn f;
    for (int i = 0; i < count; ++i) f.set(pick(rng), val(rng));
    return f;
}

}  // namespace

TEST_CASE("apply_laplacian hand values") {
    auto unit = power_graph(0, 0);
    CHECK(apply_laplacian(*unit, indicator(1), 1) == 1.0);

    FiniteSupportFn ones;
    for (VertexId n = 1; n <= 10; ++n) ones.set(n, 1.0);
    CHECK(apply_laplacian(*unit, ones, 5) == 0.0);

    auto omega2 = std::make_shared<HalfLineGraph>(
        1, [](VertexId) { return 2.0; }, [](VertexId) { return 1.0; });
    CHECK(apply_laplacian(*omega2, indicator(5), 5) == 0.5);

    CHECK_THROWS_AS(apply_laplacian(*unit, ones, 0), DomainError);
}

TEST_CASE("apply_schrodinger hand values") {
    auto unit = power_graph(0, 0);
    auto plain = SchrodingerData::from_conductance(unit);
    SchrodingerData shifted(unit, [](VertexId, VertexId) { return 1.0; },
                            [](VertexId x) { return x == 1 ? 1.0 : 0.0; });
    CHECK(apply_schrodinger(shifted, indicator(1), 1) == 2.0);

    std::mt19937_64 rng(7);
    for (int t = 0; t < 20; ++t) {
        auto f = random_fn(rng, 1, 20, 6);
        for (VertexId x = 1; x <= 20; ++x) {
            CHECK(apply_schrodinger(plain, f, x) == apply_laplacian(*unit, f, x));
            SchrodingerData minus(unit, [](VertexId, VertexId) { return 1.0; },
                                  [](VertexId) { return -1.0; });
            CHECK(apply_schrodinger(minus, f, x) ==
                  doctest::Approx(apply_schrodinger(plain, f, x) - f(x)).epsilon(1e-14));
        }
    }
}

TEST_CASE("quadratic form hand values") {
    auto unit = power_graph(0, 0);
    CHECK(quadratic_form(*unit, FiniteSupportFn{}) == 0.0);
    CHECK(quadratic_form(*unit, indicator(1)) == 1.0);
    FiniteSupportFn two;
    two.set(1, 1.0);
    two.set(2, 1.0);
    CHECK(quadratic_form(*unit, two) == 1.0);
}

TEST_CASE("inner products") {
    auto unit = power_graph(0, 0);
    auto recip = power_graph(1, 0);
    CHECK(inner_product_omega(*unit, indicator(1), indicator(1)) == 1.0);
    CHECK(inner_product_omega(*recip, indicator(3), indicator(3)) ==
          doctest::Approx(1.0 / 9.0).epsilon(1e-15));
    CHECK(inner_product_omega(*unit, indicator(1), indicator(4)) == 0.0);
    CHECK(inner_product_l2(indicator(2), indicator(2)) == 1.0);
}

TEST_CASE("gauge closed forms") {
    auto g = power_graph(1, -2, 1.0);  // omega = 1/n, c_{n,n+1} = (n+1)^2
    auto s = gauge_to_schrodinger(g);
    CHECK(s.w(5) == doctest::Approx(-55.0).epsilon(1e-12));
    CHECK(s.a(2, 3) == doctest::Approx(54.0).epsilon(1e-12));
    CHECK(s.a(3, 2) == s.a(2, 3));
    CHECK(s.w(1) == doctest::Approx(-4.0).epsilon(1e-12));  // endpoint has one neighbor

    auto unit = power_graph(0, 0);
    auto id = gauge_to_schrodinger(unit);
    CHECK(id.a(4, 5) == unit->conductance(4, 5));
    CHECK(id.w(7) == 0.0);
}

TEST_CASE("gauge conjugation identity pointwise") {
    std::mt19937_64 rng(11);
    for (auto g : {power_graph(1, -2, 1.0), power_graph(2, 0), power_graph(0.5, 1)}) {
        auto s = gauge_to_schrodinger(g);
        for (int t = 0; t < 20; ++t) {
            auto f = random_fn(rng, 1, 30, 8);
            auto wf = conjugate_u_omega(*g, f);
            for (VertexId x = 1; x <= 30; ++x) {
                const double lhs = apply_schrodinger(s, wf, x);
                const double rhs = g->omega(x) * apply_laplacian(*g, f, x);
                CHECK(lhs == doctest::Approx(rhs).epsilon(1e-10));
            }
        }
    }
}

TEST_CASE("conjugation round trip") {
    auto g = power_graph(1, 0);
    std::mt19937_64 rng(3);
    auto f = random_fn(rng, 1, 40, 10);
    auto back = conjugate_u_omega_inverse(*g, conjugate_u_omega(*g, f));
    for (const auto& [x, fx] : f.values())
        CHECK(back(x) == doctest::Approx(fx).epsilon(1e-15));

    auto scaled = conjugate_u_omega(*g, indicator(4));
    CHECK(scaled(4) == doctest::Approx(0.25).epsilon(1e-15));
}

TEST_CASE("green identity and symmetry") {
    std::mt19937_64 rng(23);
    auto g = power_graph(1, -1);
    for (int t = 0; t < 50; ++t) {
        auto f = random_fn(rng, 1, 25, 6);
        auto h = random_fn(rng, 1, 25, 6);
        FiniteSupportFn lf, lh;
        for (VertexId x = 1; x <= 27; ++x) {
            lf.set(x, apply_laplacian(*g, f, x));
            lh.set(x, apply_laplacian(*g, h, x));
        }
        const double q = quadratic_form(*g, f);
        CHECK(q >= 0.0);
        CHECK(inner_product_omega(*g, lf, f) == doctest::Approx(q).epsilon(1e-10));
        CHECK(inner_product_omega(*g, lf, h) ==
              doctest::Approx(inner_product_omega(*g, f, lh)).epsilon(1e-10));
    }
}

TEST_CASE("locality is bit-exact") {
    auto g = power_graph(1, 1);
    FiniteSupportFn f;
    f.set(5, 1.5);
    f.set(6, -0.25);
    const double base = apply_laplacian(*g, f, 5);
    f.set(9, 100.0);  // distance >= 2 from 5
    CHECK(apply_laplacian(*g, f, 5) == base);
}

TEST_CASE("form lower bound certificates") {
    auto unit = power_graph(0, 0);
    auto plain = SchrodingerData::from_conductance(unit);

    auto region = FiniteRegion::from_vertices(*unit, {1, 2, 3});
    auto kb = form_lower_bound(plain, region);
    // Smallest eigenvalue of [[1,-1,0],[-1,2,-1],[0,-1,2]].
    CHECK(kb.k == doctest::Approx(0.19806226419516171).epsilon(1e-12));

    auto single = FiniteRegion::from_vertices(*unit, {5});
    CHECK(form_lower_bound(plain, single).k == doctest::Approx(2.0).epsilon(1e-12));

    SchrodingerData nonneg(unit, [](VertexId, VertexId) { return 1.0; },
                           [](VertexId x) { return 0.5 + 1.0 / static_cast<double>(x); });
    CHECK(form_lower_bound(nonneg, region).k >= 0.0);

    CHECK_THROWS_AS(form_lower_bound(plain, combinatorial_ball(*unit, 1, 50), 10), CapacityError);
    CHECK_THROWS_AS(form_lower_bound(plain, FiniteRegion{}), DomainError);
}
