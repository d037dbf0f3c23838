#include "graphlap/operators.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <set>

namespace graphlap {

SchrodingerData SchrodingerData::from_conductance(std::shared_ptr<const WeightedGraph> g) {
    auto graph = g;
    return SchrodingerData(
        g, [graph](VertexId x, VertexId y) { return graph->conductance(x, y); },
        [](VertexId) { return 0.0; });
}

double apply_laplacian(const WeightedGraph& g, const FiniteSupportFn& f, VertexId x) {
    if (!g.contains(x)) throw DomainError("unknown vertex " + std::to_string(x));
    double sum = 0.0;
    const double fx = f(x);
    for (VertexId y : g.neighbors(x)) sum += g.conductance(x, y) * (fx - f(y));
    const double wx = g.omega(x);
    return sum / (wx * wx);
}

double apply_schrodinger(const SchrodingerData& s, const FiniteSupportFn& f, VertexId x) {
    const WeightedGraph& g = s.graph();
    if (!g.contains(x)) throw DomainError("unknown vertex " + std::to_string(x));
    double sum = 0.0;
    const double fx = f(x);
    for (VertexId y : g.neighbors(x)) sum += s.a(x, y) * (fx - f(y));
    return sum + s.w(x) * fx;
}

double quadratic_form(const WeightedGraph& g, const FiniteSupportFn& f) {
    // Each unordered edge incident to the support is summed once, in
    // ascending order of the support vertex then neighbor id.
    double sum = 0.0;
    for (const auto& [x, fx] : f.values()) {
        for (VertexId y : g.neighbors(x)) {
            if (f.in_support(y) && y < x) continue;  // counted from the other endpoint
            const double d = fx - f(y);
            sum += g.conductance(x, y) * d * d;
        }
    }
    return sum;
}

double inner_product_omega(const WeightedGraph& g, const FiniteSupportFn& f, const FiniteSupportFn& h) {
    double sum = 0.0;
    for (const auto& [x, fx] : f.values()) {
        if (!h.in_support(x)) continue;
        const double wx = g.omega(x);
        sum += wx * wx * fx * h(x);
    }
    return sum;
}

double inner_product_l2(const FiniteSupportFn& f, const FiniteSupportFn& h) {
    double sum = 0.0;
    for (const auto& [x, fx] : f.values())
        if (h.in_support(x)) sum += fx * h(x);
    return sum;
}

SchrodingerData gauge_to_schrodinger(std::shared_ptr<const WeightedGraph> g) {
    auto graph = g;
    auto edge_coeff = [graph](VertexId x, VertexId y) {
        return graph->conductance(x, y) / (graph->omega(x) * graph->omega(y));
    };
    auto potential = [graph](VertexId x) {
        // W = -(1/omega) Delta_{1,a} omega, by the exact neighbor sum. With
        // f = 1/omega each summand -a_{x,y}(omega_x - omega_y)/omega_x equals
        // c_{x,y} f(x)(f(x) - f(y)); evaluating that form in extended
        // precision tames the cancellation between the neighbor terms, which
        // grows like the edge coefficients themselves.
        const long double fx = 1.0L / graph->omega_hp(x);
        long double sum = 0.0L;
        for (VertexId y : graph->neighbors(x)) {
            const long double fy = 1.0L / graph->omega_hp(y);
            sum += static_cast<long double>(graph->conductance(x, y)) * fx * (fx - fy);
        }
        return static_cast<double>(sum);
    };
    return SchrodingerData(std::move(g), std::move(edge_coeff), std::move(potential));
}

FiniteSupportFn conjugate_u_omega(const WeightedGraph& g, const FiniteSupportFn& f) {
    FiniteSupportFn out;
    for (const auto& [x, fx] : f.values()) out.set(x, g.omega(x) * fx);
    return out;
}

FiniteSupportFn conjugate_u_omega_inverse(const WeightedGraph& g, const FiniteSupportFn& f) {
    FiniteSupportFn out;
    for (const auto& [x, fx] : f.values()) out.set(x, fx / g.omega(x));
    return out;
}

FormBound form_lower_bound(const SchrodingerData& s, const FiniteRegion& region, std::size_t cap) {
    const auto& verts = region.vertices();
    if (verts.empty()) throw DomainError("form_lower_bound: empty region");
    if (verts.size() > cap)
        throw CapacityError("form_lower_bound: region size " + std::to_string(verts.size()) +
                            " exceeds dense-solver cap " + std::to_string(cap));
    const auto n = static_cast<Eigen::Index>(verts.size());
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
    const WeightedGraph& g = s.graph();
    for (Eigen::Index i = 0; i < n; ++i) {
        const VertexId x = verts[static_cast<std::size_t>(i)];
        double diag = s.w(x);
        for (VertexId y : g.neighbors(x)) {
            const double a = s.a(x, y);
            diag += a;  // edges leaving the region still contribute here
            auto it = std::lower_bound(verts.begin(), verts.end(), y);
            if (it != verts.end() && *it == y) {
                auto j = static_cast<Eigen::Index>(it - verts.begin());
                m(i, j) -= a;
            }
        }
        m(i, i) += diag;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw InternalInconsistencyError("form_lower_bound: eigensolve failed");
    FormBound bound;
    bound.k = solver.eigenvalues()(0);
    bound.region = region;
    return bound;
}

FormBound form_lower_bound(std::shared_ptr<const WeightedGraph> g, const FiniteRegion& region,
                           std::size_t cap) {
    // The form of Delta_{omega,c} per unit l2_omega norm equals the gauged
    // Schroedinger form per unit l2 norm.
    return form_lower_bound(gauge_to_schrodinger(std::move(g)), region, cap);
}

}  // namespace graphlap
