#include "graphlap/harmonic.hpp"

#include <algorithm>
#include <cmath>

namespace graphlap {

HarmonicProfile build_harmonic(const SchrodingerData& s, VertexId x0, int n_max, int window,
                               double tol) {
    const WeightedGraph& g = s.graph();
    if (!g.contains(x0)) throw DomainError("build_harmonic: anchor not in graph");
    if (window < 1) throw DomainError("build_harmonic: window must be >= 1");

    HarmonicProfile profile;
    profile.anchor = x0;
    profile.window = combinatorial_ball(g, x0, window);

    std::map<VertexId, double> prev;
    int stable_steps = 0;
    for (int n = window + 1; n <= n_max; ++n) {
        FiniteRegion ball = combinatorial_ball(g, x0, n);
        {
            FiniteRegion inner = FiniteRegion::from_vertices(g, ball.interior());
            FormBound bound = form_lower_bound(s, inner);
            if (!(bound.k > 0.0))
                throw PreconditionError("build_harmonic: form is not positive definite on ball of radius " +
                                        std::to_string(n));
        }
        std::map<VertexId, double> boundary_one;
        for (VertexId b : ball.boundary()) boundary_one[b] = 1.0;
        DirichletSolution psi = solve_dirichlet({s, ball, boundary_one});
        const double at_anchor = psi.values(x0);
        if (!(at_anchor > 0.0))
            throw InternalInconsistencyError("build_harmonic: psi_n(x0) <= 0 at radius " + std::to_string(n));

        std::map<VertexId, double> phi_n;
        for (VertexId v : profile.window.vertices()) phi_n[v] = psi.values(v) / at_anchor;
        profile.history.push_back({n, phi_n});
        if (n % 2 == 0)
            profile.even_candidate = phi_n;
        else
            profile.odd_candidate = phi_n;

        if (!prev.empty()) {
            double sup_diff = 0.0;
            for (const auto& [v, val] : phi_n) sup_diff = std::max(sup_diff, std::abs(val - prev[v]));
            stable_steps = sup_diff <= tol ? stable_steps + 1 : 0;
        }
        prev = std::move(phi_n);
        if (stable_steps >= 3) {
            profile.converged = true;
            break;
        }
    }

    profile.values = prev;
    if (!profile.values.empty()) {
        FiniteSupportFn f{profile.values};
        for (VertexId v : profile.window.interior())
            profile.residual = std::max(profile.residual, std::abs(apply_schrodinger(s, f, v)));
    }
    if (profile.converged) {
        profile.even_candidate.clear();
        profile.odd_candidate.clear();
    }
    return profile;
}

UnitarizedLaplacian unitarize(const SchrodingerData& s, const HarmonicProfile& phi) {
    const WeightedGraph& g = s.graph();
    if (phi.values.empty()) throw DomainError("unitarize: empty profile");
    for (const auto& [v, val] : phi.values)
        if (!(val > 0.0)) throw DomainError("unitarize: profile must be strictly positive");

    auto window_graph = std::make_shared<FiniteGraph>();
    for (const auto& [x, px] : phi.values) {
        window_graph->set_omega(x, px);
        for (VertexId y : g.neighbors(x)) {
            if (y < x || !phi.values.count(y)) continue;
            window_graph->add_edge(x, y, s.a(x, y) * px * phi.values.at(y));
        }
    }
    window_graph->freeze();
    return {window_graph};
}

FormPair unitarize_form_pair(const SchrodingerData& s, const HarmonicProfile& phi,
                             const UnitarizedLaplacian& lap, const FiniteSupportFn& g0) {
    const WeightedGraph& g = s.graph();
    // The support and two rings of neighbors must stay inside the window;
    // beyond that the window edges would truncate the forms differently.
    for (const auto& [x, _] : g0.values()) {
        for (VertexId y : g.neighbors(x)) {
            if (!phi.values.count(y))
                throw DomainError("unitarize_form_pair: support too close to the window edge");
            for (VertexId z : g.neighbors(y))
                if (!phi.values.count(z))
                    throw DomainError("unitarize_form_pair: support too close to the window edge");
        }
    }

    double lhs = 0.0;
    for (const auto& [x, gx] : g0.values()) lhs += gx * apply_schrodinger(s, g0, x);

    FiniteSupportFn f;
    for (const auto& [x, gx] : g0.values()) f.set(x, gx / phi.values.at(x));
    double rhs = 0.0;
    const WeightedGraph& wg = *lap.graph;
    for (const auto& [x, fx] : f.values()) {
        const double wx = wg.omega(x);
        rhs += wx * wx * fx * apply_laplacian(wg, f, x);
    }
    return {lhs, rhs};
}

}  // namespace graphlap
