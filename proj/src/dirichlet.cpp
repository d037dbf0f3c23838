#include "graphlap/dirichlet.hpp"

#include <Eigen/Dense>
#include <Eigen/IterativeLinearSolvers>
#include <Eigen/Sparse>
#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>

namespace graphlap {

namespace {

constexpr std::size_t kDenseCap = 500;

Eigen::Index index_of(const std::vector<VertexId>& sorted, VertexId v) {
    auto it = std::lower_bound(sorted.begin(), sorted.end(), v);
    return static_cast<Eigen::Index>(it - sorted.begin());
}

}  // namespace

DirichletSolution solve_dirichlet(const DirichletProblem& p) {
    const WeightedGraph& g = p.op.graph();
    const auto& interior = p.region.interior();
    const auto& boundary = p.region.boundary();

    auto conn = is_connected_interior(g, p.region);
    if (conn.vacuous) throw DomainError("solve_dirichlet: region has empty interior");
    if (!conn.connected) throw DomainError("solve_dirichlet: interior is not connected");
    if (p.boundary.size() != boundary.size())
        throw DomainError("solve_dirichlet: boundary data must cover exactly the boundary");
    for (VertexId b : boundary)
        if (!p.boundary.count(b))
            throw DomainError("solve_dirichlet: missing boundary value at " + std::to_string(b));

    FiniteRegion interior_region = FiniteRegion::from_vertices(g, interior);
    FormBound bound = form_lower_bound(p.op, interior_region);
    if (!(bound.k > 0.0))
        throw PreconditionError("solve_dirichlet: quadratic form is not positive definite on the interior (k = " +
                                std::to_string(bound.k) + ")");

    const auto n = static_cast<Eigen::Index>(interior.size());
    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(n);
    std::vector<Eigen::Triplet<double>> triplets;
    for (Eigen::Index i = 0; i < n; ++i) {
        const VertexId x = interior[static_cast<std::size_t>(i)];
        double diag = p.op.w(x);
        for (VertexId y : g.neighbors(x)) {  // all neighbors lie in K by interiority
            const double a = p.op.a(x, y);
            diag += a;
            if (p.region.is_interior(y)) {
                triplets.emplace_back(i, index_of(interior, y), -a);
            } else {
                rhs(i) += a * p.boundary.at(y);
            }
        }
        triplets.emplace_back(i, i, diag);
    }

    Eigen::VectorXd solution;
    if (interior.size() <= kDenseCap) {
        Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
        for (const auto& t : triplets) m(t.row(), t.col()) += t.value();
        solution = Eigen::PartialPivLU<Eigen::MatrixXd>(m).solve(rhs);
    } else {
        Eigen::SparseMatrix<double> m(n, n);
        m.setFromTriplets(triplets.begin(), triplets.end());
        Eigen::ConjugateGradient<Eigen::SparseMatrix<double>, Eigen::Lower | Eigen::Upper> cg;
        cg.setTolerance(1e-12);
        cg.setMaxIterations(20 * n);
        cg.compute(m);
        solution = cg.solve(rhs);
        if (cg.info() != Eigen::Success)
            throw InternalInconsistencyError("solve_dirichlet: CG did not converge on an SPD system");
    }

    FiniteSupportFn f;
    for (Eigen::Index i = 0; i < n; ++i) f.set(interior[static_cast<std::size_t>(i)], solution(i));
    for (VertexId b : boundary) f.set(b, p.boundary.at(b));

    double residual = 0.0;
    for (VertexId x : interior) residual = std::max(residual, std::abs(apply_schrodinger(p.op, f, x)));
    const double scale = 1.0 + f.max_abs();
    if (!(residual <= 1e-10 * scale))
        throw InternalInconsistencyError("solve_dirichlet: residual " + std::to_string(residual) +
                                         " exceeds tolerance despite positive-definite form");
    return {std::move(f), residual};
}

MinimumPrincipleVerdict minimum_principle_check(const SchrodingerData& s, const FiniteRegion& region,
                                                const FiniteSupportFn& f, double tol) {
    const auto& interior = region.interior();
    if (interior.empty()) throw DomainError("minimum_principle_check: empty interior");
    auto conn = is_connected_interior(s.graph(), region);
    if (!conn.connected) throw DomainError("minimum_principle_check: interior is not connected");
    for (VertexId x : region.vertices())
        if (!(s.w(x) > 0.0))
            throw PreconditionError("minimum_principle_check: W must be strictly positive on the region");

    const double scale = 1.0 + f.max_abs();
    for (VertexId x : interior)
        if (apply_schrodinger(s, f, x) < -tol * scale) return MinimumPrincipleVerdict::NotApplicable;

    // Interior minimum, ties broken by lowest vertex id (ascending scan).
    VertexId argmin = interior.front();
    double minval = f(argmin);
    for (VertexId x : interior) {
        if (f(x) < minval) {
            minval = f(x);
            argmin = x;
        }
    }
    if (minval > tol * scale) return MinimumPrincipleVerdict::NotApplicable;

    double lo = f(region.vertices().front()), hi = lo;
    for (VertexId x : region.vertices()) {
        lo = std::min(lo, f(x));
        hi = std::max(hi, f(x));
    }
    if (hi - lo <= tol * scale) return MinimumPrincipleVerdict::ApplicableAndConstant;
    return MinimumPrincipleVerdict::Violation;
}

HarnackCertificate harnack_constant(const SchrodingerData& s, const FiniteRegion& region,
                                    bool ordered_pairs) {
    const WeightedGraph& g = s.graph();
    double alpha = std::numeric_limits<double>::infinity();
    double edge_sum = 0.0;
    bool any_edge = false;
    for (VertexId x : region.vertices()) {
        for (VertexId y : g.neighbors(x)) {
            if (!region.contains(y) || y < x) continue;  // each unordered edge once
            const double a = s.a(x, y);
            alpha = std::min(alpha, a);
            edge_sum += a;
            any_edge = true;
        }
    }
    if (!any_edge) throw DomainError("harnack_constant: region has no internal edges");
    if (ordered_pairs) edge_sum *= 2.0;

    double max_w = 0.0;
    for (VertexId x : region.vertices()) max_w = std::max(max_w, s.w(x));
    return {(max_w + edge_sum) / alpha, alpha, edge_sum, max_w, ordered_pairs};
}

HarnackVerdict harnack_verify(const SchrodingerData& s, const FiniteRegion& region,
                              const FiniteSupportFn& phi, VertexId x, VertexId y, double tol) {
    if (!region.is_interior(x) || !region.is_interior(y))
        throw DomainError("harnack_verify: x and y must be interior vertices");
    for (VertexId v : region.vertices())
        if (!(phi(v) > 0.0)) throw DomainError("harnack_verify: phi must be strictly positive on K");
    const double scale = 1.0 + phi.max_abs();
    for (VertexId v : region.interior())
        if (std::abs(apply_schrodinger(s, phi, v)) > tol * scale)
            throw DomainError("harnack_verify: phi is not P-harmonic on the interior");

    // BFS distance through interior-interior edges.
    const WeightedGraph& g = s.graph();
    std::map<VertexId, int> dist{{x, 0}};
    std::deque<VertexId> queue{x};
    while (!queue.empty() && !dist.count(y)) {
        VertexId v = queue.front();
        queue.pop_front();
        for (VertexId u : g.neighbors(v)) {
            if (!region.is_interior(u) || dist.count(u)) continue;
            dist[u] = dist[v] + 1;
            queue.push_back(u);
        }
    }
    auto it = dist.find(y);
    if (it == dist.end()) throw DomainError("harnack_verify: x and y not connected inside the interior");
    const int d = it->second;

    HarnackCertificate cert = harnack_constant(s, region);
    const double log_k0 = std::log(cert.k0);
    const double ratio = phi(x) / phi(y);
    const double log_ratio = std::log(ratio);
    HarnackVerdict verdict;
    verdict.ratio = ratio;
    verdict.distance = d;
    verdict.log_k0 = log_k0;
    verdict.bound = std::exp(d * log_k0);
    verdict.holds = std::abs(log_ratio) <= d * log_k0;
    verdict.bound_tight = std::exp((d - 1) * log_k0);
    verdict.tight_holds = std::abs(log_ratio) <= (d - 1) * log_k0;
    return verdict;
}

}  // namespace graphlap
