#include "graphlap/metric.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <queue>
#include <set>

namespace graphlap {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Min-heap entry; ties broken by vertex id for reproducibility.
struct QueueEntry {
    double dist;
    VertexId vertex;
    bool operator>(const QueueEntry& o) const {
        return dist != o.dist ? dist > o.dist : vertex > o.vertex;
    }
};
using MinQueue = std::priority_queue<QueueEntry, std::vector<QueueEntry>, std::greater<QueueEntry>>;

}  // namespace

MetricContext MetricContext::from_gauge(std::shared_ptr<const WeightedGraph> g) {
    auto graph = g;
    return MetricContext(std::move(g), [graph](VertexId x, VertexId y) {
        return graph->conductance(x, y) / (graph->omega(x) * graph->omega(y));
    });
}

double MetricContext::edge_length(VertexId x, VertexId y) const {
    return 1.0 / std::sqrt(a(x, y));
}

double delta_a(const MetricContext& ctx, VertexId x, VertexId y, const FiniteRegion& horizon) {
    if (!horizon.contains(x) || !horizon.contains(y))
        throw DomainError("delta_a: endpoints must lie in the horizon");
    const WeightedGraph& g = ctx.graph();
    std::map<VertexId, double> dist{{x, 0.0}};
    std::set<VertexId> settled;
    MinQueue queue;
    queue.push({0.0, x});
    while (!queue.empty()) {
        auto [d, v] = queue.top();
        queue.pop();
        if (!settled.insert(v).second) continue;
        if (v == y) return d;
        for (VertexId u : g.neighbors(v)) {
            if (!horizon.contains(u) || settled.count(u)) continue;
            double nd = d + ctx.edge_length(v, u);
            auto it = dist.find(u);
            if (it == dist.end() || nd < it->second) {
                dist[u] = nd;
                queue.push({nd, u});
            }
        }
    }
    throw UnreachableError("delta_a: target unreachable within horizon");
}

FiniteRegion metric_ball(const MetricContext& ctx, VertexId x0, double R, std::size_t budget) {
    const WeightedGraph& g = ctx.graph();
    if (!g.contains(x0)) throw DomainError("metric_ball: center not in graph");
    if (R < 0.0) return FiniteRegion();
    std::map<VertexId, double> dist{{x0, 0.0}};
    std::set<VertexId> settled;
    std::vector<VertexId> inside;
    MinQueue queue;
    queue.push({0.0, x0});
    while (!queue.empty()) {
        auto [d, v] = queue.top();
        queue.pop();
        if (d > R) break;  // all remaining labels exceed R
        if (!settled.insert(v).second) continue;
        inside.push_back(v);
        if (settled.size() > budget)
            throw CapacityError("metric_ball: vertex budget exhausted; the ball may be infinite");
        for (VertexId u : g.neighbors(v)) {
            if (settled.count(u)) continue;
            double nd = d + ctx.edge_length(v, u);
            auto it = dist.find(u);
            if (it == dist.end() || nd < it->second) {
                dist[u] = nd;
                queue.push({nd, u});
            }
        }
    }
    return FiniteRegion::from_vertices(g, std::move(inside));
}

FiniteSupportFn cutoff(const MetricContext& ctx, VertexId x0, double R, std::size_t budget) {
    const WeightedGraph& g = ctx.graph();
    FiniteRegion outer = metric_ball(ctx, x0, R + 1.0, budget);

    // Multi-source Dijkstra from the exterior neighbors of B_{R+1}.
    std::map<VertexId, double> dist;
    MinQueue queue;
    for (VertexId v : outer.boundary())
        for (VertexId u : g.neighbors(v))
            if (!outer.contains(u)) {
                dist[u] = 0.0;
                queue.push({0.0, u});
            }

    FiniteSupportFn f;
    if (queue.empty()) {
        // V \ B_{R+1} is empty: distance to it is +inf, the cutoff is 1.
        for (VertexId v : outer.vertices()) f.set(v, 1.0);
        return f;
    }

    std::set<VertexId> settled;
    while (!queue.empty()) {
        auto [d, v] = queue.top();
        queue.pop();
        if (!settled.insert(v).second) continue;
        if (d >= 1.0) continue;  // values clip to 1; no need to relax further
        for (VertexId u : g.neighbors(v)) {
            if (!outer.contains(u) || settled.count(u)) continue;
            double nd = d + ctx.edge_length(v, u);
            auto it = dist.find(u);
            if (it == dist.end() || nd < it->second) {
                dist[u] = nd;
                queue.push({nd, u});
            }
        }
    }
    for (VertexId v : outer.vertices()) {
        auto it = dist.find(v);
        f.set(v, it == dist.end() ? 1.0 : std::min(1.0, it->second));
    }
    return f;
}

double distance_to_set(const MetricContext& ctx, VertexId x,
                       const std::function<bool(VertexId)>& in_set, const FiniteRegion& horizon) {
    if (!horizon.contains(x)) throw DomainError("distance_to_set: source must lie in the horizon");
    const WeightedGraph& g = ctx.graph();
    if (in_set(x)) return 0.0;
    std::map<VertexId, double> dist{{x, 0.0}};
    std::set<VertexId> settled;
    MinQueue queue;
    queue.push({0.0, x});
    bool touched_horizon_edge = false;
    while (!queue.empty()) {
        auto [d, v] = queue.top();
        queue.pop();
        if (!settled.insert(v).second) continue;
        if (in_set(v)) return d;  // Dijkstra settles in increasing distance
        for (VertexId u : g.neighbors(v)) {
            if (settled.count(u)) continue;
            if (!horizon.contains(u)) {
                if (in_set(u)) {
                    // One step beyond the horizon is still exact if it is a set member.
                    double nd = d + ctx.edge_length(v, u);
                    dist[u] = std::min(nd, dist.count(u) ? dist[u] : kInf);
                    queue.push({dist[u], u});
                } else {
                    touched_horizon_edge = true;
                }
                continue;
            }
            double nd = d + ctx.edge_length(v, u);
            auto it = dist.find(u);
            if (it == dist.end() || nd < it->second) {
                dist[u] = nd;
                queue.push({nd, u});
            }
        }
    }
    if (touched_horizon_edge)
        throw UndeterminedError("distance_to_set: horizon exhausted while S may lie beyond it");
    return kInf;  // component exhausted: S is empty here
}

CompletenessReport completeness_diagnostic(const FamilySpec& spec, int n_probe) {
    if (spec.kind == FamilySpec::Kind::FiniteFile)
        throw DomainError("completeness_diagnostic: only half-line families are supported");

    auto graph = build_family(spec);
    auto start_opt = graph->ray_start();
    VertexId start;
    if (start_opt) {
        start = *start_opt;
    } else {
        // table family: finite path, use the smallest vertex
        auto finite = std::dynamic_pointer_cast<const FiniteGraph>(graph);
        auto verts = finite->all_vertices();
        start = verts.front();
    }
    if (n_probe < 12) throw DomainError("completeness_diagnostic: n_probe too small");

    CompletenessReport report;
    report.family = spec;
    report.start = start;
    MetricContext ctx = MetricContext::from_gauge(graph);

    std::vector<double> lengths;  // edge lengths 1/sqrt(a_{k,k+1})
    double s = 0.0;
    for (int i = 0; i < n_probe; ++i) {
        VertexId k = start + static_cast<VertexId>(i);
        if (!graph->contains(k + 1)) break;  // table families may end early
        double len = ctx.edge_length(k, k + 1);
        lengths.push_back(len);
        s += len;
        report.partial_sums.push_back(s);
    }

    // Fit length_k ~ k^-p (ln k)^-q over the last decade of probes. The
    // log-correction regressor keeps borderline families (p = 1 with a log
    // factor) from producing a spuriously decisive power exponent.
    const std::size_t m = lengths.size();
    const std::size_t lo = std::max<std::size_t>(1, m / 10);
    Eigen::Matrix3d normal = Eigen::Matrix3d::Zero();
    Eigen::Vector3d rhs = Eigen::Vector3d::Zero();
    for (std::size_t i = lo; i < m; ++i) {
        double k = static_cast<double>(start) + static_cast<double>(i);
        Eigen::Vector3d row(1.0, std::log(k), std::log(std::log(k)));
        normal += row * row.transpose();
        rhs += row * std::log(lengths[i]);
    }
    Eigen::Vector3d coeff = normal.ldlt().solve(rhs);
    report.fitted_decay_exponent = -coeff(1);
    report.fitted_log_exponent = -coeff(2);

    // Monotone comparison with the p-series: decisive only away from p = 1.
    const double p = report.fitted_decay_exponent;
    bool tail_decreasing = true;
    for (std::size_t i = lo + 1; i < m; ++i)
        if (lengths[i] > lengths[i - 1] * (1.0 + 1e-12)) tail_decreasing = false;
    if (p <= 0.95 && tail_decreasing)
        report.numeric_verdict = CompletenessVerdict::Complete;
    else if (p >= 1.05 && tail_decreasing)
        report.numeric_verdict = CompletenessVerdict::Incomplete;
    else
        report.numeric_verdict = CompletenessVerdict::Undetermined;

    if (spec.kind == FamilySpec::Kind::HalfLinePower) {
        const double alpha = spec.param("alpha", 0.0);
        const double beta = power_family_beta(spec);
        report.criterion_exponent = alpha - 0.5 * beta;
        report.closed_form_verdict = (*report.criterion_exponent <= 1.0)
                                         ? CompletenessVerdict::Complete
                                         : CompletenessVerdict::Incomplete;
    } else if (spec.kind == FamilySpec::Kind::HalfLineLog) {
        // 1/sqrt(a_{k,k+1}) ~ 1/(k log k): divergent series.
        report.closed_form_verdict = CompletenessVerdict::Complete;
    }

    report.verdict = report.closed_form_verdict.value_or(report.numeric_verdict);
    return report;
}

std::string to_string(CompletenessVerdict v) {
    switch (v) {
        case CompletenessVerdict::Complete: return "complete";
        case CompletenessVerdict::Incomplete: return "incomplete";
        default: return "undetermined";
    }
}

}  // namespace graphlap
