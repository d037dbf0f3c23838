#ifndef GRAPHLAP_METRIC_HPP_
#define GRAPHLAP_METRIC_HPP_

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "graphlap/function.hpp"
#include "graphlap/graph.hpp"
#include "graphlap/operators.hpp"

namespace graphlap {

/// The weighted path metric delta_a: edge {x,y} has length 1/sqrt(a_{x,y}).
class MetricContext {
  public:
    MetricContext(std::shared_ptr<const WeightedGraph> graph,
                  std::function<double(VertexId, VertexId)> edge_coeff)
        : graph_(std::move(graph)), edge_coeff_(std::move(edge_coeff)) {}

    /// Lengths from the Schroedinger edge coefficients.
    explicit MetricContext(const SchrodingerData& s)
        : MetricContext(s.graph_ptr(), [s](VertexId x, VertexId y) { return s.a(x, y); }) {}

    /// Lengths from the gauge of (omega, c): a = c/(omega_x omega_y).
    static MetricContext from_gauge(std::shared_ptr<const WeightedGraph> g);

    const WeightedGraph& graph() const { return *graph_; }
    double a(VertexId x, VertexId y) const {
        return x <= y ? edge_coeff_(x, y) : edge_coeff_(y, x);
    }
    double edge_length(VertexId x, VertexId y) const;

  private:
    std::shared_ptr<const WeightedGraph> graph_;
    std::function<double(VertexId, VertexId)> edge_coeff_;
};

/// Shortest-path distance delta_a(x, y) by Dijkstra confined to the horizon
/// region (ties broken by vertex id). Throws UnreachableError when y is not
/// reachable inside the horizon.
double delta_a(const MetricContext& ctx, VertexId x, VertexId y, const FiniteRegion& horizon);

/// B_R = {x : delta_a(x0, x) <= R} by Dijkstra expansion; throws
/// CapacityError when the vertex budget is exhausted before closure.
FiniteRegion metric_ball(const MetricContext& ctx, VertexId x0, double R,
                         std::size_t budget = 200000);

/// The Lipschitz cutoff min(1, delta_a(x, V \ B_{R+1})): 1 on B_R, 0 off
/// B_{R+1}. Distance to the empty set is +inf, so on a finite graph with
/// large R the cutoff is identically 1.
FiniteSupportFn cutoff(const MetricContext& ctx, VertexId x0, double R,
                       std::size_t budget = 200000);

/// min over s in S of delta_a(x, s); +inf when the component inside the
/// horizon is exhausted without meeting S. Throws UndeterminedError when the
/// search would have to leave the horizon while S may still lie beyond it.
double distance_to_set(const MetricContext& ctx, VertexId x,
                       const std::function<bool(VertexId)>& in_set, const FiniteRegion& horizon);

enum class CompletenessVerdict { Complete, Incomplete, Undetermined };

struct CompletenessReport {
    FamilySpec family;
    VertexId start = 0;
    std::vector<double> partial_sums;  // s_n = delta_a(start, start + 1 + i)
    CompletenessVerdict numeric_verdict = CompletenessVerdict::Undetermined;
    std::optional<CompletenessVerdict> closed_form_verdict;
    std::optional<double> criterion_exponent;  // alpha - beta/2 for power families
    CompletenessVerdict verdict = CompletenessVerdict::Undetermined;  // closed form wins
    double fitted_decay_exponent = 0.0;  // p in length_k ~ k^-p (ln k)^-q, last decade
    double fitted_log_exponent = 0.0;    // q in the same fit
};

/// Completeness diagnostics for a half-line family: delta_a(x0, n) diverges
/// iff the metric is complete. The closed-form criterion (power: complete
/// iff alpha - beta/2 <= 1; log: complete) takes precedence over the
/// numeric growth test.
CompletenessReport completeness_diagnostic(const FamilySpec& spec, int n_probe);

std::string to_string(CompletenessVerdict v);

}  // namespace graphlap

#endif  // GRAPHLAP_METRIC_HPP_
