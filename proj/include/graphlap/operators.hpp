#ifndef GRAPHLAP_OPERATORS_HPP_
#define GRAPHLAP_OPERATORS_HPP_

#include <functional>
#include <memory>

#include "graphlap/function.hpp"
#include "graphlap/graph.hpp"

namespace graphlap {

/// Edge coefficients a > 0 and vertex potential W defining the Schroedinger
/// operator Delta_{1,a} + W over a fixed graph. The a accessor canonicalizes
/// the vertex pair so a(x,y) == a(y,x) bit-identically.
class SchrodingerData {
  public:
    SchrodingerData(std::shared_ptr<const WeightedGraph> graph,
                    std::function<double(VertexId, VertexId)> edge_coeff,
                    std::function<double(VertexId)> potential)
        : graph_(std::move(graph)), edge_coeff_(std::move(edge_coeff)), potential_(std::move(potential)) {}

    const WeightedGraph& graph() const { return *graph_; }
    std::shared_ptr<const WeightedGraph> graph_ptr() const { return graph_; }

    double a(VertexId x, VertexId y) const {
        return x <= y ? edge_coeff_(x, y) : edge_coeff_(y, x);
    }
    double w(VertexId x) const { return potential_(x); }

    /// a == c of the graph, W == 0 (the plain Delta_{1,c} case).
    static SchrodingerData from_conductance(std::shared_ptr<const WeightedGraph> g);

  private:
    std::shared_ptr<const WeightedGraph> graph_;
    std::function<double(VertexId, VertexId)> edge_coeff_;
    std::function<double(VertexId)> potential_;
};

/// Lower bound k of the quadratic form per unit l2 norm, certified on a
/// finite region: <Hf,f> >= k |f|^2 for every f supported in the region.
struct FormBound {
    double k = 0.0;
    FiniteRegion region;
};

/// (Delta_{omega,c} f)(x) = omega_x^-2 sum_{y~x} c_{x,y} (f(x) - f(y)).
double apply_laplacian(const WeightedGraph& g, const FiniteSupportFn& f, VertexId x);

/// ((Delta_{1,a} + W) f)(x) = sum_{y~x} a_{x,y} (f(x) - f(y)) + W(x) f(x).
double apply_schrodinger(const SchrodingerData& s, const FiniteSupportFn& f, VertexId x);

/// Q_c(f) = sum over unordered edges of c (f(x) - f(y))^2, >= 0.
double quadratic_form(const WeightedGraph& g, const FiniteSupportFn& f);

/// <f,h>_{l2_omega} = sum omega_x^2 f(x) h(x).
double inner_product_omega(const WeightedGraph& g, const FiniteSupportFn& f, const FiniteSupportFn& h);

/// Plain l2 inner product.
double inner_product_l2(const FiniteSupportFn& f, const FiniteSupportFn& h);

/// Gauge transform of Delta_{omega,c}: a = c/(omega_x omega_y) and
/// W = -(1/omega) Delta_{1,a} omega, evaluated by the exact neighbor sum.
SchrodingerData gauge_to_schrodinger(std::shared_ptr<const WeightedGraph> g);

/// U_omega f = omega f, and its inverse f / omega.
FiniteSupportFn conjugate_u_omega(const WeightedGraph& g, const FiniteSupportFn& f);
FiniteSupportFn conjugate_u_omega_inverse(const WeightedGraph& g, const FiniteSupportFn& f);

/// Smallest eigenvalue of the operator restricted to functions supported in
/// the region (full form, edges leaving the region included). Dense
/// symmetric eigensolve; refuses regions larger than `cap`.
FormBound form_lower_bound(const SchrodingerData& s, const FiniteRegion& region, std::size_t cap = 2000);
FormBound form_lower_bound(std::shared_ptr<const WeightedGraph> g, const FiniteRegion& region,
                           std::size_t cap = 2000);

}  // namespace graphlap

#endif  // GRAPHLAP_OPERATORS_HPP_
