#ifndef GRAPHLAP_ESA_HPP_
#define GRAPHLAP_ESA_HPP_

#include <optional>
#include <string>
#include <vector>

#include "graphlap/metric.hpp"
#include "graphlap/operators.hpp"

namespace graphlap {

/// A solution of (H - lambda) v = 0 on a half-line, generated by the
/// three-term recurrence from v(start) = v0. Once |v| would exceed 1e300 the
/// recurrence continues in scaled form: `values` entries become +-inf while
/// `log_abs`/`sign` stay exact, and l2 partial sums are tracked as logs.
struct DeficiencySolution {
    VertexId start = 0;
    double lambda = -1.0;
    std::vector<double> values;          // v(start), v(start+1), ...
    std::vector<double> log_abs;         // log |v|, -inf for zero
    std::vector<int> sign;               // -1, 0, +1
    std::vector<double> partial_l2_log;  // log of sum_{k<=n} v(k)^2
    bool overflowed = false;

    double value(VertexId n) const;
    std::size_t size() const { return values.size(); }
};

DeficiencySolution deficiency_recurrence(const SchrodingerData& s, double v0, int n_terms,
                                         double lambda = -1.0);

enum class L2Class { Divergent, Bounded, Undetermined };
std::string to_string(L2Class c);

/// Numeric divergence test on the partial l2 sums. Divergent needs the sums
/// to exceed threshold_factor * v0^2 with a nondecreasing increment tail;
/// bounded needs a ratio test with margin; anything else is undetermined.
/// "Bounded" is advisory (bounded within the horizon), never a proof.
L2Class classify_l2(const DeficiencySolution& sol, double threshold_factor = 1e12);

/// Greedy strictly increasing chain g(x_0) < g(x_1) < ... from the first
/// vertex with nonzero value (sign-flipped when negative): from each vertex
/// pick the neighbor maximizing g. Requires constant omega on the family.
/// Throws InternalInconsistencyError if no increasing neighbor exists.
std::vector<VertexId> growth_witness(const SchrodingerData& s, const DeficiencySolution& g);

/// Both closed forms of <fv, (H - lambda)(fv)> for a kernel solution v:
/// the edge sum and the halved vertex sum, next to the inner-product form.
struct AgmonCheck {
    double inner_product;
    double edge_sum;
    double half_vertex_sum;
    double max_rel_gap;
};
AgmonCheck agmon_identity_check(const SchrodingerData& s, double lambda, const DeficiencySolution& v,
                                const FiniteSupportFn& f, double residual_tol = 1e-8);

/// The two-sided estimate sum_{B_R} v^2 <= <fv,(H-lambda)(fv)>
/// <= (N/2) sum_{shell} v^2 with f the cutoff at radius R, where the shell
/// is (B_{R+1} \ B_R) plus the exterior neighbors of the cutoff's support
/// (edges leaving B_{R+1} still carry an f-jump). Requires lambda < k - 1.
struct SandwichCertificate {
    double radius = 0.0;
    double ball_mass = 0.0;    // sum over B_R of v^2
    double form_value = 0.0;   // <fv, (H - lambda)(fv)>
    double shell_bound = 0.0;  // (N/2) * shell mass
    std::size_t ball_size = 0;
    std::size_t outer_size = 0;
    bool holds = false;
};
SandwichCertificate sandwich_check(const SchrodingerData& s, double lambda,
                                   const DeficiencySolution& v, const MetricContext& ctx,
                                   VertexId x0, double R, const FormBound& k, int valence,
                                   std::size_t budget = 200000);

enum class ProbeMode { Laplacian, SchrodingerWithShift };

struct ProbeReport {
    FamilySpec family;
    ProbeMode mode = ProbeMode::Laplacian;
    double lambda = -1.0;
    bool omega_constant = false;
    std::optional<double> potential_min_sampled;  // kappa when W looks bounded below
    std::optional<double> form_bound;             // k from a large-ball certificate
    L2Class classification = L2Class::Undetermined;
    std::vector<VertexId> witness;                // present when omega is constant
    std::vector<SandwichCertificate> sandwiches;  // present with completeness evidence
    std::optional<CompletenessReport> completeness;
    std::string note;  // how lambda was chosen / which hypothesis route applies
};

struct ProbeOptions {
    int n_terms = 400;
    int completeness_probe = 20000;
    int form_ball_radius = 400;
    double sandwich_r_min = 3.0;
    double sandwich_r_max = 10.0;
    std::size_t ball_budget = 300000;
};

/// End-to-end probe of a half-line family: gauge (for Laplacian mode), pick
/// lambda, run the recurrence, classify, attach witness and sandwich
/// certificates where the required hypotheses can be evidenced.
ProbeReport esa_probe(const FamilySpec& spec, ProbeMode mode, const ProbeOptions& opts = {});

}  // namespace graphlap

#endif  // GRAPHLAP_ESA_HPP_
