#ifndef GRAPHLAP_DIRICHLET_HPP_
#define GRAPHLAP_DIRICHLET_HPP_

#include <map>

#include "graphlap/operators.hpp"

namespace graphlap {

struct DirichletProblem {
    SchrodingerData op;
    FiniteRegion region;                    // nonempty connected interior
    std::map<VertexId, double> boundary;    // defined on exactly the boundary
};

struct DirichletSolution {
    FiniteSupportFn values;  // on all of K
    double residual;         // max |Pf| over the interior
};

/// Solves Pf = 0 on the interior with f = u on the boundary. Dense LU for
/// interiors up to 500 vertices, conjugate gradient on the SPD interior
/// matrix beyond. Requires a positive-definite form on interior-supported
/// functions (checked via form_lower_bound).
DirichletSolution solve_dirichlet(const DirichletProblem& p);

enum class MinimumPrincipleVerdict {
    NotApplicable,          // a hypothesis of the lemma fails for this f
    ApplicableAndConstant,  // hypotheses hold and f is constant on K
    Violation,              // hypotheses hold, f not constant: upstream bug
};

/// Minimum principle (W > 0): Pf >= 0 on the interior and a nonpositive
/// interior minimum force f constant on K.
MinimumPrincipleVerdict minimum_principle_check(const SchrodingerData& s, const FiniteRegion& region,
                                                const FiniteSupportFn& f, double tol = 1e-12);

struct HarnackCertificate {
    double k0;        // (max(0, max_K W) + A) / alpha
    double alpha;     // min edge coefficient on K
    double edge_sum;  // A: sum of edge coefficients on K
    double max_w;     // max(0, max_K W)
    bool ordered_pairs;
};

/// The local Harnack constant of a finite region. A sums each unordered edge
/// within K once; `ordered_pairs` doubles it (the ordered reading).
HarnackCertificate harnack_constant(const SchrodingerData& s, const FiniteRegion& region,
                                    bool ordered_pairs = false);

struct HarnackVerdict {
    double ratio;        // phi(x) / phi(y)
    int distance;        // interior edge-count distance d between x and y
    double log_k0;
    double bound;        // k0^d (may overflow to +inf; comparisons use logs)
    bool holds;          // 1/k0^d <= ratio <= k0^d
    double bound_tight;  // k0^(d-1), reported only
    bool tight_holds;
};

/// Checks the local Harnack inequality for a positive interior-harmonic phi.
HarnackVerdict harnack_verify(const SchrodingerData& s, const FiniteRegion& region,
                              const FiniteSupportFn& phi, VertexId x, VertexId y, double tol = 1e-8);

}  // namespace graphlap

#endif  // GRAPHLAP_DIRICHLET_HPP_
