#ifndef GRAPHLAP_HARMONIC_HPP_
#define GRAPHLAP_HARMONIC_HPP_

#include <map>
#include <memory>
#include <vector>

#include "graphlap/dirichlet.hpp"
#include "graphlap/operators.hpp"

namespace graphlap {

/// A strictly positive P-harmonic profile sampled on a finite window,
/// normalized to 1 at the anchor, built by ball exhaustion.
struct HarmonicProfile {
    VertexId anchor = 0;
    FiniteRegion window;                   // combinatorial ball around the anchor
    std::map<VertexId, double> values;     // the accepted (or last) iterate on the window
    double residual = 0.0;                 // max |P phi| over the window interior
    bool converged = false;

    struct HistoryEntry {
        int n;                             // exhaustion radius
        std::map<VertexId, double> phi;    // iterate restricted to the window
    };
    std::vector<HistoryEntry> history;

    // Filled only when unconverged: last iterates of the even/odd radius
    // subsequences, the two accumulation candidates.
    std::map<VertexId, double> even_candidate;
    std::map<VertexId, double> odd_candidate;
};

/// Ball-exhaustion construction: for each radius n solve P psi = 0 on the
/// interior of B_n with psi = 1 on its boundary, normalize at x0, and accept
/// once the window sup-difference stays below tol for 3 consecutive radii.
HarmonicProfile build_harmonic(const SchrodingerData& s, VertexId x0, int n_max, int window,
                               double tol = 1e-8);

/// The Laplacian unitarily equivalent to P: omega = phi,
/// c_{x,y} = a_{x,y} phi(x) phi(y), realized on the profile's window.
struct UnitarizedLaplacian {
    std::shared_ptr<const FiniteGraph> graph;  // window graph carrying (omega, c)
};

UnitarizedLaplacian unitarize(const SchrodingerData& s, const HarmonicProfile& phi);

/// Both sides of the quadratic-form equality <Pg,g>_{l2} =
/// <Delta_{omega,c}(g/phi), g/phi>_{l2_omega} for a test function supported
/// well inside the window (support at interior depth >= 2).
struct FormPair {
    double schrodinger_side;
    double laplacian_side;
};
FormPair unitarize_form_pair(const SchrodingerData& s, const HarmonicProfile& phi,
                             const UnitarizedLaplacian& lap, const FiniteSupportFn& g);

}  // namespace graphlap

#endif  // GRAPHLAP_HARMONIC_HPP_
