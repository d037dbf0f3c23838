#ifndef GRAPHLAP_GRAPH_HPP_
#define GRAPHLAP_GRAPH_HPP_

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "graphlap/error.hpp"

namespace graphlap {

using VertexId = std::uint64_t;

/// A locally finite graph with strictly positive vertex weights omega and
/// edge conductances c. Implementations may be lazy (infinite families);
/// nothing here enumerates the vertex set. All queries are pure and the
/// object is immutable after construction.
class WeightedGraph {
  public:
    virtual ~WeightedGraph() = default;

    virtual bool contains(VertexId x) const = 0;

    /// Adjacent vertices of x, sorted ascending by id.
    /// Throws DomainError for unknown vertices.
    virtual std::vector<VertexId> neighbors(VertexId x) const = 0;

    /// Vertex weight omega_x > 0.
    virtual double omega(VertexId x) const = 0;

    /// omega at extended precision where the family can supply it; consumers
    /// with cancellation-sensitive sums (the gauge potential) use this.
    virtual long double omega_hp(VertexId x) const { return omega(x); }

    /// Edge conductance c_{x,y} > 0; symmetric bit-identically in (x, y).
    virtual double conductance(VertexId x, VertexId y) const = 0;

    /// Known uniform valence bound, when the family guarantees one.
    virtual std::optional<int> valence_hint() const { return std::nullopt; }

    /// First vertex of a half-line family (n ~ n+1), if this graph is one.
    virtual std::optional<VertexId> ray_start() const { return std::nullopt; }
};

/// A finite vertex set K split into interior (all neighbors inside K) and
/// boundary (the rest). Vertex lists are sorted ascending.
class FiniteRegion {
  public:
    FiniteRegion() = default;

    /// Computes interior/boundary from the graph's adjacency.
    static FiniteRegion from_vertices(const WeightedGraph& g, std::vector<VertexId> vertices);

    const std::vector<VertexId>& vertices() const { return vertices_; }
    const std::vector<VertexId>& interior() const { return interior_; }
    const std::vector<VertexId>& boundary() const { return boundary_; }

    bool contains(VertexId x) const;
    bool is_interior(VertexId x) const;
    std::size_t size() const { return vertices_.size(); }

  private:
    std::vector<VertexId> vertices_;
    std::vector<VertexId> interior_;
    std::vector<VertexId> boundary_;
};

struct InteriorConnectivity {
    bool connected = false;
    bool vacuous = false;  // empty interior: vacuously connected, must be rejected by solvers
};

/// Specification of a built-in graph family.
///   half-line-power: V = {start, start+1, ...}, omega_n = n^-alpha,
///                    c_{n,n+1} = (n + conductance-offset)^-beta
///   half-line-log:   V = {start, ...} with start >= 2, omega_n = 1/(n ln n), c = 1
///   half-line-table: explicit (n, omega, c_{n,n+1}) rows from `path`
///   finite-file:     edge-list file from `path`
struct FamilySpec {
    enum class Kind { HalfLinePower, HalfLineLog, HalfLineTable, FiniteFile };
    Kind kind = Kind::HalfLinePower;
    std::map<std::string, double> params;
    std::string path;

    double param(const std::string& key, double fallback) const {
        auto it = params.find(key);
        return it == params.end() ? fallback : it->second;
    }
};

/// Explicit finite graph. Build with add_edge/set_omega, then freeze().
class FiniteGraph final : public WeightedGraph {
  public:
    void add_edge(VertexId u, VertexId v, double c);
    void set_omega(VertexId v, double w);
    /// Validates weights and sorts adjacency. No mutation afterwards.
    void freeze();

    bool contains(VertexId x) const override;
    std::vector<VertexId> neighbors(VertexId x) const override;
    double omega(VertexId x) const override;
    double conductance(VertexId x, VertexId y) const override;

    std::vector<VertexId> all_vertices() const;
    std::size_t edge_count() const { return conductance_.size(); }

  private:
    std::map<VertexId, std::vector<VertexId>> adjacency_;
    std::map<VertexId, double> omega_;
    std::map<std::pair<VertexId, VertexId>, double> conductance_;  // key: (min, max)
    bool frozen_ = false;
};

/// Lazy half-line: V = {start, start+1, ...}, n ~ n+1.
class HalfLineGraph final : public WeightedGraph {
  public:
    HalfLineGraph(VertexId start, std::function<double(VertexId)> omega,
                  std::function<double(VertexId)> cond_lower,  // c_{n,n+1} keyed by n
                  std::function<long double(VertexId)> omega_hp = nullptr);

    bool contains(VertexId x) const override;
    std::vector<VertexId> neighbors(VertexId x) const override;
    double omega(VertexId x) const override;
    long double omega_hp(VertexId x) const override;
    double conductance(VertexId x, VertexId y) const override;
    std::optional<int> valence_hint() const override { return 2; }
    std::optional<VertexId> ray_start() const override { return start_; }

  private:
    VertexId start_;
    std::function<double(VertexId)> omega_fn_;
    std::function<double(VertexId)> cond_fn_;
    std::function<long double(VertexId)> omega_hp_fn_;
};

/// Lazy rooted binary tree: root 1, children of v are 2v and 2v+1.
/// omega and c default to 1; mainly a second infinite family for tests.
class BinaryTreeGraph final : public WeightedGraph {
  public:
    bool contains(VertexId x) const override { return x >= 1; }
    std::vector<VertexId> neighbors(VertexId x) const override;
    double omega(VertexId) const override { return 1.0; }
    double conductance(VertexId x, VertexId y) const override;
    std::optional<int> valence_hint() const override { return 3; }
};

std::shared_ptr<const WeightedGraph> build_family(const FamilySpec& spec);

/// Effective beta of a power family: an explicit `beta` wins, otherwise the
/// `epsilon` shorthand means c_{n,n+1} = n^(2+epsilon), i.e. beta = -(2+eps).
double power_family_beta(const FamilySpec& spec);

/// Max neighbor count over the region; trusts the family's valence hint.
int valence_bound(const WeightedGraph& g, const FiniteRegion& region);

/// Ball of combinatorial (edge-count) radius n around x0.
FiniteRegion combinatorial_ball(const WeightedGraph& g, VertexId x0, int n);

/// Path-connectivity of the interior through interior-interior edges.
InteriorConnectivity is_connected_interior(const WeightedGraph& g, const FiniteRegion& region);

}  // namespace graphlap

#endif  // GRAPHLAP_GRAPH_HPP_
