#include "graphlap/graph.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <fstream>
#include <set>
#include <sstream>

#include "graphlap/io.hpp"

namespace graphlap {

// ---------------------------------------------------------------- FiniteRegion

FiniteRegion FiniteRegion::from_vertices(const WeightedGraph& g, std::vector<VertexId> vertices) {
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    FiniteRegion region;
    region.vertices_ = std::move(vertices);
    for (VertexId x : region.vertices_) {
        if (!g.contains(x)) throw DomainError("region vertex " + std::to_string(x) + " not in graph");
        bool inside = true;
        for (VertexId y : g.neighbors(x)) {
            if (!std::binary_search(region.vertices_.begin(), region.vertices_.end(), y)) {
                inside = false;
                break;
            }
        }
        (inside ? region.interior_ : region.boundary_).push_back(x);
    }
    return region;
}

bool FiniteRegion::contains(VertexId x) const {
    return std::binary_search(vertices_.begin(), vertices_.end(), x);
}

bool FiniteRegion::is_interior(VertexId x) const {
    return std::binary_search(interior_.begin(), interior_.end(), x);
}

// ---------------------------------------------------------------- FiniteGraph

void FiniteGraph::add_edge(VertexId u, VertexId v, double c) {
    if (frozen_) throw DomainError("graph is frozen");
    if (u == v) throw DomainError("self-loops are not allowed");
    if (!(c > 0.0)) throw DomainError("conductance must be strictly positive");
    auto key = std::minmax(u, v);
    if (conductance_.count(key)) throw DomainError("duplicate edge");
    conductance_[key] = c;
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
    omega_.try_emplace(u, 1.0);
    omega_.try_emplace(v, 1.0);
}

void FiniteGraph::set_omega(VertexId v, double w) {
    if (frozen_) throw DomainError("graph is frozen");
    if (!(w > 0.0)) throw DomainError("vertex weight must be strictly positive");
    adjacency_.try_emplace(v);  // allows isolated vertices
    omega_[v] = w;
}

void FiniteGraph::freeze() {
    for (auto& [v, adj] : adjacency_) std::sort(adj.begin(), adj.end());
    frozen_ = true;
}

bool FiniteGraph::contains(VertexId x) const { return adjacency_.count(x) != 0; }

std::vector<VertexId> FiniteGraph::neighbors(VertexId x) const {
    auto it = adjacency_.find(x);
    if (it == adjacency_.end()) throw DomainError("unknown vertex " + std::to_string(x));
    return it->second;
}

double FiniteGraph::omega(VertexId x) const {
    auto it = omega_.find(x);
    if (it == omega_.end()) throw DomainError("unknown vertex " + std::to_string(x));
    return it->second;
}

double FiniteGraph::conductance(VertexId x, VertexId y) const {
    auto it = conductance_.find(std::minmax(x, y));
    if (it == conductance_.end())
        throw DomainError("no edge {" + std::to_string(x) + "," + std::to_string(y) + "}");
    return it->second;
}

std::vector<VertexId> FiniteGraph::all_vertices() const {
    std::vector<VertexId> out;
    out.reserve(adjacency_.size());
    for (const auto& [v, adj] : adjacency_) out.push_back(v);
    return out;
}

// ---------------------------------------------------------------- HalfLineGraph

HalfLineGraph::HalfLineGraph(VertexId start, std::function<double(VertexId)> omega,
                             std::function<double(VertexId)> cond_lower,
                             std::function<long double(VertexId)> omega_hp)
    : start_(start),
      omega_fn_(std::move(omega)),
      cond_fn_(std::move(cond_lower)),
      omega_hp_fn_(std::move(omega_hp)) {}

bool HalfLineGraph::contains(VertexId x) const { return x >= start_; }

std::vector<VertexId> HalfLineGraph::neighbors(VertexId x) const {
    if (!contains(x)) throw DomainError("unknown vertex " + std::to_string(x));
    if (x == start_) return {x + 1};
    return {x - 1, x + 1};
}

double HalfLineGraph::omega(VertexId x) const {
    if (!contains(x)) throw DomainError("unknown vertex " + std::to_string(x));
    double w = omega_fn_(x);
    if (!(w > 0.0) || !std::isfinite(w))
        throw DomainError("generated vertex weight is not strictly positive at " + std::to_string(x));
    return w;
}

long double HalfLineGraph::omega_hp(VertexId x) const {
    if (!omega_hp_fn_) return omega(x);
    if (!contains(x)) throw DomainError("unknown vertex " + std::to_string(x));
    return omega_hp_fn_(x);
}

double HalfLineGraph::conductance(VertexId x, VertexId y) const {
    VertexId lo = std::min(x, y), hi = std::max(x, y);
    if (!contains(lo) || hi != lo + 1)
        throw DomainError("no edge {" + std::to_string(x) + "," + std::to_string(y) + "}");
    double c = cond_fn_(lo);
    if (!(c > 0.0) || !std::isfinite(c))
        throw DomainError("generated conductance is not strictly positive at edge " + std::to_string(lo));
    return c;
}

// ---------------------------------------------------------------- BinaryTreeGraph

std::vector<VertexId> BinaryTreeGraph::neighbors(VertexId x) const {
    if (x < 1) throw DomainError("unknown vertex " + std::to_string(x));
    if (x == 1) return {2, 3};
    return {x / 2, 2 * x, 2 * x + 1};
}

double BinaryTreeGraph::conductance(VertexId x, VertexId y) const {
    VertexId lo = std::min(x, y), hi = std::max(x, y);
    if (lo < 1 || (hi != 2 * lo && hi != 2 * lo + 1))
        throw DomainError("no edge {" + std::to_string(x) + "," + std::to_string(y) + "}");
    return 1.0;
}

// ---------------------------------------------------------------- families

double power_family_beta(const FamilySpec& spec) {
    if (spec.params.count("beta") || !spec.params.count("epsilon")) return spec.param("beta", 0.0);
    return -(2.0 + spec.param("epsilon", 0.0));
}

std::shared_ptr<const WeightedGraph> build_family(const FamilySpec& spec) {
    switch (spec.kind) {
        case FamilySpec::Kind::HalfLinePower: {
            const double alpha = spec.param("alpha", 0.0);
            const double beta = power_family_beta(spec);
            const double offset = spec.param("conductance-offset", 0.0);
            const auto start = static_cast<VertexId>(spec.param("start", 1.0));
            if (start < 1) throw DomainError("power family requires start >= 1");
            return std::make_shared<HalfLineGraph>(
                start, [alpha](VertexId n) { return std::pow(static_cast<double>(n), -alpha); },
                [beta, offset](VertexId n) { return std::pow(static_cast<double>(n) + offset, -beta); },
                [alpha](VertexId n) {
                    return std::pow(static_cast<long double>(n), static_cast<long double>(-alpha));
                });
        }
        case FamilySpec::Kind::HalfLineLog: {
            const auto start = static_cast<VertexId>(spec.param("start", 2.0));
            if (start < 2) throw DomainError("log family requires start >= 2 so that log n > 0");
            return std::make_shared<HalfLineGraph>(
                start,
                [](VertexId n) {
                    double nn = static_cast<double>(n);
                    return 1.0 / (nn * std::log(nn));
                },
                [](VertexId) { return 1.0; },
                [](VertexId n) {
                    long double nn = static_cast<long double>(n);
                    return 1.0L / (nn * std::log(nn));
                });
        }
        case FamilySpec::Kind::HalfLineTable: {
            std::ifstream in(spec.path);
            if (!in) throw DomainError("cannot open table file: " + spec.path);
            std::stringstream buf;
            buf << in.rdbuf();
            return parse_half_line_table(buf.str());
        }
        case FamilySpec::Kind::FiniteFile: {
            std::ifstream in(spec.path);
            if (!in) throw DomainError("cannot open graph file: " + spec.path);
            std::stringstream buf;
            buf << in.rdbuf();
            return parse_edge_list(buf.str());
        }
    }
    throw DomainError("unknown family kind");
}

int valence_bound(const WeightedGraph& g, const FiniteRegion& region) {
    if (auto hint = g.valence_hint()) return *hint;
    int bound = 0;
    for (VertexId x : region.vertices())
        bound = std::max(bound, static_cast<int>(g.neighbors(x).size()));
    return bound;
}

FiniteRegion combinatorial_ball(const WeightedGraph& g, VertexId x0, int n) {
    if (!g.contains(x0)) throw DomainError("ball center not in graph");
    if (n < 0) throw DomainError("ball radius must be >= 0");
    std::set<VertexId> seen{x0};
    std::vector<VertexId> frontier{x0};
    for (int depth = 0; depth < n && !frontier.empty(); ++depth) {
        std::vector<VertexId> next;
        for (VertexId x : frontier)
            for (VertexId y : g.neighbors(x))
                if (seen.insert(y).second) next.push_back(y);
        frontier = std::move(next);
    }
    return FiniteRegion::from_vertices(g, {seen.begin(), seen.end()});
}

InteriorConnectivity is_connected_interior(const WeightedGraph& g, const FiniteRegion& region) {
    const auto& interior = region.interior();
    if (interior.empty()) return {true, true};
    std::set<VertexId> unvisited(interior.begin(), interior.end());
    std::deque<VertexId> queue{interior.front()};
    unvisited.erase(interior.front());
    while (!queue.empty()) {
        VertexId x = queue.front();
        queue.pop_front();
        for (VertexId y : g.neighbors(x)) {
            auto it = unvisited.find(y);
            if (it != unvisited.end()) {
                unvisited.erase(it);
                queue.push_back(y);
            }
        }
    }
    return {unvisited.empty(), false};
}

}  // namespace graphlap
