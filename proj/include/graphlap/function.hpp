#ifndef GRAPHLAP_FUNCTION_HPP_
#define GRAPHLAP_FUNCTION_HPP_

#include <cmath>
#include <map>

#include "graphlap/graph.hpp"

namespace graphlap {

/// Real function on vertices with finite support; vertices outside the
/// stored map are valued 0. Iteration order is ascending vertex id.
class FiniteSupportFn {
  public:
    FiniteSupportFn() = default;
    explicit FiniteSupportFn(std::map<VertexId, double> values) : values_(std::move(values)) {}

    double operator()(VertexId x) const {
        auto it = values_.find(x);
        return it == values_.end() ? 0.0 : it->second;
    }

    void set(VertexId x, double v) { values_[x] = v; }
    bool in_support(VertexId x) const { return values_.count(x) != 0; }
    std::size_t support_size() const { return values_.size(); }
    bool empty() const { return values_.empty(); }

    const std::map<VertexId, double>& values() const { return values_; }

    double max_abs() const {
        double m = 0.0;
        for (const auto& [v, val] : values_) m = std::max(m, std::abs(val));
        return m;
    }

  private:
    std::map<VertexId, double> values_;
};

}  // namespace graphlap

#endif  // GRAPHLAP_FUNCTION_HPP_
