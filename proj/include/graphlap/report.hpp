#ifndef GRAPHLAP_REPORT_HPP_
#define GRAPHLAP_REPORT_HPP_

#include <nlohmann/json.hpp>
#include <string>

#include "graphlap/esa.hpp"
#include "graphlap/metric.hpp"

namespace graphlap {

inline constexpr const char* kVersion = "graphlap 0.1.0";

using Json = nlohmann::ordered_json;

Json family_json(const FamilySpec& spec);
Json completeness_json(const CompletenessReport& report);
Json probe_json(const ProbeReport& report);

/// CSV of (n, s_n) partial distance sums.
std::string completeness_csv(const CompletenessReport& report);

/// CSV of (n, v_n, partial_l2_log) for a deficiency solution.
std::string deficiency_csv(const DeficiencySolution& sol);

}  // namespace graphlap

#endif  // GRAPHLAP_REPORT_HPP_
