#include "graphlap/report.hpp"

#include <sstream>

#include "graphlap/io.hpp"

namespace graphlap {

namespace {

const char* kind_name(FamilySpec::Kind k) {
    switch (k) {
        case FamilySpec::Kind::HalfLinePower: return "half-line-power";
        case FamilySpec::Kind::HalfLineLog: return "half-line-log";
        case FamilySpec::Kind::HalfLineTable: return "half-line-table";
        default: return "finite-file";
    }
}

// Round-trip-safe numbers: emit as strings formatted with %.17g so the
// output is byte-identical across platforms.
Json num(double x) { return format_double(x); }

}  // namespace

Json family_json(const FamilySpec& spec) {
    Json j;
    j["family"] = kind_name(spec.kind);
    for (const auto& [k, v] : spec.params) j[k] = num(v);
    if (!spec.path.empty()) j["path"] = spec.path;
    return j;
}

Json completeness_json(const CompletenessReport& r) {
    Json j;
    j["family"] = family_json(r.family);
    j["start"] = r.start;
    j["verdict"] = to_string(r.verdict);
    j["numeric_verdict"] = to_string(r.numeric_verdict);
    if (r.closed_form_verdict) j["closed_form_verdict"] = to_string(*r.closed_form_verdict);
    if (r.criterion_exponent) j["criterion_exponent"] = num(*r.criterion_exponent);
    j["fitted_decay_exponent"] = num(r.fitted_decay_exponent);
    j["fitted_log_exponent"] = num(r.fitted_log_exponent);
    j["n_probe"] = r.partial_sums.size();
    if (!r.partial_sums.empty()) j["total_length"] = num(r.partial_sums.back());
    return j;
}

Json probe_json(const ProbeReport& r) {
    Json j;
    j["family"] = family_json(r.family);
    j["mode"] = r.mode == ProbeMode::Laplacian ? "laplacian" : "schrodinger";
    j["lambda"] = num(r.lambda);
    j["omega_constant"] = r.omega_constant;
    if (r.potential_min_sampled) j["potential_min_sampled"] = num(*r.potential_min_sampled);
    if (r.form_bound) j["form_bound"] = num(*r.form_bound);
    j["l2_classification"] = to_string(r.classification);
    j["witness_length"] = r.witness.size();
    if (!r.witness.empty()) {
        j["witness_first"] = r.witness.front();
        j["witness_last"] = r.witness.back();
    }
    Json sands = Json::array();
    for (const auto& s : r.sandwiches) {
        Json e;
        e["radius"] = num(s.radius);
        e["ball_mass"] = num(s.ball_mass);
        e["form_value"] = num(s.form_value);
        e["shell_bound"] = num(s.shell_bound);
        e["ball_size"] = s.ball_size;
        e["outer_size"] = s.outer_size;
        e["holds"] = s.holds;
        sands.push_back(std::move(e));
    }
    j["sandwiches"] = std::move(sands);
    if (r.completeness) j["completeness"] = completeness_json(*r.completeness);
    j["note"] = r.note;
    return j;
}

std::string completeness_csv(const CompletenessReport& r) {
    std::ostringstream out;
    out << "n,s_n\n";
    for (std::size_t i = 0; i < r.partial_sums.size(); ++i)
        out << (r.start + 1 + i) << ',' << format_double(r.partial_sums[i]) << '\n';
    return out.str();
}

std::string deficiency_csv(const DeficiencySolution& sol) {
    std::ostringstream out;
    out << "n,v_n,partial_l2_log\n";
    for (std::size_t i = 0; i < sol.size(); ++i)
        out << (sol.start + i) << ',' << format_double(sol.values[i]) << ','
            << format_double(sol.partial_l2_log[i]) << '\n';
    return out.str();
}

}  // namespace graphlap
