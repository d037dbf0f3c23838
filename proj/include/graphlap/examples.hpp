#ifndef GRAPHLAP_EXAMPLES_HPP_
#define GRAPHLAP_EXAMPLES_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "graphlap/report.hpp"

namespace graphlap {

struct RunRecord {
    Json record;
    bool all_passed = false;
};

std::vector<std::string> example_names();

/// Runs one of the built-in worked examples end to end and records every
/// check (expected vs computed, tolerance, pass flag). Throws DomainError
/// for unknown names. n_max bounds the closed-form sweeps; seed drives the
/// randomized conjugation trials.
RunRecord run_example(const std::string& name, int n_max = 10000,
                      std::uint64_t seed = 12345);

}  // namespace graphlap

#endif  // GRAPHLAP_EXAMPLES_HPP_
