#ifndef GRAPHLAP_IO_HPP_
#define GRAPHLAP_IO_HPP_

#include <memory>
#include <string>

#include "graphlap/function.hpp"
#include "graphlap/graph.hpp"

namespace graphlap {

/// `key = value` lines; keys: family, alpha, beta, epsilon, start,
/// conductance-offset, path. `#` starts a comment.
FamilySpec parse_family_config(const std::string& text);

/// Edge-list format, one item per line:
///   `u v c_uv`     edge with conductance
///   `w u omega_u`  vertex weight (vertex must appear in some edge line first
///                  or be introduced by an earlier weight line)
/// `#` starts a comment. Unweighted vertices default to omega = 1.
std::shared_ptr<const FiniteGraph> parse_edge_list(const std::string& text);

/// Rows `n omega_n c_n` (c_n = conductance of edge {n, n+1}); consecutive n.
/// The last row's c is the dangling edge coefficient and is ignored.
std::shared_ptr<const FiniteGraph> parse_half_line_table(const std::string& text);

/// Lines `vertex value`.
FiniteSupportFn parse_fn(const std::string& text);

/// Fixed 17-significant-digit formatting for deterministic CSV/JSON output.
std::string format_double(double x);

std::string fn_to_csv(const FiniteSupportFn& f, const std::string& header = "vertex,value");

void write_text_file(const std::string& path, const std::string& content);

}  // namespace graphlap

#endif  // GRAPHLAP_IO_HPP_
