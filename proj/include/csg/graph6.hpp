#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "csg/graph.hpp"

namespace csg {

// One graph6 record (no trailing newline, no ">>graph6<<" header).
// Accepts the 1-byte (n <= 62) and 4-byte (63 <= n <= 258047) size forms.
Graph parse_graph6(std::string_view record);

// Inverse of parse_graph6; rejects n > 258047.
std::string write_graph6(const Graph& g);

// One record per line; optional ">>graph6<<" prefix on the first line is
// stripped. Parse failures report the 1-based line number.
std::vector<Graph> load_graph6_file(const std::string& path);

}  // namespace csg
