#pragma once

#include <iosfwd>
#include <string>

#include "extremal/graph.hpp"

namespace extremal {

// Edge-list format: one "u v" pair per line, whitespace-separated,
// 0-indexed; '#' starts a comment. DIMACS-like format: "c" comments,
// a "p edge <n> <m>" header, then "e u v" lines, 1-indexed. Both are
// normalized to the internal 0-indexed form; a pair and its reverse
// count as the same edge and are deduplicated.
Graph read_graph(std::istream& in, const std::string& name = "<stream>");
Graph read_graph_file(const std::string& path);

void write_edge_list(std::ostream& out, const Graph& g);
void write_edge_list_file(const std::string& path, const Graph& g);

} // namespace extremal
