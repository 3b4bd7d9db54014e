#pragma once

#include <iosfwd>
#include <string>

#include "indpoly/graph.hpp"

namespace indpoly {

// Edge-list text format:
//   n m
//   u v        (m lines, 0 <= u < v < n)
// Lines starting with '#' and blank lines are ignored.

/// Throws ParseError on malformed input, GraphError on invalid edges.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);

void write_edge_list(std::ostream& out, const Graph& g);

}  // namespace indpoly
