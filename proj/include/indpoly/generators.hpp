#pragma once

#include <string>
#include <string_view>

#include "indpoly/graph.hpp"

namespace indpoly::gen {

// Vertex labellings are fixed so fixtures built on them stay stable:
//  path/cycle     0-1-...-(n-1) (cycle closes with {0,n-1})
//  star(k)        centre 0, leaves 1..k
//  complete_tree  breadth-first, children of v are b*v+1 .. b*v+b
//  petersen       outer cycle 0..4, spokes i~i+5, inner pentagram 5+i~5+(i+2)%5
//  schlafli       a1..a6 = 0..5, b1..b6 = 6..11, c_ij (i<j, lexicographic) = 12..26

Graph edgeless(int n);
Graph path(int n);
Graph cycle(int n);
Graph complete(int n);
Graph star(int k);
/// Complete rooted tree with the given branching factor; depth 0 is one vertex.
Graph complete_tree(int branching, int depth);
Graph petersen();
/// Complement of the intersection graph of the 27 lines on a cubic surface.
Graph schlafli();

/// Parses `name` or `name:p1,p2,...` (e.g. `complete_tree:2,6`, `star:3`).
/// Throws ParseError for unknown names and GraphError for bad parameters.
Graph generate(std::string_view spec);

}  // namespace indpoly::gen
