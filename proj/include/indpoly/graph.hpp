#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace indpoly {

using Vertex = int;

struct Edge {
  Vertex u;
  Vertex v;

  auto operator<=>(const Edge&) const = default;
};

/// Sorted, duplicate-free set of vertex indices.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> vs);
  explicit VertexSet(std::vector<Vertex> vs);

  std::size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }
  bool contains(Vertex v) const;

  auto begin() const { return items_.begin(); }
  auto end() const { return items_.end(); }
  Vertex operator[](std::size_t i) const { return items_[i]; }
  const std::vector<Vertex>& items() const { return items_; }

  bool operator==(const VertexSet&) const = default;
  auto operator<=>(const VertexSet&) const = default;

 private:
  std::vector<Vertex> items_;
};

/// Immutable finite simple graph on vertices 0..n-1.
///
/// Edges are stored normalized (u < v) in lexicographic order; an edge's
/// position in that order is its index, which the forest and partition-scheme
/// code uses as a stable edge identifier.
class Graph {
 public:
  Graph() = default;
  /// Throws GraphError on self-loops, duplicates or out-of-range endpoints.
  Graph(int n, std::vector<Edge> edges);

  int order() const { return n_; }
  std::size_t size() const { return edges_.size(); }

  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int id) const { return edges_[static_cast<std::size_t>(id)]; }

  std::span<const Vertex> neighbors(Vertex v) const;
  int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }
  bool adjacent(Vertex u, Vertex v) const;
  /// Index of edge {u,v}, or -1.
  int edge_index(Vertex u, Vertex v) const;

  /// Subgraph induced by `vs`, relabelled so that vs[i] becomes vertex i.
  Graph induced(const VertexSet& vs) const;

  void check_vertex(Vertex v) const;

  bool operator==(const Graph& other) const {
    return n_ == other.n_ && edges_ == other.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adj_;
  // Dense edge-index lookup, -1 where there is no edge.
  std::vector<int> index_;
};

int max_degree(const Graph& g);
int min_degree(const Graph& g);

bool is_independent(const Graph& g, const VertexSet& s);

/// True iff no vertex has three pairwise non-adjacent neighbours.
bool is_claw_free(const Graph& g);
bool is_triangle_free(const Graph& g);

/// Number of non-adjacent pairs inside the neighbourhood of v.
long long independent_pairs_in_neighborhood(const Graph& g, Vertex v);
/// Maximum of independent_pairs_in_neighborhood over all vertices.
long long phi_max(const Graph& g);

/// Exact clique number. Graphs with a triangle and more than `max_vertices`
/// (at most 64) vertices give GuardError.
int clique_number(const Graph& g, int max_vertices = 64);

/// Vertices of the result are the edges of g in index order.
Graph line_graph(const Graph& g);
Graph complement(const Graph& g);
Graph disjoint_union(const Graph& a, const Graph& b);

/// True iff r is nonempty and induces a connected subgraph.
bool is_connected(const Graph& g, const VertexSet& r);

}  // namespace indpoly
