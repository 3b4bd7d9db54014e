#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "indpoly/graph.hpp"
#include "indpoly/polynomial.hpp"

namespace indpoly {

/// Sorted ids of host-graph edges (positions in Graph::edges()).
using EdgeSet = std::vector<int>;

/// Connected acyclic nonempty edge set of a host graph.
class Tree {
 public:
  /// GraphError if `edges` is empty, has an unknown or repeated id, or is not
  /// a tree.
  Tree(const Graph& g, EdgeSet edges);

  const EdgeSet& edges() const { return edges_; }
  const VertexSet& vertices() const { return vertices_; }
  std::size_t size() const { return edges_.size(); }

  bool operator==(const Tree&) const = default;

 private:
  EdgeSet edges_;
  VertexSet vertices_;
};

/// Trees with pairwise disjoint supports. The empty forest is allowed.
class Forest {
 public:
  Forest() = default;
  /// GraphError if two supports intersect.
  explicit Forest(std::vector<Tree> trees);

  const std::vector<Tree>& trees() const { return trees_; }
  /// |F|
  std::size_t edge_count() const;
  /// ||F||
  std::size_t tree_count() const { return trees_.size(); }
  /// |V_F| = |F| + ||F||
  std::size_t support_size() const { return edge_count() + tree_count(); }
  VertexSet support() const;
  EdgeSet edges() const;

  bool operator==(const Forest&) const = default;

 private:
  std::vector<Tree> trees_;
};

/// A map m from trees to edge sets. The intervals [tau, m(tau)], tau over the
/// spanning trees of R, must partition the connected spanning edge sets of R
/// for every connected R; validate_partition_scheme checks this.
class PartitionScheme {
 public:
  virtual ~PartitionScheme() = default;
  virtual std::string name() const = 0;
  virtual EdgeSet map(const Graph& g, const Tree& tau) const = 0;
  /// Union of the images of the component trees; empty for the empty forest.
  EdgeSet map(const Graph& g, const Forest& f) const;
};

/// Root tau at its smallest vertex and let d be the depth in tau. m(tau) adds
/// every edge of the host inside V_tau joining two vertices of equal depth,
/// and every edge {x, y} with d(y) = d(x) + 1 and x > parent(y).
class PenroseScheme final : public PartitionScheme {
 public:
  using PartitionScheme::map;
  std::string name() const override { return "penrose"; }
  EdgeSet map(const Graph& g, const Tree& tau) const override;
};

/// penrose_map(g, tau) == PenroseScheme{}.map(g, tau).
EdgeSet penrose_map(const Graph& g, const Tree& tau);

/// Enumeration limits. Edge subsets of an induced subgraph are enumerated only
/// with at most `max_edges` edges (INDPOLY_GUARD_EDGES overrides the default
/// of 24). Forest enumeration needs n <= max_vertices or |E| <= max_edges.
struct SchemeLimits {
  int max_edges = default_max_edges();
  int max_vertices = 14;
  std::size_t max_forests = 20'000'000;
  std::size_t max_supports = 2'000'000;

  /// 24, or the value of INDPOLY_GUARD_EDGES (1..63). ParseError on a bad value.
  static int default_max_edges();
};

/// Connected vertex subsets of size >= min_size, in lexicographic order.
std::vector<VertexSet> connected_subsets(const Graph& g, std::size_t min_size = 2,
                                         const SchemeLimits& limits = {});

/// Edge sets E inside r with V_E = r and (r, E) connected, in increasing
/// order of their bit masks over the edges of r.
/// DomainError unless r is connected with |r| >= 2; GuardError over the edge limit.
std::vector<EdgeSet> connected_spanning_subsets(const Graph& g, const VertexSet& r,
                                                const SchemeLimits& limits = {});

/// Spanning trees of the subgraph induced by r. Same errors as above.
std::vector<Tree> spanning_trees(const Graph& g, const VertexSet& r,
                                 const SchemeLimits& limits = {});

struct SchemeViolation {
  VertexSet support;
  /// Condition number: 1 m(empty) = empty, 2 tau within m(tau) on the same
  /// vertices, 3 interval partition, 4 forests map to the union.
  int condition = 0;
  std::string detail;
};

struct ValidationReport {
  std::size_t supports_checked = 0;
  std::size_t trees_checked = 0;
  std::size_t forests_checked = 0;
  std::vector<SchemeViolation> violations;

  bool ok() const { return violations.empty(); }
};

/// Checks every connected R (|R| >= 2) exhaustively: each connected spanning
/// edge set of R lies in exactly one interval [tau, m(tau)], and no interval
/// leaves the connected spanning sets. Condition 4 is checked on all forests
/// of two trees taken as the first spanning trees of disjoint supports.
ValidationReport validate_partition_scheme(const Graph& g, const PartitionScheme& m,
                                           const SchemeLimits& limits = {});

struct IdentityCheck {
  /// sum over connected spanning E of (-1)^|E|
  BigInt lhs;
  /// (-1)^(|R|-1) times the number of spanning trees with m(tau) = tau
  BigInt rhs;
  std::size_t invariant_trees = 0;

  bool holds() const { return lhs == rhs; }
};

IdentityCheck penrose_identity_check(const Graph& g, const VertexSet& r,
                                     const PartitionScheme& m = PenroseScheme{},
                                     const SchemeLimits& limits = {});

/// Calls `visit` on every forest whose trees all satisfy m(tau) = tau,
/// starting with the empty forest. Trees inside a forest are ordered by their
/// smallest vertex. GuardError past the limits.
void for_each_invariant_forest(const Graph& g, const PartitionScheme& m,
                               const std::function<void(const Forest&)>& visit,
                               const SchemeLimits& limits = {});

std::vector<Forest> invariant_forests(const Graph& g, const PartitionScheme& m,
                                      const SchemeLimits& limits = {});

/// sum over invariant forests F of (-1)^|F| z^|V_F| (1+z)^(n-|V_F|).
IntPolynomial forest_sum_polynomial(const Graph& g, const PartitionScheme& m,
                                    const SchemeLimits& limits = {});

struct SpecialValue {
  /// From the forest-sum expansion.
  Rational forest;
  /// From the closed formula in terms of (-1)^||F||.
  Rational display;
  /// Z_G evaluated directly.
  Rational direct;

  bool forest_matches() const { return forest == direct; }
  bool display_matches() const { return display == direct; }
};

/// Z(-1), Z(-1/2), Z(1) three ways.
///   Z(-1):   forest = display = sum over spanning F (|V_F| = n) of (-1)^||F||
///   Z(-1/2): forest = display = 2^-n sum_F (-1)^||F||
///   Z(1):    forest = sum_F (-1)^|F| 2^(n - |V_F|);  display = 2^n sum_F (-1)^||F||
/// The Z(1) display disagrees with the direct value in general (K2: 0 vs 3).
struct SpecialValues {
  SpecialValue z_minus1;
  SpecialValue z_minus_half;
  SpecialValue z_1;
};

SpecialValues special_values(const Graph& g, const PartitionScheme& m,
                             const SchemeLimits& limits = {});

/// (1+z)^n Xi_G(z), where Xi_G sums over families of disjoint connected
/// R (|R| >= 2) the product of
///   zeta(R) = (z/(1+z))^|R| * sum over connected spanning E of R of (-1)^|E|.
/// DomainError at z = -1.
Rational polymer_partition_function(const Graph& g, const Rational& z,
                                    const SchemeLimits& limits = {});

}  // namespace indpoly
