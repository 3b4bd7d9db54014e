#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "indpoly/graph.hpp"
#include "indpoly/polynomial.hpp"

namespace indpoly {

/// Size guard for the vertex-deletion recursion. Graphs with at most
/// `max_vertices` vertices always run to completion; larger graphs are
/// refused (GuardError) once the memo table grows past `memo_budget`.
struct RecursionGuard {
  int max_vertices = 64;
  std::size_t memo_budget = std::size_t{1} << 20;
};

/// Per-vertex activities (z_v or mu_v), one finite value per vertex.
class ActivityVector {
 public:
  ActivityVector() = default;
  explicit ActivityVector(std::vector<double> values);
  /// Same activity on each of n vertices.
  static ActivityVector uniform(int n, double value);

  std::size_t size() const { return values_.size(); }
  double operator[](std::size_t v) const { return values_[v]; }
  std::span<const double> values() const { return values_; }
  bool nonnegative() const;

  bool operator==(const ActivityVector&) const = default;

 private:
  std::vector<double> values_;
};

/// Z_G(z) = sum over independent sets S of z^|S|, exactly.
///
/// Uses Z_G = Z_{G-v} + z Z_{G-N[v]} with v of maximum degree in the current
/// induced subgraph (ties to the smallest index), factorising over connected
/// components and memoising on induced vertex subsets.
IntPolynomial independence_polynomial(const Graph& g, const RecursionGuard& guard = {});

/// Sum over independent sets S of prod_{v in S} z_v.
double multivariate_evaluate(const Graph& g, const ActivityVector& z,
                             const RecursionGuard& guard = {});
Rational multivariate_evaluate(const Graph& g, std::span<const Rational> z,
                               const RecursionGuard& guard = {});

/// phi_v as a polynomial in mu: the independence polynomial of the subgraph
/// induced by the neighbourhood of v (constant term 1 for the empty set).
IntPolynomial neighborhood_polynomial(const Graph& g, Vertex v);

/// phi_v(mu) with a common activity mu >= 0.
double phi_v(const Graph& g, Vertex v, double mu);
/// phi_v(mu) with per-vertex activities; only entries of the neighbourhood are read.
double phi_v(const Graph& g, Vertex v, const ActivityVector& mu);

}  // namespace indpoly
