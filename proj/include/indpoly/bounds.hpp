#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "indpoly/graph.hpp"
#include "indpoly/independence.hpp"
#include "indpoly/polynomial.hpp"
#include "indpoly/roots.hpp"

namespace indpoly {

// All radii below are positive numbers r. Read as a zero-free disc they say
// Z_G(z) != 0 for |z| < r; read as a bound on the smallest root they say
// lambda_1 <= -r.

/// (D-1)^(D-1) / D^D. DomainError for D < 2.
double shearer_radius(int delta);

/// max over mu > 0 of mu / (mu + (1+mu)^D), which is r/(1+r) with r the
/// Shearer radius (attained at mu = 1/(D-1)). DomainError for D < 2.
double triangle_free_radius(int delta);

/// min over v of mu / (mu + phi_v(mu)). DomainError unless mu > 0.
double fp_univariate_radius(const Graph& g, double mu);

struct OptimizedRadius {
  double radius = 0.0;
  /// +infinity when the supremum is only reached as mu grows without bound.
  double mu_star = 0.0;
  /// "closed-form", "limit" or "golden-section".
  std::string method;
};

/// Supremum of fp_univariate_radius over mu in (0, inf).
///
/// Claw-free graphs where one vertex has both degree D and Phi independent
/// neighbour pairs (Phi > 0) use mu* = 1/sqrt(Phi). If every neighbourhood is
/// a clique the objective increases in mu and the limit 1/(D+1) is returned.
/// Anything else: 200-point log grid on [1e-6, 1e6], then golden section on
/// log mu around the best grid point (relative tolerance 1e-10).
OptimizedRadius fp_optimized_radius(const Graph& g);

/// r*_v = mu_v / (mu_v + phi_v(mu)) with the multivariate phi_v.
/// DomainError on a negative entry.
ActivityVector fp_polydisc(const Graph& g, const ActivityVector& mu);

/// 1 / (D + 1 + 2 sqrt(Phi)). Claw-free graphs with D >= 1 only.
double claw_free_bound(const Graph& g);
/// 1 / (2D + 1). Claw-free only.
double claw_free_delta_bound(const Graph& g);
/// 1 / (4 max(omega - 1, delta)). Claw-free, not edgeless.
double leake_ryder_bound(const Graph& g);
/// 1 / (4 (omega - 1)); only valid for simplicial graphs, which is not checked.
double leake_ryder_simplicial_bound(const Graph& g);
/// 1 / (2D). The caller vouches that the graph is a line graph.
double heilmann_lieb_bound(int delta);

struct GraphDescriptor {
  std::string name;
  int n = 0;
  std::size_t m = 0;
  int delta = 0;
  int delta_min = 0;
  /// -1 when the clique search was refused by its size guard.
  int omega = -1;
  long long phi = 0;
  bool claw_free = false;
  bool triangle_free = false;

  bool operator==(const GraphDescriptor&) const = default;
};

GraphDescriptor describe(const Graph& g, std::string name);

struct BoundEntry {
  std::string name;
  /// Table columns.
  std::string source;
  std::string technique;
  double value = 0.0;
  /// Rational form of value when it is exactly rational, e.g. "1/33".
  std::string exact;
  bool applicable = false;
  /// Hypothesis not verified by the program (simplicial, line graph).
  bool conditional = false;
  /// Failed hypothesis for inapplicable rows, caveat for conditional ones.
  std::string note;
  std::vector<std::pair<std::string, double>> params;
  /// Set when lambda_1 is known and the row is applicable.
  std::optional<bool> sound;

  bool operator==(const BoundEntry&) const = default;
};

struct BoundReport {
  GraphDescriptor graph;
  IntPolynomial polynomial;
  std::optional<RootSet> roots;
  std::vector<BoundEntry> bounds;

  bool operator==(const BoundReport&) const = default;
};

struct ReportOptions {
  bool compute_lambda1 = false;
  /// Adds an fp_univariate row evaluated at this mu.
  std::optional<double> mu;
  RootOptions root_options;
  /// Slack used in the soundness comparisons.
  double tolerance = 1e-9;
  RecursionGuard guard;
};

/// Every bound above for g, inapplicable ones flagged with the failed
/// hypothesis. Rows appear in a fixed order.
BoundReport bound_report(const Graph& g, const std::string& name, const ReportOptions& opts = {});

/// |lambda_1| >= r - tol. Real roots of Z_G are negative, so for real lambda_1
/// this is lambda_1 <= -r + tol.
bool respects(const Lambda1& l, double radius, double tol = 1e-9);

}  // namespace indpoly
