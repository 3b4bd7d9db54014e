#pragma once

#include <complex>
#include <utility>
#include <vector>

#include "indpoly/graph.hpp"
#include "indpoly/independence.hpp"
#include "indpoly/polynomial.hpp"

namespace indpoly {

struct RootOptions {
  /// Bound on |p(r)| / (sum_k |c_k| * max(1,|r|)^deg) for every reported root.
  double residual_tol = 1e-12;
  /// Roots with |Im| < real_snap * (1 + |Re|) are reported as real.
  double real_snap = 1e-8;
  int max_iterations = 2000;
};

struct Root {
  std::complex<double> value;
  int multiplicity = 1;

  bool operator==(const Root&) const = default;
};

/// Root of smallest modulus.
struct Lambda1 {
  std::complex<double> value;
  bool real = false;
  /// Set when the minimal modulus is attained by a non-real conjugate pair;
  /// `value` is then the member with positive imaginary part.
  bool conjugate_pair = false;

  bool operator==(const Lambda1&) const = default;
};

struct RootSet {
  /// Sorted by modulus, then |Im|, then real part.
  std::vector<Root> roots;
  /// Largest scaled residual over the reported roots.
  double residual = 0.0;
  Lambda1 lambda1;

  int root_count() const;

  bool operator==(const RootSet&) const = default;
};

/// p = prod_i factor_i^i with each factor squarefree (Yun). Factors equal to
/// a constant are omitted; the constant content is dropped.
std::vector<std::pair<IntPolynomial, int>> squarefree_factorization(const IntPolynomial& p);

/// All complex roots with multiplicities: squarefree factorisation, then
/// Aberth-Ehrlich iteration on each factor. Precision is raised (long double,
/// then MPFR at 50 up to 1000 digits) until every root has an inclusion disc
/// of relative radius below 1e-17. Near-real roots are snapped to the axis.
/// Throws std::invalid_argument for constant or zero input, NumericError when
/// the residual bound cannot be met.
RootSet all_roots(const IntPolynomial& p, const RootOptions& opts = {});

/// Smallest-modulus root of the independence polynomial of g.
Lambda1 lambda1(const Graph& g, const RootOptions& opts = {}, const RecursionGuard& guard = {});

/// True iff every root has |Im| < tol once snapping is applied.
bool is_real_rooted(const IntPolynomial& p, double tol = 1e-8);

}  // namespace indpoly
