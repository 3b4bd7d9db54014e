#include "indpoly/independence.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <unordered_map>

#include "indpoly/errors.hpp"
#include "vertex_mask.hpp"

namespace indpoly {

using detail::VertexMask;

ActivityVector::ActivityVector(std::vector<double> values) : values_(std::move(values)) {
  for (double x : values_) {
    if (!std::isfinite(x)) throw std::invalid_argument("activity values must be finite");
  }
}

ActivityVector ActivityVector::uniform(int n, double value) {
  return ActivityVector(std::vector<double>(static_cast<std::size_t>(n), value));
}

bool ActivityVector::nonnegative() const {
  return std::all_of(values_.begin(), values_.end(), [](double x) { return x >= 0.0; });
}

namespace {

// Z(S) = Z(S - v) + w_v * Z(S - N[v]) over induced vertex subsets S.
// `Ring` supplies one(), add, multiply and the weighted shift for vertex v.
template <class Value, class Ring>
class DeletionRecursion {
 public:
  DeletionRecursion(const Graph& g, Ring ring, const RecursionGuard& guard)
      : g_(g), ring_(std::move(ring)), guard_(guard) {
    const int n = g.order();
    nbr_.reserve(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) {
      VertexMask m(n);
      for (Vertex w : g.neighbors(v)) m.set(w);
      nbr_.push_back(std::move(m));
    }
  }

  Value run() { return solve(VertexMask::full(g_.order())); }

 private:
  Value solve(const VertexMask& s) {
    const int first = s.first();
    if (first < 0) return ring_.one();
    if (s.next(first) < 0) return ring_.add(ring_.one(), ring_.weighted(first, ring_.one()));

    if (auto it = memo_.find(s); it != memo_.end()) return it->second;

    Value result = ring_.one();
    const VertexMask comp = component_of(s, first);
    if (comp.count() < s.count()) {
      VertexMask rest = s;
      rest.subtract(comp);
      result = ring_.multiply(solve(comp), solve(rest));
    } else {
      int pivot = -1;
      int best = -1;
      s.for_each([&](int v) {
        const int d = nbr_[static_cast<std::size_t>(v)].intersection_count(s);
        if (d > best) {
          best = d;
          pivot = v;
        }
      });
      VertexMask without = s;
      without.reset(pivot);
      VertexMask outside = without;
      outside.subtract(nbr_[static_cast<std::size_t>(pivot)]);
      result = ring_.add(solve(without), ring_.weighted(pivot, solve(outside)));
    }

    if (g_.order() > guard_.max_vertices && memo_.size() >= guard_.memo_budget) {
      throw GuardError("independence recursion exceeded memo budget of " +
                       std::to_string(guard_.memo_budget) + " subsets on a graph with " +
                       std::to_string(g_.order()) + " vertices");
    }
    memo_.emplace(s, result);
    return result;
  }

  VertexMask component_of(const VertexMask& s, int start) const {
    VertexMask comp(g_.order());
    comp.set(start);
    std::vector<int> stack{start};
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      VertexMask fresh = nbr_[static_cast<std::size_t>(x)] & s;
      fresh.subtract(comp);
      fresh.for_each([&](int y) {
        comp.set(y);
        stack.push_back(y);
      });
    }
    return comp;
  }

  const Graph& g_;
  Ring ring_;
  RecursionGuard guard_;
  std::vector<VertexMask> nbr_;
  std::unordered_map<VertexMask, Value, detail::VertexMaskHash> memo_;
};

struct PolynomialRing {
  IntPolynomial one() const { return IntPolynomial::constant(1); }
  IntPolynomial add(const IntPolynomial& a, const IntPolynomial& b) const { return a + b; }
  IntPolynomial multiply(const IntPolynomial& a, const IntPolynomial& b) const { return a * b; }
  IntPolynomial weighted(int, const IntPolynomial& x) const { return x.shifted(1); }
};

template <class T>
struct ActivityRing {
  std::span<const T> z;
  T one() const { return T(1); }
  T add(const T& a, const T& b) const { return a + b; }
  T multiply(const T& a, const T& b) const { return a * b; }
  T weighted(int v, const T& x) const { return z[static_cast<std::size_t>(v)] * x; }
};

void check_length(const Graph& g, std::size_t len) {
  if (len != static_cast<std::size_t>(g.order())) {
    throw std::invalid_argument("activity vector has length " + std::to_string(len) +
                                ", graph has " + std::to_string(g.order()) + " vertices");
  }
}

}  // namespace

IntPolynomial independence_polynomial(const Graph& g, const RecursionGuard& guard) {
  return DeletionRecursion<IntPolynomial, PolynomialRing>(g, {}, guard).run();
}

double multivariate_evaluate(const Graph& g, const ActivityVector& z, const RecursionGuard& guard) {
  check_length(g, z.size());
  return DeletionRecursion<double, ActivityRing<double>>(g, {z.values()}, guard).run();
}

Rational multivariate_evaluate(const Graph& g, std::span<const Rational> z,
                               const RecursionGuard& guard) {
  check_length(g, z.size());
  return DeletionRecursion<Rational, ActivityRing<Rational>>(g, {z}, guard).run();
}

IntPolynomial neighborhood_polynomial(const Graph& g, Vertex v) {
  const auto nb = g.neighbors(v);
  return independence_polynomial(g.induced(VertexSet(std::vector<Vertex>(nb.begin(), nb.end()))));
}

double phi_v(const Graph& g, Vertex v, double mu) {
  g.check_vertex(v);
  if (!(mu >= 0.0)) throw DomainError("phi_v: mu must be nonnegative");
  const IntPolynomial p = neighborhood_polynomial(g, v);
  return evaluate(p, std::complex<double>(mu, 0.0)).real();
}

double phi_v(const Graph& g, Vertex v, const ActivityVector& mu) {
  g.check_vertex(v);
  check_length(g, mu.size());
  const auto nb = g.neighbors(v);
  std::vector<double> local;
  for (Vertex w : nb) {
    if (!(mu[static_cast<std::size_t>(w)] >= 0.0)) {
      throw DomainError("phi_v: activities must be nonnegative");
    }
    local.push_back(mu[static_cast<std::size_t>(w)]);
  }
  const Graph sub = g.induced(VertexSet(std::vector<Vertex>(nb.begin(), nb.end())));
  return multivariate_evaluate(sub, ActivityVector(std::move(local)));
}

}  // namespace indpoly
