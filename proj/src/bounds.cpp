#include "indpoly/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "indpoly/errors.hpp"

namespace indpoly {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::string rational_string(const Rational& q) { return q.str(); }

void require_claw_free(const Graph& g, const char* what) {
  if (!is_claw_free(g)) throw DomainError(std::string(what) + ": graph is not claw-free");
}

// The distinct phi_v polynomials of g as double coefficient vectors.
class PhiFamily {
 public:
  explicit PhiFamily(const Graph& g) {
    std::vector<IntPolynomial> seen;
    for (Vertex v = 0; v < g.order(); ++v) {
      IntPolynomial p = neighborhood_polynomial(g, v);
      if (std::find(seen.begin(), seen.end(), p) != seen.end()) continue;
      std::vector<double> c;
      for (const auto& k : p.coefficients()) c.push_back(k.convert_to<double>());
      polys_.push_back(std::move(c));
      seen.push_back(std::move(p));
    }
  }

  double max_at(double mu) const {
    double best = 0.0;
    for (const auto& c : polys_) {
      double acc = 0.0;
      for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * mu + *it;
      best = std::max(best, acc);
    }
    return best;
  }

  double objective(double mu) const { return mu / (mu + max_at(mu)); }

 private:
  std::vector<std::vector<double>> polys_;
};

bool all_neighbourhoods_cliques(const Graph& g) {
  for (Vertex v = 0; v < g.order(); ++v) {
    if (independent_pairs_in_neighborhood(g, v) > 0) return false;
  }
  return true;
}

OptimizedRadius golden_section(const PhiFamily& phi) {
  constexpr int kGrid = 200;
  const double lo = std::log(1e-6);
  const double hi = std::log(1e6);
  const double step = (hi - lo) / (kGrid - 1);
  int best = 0;
  double best_value = -1.0;
  for (int i = 0; i < kGrid; ++i) {
    const double v = phi.objective(std::exp(lo + step * i));
    if (v > best_value) {
      best_value = v;
      best = i;
    }
  }
  double a = lo + step * std::max(best - 1, 0);
  double b = lo + step * std::min(best + 1, kGrid - 1);
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = phi.objective(std::exp(c));
  double fd = phi.objective(std::exp(d));
  // Width in log mu is the relative width in mu.
  while (b - a > 1e-10) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = phi.objective(std::exp(c));
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = phi.objective(std::exp(d));
    }
  }
  OptimizedRadius out;
  out.mu_star = std::exp((a + b) / 2);
  out.radius = phi.objective(out.mu_star);
  out.method = "golden-section";
  const double grid_mu = std::exp(lo + step * best);
  if (best_value > out.radius) {
    out.mu_star = grid_mu;
    out.radius = best_value;
  }
  return out;
}

}  // namespace

double shearer_radius(int delta) {
  if (delta < 2) throw DomainError("shearer_radius: max degree must be at least 2");
  const double d = delta;
  return std::exp((d - 1) * std::log(d - 1) - d * std::log(d));
}

double triangle_free_radius(int delta) {
  if (delta < 2) throw DomainError("triangle_free_radius: max degree must be at least 2");
  const double r = shearer_radius(delta);
  return r / (1 + r);
}

double fp_univariate_radius(const Graph& g, double mu) {
  if (!(mu > 0.0)) throw DomainError("fp_univariate_radius: mu must be positive");
  if (g.order() == 0) throw DomainError("fp_univariate_radius: graph has no vertices");
  return PhiFamily(g).objective(mu);
}

OptimizedRadius fp_optimized_radius(const Graph& g) {
  if (g.order() == 0) throw DomainError("fp_optimized_radius: graph has no vertices");
  const int delta = max_degree(g);
  if (all_neighbourhoods_cliques(g)) {
    return {1.0 / (delta + 1), kInf, "limit"};
  }
  const long long phi = phi_max(g);
  if (is_claw_free(g)) {
    bool attained = false;
    for (Vertex v = 0; v < g.order() && !attained; ++v) {
      attained = g.degree(v) == delta && independent_pairs_in_neighborhood(g, v) == phi;
    }
    if (attained) {
      const double mu = 1.0 / std::sqrt(static_cast<double>(phi));
      return {1.0 / (delta + 1 + 2 * std::sqrt(static_cast<double>(phi))), mu, "closed-form"};
    }
  }
  return golden_section(PhiFamily(g));
}

ActivityVector fp_polydisc(const Graph& g, const ActivityVector& mu) {
  if (mu.size() != static_cast<std::size_t>(g.order())) {
    throw std::invalid_argument("fp_polydisc: activity vector length does not match the graph");
  }
  if (!mu.nonnegative()) throw DomainError("fp_polydisc: activities must be nonnegative");
  std::vector<double> r;
  for (Vertex v = 0; v < g.order(); ++v) {
    const double m = mu[static_cast<std::size_t>(v)];
    r.push_back(m / (m + phi_v(g, v, mu)));
  }
  return ActivityVector(std::move(r));
}

double claw_free_bound(const Graph& g) {
  require_claw_free(g, "claw_free_bound");
  const int delta = max_degree(g);
  if (delta < 1) throw DomainError("claw_free_bound: graph has no edges");
  return 1.0 / (delta + 1 + 2 * std::sqrt(static_cast<double>(phi_max(g))));
}

double claw_free_delta_bound(const Graph& g) {
  require_claw_free(g, "claw_free_delta_bound");
  return 1.0 / (2 * max_degree(g) + 1);
}

double leake_ryder_bound(const Graph& g) {
  require_claw_free(g, "leake_ryder_bound");
  const int omega = clique_number(g);
  const int delta_min = min_degree(g);
  if (omega <= 1 && delta_min == 0) throw DomainError("leake_ryder_bound: graph is edgeless");
  return 1.0 / (4 * std::max(omega - 1, delta_min));
}

double leake_ryder_simplicial_bound(const Graph& g) {
  const int omega = clique_number(g);
  if (omega < 2) throw DomainError("leake_ryder_simplicial_bound: clique number below 2");
  return 1.0 / (4 * (omega - 1));
}

double heilmann_lieb_bound(int delta) {
  if (delta < 1) throw DomainError("heilmann_lieb_bound: max degree must be at least 1");
  return 1.0 / (2 * delta);
}

GraphDescriptor describe(const Graph& g, std::string name) {
  GraphDescriptor d;
  d.name = std::move(name);
  d.n = g.order();
  d.m = g.size();
  d.delta = max_degree(g);
  d.delta_min = min_degree(g);
  d.phi = phi_max(g);
  d.claw_free = is_claw_free(g);
  d.triangle_free = is_triangle_free(g);
  try {
    d.omega = clique_number(g);
  } catch (const GuardError&) {
    d.omega = -1;
  }
  return d;
}

bool respects(const Lambda1& l, double radius, double tol) {
  return std::abs(l.value) >= radius - tol;
}

BoundReport bound_report(const Graph& g, const std::string& name, const ReportOptions& opts) {
  BoundReport rep;
  rep.graph = describe(g, name);
  rep.polynomial = independence_polynomial(g, opts.guard);
  if (opts.compute_lambda1 && rep.polynomial.degree() >= 1) {
    rep.roots = all_roots(rep.polynomial, opts.root_options);
  }
  const GraphDescriptor& d = rep.graph;

  auto add = [&](BoundEntry e) { rep.bounds.push_back(std::move(e)); };
  auto row = [](std::string name, std::string source, std::string technique) {
    BoundEntry e;
    e.name = std::move(name);
    e.source = std::move(source);
    e.technique = std::move(technique);
    return e;
  };
  auto exact_unit = [](long long den) { return rational_string(Rational(1, den)); };

  {
    BoundEntry e = row("shearer", "Shearer", "max degree");
    if (d.delta >= 2) {
      e.applicable = true;
      e.value = shearer_radius(d.delta);
      e.exact = rational_string(Rational(pow(BigInt(d.delta - 1), d.delta - 1),
                                         pow(BigInt(d.delta), d.delta)));
      e.params = {{"delta", d.delta}};
    } else {
      e.note = "max degree < 2";
    }
    add(std::move(e));
  }
  {
    BoundEntry e = row("triangle_free", "Shearer", "triangle-free, max degree");
    if (!d.triangle_free) {
      e.note = "not triangle-free";
    } else if (d.delta < 2) {
      e.note = "max degree < 2";
    } else {
      e.applicable = true;
      e.value = triangle_free_radius(d.delta);
      const Rational r(pow(BigInt(d.delta - 1), d.delta - 1), pow(BigInt(d.delta), d.delta));
      e.exact = rational_string(r / (1 + r));
      e.params = {{"delta", d.delta}, {"mu_star", 1.0 / (d.delta - 1)}};
    }
    add(std::move(e));
  }
  if (d.n > 0) {
    BoundEntry e = row("fp_optimized", "FP", "univariate criterion, optimized mu");
    const OptimizedRadius o = fp_optimized_radius(g);
    e.applicable = true;
    e.value = o.radius;
    e.params = {{"mu_star", o.mu_star}};
    e.note = o.method;
    if (o.method == "limit") e.exact = exact_unit(d.delta + 1);
    add(std::move(e));
  }
  if (opts.mu && d.n > 0) {
    BoundEntry e = row("fp_univariate", "FP", "univariate criterion, given mu");
    if (*opts.mu > 0) {
      e.applicable = true;
      e.value = fp_univariate_radius(g, *opts.mu);
    } else {
      e.note = "mu must be positive";
    }
    e.params = {{"mu", *opts.mu}};
    add(std::move(e));
  }
  {
    BoundEntry e = row("claw_free", "FP", "claw-free, max degree and Phi");
    if (!d.claw_free) {
      e.note = "not claw-free";
    } else if (d.delta < 1) {
      e.note = "no edges";
    } else {
      e.applicable = true;
      e.value = claw_free_bound(g);
      const auto root = static_cast<long long>(std::llround(std::sqrt(static_cast<double>(d.phi))));
      if (root * root == d.phi) e.exact = exact_unit(d.delta + 1 + 2 * root);
      const double mu = d.phi > 0 ? 1.0 / std::sqrt(static_cast<double>(d.phi)) : kInf;
      e.params = {{"phi", static_cast<double>(d.phi)},
                  {"mu_star", mu},
                  {"phi_v_linear", d.delta},
                  {"denominator_linear", d.delta + 1}};
    }
    add(std::move(e));
  }
  {
    BoundEntry e = row("claw_free_delta", "FP", "claw-free, max degree");
    if (!d.claw_free) {
      e.note = "not claw-free";
    } else {
      e.applicable = true;
      e.value = claw_free_delta_bound(g);
      e.exact = exact_unit(2 * d.delta + 1);
      e.params = {{"delta", d.delta}};
    }
    add(std::move(e));
  }
  {
    BoundEntry e = row("leake_ryder", "LR", "claw-free, clique number and min degree");
    if (!d.claw_free) {
      e.note = "not claw-free";
    } else if (d.omega < 0) {
      e.note = "clique number not computed (graph too large)";
    } else if (d.omega <= 1 && d.delta_min == 0) {
      e.note = "edgeless";
    } else {
      e.applicable = true;
      e.value = leake_ryder_bound(g);
      e.exact = exact_unit(4LL * std::max(d.omega - 1, d.delta_min));
      e.params = {{"omega", d.omega}, {"delta_min", d.delta_min}};
    }
    add(std::move(e));
  }
  {
    BoundEntry e = row("leake_ryder_simplicial", "LR", "simplicial clique, clique number");
    e.conditional = true;
    if (d.omega < 0) {
      e.note = "clique number not computed (graph too large)";
    } else if (d.omega < 2) {
      e.note = "clique number < 2";
    } else {
      e.applicable = true;
      e.value = leake_ryder_simplicial_bound(g);
      e.exact = exact_unit(4LL * (d.omega - 1));
      e.params = {{"omega", d.omega}};
      e.note = "requires a simplicial clique (not checked)";
    }
    add(std::move(e));
  }
  {
    BoundEntry e = row("heilmann_lieb", "HL", "line graph, max degree");
    e.conditional = true;
    if (d.delta < 1) {
      e.note = "no edges";
    } else {
      e.applicable = true;
      e.value = heilmann_lieb_bound(d.delta);
      e.exact = exact_unit(2LL * d.delta);
      e.params = {{"delta", d.delta}};
      e.note = "requires a line graph (not checked)";
    }
    add(std::move(e));
  }

  if (rep.roots) {
    for (auto& e : rep.bounds) {
      if (e.applicable) e.sound = respects(rep.roots->lambda1, e.value, opts.tolerance);
    }
  }
  return rep;
}

}  // namespace indpoly
