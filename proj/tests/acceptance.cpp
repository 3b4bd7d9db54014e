// One line per acceptance criterion. Exit status is nonzero if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "corpus.hpp"
#include "indpoly/bounds.hpp"
#include "indpoly/errors.hpp"
#include "indpoly/generators.hpp"
#include "indpoly/independence.hpp"
#include "indpoly/roots.hpp"
#include "indpoly/scheme.hpp"
#include "oracles.hpp"

using namespace indpoly;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

int failures = 0;

void report(int id, const std::string& title, double limit_s, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (limit_s > 0 && secs >= limit_s) {
    o.pass = false;
    o.detail += "; over time limit " + std::to_string(limit_s) + " s";
  }
  if (!o.pass) ++failures;
  std::printf("criterion %2d: %s  %s (%s) [%.2f s]\n", id, o.pass ? "PASS" : "FAIL", title.c_str(),
              o.detail.c_str(), secs);
  std::fflush(stdout);
}

const BoundEntry* row(const BoundReport& r, const std::string& name) {
  for (const auto& b : r.bounds)
    if (b.name == name) return &b;
  return nullptr;
}

std::string str(double x, int prec = 10) {
  std::ostringstream s;
  s.precision(prec);
  s << x;
  return s.str();
}

const std::vector<corpus::Entry>& full_corpus() {
  static const auto c = corpus::build();
  return c;
}

}  // namespace

int main() {
  const auto& corpus = full_corpus();
  std::printf("corpus: %zu graphs (seed %llu)\n", corpus.size(),
              static_cast<unsigned long long>(corpus::kSeed));

  report(1, "Schlafli bound table", 5.0, [] {
    const Graph g = gen::schlafli();
    ReportOptions opts;
    opts.compute_lambda1 = true;
    const BoundReport r = bound_report(g, "schlafli", opts);
    const double l1 = r.roots->lambda1.value.real();
    const auto* cf = row(r, "claw_free");
    const auto* cfd = row(r, "claw_free_delta");
    const auto* lr = row(r, "leake_ryder");
    const auto* simp = row(r, "leake_ryder_simplicial");
    const auto* fp = row(r, "fp_optimized");
    const double thm = 1.0 / (17.0 + 2.0 * std::sqrt(40.0));
    bool ok = r.roots->lambda1.real && std::abs(l1 - (-0.0487057)) <= 1e-5;
    ok = ok && cf && cf->applicable && std::abs(cf->value - thm) <= 1e-5 &&
         std::abs(cf->value - 0.033727) <= 1e-5 && cf->sound == true;
    ok = ok && cfd && cfd->exact == "1/33" && cfd->sound == true;
    ok = ok && lr && lr->exact == "1/64" && lr->sound == true;
    ok = ok && fp && fp->sound == true;
    ok = ok && simp && simp->conditional && std::abs(simp->value - 0.05) <= 1e-12 &&
         simp->sound == false && l1 > -0.05;
    return Outcome{ok, "lambda1=" + str(l1) + " thm2=-" + str(cf ? cf->value : 0) +
                           " cor=-" + (cfd ? cfd->exact : "?") + " lr=-" +
                           (lr ? lr->exact : "?") + " simplicial=-" + str(simp ? simp->value : 0) +
                           " flagged " + (simp && simp->sound == false ? "violated" : "sound")};
  });

  report(2, "Schlafli structure", 5.0, [] {
    const Graph g = gen::schlafli();
    bool ok = g.order() == 27 && max_degree(g) == 16 && min_degree(g) == 16;
    ok = ok && is_claw_free(g) && clique_number(g) == 6 && phi_max(g) == 40;
    for (Vertex v = 0; v < 27 && ok; ++v) {
      const VertexSet nb(std::vector<Vertex>(g.neighbors(v).begin(), g.neighbors(v).end()));
      const Graph h = g.induced(nb);
      ok = h.order() == 16 && h.size() == 80 && independent_pairs_in_neighborhood(g, v) == 40;
    }
    return Outcome{ok, "16-regular, claw-free, omega=6, neighbourhoods 16/80, Phi=40"};
  });

  report(3, "forest sum equals Z_G", 600.0, [&] {
    std::size_t bad = 0;
    std::string first;
    for (const auto& e : corpus) {
      const auto fs = forest_sum_polynomial(e.graph, PenroseScheme{});
      const auto z = independence_polynomial(e.graph);
      const auto counts = oracle::independent_set_counts(e.graph);
      bool same = fs == z && z.degree() + 1 == static_cast<int>(counts.size());
      for (std::size_t k = 0; same && k < counts.size(); ++k)
        same = z.coefficient(static_cast<int>(k)) == counts[k];
      if (!same) {
        if (bad++ == 0) first = e.name;
      }
    }
    return Outcome{bad == 0, std::to_string(corpus.size()) + " graphs, " + std::to_string(bad) +
                                 " mismatches" + (bad ? ", first " + first : "")};
  });

  report(4, "partition scheme and Penrose identity", 0, [&] {
    std::size_t graphs = 0, supports = 0, sets = 0, bad = 0;
    std::string first;
    for (const auto& e : corpus) {
      if (e.graph.size() > 10 || !oracle::connected(e.graph)) continue;
      ++graphs;
      const auto v = validate_partition_scheme(e.graph, PenroseScheme{});
      supports += v.supports_checked;
      if (!v.ok() && bad++ == 0) first = e.name + " condition " + std::to_string(v.violations[0].condition);
      for (const auto& r : connected_subsets(e.graph)) {
        ++sets;
        const auto id = penrose_identity_check(e.graph, r);
        const auto ref = oracle::connected_spanning_alternating_sum(e.graph, r.items());
        if ((!id.holds() || id.lhs != ref) && bad++ == 0) first = e.name + " identity";
      }
    }
    return Outcome{bad == 0, std::to_string(graphs) + " connected graphs with |E|<=10, " +
                                 std::to_string(supports) + " supports, " + std::to_string(sets) +
                                 " identities, " + std::to_string(bad) + " failures" +
                                 (bad ? ", first " + first : "")};
  });

  report(5, "special values from invariant forests", 0, [&] {
    std::size_t bad = 0, d_m1 = 0, d_half = 0, d_one = 0;
    std::string first;
    for (const auto& e : corpus) {
      const auto s = special_values(e.graph, PenroseScheme{});
      const auto c = oracle::independent_set_counts(e.graph);
      const bool ok = s.z_minus1.forest_matches() && s.z_minus_half.forest_matches() &&
                      s.z_1.forest_matches() &&
                      s.z_minus1.direct == oracle::evaluate_counts<Rational>(c, Rational(-1)) &&
                      s.z_minus_half.direct ==
                          oracle::evaluate_counts<Rational>(c, Rational(-1, 2)) &&
                      s.z_1.direct == oracle::evaluate_counts<Rational>(c, Rational(1));
      if (!ok && bad++ == 0) first = e.name;
      d_m1 += s.z_minus1.display_matches() ? 0 : 1;
      d_half += s.z_minus_half.display_matches() ? 0 : 1;
      d_one += s.z_1.display_matches() ? 0 : 1;
    }
    return Outcome{bad == 0, std::to_string(bad) + " forest mismatches" +
                                 (bad ? " (first " + first + ")" : "") +
                                 "; closed-formula mismatches: Z(-1) " + std::to_string(d_m1) +
                                 ", Z(-1/2) " + std::to_string(d_half) + ", Z(1) " +
                                 std::to_string(d_one) + " of " + std::to_string(corpus.size())};
  });

  report(6, "zero-free radii are sound", 0, [&] {
    std::size_t bad = 0, claw = 0;
    std::string first;
    for (const auto& e : corpus) {
      const auto z = independence_polynomial(e.graph);
      if (z.degree() < 1) continue;
      const auto roots = all_roots(z);
      const double rmin = std::abs(roots.roots.front().value);
      const double fp = fp_optimized_radius(e.graph).radius;
      bool ok = !(rmin <= fp - 1e-9);
      if (is_claw_free(e.graph) && max_degree(e.graph) >= 1) {
        ++claw;
        ok = ok && !(rmin <= claw_free_bound(e.graph) - 1e-9);
      }
      if (!ok && bad++ == 0) first = e.name;
    }
    return Outcome{bad == 0, std::to_string(claw) + " claw-free graphs, " + std::to_string(bad) +
                                 " violations" + (bad ? ", first " + first : "")};
  });

  report(7, "complete binary tree trend", 30.0, [] {
    const double r3 = 4.0 / 27.0;
    double prev = INFINITY;
    bool ok = true;
    std::string vals;
    for (int d = 1; d <= 8; ++d) {
      const Lambda1 l = lambda1(gen::complete_tree(2, d));
      const double m = std::abs(l.value);
      ok = ok && l.real && m < prev && m > r3;
      prev = m;
      vals += (d > 1 ? " " : "") + str(l.value.real(), 8);
    }
    return Outcome{ok, "lambda1 d=1..8: " + vals + "; r3=" + str(r3, 8)};
  });

  report(8, "claw-free graphs are real-rooted", 0, [&] {
    std::size_t claw = 0, bad = 0;
    std::string first;
    for (const auto& e : corpus) {
      if (!oracle::claw_free(e.graph)) continue;
      ++claw;
      const auto z = independence_polynomial(e.graph);
      if (z.degree() >= 1 && !is_real_rooted(z, 1e-8) && bad++ == 0) first = e.name;
    }
    // K_{1,3}: Z = 1 + 4z + 3z^2 + z^3, discriminant of the cubic is negative.
    const auto star = independence_polynomial(gen::star(3));
    const auto c = star.coefficients();
    const BigInt a = c[3], b = c[2], cc = c[1], d = c[0];
    const BigInt disc = 18 * a * b * cc * d - 4 * b * b * b * d + b * b * cc * cc -
                        4 * a * cc * cc * cc - 27 * a * a * d * d;
    const auto rs = all_roots(star);
    double max_im = 0;
    for (const auto& r : rs.roots) max_im = std::max(max_im, std::abs(r.value.imag()));
    const bool control = disc < 0 && !is_real_rooted(star, 1e-8) && max_im > 1e-2;
    return Outcome{bad == 0 && control,
                   std::to_string(claw) + " claw-free graphs, " + std::to_string(bad) +
                       " not real-rooted" + (bad ? " (first " + first + ")" : "") +
                       "; K_{1,3} discriminant " + disc.str() + ", max |Im| " + str(max_im, 6) +
                       (control ? ", not real-rooted" : ", CONTROL FAILED")};
  });

  report(9, "multivariate Z at -r* is positive", 0, [] {
    std::mt19937_64 rng(corpus::kSeed + 9);
    std::uniform_int_distribution<int> order(1, 8);
    std::uniform_real_distribution<double> act(0.0, 5.0);
    std::size_t bad = 0;
    double smallest = INFINITY;
    for (int i = 0; i < 100; ++i) {
      const Graph g = oracle::random_graph(order(rng), rng);
      std::vector<double> mu(static_cast<std::size_t>(g.order()));
      for (auto& x : mu) x = act(rng);
      const ActivityVector r = fp_polydisc(g, ActivityVector(mu));
      std::vector<double> neg(r.size());
      for (std::size_t v = 0; v < r.size(); ++v) neg[v] = -r[v];
      const double z = multivariate_evaluate(g, ActivityVector(neg));
      const double ref = oracle::multivariate(g, neg);
      if (!(z > 0 && ref > 0)) ++bad;
      smallest = std::min(smallest, z);
    }
    return Outcome{bad == 0, "100 graphs, " + std::to_string(bad) + " violations, smallest " +
                                 str(smallest, 6)};
  });

  report(10, "polymer expansion matches Z_G", 0, [&] {
    const Rational zs[] = {Rational(1), Rational(2), Rational(-1, 2), Rational(1, 3)};
    std::size_t bad = 0;
    std::string first;
    for (const auto& e : corpus) {
      const auto c = oracle::independent_set_counts(e.graph);
      for (const auto& z : zs) {
        if (polymer_partition_function(e.graph, z) != oracle::evaluate_counts<Rational>(c, z) &&
            bad++ == 0)
          first = e.name + " at z=" + z.str();
      }
    }
    return Outcome{bad == 0, std::to_string(corpus.size() * 4) + " evaluations, " +
                                 std::to_string(bad) + " mismatches" +
                                 (bad ? ", first " + first : "")};
  });

  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
