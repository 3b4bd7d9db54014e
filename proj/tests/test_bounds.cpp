#include <doctest.h>

#include <cmath>
#include <random>

#include "indpoly/bounds.hpp"
#include "indpoly/errors.hpp"
#include "indpoly/generators.hpp"
#include "oracles.hpp"

using namespace indpoly;

namespace {

const BoundEntry& row(const BoundReport& r, const std::string& name) {
  for (const auto& b : r.bounds)
    if (b.name == name) return b;
  FAIL("missing row " << name);
  return r.bounds.front();
}

}  // namespace

TEST_CASE("shearer and triangle-free radii") {
  CHECK(shearer_radius(2) == doctest::Approx(0.25));
  CHECK(shearer_radius(3) == doctest::Approx(4.0 / 27.0));
  CHECK(shearer_radius(16) == doctest::Approx(std::pow(15.0, 15) / std::pow(16.0, 16)));
  const double r = shearer_radius(3);
  CHECK(triangle_free_radius(3) == doctest::Approx(r / (1 + r)));
  // The maximiser of mu/(mu + (1+mu)^D) on a grid.
  double best = 0;
  for (int i = 1; i < 200000; ++i) {
    const double mu = i * 1e-5;
    best = std::max(best, mu / (mu + std::pow(1 + mu, 3)));
  }
  CHECK(triangle_free_radius(3) == doctest::Approx(best).epsilon(1e-8));
  CHECK_THROWS_AS(shearer_radius(1), DomainError);
  CHECK_THROWS_AS(triangle_free_radius(0), DomainError);
}

TEST_CASE("univariate FP radius") {
  const Graph g = gen::cycle(5);
  CHECK(fp_univariate_radius(g, 1.0) == doctest::Approx(oracle::fp_objective(g, 1.0)));
  CHECK_THROWS_AS(fp_univariate_radius(g, 0.0), DomainError);
  CHECK_THROWS_AS(fp_univariate_radius(g, -1.0), DomainError);
}

TEST_CASE("optimized FP radius against a dense grid") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 40; ++i) {
    const Graph g = oracle::random_graph(3 + i % 5, rng);
    if (g.size() == 0) continue;
    const auto opt = fp_optimized_radius(g);
    const double grid = oracle::fp_grid_max(g, 4001);
    CHECK(opt.radius >= grid - 1e-9);
    CHECK(opt.radius == doctest::Approx(grid).epsilon(1e-5));
  }
}

TEST_CASE("optimized FP radius on named graphs") {
  SUBCASE("schlafli uses the closed form") {
    const auto opt = fp_optimized_radius(gen::schlafli());
    CHECK(opt.method == "closed-form");
    CHECK(opt.mu_star == doctest::Approx(1 / std::sqrt(40.0)));
    CHECK(opt.radius == doctest::Approx(1 / (17 + 2 * std::sqrt(40.0))));
  }
  SUBCASE("cliques reach 1/(D+1) only in the limit") {
    const auto opt = fp_optimized_radius(gen::complete(5));
    CHECK(opt.method == "limit");
    CHECK(std::isinf(opt.mu_star));
    CHECK(opt.radius == doctest::Approx(0.2));
  }
  SUBCASE("triangle-free regular graphs match r/(1+r)") {
    const auto opt = fp_optimized_radius(gen::petersen());
    CHECK(opt.method == "golden-section");
    CHECK(opt.radius == doctest::Approx(triangle_free_radius(3)).epsilon(1e-9));
    CHECK(opt.mu_star == doctest::Approx(0.5).epsilon(1e-4));
  }
}

TEST_CASE("polydisc") {
  const Graph g = gen::path(3);
  const ActivityVector r = fp_polydisc(g, ActivityVector({1.0, 2.0, 3.0}));
  CHECK(r[0] == doctest::Approx(1.0 / (1.0 + 3.0)));
  CHECK(r[1] == doctest::Approx(2.0 / (2.0 + 2.0 * 4.0)));
  CHECK(r[2] == doctest::Approx(3.0 / (3.0 + 3.0)));
  CHECK_THROWS_AS(fp_polydisc(g, ActivityVector({1.0, -1.0, 1.0})), DomainError);

  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> act(0.0, 5.0);
  for (int i = 0; i < 50; ++i) {
    const Graph h = oracle::random_graph(1 + i % 8, rng);
    std::vector<double> mu(static_cast<std::size_t>(h.order()));
    for (auto& x : mu) x = act(rng);
    const ActivityVector rs = fp_polydisc(h, ActivityVector(mu));
    std::vector<double> neg(rs.size());
    for (std::size_t v = 0; v < rs.size(); ++v) neg[v] = -rs[v];
    CHECK(oracle::multivariate(h, neg) > 0);
  }
}

TEST_CASE("claw-free bounds") {
  const Graph s = gen::schlafli();
  CHECK(claw_free_bound(s) == doctest::Approx(1 / (17 + 2 * std::sqrt(40.0))));
  CHECK(claw_free_delta_bound(s) == doctest::Approx(1.0 / 33));
  CHECK(leake_ryder_bound(s) == doctest::Approx(1.0 / 64));
  CHECK(leake_ryder_simplicial_bound(s) == doctest::Approx(1.0 / 20));
  CHECK(heilmann_lieb_bound(4) == doctest::Approx(1.0 / 8));
  CHECK_THROWS_AS(claw_free_bound(gen::star(3)), DomainError);
  CHECK_THROWS_AS(claw_free_delta_bound(gen::petersen()), DomainError);
  CHECK_THROWS_AS(leake_ryder_bound(gen::star(4)), DomainError);
  // Cycle: D = 2, Phi = 1.
  CHECK(claw_free_bound(gen::cycle(6)) == doctest::Approx(1.0 / 5));
}

TEST_CASE("bound report for the schlafli graph") {
  ReportOptions opts;
  opts.compute_lambda1 = true;
  const BoundReport r = bound_report(gen::schlafli(), "schlafli", opts);
  CHECK(r.graph.n == 27);
  CHECK(r.graph.m == 216);
  CHECK(r.graph.delta == 16);
  CHECK(r.graph.omega == 6);
  CHECK(r.graph.phi == 40);
  CHECK(r.graph.claw_free);
  REQUIRE(r.roots.has_value());
  CHECK(r.roots->lambda1.value.real() == doctest::Approx(-0.0487057).epsilon(1e-5));

  CHECK(row(r, "claw_free").sound == true);
  CHECK(row(r, "claw_free").value == doctest::Approx(0.033727).epsilon(1e-4));
  CHECK(row(r, "claw_free_delta").exact == "1/33");
  CHECK(row(r, "leake_ryder").exact == "1/64");
  CHECK(row(r, "leake_ryder").sound == true);
  CHECK(row(r, "shearer").sound == true);
  CHECK(row(r, "fp_optimized").note == "closed-form");
  const auto& simp = row(r, "leake_ryder_simplicial");
  CHECK(simp.conditional);
  CHECK(simp.exact == "1/20");
  CHECK(simp.sound == false);
  CHECK(row(r, "heilmann_lieb").conditional);

  std::vector<std::string> names;
  for (const auto& b : r.bounds) names.push_back(b.name);
  CHECK(names == std::vector<std::string>{"shearer", "triangle_free", "fp_optimized", "claw_free",
                                          "claw_free_delta", "leake_ryder",
                                          "leake_ryder_simplicial", "heilmann_lieb"});
}

TEST_CASE("bound report flags failed hypotheses") {
  ReportOptions opts;
  opts.mu = 0.5;
  const BoundReport r = bound_report(gen::star(3), "star:3", opts);
  CHECK_FALSE(r.roots.has_value());
  CHECK_FALSE(row(r, "claw_free").applicable);
  CHECK(row(r, "claw_free").note.find("claw-free") != std::string::npos);
  CHECK(row(r, "triangle_free").applicable);
  CHECK(row(r, "fp_univariate").applicable);
  CHECK(row(r, "fp_univariate").value == doctest::Approx(fp_univariate_radius(gen::star(3), 0.5)));
  for (const auto& b : r.bounds) CHECK_FALSE(b.sound.has_value());

  const BoundReport e = bound_report(gen::edgeless(3), "edgeless:3");
  CHECK_FALSE(row(e, "shearer").applicable);
}

TEST_CASE("respects") {
  Lambda1 l;
  l.value = {-0.1, 0.0};
  l.real = true;
  CHECK(respects(l, 0.1));
  CHECK(respects(l, 0.05));
  CHECK_FALSE(respects(l, 0.2));
  CHECK(respects(l, 0.1 + 1e-10));
}
