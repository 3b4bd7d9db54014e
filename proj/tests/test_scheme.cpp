#include <doctest.h>

#include <cstdlib>
#include <random>

#include "indpoly/errors.hpp"
#include "indpoly/generators.hpp"
#include "indpoly/independence.hpp"
#include "indpoly/scheme.hpp"
#include "oracles.hpp"

using namespace indpoly;

namespace {

// Maps every tree to itself. Intervals are single points, so connected
// spanning sets that are not trees are never covered.
class IdentityScheme final : public PartitionScheme {
 public:
  using PartitionScheme::map;
  std::string name() const override { return "identity"; }
  EdgeSet map(const Graph&, const Tree& tau) const override { return tau.edges(); }
};

// Maps every tree to the whole induced edge set; intervals overlap.
class FullScheme final : public PartitionScheme {
 public:
  using PartitionScheme::map;
  std::string name() const override { return "full"; }
  EdgeSet map(const Graph& g, const Tree& tau) const override {
    EdgeSet out;
    for (int i = 0; i < static_cast<int>(g.size()); ++i) {
      const auto& e = g.edge(i);
      if (tau.vertices().contains(e.u) && tau.vertices().contains(e.v)) out.push_back(i);
    }
    return out;
  }
};

bool has_condition(const ValidationReport& r, int c) {
  for (const auto& v : r.violations)
    if (v.condition == c) return true;
  return false;
}

}  // namespace

TEST_CASE("tree and forest construction") {
  const Graph g = gen::cycle(4);  // edges 0:{0,1} 1:{0,3} 2:{1,2} 3:{2,3}
  const Tree t(g, {0, 2});
  CHECK(t.vertices() == VertexSet{0, 1, 2});
  CHECK_THROWS_AS(Tree(g, {}), GraphError);
  CHECK_THROWS_AS(Tree(g, {0, 1, 2, 3}), GraphError);
  CHECK_THROWS_AS(Tree(g, {0, 3}), GraphError);
  CHECK_THROWS_AS(Tree(g, {0, 0}), GraphError);
  CHECK_THROWS_AS(Tree(g, {7}), GraphError);

  const Forest f({Tree(g, {0})});
  CHECK(f.edge_count() == 1);
  CHECK(f.tree_count() == 1);
  CHECK(f.support_size() == 2);
  CHECK_THROWS_AS(Forest({Tree(g, {0}), Tree(g, {2})}), GraphError);
  const Forest two({Tree(g, {0}), Tree(g, {3})});
  CHECK(two.support_size() == 4);
  CHECK(two.edges() == EdgeSet{0, 3});
  CHECK(Forest().support_size() == 0);
}

TEST_CASE("penrose map on a triangle") {
  const Graph g = gen::complete(3);  // edges 0:{0,1} 1:{0,2} 2:{1,2}
  // Star at 0: both children at depth 1, the edge between them is added.
  CHECK(penrose_map(g, Tree(g, {0, 1})) == EdgeSet{0, 1, 2});
  // Path 0-1-2: 2 hangs off 1; {0,2} joins depths 0 and 2, not added.
  CHECK(penrose_map(g, Tree(g, {0, 2})) == EdgeSet{0, 2});
  // Path 0-2-1: 1 hangs off 2 and 0 is not > 2.
  CHECK(penrose_map(g, Tree(g, {1, 2})) == EdgeSet{1, 2});
  CHECK(PenroseScheme{}.map(g, Forest()).empty());
}

TEST_CASE("penrose map on a 4-cycle with chord") {
  // 0-1-2-3-0 plus chord 1-3
  const Graph g(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {1, 3}});
  const int e01 = g.edge_index(0, 1), e03 = g.edge_index(0, 3), e12 = g.edge_index(1, 2),
            e13 = g.edge_index(1, 3), e23 = g.edge_index(2, 3);
  // Rooted at 0: 1 and 3 at depth 1, 2 child of 1. {1,3} same depth, {3,2}
  // joins depth 1 to 2 with 3 > parent(2) = 1.
  EdgeSet t{e01, e03, e12};
  std::sort(t.begin(), t.end());
  EdgeSet all{e01, e03, e12, e13, e23};
  std::sort(all.begin(), all.end());
  CHECK(penrose_map(g, Tree(g, t)) == all);
  // 2 child of 3 instead: {1,2} joins depth 1 to 2 but 1 < parent(2) = 3.
  EdgeSet u{e01, e03, e23};
  std::sort(u.begin(), u.end());
  EdgeSet expect{e01, e03, e13, e23};
  std::sort(expect.begin(), expect.end());
  CHECK(penrose_map(g, Tree(g, u)) == expect);
}

TEST_CASE("connected subsets and spanning trees") {
  const Graph g = gen::path(4);
  const auto subs = connected_subsets(g);
  CHECK(subs.size() == 6);
  CHECK(subs.front() == VertexSet{0, 1});
  CHECK(connected_subsets(g, 1).size() == 10);
  CHECK(spanning_trees(gen::complete(5), VertexSet{0, 1, 2, 3, 4}).size() == 125);
  CHECK(connected_spanning_subsets(gen::complete(3), VertexSet{0, 1, 2}).size() == 4);
  CHECK_THROWS_AS(spanning_trees(g, VertexSet{0, 2}), DomainError);
  CHECK_THROWS_AS(spanning_trees(g, VertexSet{1}), DomainError);
  SchemeLimits small;
  small.max_edges = 5;
  CHECK_THROWS_AS(connected_spanning_subsets(gen::complete(5), VertexSet{0, 1, 2, 3, 4}, small),
                  GuardError);
}

TEST_CASE("spanning tree counts agree with the matrix-tree theorem") {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 60; ++i) {
    const Graph g = oracle::random_graph(3 + i % 5, rng, 0.6);
    for (const auto& r : connected_subsets(g)) {
      CHECK(BigInt(spanning_trees(g, r).size()) == oracle::spanning_tree_count(g, r.items()));
    }
  }
}

TEST_CASE("penrose is a partition scheme") {
  for (const Graph& g : {gen::complete(5), gen::petersen(), gen::cycle(6), gen::star(4),
                         Graph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {1, 3}})}) {
    const auto v = validate_partition_scheme(g, PenroseScheme{});
    CHECK(v.ok());
    CHECK(v.supports_checked == connected_subsets(g).size());
  }
}

TEST_CASE("broken schemes are caught") {
  const Graph g = gen::complete(4);
  const auto id = validate_partition_scheme(g, IdentityScheme{});
  CHECK_FALSE(id.ok());
  CHECK(has_condition(id, 3));
  const auto full = validate_partition_scheme(g, FullScheme{});
  CHECK_FALSE(full.ok());
  CHECK(has_condition(full, 3));
  // On a forest the only connected spanning sets are the trees themselves.
  CHECK(validate_partition_scheme(gen::path(5), IdentityScheme{}).ok());
}

TEST_CASE("penrose identity against direct alternating sums") {
  std::mt19937_64 rng(29);
  for (int i = 0; i < 40; ++i) {
    const Graph g = oracle::random_graph(3 + i % 5, rng, 0.5);
    for (const auto& r : connected_subsets(g)) {
      const auto c = penrose_identity_check(g, r);
      CHECK(c.holds());
      CHECK(c.lhs == oracle::connected_spanning_alternating_sum(g, r.items()));
    }
  }
  // K_n: (-1)^(n-1) (n-1)!
  const auto k5 = penrose_identity_check(gen::complete(5), VertexSet{0, 1, 2, 3, 4});
  CHECK(k5.lhs == 24);
  CHECK(k5.invariant_trees == 24);
  const auto c4 = penrose_identity_check(gen::cycle(4), VertexSet{0, 1, 2, 3});
  CHECK(c4.lhs == -3);
}

TEST_CASE("invariant forests") {
  const Graph g = gen::complete(3);
  const auto fs = invariant_forests(g, PenroseScheme{});
  // empty, three single edges, and the two paths fixed by the map
  CHECK(fs.front().tree_count() == 0);
  for (const auto& f : fs) {
    for (const auto& t : f.trees()) CHECK(penrose_map(g, t) == t.edges());
  }
  CHECK(fs.size() == 1 + 3 + 2);
}

TEST_CASE("forest sum equals the independence polynomial") {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 80; ++i) {
    const Graph g = oracle::random_graph(1 + i % 8, rng);
    CHECK(forest_sum_polynomial(g, PenroseScheme{}) == independence_polynomial(g));
  }
  CHECK(forest_sum_polynomial(gen::petersen(), PenroseScheme{}) ==
        independence_polynomial(gen::petersen()));
  CHECK(forest_sum_polynomial(gen::complete(6), PenroseScheme{}) == IntPolynomial{1, 6});
}

TEST_CASE("special values") {
  const auto s = special_values(gen::cycle(4), PenroseScheme{});
  CHECK(s.z_minus1.direct == -1);
  CHECK(s.z_minus_half.direct == Rational(-1, 2));
  CHECK(s.z_1.direct == 7);
  CHECK(s.z_minus1.forest_matches());
  CHECK(s.z_minus_half.forest_matches());
  CHECK(s.z_1.forest_matches());
  CHECK(s.z_minus1.display_matches());
  CHECK(s.z_minus_half.display_matches());
  // The closed form for Z(1) in terms of (-1)^||F|| does not hold.
  CHECK(s.z_1.display == -128);
  CHECK_FALSE(s.z_1.display_matches());

  const auto k2 = special_values(gen::complete(2), PenroseScheme{});
  CHECK(k2.z_1.direct == 3);
  CHECK(k2.z_1.display == 0);
}

TEST_CASE("polymer expansion") {
  const Rational zs[] = {Rational(1), Rational(2), Rational(-1, 2), Rational(1, 3),
                         Rational(-3, 7)};
  std::mt19937_64 rng(37);
  for (int i = 0; i < 40; ++i) {
    const Graph g = oracle::random_graph(1 + i % 7, rng);
    const auto c = oracle::independent_set_counts(g);
    for (const auto& z : zs)
      CHECK(polymer_partition_function(g, z) == oracle::evaluate_counts<Rational>(c, z));
  }
  CHECK_THROWS_AS(polymer_partition_function(gen::path(2), Rational(-1)), DomainError);
}

TEST_CASE("guard limits") {
  SchemeLimits tiny;
  tiny.max_vertices = 3;
  tiny.max_edges = 3;
  CHECK_THROWS_AS(forest_sum_polynomial(gen::complete(6), PenroseScheme{}, tiny), GuardError);
  CHECK_THROWS_AS(validate_partition_scheme(gen::complete(6), PenroseScheme{}, tiny), GuardError);
}

TEST_CASE("edge guard from the environment") {
  ::setenv("INDPOLY_GUARD_EDGES", "12", 1);
  CHECK(SchemeLimits::default_max_edges() == 12);
  ::setenv("INDPOLY_GUARD_EDGES", "abc", 1);
  CHECK_THROWS_AS(SchemeLimits::default_max_edges(), ParseError);
  ::setenv("INDPOLY_GUARD_EDGES", "0", 1);
  CHECK_THROWS_AS(SchemeLimits::default_max_edges(), ParseError);
  ::unsetenv("INDPOLY_GUARD_EDGES");
  CHECK(SchemeLimits::default_max_edges() == 24);
}
