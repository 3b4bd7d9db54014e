#include <doctest.h>

#include <random>
#include <sstream>

#include "indpoly/edge_list.hpp"
#include "indpoly/errors.hpp"
#include "indpoly/generators.hpp"
#include "indpoly/graph.hpp"
#include "oracles.hpp"

using namespace indpoly;

TEST_CASE("edges are normalised and indexed in lexicographic order") {
  const Graph g(4, {{2, 1}, {0, 3}, {1, 0}});
  REQUIRE(g.size() == 3);
  CHECK(g.edge(0) == Edge{0, 1});
  CHECK(g.edge(1) == Edge{0, 3});
  CHECK(g.edge(2) == Edge{1, 2});
  CHECK(g.edge_index(3, 0) == 1);
  CHECK(g.edge_index(2, 3) == -1);
  CHECK(g.degree(0) == 2);
  CHECK(g.adjacent(2, 1));
}

TEST_CASE("invalid graphs are rejected") {
  CHECK_THROWS_AS(Graph(3, {{0, 0}}), GraphError);
  CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), GraphError);
  CHECK_THROWS_AS(Graph(3, {{0, 3}}), GraphError);
  CHECK_THROWS_AS(Graph(-1, {}), GraphError);
  CHECK_THROWS_AS(VertexSet({1, 1}), GraphError);
  CHECK_THROWS_AS(VertexSet({-1}), GraphError);
  CHECK_THROWS_AS(gen::path(3).neighbors(5), GraphError);
}

TEST_CASE("induced subgraph relabels in set order") {
  const Graph g = gen::cycle(5);
  const Graph h = g.induced(VertexSet{4, 0, 1});
  CHECK(h.order() == 3);
  CHECK(h == Graph(3, {{0, 1}, {0, 2}}));
}

TEST_CASE("generator sizes") {
  CHECK(gen::path(5).size() == 4);
  CHECK(gen::cycle(6).size() == 6);
  CHECK(gen::complete(6).size() == 15);
  CHECK(gen::star(4).order() == 5);
  CHECK(gen::complete_tree(2, 3).order() == 15);
  CHECK(gen::complete_tree(3, 0).order() == 1);
  CHECK(gen::petersen().size() == 15);
  CHECK(max_degree(gen::petersen()) == 3);
  CHECK(min_degree(gen::petersen()) == 3);
  CHECK(gen::generate("complete_tree:2,2") == gen::complete_tree(2, 2));
  CHECK(gen::generate("petersen") == gen::petersen());
  CHECK_THROWS_AS(gen::generate("nonsense:3"), ParseError);
  CHECK_THROWS_AS(gen::generate("star:x"), ParseError);
  CHECK_THROWS_AS(gen::generate("star:1,2"), ParseError);
  CHECK_THROWS_AS(gen::generate("cycle:2"), GraphError);
}

TEST_CASE("petersen has girth 5 and is not claw-free") {
  const Graph g = gen::petersen();
  CHECK(is_triangle_free(g));
  CHECK_FALSE(is_claw_free(g));
  CHECK(clique_number(g) == 2);
  // no 4-cycles: adjacent pairs share no neighbour, others share exactly one
  for (Vertex u = 0; u < 10; ++u)
    for (Vertex v = u + 1; v < 10; ++v) {
      int common = 0;
      for (Vertex w : g.neighbors(u)) common += g.adjacent(v, w) ? 1 : 0;
      CHECK(common == (g.adjacent(u, v) ? 0 : 1));
    }
}

TEST_CASE("schlafli graph is strongly regular (27, 16, 10, 8)") {
  const Graph g = gen::schlafli();
  REQUIRE(g.order() == 27);
  CHECK(g.size() == 216);
  for (Vertex u = 0; u < 27; ++u) {
    CHECK(g.degree(u) == 16);
    for (Vertex v = u + 1; v < 27; ++v) {
      int common = 0;
      for (Vertex w : g.neighbors(u)) common += g.adjacent(v, w) ? 1 : 0;
      CHECK(common == (g.adjacent(u, v) ? 10 : 8));
    }
  }
}

TEST_CASE("schlafli invariants against brute force") {
  const Graph g = gen::schlafli();
  CHECK(oracle::claw_free(g));
  CHECK(is_claw_free(g));
  CHECK(oracle::phi(g) == 40);
  CHECK(phi_max(g) == 40);
  CHECK(clique_number(g) == 6);
  for (Vertex v = 0; v < 27; ++v) {
    const VertexSet nb(std::vector<Vertex>(g.neighbors(v).begin(), g.neighbors(v).end()));
    const Graph h = g.induced(nb);
    CHECK(h.order() == 16);
    CHECK(h.size() == 80);
  }
}

TEST_CASE("claw-freeness, clique number and Phi agree with brute force on random graphs") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 300; ++i) {
    const Graph g = oracle::random_graph(2 + i % 8, rng, 0.3 + 0.1 * (i % 5));
    CHECK(is_claw_free(g) == oracle::claw_free(g));
    CHECK(clique_number(g) == oracle::clique_number(g));
    CHECK(phi_max(g) == oracle::phi(g));
  }
}

TEST_CASE("clique number guard") {
  const Graph big = gen::complete(70);
  CHECK_THROWS_AS(clique_number(big), GuardError);
  CHECK_THROWS_AS(clique_number(gen::complete(10), 5), GuardError);
  // Triangle-free graphs are answered without search.
  CHECK(clique_number(gen::complete_tree(2, 6)) == 2);
  CHECK(clique_number(gen::edgeless(100)) == 1);
  CHECK(clique_number(Graph()) == 0);
}

TEST_CASE("line graph, complement, disjoint union") {
  const Graph l = line_graph(gen::star(3));
  CHECK(l == gen::complete(3));
  CHECK(line_graph(gen::cycle(5)).size() == 5);
  CHECK(complement(gen::complete(4)).size() == 0);
  CHECK(complement(gen::cycle(5)).size() == 5);
  const Graph u = disjoint_union(gen::path(2), gen::path(3));
  CHECK(u.order() == 5);
  CHECK(u.size() == 3);
  CHECK(u.adjacent(3, 4));
  CHECK_THROWS_AS(line_graph(gen::edgeless(3)), GraphError);
}

TEST_CASE("connectivity of vertex subsets") {
  const Graph g = gen::path(5);
  CHECK(is_connected(g, VertexSet{1, 2, 3}));
  CHECK_FALSE(is_connected(g, VertexSet{0, 2}));
  CHECK_FALSE(is_connected(g, VertexSet{}));
  CHECK(is_connected(g, VertexSet{4}));
  CHECK(is_independent(g, VertexSet{0, 2, 4}));
  CHECK_FALSE(is_independent(g, VertexSet{0, 1}));
}

TEST_CASE("edge list round trip") {
  const Graph g = gen::petersen();
  std::stringstream s;
  write_edge_list(s, g);
  CHECK(read_edge_list(s) == g);

  std::istringstream commented("# a triangle\n3 3\n\n0 1\n1 2\n0 2\n");
  CHECK(read_edge_list(commented) == gen::complete(3));
}

TEST_CASE("edge list errors") {
  auto parse = [](const std::string& text) {
    std::istringstream in(text);
    return read_edge_list(in);
  };
  CHECK_THROWS_AS(parse(""), ParseError);
  CHECK_THROWS_AS(parse("3 2\n0 1\n"), ParseError);
  CHECK_THROWS_AS(parse("3 1\n1 0\n"), ParseError);
  CHECK_THROWS_AS(parse("3 1\n0 x\n"), ParseError);
  CHECK_THROWS_AS(parse("3 1\n0 1\n1 2\n"), ParseError);
  CHECK_THROWS_AS(parse("3 2\n0 1\n0 1\n"), ParseError);
  CHECK_THROWS_AS(read_edge_list_file("/nonexistent/graph.txt"), ParseError);
}
