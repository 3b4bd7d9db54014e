#include "indpoly/graph.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>

#include "indpoly/errors.hpp"

namespace indpoly {

VertexSet::VertexSet(std::initializer_list<Vertex> vs)
    : VertexSet(std::vector<Vertex>(vs)) {}

VertexSet::VertexSet(std::vector<Vertex> vs) : items_(std::move(vs)) {
  std::sort(items_.begin(), items_.end());
  if (std::adjacent_find(items_.begin(), items_.end()) != items_.end()) {
    throw GraphError("vertex set contains a duplicate index");
  }
  if (!items_.empty() && items_.front() < 0) {
    throw GraphError("vertex set contains a negative index");
  }
}

bool VertexSet::contains(Vertex v) const {
  return std::binary_search(items_.begin(), items_.end(), v);
}

Graph::Graph(int n, std::vector<Edge> edges) : n_(n) {
  if (n < 0) throw GraphError("negative vertex count");
  for (auto& e : edges) {
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n) {
      throw GraphError("edge endpoint out of range: {" + std::to_string(e.u) +
                       "," + std::to_string(e.v) + "}");
    }
    if (e.u == e.v) {
      throw GraphError("self-loop at vertex " + std::to_string(e.u));
    }
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges.begin(), edges.end());
  if (auto dup = std::adjacent_find(edges.begin(), edges.end());
      dup != edges.end()) {
    throw GraphError("duplicate edge {" + std::to_string(dup->u) + "," +
                     std::to_string(dup->v) + "}");
  }
  edges_ = std::move(edges);

  const auto un = static_cast<std::size_t>(n);
  adj_.assign(un, {});
  index_.assign(un * un, -1);
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const auto [u, v] = edges_[i];
    adj_[static_cast<std::size_t>(u)].push_back(v);
    adj_[static_cast<std::size_t>(v)].push_back(u);
    index_[static_cast<std::size_t>(u) * un + static_cast<std::size_t>(v)] =
        static_cast<int>(i);
    index_[static_cast<std::size_t>(v) * un + static_cast<std::size_t>(u)] =
        static_cast<int>(i);
  }
  for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

void Graph::check_vertex(Vertex v) const {
  if (v < 0 || v >= n_) {
    throw GraphError("vertex " + std::to_string(v) + " out of range for graph of order " +
                     std::to_string(n_));
  }
}

std::span<const Vertex> Graph::neighbors(Vertex v) const {
  check_vertex(v);
  return adj_[static_cast<std::size_t>(v)];
}

bool Graph::adjacent(Vertex u, Vertex v) const { return edge_index(u, v) >= 0; }

int Graph::edge_index(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  return index_[static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) +
                static_cast<std::size_t>(v)];
}

Graph Graph::induced(const VertexSet& vs) const {
  for (Vertex v : vs) check_vertex(v);
  std::vector<Edge> sub;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      if (adjacent(vs[i], vs[j])) {
        sub.push_back({static_cast<Vertex>(i), static_cast<Vertex>(j)});
      }
    }
  }
  return Graph(static_cast<int>(vs.size()), std::move(sub));
}

int max_degree(const Graph& g) {
  int d = 0;
  for (Vertex v = 0; v < g.order(); ++v) d = std::max(d, g.degree(v));
  return d;
}

int min_degree(const Graph& g) {
  if (g.order() == 0) return 0;
  int d = g.degree(0);
  for (Vertex v = 1; v < g.order(); ++v) d = std::min(d, g.degree(v));
  return d;
}

bool is_independent(const Graph& g, const VertexSet& s) {
  for (Vertex v : s) g.check_vertex(v);
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      if (g.adjacent(s[i], s[j])) return false;
    }
  }
  return true;
}

bool is_claw_free(const Graph& g) {
  for (Vertex v = 0; v < g.order(); ++v) {
    const auto nb = g.neighbors(v);
    const std::size_t d = nb.size();
    for (std::size_t a = 0; a < d; ++a) {
      for (std::size_t b = a + 1; b < d; ++b) {
        if (g.adjacent(nb[a], nb[b])) continue;
        for (std::size_t c = b + 1; c < d; ++c) {
          if (!g.adjacent(nb[a], nb[c]) && !g.adjacent(nb[b], nb[c])) {
            return false;
          }
        }
      }
    }
  }
  return true;
}

bool is_triangle_free(const Graph& g) {
  for (const auto& [u, v] : g.edges()) {
    for (Vertex w : g.neighbors(u)) {
      if (w != v && g.adjacent(v, w)) return false;
    }
  }
  return true;
}

long long independent_pairs_in_neighborhood(const Graph& g, Vertex v) {
  const auto nb = g.neighbors(v);
  long long count = 0;
  for (std::size_t a = 0; a < nb.size(); ++a) {
    for (std::size_t b = a + 1; b < nb.size(); ++b) {
      if (!g.adjacent(nb[a], nb[b])) ++count;
    }
  }
  return count;
}

long long phi_max(const Graph& g) {
  long long best = 0;
  for (Vertex v = 0; v < g.order(); ++v) {
    best = std::max(best, independent_pairs_in_neighborhood(g, v));
  }
  return best;
}

namespace {

// Branch and bound with greedy colouring bounds over 64-bit vertex masks.
class MaxClique {
 public:
  explicit MaxClique(const Graph& g) : n_(g.order()), adj_(static_cast<std::size_t>(n_), 0) {
    for (const auto& [u, v] : g.edges()) {
      adj_[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
      adj_[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
    }
  }

  int solve() {
    if (n_ == 0) return 0;
    const std::uint64_t all = n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
    expand(all, 0);
    return best_;
  }

 private:
  void expand(std::uint64_t candidates, int size) {
    // Colour classes give an upper bound on the clique still reachable.
    std::vector<int> order;
    std::vector<int> bound;
    std::uint64_t uncoloured = candidates;
    int colour = 0;
    while (uncoloured) {
      ++colour;
      std::uint64_t avail = uncoloured;
      while (avail) {
        const int v = std::countr_zero(avail);
        avail &= ~(std::uint64_t{1} << v);
        avail &= ~adj_[static_cast<std::size_t>(v)];
        uncoloured &= ~(std::uint64_t{1} << v);
        order.push_back(v);
        bound.push_back(colour);
      }
    }
    for (std::size_t i = order.size(); i-- > 0;) {
      if (size + bound[i] <= best_) return;
      const int v = order[i];
      const std::uint64_t next = candidates & adj_[static_cast<std::size_t>(v)];
      if (next == 0) {
        best_ = std::max(best_, size + 1);
      } else {
        expand(next, size + 1);
      }
      candidates &= ~(std::uint64_t{1} << v);
    }
  }

  int n_;
  std::vector<std::uint64_t> adj_;
  int best_ = 0;
};

}  // namespace

int clique_number(const Graph& g, int max_vertices) {
  if (g.order() == 0) return 0;
  if (g.size() == 0) return 1;
  if (is_triangle_free(g)) return 2;
  if (g.order() > max_vertices || g.order() > 64) {
    throw GuardError("clique_number: graph has " + std::to_string(g.order()) +
                     " vertices, limit is " + std::to_string(std::min(max_vertices, 64)));
  }
  return MaxClique(g).solve();
}

Graph line_graph(const Graph& g) {
  if (g.size() == 0) throw GraphError("line_graph: graph has no edges");
  const auto& es = g.edges();
  std::vector<Edge> out;
  for (std::size_t i = 0; i < es.size(); ++i) {
    for (std::size_t j = i + 1; j < es.size(); ++j) {
      const bool share = es[i].u == es[j].u || es[i].u == es[j].v ||
                         es[i].v == es[j].u || es[i].v == es[j].v;
      if (share) out.push_back({static_cast<Vertex>(i), static_cast<Vertex>(j)});
    }
  }
  return Graph(static_cast<int>(es.size()), std::move(out));
}

Graph complement(const Graph& g) {
  std::vector<Edge> out;
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = u + 1; v < g.order(); ++v) {
      if (!g.adjacent(u, v)) out.push_back({u, v});
    }
  }
  return Graph(g.order(), std::move(out));
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<Edge> out = a.edges();
  for (const auto& [u, v] : b.edges()) out.push_back({u + a.order(), v + a.order()});
  return Graph(a.order() + b.order(), std::move(out));
}

bool is_connected(const Graph& g, const VertexSet& r) {
  if (r.empty()) return false;
  for (Vertex v : r) g.check_vertex(v);
  std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
  std::vector<Vertex> stack{r[0]};
  seen[static_cast<std::size_t>(r[0])] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const Vertex x = stack.back();
    stack.pop_back();
    for (Vertex y : g.neighbors(x)) {
      if (!seen[static_cast<std::size_t>(y)] && r.contains(y)) {
        seen[static_cast<std::size_t>(y)] = 1;
        ++reached;
        stack.push_back(y);
      }
    }
  }
  return reached == r.size();
}

}  // namespace indpoly
