#include "indpoly/scheme.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cstdint>
#include <cstdlib>
#include <cstring>
#include <iterator>
#include <unordered_map>

#include "indpoly/errors.hpp"
#include "indpoly/independence.hpp"
#include "vertex_mask.hpp"

namespace indpoly {

using detail::VertexMask;

namespace {

std::string describe(const VertexSet& r) {
  std::string s = "{";
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(r[i]);
  }
  return s + "}";
}

// Subgraph induced by a vertex set, with edges numbered locally in host order.
struct Local {
  std::vector<Vertex> verts;
  std::vector<int> ids;
  std::vector<std::pair<int, int>> ends;

  int k() const { return static_cast<int>(verts.size()); }
  int m() const { return static_cast<int>(ids.size()); }
};

Local localize(const Graph& g, const VertexSet& r) {
  for (Vertex v : r) g.check_vertex(v);
  Local l;
  l.verts = r.items();
  for (int i = 0; i < l.k(); ++i) {
    for (int j = i + 1; j < l.k(); ++j) {
      const int id = g.edge_index(l.verts[static_cast<std::size_t>(i)],
                                  l.verts[static_cast<std::size_t>(j)]);
      if (id >= 0) {
        l.ids.push_back(id);
        l.ends.emplace_back(i, j);
      }
    }
  }
  return l;
}

// Union-find over at most 64 local vertices.
struct Components {
  explicit Components(int k) : parent(static_cast<std::size_t>(k)) {
    for (int i = 0; i < k; ++i) parent[static_cast<std::size_t>(i)] = i;
  }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      x = parent[static_cast<std::size_t>(x)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    }
    return x;
  }
  bool join(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[static_cast<std::size_t>(a)] = b;
    return true;
  }
  std::vector<int> parent;
};

bool connected_spanning(const Local& l, std::uint64_t mask) {
  if (std::popcount(mask) < l.k() - 1) return false;
  Components c(l.k());
  int merges = 0;
  for (std::uint64_t w = mask; w; w &= w - 1) {
    const auto& [a, b] = l.ends[static_cast<std::size_t>(std::countr_zero(w))];
    if (c.join(a, b)) ++merges;
  }
  return merges == l.k() - 1;
}

Local checked_support(const Graph& g, const VertexSet& r, int max_edges) {
  if (r.size() < 2) throw DomainError("vertex set " + describe(r) + " has fewer than 2 vertices");
  if (!is_connected(g, r)) throw DomainError("vertex set " + describe(r) + " is not connected");
  Local l = localize(g, r);
  if (l.m() > max_edges) {
    throw GuardError("induced subgraph on " + describe(r) + " has " + std::to_string(l.m()) +
                     " edges, over the enumeration limit of " + std::to_string(max_edges));
  }
  return l;
}

// Spanning trees as local edge masks, by include/exclude over edges in order.
class TreeEnumerator {
 public:
  TreeEnumerator(const Local& l, std::size_t budget) : l_(l), budget_(budget) {}

  std::vector<std::uint64_t> run() {
    std::vector<int> comp(static_cast<std::size_t>(l_.k()));
    for (int i = 0; i < l_.k(); ++i) comp[static_cast<std::size_t>(i)] = i;
    if (l_.k() == 1) return {0};
    rec(0, 0, 0, comp);
    std::sort(out_.begin(), out_.end());
    return out_;
  }

 private:
  void rec(int i, int chosen, std::uint64_t mask, const std::vector<int>& comp) {
    if (chosen == l_.k() - 1) {
      if (out_.size() >= budget_) {
        throw GuardError("spanning tree enumeration exceeded " + std::to_string(budget_) +
                         " trees");
      }
      out_.push_back(mask);
      return;
    }
    if (l_.k() - 1 - chosen > l_.m() - i) return;
    const auto [a, b] = l_.ends[static_cast<std::size_t>(i)];
    const int ca = comp[static_cast<std::size_t>(a)];
    const int cb = comp[static_cast<std::size_t>(b)];
    if (ca != cb) {
      std::vector<int> next = comp;
      for (int& c : next) {
        if (c == cb) c = ca;
      }
      rec(i + 1, chosen + 1, mask | (std::uint64_t{1} << i), next);
    }
    rec(i + 1, chosen, mask, comp);
  }

  const Local& l_;
  std::size_t budget_;
  std::vector<std::uint64_t> out_;
};

EdgeSet to_host(const Local& l, std::uint64_t mask) {
  EdgeSet out;
  for (std::uint64_t w = mask; w; w &= w - 1) {
    out.push_back(l.ids[static_cast<std::size_t>(std::countr_zero(w))]);
  }
  return out;
}

// Host edge ids to a local mask; false if some edge leaves the support.
bool to_local(const Local& l, const EdgeSet& edges, std::uint64_t& mask) {
  mask = 0;
  for (int id : edges) {
    const auto it = std::lower_bound(l.ids.begin(), l.ids.end(), id);
    if (it == l.ids.end() || *it != id) return false;
    mask |= std::uint64_t{1} << std::distance(l.ids.begin(), it);
  }
  return true;
}

void check_forest_guard(const Graph& g, const SchemeLimits& limits) {
  if (g.order() > limits.max_vertices && static_cast<int>(g.size()) > limits.max_edges) {
    throw GuardError("graph with " + std::to_string(g.order()) + " vertices and " +
                     std::to_string(g.size()) + " edges exceeds the forest enumeration limits (" +
                     std::to_string(limits.max_vertices) + " vertices or " +
                     std::to_string(limits.max_edges) + " edges)");
  }
}

VertexMask mask_of(int n, const VertexSet& r) {
  VertexMask m(n);
  for (Vertex v : r) m.set(v);
  return m;
}

bool disjoint(const VertexSet& a, const VertexSet& b) {
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) return false;
    if (a[i] < b[j]) {
      ++i;
    } else {
      ++j;
    }
  }
  return true;
}

BigInt alternating_sum(const Local& l) {
  BigInt s = 0;
  const std::uint64_t top = std::uint64_t{1} << l.m();
  for (std::uint64_t mask = 0; mask < top; ++mask) {
    if (connected_spanning(l, mask)) s += (std::popcount(mask) % 2 == 0) ? 1 : -1;
  }
  return s;
}

}  // namespace

// ---- trees and forests ---------------------------------------------------

Tree::Tree(const Graph& g, EdgeSet edges) : edges_(std::move(edges)) {
  if (edges_.empty()) throw GraphError("a tree needs at least one edge");
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
    throw GraphError("repeated edge in tree");
  }
  std::vector<Vertex> vs;
  for (int id : edges_) {
    if (id < 0 || id >= static_cast<int>(g.size())) {
      throw GraphError("edge id " + std::to_string(id) + " is not an edge of the graph");
    }
    vs.push_back(g.edge(id).u);
    vs.push_back(g.edge(id).v);
  }
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  vertices_ = VertexSet(vs);
  if (vs.size() != edges_.size() + 1) throw GraphError("edge set is not a tree");
  Components c(static_cast<int>(vs.size()));
  auto pos = [&](Vertex v) {
    return static_cast<int>(std::lower_bound(vs.begin(), vs.end(), v) - vs.begin());
  };
  for (int id : edges_) {
    if (!c.join(pos(g.edge(id).u), pos(g.edge(id).v))) throw GraphError("edge set is not a tree");
  }
}

Forest::Forest(std::vector<Tree> trees) : trees_(std::move(trees)) {
  std::vector<Vertex> all;
  for (const auto& t : trees_) all.insert(all.end(), t.vertices().begin(), t.vertices().end());
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end()) {
    throw GraphError("forest trees share a vertex");
  }
}

std::size_t Forest::edge_count() const {
  std::size_t s = 0;
  for (const auto& t : trees_) s += t.size();
  return s;
}

VertexSet Forest::support() const {
  std::vector<Vertex> all;
  for (const auto& t : trees_) all.insert(all.end(), t.vertices().begin(), t.vertices().end());
  return VertexSet(std::move(all));
}

EdgeSet Forest::edges() const {
  EdgeSet all;
  for (const auto& t : trees_) all.insert(all.end(), t.edges().begin(), t.edges().end());
  std::sort(all.begin(), all.end());
  return all;
}

// ---- schemes ---------------------------------------------------------------

EdgeSet PartitionScheme::map(const Graph& g, const Forest& f) const {
  EdgeSet out;
  for (const auto& t : f.trees()) {
    const EdgeSet part = map(g, t);
    out.insert(out.end(), part.begin(), part.end());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

EdgeSet PenroseScheme::map(const Graph& g, const Tree& tau) const {
  const auto& vs = tau.vertices().items();
  const int k = static_cast<int>(vs.size());
  auto pos = [&](Vertex v) {
    return static_cast<int>(std::lower_bound(vs.begin(), vs.end(), v) - vs.begin());
  };
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(k));
  for (int id : tau.edges()) {
    const int a = pos(g.edge(id).u);
    const int b = pos(g.edge(id).v);
    adj[static_cast<std::size_t>(a)].push_back(b);
    adj[static_cast<std::size_t>(b)].push_back(a);
  }
  std::vector<int> depth(static_cast<std::size_t>(k), -1);
  std::vector<int> parent(static_cast<std::size_t>(k), -1);
  std::vector<int> queue{0};
  depth[0] = 0;
  for (std::size_t h = 0; h < queue.size(); ++h) {
    const int x = queue[h];
    for (int y : adj[static_cast<std::size_t>(x)]) {
      if (depth[static_cast<std::size_t>(y)] >= 0) continue;
      depth[static_cast<std::size_t>(y)] = depth[static_cast<std::size_t>(x)] + 1;
      parent[static_cast<std::size_t>(y)] = x;
      queue.push_back(y);
    }
  }
  EdgeSet out = tau.edges();
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      const int id = g.edge_index(vs[static_cast<std::size_t>(i)], vs[static_cast<std::size_t>(j)]);
      if (id < 0 || std::binary_search(tau.edges().begin(), tau.edges().end(), id)) continue;
      const int di = depth[static_cast<std::size_t>(i)];
      const int dj = depth[static_cast<std::size_t>(j)];
      // Positions follow vertex order, so comparing positions compares labels.
      if (di == dj || (dj == di + 1 && i > parent[static_cast<std::size_t>(j)]) ||
          (di == dj + 1 && j > parent[static_cast<std::size_t>(i)])) {
        out.push_back(id);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

EdgeSet penrose_map(const Graph& g, const Tree& tau) { return PenroseScheme{}.map(g, tau); }

int SchemeLimits::default_max_edges() {
  const char* env = std::getenv("INDPOLY_GUARD_EDGES");
  if (env == nullptr || *env == '\0') return 24;
  int value = 0;
  const char* end = env + std::strlen(env);
  const auto [ptr, ec] = std::from_chars(env, end, value);
  if (ec != std::errc() || ptr != end || value < 1 || value > 63) {
    throw ParseError(std::string("INDPOLY_GUARD_EDGES must be an integer in 1..63, got '") + env +
                     "'");
  }
  return value;
}

// ---- enumeration -----------------------------------------------------------

std::vector<VertexSet> connected_subsets(const Graph& g, std::size_t min_size,
                                         const SchemeLimits& limits) {
  const int n = g.order();
  std::vector<VertexMask> nbr;
  for (Vertex v = 0; v < n; ++v) {
    VertexMask m(n);
    for (Vertex w : g.neighbors(v)) m.set(w);
    nbr.push_back(std::move(m));
  }
  std::vector<VertexSet> out;
  std::vector<Vertex> sub;

  // Each connected set is produced once, from its smallest vertex `root`.
  auto extend = [&](auto&& self, VertexMask ext, const VertexMask& closed, Vertex root) -> void {
    if (sub.size() >= min_size) {
      if (out.size() >= limits.max_supports) {
        throw GuardError("more than " + std::to_string(limits.max_supports) +
                         " connected vertex subsets");
      }
      out.emplace_back(sub);
    }
    for (int w = ext.first(); w >= 0; w = ext.first()) {
      ext.reset(w);
      VertexMask next_ext = ext;
      VertexMask fresh = nbr[static_cast<std::size_t>(w)];
      fresh.subtract(closed);
      fresh.for_each([&](int u) {
        if (u > root) next_ext.set(u);
      });
      VertexMask next_closed = closed | nbr[static_cast<std::size_t>(w)];
      next_closed.set(w);
      sub.push_back(w);
      self(self, next_ext, next_closed, root);
      sub.pop_back();
    }
  };

  for (Vertex v = 0; v < n; ++v) {
    VertexMask ext(n);
    for (Vertex w : g.neighbors(v)) {
      if (w > v) ext.set(w);
    }
    VertexMask closed = nbr[static_cast<std::size_t>(v)];
    closed.set(v);
    sub.assign(1, v);
    extend(extend, ext, closed, v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<EdgeSet> connected_spanning_subsets(const Graph& g, const VertexSet& r,
                                                const SchemeLimits& limits) {
  const Local l = checked_support(g, r, limits.max_edges);
  std::vector<EdgeSet> out;
  const std::uint64_t top = std::uint64_t{1} << l.m();
  for (std::uint64_t mask = 0; mask < top; ++mask) {
    if (connected_spanning(l, mask)) out.push_back(to_host(l, mask));
  }
  return out;
}

std::vector<Tree> spanning_trees(const Graph& g, const VertexSet& r, const SchemeLimits& limits) {
  const Local l = checked_support(g, r, limits.max_edges);
  std::vector<Tree> out;
  for (std::uint64_t mask : TreeEnumerator(l, limits.max_forests).run()) {
    out.emplace_back(g, to_host(l, mask));
  }
  return out;
}

// ---- validation ------------------------------------------------------------

ValidationReport validate_partition_scheme(const Graph& g, const PartitionScheme& m,
                                           const SchemeLimits& limits) {
  ValidationReport rep;
  if (!m.map(g, Forest{}).empty()) {
    rep.violations.push_back({VertexSet{}, 1, "image of the empty forest is not empty"});
  }

  std::vector<std::uint8_t> hits;
  std::vector<Tree> first_trees;
  std::vector<EdgeSet> first_images;
  for (const VertexSet& r : connected_subsets(g, 2, limits)) {
    const Local l = checked_support(g, r, limits.max_edges);
    ++rep.supports_checked;
    const std::uint64_t top = std::uint64_t{1} << l.m();
    hits.assign(static_cast<std::size_t>(top), 0);
    bool reported = false;
    auto fail = [&](int condition, std::string detail) {
      if (reported) return;
      reported = true;
      rep.violations.push_back({r, condition, std::move(detail)});
    };

    for (std::uint64_t t : TreeEnumerator(l, limits.max_forests).run()) {
      ++rep.trees_checked;
      Tree tau(g, to_host(l, t));
      const EdgeSet image = m.map(g, tau);
      if (first_trees.size() < rep.supports_checked) {
        first_trees.push_back(tau);
        first_images.push_back(image);
      }
      std::uint64_t img = 0;
      if (!to_local(l, image, img)) {
        fail(2, "image of a spanning tree uses an edge outside " + describe(r));
        continue;
      }
      if ((img & t) != t) {
        fail(2, "image of a spanning tree does not contain it");
        continue;
      }
      const std::uint64_t extra = img & ~t;
      for (std::uint64_t s = extra;; s = (s - 1) & extra) {
        auto& h = hits[static_cast<std::size_t>(t | s)];
        if (h < 2) ++h;
        if (s == 0) break;
      }
    }
    for (std::uint64_t mask = 0; mask < top; ++mask) {
      const auto h = hits[static_cast<std::size_t>(mask)];
      if (h > 1) {
        fail(3, "an edge set lies in two intervals");
      } else if (h == 0 && connected_spanning(l, mask)) {
        fail(3, "a connected spanning edge set lies in no interval");
      }
    }
  }

  // Condition 4 on pairs of trees with disjoint supports.
  constexpr std::size_t kPairCap = 20000;
  for (std::size_t i = 0; i < first_trees.size() && rep.forests_checked < kPairCap; ++i) {
    for (std::size_t j = i + 1; j < first_trees.size() && rep.forests_checked < kPairCap; ++j) {
      if (!disjoint(first_trees[i].vertices(), first_trees[j].vertices())) continue;
      ++rep.forests_checked;
      EdgeSet expect = first_images[i];
      expect.insert(expect.end(), first_images[j].begin(), first_images[j].end());
      std::sort(expect.begin(), expect.end());
      if (m.map(g, Forest({first_trees[i], first_trees[j]})) != expect) {
        rep.violations.push_back({first_trees[i].vertices(), 4,
                                  "forest image differs from the union of its tree images"});
      }
    }
  }
  return rep;
}

IdentityCheck penrose_identity_check(const Graph& g, const VertexSet& r, const PartitionScheme& m,
                                     const SchemeLimits& limits) {
  const Local l = checked_support(g, r, limits.max_edges);
  IdentityCheck out;
  out.lhs = alternating_sum(l);
  for (std::uint64_t t : TreeEnumerator(l, limits.max_forests).run()) {
    const Tree tau(g, to_host(l, t));
    if (m.map(g, tau) == tau.edges()) ++out.invariant_trees;
  }
  out.rhs = BigInt(out.invariant_trees);
  if ((r.size() - 1) % 2 == 1) out.rhs = -out.rhs;
  return out;
}

// ---- invariant forests -----------------------------------------------------

void for_each_invariant_forest(const Graph& g, const PartitionScheme& m,
                               const std::function<void(const Forest&)>& visit,
                               const SchemeLimits& limits) {
  check_forest_guard(g, limits);
  const int n = g.order();
  // Invariant trees grouped by the smallest vertex of their support.
  std::vector<std::vector<Tree>> by_min(static_cast<std::size_t>(n));
  std::size_t budget = limits.max_forests;
  for (const VertexSet& r : connected_subsets(g, 2, limits)) {
    const Local l = localize(g, r);
    if (l.m() > 64) {
      throw GuardError("induced subgraph on " + describe(r) + " has more than 64 edges");
    }
    const auto trees = TreeEnumerator(l, budget).run();
    budget -= std::min(budget, trees.size());
    for (std::uint64_t t : trees) {
      Tree tau(g, to_host(l, t));
      if (m.map(g, tau) == tau.edges()) by_min[static_cast<std::size_t>(r[0])].push_back(tau);
    }
  }

  std::size_t emitted = 0;
  VertexMask used(n);
  std::vector<Tree> current;
  auto rec = [&](auto&& self, int v) -> void {
    while (v < n && used.test(v)) ++v;
    if (v == n) {
      if (++emitted > limits.max_forests) {
        throw GuardError("more than " + std::to_string(limits.max_forests) + " invariant forests");
      }
      visit(Forest(current));
      return;
    }
    self(self, v + 1);
    for (const Tree& tau : by_min[static_cast<std::size_t>(v)]) {
      const auto& vs = tau.vertices();
      if (std::any_of(vs.begin(), vs.end(), [&](Vertex x) { return used.test(x); })) continue;
      for (Vertex x : vs) used.set(x);
      current.push_back(tau);
      self(self, v + 1);
      current.pop_back();
      for (Vertex x : vs) used.reset(x);
    }
  };
  rec(rec, 0);
}

std::vector<Forest> invariant_forests(const Graph& g, const PartitionScheme& m,
                                      const SchemeLimits& limits) {
  std::vector<Forest> out;
  for_each_invariant_forest(g, m, [&](const Forest& f) { out.push_back(f); }, limits);
  return out;
}

namespace {

// Per support size k: sum of (-1)^|F| and of (-1)^||F|| over invariant forests.
struct ForestTally {
  std::vector<BigInt> by_edges;
  std::vector<BigInt> by_trees;
};

ForestTally tally(const Graph& g, const PartitionScheme& m, const SchemeLimits& limits) {
  const auto n = static_cast<std::size_t>(g.order());
  ForestTally t{std::vector<BigInt>(n + 1), std::vector<BigInt>(n + 1)};
  for_each_invariant_forest(
      g, m,
      [&](const Forest& f) {
        const std::size_t k = f.support_size();
        t.by_edges[k] += (f.edge_count() % 2 == 0) ? 1 : -1;
        t.by_trees[k] += (f.tree_count() % 2 == 0) ? 1 : -1;
      },
      limits);
  return t;
}

}  // namespace

IntPolynomial forest_sum_polynomial(const Graph& g, const PartitionScheme& m,
                                    const SchemeLimits& limits) {
  const ForestTally t = tally(g, m, limits);
  const int n = g.order();
  IntPolynomial sum;
  for (int k = 0; k <= n; ++k) {
    const BigInt& w = t.by_edges[static_cast<std::size_t>(k)];
    if (w == 0) continue;
    sum += IntPolynomial::monomial(w, k) * IntPolynomial::one_plus_z_pow(n - k);
  }
  return sum;
}

namespace {

Rational power(const Rational& x, int e) {
  Rational r = 1;
  for (int i = 0; i < e; ++i) r *= x;
  return r;
}

Rational forest_sum_at(const ForestTally& t, const Rational& x) {
  Rational s = 0;
  const int n = static_cast<int>(t.by_edges.size()) - 1;
  for (int k = 0; k <= n; ++k) {
    const BigInt& w = t.by_edges[static_cast<std::size_t>(k)];
    if (w != 0) s += Rational(w) * power(x, k) * power(1 + x, n - k);
  }
  return s;
}

}  // namespace

SpecialValues special_values(const Graph& g, const PartitionScheme& m,
                             const SchemeLimits& limits) {
  const ForestTally t = tally(g, m, limits);
  const int n = g.order();
  const IntPolynomial z = independence_polynomial(g);
  BigInt all_trees = 0;
  for (const auto& w : t.by_trees) all_trees += w;
  const Rational two_n = power(Rational(2), n);

  SpecialValues out;
  const Rational minus1(-1);
  out.z_minus1 = {forest_sum_at(t, minus1), Rational(t.by_trees.back()), evaluate(z, minus1)};
  const Rational minus_half(-1, 2);
  out.z_minus_half = {forest_sum_at(t, minus_half), Rational(all_trees) / two_n,
                      evaluate(z, minus_half)};
  const Rational one(1);
  out.z_1 = {forest_sum_at(t, one), Rational(all_trees) * two_n, evaluate(z, one)};
  return out;
}

// ---- polymer gas -----------------------------------------------------------

Rational polymer_partition_function(const Graph& g, const Rational& z,
                                    const SchemeLimits& limits) {
  if (z == -1) throw DomainError("polymer_partition_function: z = -1 is a pole of z/(1+z)");
  check_forest_guard(g, limits);
  const int n = g.order();
  const Rational ratio = z / (1 + z);

  struct Polymer {
    VertexMask support;
    Rational activity;
  };
  std::vector<std::vector<Polymer>> by_min(static_cast<std::size_t>(n));
  for (const VertexSet& r : connected_subsets(g, 2, limits)) {
    const BigInt alt = alternating_sum(checked_support(g, r, limits.max_edges));
    if (alt == 0) continue;
    by_min[static_cast<std::size_t>(r[0])].push_back(
        {mask_of(n, r), power(ratio, static_cast<int>(r.size())) * Rational(alt)});
  }

  // Xi(S) = Xi(S - v) + sum over polymers R with min R = v = min S, R in S,
  // of zeta(R) Xi(S - R).
  std::unordered_map<VertexMask, Rational, detail::VertexMaskHash> memo;
  auto xi = [&](auto&& self, const VertexMask& s) -> Rational {
    const int v = s.first();
    if (v < 0) return Rational(1);
    if (auto it = memo.find(s); it != memo.end()) return it->second;
    VertexMask rest = s;
    rest.reset(v);
    Rational total = self(self, rest);
    for (const Polymer& p : by_min[static_cast<std::size_t>(v)]) {
      if (p.support.intersection_count(s) != p.support.count()) continue;
      VertexMask left = s;
      left.subtract(p.support);
      total += p.activity * self(self, left);
    }
    memo.emplace(s, total);
    return total;
  };
  return power(1 + z, n) * xi(xi, VertexMask::full(n));
}

}  // namespace indpoly
