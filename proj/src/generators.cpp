#include "indpoly/generators.hpp"

#include <charconv>
#include <vector>

#include "indpoly/errors.hpp"

namespace indpoly::gen {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw GraphError(what);
}

}  // namespace

Graph edgeless(int n) {
  require(n >= 1, "edgeless: n must be >= 1");
  return Graph(n, {});
}

Graph path(int n) {
  require(n >= 1, "path: n must be >= 1");
  std::vector<Edge> es;
  for (Vertex v = 0; v + 1 < n; ++v) es.push_back({v, v + 1});
  return Graph(n, std::move(es));
}

Graph cycle(int n) {
  require(n >= 3, "cycle: n must be >= 3");
  std::vector<Edge> es;
  for (Vertex v = 0; v + 1 < n; ++v) es.push_back({v, v + 1});
  es.push_back({0, n - 1});
  return Graph(n, std::move(es));
}

Graph complete(int n) {
  require(n >= 1, "complete: n must be >= 1");
  std::vector<Edge> es;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) es.push_back({u, v});
  return Graph(n, std::move(es));
}

Graph star(int k) {
  require(k >= 1, "star: k must be >= 1");
  std::vector<Edge> es;
  for (Vertex v = 1; v <= k; ++v) es.push_back({0, v});
  return Graph(k + 1, std::move(es));
}

Graph complete_tree(int branching, int depth) {
  require(branching >= 1, "complete_tree: branching must be >= 1");
  require(depth >= 0, "complete_tree: depth must be >= 0");
  long long n = 1;
  long long level = 1;
  for (int d = 0; d < depth; ++d) {
    level *= branching;
    n += level;
    require(n <= 1'000'000, "complete_tree: more than 10^6 vertices");
  }
  std::vector<Edge> es;
  for (Vertex child = 1; child < n; ++child) es.push_back({(child - 1) / branching, child});
  return Graph(static_cast<int>(n), std::move(es));
}

Graph petersen() {
  std::vector<Edge> es;
  for (Vertex i = 0; i < 5; ++i) {
    es.push_back({i, (i + 1) % 5});
    es.push_back({i, i + 5});
    es.push_back({5 + i, 5 + (i + 2) % 5});
  }
  return Graph(10, std::move(es));
}

Graph schlafli() {
  // The 27 lines: a_i, b_i (i = 0..5) and c_ij (i < j).
  struct Line {
    char kind;
    int i;
    int j;
  };
  std::vector<Line> lines;
  for (int i = 0; i < 6; ++i) lines.push_back({'a', i, -1});
  for (int i = 0; i < 6; ++i) lines.push_back({'b', i, -1});
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j) lines.push_back({'c', i, j});

  auto meets = [](const Line& x, const Line& y) {
    auto in_pair = [](int i, const Line& c) { return i == c.i || i == c.j; };
    if (x.kind == 'c' && y.kind == 'c') {
      return x.i != y.i && x.i != y.j && x.j != y.i && x.j != y.j;
    }
    if (x.kind == 'c') return in_pair(y.i, x);
    if (y.kind == 'c') return in_pair(x.i, y);
    return x.kind != y.kind && x.i != y.i;
  };

  // Adjacent in the Schlafli graph iff the lines are skew.
  std::vector<Edge> es;
  for (Vertex u = 0; u < 27; ++u)
    for (Vertex v = u + 1; v < 27; ++v)
      if (!meets(lines[static_cast<std::size_t>(u)], lines[static_cast<std::size_t>(v)]))
        es.push_back({u, v});
  return Graph(27, std::move(es));
}

Graph generate(std::string_view spec) {
  const auto colon = spec.find(':');
  const std::string_view name = spec.substr(0, colon);
  std::vector<int> params;
  if (colon != std::string_view::npos) {
    std::string_view rest = spec.substr(colon + 1);
    while (true) {
      const auto comma = rest.find(',');
      const std::string_view tok = rest.substr(0, comma);
      int value = 0;
      const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
      if (ec != std::errc{} || ptr != tok.data() + tok.size() || tok.empty()) {
        throw ParseError("generator '" + std::string(spec) + "': bad parameter '" +
                         std::string(tok) + "'");
      }
      params.push_back(value);
      if (comma == std::string_view::npos) break;
      rest = rest.substr(comma + 1);
    }
  }

  auto expect = [&](std::size_t count) {
    if (params.size() != count) {
      throw ParseError("generator '" + std::string(name) + "' takes " + std::to_string(count) +
                       " parameter(s), got " + std::to_string(params.size()));
    }
  };

  if (name == "path") {
    expect(1);
    return path(params[0]);
  }
  if (name == "cycle") {
    expect(1);
    return cycle(params[0]);
  }
  if (name == "complete") {
    expect(1);
    return complete(params[0]);
  }
  if (name == "star") {
    expect(1);
    return star(params[0]);
  }
  if (name == "edgeless") {
    expect(1);
    return edgeless(params[0]);
  }
  if (name == "complete_tree") {
    expect(2);
    return complete_tree(params[0], params[1]);
  }
  if (name == "petersen") {
    expect(0);
    return petersen();
  }
  if (name == "schlafli") {
    expect(0);
    return schlafli();
  }
  throw ParseError("unknown generator '" + std::string(name) + "'");
}

}  // namespace indpoly::gen
