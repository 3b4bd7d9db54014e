#include "indpoly/edge_list.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

#include "indpoly/errors.hpp"

namespace indpoly {

namespace {

bool next_data_line(std::istream& in, std::string& line, int& lineno) {
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    return true;
  }
  return false;
}

void parse_pair(const std::string& line, int lineno, long long& a, long long& b) {
  std::istringstream ss(line);
  std::string extra;
  if (!(ss >> a >> b) || (ss >> extra)) {
    throw ParseError("line " + std::to_string(lineno) + ": expected two integers, got '" +
                     line + "'");
  }
}

}  // namespace

Graph read_edge_list(std::istream& in) {
  std::string line;
  int lineno = 0;
  if (!next_data_line(in, line, lineno)) throw ParseError("missing header line 'n m'");
  long long n = 0;
  long long m = 0;
  parse_pair(line, lineno, n, m);
  if (n < 0 || m < 0 || n > 1'000'000) {
    throw ParseError("line " + std::to_string(lineno) + ": invalid header");
  }

  std::vector<Edge> edges;
  for (long long i = 0; i < m; ++i) {
    if (!next_data_line(in, line, lineno)) {
      throw ParseError("expected " + std::to_string(m) + " edges, found " + std::to_string(i));
    }
    long long u = 0;
    long long v = 0;
    parse_pair(line, lineno, u, v);
    if (!(0 <= u && u < v && v < n)) {
      throw ParseError("line " + std::to_string(lineno) + ": edge must satisfy 0 <= u < v < n");
    }
    edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
  }
  if (next_data_line(in, line, lineno)) {
    throw ParseError("line " + std::to_string(lineno) + ": trailing data after " +
                     std::to_string(m) + " edges");
  }
  try {
    return Graph(static_cast<int>(n), std::move(edges));
  } catch (const GraphError& e) {
    throw ParseError(e.what());
  }
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.order() << ' ' << g.size() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

}  // namespace indpoly
