#include "indpoly/cli/report_json.hpp"

#include <cmath>
#include <limits>

#include "indpoly/errors.hpp"

namespace indpoly::cli {

namespace {

Json number(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  return x;
}

double read_number(const Json& j) {
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "inf") return std::numeric_limits<double>::infinity();
    if (s == "-inf") return -std::numeric_limits<double>::infinity();
    throw ParseError("expected a number, got \"" + s + "\"");
  }
  return j.get<double>();
}

Json lambda_json(const Lambda1& l) {
  return Json{{"re", l.value.real()},
              {"im", l.value.imag()},
              {"real", l.real},
              {"conjugate_pair", l.conjugate_pair}};
}

}  // namespace

Json to_json(const BoundReport& r) {
  Json j;
  const auto& g = r.graph;
  j["graph"] = Json{{"name", g.name},         {"n", g.n},
                    {"m", g.m},               {"delta", g.delta},
                    {"delta_min", g.delta_min}, {"omega", g.omega},
                    {"phi", g.phi},           {"claw_free", g.claw_free},
                    {"triangle_free", g.triangle_free}};
  Json coeffs = Json::array();
  for (const auto& c : r.polynomial.coefficients()) coeffs.push_back(c.str());
  j["polynomial"] = coeffs;
  if (r.roots) {
    Json roots = Json::array();
    for (const auto& root : r.roots->roots) {
      roots.push_back(Json{{"re", root.value.real()},
                           {"im", root.value.imag()},
                           {"multiplicity", root.multiplicity}});
    }
    j["roots"] = roots;
    j["residual"] = r.roots->residual;
    j["lambda1"] = lambda_json(r.roots->lambda1);
  } else {
    j["roots"] = nullptr;
    j["residual"] = nullptr;
    j["lambda1"] = nullptr;
  }
  Json bounds = Json::array();
  for (const auto& b : r.bounds) {
    Json params = Json::object();
    for (const auto& [k, v] : b.params) params[k] = number(v);
    Json e{{"name", b.name},
           {"source", b.source},
           {"technique", b.technique},
           {"value", number(b.value)},
           {"exact", b.exact},
           {"applicable", b.applicable},
           {"conditional", b.conditional},
           {"note", b.note},
           {"params", params}};
    e["sound"] = b.sound ? Json(*b.sound) : Json(nullptr);
    bounds.push_back(std::move(e));
  }
  j["bounds"] = bounds;
  return j;
}

BoundReport report_from_json(const Json& j) {
  try {
    BoundReport r;
    const Json& g = j.at("graph");
    r.graph.name = g.at("name").get<std::string>();
    r.graph.n = g.at("n").get<int>();
    r.graph.m = g.at("m").get<std::size_t>();
    r.graph.delta = g.at("delta").get<int>();
    r.graph.delta_min = g.at("delta_min").get<int>();
    r.graph.omega = g.at("omega").get<int>();
    r.graph.phi = g.at("phi").get<long long>();
    r.graph.claw_free = g.at("claw_free").get<bool>();
    r.graph.triangle_free = g.at("triangle_free").get<bool>();

    std::vector<BigInt> coeffs;
    for (const auto& c : j.at("polynomial")) coeffs.emplace_back(c.get<std::string>());
    r.polynomial = IntPolynomial(std::move(coeffs));

    if (!j.at("roots").is_null()) {
      RootSet rs;
      for (const auto& root : j.at("roots")) {
        rs.roots.push_back({{root.at("re").get<double>(), root.at("im").get<double>()},
                            root.at("multiplicity").get<int>()});
      }
      rs.residual = j.at("residual").get<double>();
      const Json& l = j.at("lambda1");
      rs.lambda1.value = {l.at("re").get<double>(), l.at("im").get<double>()};
      rs.lambda1.real = l.at("real").get<bool>();
      rs.lambda1.conjugate_pair = l.at("conjugate_pair").get<bool>();
      r.roots = std::move(rs);
    }

    for (const auto& e : j.at("bounds")) {
      BoundEntry b;
      b.name = e.at("name").get<std::string>();
      b.source = e.at("source").get<std::string>();
      b.technique = e.at("technique").get<std::string>();
      b.value = read_number(e.at("value"));
      b.exact = e.at("exact").get<std::string>();
      b.applicable = e.at("applicable").get<bool>();
      b.conditional = e.at("conditional").get<bool>();
      b.note = e.at("note").get<std::string>();
      for (const auto& [k, v] : e.at("params").items()) b.params.emplace_back(k, read_number(v));
      if (!e.at("sound").is_null()) b.sound = e.at("sound").get<bool>();
      r.bounds.push_back(std::move(b));
    }
    return r;
  } catch (const Json::exception& ex) {
    throw ParseError(std::string("malformed report: ") + ex.what());
  } catch (const std::runtime_error& ex) {
    // cpp_int rejects non-numeric coefficient strings this way.
    throw ParseError(std::string("malformed report: ") + ex.what());
  }
}

std::string emit(const BoundReport& r) { return to_json(r).dump(2) + "\n"; }

BoundReport parse_report(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::exception& ex) {
    throw ParseError(std::string("invalid JSON: ") + ex.what());
  }
  return report_from_json(j);
}

}  // namespace indpoly::cli
