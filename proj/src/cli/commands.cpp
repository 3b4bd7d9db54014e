#include "indpoly/cli/commands.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <iomanip>
#include <limits>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "indpoly/bounds.hpp"
#include "indpoly/cli/report_json.hpp"
#include "indpoly/edge_list.hpp"
#include "indpoly/errors.hpp"
#include "indpoly/generators.hpp"
#include "indpoly/independence.hpp"

namespace indpoly::cli {

namespace {

std::string fmt(double x, int digits = 7) {
  std::ostringstream s;
  s << std::setprecision(digits) << x;
  return s.str();
}

std::string fmt(std::complex<double> z, int digits = 10) {
  if (z.imag() == 0.0) return fmt(z.real(), digits);
  std::ostringstream s;
  s << std::setprecision(digits) << z.real() << (z.imag() < 0 ? " - " : " + ")
    << std::abs(z.imag()) << "i";
  return s.str();
}

std::string set_string(const VertexSet& r) {
  std::string s = "{";
  for (std::size_t i = 0; i < r.size(); ++i) s += (i ? "," : "") + std::to_string(r[i]);
  return s + "}";
}

}  // namespace

// ---- verification suites ---------------------------------------------------

bool VerifyOutcome::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

bool SoundnessOutcome::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

VerifyOutcome verify_graph(const Graph& g, const SchemeLimits& limits) {
  VerifyOutcome out;
  const PenroseScheme penrose;
  const IntPolynomial z = independence_polynomial(g);

  {
    const ValidationReport rep = validate_partition_scheme(g, penrose, limits);
    CheckResult c{"partition scheme", rep.ok(), ""};
    if (!rep.ok()) {
      const auto& v = rep.violations.front();
      c.detail = "condition " + std::to_string(v.condition) + " fails on " +
                 set_string(v.support) + ": " + v.detail;
    } else {
      c.detail = std::to_string(rep.supports_checked) + " supports, " +
                 std::to_string(rep.trees_checked) + " trees";
    }
    out.checks.push_back(std::move(c));
  }
  {
    CheckResult c{"penrose identity", true, ""};
    std::size_t count = 0;
    for (const VertexSet& r : connected_subsets(g, 2, limits)) {
      const IdentityCheck id = penrose_identity_check(g, r, penrose, limits);
      ++count;
      if (!id.holds()) {
        c.passed = false;
        c.detail = "R = " + set_string(r) + ": lhs " + id.lhs.str() + ", rhs " + id.rhs.str();
        break;
      }
    }
    if (c.passed) c.detail = std::to_string(count) + " connected sets";
    out.checks.push_back(std::move(c));
  }
  {
    const IntPolynomial f = forest_sum_polynomial(g, penrose, limits);
    CheckResult c{"forest sum", f == z, ""};
    c.detail = c.passed ? z.to_string() : "forest sum " + f.to_string() + ", direct " + z.to_string();
    out.checks.push_back(std::move(c));
  }
  {
    const SpecialValues sv = special_values(g, penrose, limits);
    CheckResult c{"special values", true, ""};
    const std::pair<const char*, const SpecialValue*> rows[] = {
        {"Z(-1)", &sv.z_minus1}, {"Z(-1/2)", &sv.z_minus_half}, {"Z(1)", &sv.z_1}};
    for (const auto& [label, v] : rows) {
      if (!v->forest_matches() && c.passed) {
        c.passed = false;
        c.detail = std::string(label) + ": forest sum " + v->forest.str() + ", direct " +
                   v->direct.str();
      }
      if (!v->display_matches()) {
        out.notes.push_back(std::string(label) + ": closed formula gives " + v->display.str() +
                            ", direct value is " + v->direct.str());
      }
    }
    if (c.passed) {
      c.detail = "Z(-1) = " + sv.z_minus1.direct.str() + ", Z(-1/2) = " +
                 sv.z_minus_half.direct.str() + ", Z(1) = " + sv.z_1.direct.str();
    }
    out.checks.push_back(std::move(c));
  }
  {
    CheckResult c{"polymer expansion", true, ""};
    for (const Rational& x : {Rational(1), Rational(2), Rational(-1, 2), Rational(1, 3)}) {
      const Rational lhs = polymer_partition_function(g, x, limits);
      const Rational rhs = evaluate(z, x);
      if (lhs != rhs) {
        c.passed = false;
        c.detail = "z = " + x.str() + ": polymer " + lhs.str() + ", direct " + rhs.str();
        break;
      }
    }
    if (c.passed) c.detail = "z in {1, 2, -1/2, 1/3}";
    out.checks.push_back(std::move(c));
  }
  return out;
}

SoundnessOutcome check_bound_soundness(const Graph& g, const RootOptions& opts, double tol) {
  SoundnessOutcome out;
  const IntPolynomial z = independence_polynomial(g);
  if (z.degree() < 1) return out;
  const RootSet rs = all_roots(z, opts);
  double min_modulus = std::numeric_limits<double>::infinity();
  for (const auto& r : rs.roots) min_modulus = std::min(min_modulus, std::abs(r.value));

  auto radius_check = [&](std::string name, double radius) {
    CheckResult c{std::move(name), min_modulus >= radius - tol, ""};
    c.detail = "smallest root modulus " + fmt(min_modulus, 12) + ", radius " + fmt(radius, 12);
    out.checks.push_back(std::move(c));
  };
  radius_check("fp optimized radius", fp_optimized_radius(g).radius);
  if (is_claw_free(g)) {
    if (max_degree(g) >= 1) radius_check("claw-free bound", claw_free_bound(g));
    radius_check("claw-free degree bound", claw_free_delta_bound(g));
    const bool real = std::all_of(rs.roots.begin(), rs.roots.end(), [](const Root& r) {
      return std::abs(r.value.imag()) < 1e-8;
    });
    out.checks.push_back({"real-rooted", real, real ? "" : "non-real root found"});
  }
  return out;
}

// ---- sweep enumeration -----------------------------------------------------

void for_each_sweep_graph(int max_n, const std::function<void(const Graph&)>& visit) {
  for (int n = 1; n <= max_n; ++n) {
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    }
    std::set<std::pair<int, std::vector<std::uint64_t>>> seen;
    const std::uint64_t top = std::uint64_t{1} << pairs.size();
    std::vector<std::uint32_t> adj(static_cast<std::size_t>(n));
    std::vector<std::uint64_t> colour(static_cast<std::size_t>(n));
    std::vector<std::uint64_t> next(static_cast<std::size_t>(n));
    std::vector<std::uint64_t> nb;
    for (std::uint64_t mask = 0; mask < top; ++mask) {
      std::fill(adj.begin(), adj.end(), 0u);
      for (std::uint64_t w = mask; w; w &= w - 1) {
        const auto& [u, v] = pairs[static_cast<std::size_t>(std::countr_zero(w))];
        adj[static_cast<std::size_t>(u)] |= 1u << v;
        adj[static_cast<std::size_t>(v)] |= 1u << u;
      }
      // Colour refinement starting from degrees.
      for (int v = 0; v < n; ++v) {
        colour[static_cast<std::size_t>(v)] =
            static_cast<std::uint64_t>(std::popcount(adj[static_cast<std::size_t>(v)]));
      }
      for (int round = 0; round < std::min(n, 3); ++round) {
        for (int v = 0; v < n; ++v) {
          nb.clear();
          for (std::uint32_t w = adj[static_cast<std::size_t>(v)]; w; w &= w - 1) {
            nb.push_back(colour[static_cast<std::size_t>(std::countr_zero(w))]);
          }
          std::sort(nb.begin(), nb.end());
          std::uint64_t h = colour[static_cast<std::size_t>(v)] * 0x9e3779b97f4a7c15ull;
          for (auto c : nb) h = (h ^ c) * 0x100000001b3ull + 0x7f4a7c15ull;
          next[static_cast<std::size_t>(v)] = h;
        }
        colour.swap(next);
      }
      std::vector<std::uint64_t> signature = colour;
      std::sort(signature.begin(), signature.end());
      if (!seen.emplace(std::popcount(mask), std::move(signature)).second) continue;
      std::vector<Edge> edges;
      for (std::uint64_t w = mask; w; w &= w - 1) {
        const auto& [u, v] = pairs[static_cast<std::size_t>(std::countr_zero(w))];
        edges.push_back({u, v});
      }
      visit(Graph(n, std::move(edges)));
    }
  }
}

// ---- commands --------------------------------------------------------------

namespace {

struct Options {
  std::string gen;
  std::string file;
  bool roots = false;
  bool exact = false;
  bool json = false;
  std::optional<double> mu;
  double tol = 1e-12;
  double snap = 1e-8;
  double bound_tol = 1e-9;
  int max_n = 7;
  bool claw_free_only = false;
  std::optional<int> max_edges;
};

struct Source {
  Graph graph;
  std::string name;
};

Source load(const Options& o) {
  if (o.gen.empty() == o.file.empty()) {
    throw ParseError("exactly one of --gen and --file is required");
  }
  if (!o.gen.empty()) return {gen::generate(o.gen), o.gen};
  return {read_edge_list_file(o.file), o.file};
}

RootOptions root_options(const Options& o) {
  RootOptions r;
  r.residual_tol = o.tol;
  r.real_snap = o.snap;
  return r;
}

SchemeLimits scheme_limits(const Options& o) {
  SchemeLimits l;
  if (o.max_edges) l.max_edges = *o.max_edges;
  return l;
}

void print_roots(std::ostream& out, const RootSet& rs) {
  out << "roots (" << rs.root_count() << ", max scaled residual " << fmt(rs.residual, 3)
      << "):\n";
  for (const auto& r : rs.roots) {
    out << "  " << fmt(r.value, 12);
    if (r.multiplicity > 1) out << "  (multiplicity " << r.multiplicity << ")";
    out << "\n";
  }
  out << "lambda1 = " << fmt(rs.lambda1.value, 12);
  if (rs.lambda1.conjugate_pair) out << "  (conjugate pair; no real lambda1)";
  out << "\n";
}

int cmd_poly(const Options& o, std::ostream& out) {
  const Source src = load(o);
  BoundReport rep;
  rep.graph = describe(src.graph, src.name);
  rep.polynomial = independence_polynomial(src.graph);
  if (o.roots && rep.polynomial.degree() >= 1) {
    rep.roots = all_roots(rep.polynomial, root_options(o));
  }
  if (o.json) {
    out << emit(rep);
    return kOk;
  }
  out << rep.polynomial.to_string() << "\n";
  out << "degree " << rep.polynomial.degree() << "\n";
  if (rep.roots) print_roots(out, *rep.roots);
  return kOk;
}

void print_bound_table(std::ostream& out, const BoundReport& rep) {
  const auto& d = rep.graph;
  out << "graph " << d.name << ": n=" << d.n << " m=" << d.m << " Delta=" << d.delta
      << " delta=" << d.delta_min << " omega=" << (d.omega < 0 ? std::string("?")
                                                                : std::to_string(d.omega))
      << " Phi=" << d.phi << " claw-free=" << (d.claw_free ? "yes" : "no")
      << " triangle-free=" << (d.triangle_free ? "yes" : "no") << "\n\n";

  std::vector<std::array<std::string, 4>> rows;
  rows.push_back({"Source", "Technique", "Bound", "Sound"});
  if (rep.roots) {
    const auto& l = rep.roots->lambda1;
    std::string v = fmt(l.value, 7);
    if (l.conjugate_pair) v += " (conjugate pair)";
    rows.push_back({"Exact", "computed lambda1", v, ""});
  }
  for (const auto& b : rep.bounds) {
    std::string technique = b.technique;
    if (b.conditional) technique += " [conditional]";
    std::string bound;
    if (!b.applicable) {
      bound = "n/a (hypothesis: " + b.note + ")";
    } else {
      bound = "<= -" + fmt(b.value, 7);
      if (b.exact.find('/') != std::string::npos && b.exact.size() <= 12) {
        bound += " = -" + b.exact;
      }
      for (const auto& [k, v] : b.params) {
        if (k == "mu_star" || k == "mu") bound += ", " + k + "=" + fmt(v, 7);
      }
    }
    const std::string sound = b.sound ? (*b.sound ? "✓" : "✗") : "";
    rows.push_back({b.source, technique, bound, sound});
  }
  std::array<std::size_t, 3> width{};
  for (const auto& r : rows) {
    for (std::size_t i = 0; i < 3; ++i) width[i] = std::max(width[i], r[i].size());
  }
  for (const auto& r : rows) {
    std::string line;
    for (std::size_t i = 0; i < 3; ++i) {
      line += r[i];
      if (i < 2 || !r[3].empty()) line += std::string(width[i] - r[i].size() + 2, ' ');
    }
    line += r[3];
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << line << "\n";
  }
  for (const auto& b : rep.bounds) {
    if (b.conditional && b.applicable) out << "\n" << b.name << ": " << b.note;
  }
  out << "\n";
}

int cmd_bounds(const Options& o, std::ostream& out) {
  const Source src = load(o);
  ReportOptions ro;
  ro.compute_lambda1 = o.exact;
  ro.mu = o.mu;
  ro.root_options = root_options(o);
  ro.tolerance = o.bound_tol;
  const BoundReport rep = bound_report(src.graph, src.name, ro);
  if (o.json) {
    out << emit(rep);
  } else {
    print_bound_table(out, rep);
  }
  return kOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const Source src = load(o);
  const VerifyOutcome v = verify_graph(src.graph, scheme_limits(o));
  if (o.json) {
    Json j;
    j["graph"] = src.name;
    j["passed"] = v.passed();
    Json checks = Json::array();
    for (const auto& c : v.checks) {
      checks.push_back(Json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    }
    j["checks"] = checks;
    j["notes"] = v.notes;
    out << j.dump(2) << "\n";
  } else {
    for (const auto& c : v.checks) {
      out << (c.passed ? "ok    " : "FAIL  ") << c.name << ": " << c.detail << "\n";
    }
    for (const auto& n : v.notes) out << "note  " << n << "\n";
  }
  return v.passed() ? kOk : kFailure;
}

int cmd_sweep(const Options& o, std::ostream& out, std::ostream& err) {
  const SchemeLimits limits = scheme_limits(o);
  const RootOptions ropts = root_options(o);
  std::size_t checked = 0;
  std::size_t failures = 0;
  std::size_t claw_free = 0;
  std::size_t real_rooted = 0;
  std::size_t display_mismatches = 0;
  std::map<int, std::size_t> per_n;
  for_each_sweep_graph(o.max_n, [&](const Graph& g) {
    const bool cf = is_claw_free(g);
    if (o.claw_free_only && !cf) return;
    ++checked;
    ++per_n[g.order()];
    std::vector<CheckResult> failed;
    const VerifyOutcome v = verify_graph(g, limits);
    display_mismatches += v.notes.empty() ? 0 : 1;
    for (const auto& c : v.checks) {
      if (!c.passed) failed.push_back(c);
    }
    const SoundnessOutcome s = check_bound_soundness(g, ropts, o.bound_tol);
    for (const auto& c : s.checks) {
      if (!c.passed) failed.push_back(c);
      if (c.name == "real-rooted" && c.passed) ++real_rooted;
    }
    if (cf) ++claw_free;
    if (!failed.empty()) {
      ++failures;
      std::ostringstream edges;
      for (const auto& e : g.edges()) edges << " " << e.u << "-" << e.v;
      err << "failure on n=" << g.order() << " edges:" << edges.str() << "\n";
      for (const auto& c : failed) err << "  " << c.name << ": " << c.detail << "\n";
    }
  });
  if (o.json) {
    Json j;
    j["max_n"] = o.max_n;
    j["claw_free_only"] = o.claw_free_only;
    j["graphs_checked"] = checked;
    j["failures"] = failures;
    j["claw_free"] = claw_free;
    j["real_rooted"] = real_rooted;
    j["special_value_formula_mismatches"] = display_mismatches;
    out << j.dump(2) << "\n";
  } else {
    for (const auto& [n, c] : per_n) out << "n=" << n << ": " << c << " graphs\n";
    out << "claw-free: " << claw_free << ", real-rooted: " << real_rooted << "\n";
    out << "graphs where a closed special-value formula disagrees with direct evaluation: "
        << display_mismatches << "\n";
    out << checked << " graphs checked, " << failures << " failures\n";
  }
  return failures == 0 ? kOk : kFailure;
}

void add_source(CLI::App* cmd, Options& o) {
  auto* g = cmd->add_option("--gen", o.gen, "Generator spec, e.g. star:3 or complete_tree:2,6");
  auto* f = cmd->add_option("--file", o.file, "Edge-list file");
  g->excludes(f);
  f->excludes(g);
}

void add_tolerances(CLI::App* cmd, Options& o) {
  cmd->add_option("--tol", o.tol, "Scaled residual tolerance for roots")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--snap", o.snap, "Imaginary parts below snap*(1+|Re|) are dropped")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--bound-tol", o.bound_tol, "Slack in bound comparisons")
      ->check(CLI::PositiveNumber);
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Independence polynomials, zero-free bounds and forest expansions", "indpoly"};
  app.require_subcommand(1);
  Options o;

  auto* poly = app.add_subcommand("poly", "Independence polynomial, optionally with roots");
  add_source(poly, o);
  poly->add_flag("--roots", o.roots, "Also print all roots and lambda1");
  poly->add_flag("--json", o.json, "JSON output");
  add_tolerances(poly, o);

  auto* bounds = app.add_subcommand("bounds", "Zero-free radii and lambda1 bounds");
  add_source(bounds, o);
  bounds->add_flag("--exact", o.exact, "Compute lambda1 and check each bound against it");
  bounds->add_flag("--json", o.json, "JSON output");
  bounds->add_option("--mu", o.mu, "Also evaluate the univariate criterion at this mu");
  add_tolerances(bounds, o);

  auto* verify = app.add_subcommand("verify", "Check the forest expansion on one graph");
  add_source(verify, o);
  verify->add_flag("--json", o.json, "JSON output");
  verify->add_option("--max-edges", o.max_edges, "Edge limit for subset enumeration")
      ->check(CLI::Range(1, 63));

  auto* sweep = app.add_subcommand("sweep", "Run all checks on small graphs");
  sweep->add_option("--max-n", o.max_n, "Largest vertex count (default 7)")
      ->check(CLI::Range(1, 8));
  sweep->add_flag("--claw-free-only", o.claw_free_only, "Only claw-free graphs");
  sweep->add_flag("--json", o.json, "JSON output");
  sweep->add_option("--max-edges", o.max_edges, "Edge limit for subset enumeration")
      ->check(CLI::Range(1, 63));
  add_tolerances(sweep, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kParseError;
  }

  try {
    if (*poly) return cmd_poly(o, out);
    if (*bounds) return cmd_bounds(o, out);
    if (*verify) return cmd_verify(o, out);
    return cmd_sweep(o, out, err);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  } catch (const GraphError& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  } catch (const GuardError& e) {
    err << "guard exceeded: " << e.what() << "\n";
    return kGuardExceeded;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kFailure;
  }
}

}  // namespace indpoly::cli
