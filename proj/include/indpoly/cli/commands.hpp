#pragma once

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "indpoly/graph.hpp"
#include "indpoly/roots.hpp"
#include "indpoly/scheme.hpp"

namespace indpoly::cli {

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,
  kParseError = 2,
  kGuardExceeded = 3,
};

/// Entry point of the `indpoly` executable. Data goes to `out`, diagnostics
/// to `err`; the return value is the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

struct CheckResult {
  std::string name;
  bool passed = false;
  /// First counterexample when failed.
  std::string detail;
};

struct VerifyOutcome {
  std::vector<CheckResult> checks;
  /// Disagreements of the closed special-value formulas with direct
  /// evaluation. Informational, not failures.
  std::vector<std::string> notes;

  bool passed() const;
};

/// Partition-scheme conditions, the identity on every connected R, the forest
/// sum, the special values and the polymer oracle at z in {1, 2, -1/2, 1/3}.
/// GuardError propagates.
VerifyOutcome verify_graph(const Graph& g, const SchemeLimits& limits = {});

struct SoundnessOutcome {
  std::vector<CheckResult> checks;
  bool passed() const;
};

/// Root-based checks: no root inside the optimized FP radius, and for
/// claw-free graphs none inside the claw-free radii and all roots real.
SoundnessOutcome check_bound_soundness(const Graph& g, const RootOptions& opts = {},
                                       double tol = 1e-9);

/// Graphs on 1..max_n vertices from every edge mask, keeping one graph per
/// class of (edge count, colour-refinement signature). Non-isomorphic graphs
/// can share a class, so this is a reduction, not an isomorphism-exact list.
void for_each_sweep_graph(int max_n, const std::function<void(const Graph&)>& visit);

}  // namespace indpoly::cli
