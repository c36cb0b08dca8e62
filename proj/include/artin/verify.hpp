#pragma once

#include <string>
#include <vector>

namespace artin {

struct CheckResult {
  std::string name;
  bool pass = false;
  double ms = 0;
  std::string detail;  // mismatch description, empty on pass
};

struct SuiteReport {
  std::string suite;
  int n_max = 0;
  bool all_pass = false;
  double total_ms = 0;
  std::vector<CheckResult> checks;
};

/// Available verification suites:
///   poincare    oracle Poincare series against the closed products
///   shift       complex soundness and the filtration quotient isomorphism
///   theorem-qt  two-variable cohomology against every PID specialization
///   theorem-t   the q = -1 computation, three ways
///   e1          first-page positions, d1 coefficient, second-page identity
///   reps        representation relations, embeddings, equivalence
///   euler       orbit-space cell counts and Betti number consistency
std::vector<std::string> suite_names();

/// Runs one suite up to its size cap; n_max <= 0 selects the per-suite
/// default (chosen so each suite finishes within its documented budget).
/// Unknown suite names throw std::invalid_argument.
SuiteReport run_suite(const std::string& suite, int n_max = 0);

}  // namespace artin
