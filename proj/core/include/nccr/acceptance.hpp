#pragma once
// The ten acceptance criteria of the library, runnable from tests and the CLI.
#include <string>
#include <vector>

namespace nccr::acceptance {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  /// What was checked, or the first counterexample on failure.
  std::string detail;
  double seconds = 0.0;
};

constexpr int kCriterionCount = 10;

/// Runs criterion `id` in [1, 10]. Exceptions inside a check count as failure.
CriterionResult run_criterion(int id);

std::vector<CriterionResult> run_all();

/// "criterion <id>: PASS|FAIL - <title> (<detail>)".
std::string format_line(const CriterionResult& r);

}  // namespace nccr::acceptance
