#pragma once

#include <string>
#include <vector>

namespace rigidtrace {

// Outcome of one acceptance criterion. detail carries counts and witnesses
// only, never timings, so reports are identical across runs.
struct CriterionResult {
  int number = 0;
  std::string name;
  bool pass = false;
  std::string detail;
};

// Criteria 1..11 individually; the wall-clock criterion 12 only exists for a
// whole run. Throws std::invalid_argument outside that range.
CriterionResult run_criterion(int k);

// All twelve in order: runs 1..11, then appends 12, which passes when the
// others completed within the 120 second budget.
std::vector<CriterionResult> run_acceptance();

}  // namespace rigidtrace
