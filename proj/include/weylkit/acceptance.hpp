#pragma once

#include <string>
#include <vector>

namespace weylkit {

/**
 * One entry of the reproduction suite.  `pass` already folds in the time
 * limit: a criterion that computes the right values but runs past
 * `limit_seconds` fails.
 */
struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  double seconds = 0;
  double limit_seconds = 0;
  std::vector<std::string> failures; // one line per failed check
  std::vector<std::string> notes;    // reported values, not asserted
};

inline constexpr int kCriterionCount = 10;

/// Runs criterion `id` (1..kCriterionCount).  Exceptions inside a criterion
/// are caught and turned into a failure line.
CriterionResult run_criterion(int id);

std::vector<CriterionResult> run_all_criteria();

} // namespace weylkit
