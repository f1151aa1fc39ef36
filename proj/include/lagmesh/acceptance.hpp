#pragma once

#include <string>
#include <vector>

#include "lagmesh/experiment.hpp"

namespace lagmesh::acceptance {

inline constexpr int kCriterionCount = 9;

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  double seconds = 0.0;
  double budget_seconds = 0.0;
  std::vector<Check> checks;
};

/// Runs acceptance criterion `id` (1..9). Every comparison, including the
/// runtime budget, is one Check.
CriterionResult evaluate(int id);

/// Criteria tied to benchmark table `table` (1..5).
std::vector<int> criteria_for_table(int table);

}  // namespace lagmesh::acceptance
