#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "dyfrt/check.hpp"
#include "dyfrt/random.hpp"
#include "dyfrt/wgroup.hpp"

namespace dyfrt {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  double ms = 0;
  double budget_ms = 0;
  std::vector<CheckResult> checks;
};

struct AcceptanceOptions {
  std::uint64_t seed = kDefaultSeed;
  std::size_t group_cap = kDefaultGroupCap;
  std::set<int> only;  // empty runs every criterion
};

inline constexpr int kCriterionCount = 11;

/// Runs criteria 1-11. A criterion passes when all its checks pass and it
/// finishes inside its time budget.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opts = {});
CriterionResult run_criterion(int id, const AcceptanceOptions& opts = {});

}  // namespace dyfrt
