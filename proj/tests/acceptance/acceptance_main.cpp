// Prints one line per acceptance criterion; exit status is nonzero if any fails.
#include <cstdio>

#include "dyfrt/acceptance.hpp"

int main() {
  const auto results = dyfrt::run_acceptance();
  int failed = 0;
  for (const auto& r : results) {
    std::printf("criterion %2d %-30s %s  (%.0f ms, budget %.0f ms)\n", r.id, r.title.c_str(), r.pass ? "PASS" : "FAIL",
                r.ms, r.budget_ms);
    for (const auto& c : r.checks)
      if (!c.pass) std::printf("    %s: %s\n", c.name.c_str(), c.witness.c_str());
    failed += !r.pass;
  }
  // Criterion 12 (end-to-end CLI run) is the separate cli_reproduce test.
  std::printf("%d/%zu criteria passed\n", static_cast<int>(results.size()) - failed, results.size());
  return failed == 0 ? 0 : 1;
}
