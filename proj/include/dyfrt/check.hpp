#pragma once

#include <cstddef>
#include <string>

namespace dyfrt {

/// Outcome of one certifier run.
struct CheckResult {
  std::string name;
  bool pass = true;
  std::size_t cases = 0;
  std::string witness;  // first failing instance, empty on pass

  void fail(std::string w) {
    if (pass) {
      pass = false;
      witness = std::move(w);
    }
  }
};

}  // namespace dyfrt
