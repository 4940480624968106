#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace dyfrt::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitCheckFailure = 1;
inline constexpr int kExitParseError = 2;

/// Parses args (without the program name), runs the subcommand and writes the
/// JSON report to out. Diagnostics for parse errors go to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dyfrt::cli
