#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wordmaps {

inline constexpr const char* kToolVersion = "0.1.0";

/// Runs one CLI invocation (args exclude the program name) and writes the
/// report to `out`. Returns the process exit code: 0 success, 1 invalid
/// input, 2 budget exceeded, 3 internal invariant violation.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wordmaps
