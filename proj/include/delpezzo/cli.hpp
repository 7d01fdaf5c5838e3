#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace delpezzo::cli {

/// Exit codes: 0 success, 1 contradiction or indeterminate result (a JSON
/// body is still written), 2 usage or parse error.
inline constexpr int kOk = 0;
inline constexpr int kNegative = 1;
inline constexpr int kUsage = 2;

/// Runs one subcommand. `args` excludes the program name. JSON goes to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace delpezzo::cli
