#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace douady::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitIdentityFailure = 1;
inline constexpr int kExitUsage = 2;

// One row of `selfcheck`.
struct Check {
  std::string identity;
  std::string scope;
  bool pass = true;
  std::string detail;  // both sides of the first failure
};

// Renders checks as a TSV table; failures go to `err` with their detail.
// Returns kExitOk or kExitIdentityFailure.
int report_checks(const std::vector<Check>& checks, std::string& table, std::ostream& err);

// Runs one subcommand. `args` excludes the program name. Tables go to `out`
// (or to --output), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace douady::cli
