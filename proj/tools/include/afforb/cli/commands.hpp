#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace afforb::cli {

enum ExitCode : int {
  kOk = 0,
  kInternal = 1,
  kUsage = 2,
  kNotEquivalent = 3,
  kInsufficientEnclosure = 4,
  kSelfcheckFailed = 5,
};

// args excludes the program name. JSON goes to out, diagnostics to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace afforb::cli
