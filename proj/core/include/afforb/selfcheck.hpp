#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace afforb {

struct SelfcheckOptions {
  int max_den = 12;     // Farey, companion and rank-1 suites
  int max_normal = 8;   // |a_i| bound for the c_x suite
  int simplexes = 200;  // random simplexes for the regularity suite
  std::uint64_t seed = 1;
};

struct SuiteResult {
  std::string name;
  long checked = 0;
  long violations = 0;
  std::vector<std::string> failures;  // first few offending cases
};

// Cross-validates the library against the brute-force oracles.
std::vector<SuiteResult> run_selfcheck(const SelfcheckOptions& options);

}  // namespace afforb
