#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace permlocal {

struct CheckResult {
  std::string name;
  bool ok = true;
  std::int64_t cases = 0;
  std::string detail;  // first counterexample when !ok
};

// Exhaustive exact checks up to size max_n. Suites: bijections, identities,
// normalization, symbolic, enumeration, all.
std::vector<CheckResult> verify_suite(const std::string& suite, int max_n);
std::vector<std::string> verify_suite_names();

}  // namespace permlocal
