#pragma once

#include <iosfwd>
#include <string>

namespace borbit {

struct CheckResult {
  int passed = 0;
  int failed = 0;
};

// Suites: "all", "orders" (order-characterization equivalences), "locsys"
// (local-system counts and G-order forms), "sequences" (sign-sequence
// calculus). Prints one pass/fail line per criterion.
CheckResult run_check_suite(const std::string& suite, std::ostream& out);

bool known_suite(const std::string& suite);

}  // namespace borbit
