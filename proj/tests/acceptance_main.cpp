// Runs every acceptance criterion and prints one pass/fail line per
// criterion; nonzero exit on any failure.

#include <iostream>

#include "borbit/selftest.hpp"

int main() {
  borbit::CheckResult res = borbit::run_check_suite("all", std::cout);
  std::cout << res.passed << " passed, " << res.failed << " failed\n";
  return res.failed == 0 ? 0 : 1;
}
