#include <iostream>

#include "acceptance.hpp"

int main() {
  auto const results = twistcross::acceptance::run_acceptance();
  int        failed  = 0;
  for (auto const& r : results) {
    std::cout << r.line() << '\n';
    failed += r.passed() ? 0 : 1;
  }
  std::cout << (results.size() - failed) << '/' << results.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
