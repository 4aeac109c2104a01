#include <iostream>

#include "homtwist/paper_suite.hpp"

// One PASS/FAIL line per acceptance criterion; failing notes are printed below.
int main() {
  const homtwist::SuiteResult r = homtwist::paper_suite();
  std::cout << homtwist::format_suite(r, false);
  return r.passed() ? 0 : 1;
}
