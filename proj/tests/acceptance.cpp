// Runs every acceptance criterion and prints one line per criterion.
#include <cstring>
#include <iostream>

#include "modvar/checker.hpp"

int main(int argc, char** argv) {
  modvar::RegressionOptions o;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--skip-slow") == 0) {
      o.skip_slow = true;
    }
  }
  bool all = true;
  for (auto const& r : modvar::verify_paper(o)) {
    all = all && r.passed;
    std::cout << (r.passed ? "PASS" : "FAIL") << " criterion " << r.id << ": "
              << r.title << " (" << r.detail << ")\n";
  }
  return all ? 0 : 1;
}
