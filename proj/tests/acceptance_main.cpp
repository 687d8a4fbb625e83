// Verification sweep: one pass/fail line per criterion, nonzero exit if any
// criterion fails.

#include <cstdio>

#include "galois/report.hpp"

int main() {
  const auto results = galois::report::run_acceptance();
  bool all_pass = true;
  for (const auto& r : results) {
    std::printf("%s %s --%s\n", r.pass ? "[PASS]" : "[FAIL]", r.name.c_str(),
                r.detail.c_str());
    all_pass = all_pass && r.pass;
  }
  return all_pass ? 0 : 1;
}
