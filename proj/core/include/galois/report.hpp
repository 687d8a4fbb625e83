#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace galois::report {

// Fixed default seed for every reproducible run (never time-based).
inline constexpr std::uint64_t kDefaultSeed = 20120329;

struct CriterionResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

// Runs the full verification sweep; every threshold is a frozen constant.
std::vector<CriterionResult> run_acceptance(std::uint64_t master_seed = kDefaultSeed);

}  // namespace galois::report
