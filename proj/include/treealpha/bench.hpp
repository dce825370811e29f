#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ta {

struct BenchCase {
  std::uint64_t seed = 0;  // replays the case on its own
  bool pass = true;
  std::string detail;
};

struct BenchSummary {
  std::string suite;
  std::uint64_t seed = 0;
  int passed = 0;
  int failed = 0;
  std::vector<BenchCase> cases;
};

// Suites: "mwis-oracle", "esd-mutations", "layered-invariants".
std::vector<std::string> bench_suites();
BenchSummary run_bench(const std::string& suite, std::uint64_t seed);

}  // namespace ta
