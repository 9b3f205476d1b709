#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ratpow {

struct CheckResult {
  std::string name;
  bool passed = true;
  std::int64_t cases = 0;
  std::string detail;  // first failure
};

struct SuiteOptions {
  std::uint64_t seed = 20240601;
  int corpus_size = 60;
};

/// Internal-consistency suite behind `ratpow check`.
std::vector<CheckResult> run_invariant_suite(const SuiteOptions& options = {});

}  // namespace ratpow
