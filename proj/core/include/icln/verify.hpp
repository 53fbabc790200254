#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "icln/poset.hpp"
#include "icln/reference_table.hpp"

namespace icln {

struct VerifyOptions {
  int max_len = 6;        // word length budget for pairwise checks
  int parity_len = 8;     // word length budget for the parity suite
  int agreement_len = 12; // word length budget for normalizer agreement
  SearchBound bound{4, 3};
  int samples = 1000;     // sampled (model, formula) pairs per sampled suite
  std::uint32_t seed = 0x1c1a0814;
};

struct SuiteResult {
  std::string name;
  bool passed = false;
  long long checks = 0;   // individual assertions evaluated
  std::string detail;     // first counterexample, or a summary
};

// Runs every suite regardless of failures; order and names are stable.
std::vector<SuiteResult> run_verification(const VerifyOptions& opt = {});

bool all_passed(const std::vector<SuiteResult>& results);

}  // namespace icln
