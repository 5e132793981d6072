#pragma once

// The acceptance suite, shared by `qg selftest` and the ctest binary.

#include <cstdint>
#include <string>
#include <vector>

#include "qg/check.hpp"

namespace qg {

struct CriterionOutcome {
  int id = 0;
  std::string title;
  bool pass = false;
  /// Measured figures, one line.
  std::string detail;
  double seconds = 0;
  /// Individual checks that fed the verdict.
  std::vector<CheckResult> checks;
};

constexpr int kCriteria = 10;

CriterionOutcome run_criterion(int id, std::uint64_t seed);
/// All criteria in order, or only those listed.
std::vector<CriterionOutcome> run_acceptance(std::uint64_t seed,
                                             const std::vector<int> &only = {});

} // namespace qg
