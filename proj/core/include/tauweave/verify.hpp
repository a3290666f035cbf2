#pragma once

#include "tauweave/quiver.hpp"

#include <optional>
#include <string>
#include <vector>

namespace tauweave::verify {

struct CheckResult {
  std::string name;
  bool pass = false;
  double ms = 0.0;
  std::string detail;
};

struct VerifyConfig {
  int weak_order_max_n = 5;  // criterion 1 runs n = 1..this (n+1 <= 6)
  int census_max_n = 10;     // criterion 2
  int iso_max_n = 4;         // criterion 4
  bool check_mirror = true;  // cross-check the verbatim mirrored lemma
  bool check_oracle = true;  // criteria 3, 5, 6, 9
  std::uint64_t node_budget = 40320;
  // extra presentations to put through the condition checker and, when the
  // checker passes and the rank fits the budget, the oracle-equivalence run
  std::vector<std::pair<std::string, oracle::QuiverPresentation>> extra_algebras;
};

// Runs every acceptance criterion; one result per criterion, in order.
std::vector<CheckResult> run_acceptance(const VerifyConfig &config);

// Formats "[PASS] ..." / "[FAIL] ..." lines.
std::string format_report(const std::vector<CheckResult> &results);

bool all_passed(const std::vector<CheckResult> &results);

} // namespace tauweave::verify
