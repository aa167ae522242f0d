#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "chipfire/r10.hpp"

namespace chipfire::engine {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
  double millis = 0.0;
};

/// Runs the built-in checks of the R10 results against `constants` (pass a
/// corrupted copy to exercise the failure path).
std::vector<CheckResult> run_selftest(const r10::Constants& constants);
std::vector<CheckResult> run_selftest();

bool all_passed(const std::vector<CheckResult>& results);

/// One "[PASS] name (detail, 1.2 ms)" line per check.
void print_report(std::ostream& os, const std::vector<CheckResult>& results);

}  // namespace chipfire::engine
