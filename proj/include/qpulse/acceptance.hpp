#pragma once

#include <string>
#include <vector>

namespace qpulse {

struct CriterionResult {
  std::string id;
  std::string name;
  std::string expected;
  std::string got;
  std::string tolerance;
  bool passed = false;
  bool counted = true;  // informational lines do not affect the verdict
};

struct AcceptanceOptions {
  // Base step for the analytic-decay and convergence checks; the convergence
  // set is {2 dt, dt, dt/2}. Preset runs keep their own step.
  double dt = 0.02;
  int jobs = 0;
};

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opts = {});

/// Fixed-width table, one line per criterion.
std::string format_report(const std::vector<CriterionResult>& results);

/// True when every counted criterion passed.
bool all_passed(const std::vector<CriterionResult>& results);

}  // namespace qpulse
