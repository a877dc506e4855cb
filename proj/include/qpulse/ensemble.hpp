#pragma once

#include <string>
#include <vector>

#include "qpulse/scenario.hpp"

namespace qpulse {

enum class RunStatus { Ok, ConfigFailed, IntegrationFailed, ModelFailed };

std::string_view to_string(RunStatus s);

struct RunOutcome {
  RunStatus status = RunStatus::Ok;
  std::string error;
  ScenarioSummary summary;
  // Full records are kept only when requested; sweeps over long runs would
  // otherwise hold every trajectory in memory.
  std::optional<ScenarioResult> result;
};

struct BatchOptions {
  int jobs = 0;  // <= 0: OpenMP default
  bool keep_results = false;
};

/// Runs every config independently with OpenMP over configs. A failing run is
/// reported in its outcome and never aborts the others. Outcome i always
/// belongs to configs[i].
std::vector<RunOutcome> run_batch(const std::vector<ScenarioConfig>& configs, const BatchOptions& opts = {});

/// Same contract, one run after another. Kept as the reference for testing
/// and benchmarking the parallel path.
std::vector<RunOutcome> run_batch_serial(const std::vector<ScenarioConfig>& configs,
                                         const BatchOptions& opts = {});

/// Single run with the same error capture as the batch runners.
RunOutcome run_captured(const ScenarioConfig& cfg, bool keep_result);

}  // namespace qpulse
