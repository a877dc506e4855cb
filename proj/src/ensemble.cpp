#include "qpulse/ensemble.hpp"

#include <omp.h>

#include "qpulse/errors.hpp"

namespace qpulse {

std::string_view to_string(RunStatus s) {
  switch (s) {
    case RunStatus::Ok: return "ok";
    case RunStatus::ConfigFailed: return "FAILED(config)";
    case RunStatus::IntegrationFailed: return "FAILED(integration)";
    case RunStatus::ModelFailed: return "FAILED(model)";
  }
  return "FAILED";
}

RunOutcome run_captured(const ScenarioConfig& cfg, bool keep_result) {
  RunOutcome out;
  try {
    ScenarioResult r = run_scenario(cfg);
    out.summary = r.summary;
    if (keep_result) out.result = std::move(r);
  } catch (const ConfigError& e) {
    out.status = RunStatus::ConfigFailed;
    out.error = e.what();
  } catch (const IntegrationError& e) {
    out.status = RunStatus::IntegrationFailed;
    out.error = e.what();
  } catch (const std::exception& e) {
    // Domain, positivity and model-consistency failures all land here.
    out.status = RunStatus::ModelFailed;
    out.error = e.what();
  }
  return out;
}

std::vector<RunOutcome> run_batch(const std::vector<ScenarioConfig>& configs, const BatchOptions& opts) {
  std::vector<RunOutcome> outcomes(configs.size());
  const int jobs = opts.jobs > 0 ? opts.jobs : omp_get_max_threads();
  const auto n = static_cast<std::ptrdiff_t>(configs.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(jobs)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    outcomes[static_cast<std::size_t>(i)] = run_captured(configs[static_cast<std::size_t>(i)], opts.keep_results);
  }
  return outcomes;
}

std::vector<RunOutcome> run_batch_serial(const std::vector<ScenarioConfig>& configs, const BatchOptions& opts) {
  std::vector<RunOutcome> outcomes;
  outcomes.reserve(configs.size());
  for (const auto& cfg : configs) outcomes.push_back(run_captured(cfg, opts.keep_results));
  return outcomes;
}

}  // namespace qpulse
