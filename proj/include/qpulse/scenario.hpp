#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qpulse/dynamics.hpp"
#include "qpulse/photocell.hpp"
#include "qpulse/pulse.hpp"
#include "qpulse/thermo.hpp"
#include "qpulse/two_level.hpp"

namespace qpulse {

enum class SystemKind { TwoLevel, Photocell };
enum class InitialState { Ground, Excited, Superposition };

struct PulseSpec {
  PulseMode mode = PulseMode::Regular;
  int count = 5;                 // regular / irregular
  double first_peak = 0.0;       // 1/w0
  double spacing = 0.0;          // 1/w0
  double jitter = 0.3;           // irregular only
  std::uint64_t seed = 1;        // irregular only
  double mean_photons = 1.0;     // <n> = |alpha|^2
  double phase = 0.0;            // arg(alpha)
  double bandwidth = 1.0 / (4.0 * 3.14159265358979323846);  // Omega = w0 / 4pi
  double duration = 0.0;         // continuum only

  [[nodiscard]] PulseSequence build() const;
};

struct ScenarioConfig {
  std::string name = "custom";
  SystemKind system = SystemKind::TwoLevel;
  TwoLevelParams two_level;
  PhotocellParams photocell;
  PulseSpec pulses;
  IntegrationConfig integration;
  std::optional<InitialState> initial;  // default: superposition (two-level), ground (photocell)
  std::string output;

  /// Throws ConfigError with a field-qualified message.
  void validate() const;
  [[nodiscard]] InitialState initial_state() const;
};

/// Names accepted by preset(): fig2 fig3 fig4 fig5 fig7 fig8a fig8b.
std::vector<std::string> preset_names();
ScenarioConfig preset(std::string_view name);

/// JSON with kebab-case keys; unknown keys are rejected.
std::string to_json(const ScenarioConfig& cfg);
ScenarioConfig config_from_json(std::string_view text);

/// Replace one numeric field addressed by a dotted path, e.g.
/// "photocell.big-gamma" or "pulses.mean-photons".
ScenarioConfig with_parameter(const ScenarioConfig& cfg, std::string_view path, double value);

struct PhotocellRow {
  ElectricalRecord electrical;
  DonorAcceptorSplit split;
  double efficiency_smoothed = 0.0;  // NaN when undefined
  std::array<double, 4> populations{};
};

struct RecordRow {
  ThermoRecord thermo;
  Complex rho00;
  Complex rho01;
  Complex rho11;
  Complex g;
  std::optional<PhotocellRow> photocell;
};

struct ScenarioSummary {
  double final_work = 0.0;
  double final_heat = 0.0;
  double final_entropy = 0.0;
  double energy_change = 0.0;
  std::optional<double> min_entropy_production;
  double max_first_law_residual = 0.0;
  std::optional<double> final_efficiency;
  IntegrationStats stats;
};

struct ScenarioResult {
  ScenarioConfig config;
  std::vector<RecordRow> rows;
  ScenarioSummary summary;
};

/// Builds the model and drive, integrates, and assembles all records.
ScenarioResult run_scenario(const ScenarioConfig& cfg);

SystemModel build_model(const ScenarioConfig& cfg);
DensityOperator build_initial_state(const ScenarioConfig& cfg);

/// Column names written by write_csv for a given system.
std::vector<std::string> csv_columns(SystemKind system);

/// Header plus one row per record; 17 significant digits; NaN / undefined
/// fields are left empty.
void write_csv(std::ostream& os, const ScenarioResult& result);

std::string format_summary(const ScenarioResult& result);

}  // namespace qpulse
