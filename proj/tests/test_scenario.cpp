#include <doctest.h>

#include <sstream>

#include "qpulse/errors.hpp"
#include "qpulse/scenario.hpp"

using namespace qpulse;

namespace {

ScenarioConfig short_run(const std::string& name, double t_end) {
  ScenarioConfig c = preset(name);
  c.integration.t_end = t_end;
  return c;
}

std::string csv_of(const ScenarioConfig& c) {
  std::ostringstream os;
  write_csv(os, run_scenario(c));
  return os.str();
}

std::string header_of(const std::string& csv) { return csv.substr(0, csv.find('\n')); }

}  // namespace

TEST_CASE("every preset validates and round-trips through JSON") {
  CHECK(preset_names().size() == 7);
  for (const auto& name : preset_names()) {
    const auto cfg = preset(name);
    CHECK_NOTHROW(cfg.validate());
    const std::string text = to_json(cfg);
    CHECK(to_json(config_from_json(text)) == text);
  }
  CHECK_THROWS_AS(preset("fig6"), ConfigError);
}

TEST_CASE("preset contents") {
  CHECK(preset("fig3").pulses.mean_photons == 10.0);
  CHECK(preset("fig5").pulses.mode == PulseMode::Irregular);
  CHECK(preset("fig7").system == SystemKind::Photocell);
  CHECK(preset("fig8b").pulses.mode == PulseMode::Continuum);
  CHECK(preset("fig8a").pulses.mode == PulseMode::Regular);
  CHECK(preset("fig2").initial_state() == InitialState::Superposition);
  CHECK(preset("fig7").initial_state() == InitialState::Ground);
}

TEST_CASE("partial configs take defaults") {
  const auto cfg = config_from_json(R"({"system": "photocell", "photocell": {"big-gamma": 0.5}})");
  CHECK(cfg.system == SystemKind::Photocell);
  CHECK(cfg.photocell.load_rate == 0.5);
  CHECK(cfg.photocell.gamma01 == PhotocellParams{}.gamma01);
}

TEST_CASE("config errors name the field") {
  auto message = [](const char* text) -> std::string {
    try {
      (void)config_from_json(text);
    } catch (const ConfigError& e) {
      return e.what();
    }
    return "";
  };
  CHECK(message(R"({"pulses": {"count": "five"}})").find("pulses.count") != std::string::npos);
  CHECK(message(R"({"pulses": {"sharpness": 1}})").find("pulses.sharpness") != std::string::npos);
  CHECK(message(R"({"system": "qutrit"})").find("system") != std::string::npos);
  CHECK(message(R"({"pulses": {"mode": "chirped"}})").find("pulses.mode") != std::string::npos);
  CHECK(message("{ not json").find("malformed") != std::string::npos);

  ScenarioConfig bad = preset("fig2");
  bad.integration.dt = 0.2;
  CHECK_THROWS_AS(bad.validate(), ConfigError);
  bad = preset("fig7");
  bad.photocell.gamma12 = -1.0;
  try {
    bad.validate();
    FAIL("expected a config error");
  } catch (const ConfigError& e) {
    CHECK(std::string(e.what()).find("photocell.gamma12") != std::string::npos);
  }
}

TEST_CASE("dotted parameter overrides") {
  const auto base = preset("fig7");
  CHECK(with_parameter(base, "photocell.big-gamma", 0.05).photocell.load_rate == 0.05);
  CHECK(with_parameter(base, "pulses.mean-photons", 3.0).pulses.mean_photons == 3.0);
  CHECK(with_parameter(base, "pulses.count", 4.0).pulses.count == 4);
  CHECK(with_parameter(base, "photocell.phonon-energy", 0.05).photocell.phonon_energy_ev == 0.05);
  CHECK_THROWS_AS(with_parameter(base, "pulses.count", 4.5), ConfigError);
  CHECK_THROWS_AS(with_parameter(base, "photocell.no-such", 1.0), ConfigError);
  CHECK_THROWS_AS(with_parameter(base, "system", 1.0), ConfigError);
}

TEST_CASE("csv schema") {
  const std::string two = csv_of(short_run("fig2", 20.0));
  CHECK(header_of(two) == "t,rho00_re,rho01_re,rho01_im,rho11_re,g_re,g_im,E,P,J,W,Q,S,dSdt,sigma,residual");
  const std::string cell = csv_of(short_run("fig7", 20.0));
  CHECK(header_of(cell) ==
        "t,rho00_re,rho01_re,rho01_im,rho11_re,g_re,g_im,E,P,J,W,Q,S,dSdt,sigma,residual,"
        "I,V,Pout,PD,eta,E_D,E_A,J_D,J_A,S_D,S_A,rho00,rho11,rho22,rho33,eta_inst");
  // Multi-reservoir sigma and the early-time voltage are undefined, written empty.
  std::istringstream rows(cell);
  std::string line;
  std::getline(rows, line);
  std::getline(rows, line);
  CHECK(line.find(",,") != std::string::npos);
}

TEST_CASE("csv output is deterministic") {
  auto cfg = short_run("fig5", 400.0);
  CHECK(csv_of(cfg) == csv_of(cfg));
}

TEST_CASE("summary and cumulative quantities") {
  const auto r = run_scenario(short_run("fig2", 500.0));
  CHECK(r.rows.size() == 2501);
  CHECK(r.rows.back().thermo.t == 500.0);
  CHECK(r.summary.energy_change == doctest::Approx(r.summary.final_work + r.summary.final_heat).epsilon(1e-4));
  REQUIRE(r.summary.min_entropy_production.has_value());
  CHECK(*r.summary.min_entropy_production >= -1e-6);
  CHECK(format_summary(r).find("min sigma") != std::string::npos);
}
