#include <doctest.h>

#include <sstream>

#include "qpulse/ensemble.hpp"

using namespace qpulse;

namespace {

std::vector<ScenarioConfig> small_batch() {
  std::vector<ScenarioConfig> out;
  for (int seed = 1; seed <= 4; ++seed) {
    ScenarioConfig c = preset("fig5");
    c.pulses.seed = static_cast<std::uint64_t>(seed);
    c.pulses.count = 2;
    c.integration.t_end = 900.0;
    out.push_back(c);
  }
  ScenarioConfig cell = preset("fig8b");
  cell.integration.t_end = 300.0;
  out.push_back(cell);
  return out;
}

std::string csv(const RunOutcome& o) {
  std::ostringstream os;
  write_csv(os, *o.result);
  return os.str();
}

}  // namespace

TEST_CASE("parallel batch reproduces the serial reference bit for bit") {
  const auto configs = small_batch();
  BatchOptions opts;
  opts.jobs = 3;
  opts.keep_results = true;
  const auto serial = run_batch_serial(configs, opts);
  const auto parallel = run_batch(configs, opts);
  REQUIRE(serial.size() == parallel.size());
  for (std::size_t i = 0; i < serial.size(); ++i) {
    REQUIRE(serial[i].status == RunStatus::Ok);
    REQUIRE(parallel[i].status == RunStatus::Ok);
    CHECK(serial[i].summary.final_work == parallel[i].summary.final_work);
    CHECK(csv(serial[i]) == csv(parallel[i]));
  }
}

TEST_CASE("a failing run does not affect the others") {
  auto configs = small_batch();
  configs[1].integration.dt = 0.2;
  configs[2].photocell.gamma01 = -1.0;  // ignored: two-level run
  const auto out = run_batch(configs, {});
  CHECK(out[1].status == RunStatus::ConfigFailed);
  CHECK(out[1].error.find("dt") != std::string::npos);
  CHECK(out[0].status == RunStatus::Ok);
  CHECK(out[2].status == RunStatus::Ok);
  CHECK(out[3].status == RunStatus::Ok);
  CHECK_FALSE(out[0].result.has_value());
}
