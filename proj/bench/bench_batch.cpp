// Serial reference vs OpenMP batch over independent scenario runs.
#include <benchmark/benchmark.h>

#include "qpulse/ensemble.hpp"

namespace {

std::vector<qpulse::ScenarioConfig> seeds(int n) {
  std::vector<qpulse::ScenarioConfig> out;
  for (int s = 1; s <= n; ++s) {
    auto c = qpulse::preset("fig5");
    c.pulses.seed = static_cast<std::uint64_t>(s);
    c.pulses.count = 3;
    c.integration.t_end = 4.0 * c.pulses.spacing;
    out.push_back(c);
  }
  return out;
}

void BM_BatchSerial(benchmark::State& state) {
  const auto configs = seeds(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(qpulse::run_batch_serial(configs));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_BatchParallel(benchmark::State& state) {
  const auto configs = seeds(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(qpulse::run_batch(configs));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

}  // namespace

BENCHMARK(BM_BatchSerial)->Arg(4)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BatchParallel)->Arg(4)->Arg(16)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
