#include <benchmark/benchmark.h>

#include "alebench/adaptation.hpp"
#include "alebench/channel.hpp"
#include "alebench/experiment.hpp"
#include "alebench/ga.hpp"
#include "alebench/lms.hpp"
#include "alebench/modem.hpp"
#include "alebench/pso.hpp"
#include "alebench/wiener.hpp"

namespace {

using namespace alebench;

SampleBuffer desk_signal(double snr_db) {
  ModemConfig modem;
  Rng bits_rng(1), noise_rng(2);
  return add_awgn(modulate(generate_bits(1000, bits_rng), modem), snr_db,
                  noise_rng);
}

void BM_FilterOutput(benchmark::State& state) {
  const SampleBuffer d = desk_signal(0.0);
  const AleConfig cfg{static_cast<int>(state.range(0)), 1};
  WeightVector w(static_cast<std::size_t>(cfg.order), 0.1);
  for (auto _ : state) benchmark::DoNotOptimize(filter_output(d, w, cfg));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(d.size()));
}
BENCHMARK(BM_FilterOutput)->Arg(5)->Arg(16);

void BM_MseCostDirect(benchmark::State& state) {
  const SampleBuffer d = desk_signal(0.0);
  const AleConfig cfg{5, 1};
  const WeightVector w(5, 0.1);
  for (auto _ : state) benchmark::DoNotOptimize(mse_cost(d, w, cfg));
}
BENCHMARK(BM_MseCostDirect);

void BM_BlockCostEval(benchmark::State& state) {
  const SampleBuffer d = desk_signal(0.0);
  const AleConfig cfg{5, 1};
  const BlockCost cost(d, cfg);
  const WeightVector w(5, 0.1);
  for (auto _ : state) benchmark::DoNotOptimize(cost(w));
}
BENCHMARK(BM_BlockCostEval);

void BM_BlockCostBuild(benchmark::State& state) {
  const SampleBuffer d = desk_signal(0.0);
  const AleConfig cfg{5, 1};
  for (auto _ : state) benchmark::DoNotOptimize(BlockCost(d, cfg));
}
BENCHMARK(BM_BlockCostBuild);

void BM_WienerOracle(benchmark::State& state) {
  const SampleBuffer d = desk_signal(0.0);
  const AleConfig cfg{5, 1};
  for (auto _ : state) benchmark::DoNotOptimize(wiener_oracle(d, cfg));
}
BENCHMARK(BM_WienerOracle);

void BM_LmsRun(benchmark::State& state) {
  const SampleBuffer d = desk_signal(-2.0);
  const AleConfig cfg{5, 1};
  LMSConfig lms;
  for (auto _ : state) benchmark::DoNotOptimize(lms_run(d, lms, cfg));
}
BENCHMARK(BM_LmsRun);

void BM_GaRun(benchmark::State& state) {
  const SampleBuffer d = desk_signal(0.0);
  const AleConfig cfg{5, 1};
  GAConfig ga;
  ga.population = static_cast<int>(state.range(0));
  ga.generations = static_cast<int>(state.range(1));
  for (auto _ : state) {
    Rng rng(3);
    benchmark::DoNotOptimize(ga_run(d, ga, cfg, rng));
  }
}
BENCHMARK(BM_GaRun)->Args({110, 300})->Args({60, 100});

void BM_PsoRun(benchmark::State& state) {
  const SampleBuffer d = desk_signal(0.0);
  const AleConfig cfg{5, 1};
  PSOConfig pso;
  pso.particles = static_cast<int>(state.range(0));
  pso.iterations = static_cast<int>(state.range(1));
  for (auto _ : state) {
    Rng rng(4);
    benchmark::DoNotOptimize(pso_run(d, pso, cfg, rng));
  }
}
BENCHMARK(BM_PsoRun)->Args({60, 200});

void BM_RunSinglePipeline(benchmark::State& state) {
  ExperimentSpec spec;
  spec.kind = ExperimentKind::ber_vs_snr_awgn;
  spec.grid = {0.0};
  const Algorithm algo = static_cast<Algorithm>(state.range(0));
  const RunPoint point = resolve_point(spec, algo, 0, 0);
  for (auto _ : state) benchmark::DoNotOptimize(run_single(point, 7));
}
BENCHMARK(BM_RunSinglePipeline)
    ->Arg(static_cast<int>(Algorithm::lms))
    ->Arg(static_cast<int>(Algorithm::ga))
    ->Arg(static_cast<int>(Algorithm::pso));

}  // namespace

BENCHMARK_MAIN();
