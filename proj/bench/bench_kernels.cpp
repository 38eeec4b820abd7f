// Serial reference vs OpenMP kernels. Arg 0 is Serial, 1 is Parallel.

#include <benchmark/benchmark.h>

#include "coind/dist.hpp"
#include "coind/kernels.hpp"

using namespace coind;

namespace {

Execution exec_of(const benchmark::State& state) {
  return state.range(0) == 0 ? Execution::Serial : Execution::Parallel;
}

void BM_SampleTally(benchmark::State& state) {
  const DistSpec spec = DistSpec::parse("uniform:3");
  const SamplerFactory make = [&] { return spec.build(); };
  for (auto _ : state) {
    benchmark::DoNotOptimize(sample_tally(make, 50'000, 7, kDefaultStepBudget, exec_of(state)));
  }
  state.SetItemsProcessed(state.iterations() * 50'000);
}

void BM_KaSuite(benchmark::State& state) {
  KaConfig cfg;
  cfg.depth = 5;
  cfg.trials = 40;
  const Alphabet ab = Alphabet::from_utf8("ab");
  for (auto _ : state) benchmark::DoNotOptimize(ka_axiom_suite(cfg, ab, exec_of(state)));
}

void BM_SieveBounds(benchmark::State& state) {
  const std::vector<std::int64_t> bounds{250, 500, 750, 1000};
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify_sieve_bounds(bounds, kDefaultStepBudget, exec_of(state)));
  }
}

}  // namespace

BENCHMARK(BM_SampleTally)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_KaSuite)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SieveBounds)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
