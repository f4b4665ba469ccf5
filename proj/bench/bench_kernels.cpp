// Copyright 2026 The kout Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Serial reference vs OpenMP kernels: connectivity sweeps and brute-force
// robustness checks.

#include <benchmark/benchmark.h>

#include "kout/graph.hpp"
#include "kout/montecarlo.hpp"
#include "kout/robustness.hpp"

namespace {

using namespace kout;

ExperimentConfig sweep(std::uint64_t n) {
  ExperimentConfig c;
  c.n = n;
  c.k_range = {2, 8};
  c.trials = 64;
  c.gamma_spec.alpha = 0.4;
  c.master_seed = RngSeed{1};
  return c;
}

void BM_SweepSerial(benchmark::State& state) {
  const auto config = sweep(static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_giant_sweep(config, {.exec = Execution::serial}));
  }
  state.SetItemsProcessed(state.iterations() * 7 * 64);
}
BENCHMARK(BM_SweepSerial)->Arg(5000)->Arg(50000)->Unit(benchmark::kMillisecond);

void BM_SweepParallel(benchmark::State& state) {
  const auto config = sweep(static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_giant_sweep(config, {.exec = Execution::parallel}));
  }
  state.SetItemsProcessed(state.iterations() * 7 * 64);
}
BENCHMARK(BM_SweepParallel)->Arg(5000)->Arg(50000)->Unit(benchmark::kMillisecond);

void BM_TrialKernel(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  std::uint64_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_kout_trial(n, 4, n / 10, DeletionMode::uniform_subset, 0.0,
                                            derive_trial_seed(RngSeed{3}, 4, n / 10, i++)));
  }
}
BENCHMARK(BM_TrialKernel)->Arg(5000)->Arg(50000);

void BM_TrialReference(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  std::uint64_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_kout_trial_reference(
        n, 4, n / 10, DeletionMode::uniform_subset, 0.0,
        derive_trial_seed(RngSeed{3}, 4, n / 10, i++)));
  }
}
BENCHMARK(BM_TrialReference)->Arg(5000)->Arg(50000);

template <Execution kExec>
void BM_Robustness(benchmark::State& state) {
  const auto g = generate_kout(static_cast<std::size_t>(state.range(0)), 4, RngSeed{5}).first;
  for (auto _ : state) benchmark::DoNotOptimize(is_r_robust_bruteforce(g, 2, kExec));
}
BENCHMARK(BM_Robustness<Execution::serial>)->DenseRange(12, 16, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Robustness<Execution::parallel>)
    ->DenseRange(12, 16, 2)
    ->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
