// Copyright 2026 The tracebound Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "tracebound/experiments.hpp"

using namespace tracebound;

namespace {

constexpr std::uint64_t kPairs = 500;

void BM_Figure1(benchmark::State& state, Execution exec) {
  const int d = static_cast<int>(state.range(0));
  for (auto _ : state) {
    Figure1Result res = run_figure1(d, kPairs, 1, exec);
    benchmark::DoNotOptimize(res.records.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(kPairs));
}

void BM_Figure1Serial(benchmark::State& state) { BM_Figure1(state, Execution::serial); }
void BM_Figure1Parallel(benchmark::State& state) { BM_Figure1(state, Execution::parallel); }

void BM_BuildReport(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  auto [rho, sigma] = figure1_pair(d, 1, 0);
  for (auto _ : state) benchmark::DoNotOptimize(build_report(rho, sigma).trace_distance);
}

void BM_Counterexample(benchmark::State& state, Execution exec) {
  for (auto _ : state) {
    // Qubits never violate, so the full budget is scanned.
    CounterexampleSearch res = find_conjecture_counterexample(2, 4096, 0, exec);
    benchmark::DoNotOptimize(res.candidates_tried);
  }
  state.SetItemsProcessed(state.iterations() * 4096);
}

}  // namespace

BENCHMARK(BM_Figure1Serial)->Arg(8)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Figure1Parallel)->Arg(8)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_BuildReport)->Arg(4)->Arg(16)->Arg(32)->Arg(64)->Unit(benchmark::kMicrosecond);
BENCHMARK_CAPTURE(BM_Counterexample, serial, Execution::serial)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Counterexample, parallel, Execution::parallel)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
