// Copyright 2026 The rdvlp Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Serial reference vs OpenMP family solves. Run with --benchmark_filter to
// pick a variant; marker families take seconds per iteration.

#include <benchmark/benchmark.h>

#include "rendezvous/sweep.h"

namespace rendezvous {
namespace {

void SolveFamilyBench(benchmark::State& state, Variant variant,
                      Execution execution) {
  SolveOptions options;
  options.execution = execution;
  const Rational v(1, 2);
  int64_t built = 0;
  for (auto _ : state) {
    const FamilyRanking r = SolveFamily(variant, v, options);
    built = r.built;
    benchmark::DoNotOptimize(r.entries.data());
  }
  state.counters["lps"] = static_cast<double>(built);
  state.counters["lps_per_s"] = benchmark::Counter(
      static_cast<double>(built), benchmark::Counter::kIsIterationInvariantRate);
}

BENCHMARK_CAPTURE(SolveFamilyBench, none_serial, Variant::kNoMarker,
                  Execution::kSerial)
    ->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(SolveFamilyBench, none_parallel, Variant::kNoMarker,
                  Execution::kParallel)
    ->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(SolveFamilyBench, slow_marker_serial, Variant::kMarkerSlow,
                  Execution::kSerial)
    ->Unit(benchmark::kMillisecond)
    ->Iterations(1);
BENCHMARK_CAPTURE(SolveFamilyBench, slow_marker_parallel, Variant::kMarkerSlow,
                  Execution::kParallel)
    ->Unit(benchmark::kMillisecond)
    ->Iterations(1);

void SweepBench(benchmark::State& state, bool prune) {
  SweepOptions options;
  options.prune = prune;
  for (auto _ : state) {
    const SweepTable t = Sweep(Variant::kNoMarker, 50, options);
    benchmark::DoNotOptimize(t.rows.data());
  }
}

BENCHMARK_CAPTURE(SweepBench, none_grid50_pruned, true)
    ->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(SweepBench, none_grid50_full, false)
    ->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace rendezvous

BENCHMARK_MAIN();
