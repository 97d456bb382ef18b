// Copyright 2026 The Photothermal Authors
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

#include <vector>

#include <benchmark/benchmark.h>

#include "photothermal/calibrate.h"
#include "photothermal/config.h"
#include "photothermal/metrics.h"
#include "photothermal/simulate.h"
#include "photothermal/sweep.h"

namespace photothermal {
namespace {

void BM_RunPreset(benchmark::State& state, const char* preset) {
  const RunConfig rc = LoadPreset(preset);
  for (auto _ : state) {
    Trajectory t = Run(rc.model.assembly, rc.model.source, rc.model.schedule,
                       rc.model.environment, rc.sim);
    benchmark::DoNotOptimize(t.back().silicone);
  }
  state.counters["steps"] = rc.sim.duration / rc.sim.dt;
}
BENCHMARK_CAPTURE(BM_RunPreset, single, "table1_single")
    ->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_RunPreset, bilayer, "table1_bilayer")
    ->Unit(benchmark::kMillisecond);

void BM_ResponseTime63(benchmark::State& state) {
  const RunConfig rc = LoadPreset("table1_bilayer");
  const MeasurementSeries series =
      Run(rc.model.assembly, rc.model.source, rc.model.schedule,
          rc.model.environment, rc.sim)
          .ToSeries(Channel::kLig);
  const ResponseOptions options = rc.metrics.ToOptions(rc.sim);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ResponseTime63(series, options).t63);
  }
}
BENCHMARK(BM_ResponseTime63);

void BM_PlateauValue(benchmark::State& state) {
  const RunConfig rc = LoadPreset("table1_single");
  SimConfig sim = rc.sim;
  sim.duration = 1200;
  const MeasurementSeries series =
      Run(rc.model.assembly, rc.model.source, LightSchedule::AlwaysOn(1200),
          rc.model.environment, sim)
          .ToSeries(Channel::kSilicone);
  for (auto _ : state) {
    benchmark::DoNotOptimize(PlateauValue(series, 0.1, 30).value);
  }
}
BENCHMARK(BM_PlateauValue)->Unit(benchmark::kMillisecond);

void BM_FitLigAbsorptance(benchmark::State& state) {
  const RunConfig rc = LoadPreset("table1_bilayer");
  const ModelInputs truth = WithParameter(rc.model, ModelParameter::kAlphaL, 0.7);
  const Trajectory t = Run(truth.assembly, truth.source, truth.schedule,
                           truth.environment, rc.sim);
  std::vector<SeriesPoint> pts;
  for (int s = 0; s <= 300; ++s) pts.push_back({double(s), t.ValueAt(s, Channel::kLig)});
  const CalibrationProblem problem{MeasurementSeries(std::move(pts)),
                                   {{ModelParameter::kAlphaL, 0.3, 1.0, 0.83}},
                                   rc.model,
                                   rc.sim,
                                   Channel::kLig};
  for (auto _ : state) {
    benchmark::DoNotOptimize(Fit(problem).fitted[0]);
  }
}
BENCHMARK(BM_FitLigAbsorptance)->Unit(benchmark::kMillisecond);

void BM_DistanceSweep(benchmark::State& state) {
  const RunConfig rc = LoadPreset("table1_bilayer");
  SweepSpec spec{"distance", {}, DistanceScaling{}};
  for (int i = 0; i < 16; ++i) spec.values.push_back(0.05 + 0.005 * i);
  const auto threads = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(RunSweep(rc, spec, threads).rows.size());
  }
}
BENCHMARK(BM_DistanceSweep)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace photothermal

BENCHMARK_MAIN();
