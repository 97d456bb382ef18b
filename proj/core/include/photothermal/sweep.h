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

#ifndef PHOTOTHERMAL_SWEEP_H_
#define PHOTOTHERMAL_SWEEP_H_

// One-parameter scenario sweeps over a run configuration.

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "photothermal/config.h"

namespace photothermal {

// (d_ref / d)^exponent: the drive scale at distance d relative to d_ref.
// The default exponent of 1 matches a lamp whose illuminance doubles when the
// working distance halves.
double IlluminanceScale(double distance, double reference_distance,
                        double exponent = 1.0);

enum class SweepOutput { kT63, kPeak, kSteady, kPlateau };

std::string_view SweepOutputName(SweepOutput output);
// Parses a comma-separated list such as "t63,peak,steady".
std::vector<SweepOutput> ParseSweepOutputs(std::string_view text);

struct DistanceScaling {
  double reference = 0.05;  // m
  double exponent = 1.0;
};

struct SweepSpec {
  // A ModelParameter name, or "distance" when `distance` is set.
  std::string parameter;
  std::vector<double> values;  // parameter values, or distances in metres
  std::optional<DistanceScaling> distance;
  std::vector<SweepOutput> outputs = {SweepOutput::kT63, SweepOutput::kPeak,
                                      SweepOutput::kSteady};

  // At least two points; distances strictly positive. Throws kBadInput.
  void Validate() const;
};

struct SweepRow {
  double point = 0.0;  // the swept value as given
  bool ok = false;
  std::string error;
  std::optional<double> t63;
  std::optional<double> peak_value;
  std::optional<double> peak_time;
  std::optional<double> steady_silicone;
  std::optional<double> steady_lig;
  std::optional<double> plateau_value;
  std::optional<double> plateau_time;
};

struct SweepResult {
  std::vector<SweepRow> rows;  // same order as SweepSpec::values

  bool all_ok() const;
};

// Evaluates every point, on up to `threads` workers. A failing point is
// recorded in its row and the sweep continues.
SweepResult RunSweep(const RunConfig& config, const SweepSpec& spec,
                     int threads = 1);

// Summary CSV: point,status,<requested columns>,error
void FormatSweepCsv(const SweepResult& result, const SweepSpec& spec,
                    std::ostream& out);

}  // namespace photothermal

#endif  // PHOTOTHERMAL_SWEEP_H_
