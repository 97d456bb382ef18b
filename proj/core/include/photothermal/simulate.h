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

#ifndef PHOTOTHERMAL_SIMULATE_H_
#define PHOTOTHERMAL_SIMULATE_H_

// Forward-Euler integration of the wall heat balance under a piecewise
// constant light schedule.

#include <span>
#include <string>
#include <vector>

#include "photothermal/series.h"
#include "photothermal/thermal_model.h"

namespace photothermal {

struct ScheduleInterval {
  double start = 0.0;  // s
  double end = 0.0;    // s
  double scale = 1.0;  // multiplies the source power

  friend bool operator==(const ScheduleInterval&,
                         const ScheduleInterval&) = default;
};

// Sorted, non-overlapping light-on intervals. Gaps are light off.
class LightSchedule {
 public:
  LightSchedule() = default;
  explicit LightSchedule(std::vector<ScheduleInterval> intervals);

  static LightSchedule AlwaysOn(double duration, double scale = 1.0) {
    return LightSchedule({{0.0, duration, scale}});
  }

  // Scale on [start, end); zero outside every interval.
  double ScaleAt(double time) const;

  // Copy with every interval's scale multiplied by `factor` (>= 0).
  LightSchedule Scaled(double factor) const;

  std::span<const ScheduleInterval> intervals() const { return intervals_; }
  bool empty() const { return intervals_.empty(); }

 private:
  std::vector<ScheduleInterval> intervals_;
};

struct SimConfig {
  double dt = 0.01;          // s
  double duration = 300.0;   // s
  int record_stride = 1;     // keep every Nth step
  double metric_window = 300.0;  // s, "final" for window-final metrics

  // Throws kInvalidArgument.
  void Validate() const;
};

// Which node of the wall a scalar series is taken from.
enum class Channel { kSilicone, kLig };

std::string_view ChannelName(Channel channel);

// Node compared against thermal-camera data: the LIG absorber for a bilayer,
// the silicone wall otherwise.
Channel DefaultChannel(WallKind kind);

class Trajectory {
 public:
  Trajectory(WallKind kind, double sample_interval,
             std::vector<ThermalState> samples);

  WallKind kind() const { return kind_; }
  double sample_interval() const { return sample_interval_; }
  std::span<const ThermalState> samples() const { return samples_; }
  std::size_t size() const { return samples_.size(); }
  const ThermalState& back() const { return samples_.back(); }

  // Throws kKindMismatch when the LIG channel is requested on a single layer.
  MeasurementSeries ToSeries(Channel channel) const;
  double ValueAt(double time, Channel channel) const;

 private:
  WallKind kind_;
  double sample_interval_;
  std::vector<ThermalState> samples_;
};

struct StabilityLimit {
  double tau = 0.0;   // s, smallest lumped time constant
  std::string layer;  // "silicone" or "lig"
};

// Smallest capacitance / total linear conductance over the wall's nodes.
// Radiative coupling to the source is not included.
StabilityLimit ComputeStabilityLimit(const WallAssembly& assembly,
                                     const Environment& env);

ThermalState EulerStep(const ThermalState& state, const WallAssembly& assembly,
                       const HeatSource& source, const Environment& env,
                       double scale, double dt);

// Integrates from ambient over [0, duration]. Throws kStability when dt
// exceeds the stability limit and kNumericalFailure on NaN/overflow.
Trajectory Run(const WallAssembly& assembly, const HeatSource& source,
               const LightSchedule& schedule, const Environment& env,
               const SimConfig& config);

}  // namespace photothermal

#endif  // PHOTOTHERMAL_SIMULATE_H_
