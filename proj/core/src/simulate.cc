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

#include "photothermal/simulate.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include <fmt/format.h>

#include "photothermal/error.h"

namespace photothermal {
namespace {

double NodeConductance(const ThermalLayer& layer) {
  return layer.conv_faces.value_or(1) * layer.conv_coeff * layer.area;
}

std::int64_t StepCount(double duration, double dt) {
  const double ratio = duration / dt;
  const auto rounded = std::llround(ratio);
  if (std::abs(static_cast<double>(rounded) - ratio) <= 1e-9 * ratio) {
    return rounded;
  }
  return static_cast<std::int64_t>(std::ceil(ratio));
}

}  // namespace

LightSchedule::LightSchedule(std::vector<ScheduleInterval> intervals)
    : intervals_(std::move(intervals)) {
  for (std::size_t i = 0; i < intervals_.size(); ++i) {
    const auto& iv = intervals_[i];
    if (!(iv.start >= 0.0) || !(iv.end > iv.start) || !std::isfinite(iv.end)) {
      throw Error(ErrorKind::kInvalidArgument,
                  fmt::format("schedule interval {} must satisfy "
                              "0 <= start < end (got [{}, {}))",
                              i, iv.start, iv.end));
    }
    if (!(iv.scale >= 0.0) || !std::isfinite(iv.scale)) {
      throw Error(ErrorKind::kInvalidArgument,
                  fmt::format("schedule interval {} has negative scale {}", i,
                              iv.scale));
    }
    if (i > 0 && iv.start < intervals_[i - 1].end) {
      throw Error(ErrorKind::kInvalidArgument,
                  fmt::format("schedule interval {} overlaps or precedes "
                              "interval {}",
                              i, i - 1));
    }
  }
}

double LightSchedule::ScaleAt(double time) const {
  // First interval whose end lies beyond `time`.
  auto it = std::upper_bound(
      intervals_.begin(), intervals_.end(), time,
      [](double t, const ScheduleInterval& iv) { return t < iv.end; });
  if (it == intervals_.end() || time < it->start) return 0.0;
  return it->scale;
}

LightSchedule LightSchedule::Scaled(double factor) const {
  if (!(factor >= 0.0)) {
    throw Error(ErrorKind::kInvalidArgument,
                fmt::format("schedule scale factor must be >= 0 (got {})",
                            factor));
  }
  std::vector<ScheduleInterval> out(intervals_);
  for (auto& iv : out) iv.scale *= factor;
  return LightSchedule(std::move(out));
}

void SimConfig::Validate() const {
  if (!(dt > 0.0) || !std::isfinite(dt)) {
    throw Error(ErrorKind::kInvalidArgument,
                fmt::format("dt must be > 0 (got {})", dt));
  }
  if (!(duration > 0.0) || !std::isfinite(duration)) {
    throw Error(ErrorKind::kInvalidArgument,
                fmt::format("duration must be > 0 (got {})", duration));
  }
  if (duration < dt) {
    throw Error(ErrorKind::kInvalidArgument,
                fmt::format("duration {} is shorter than dt {}", duration, dt));
  }
  if (record_stride < 1) {
    throw Error(ErrorKind::kInvalidArgument,
                fmt::format("record_stride must be >= 1 (got {})",
                            record_stride));
  }
  if (!(metric_window > 0.0)) {
    throw Error(ErrorKind::kInvalidArgument,
                fmt::format("metric_window must be > 0 (got {})",
                            metric_window));
  }
}

std::string_view ChannelName(Channel channel) {
  return channel == Channel::kLig ? "lig" : "silicone";
}

Channel DefaultChannel(WallKind kind) {
  return kind == WallKind::kBilayer ? Channel::kLig : Channel::kSilicone;
}

Trajectory::Trajectory(WallKind kind, double sample_interval,
                       std::vector<ThermalState> samples)
    : kind_(kind),
      sample_interval_(sample_interval),
      samples_(std::move(samples)) {
  if (samples_.empty()) {
    throw Error(ErrorKind::kInvalidArgument, "trajectory has no samples");
  }
}

MeasurementSeries Trajectory::ToSeries(Channel channel) const {
  if (channel == Channel::kLig && kind_ != WallKind::kBilayer) {
    throw Error(ErrorKind::kKindMismatch,
                "single-layer trajectory has no LIG channel");
  }
  std::vector<SeriesPoint> points;
  points.reserve(samples_.size());
  for (const auto& s : samples_) {
    points.push_back(
        {s.time, channel == Channel::kLig ? *s.lig : s.silicone});
  }
  return MeasurementSeries(std::move(points), SeriesUnit::kKelvin,
                           std::string(ChannelName(channel)));
}

double Trajectory::ValueAt(double time, Channel channel) const {
  if (channel == Channel::kLig && kind_ != WallKind::kBilayer) {
    throw Error(ErrorKind::kKindMismatch,
                "single-layer trajectory has no LIG channel");
  }
  auto value = [channel](const ThermalState& s) {
    return channel == Channel::kLig ? *s.lig : s.silicone;
  };
  const double t0 = samples_.front().time;
  const double t1 = samples_.back().time;
  if (!(time >= t0 && time <= t1 + 1e-9 * sample_interval_)) {
    throw Error(ErrorKind::kInvalidArgument,
                fmt::format("t={} lies outside the trajectory [{}, {}]", time,
                            t0, t1));
  }
  const double pos = (time - t0) / sample_interval_;
  auto i = static_cast<std::size_t>(std::floor(pos));
  if (i + 1 >= samples_.size()) return value(samples_.back());
  const double w = pos - static_cast<double>(i);
  return value(samples_[i]) + w * (value(samples_[i + 1]) - value(samples_[i]));
}

StabilityLimit ComputeStabilityLimit(const WallAssembly& assembly,
                                     const Environment& /*env*/) {
  constexpr double kInf = std::numeric_limits<double>::infinity();
  const ThermalLayer& s = assembly.silicone();
  double coupling = assembly.is_bilayer() ? CouplingConductance(s) : 0.0;

  auto tau = [](double capacity, double conductance) {
    return conductance > 0.0 ? capacity / conductance : kInf;
  };
  StabilityLimit limit{tau(HeatCapacity(s), NodeConductance(s) + coupling),
                       "silicone"};
  if (assembly.is_bilayer()) {
    const ThermalLayer& l = assembly.lig();
    const double tau_l = tau(HeatCapacity(l), NodeConductance(l) + coupling);
    if (tau_l < limit.tau) limit = {tau_l, "lig"};
  }
  return limit;
}

ThermalState EulerStep(const ThermalState& state, const WallAssembly& assembly,
                       const HeatSource& source, const Environment& env,
                       double scale, double dt) {
  if (!(dt > 0.0)) {
    throw Error(ErrorKind::kInvalidArgument,
                fmt::format("dt must be > 0 (got {})", dt));
  }
  ThermalState next = state;
  next.time = state.time + dt;
  if (assembly.is_bilayer()) {
    const BilayerRates rates = RhsBilayer(state, assembly, source, env, scale);
    next.silicone = state.silicone + dt * rates.silicone;
    next.lig = *state.lig + dt * rates.lig;
  } else {
    next.silicone =
        state.silicone + dt * RhsSingle(state, assembly, source, env, scale);
  }
  return next;
}

Trajectory Run(const WallAssembly& assembly, const HeatSource& source,
               const LightSchedule& schedule, const Environment& env,
               const SimConfig& config) {
  config.Validate();
  const StabilityLimit limit = ComputeStabilityLimit(assembly, env);
  if (config.dt > limit.tau) {
    throw Error(ErrorKind::kStability,
                fmt::format("dt={} s exceeds the explicit-Euler limit {:.6g} s "
                            "set by the {} layer",
                            config.dt, limit.tau, limit.layer));
  }

  const std::int64_t steps = StepCount(config.duration, config.dt);
  const auto stride = static_cast<std::int64_t>(config.record_stride);
  std::vector<ThermalState> samples;
  samples.reserve(static_cast<std::size_t>(steps / stride + 1));

  ThermalState state{0.0, env.ambient(), std::nullopt};
  if (assembly.is_bilayer()) state.lig = env.ambient();
  samples.push_back(state);

  for (std::int64_t n = 0; n < steps; ++n) {
    const double t = static_cast<double>(n) * config.dt;
    state.time = t;
    state = EulerStep(state, assembly, source, env, schedule.ScaleAt(t),
                      config.dt);
    // Time stamps come from the step index so they never accumulate error.
    state.time = static_cast<double>(n + 1) * config.dt;
    if (!std::isfinite(state.silicone) || !(state.silicone > 0.0) ||
        (state.lig && (!std::isfinite(*state.lig) || !(*state.lig > 0.0)))) {
      throw Error(ErrorKind::kNumericalFailure,
                  fmt::format("temperature left the finite positive range at "
                              "t={} s",
                              state.time));
    }
    if ((n + 1) % stride == 0) samples.push_back(state);
  }
  return Trajectory(assembly.kind(),
                    config.dt * static_cast<double>(config.record_stride),
                    std::move(samples));
}

}  // namespace photothermal
