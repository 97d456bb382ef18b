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

#include "photothermal/sweep.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

#include <fmt/format.h>
#include <fmt/ostream.h>

#include "photothermal/error.h"
#include "photothermal/metrics.h"

namespace photothermal {
namespace {

SweepRow EvaluatePoint(const RunConfig& config, const SweepSpec& spec,
                       double point) {
  SweepRow row;
  row.point = point;
  try {
    ModelInputs model =
        spec.distance
            ? WithParameter(config.model, ModelParameter::kScale,
                            IlluminanceScale(point, spec.distance->reference,
                                             spec.distance->exponent))
            : WithParameter(config.model, ParseModelParameter(spec.parameter),
                            point);

    auto wants = [&](SweepOutput o) {
      return std::find(spec.outputs.begin(), spec.outputs.end(), o) !=
             spec.outputs.end();
    };
    const Channel channel = config.channel();

    if (wants(SweepOutput::kSteady)) {
      // Steady state under the peak drive of the schedule.
      double drive = 0.0;
      for (const auto& iv : model.schedule.intervals()) {
        drive = std::max(drive, iv.scale);
      }
      const ThermalState steady =
          SteadyState(model.assembly, model.source, model.environment, drive);
      row.steady_silicone = steady.silicone;
      row.steady_lig = steady.lig;
    }
    if (wants(SweepOutput::kT63) || wants(SweepOutput::kPeak) ||
        wants(SweepOutput::kPlateau)) {
      const Trajectory trajectory = Run(model.assembly, model.source,
                                        model.schedule, model.environment,
                                        config.sim);
      const MeasurementSeries series = trajectory.ToSeries(channel);
      if (wants(SweepOutput::kT63) || wants(SweepOutput::kPeak)) {
        const ResponseReport report =
            ResponseTime63(series, config.metrics.ToOptions(config.sim));
        if (wants(SweepOutput::kT63)) row.t63 = report.t63;
        if (wants(SweepOutput::kPeak)) {
          row.peak_value = report.peak_value;
          row.peak_time = report.peak_time;
        }
      }
      if (wants(SweepOutput::kPlateau)) {
        if (!config.metrics.plateau_threshold ||
            !config.metrics.plateau_window) {
          throw Error(ErrorKind::kBadInput,
                      "plateau output needs metrics.plateau_threshold and "
                      "metrics.plateau_window");
        }
        const Plateau plateau =
            PlateauValue(series, *config.metrics.plateau_threshold,
                         *config.metrics.plateau_window);
        row.plateau_value = plateau.value;
        row.plateau_time = plateau.reach_time;
      }
    }
    row.ok = true;
  } catch (const Error& err) {
    row.ok = false;
    row.error = fmt::format("{}: {}", ErrorKindName(err.kind()), err.what());
  }
  return row;
}

std::string Cell(const std::optional<double>& v) {
  return v ? fmt::format("{:.6f}", *v) : std::string();
}

}  // namespace

double IlluminanceScale(double distance, double reference_distance,
                        double exponent) {
  if (!(distance > 0.0) || !(reference_distance > 0.0)) {
    throw Error(ErrorKind::kInvalidArgument,
                fmt::format("distances must be positive (got d={}, d_ref={})",
                            distance, reference_distance));
  }
  if (!std::isfinite(exponent)) {
    throw Error(ErrorKind::kInvalidArgument, "exponent must be finite");
  }
  return std::pow(reference_distance / distance, exponent);
}

std::string_view SweepOutputName(SweepOutput output) {
  switch (output) {
    case SweepOutput::kT63: return "t63";
    case SweepOutput::kPeak: return "peak";
    case SweepOutput::kSteady: return "steady";
    case SweepOutput::kPlateau: return "plateau";
  }
  return "?";
}

std::vector<SweepOutput> ParseSweepOutputs(std::string_view text) {
  std::vector<SweepOutput> outputs;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto comma = text.find(',', pos);
    const std::string_view item = text.substr(
        pos, comma == std::string_view::npos ? std::string_view::npos
                                             : comma - pos);
    pos = comma == std::string_view::npos ? text.size() + 1 : comma + 1;
    bool found = false;
    for (auto o : {SweepOutput::kT63, SweepOutput::kPeak, SweepOutput::kSteady,
                   SweepOutput::kPlateau}) {
      if (SweepOutputName(o) == item) {
        if (std::find(outputs.begin(), outputs.end(), o) == outputs.end()) {
          outputs.push_back(o);
        }
        found = true;
      }
    }
    if (!found) {
      throw Error(ErrorKind::kBadInput,
                  fmt::format("unknown sweep output '{}' (expected t63, peak, "
                              "steady or plateau)",
                              item));
    }
  }
  return outputs;
}

void SweepSpec::Validate() const {
  if (values.size() < 2) {
    throw Error(ErrorKind::kBadInput,
                fmt::format("a sweep needs at least 2 points (got {})",
                            values.size()));
  }
  if (outputs.empty()) {
    throw Error(ErrorKind::kBadInput, "a sweep needs at least one output");
  }
  if (distance) {
    if (!(distance->reference > 0.0)) {
      throw Error(ErrorKind::kBadInput,
                  "reference distance must be strictly positive");
    }
    for (double d : values) {
      if (!(d > 0.0)) {
        throw Error(ErrorKind::kBadInput,
                    fmt::format("distance {} must be strictly positive", d));
      }
    }
  } else {
    ParseModelParameter(parameter);
  }
}

bool SweepResult::all_ok() const {
  return std::all_of(rows.begin(), rows.end(),
                     [](const SweepRow& r) { return r.ok; });
}

SweepResult RunSweep(const RunConfig& config, const SweepSpec& spec,
                     int threads) {
  spec.Validate();
  SweepResult result;
  result.rows.resize(spec.values.size());

  // Each worker claims the next unevaluated index and writes only its row.
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < spec.values.size(); i = next++) {
      result.rows[i] = EvaluatePoint(config, spec, spec.values[i]);
    }
  };
  const auto count = static_cast<std::size_t>(std::clamp(
      threads, 1, static_cast<int>(std::max<std::size_t>(1, spec.values.size()))));
  if (count == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(count);
    for (std::size_t t = 0; t < count; ++t) pool.emplace_back(worker);
  }
  return result;
}

void FormatSweepCsv(const SweepResult& result, const SweepSpec& spec,
                    std::ostream& out) {
  auto wants = [&](SweepOutput o) {
    return std::find(spec.outputs.begin(), spec.outputs.end(), o) !=
           spec.outputs.end();
  };
  std::string header = spec.distance ? "distance_m,scale" : spec.parameter;
  header += ",status";
  if (wants(SweepOutput::kT63)) header += ",t63_s";
  if (wants(SweepOutput::kPeak)) header += ",peak_K,peak_time_s";
  if (wants(SweepOutput::kSteady)) header += ",steady_theta_s_K,steady_theta_L_K";
  if (wants(SweepOutput::kPlateau)) header += ",plateau_K,plateau_time_s";
  header += ",error";
  fmt::print(out, "{}\n", header);

  for (const SweepRow& row : result.rows) {
    std::string line = fmt::format("{:.6g}", row.point);
    if (spec.distance) {
      line += fmt::format(",{:.6f}",
                          IlluminanceScale(row.point, spec.distance->reference,
                                           spec.distance->exponent));
    }
    line += row.ok ? ",ok" : ",failed";
    if (wants(SweepOutput::kT63)) line += "," + Cell(row.t63);
    if (wants(SweepOutput::kPeak)) {
      line += "," + Cell(row.peak_value) + "," + Cell(row.peak_time);
    }
    if (wants(SweepOutput::kSteady)) {
      line += "," + Cell(row.steady_silicone) + "," + Cell(row.steady_lig);
    }
    if (wants(SweepOutput::kPlateau)) {
      line += "," + Cell(row.plateau_value) + "," + Cell(row.plateau_time);
    }
    std::string error = row.error;
    std::replace(error.begin(), error.end(), ',', ';');
    std::replace(error.begin(), error.end(), '\n', ' ');
    line += "," + error;
    fmt::print(out, "{}\n", line);
  }
}

}  // namespace photothermal
