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

#ifndef PHOTOTHERMAL_CONFIG_H_
#define PHOTOTHERMAL_CONFIG_H_

// Run configuration files: a flat, sectioned key = value format.
//
//   # comment (also after values; ';' works too)
//   [assembly]     kind = single | bilayer
//   [environment]  ambient (K)
//   [source]       mode = constant_flux | radiative
//                  power (W) | temperature (K), emissivity
//   [silicone]     specific_heat, density, thickness, area, conductivity,
//   [lig]          conv_coeff, absorptance, emissivity, conv_faces
//   [schedule]     on = <start s> <end s> [scale]   (repeatable)
//   [simulation]   dt, duration, record_stride, metric_window
//   [metrics]      convention, window, final, plateau_threshold,
//                  plateau_window, channel
//
// A missing [schedule] section means the light is on for the whole run; an
// empty one means it never comes on. Unknown sections and keys are errors.

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "photothermal/metrics.h"
#include "photothermal/parameters.h"
#include "photothermal/simulate.h"

namespace photothermal {

struct MetricSettings {
  ResponseConvention convention = ResponseConvention::kWindowFinal;
  std::optional<double> window;  // defaults to SimConfig::metric_window
  std::optional<double> supplied_final;
  std::optional<double> plateau_threshold;
  std::optional<double> plateau_window;
  std::optional<Channel> channel;  // defaults to DefaultChannel(kind)

  // Throws kBadInput when the convention lacks its required settings.
  ResponseOptions ToOptions(const SimConfig& sim) const;
};

struct RunConfig {
  ModelInputs model;
  SimConfig sim;
  MetricSettings metrics;
  std::vector<std::string> warnings;
  std::string origin;  // file path or "preset:<name>"

  Channel channel() const {
    return metrics.channel.value_or(DefaultChannel(model.assembly.kind()));
  }
};

// Parses and validates. Every problem found is reported in one kBadInput
// error, each prefixed with "<origin>:<line>:" and the offending key.
RunConfig ParseConfig(std::string_view text, std::string_view origin);

// Throws kIo when the file cannot be read.
RunConfig LoadConfig(const std::filesystem::path& path);

// Bundled presets: table1_single, table1_bilayer. When the environment
// variable PHOTOTHERMAL_PRESET_DIR names a directory holding <name>.ini, that
// file is used instead.
RunConfig LoadPreset(std::string_view name);
std::vector<std::string> PresetNames();
// Bundled text of a preset; throws kBadInput for unknown names.
std::string_view BundledPresetText(std::string_view name);

}  // namespace photothermal

#endif  // PHOTOTHERMAL_CONFIG_H_
