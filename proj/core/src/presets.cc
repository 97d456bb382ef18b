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

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include <fmt/format.h>

#include "photothermal/config.h"
#include "photothermal/error.h"

namespace photothermal {
namespace {

// Kept byte-identical to presets/*.ini; a test compares them.
constexpr std::string_view kTable1Single = R"ini(# Silicone-only wall under a constant-flux lamp.
# Both faces of the standalone wall exchange heat with the air.

[assembly]
kind = single

[environment]
ambient = 298            # K

[source]
mode = constant_flux
power = 0.075            # W

[silicone]
specific_heat = 1300     # J/(kg K)
density = 1050           # kg/m^3
thickness = 1.0e-3       # m
area = 1.0e-4            # m^2
conductivity = 0.2       # W/(m K)
conv_coeff = 6           # W/(m^2 K)
absorptance = 0.17
emissivity = 0.95        # radiative sources only; not part of the parameter table
conv_faces = 2

[schedule]
on = 0 300 1

[simulation]
dt = 0.01                # s
duration = 300           # s
record_stride = 1
metric_window = 300      # s

[metrics]
convention = window-final
)ini";

constexpr std::string_view kTable1Bilayer = R"ini(# Silicone wall carrying a LIG absorber under a constant-flux lamp.
# Each layer exposes one face to the air; heat crosses the silicone by
# conduction from the LIG side.

[assembly]
kind = bilayer

[environment]
ambient = 298            # K

[source]
mode = constant_flux
power = 0.075            # W

[silicone]
specific_heat = 1300     # J/(kg K)
density = 1050           # kg/m^3
thickness = 1.0e-3       # m
area = 1.0e-4            # m^2
conductivity = 0.2       # W/(m K)
conv_coeff = 6           # W/(m^2 K)
absorptance = 0.17
emissivity = 0.95        # radiative sources only; not part of the parameter table
conv_faces = 1

[lig]
specific_heat = 700      # J/(kg K)
density = 400            # kg/m^3
thickness = 1.0e-4       # m
area = 1.0e-4            # m^2
conv_coeff = 18          # W/(m^2 K)
absorptance = 0.83
emissivity = 0.95        # radiative sources only; not part of the parameter table
conv_faces = 1

[schedule]
on = 0 300 1

[simulation]
dt = 0.01                # s
duration = 300           # s
record_stride = 1
metric_window = 300      # s

[metrics]
convention = window-final
)ini";

struct Preset {
  std::string_view name;
  std::string_view text;
};

constexpr std::array<Preset, 2> kPresets = {{
    {"table1_single", kTable1Single},
    {"table1_bilayer", kTable1Bilayer},
}};

}  // namespace

std::vector<std::string> PresetNames() {
  std::vector<std::string> names;
  for (const auto& p : kPresets) names.emplace_back(p.name);
  return names;
}

std::string_view BundledPresetText(std::string_view name) {
  for (const auto& p : kPresets) {
    if (p.name == name) return p.text;
  }
  throw Error(ErrorKind::kBadInput,
              fmt::format("unknown preset '{}' (expected table1_single or "
                          "table1_bilayer)",
                          name));
}

}  // namespace photothermal
