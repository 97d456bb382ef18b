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

#ifndef PHOTOTHERMAL_PARAMETERS_H_
#define PHOTOTHERMAL_PARAMETERS_H_

#include <string_view>

#include "photothermal/simulate.h"
#include "photothermal/thermal_model.h"

namespace photothermal {

// Scalars that calibration may fit and sweeps may vary.
enum class ModelParameter {
  kAlphaS,       // silicone absorptance
  kAlphaL,       // LIG absorptance
  kHse,          // silicone convection coefficient
  kHLe,          // LIG convection coefficient
  kSourcePower,  // Q_h, constant-flux sources
  kScale,        // multiplier on every schedule interval
};

std::string_view ModelParameterName(ModelParameter parameter);
// Accepts alpha_s, alpha_L, h_se, h_Le, Q_h, scale. Throws kBadInput.
ModelParameter ParseModelParameter(std::string_view name);

// Everything Run() needs apart from the integrator settings.
struct ModelInputs {
  WallAssembly assembly;
  HeatSource source;
  Environment environment;
  LightSchedule schedule;
};

// Copy of `inputs` with one parameter replaced. Throws kKindMismatch for LIG
// parameters on a single layer, kModeMismatch for Q_h on a radiative source
// and kInvalidArgument when the value breaks a model invariant.
ModelInputs WithParameter(const ModelInputs& inputs, ModelParameter parameter,
                          double value);

// Current value of a parameter; kScale reports 1 (the neutral multiplier).
double ParameterValue(const ModelInputs& inputs, ModelParameter parameter);

}  // namespace photothermal

#endif  // PHOTOTHERMAL_PARAMETERS_H_
