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

#include "photothermal/parameters.h"

#include <fmt/format.h>

#include "photothermal/error.h"

namespace photothermal {
namespace {

WallAssembly Rebuild(const WallAssembly& assembly, const ThermalLayer& silicone,
                     const ThermalLayer* lig) {
  if (assembly.is_bilayer()) return WallAssembly::Bilayer(silicone, *lig);
  return WallAssembly::SingleLayer(silicone);
}

}  // namespace

std::string_view ModelParameterName(ModelParameter parameter) {
  switch (parameter) {
    case ModelParameter::kAlphaS: return "alpha_s";
    case ModelParameter::kAlphaL: return "alpha_L";
    case ModelParameter::kHse: return "h_se";
    case ModelParameter::kHLe: return "h_Le";
    case ModelParameter::kSourcePower: return "Q_h";
    case ModelParameter::kScale: return "scale";
  }
  return "?";
}

ModelParameter ParseModelParameter(std::string_view name) {
  for (auto p : {ModelParameter::kAlphaS, ModelParameter::kAlphaL,
                 ModelParameter::kHse, ModelParameter::kHLe,
                 ModelParameter::kSourcePower, ModelParameter::kScale}) {
    if (ModelParameterName(p) == name) return p;
  }
  throw Error(ErrorKind::kBadInput,
              fmt::format("unknown model parameter '{}' (expected alpha_s, "
                          "alpha_L, h_se, h_Le, Q_h or scale)",
                          name));
}

ModelInputs WithParameter(const ModelInputs& inputs, ModelParameter parameter,
                          double value) {
  ModelInputs out = inputs;
  ThermalLayer silicone = inputs.assembly.silicone();
  const bool bilayer = inputs.assembly.is_bilayer();
  ThermalLayer lig = bilayer ? inputs.assembly.lig() : ThermalLayer{};

  switch (parameter) {
    case ModelParameter::kAlphaS:
      silicone.absorptance = value;
      break;
    case ModelParameter::kAlphaL:
      lig = inputs.assembly.lig();
      lig.absorptance = value;
      break;
    case ModelParameter::kHse:
      silicone.conv_coeff = value;
      break;
    case ModelParameter::kHLe:
      lig = inputs.assembly.lig();
      lig.conv_coeff = value;
      break;
    case ModelParameter::kSourcePower:
      if (inputs.source.mode() != SourceMode::kConstantFlux) {
        throw Error(ErrorKind::kModeMismatch,
                    "Q_h applies to constant-flux sources only");
      }
      out.source = HeatSource::ConstantFlux(value);
      return out;
    case ModelParameter::kScale:
      out.schedule = inputs.schedule.Scaled(value);
      return out;
  }
  out.assembly = Rebuild(inputs.assembly, silicone, bilayer ? &lig : nullptr);
  return out;
}

double ParameterValue(const ModelInputs& inputs, ModelParameter parameter) {
  switch (parameter) {
    case ModelParameter::kAlphaS: return inputs.assembly.silicone().absorptance;
    case ModelParameter::kAlphaL: return inputs.assembly.lig().absorptance;
    case ModelParameter::kHse: return inputs.assembly.silicone().conv_coeff;
    case ModelParameter::kHLe: return inputs.assembly.lig().conv_coeff;
    case ModelParameter::kSourcePower:
      if (inputs.source.mode() != SourceMode::kConstantFlux) {
        throw Error(ErrorKind::kModeMismatch,
                    "Q_h applies to constant-flux sources only");
      }
      return inputs.source.power();
    case ModelParameter::kScale: return 1.0;
  }
  return 0.0;
}

}  // namespace photothermal
