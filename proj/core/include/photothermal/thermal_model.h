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

#ifndef PHOTOTHERMAL_THERMAL_MODEL_H_
#define PHOTOTHERMAL_THERMAL_MODEL_H_

// Lumped-capacitance heat balance for a light-driven actuator wall.
//
// A wall is either a single silicone layer or a silicone layer carrying a
// laser-induced-graphene (LIG) absorber. Each layer is one temperature node.
// The source either radiates as a grey body at a fixed temperature or
// delivers a constant power of which each layer absorbs a fixed fraction.
// Everything is SI: kelvin, seconds, watts, metres.

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace photothermal {

inline constexpr double kStefanBoltzmann = 5.67037442e-8;  // W m^-2 K^-4
inline constexpr double kCelsiusOffset = 273.15;

struct ThermalLayer {
  double specific_heat = 0.0;  // J/(kg K)
  double density = 0.0;        // kg/m^3
  double thickness = 0.0;      // m
  double area = 0.0;           // m^2, heat-transfer area
  double emissivity = 1.0;     // radiative mode only
  double absorptance = 0.0;    // fraction of source power absorbed
  // Only the silicone layer's conductivity enters the LIG->silicone coupling;
  // the value on a LIG layer is carried but never read, so it may be zero.
  double conductivity = 0.0;  // W/(m K)
  double conv_coeff = 0.0;    // W/(m^2 K)
  // Faces exchanging with the environment. Unset means "use the assembly
  // default": 2 for a standalone wall, 1 per layer in a bilayer.
  std::optional<int> conv_faces;
};

// Throws Error(kInvalidArgument) naming `name` and the offending field.
// `conducting` layers must have positive conductivity.
void ValidateLayer(const ThermalLayer& layer, const std::string& name,
                   bool conducting = true);

enum class SourceMode { kRadiativeBody, kConstantFlux };

class HeatSource {
 public:
  static HeatSource ConstantFlux(double power_W);
  static HeatSource RadiativeBody(double temperature_K, double emissivity);

  SourceMode mode() const { return mode_; }
  double power() const { return power_; }
  double source_temperature() const { return temperature_; }
  double source_emissivity() const { return emissivity_; }

 private:
  HeatSource(SourceMode mode, double power, double temperature,
             double emissivity)
      : mode_(mode),
        power_(power),
        temperature_(temperature),
        emissivity_(emissivity) {}

  SourceMode mode_;
  double power_;
  double temperature_;
  double emissivity_;
};

class Environment {
 public:
  explicit Environment(double ambient_K);
  double ambient() const { return ambient_; }

 private:
  double ambient_;
};

enum class WallKind { kSingleLayer, kBilayer };

class WallAssembly {
 public:
  static WallAssembly SingleLayer(ThermalLayer silicone);
  static WallAssembly Bilayer(ThermalLayer silicone, ThermalLayer lig);

  WallKind kind() const { return kind_; }
  bool is_bilayer() const { return kind_ == WallKind::kBilayer; }
  // Layers returned here always have conv_faces resolved.
  const ThermalLayer& silicone() const { return silicone_; }
  // Throws Error(kKindMismatch) for a single-layer wall.
  const ThermalLayer& lig() const;

  // Non-fatal findings, e.g. absorptances summing above one.
  std::vector<std::string> Warnings() const;

 private:
  WallAssembly(WallKind kind, ThermalLayer silicone,
               std::optional<ThermalLayer> lig)
      : kind_(kind), silicone_(std::move(silicone)), lig_(std::move(lig)) {}

  WallKind kind_;
  ThermalLayer silicone_;
  std::optional<ThermalLayer> lig_;
};

struct ThermalState {
  double time = 0.0;
  double silicone = 0.0;
  std::optional<double> lig;  // bilayer only
};

struct BilayerRates {
  double silicone = 0.0;  // K/s
  double lig = 0.0;       // K/s
};

// C * rho * A * x, in J/K.
double HeatCapacity(const ThermalLayer& layer);

// Grey-body exchange between two parallel surfaces, positive when hot > cold.
double RadiativeExchange(double theta_hot, double eps_hot, double theta_cold,
                         double eps_cold, double area);

// absorptance * power * scale. ConstantFlux sources only.
double AbsorbedPower(const HeatSource& source, const ThermalLayer& layer,
                     double scale = 1.0);

// Power delivered to a layer at temperature `theta` in either source mode.
double InputPower(const HeatSource& source, const ThermalLayer& layer,
                  double theta, double scale);

// lambda_s * A / x for the silicone layer, in W/K.
double CouplingConductance(const ThermalLayer& silicone);

// Heat flowing from the LIG node into the silicone node.
double ConductionFlow(double theta_lig, double theta_silicone,
                      const ThermalLayer& silicone);

// conv_faces * h * A * (theta - ambient). Layer must have conv_faces set.
double ConvectiveLoss(const ThermalLayer& layer, double theta,
                      const Environment& env);

double RhsSingle(const ThermalState& state, const WallAssembly& assembly,
                 const HeatSource& source, const Environment& env,
                 double scale);

BilayerRates RhsBilayer(const ThermalState& state,
                        const WallAssembly& assembly, const HeatSource& source,
                        const Environment& env, double scale);

// Temperatures at which every rate vanishes. Constant-flux walls are solved
// in closed form; radiative walls by bracketed root finding.
ThermalState SteadyState(const WallAssembly& assembly, const HeatSource& source,
                         const Environment& env, double scale = 1.0);

// Convenience for I/O boundaries.
inline double ToCelsius(double kelvin) { return kelvin - kCelsiusOffset; }
inline double ToKelvin(double celsius) { return celsius + kCelsiusOffset; }

}  // namespace photothermal

#endif  // PHOTOTHERMAL_THERMAL_MODEL_H_
