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

#include "photothermal/thermal_model.h"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "photothermal/error.h"

namespace photothermal {
namespace {

[[noreturn]] void Invalid(const std::string& message) {
  throw Error(ErrorKind::kInvalidArgument, message);
}

void RequirePositive(double value, const std::string& name,
                     const char* field) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    Invalid(fmt::format("{}.{} must be positive and finite (got {})", name,
                        field, value));
  }
}

void RequireUnit(double value, const std::string& name, const char* field) {
  if (!(value >= 0.0 && value <= 1.0)) {
    Invalid(fmt::format("{}.{} must lie in [0, 1] (got {})", name, field,
                        value));
  }
}

ThermalLayer WithFaces(ThermalLayer layer, int default_faces) {
  if (!layer.conv_faces) layer.conv_faces = default_faces;
  return layer;
}

double Emissivity(const ThermalLayer& layer) {
  if (!(layer.emissivity > 0.0)) {
    Invalid("radiative exchange requires a layer emissivity above zero");
  }
  return layer.emissivity;
}

// Root of a function that is non-increasing in theta on [lo, hi], assuming
// f(lo) >= 0 >= f(hi).
template <typename F>
double BisectDecreasing(F&& f, double lo, double hi) {
  for (int i = 0; i < 200 && hi - lo > 0.0; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (f(mid) > 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return std::abs(f(lo)) <= std::abs(f(hi)) ? lo : hi;
}

ThermalState SteadyConstantFlux(const WallAssembly& assembly,
                                const HeatSource& source,
                                const Environment& env, double scale) {
  const ThermalLayer& s = assembly.silicone();
  const double g_s = *s.conv_faces * s.conv_coeff * s.area;
  const double p_s = AbsorbedPower(source, s, scale);
  const double ambient = env.ambient();

  if (!assembly.is_bilayer()) {
    if (p_s == 0.0) return {0.0, ambient, std::nullopt};
    if (g_s <= 0.0) {
      throw Error(ErrorKind::kNumericalFailure,
                  "single-layer wall has no convective path; no steady state");
    }
    return {0.0, ambient + p_s / g_s, std::nullopt};
  }

  const ThermalLayer& l = assembly.lig();
  const double g_l = *l.conv_faces * l.conv_coeff * l.area;
  const double k = CouplingConductance(s);
  const double p_l = AbsorbedPower(source, l, scale);
  if (p_s == 0.0 && p_l == 0.0) return {0.0, ambient, ambient};

  //  (g_s + k) u_s -        k u_l = p_s
  //       -k   u_s + (g_l + k) u_l = p_l
  const double det = (g_s + k) * (g_l + k) - k * k;
  if (!(det > 0.0)) {
    throw Error(ErrorKind::kNumericalFailure,
                "bilayer wall has no convective path; no steady state");
  }
  const double u_s = (p_s * (g_l + k) + k * p_l) / det;
  const double u_l = (p_l * (g_s + k) + k * p_s) / det;
  return {0.0, ambient + u_s, ambient + u_l};
}

ThermalState SteadyRadiative(const WallAssembly& assembly,
                             const HeatSource& source, const Environment& env,
                             double scale) {
  constexpr double kResidualTolerance = 1e-9;  // W
  constexpr int kMaxSweeps = 10000;

  const double ambient = env.ambient();
  const double lo = std::min(ambient, source.source_temperature());
  const double hi = std::max(ambient, source.source_temperature());
  const ThermalLayer& s = assembly.silicone();

  if (!assembly.is_bilayer()) {
    auto balance = [&](double theta) {
      return InputPower(source, s, theta, scale) -
             ConvectiveLoss(s, theta, env);
    };
    const double theta = BisectDecreasing(balance, lo, hi);
    if (std::abs(balance(theta)) > kResidualTolerance) {
      throw Error(ErrorKind::kNumericalFailure,
                  fmt::format("radiative steady state did not converge "
                              "(residual {:.3e} W)",
                              balance(theta)));
    }
    return {0.0, theta, std::nullopt};
  }

  const ThermalLayer& l = assembly.lig();
  double theta_s = ambient;
  double theta_l = ambient;
  auto lig_balance = [&](double tl, double ts) {
    return InputPower(source, l, tl, scale) - ConvectiveLoss(l, tl, env) -
           ConductionFlow(tl, ts, s);
  };
  auto silicone_balance = [&](double ts, double tl) {
    return InputPower(source, s, ts, scale) - ConvectiveLoss(s, ts, env) +
           ConductionFlow(tl, ts, s);
  };
  // Gauss-Seidel over the two nodes; each half-step is a monotone 1-D solve.
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    theta_l = BisectDecreasing(
        [&](double tl) { return lig_balance(tl, theta_s); }, lo, hi);
    theta_s = BisectDecreasing(
        [&](double ts) { return silicone_balance(ts, theta_l); }, lo, hi);
    if (std::abs(lig_balance(theta_l, theta_s)) < kResidualTolerance &&
        std::abs(silicone_balance(theta_s, theta_l)) < kResidualTolerance) {
      return {0.0, theta_s, theta_l};
    }
  }
  throw Error(ErrorKind::kNumericalFailure,
              fmt::format("radiative bilayer steady state did not converge "
                          "after {} sweeps",
                          kMaxSweeps));
}

}  // namespace

void ValidateLayer(const ThermalLayer& layer, const std::string& name,
                   bool conducting) {
  RequirePositive(layer.specific_heat, name, "specific_heat");
  RequirePositive(layer.density, name, "density");
  RequirePositive(layer.thickness, name, "thickness");
  RequirePositive(layer.area, name, "area");
  if (conducting) {
    RequirePositive(layer.conductivity, name, "conductivity");
  } else if (!(layer.conductivity >= 0.0)) {
    Invalid(fmt::format("{}.conductivity must be >= 0 (got {})", name,
                        layer.conductivity));
  }
  RequirePositive(layer.conv_coeff, name, "conv_coeff");
  RequireUnit(layer.emissivity, name, "emissivity");
  RequireUnit(layer.absorptance, name, "absorptance");
  if (layer.conv_faces && (*layer.conv_faces < 0 || *layer.conv_faces > 2)) {
    Invalid(fmt::format("{}.conv_faces must be 0, 1 or 2 (got {})", name,
                        *layer.conv_faces));
  }
}

HeatSource HeatSource::ConstantFlux(double power_W) {
  if (!(power_W >= 0.0) || !std::isfinite(power_W)) {
    Invalid(fmt::format("source power must be >= 0 (got {})", power_W));
  }
  return HeatSource(SourceMode::kConstantFlux, power_W, 0.0, 0.0);
}

HeatSource HeatSource::RadiativeBody(double temperature_K, double emissivity) {
  if (!(temperature_K > 0.0) || !std::isfinite(temperature_K)) {
    Invalid(fmt::format("source temperature must be > 0 K (got {})",
                        temperature_K));
  }
  if (!(emissivity > 0.0 && emissivity <= 1.0)) {
    Invalid(fmt::format("source emissivity must lie in (0, 1] (got {})",
                        emissivity));
  }
  return HeatSource(SourceMode::kRadiativeBody, 0.0, temperature_K,
                    emissivity);
}

Environment::Environment(double ambient_K) : ambient_(ambient_K) {
  if (!(ambient_K > 0.0) || !std::isfinite(ambient_K)) {
    Invalid(fmt::format("ambient temperature must be > 0 K (got {})",
                        ambient_K));
  }
}

WallAssembly WallAssembly::SingleLayer(ThermalLayer silicone) {
  ValidateLayer(silicone, "silicone");
  return WallAssembly(WallKind::kSingleLayer, WithFaces(std::move(silicone), 2),
                      std::nullopt);
}

WallAssembly WallAssembly::Bilayer(ThermalLayer silicone, ThermalLayer lig) {
  ValidateLayer(silicone, "silicone");
  ValidateLayer(lig, "lig", /*conducting=*/false);
  return WallAssembly(WallKind::kBilayer, WithFaces(std::move(silicone), 1),
                      WithFaces(std::move(lig), 1));
}

const ThermalLayer& WallAssembly::lig() const {
  if (!lig_) {
    throw Error(ErrorKind::kKindMismatch, "single-layer wall has no LIG layer");
  }
  return *lig_;
}

std::vector<std::string> WallAssembly::Warnings() const {
  std::vector<std::string> warnings;
  if (lig_ && silicone_.absorptance + lig_->absorptance > 1.0) {
    warnings.push_back(fmt::format(
        "absorptances sum to {:.4f} > 1; more power is absorbed than emitted",
        silicone_.absorptance + lig_->absorptance));
  }
  return warnings;
}

double HeatCapacity(const ThermalLayer& layer) {
  return layer.specific_heat * layer.density * layer.area * layer.thickness;
}

double RadiativeExchange(double theta_hot, double eps_hot, double theta_cold,
                         double eps_cold, double area) {
  if (!(eps_hot > 0.0 && eps_hot <= 1.0) ||
      !(eps_cold > 0.0 && eps_cold <= 1.0)) {
    Invalid(fmt::format("emissivities must lie in (0, 1] (got {}, {})",
                        eps_hot, eps_cold));
  }
  if (!(theta_hot > 0.0) || !(theta_cold > 0.0)) {
    Invalid("radiative exchange requires positive absolute temperatures");
  }
  const double hot4 = theta_hot * theta_hot * theta_hot * theta_hot;
  const double cold4 = theta_cold * theta_cold * theta_cold * theta_cold;
  return kStefanBoltzmann * (hot4 - cold4) * area /
         (1.0 / eps_hot + 1.0 / eps_cold - 1.0);
}

double AbsorbedPower(const HeatSource& source, const ThermalLayer& layer,
                     double scale) {
  if (source.mode() != SourceMode::kConstantFlux) {
    throw Error(ErrorKind::kModeMismatch,
                "absorbed power is defined for constant-flux sources only");
  }
  if (!(scale >= 0.0)) {
    Invalid(fmt::format("drive scale must be >= 0 (got {})", scale));
  }
  return layer.absorptance * source.power() * scale;
}

double InputPower(const HeatSource& source, const ThermalLayer& layer,
                  double theta, double scale) {
  if (source.mode() == SourceMode::kConstantFlux) {
    return AbsorbedPower(source, layer, scale);
  }
  if (scale == 0.0) return 0.0;
  return scale * RadiativeExchange(source.source_temperature(),
                                   source.source_emissivity(), theta,
                                   Emissivity(layer), layer.area);
}

double CouplingConductance(const ThermalLayer& silicone) {
  return silicone.conductivity * silicone.area / silicone.thickness;
}

double ConductionFlow(double theta_lig, double theta_silicone,
                      const ThermalLayer& silicone) {
  return CouplingConductance(silicone) * (theta_lig - theta_silicone);
}

double ConvectiveLoss(const ThermalLayer& layer, double theta,
                      const Environment& env) {
  return layer.conv_faces.value_or(1) * layer.conv_coeff * layer.area *
         (theta - env.ambient());
}

double RhsSingle(const ThermalState& state, const WallAssembly& assembly,
                 const HeatSource& source, const Environment& env,
                 double scale) {
  if (assembly.is_bilayer()) {
    throw Error(ErrorKind::kKindMismatch,
                "single-layer rate requested for a bilayer wall");
  }
  const ThermalLayer& s = assembly.silicone();
  const double net = InputPower(source, s, state.silicone, scale) -
                     ConvectiveLoss(s, state.silicone, env);
  return net / HeatCapacity(s);
}

BilayerRates RhsBilayer(const ThermalState& state,
                        const WallAssembly& assembly, const HeatSource& source,
                        const Environment& env, double scale) {
  if (!assembly.is_bilayer()) {
    throw Error(ErrorKind::kKindMismatch,
                "bilayer rate requested for a single-layer wall");
  }
  if (!state.lig) {
    Invalid("bilayer state is missing the LIG temperature");
  }
  const ThermalLayer& s = assembly.silicone();
  const ThermalLayer& l = assembly.lig();
  const double theta_s = state.silicone;
  const double theta_l = *state.lig;
  const double q_ls = ConductionFlow(theta_l, theta_s, s);

  const double net_l = InputPower(source, l, theta_l, scale) -
                       ConvectiveLoss(l, theta_l, env) - q_ls;
  const double net_s = InputPower(source, s, theta_s, scale) -
                       ConvectiveLoss(s, theta_s, env) + q_ls;
  return {net_s / HeatCapacity(s), net_l / HeatCapacity(l)};
}

ThermalState SteadyState(const WallAssembly& assembly, const HeatSource& source,
                         const Environment& env, double scale) {
  if (!(scale >= 0.0)) {
    Invalid(fmt::format("drive scale must be >= 0 (got {})", scale));
  }
  if (source.mode() == SourceMode::kConstantFlux) {
    return SteadyConstantFlux(assembly, source, env, scale);
  }
  return SteadyRadiative(assembly, source, env, scale);
}

}  // namespace photothermal
