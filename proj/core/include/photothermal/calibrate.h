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

#ifndef PHOTOTHERMAL_CALIBRATE_H_
#define PHOTOTHERMAL_CALIBRATE_H_

// Least-squares calibration of model parameters against a measured
// temperature series, using a bounded Nelder-Mead simplex.

#include <functional>
#include <span>
#include <vector>

#include "photothermal/parameters.h"
#include "photothermal/series.h"
#include "photothermal/simulate.h"

namespace photothermal {

struct ParamSpec {
  ModelParameter parameter = ModelParameter::kAlphaL;
  double lower = 0.0;
  double upper = 1.0;
  double initial = 0.5;
};

struct CalibrationProblem {
  MeasurementSeries target;  // kelvin
  std::vector<ParamSpec> free;
  ModelInputs model;
  SimConfig config;
  Channel channel = Channel::kSilicone;

  // Throws kInvalidArgument for empty/degenerate bounds, a target longer than
  // the simulated span, or parameters the model does not have.
  void Validate() const;
};

struct CalibrationResult {
  std::vector<double> fitted;  // in the order of problem.free
  double sse = 0.0;            // K^2
  double rmse = 0.0;           // K
  int iterations = 0;
  bool converged = false;
};

// Sum of squared errors between the target and the simulated channel sampled
// at the target's time stamps. record_stride is forced to 1.
double Objective(const CalibrationProblem& problem,
                 std::span<const double> candidate);

struct NelderMeadOptions {
  int max_iterations = 500;
  double relative_tolerance = 1e-8;  // on the spread of simplex values
  double absolute_tolerance = 1e-14;  // same spread, absolute floor
  double simplex_tolerance = 1e-12;  // simplex diameter, in box units
};

struct NelderMeadResult {
  std::vector<double> x;
  double value = 0.0;
  int iterations = 0;
  bool converged = false;
};

// Minimizes f over the box [lower, upper]. Points outside the box are
// evaluated at their clamped image plus a quadratic penalty; the returned
// point is always inside the box. The initial simplex is the start point plus
// one vertex per axis offset by 5 % of that axis's width (towards the interior
// when the start sits at the upper bound).
NelderMeadResult MinimizeNelderMead(
    const std::function<double(std::span<const double>)>& f,
    std::span<const double> start, std::span<const double> lower,
    std::span<const double> upper, const NelderMeadOptions& options = {});

CalibrationResult Fit(const CalibrationProblem& problem,
                      const NelderMeadOptions& options = {});

}  // namespace photothermal

#endif  // PHOTOTHERMAL_CALIBRATE_H_
