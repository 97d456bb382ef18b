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

#ifndef PHOTOTHERMAL_METRICS_H_
#define PHOTOTHERMAL_METRICS_H_

// Scalar descriptors of step responses: 63 % response time, plateau,
// normalization, Newton-cooling fits and cycle-to-cycle degradation.
//
// All times are on the series' own clock. The baseline of a response is the
// first sample, so series are expected to start at stimulus onset.

#include <span>
#include <string_view>
#include <vector>

#include "photothermal/series.h"

namespace photothermal {

inline constexpr double kResponseFraction = 0.632;

enum class ResponseConvention {
  kWindowFinal,  // final = value at start + window
  kPlateau,      // final = PlateauValue(threshold, plateau_window)
  kSupplied,     // final given by the caller, e.g. a known asymptote
};

std::string_view ResponseConventionName(ResponseConvention convention);
// Accepts "window-final"/"window_final", "plateau", "supplied".
ResponseConvention ParseResponseConvention(std::string_view text);

struct ResponseOptions {
  ResponseConvention convention = ResponseConvention::kWindowFinal;
  double window = 300.0;          // s, window-final only
  double supplied_final = 0.0;    // supplied only
  double plateau_threshold = 0.0; // plateau only
  double plateau_window = 0.0;    // s, plateau only
};

struct ResponseReport {
  double baseline = 0.0;
  double final_value = 0.0;
  ResponseConvention convention = ResponseConvention::kWindowFinal;
  double t63 = 0.0;  // s, linearly interpolated crossing time
  double peak_value = 0.0;
  double peak_time = 0.0;
};

// Earliest time the series crosses baseline + 0.632 (final - baseline).
// Works for falling responses too (final < baseline).
// Throws kNoCrossing when the level is never reached or final == baseline.
ResponseReport ResponseTime63(const MeasurementSeries& series,
                              const ResponseOptions& options);

struct Plateau {
  double value = 0.0;       // mean over the qualifying window
  double reach_time = 0.0;  // s, window start
};

// Earliest sample time t* such that max - min over samples in
// [t*, t* + window] is below `threshold`. Throws kNoPlateau.
Plateau PlateauValue(const MeasurementSeries& series, double threshold,
                     double window);

// Affine map taking the first value to 0 and `plateau` to 1. The result is
// dimensionless.
MeasurementSeries NormalizeCurve(const MeasurementSeries& series,
                                 double plateau);
// Inverse of NormalizeCurve for the given original initial value and unit.
MeasurementSeries DenormalizeCurve(const MeasurementSeries& normalized,
                                   double initial, double plateau,
                                   SeriesUnit unit = SeriesUnit::kKelvin);

struct CoolingFit {
  double tau = 0.0;        // s
  double r_squared = 0.0;  // of the log-linear regression
};

// Least squares of ln(value - ambient) against time. Every value must lie
// strictly above ambient and the excess must decay.
CoolingFit FitCooling(const MeasurementSeries& series, double ambient);

// Each peak divided by the first. Throws kDegenerate if the first is <= 0.
std::vector<double> CycleDegradation(std::span<const double> peaks);

// Final value / reference. Throws kDegenerate if reference <= 0.
double AngularChangeRatio(const MeasurementSeries& series, double reference);

// Per-cycle maxima of a multi-cycle response: maximal runs at or above
// baseline + fraction * (global max - baseline), one peak per run.
std::vector<SeriesPoint> DetectCyclePeaks(const MeasurementSeries& series,
                                          double fraction = 0.25);

}  // namespace photothermal

#endif  // PHOTOTHERMAL_METRICS_H_
