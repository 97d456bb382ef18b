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

#include "photothermal/metrics.h"

#include <algorithm>
#include <cmath>
#include <deque>

#include <fmt/format.h>

#include "photothermal/error.h"

namespace photothermal {

std::string_view ResponseConventionName(ResponseConvention convention) {
  switch (convention) {
    case ResponseConvention::kWindowFinal: return "window-final";
    case ResponseConvention::kPlateau: return "plateau";
    case ResponseConvention::kSupplied: return "supplied";
  }
  return "?";
}

ResponseConvention ParseResponseConvention(std::string_view text) {
  if (text == "window-final" || text == "window_final") {
    return ResponseConvention::kWindowFinal;
  }
  if (text == "plateau") return ResponseConvention::kPlateau;
  if (text == "supplied") return ResponseConvention::kSupplied;
  throw Error(ErrorKind::kBadInput,
              fmt::format("unknown response convention '{}' (expected "
                          "window-final, plateau or supplied)",
                          text));
}

ResponseReport ResponseTime63(const MeasurementSeries& series,
                              const ResponseOptions& options) {
  const auto points = series.points();
  ResponseReport report;
  report.convention = options.convention;
  report.baseline = points.front().value;

  switch (options.convention) {
    case ResponseConvention::kWindowFinal:
      if (!(options.window > 0.0) || options.window > series.span()) {
        throw Error(ErrorKind::kInvalidArgument,
                    fmt::format("window {} s must be positive and within the "
                                "series span {} s",
                                options.window, series.span()));
      }
      report.final_value = series.ValueAt(series.start_time() + options.window);
      break;
    case ResponseConvention::kPlateau:
      report.final_value =
          PlateauValue(series, options.plateau_threshold, options.plateau_window)
              .value;
      break;
    case ResponseConvention::kSupplied:
      if (!std::isfinite(options.supplied_final)) {
        throw Error(ErrorKind::kInvalidArgument, "supplied final is not finite");
      }
      report.final_value = options.supplied_final;
      break;
  }

  auto peak = std::max_element(
      points.begin(), points.end(),
      [](const SeriesPoint& a, const SeriesPoint& b) { return a.value < b.value; });
  report.peak_value = peak->value;
  report.peak_time = peak->time;

  const double delta = report.final_value - report.baseline;
  if (delta == 0.0) {
    throw Error(ErrorKind::kNoCrossing,
                "final value equals baseline; the response is flat");
  }
  const double level = report.baseline + kResponseFraction * delta;
  // Signed distance past the level in the direction of the response.
  auto past = [&](double v) { return delta > 0.0 ? v - level : level - v; };

  for (std::size_t i = 1; i < points.size(); ++i) {
    if (past(points[i].value) >= 0.0) {
      const SeriesPoint& a = points[i - 1];
      const SeriesPoint& b = points[i];
      const double w = (level - a.value) / (b.value - a.value);
      report.t63 = a.time + w * (b.time - a.time);
      return report;
    }
  }
  throw Error(ErrorKind::kNoCrossing,
              fmt::format("series never reaches the 63.2 % level {:.6g}",
                          level));
}

Plateau PlateauValue(const MeasurementSeries& series, double threshold,
                     double window) {
  if (!(threshold > 0.0) || !(window > 0.0)) {
    throw Error(ErrorKind::kInvalidArgument,
                fmt::format("plateau threshold and window must be positive "
                            "(got {}, {})",
                            threshold, window));
  }
  if (series.span() < window) {
    throw Error(ErrorKind::kNoPlateau,
                fmt::format("series span {} s is shorter than the plateau "
                            "window {} s",
                            series.span(), window));
  }
  const auto p = series.points();
  const std::size_t n = p.size();
  const double slack = 1e-9 * window;

  std::vector<double> prefix(n + 1, 0.0);
  for (std::size_t i = 0; i < n; ++i) prefix[i + 1] = prefix[i] + p[i].value;

  // Monotonic deques of indices holding the running max and min over [i, j].
  std::deque<std::size_t> maxq;
  std::deque<std::size_t> minq;
  std::size_t j = 0;  // one past the last index inside the window
  for (std::size_t i = 0; i < n; ++i) {
    const double end = p[i].time + window;
    if (end > p[n - 1].time + slack) break;
    while (j < n && p[j].time <= end + slack) {
      while (!maxq.empty() && p[maxq.back()].value <= p[j].value) maxq.pop_back();
      while (!minq.empty() && p[minq.back()].value >= p[j].value) minq.pop_back();
      maxq.push_back(j);
      minq.push_back(j);
      ++j;
    }
    while (maxq.front() < i) maxq.pop_front();
    while (minq.front() < i) minq.pop_front();
    if (j - i < 2) continue;
    if (p[maxq.front()].value - p[minq.front()].value < threshold) {
      const double mean = (prefix[j] - prefix[i]) / static_cast<double>(j - i);
      return {mean, p[i].time};
    }
  }
  throw Error(ErrorKind::kNoPlateau,
              fmt::format("no {} s window varies by less than {}", window,
                          threshold));
}

MeasurementSeries NormalizeCurve(const MeasurementSeries& series,
                                 double plateau) {
  const double initial = series.front().value;
  if (plateau == initial) {
    throw Error(ErrorKind::kDegenerate,
                "plateau equals the initial value; cannot normalize");
  }
  const double span = plateau - initial;
  std::vector<SeriesPoint> out(series.points().begin(), series.points().end());
  for (auto& p : out) p.value = (p.value - initial) / span;
  return MeasurementSeries(std::move(out), SeriesUnit::kDimensionless,
                           series.label());
}

MeasurementSeries DenormalizeCurve(const MeasurementSeries& normalized,
                                   double initial, double plateau,
                                   SeriesUnit unit) {
  if (plateau == initial) {
    throw Error(ErrorKind::kDegenerate,
                "plateau equals the initial value; cannot denormalize");
  }
  const double span = plateau - initial;
  std::vector<SeriesPoint> out(normalized.points().begin(),
                               normalized.points().end());
  for (auto& p : out) p.value = initial + p.value * span;
  return MeasurementSeries(std::move(out), unit, normalized.label());
}

CoolingFit FitCooling(const MeasurementSeries& series, double ambient) {
  const auto p = series.points();
  const auto n = static_cast<double>(p.size());
  double mean_t = 0.0;
  double mean_y = 0.0;
  std::vector<double> y(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    const double excess = p[i].value - ambient;
    if (!(excess > 0.0)) {
      throw Error(ErrorKind::kInvalidArgument,
                  fmt::format("log-domain error: value {} at t={} is not above "
                              "ambient {}",
                              p[i].value, p[i].time, ambient));
    }
    y[i] = std::log(excess);
    mean_t += p[i].time;
    mean_y += y[i];
  }
  mean_t /= n;
  mean_y /= n;

  double stt = 0.0;
  double sty = 0.0;
  double syy = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const double dt = p[i].time - mean_t;
    const double dy = y[i] - mean_y;
    stt += dt * dt;
    sty += dt * dy;
    syy += dy * dy;
  }
  const double slope = sty / stt;
  if (!(slope < 0.0)) {
    throw Error(ErrorKind::kDegenerate,
                "excess temperature does not decay; no cooling constant");
  }
  double ss_res = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const double fit = mean_y + slope * (p[i].time - mean_t);
    ss_res += (y[i] - fit) * (y[i] - fit);
  }
  const double r2 = syy > 0.0 ? 1.0 - ss_res / syy : 1.0;
  return {-1.0 / slope, std::clamp(r2, 0.0, 1.0)};
}

std::vector<double> CycleDegradation(std::span<const double> peaks) {
  if (peaks.empty()) {
    throw Error(ErrorKind::kInvalidArgument, "no cycle peaks given");
  }
  const double first = peaks.front();
  if (!(first > 0.0)) {
    throw Error(ErrorKind::kDegenerate,
                fmt::format("first cycle peak must be positive (got {})", first));
  }
  std::vector<double> ratios;
  ratios.reserve(peaks.size());
  for (double peak : peaks) ratios.push_back(peak / first);
  ratios.front() = 1.0;
  return ratios;
}

double AngularChangeRatio(const MeasurementSeries& series, double reference) {
  if (!(reference > 0.0)) {
    throw Error(ErrorKind::kDegenerate,
                fmt::format("reference angle must be positive (got {})",
                            reference));
  }
  return series.back().value / reference;
}

std::vector<SeriesPoint> DetectCyclePeaks(const MeasurementSeries& series,
                                          double fraction) {
  if (!(fraction > 0.0 && fraction < 1.0)) {
    throw Error(ErrorKind::kInvalidArgument,
                fmt::format("cycle fraction must lie in (0, 1) (got {})",
                            fraction));
  }
  const auto p = series.points();
  const double baseline = p.front().value;
  double global = baseline;
  for (const auto& pt : p) global = std::max(global, pt.value);
  if (global <= baseline) {
    throw Error(ErrorKind::kNoCrossing, "series never rises above baseline");
  }
  const double threshold = baseline + fraction * (global - baseline);

  std::vector<SeriesPoint> peaks;
  bool inside = false;
  for (const auto& pt : p) {
    if (pt.value >= threshold) {
      if (!inside) {
        peaks.push_back(pt);
        inside = true;
      } else if (pt.value > peaks.back().value) {
        peaks.back() = pt;
      }
    } else {
      inside = false;
    }
  }
  return peaks;
}

}  // namespace photothermal
