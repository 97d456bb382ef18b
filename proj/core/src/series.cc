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

#include "photothermal/series.h"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "photothermal/error.h"

namespace photothermal {

std::string_view SeriesUnitName(SeriesUnit unit) {
  switch (unit) {
    case SeriesUnit::kKelvin: return "K";
    case SeriesUnit::kCelsius: return "C";
    case SeriesUnit::kDegreesOfBend: return "deg";
    case SeriesUnit::kDimensionless: return "1";
  }
  return "?";
}

MeasurementSeries::MeasurementSeries(std::vector<SeriesPoint> points,
                                     SeriesUnit unit, std::string label)
    : points_(std::move(points)), unit_(unit), label_(std::move(label)) {
  if (points_.size() < 2) {
    throw Error(ErrorKind::kBadInput,
                fmt::format("series needs at least 2 points (got {})",
                            points_.size()));
  }
  for (std::size_t i = 0; i < points_.size(); ++i) {
    const SeriesPoint& p = points_[i];
    if (!std::isfinite(p.time) || !std::isfinite(p.value)) {
      throw Error(ErrorKind::kBadInput,
                  fmt::format("series point {} is not finite", i));
    }
    if (i > 0 && !(p.time > points_[i - 1].time)) {
      throw Error(ErrorKind::kBadInput,
                  fmt::format("series time must strictly increase at point {} "
                              "(t={} after t={})",
                              i, p.time, points_[i - 1].time));
    }
  }
}

double MeasurementSeries::ValueAt(double time) const {
  if (!(time >= start_time() && time <= end_time())) {
    throw Error(ErrorKind::kInvalidArgument,
                fmt::format("t={} lies outside the series span [{}, {}]", time,
                            start_time(), end_time()));
  }
  auto it = std::lower_bound(
      points_.begin(), points_.end(), time,
      [](const SeriesPoint& p, double t) { return p.time < t; });
  if (it->time == time) return it->value;
  const SeriesPoint& b = *it;
  const SeriesPoint& a = *(it - 1);
  const double w = (time - a.time) / (b.time - a.time);
  return a.value + w * (b.value - a.value);
}

MeasurementSeries MeasurementSeries::Slice(double from, double to) const {
  std::vector<SeriesPoint> out;
  for (const auto& p : points_) {
    if (p.time >= from && p.time <= to) out.push_back(p);
  }
  return MeasurementSeries(std::move(out), unit_, label_);
}

}  // namespace photothermal
