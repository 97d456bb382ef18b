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

#ifndef PHOTOTHERMAL_SERIES_H_
#define PHOTOTHERMAL_SERIES_H_

#include <span>
#include <string>
#include <vector>

namespace photothermal {

enum class SeriesUnit { kKelvin, kCelsius, kDegreesOfBend, kDimensionless };

std::string_view SeriesUnitName(SeriesUnit unit);

struct SeriesPoint {
  double time = 0.0;  // s
  double value = 0.0;

  friend bool operator==(const SeriesPoint&, const SeriesPoint&) = default;
};

// A measured or simulated time series: at least two points, strictly
// increasing finite times, finite values. Validated on construction.
class MeasurementSeries {
 public:
  MeasurementSeries(std::vector<SeriesPoint> points,
                    SeriesUnit unit = SeriesUnit::kKelvin,
                    std::string label = {});

  std::span<const SeriesPoint> points() const { return points_; }
  SeriesUnit unit() const { return unit_; }
  const std::string& label() const { return label_; }

  std::size_t size() const { return points_.size(); }
  const SeriesPoint& front() const { return points_.front(); }
  const SeriesPoint& back() const { return points_.back(); }
  double start_time() const { return points_.front().time; }
  double end_time() const { return points_.back().time; }
  double span() const { return end_time() - start_time(); }

  // Linear interpolation; throws kInvalidArgument outside [start, end].
  double ValueAt(double time) const;

  // Same times, values replaced by f(value).
  template <typename F>
  MeasurementSeries Map(F&& f) const {
    std::vector<SeriesPoint> out(points_);
    for (auto& p : out) p.value = f(p.value);
    return MeasurementSeries(std::move(out), unit_, label_);
  }

  // Points with time in [from, to].
  MeasurementSeries Slice(double from, double to) const;

 private:
  std::vector<SeriesPoint> points_;
  SeriesUnit unit_;
  std::string label_;
};

}  // namespace photothermal

#endif  // PHOTOTHERMAL_SERIES_H_
