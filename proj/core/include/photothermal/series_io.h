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

#ifndef PHOTOTHERMAL_SERIES_IO_H_
#define PHOTOTHERMAL_SERIES_IO_H_

// CSV files. Comma separated, LF line endings, '.' decimal point.
//
//   Measurement series      Trajectory
//   # unit: K|C|deg|1        t_s,theta_s_K,theta_L_K
//   time_s,value            0.000000,298.000000,298.000000
//   0,298                   ...
//
// Lines starting with '#' are comments; "# unit:" sets the value unit of a
// measurement series (default K). Celsius is converted to kelvin on ingest.
// Trajectory files leave theta_L_K empty for single-layer walls.

#include <filesystem>
#include <optional>
#include <ostream>
#include <string_view>

#include "photothermal/series.h"
#include "photothermal/simulate.h"

namespace photothermal {

// Parses either format. For trajectory files `channel` picks the column;
// when unset the LIG column is used if populated, else the silicone column.
// Errors are kBadInput naming the offending line.
MeasurementSeries ParseSeries(std::string_view text, std::string_view origin,
                              std::optional<Channel> channel = std::nullopt);
MeasurementSeries ReadSeries(const std::filesystem::path& path,
                             std::optional<Channel> channel = std::nullopt);

void FormatTrajectory(const Trajectory& trajectory, std::ostream& out);
// Throws kIo when the file cannot be written.
void WriteTrajectory(const Trajectory& trajectory,
                     const std::filesystem::path& path);

// Measurement-series format with a unit comment line.
void FormatSeries(const MeasurementSeries& series, std::ostream& out);

// Reads a whole file; throws kIo.
std::string ReadFile(const std::filesystem::path& path);

}  // namespace photothermal

#endif  // PHOTOTHERMAL_SERIES_IO_H_
