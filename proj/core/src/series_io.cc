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

#include "photothermal/series_io.h"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <fmt/format.h>
#include <fmt/ostream.h>

#include "photothermal/error.h"

namespace photothermal {
namespace {

constexpr std::string_view kSeriesHeader = "time_s,value";
constexpr std::string_view kTrajectoryHeader = "t_s,theta_s_K,theta_L_K";

std::vector<std::string_view> SplitCommas(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t pos = 0;
  while (true) {
    const auto comma = line.find(',', pos);
    fields.push_back(line.substr(pos, comma == std::string_view::npos
                                          ? std::string_view::npos
                                          : comma - pos));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return fields;
}

std::string_view Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  return s.substr(first, s.find_last_not_of(" \t\r") - first + 1);
}

[[noreturn]] void Bad(std::string_view origin, int line,
                      const std::string& message) {
  throw Error(ErrorKind::kBadInput,
              fmt::format("{}:{}: {}", origin, line, message));
}

double Number(std::string_view field, std::string_view origin, int line,
              std::string_view column) {
  field = Trim(field);
  double value = 0.0;
  auto [ptr, ec] =
      std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size() ||
      field.empty()) {
    Bad(origin, line, fmt::format("{} '{}' is not a number", column, field));
  }
  if (!std::isfinite(value)) {
    Bad(origin, line, fmt::format("{} is not finite", column));
  }
  return value;
}

}  // namespace

MeasurementSeries ParseSeries(std::string_view text, std::string_view origin,
                              std::optional<Channel> channel) {
  enum class Format { kUnknown, kSeries, kTrajectory };
  Format format = Format::kUnknown;
  SeriesUnit unit = SeriesUnit::kKelvin;
  bool unit_given = false;
  std::vector<SeriesPoint> silicone;
  std::vector<SeriesPoint> lig;
  bool lig_complete = true;

  int line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const auto eol = text.find('\n', pos);
    std::string_view line = text.substr(
        pos, eol == std::string_view::npos ? std::string_view::npos
                                           : eol - pos);
    pos = eol == std::string_view::npos ? text.size() : eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (Trim(line).empty()) continue;

    if (line.front() == '#') {
      std::string_view body = Trim(line.substr(1));
      if (body.starts_with("unit:")) {
        const std::string_view u = Trim(body.substr(5));
        if (u == "K") {
          unit = SeriesUnit::kKelvin;
        } else if (u == "C") {
          unit = SeriesUnit::kCelsius;
        } else if (u == "deg") {
          unit = SeriesUnit::kDegreesOfBend;
        } else if (u == "1") {
          unit = SeriesUnit::kDimensionless;
        } else {
          Bad(origin, line_no,
              fmt::format("unknown unit '{}' (expected K, C, deg or 1)", u));
        }
        unit_given = true;
      }
      continue;
    }

    if (format == Format::kUnknown) {
      const std::string_view header = Trim(line);
      if (header == kSeriesHeader) {
        format = Format::kSeries;
      } else if (header == kTrajectoryHeader) {
        format = Format::kTrajectory;
      } else {
        Bad(origin, line_no,
            fmt::format("expected header '{}' or '{}', got '{}'",
                        kSeriesHeader, kTrajectoryHeader, header));
      }
      continue;
    }

    const auto fields = SplitCommas(line);
    const std::size_t expected = format == Format::kSeries ? 2 : 3;
    if (fields.size() != expected) {
      Bad(origin, line_no,
          fmt::format("expected {} fields, got {}", expected, fields.size()));
    }
    const double t = Number(fields[0], origin, line_no, "time");
    if (!silicone.empty() && !(t > silicone.back().time)) {
      Bad(origin, line_no,
          fmt::format("time {} does not increase (previous {})", t,
                      silicone.back().time));
    }
    double value = Number(fields[1], origin, line_no, "value");
    if (format == Format::kSeries && unit == SeriesUnit::kCelsius) {
      value = ToKelvin(value);
    }
    silicone.push_back({t, value});
    if (format == Format::kTrajectory) {
      if (Trim(fields[2]).empty()) {
        lig_complete = false;
      } else {
        lig.push_back({t, Number(fields[2], origin, line_no, "theta_L_K")});
      }
    }
  }

  if (format == Format::kUnknown) {
    Bad(origin, line_no, "no header row found");
  }
  if (silicone.size() < 2) {
    Bad(origin, line_no,
        fmt::format("series needs at least 2 data rows (got {})",
                    silicone.size()));
  }
  if (format == Format::kSeries) {
    if (channel == Channel::kLig) {
      Bad(origin, 1, "measurement series has no LIG column");
    }
    const SeriesUnit stored =
        unit == SeriesUnit::kCelsius ? SeriesUnit::kKelvin : unit;
    return MeasurementSeries(std::move(silicone), stored, "value");
  }

  if (unit_given && unit != SeriesUnit::kKelvin) {
    Bad(origin, 1, "trajectory files are always in kelvin");
  }
  const bool lig_present = lig_complete && lig.size() == silicone.size();
  if (!lig_complete && !lig.empty()) {
    Bad(origin, line_no, "theta_L_K column is only partly populated");
  }
  const Channel pick =
      channel.value_or(lig_present ? Channel::kLig : Channel::kSilicone);
  if (pick == Channel::kLig) {
    if (!lig_present) Bad(origin, 1, "trajectory has no theta_L_K values");
    return MeasurementSeries(std::move(lig), SeriesUnit::kKelvin, "lig");
  }
  return MeasurementSeries(std::move(silicone), SeriesUnit::kKelvin,
                           "silicone");
}

std::string ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorKind::kIo, fmt::format("cannot open '{}'", path.string()));
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

MeasurementSeries ReadSeries(const std::filesystem::path& path,
                             std::optional<Channel> channel) {
  return ParseSeries(ReadFile(path), path.string(), channel);
}

void FormatTrajectory(const Trajectory& trajectory, std::ostream& out) {
  fmt::memory_buffer buf;
  fmt::format_to(std::back_inserter(buf), "{}\n", kTrajectoryHeader);
  for (const ThermalState& s : trajectory.samples()) {
    if (s.lig) {
      fmt::format_to(std::back_inserter(buf), "{:.6f},{:.6f},{:.6f}\n", s.time,
                     s.silicone, *s.lig);
    } else {
      fmt::format_to(std::back_inserter(buf), "{:.6f},{:.6f},\n", s.time,
                     s.silicone);
    }
  }
  out.write(buf.data(), static_cast<std::streamsize>(buf.size()));
}

void WriteTrajectory(const Trajectory& trajectory,
                     const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw Error(ErrorKind::kIo,
                fmt::format("cannot write '{}'", path.string()));
  }
  FormatTrajectory(trajectory, out);
  out.flush();
  if (!out) {
    throw Error(ErrorKind::kIo,
                fmt::format("write to '{}' failed", path.string()));
  }
}

void FormatSeries(const MeasurementSeries& series, std::ostream& out) {
  fmt::print(out, "# unit: {}\n{}\n", SeriesUnitName(series.unit()),
             kSeriesHeader);
  for (const SeriesPoint& p : series.points()) {
    fmt::print(out, "{:.6f},{:.9g}\n", p.time, p.value);
  }
}

}  // namespace photothermal
