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

#include "photothermal/config.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

#include <fmt/format.h>

#include "photothermal/error.h"

namespace photothermal {
namespace {

struct Entry {
  std::string value;
  int line = 0;
};

using Section = std::map<std::string, Entry, std::less<>>;

const std::map<std::string, std::vector<std::string>, std::less<>>&
AllowedKeys() {
  static const std::map<std::string, std::vector<std::string>, std::less<>>
      keys = {
          {"assembly", {"kind"}},
          {"environment", {"ambient"}},
          {"source", {"mode", "power", "temperature", "emissivity"}},
          {"silicone",
           {"specific_heat", "density", "thickness", "area", "conductivity",
            "conv_coeff", "absorptance", "emissivity", "conv_faces"}},
          {"lig",
           {"specific_heat", "density", "thickness", "area", "conductivity",
            "conv_coeff", "absorptance", "emissivity", "conv_faces"}},
          {"schedule", {"on"}},
          {"simulation", {"dt", "duration", "record_stride", "metric_window"}},
          {"metrics",
           {"convention", "window", "final", "plateau_threshold",
            "plateau_window", "channel"}},
      };
  return keys;
}

std::string_view Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::optional<double> ToDouble(std::string_view text) {
  double value = 0.0;
  const char* begin = text.data();
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end || !std::isfinite(value)) {
    return std::nullopt;
  }
  return value;
}

enum class Check { kPositive, kNonNegative, kUnit, kOpenUnit, kAny };

class Reader {
 public:
  explicit Reader(std::string_view origin) : origin_(origin) {}

  void Fail(int line, const std::string& message) {
    errors_.push_back(line > 0 ? fmt::format("{}:{}: {}", origin_, line, message)
                               : fmt::format("{}: {}", origin_, message));
  }

  const std::vector<std::string>& errors() const { return errors_; }

  void Parse(std::string_view text) {
    std::string current;
    int line_no = 0;
    bool any_content = false;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      const auto eol = text.find('\n', pos);
      std::string_view raw = text.substr(
          pos, eol == std::string_view::npos ? std::string_view::npos
                                             : eol - pos);
      pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
      ++line_no;

      const auto comment = raw.find_first_of("#;");
      std::string_view line = Trim(raw.substr(0, comment));
      if (line.empty()) continue;
      any_content = true;

      if (line.front() == '[') {
        if (line.back() != ']') {
          Fail(line_no, fmt::format("malformed section header '{}'", line));
          continue;
        }
        current = std::string(Trim(line.substr(1, line.size() - 2)));
        if (!AllowedKeys().contains(current)) {
          Fail(line_no, fmt::format("unknown section [{}]", current));
        } else if (section_lines_.contains(current)) {
          Fail(line_no, fmt::format("section [{}] repeated", current));
        }
        section_lines_.emplace(current, line_no);
        sections_[current];
        continue;
      }

      const auto eq = line.find('=');
      if (eq == std::string_view::npos) {
        Fail(line_no, fmt::format("parse error: expected 'key = value', got "
                                  "'{}'",
                                  line));
        continue;
      }
      const std::string key(Trim(line.substr(0, eq)));
      const std::string value(Trim(line.substr(eq + 1)));
      if (current.empty()) {
        Fail(line_no, fmt::format("key '{}' appears before any section", key));
        continue;
      }
      auto allowed = AllowedKeys().find(current);
      if (allowed == AllowedKeys().end()) continue;  // already reported
      if (std::find(allowed->second.begin(), allowed->second.end(), key) ==
          allowed->second.end()) {
        Fail(line_no, fmt::format("unknown key '{}.{}'", current, key));
        continue;
      }
      if (value.empty()) {
        Fail(line_no, fmt::format("{}.{} has no value", current, key));
        continue;
      }
      if (current == "schedule") {
        schedule_.push_back({value, line_no});
        continue;
      }
      Section& section = sections_[current];
      if (section.contains(key)) {
        Fail(line_no, fmt::format("{}.{} given twice", current, key));
        continue;
      }
      section.emplace(key, Entry{value, line_no});
    }
    if (!any_content) Fail(0, "parse error: configuration is empty");
  }

  bool Has(std::string_view section) const {
    return sections_.contains(section);
  }
  int SectionLine(std::string_view section) const {
    auto it = section_lines_.find(section);
    return it == section_lines_.end() ? 0 : it->second;
  }

  const Entry* Find(std::string_view section, std::string_view key) const {
    auto s = sections_.find(section);
    if (s == sections_.end()) return nullptr;
    auto e = s->second.find(key);
    return e == s->second.end() ? nullptr : &e->second;
  }

  std::optional<std::string> Text(std::string_view section,
                                  std::string_view key, bool required) {
    const Entry* entry = Find(section, key);
    if (!entry) {
      if (required) {
        Fail(SectionLine(section),
             fmt::format("missing required key '{}.{}'", section, key));
      }
      return std::nullopt;
    }
    return entry->value;
  }

  std::optional<double> Number(std::string_view section, std::string_view key,
                               Check check, bool required) {
    const Entry* entry = Find(section, key);
    if (!entry) {
      if (required) {
        Fail(SectionLine(section),
             fmt::format("missing required key '{}.{}'", section, key));
      }
      return std::nullopt;
    }
    auto value = ToDouble(entry->value);
    if (!value) {
      Fail(entry->line, fmt::format("{}.{}: '{}' is not a finite number",
                                    section, key, entry->value));
      return std::nullopt;
    }
    const double v = *value;
    const char* violated = nullptr;
    switch (check) {
      case Check::kPositive:
        if (!(v > 0.0)) violated = "must be > 0";
        break;
      case Check::kNonNegative:
        if (!(v >= 0.0)) violated = "must be >= 0";
        break;
      case Check::kUnit:
        if (!(v >= 0.0 && v <= 1.0)) violated = "must lie in [0, 1]";
        break;
      case Check::kOpenUnit:
        if (!(v > 0.0 && v <= 1.0)) violated = "must lie in (0, 1]";
        break;
      case Check::kAny:
        break;
    }
    if (violated) {
      Fail(entry->line,
           fmt::format("{}.{} = {} {}", section, key, entry->value, violated));
      return std::nullopt;
    }
    return v;
  }

  std::optional<int> Integer(std::string_view section, std::string_view key,
                             int lo, int hi) {
    const Entry* entry = Find(section, key);
    if (!entry) return std::nullopt;
    int value = 0;
    const auto& s = entry->value;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size() || value < lo ||
        value > hi) {
      Fail(entry->line, fmt::format("{}.{} = {} must be an integer in [{}, {}]",
                                    section, key, s, lo, hi));
      return std::nullopt;
    }
    return value;
  }

  const std::vector<Entry>& schedule() const { return schedule_; }

 private:
  std::string origin_;
  std::vector<std::string> errors_;
  std::map<std::string, Section, std::less<>> sections_;
  std::map<std::string, int, std::less<>> section_lines_;
  std::vector<Entry> schedule_;
};

std::optional<ThermalLayer> ReadLayer(Reader& r, std::string_view section) {
  const bool silicone = section == "silicone";
  ThermalLayer layer;
  bool ok = true;
  auto take = [&](std::string_view key, Check check, double& out,
                  bool required = true) {
    auto v = r.Number(section, key, check, required);
    if (v) {
      out = *v;
    } else if (required || r.Find(section, key)) {
      ok = false;
    }
  };
  take("specific_heat", Check::kPositive, layer.specific_heat);
  take("density", Check::kPositive, layer.density);
  take("thickness", Check::kPositive, layer.thickness);
  take("area", Check::kPositive, layer.area);
  take("conductivity", silicone ? Check::kPositive : Check::kNonNegative,
       layer.conductivity, /*required=*/silicone);
  take("conv_coeff", Check::kPositive, layer.conv_coeff);
  take("absorptance", Check::kUnit, layer.absorptance);
  take("emissivity", Check::kUnit, layer.emissivity, /*required=*/false);
  if (r.Find(section, "conv_faces")) {
    layer.conv_faces = r.Integer(section, "conv_faces", 0, 2);
    if (!layer.conv_faces) ok = false;
  }
  if (!ok) return std::nullopt;
  return layer;
}

}  // namespace

ResponseOptions MetricSettings::ToOptions(const SimConfig& sim) const {
  ResponseOptions options;
  options.convention = convention;
  options.window = window.value_or(sim.metric_window);
  if (convention == ResponseConvention::kSupplied) {
    if (!supplied_final) {
      throw Error(ErrorKind::kBadInput,
                  "supplied convention needs a final value");
    }
    options.supplied_final = *supplied_final;
  }
  if (convention == ResponseConvention::kPlateau) {
    if (!plateau_threshold || !plateau_window) {
      throw Error(ErrorKind::kBadInput,
                  "plateau convention needs plateau_threshold and "
                  "plateau_window");
    }
  }
  options.plateau_threshold = plateau_threshold.value_or(0.0);
  options.plateau_window = plateau_window.value_or(0.0);
  return options;
}

RunConfig ParseConfig(std::string_view text, std::string_view origin) {
  Reader r(origin);
  r.Parse(text);
  if (!r.errors().empty()) {
    std::string joined;
    for (const auto& e : r.errors()) joined += (joined.empty() ? "" : "\n") + e;
    throw Error(ErrorKind::kBadInput, joined);
  }

  // Assembly.
  const auto kind = r.Text("assembly", "kind", true);
  if (!r.Has("assembly")) r.Fail(0, "missing section [assembly]");
  const bool bilayer = kind && *kind == "bilayer";
  if (kind && *kind != "single" && *kind != "bilayer") {
    r.Fail(r.Find("assembly", "kind")->line,
           fmt::format("assembly.kind must be 'single' or 'bilayer' (got "
                       "'{}')",
                       *kind));
  }
  if (!r.Has("silicone")) r.Fail(0, "missing section [silicone]");
  if (bilayer && !r.Has("lig")) {
    r.Fail(r.Find("assembly", "kind")->line,
           "bilayer assembly needs a [lig] section");
  }
  if (kind && *kind == "single" && r.Has("lig")) {
    r.Fail(r.SectionLine("lig"), "[lig] given for a single-layer assembly");
  }
  const auto silicone = ReadLayer(r, "silicone");
  std::optional<ThermalLayer> lig;
  if (r.Has("lig")) lig = ReadLayer(r, "lig");

  // Source.
  std::optional<HeatSource> source;
  if (!r.Has("source")) r.Fail(0, "missing section [source]");
  if (auto mode = r.Text("source", "mode", true)) {
    const int mode_line = r.Find("source", "mode")->line;
    if (*mode == "constant_flux") {
      for (const char* k : {"temperature", "emissivity"}) {
        if (const Entry* e = r.Find("source", k)) {
          r.Fail(e->line, fmt::format("source.{} is not used by "
                                      "constant_flux sources",
                                      k));
        }
      }
      if (auto power = r.Number("source", "power", Check::kNonNegative, true)) {
        source = HeatSource::ConstantFlux(*power);
      }
    } else if (*mode == "radiative") {
      if (const Entry* e = r.Find("source", "power")) {
        r.Fail(e->line, "source.power is not used by radiative sources");
      }
      auto temperature =
          r.Number("source", "temperature", Check::kPositive, true);
      auto emissivity = r.Number("source", "emissivity", Check::kOpenUnit, true);
      if (temperature && emissivity) {
        source = HeatSource::RadiativeBody(*temperature, *emissivity);
      }
    } else {
      r.Fail(mode_line, fmt::format("source.mode must be 'constant_flux' or "
                                    "'radiative' (got '{}')",
                                    *mode));
    }
  }

  if (!r.Has("environment")) r.Fail(0, "missing section [environment]");
  const auto ambient =
      r.Number("environment", "ambient", Check::kPositive, true);

  // Simulation.
  SimConfig sim;
  if (auto v = r.Number("simulation", "dt", Check::kPositive, false)) sim.dt = *v;
  if (auto v = r.Number("simulation", "duration", Check::kPositive, false)) {
    sim.duration = *v;
  }
  if (r.Find("simulation", "record_stride")) {
    if (auto v = r.Integer("simulation", "record_stride", 1, 1 << 30)) {
      sim.record_stride = *v;
    }
  }
  if (auto v =
          r.Number("simulation", "metric_window", Check::kPositive, false)) {
    sim.metric_window = *v;
  }
  if (sim.duration < sim.dt) {
    r.Fail(r.SectionLine("simulation"),
           fmt::format("simulation.duration {} is shorter than dt {}",
                       sim.duration, sim.dt));
  }

  // Schedule.
  std::vector<ScheduleInterval> intervals;
  if (!r.Has("schedule")) {
    intervals.push_back({0.0, sim.duration, 1.0});
  }
  for (const Entry& e : r.schedule()) {
    std::istringstream fields(e.value);
    std::vector<std::string> parts;
    for (std::string part; fields >> part;) parts.push_back(part);
    ScheduleInterval iv;
    std::optional<double> start, end, scale = 1.0;
    if (parts.size() == 2 || parts.size() == 3) {
      start = ToDouble(parts[0]);
      end = ToDouble(parts[1]);
      if (parts.size() == 3) scale = ToDouble(parts[2]);
    }
    if (!start || !end || !scale) {
      r.Fail(e.line, fmt::format("schedule.on expects '<start> <end> "
                                 "[scale]' (got '{}')",
                                 e.value));
      continue;
    }
    iv = {*start, *end, *scale};
    if (!(iv.start >= 0.0) || !(iv.end > iv.start) || !(iv.scale >= 0.0)) {
      r.Fail(e.line, fmt::format("schedule.on needs 0 <= start < end and "
                                 "scale >= 0 (got '{}')",
                                 e.value));
      continue;
    }
    if (!intervals.empty() && iv.start < intervals.back().end) {
      r.Fail(e.line, "schedule.on intervals must be sorted and "
                     "non-overlapping");
      continue;
    }
    intervals.push_back(iv);
  }

  // Metrics.
  MetricSettings metrics;
  if (auto c = r.Text("metrics", "convention", false)) {
    try {
      metrics.convention = ParseResponseConvention(*c);
    } catch (const Error& err) {
      r.Fail(r.Find("metrics", "convention")->line, err.what());
    }
  }
  metrics.window = r.Number("metrics", "window", Check::kPositive, false);
  metrics.supplied_final = r.Number("metrics", "final", Check::kAny, false);
  metrics.plateau_threshold =
      r.Number("metrics", "plateau_threshold", Check::kPositive, false);
  metrics.plateau_window =
      r.Number("metrics", "plateau_window", Check::kPositive, false);
  if (auto ch = r.Text("metrics", "channel", false)) {
    const int line = r.Find("metrics", "channel")->line;
    if (*ch == "silicone") {
      metrics.channel = Channel::kSilicone;
    } else if (*ch == "lig") {
      metrics.channel = Channel::kLig;
      if (kind && !bilayer) {
        r.Fail(line, "metrics.channel = lig needs a bilayer assembly");
      }
    } else {
      r.Fail(line, fmt::format("metrics.channel must be 'silicone' or 'lig' "
                               "(got '{}')",
                               *ch));
    }
  }
  if (metrics.convention == ResponseConvention::kSupplied &&
      !metrics.supplied_final) {
    r.Fail(r.SectionLine("metrics"),
           "metrics.convention = supplied needs metrics.final");
  }
  if (metrics.convention == ResponseConvention::kPlateau &&
      (!metrics.plateau_threshold || !metrics.plateau_window)) {
    r.Fail(r.SectionLine("metrics"),
           "metrics.convention = plateau needs plateau_threshold and "
           "plateau_window");
  }

  if (!r.errors().empty() || !silicone || !source || !ambient || !kind ||
      (bilayer && !lig)) {
    std::string joined;
    for (const auto& e : r.errors()) joined += (joined.empty() ? "" : "\n") + e;
    if (joined.empty()) joined = fmt::format("{}: invalid configuration", origin);
    throw Error(ErrorKind::kBadInput, joined);
  }

  try {
    WallAssembly assembly = bilayer ? WallAssembly::Bilayer(*silicone, *lig)
                                    : WallAssembly::SingleLayer(*silicone);
    RunConfig config{
        ModelInputs{std::move(assembly), *source, Environment(*ambient),
                    LightSchedule(std::move(intervals))},
        sim, metrics, {}, std::string(origin)};
    config.sim.Validate();
    config.warnings = config.model.assembly.Warnings();
    return config;
  } catch (const Error& err) {
    throw Error(ErrorKind::kBadInput, fmt::format("{}: {}", origin, err.what()));
  }
}

RunConfig LoadConfig(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorKind::kIo,
                fmt::format("cannot open config '{}'", path.string()));
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return ParseConfig(buffer.str(), path.string());
}

RunConfig LoadPreset(std::string_view name) {
  if (const char* dir = std::getenv("PHOTOTHERMAL_PRESET_DIR")) {
    const auto candidate =
        std::filesystem::path(dir) / (std::string(name) + ".ini");
    std::error_code ec;
    if (std::filesystem::is_regular_file(candidate, ec)) {
      return LoadConfig(candidate);
    }
  }
  return ParseConfig(BundledPresetText(name), fmt::format("preset:{}", name));
}

}  // namespace photothermal
