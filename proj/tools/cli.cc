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

#include "cli.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ostream.h>

#include "photothermal/calibrate.h"
#include "photothermal/config.h"
#include "photothermal/error.h"
#include "photothermal/metrics.h"
#include "photothermal/series_io.h"
#include "photothermal/simulate.h"
#include "photothermal/sweep.h"

namespace photothermal::cli {
namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::string> SplitOn(std::string_view text, char sep) {
  std::vector<std::string> parts;
  std::size_t pos = 0;
  while (true) {
    const auto at = text.find(sep, pos);
    parts.emplace_back(text.substr(
        pos, at == std::string_view::npos ? std::string_view::npos : at - pos));
    if (at == std::string_view::npos) break;
    pos = at + 1;
  }
  return parts;
}

double ParseNumber(std::string_view text, std::string_view what) {
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw UsageError(fmt::format("{}: '{}' is not a number", what, text));
  }
  return value;
}

std::vector<double> ParseList(std::string_view text, std::string_view what) {
  std::vector<double> values;
  for (const auto& part : SplitOn(text, ',')) {
    values.push_back(ParseNumber(part, what));
  }
  return values;
}

std::optional<Channel> ParseChannel(const std::string& text) {
  if (text == "auto") return std::nullopt;
  if (text == "silicone") return Channel::kSilicone;
  if (text == "lig") return Channel::kLig;
  throw UsageError(fmt::format(
      "--channel must be silicone, lig or auto (got '{}')", text));
}

struct ModelSource {
  std::string preset;
  std::string config;

  void Attach(CLI::App* app) {
    auto* p = app->add_option("--preset", preset,
                              "Bundled preset (table1_single, table1_bilayer)");
    auto* c = app->add_option("--config", config, "Run configuration file");
    p->excludes(c);
  }

  RunConfig Load(std::ostream& err) const {
    if (preset.empty() && config.empty()) {
      throw UsageError("one of --preset or --config is required");
    }
    RunConfig rc = preset.empty() ? LoadConfig(config) : LoadPreset(preset);
    for (const auto& w : rc.warnings) fmt::print(err, "warning: {}\n", w);
    return rc;
  }
};

// Writes to `path`, or to `out` when path is empty or "-".
template <typename F>
void Emit(const std::string& path, std::ostream& out, F&& write) {
  if (path.empty() || path == "-") {
    write(out);
    return;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) {
    throw Error(ErrorKind::kIo, fmt::format("cannot write '{}'", path));
  }
  write(file);
  file.flush();
  if (!file) throw Error(ErrorKind::kIo, fmt::format("write to '{}' failed", path));
}

std::string Fixed(double v) { return fmt::format("{:.6f}", v); }

void PrintTemperature(std::ostream& out, std::string_view key, double kelvin) {
  fmt::print(out, "{}_K={:.6f}\n{}_C={:.6f}\n", key, kelvin, key,
             ToCelsius(kelvin));
}

// ---------------------------------------------------------------- simulate

struct SimulateOptions {
  ModelSource model;
  std::optional<double> duration;
  std::optional<double> dt;
  std::optional<int> stride;
  std::vector<std::string> on;
  bool dark = false;
  std::string out;
};

int DoSimulate(const SimulateOptions& o, std::ostream& out, std::ostream& err) {
  RunConfig rc = o.model.Load(err);
  if (o.duration) rc.sim.duration = *o.duration;
  if (o.dt) rc.sim.dt = *o.dt;
  if (o.stride) rc.sim.record_stride = *o.stride;
  if (o.dark && !o.on.empty()) {
    throw UsageError("--dark and --on are mutually exclusive");
  }
  if (o.dark) rc.model.schedule = LightSchedule();
  if (!o.on.empty()) {
    std::vector<ScheduleInterval> intervals;
    for (const auto& spec : o.on) {
      const auto parts = SplitOn(spec, ':');
      if (parts.size() < 2 || parts.size() > 3) {
        throw UsageError(
            fmt::format("--on expects START:END[:SCALE] (got '{}')", spec));
      }
      intervals.push_back({ParseNumber(parts[0], "--on"),
                           ParseNumber(parts[1], "--on"),
                           parts.size() == 3 ? ParseNumber(parts[2], "--on")
                                             : 1.0});
    }
    rc.model.schedule = LightSchedule(std::move(intervals));
  }
  const Trajectory trajectory =
      Run(rc.model.assembly, rc.model.source, rc.model.schedule,
          rc.model.environment, rc.sim);
  Emit(o.out, out, [&](std::ostream& s) { FormatTrajectory(trajectory, s); });
  return kExitOk;
}

// ------------------------------------------------------------------ steady

struct SteadyOptions {
  ModelSource model;
  double scale = 1.0;
};

int DoSteady(const SteadyOptions& o, std::ostream& out, std::ostream& err) {
  const RunConfig rc = o.model.Load(err);
  const ThermalState s = SteadyState(rc.model.assembly, rc.model.source,
                                     rc.model.environment, o.scale);
  fmt::print(out, "wall={}\nscale={}\n",
             rc.model.assembly.is_bilayer() ? "bilayer" : "single", o.scale);
  PrintTemperature(out, "theta_s", s.silicone);
  if (s.lig) PrintTemperature(out, "theta_L", *s.lig);
  return kExitOk;
}

// ----------------------------------------------------------------- metrics

struct MetricsOptions {
  std::string file;
  std::string convention = "window-final";
  double window = 300.0;
  std::optional<double> final_value;
  std::optional<double> plateau_threshold;
  std::optional<double> plateau_window;
  std::string channel = "auto";
  double ambient = 298.0;
};

int DoMetrics(const MetricsOptions& o, std::ostream& out) {
  const MeasurementSeries series = ReadSeries(o.file, ParseChannel(o.channel));
  ResponseOptions options;
  options.convention = ParseResponseConvention(o.convention);
  options.window = o.window;
  if (options.convention == ResponseConvention::kSupplied) {
    if (!o.final_value) throw UsageError("--convention supplied needs --final");
    options.supplied_final = *o.final_value;
  }
  if (options.convention == ResponseConvention::kPlateau &&
      (!o.plateau_threshold || !o.plateau_window)) {
    throw UsageError(
        "--convention plateau needs --plateau-threshold and --plateau-window");
  }
  options.plateau_threshold = o.plateau_threshold.value_or(0.0);
  options.plateau_window = o.plateau_window.value_or(0.0);

  const ResponseReport report = ResponseTime63(series, options);
  std::string text;
  text += fmt::format("series={}\nunit={}\n", series.label(),
                      SeriesUnitName(series.unit()));
  text += fmt::format("convention={}\n", ResponseConventionName(report.convention));
  text += fmt::format("baseline={}\nfinal={}\n", Fixed(report.baseline),
                      Fixed(report.final_value));
  text += fmt::format("t63_s={:.3f}\n", report.t63);
  text += fmt::format("peak={}\npeak_time_s={:.3f}\n", Fixed(report.peak_value),
                      report.peak_time);

  if (o.plateau_window) {
    const Plateau plateau = PlateauValue(
        series, o.plateau_threshold.value_or(1.0), *o.plateau_window);
    text += fmt::format("plateau={}\nplateau_time_s={:.3f}\n",
                        Fixed(plateau.value), plateau.reach_time);
  }

  // Newton cooling over the segment from the peak onwards, when it decays.
  const auto points = series.points();
  const auto peak = std::max_element(
      points.begin(), points.end(),
      [](const SeriesPoint& a, const SeriesPoint& b) { return a.value < b.value; });
  std::vector<SeriesPoint> decay(peak, points.end());
  const bool can_fit =
      decay.size() >= 2 && decay.back().value < decay.front().value &&
      std::all_of(decay.begin(), decay.end(),
                  [&](const SeriesPoint& p) { return p.value > o.ambient; });
  if (can_fit) {
    const CoolingFit fit =
        FitCooling(MeasurementSeries(std::move(decay), series.unit()), o.ambient);
    text += fmt::format("cooling_tau_s={:.3f}\ncooling_r2={:.6f}\n", fit.tau,
                        fit.r_squared);
  } else {
    text += "cooling_tau_s=NA\ncooling_r2=NA\n";
  }
  out << text;
  return kExitOk;
}

// --------------------------------------------------------------- calibrate

struct CalibrateOptions {
  ModelSource model;
  std::string target;
  std::vector<std::string> free;
  std::string channel = "auto";
  int max_iterations = 500;
};

int DoCalibrate(const CalibrateOptions& o, std::ostream& out,
                std::ostream& err) {
  const RunConfig rc = o.model.Load(err);
  std::vector<ParamSpec> specs;
  for (const auto& f : o.free) {
    const auto parts = SplitOn(f, ':');
    if (parts.size() != 4) {
      throw UsageError(
          fmt::format("--free expects NAME:LOWER:UPPER:INITIAL (got '{}')", f));
    }
    specs.push_back({ParseModelParameter(parts[0]),
                     ParseNumber(parts[1], "--free"),
                     ParseNumber(parts[2], "--free"),
                     ParseNumber(parts[3], "--free")});
  }
  MeasurementSeries target = ReadSeries(o.target);
  if (target.unit() != SeriesUnit::kKelvin) {
    throw Error(ErrorKind::kBadInput,
                fmt::format("calibration target '{}' must be a temperature "
                            "series (K or C)",
                            o.target));
  }
  const auto channel = ParseChannel(o.channel);
  CalibrationProblem problem{std::move(target), std::move(specs), rc.model,
                             rc.sim, channel.value_or(rc.channel())};
  NelderMeadOptions nm;
  nm.max_iterations = o.max_iterations;
  const CalibrationResult result = Fit(problem, nm);

  for (std::size_t i = 0; i < problem.free.size(); ++i) {
    fmt::print(out, "{}={:.8g}\n", ModelParameterName(problem.free[i].parameter),
               result.fitted[i]);
  }
  fmt::print(out, "channel={}\nsse_K2={:.6e}\nrmse_K={:.6f}\niterations={}\n"
                  "converged={}\n",
             ChannelName(problem.channel), result.sse, result.rmse,
             result.iterations, result.converged ? "true" : "false");
  if (!result.converged) {
    fmt::print(err, "warning: iteration cap reached before convergence\n");
  }
  return kExitOk;
}

// ------------------------------------------------------------------- sweep

struct SweepOptions {
  ModelSource model;
  std::string param;
  std::string values;
  std::string distances;
  double d_ref = 0.05;
  double exponent = 1.0;
  std::string outputs = "t63,peak,steady";
  int threads = 1;
  std::string out;
};

int DoSweep(const SweepOptions& o, std::ostream& out, std::ostream& err) {
  const RunConfig rc = o.model.Load(err);
  SweepSpec spec;
  if (o.distances.empty() == o.values.empty()) {
    throw UsageError("give exactly one of --values or --distances");
  }
  if (!o.distances.empty()) {
    spec.parameter = "distance";
    spec.values = ParseList(o.distances, "--distances");
    spec.distance = DistanceScaling{o.d_ref, o.exponent};
  } else {
    if (o.param.empty()) throw UsageError("--values needs --param");
    spec.parameter = o.param;
    spec.values = ParseList(o.values, "--values");
  }
  spec.outputs = ParseSweepOutputs(o.outputs);
  const SweepResult result = RunSweep(rc, spec, o.threads);
  Emit(o.out, out, [&](std::ostream& s) { FormatSweepCsv(result, spec, s); });
  if (!result.all_ok()) {
    for (const auto& row : result.rows) {
      if (!row.ok) fmt::print(err, "point {} failed: {}\n", row.point, row.error);
    }
    return kExitPartialSweep;
  }
  return kExitOk;
}

// --------------------------------------------------------- analyze-bending

struct BendingOptions {
  std::string file;
  double plateau_threshold = 1.0;
  double plateau_window = 0.0;
  double cycle_fraction = 0.25;
  std::optional<double> reference;
  std::string out;
};

int DoAnalyzeBending(const BendingOptions& o, std::ostream& out) {
  const MeasurementSeries series = ReadSeries(o.file);
  const auto points = series.points();
  const double initial = points.front().value;

  // First cycle: from the first departure from the initial value until the
  // response falls back below the cycle threshold.
  const std::vector<SeriesPoint> peaks =
      DetectCyclePeaks(series, o.cycle_fraction);
  double global = initial;
  for (const auto& p : points) global = std::max(global, p.value);
  const double cycle_level = initial + o.cycle_fraction * (global - initial);
  double departure = series.start_time();
  for (const auto& p : points) {
    if (std::abs(p.value - initial) >= o.plateau_threshold) {
      departure = p.time;
      break;
    }
  }
  double first_end = series.end_time();
  bool above = false;
  for (const auto& p : points) {
    if (p.value >= cycle_level) {
      above = true;
    } else if (above) {
      first_end = p.time;
      break;
    }
  }

  const Plateau plateau =
      PlateauValue(series.Slice(departure, first_end), o.plateau_threshold,
                   o.plateau_window);
  ResponseOptions options;
  options.convention = ResponseConvention::kSupplied;
  options.supplied_final = plateau.value;
  const ResponseReport report =
      ResponseTime63(series.Slice(series.start_time(), first_end), options);

  std::vector<double> peak_values;
  for (const auto& p : peaks) peak_values.push_back(p.value);
  const std::vector<double> ratios = CycleDegradation(peak_values);
  const MeasurementSeries normalized = NormalizeCurve(series, plateau.value);

  std::string text;
  text += fmt::format("unit={}\n", SeriesUnitName(series.unit()));
  text += fmt::format("plateau={}\nplateau_time_s={:.3f}\n",
                      Fixed(plateau.value), plateau.reach_time);
  text += fmt::format("t63_s={:.3f}\n", report.t63);
  text += fmt::format("cycles={}\n", peaks.size());
  std::vector<std::string> peak_text, ratio_text;
  for (double v : peak_values) peak_text.push_back(Fixed(v));
  for (double r : ratios) ratio_text.push_back(Fixed(r));
  text += fmt::format("cycle_peaks={}\ncycle_ratios={}\n",
                      fmt::join(peak_text, ","), fmt::join(ratio_text, ","));
  if (o.reference) {
    text += fmt::format("angular_change_ratio={}\n",
                        Fixed(AngularChangeRatio(series, *o.reference)));
  }
  if (!o.out.empty()) {
    Emit(o.out, out, [&](std::ostream& s) { FormatSeries(normalized, s); });
    text += fmt::format("normalized_csv={}\n", o.out);
  }
  out << text;
  return kExitOk;
}

int ExitFor(ErrorKind kind) {
  return kind == ErrorKind::kNumericalFailure ? kExitNumerical : kExitBadInput;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Photothermal actuator-wall heat-transfer toolkit", "photothermal"};
  app.require_subcommand(1);

  SimulateOptions sim;
  auto* simulate = app.add_subcommand("simulate", "Integrate and write a trajectory CSV");
  sim.model.Attach(simulate);
  simulate->add_option("--duration", sim.duration, "Simulated span, s");
  simulate->add_option("--dt", sim.dt, "Time step, s");
  simulate->add_option("--stride", sim.stride, "Keep every Nth step");
  simulate->add_option("--on", sim.on, "Light interval START:END[:SCALE] (repeatable; replaces the schedule)");
  simulate->add_flag("--dark", sim.dark, "Light never on");
  simulate->add_option("--out", sim.out, "Output CSV (default stdout)");

  SteadyOptions steady;
  auto* steady_cmd = app.add_subcommand("steady", "Print steady-state temperatures");
  steady.model.Attach(steady_cmd);
  steady_cmd->add_option("--scale", steady.scale, "Drive scale")->check(CLI::NonNegativeNumber);

  MetricsOptions met;
  auto* metrics = app.add_subcommand("metrics", "Response metrics of a series or trajectory CSV");
  metrics->add_option("file", met.file, "CSV file")->required();
  metrics->add_option("--convention", met.convention, "window-final | plateau | supplied");
  metrics->add_option("--window", met.window, "Window for window-final, s");
  metrics->add_option("--final", met.final_value, "Final value for supplied");
  metrics->add_option("--plateau-threshold", met.plateau_threshold, "Plateau range threshold");
  metrics->add_option("--plateau-window", met.plateau_window, "Plateau window, s");
  metrics->add_option("--channel", met.channel, "silicone | lig | auto (trajectory files)");
  metrics->add_option("--ambient", met.ambient, "Ambient for the cooling fit, K");

  CalibrateOptions cal;
  auto* calibrate = app.add_subcommand("calibrate", "Fit model parameters to a temperature series");
  cal.model.Attach(calibrate);
  calibrate->add_option("--target", cal.target, "Measured series CSV")->required();
  calibrate->add_option("--free", cal.free, "NAME:LOWER:UPPER:INITIAL (repeatable)")->required();
  calibrate->add_option("--channel", cal.channel, "silicone | lig | auto");
  calibrate->add_option("--max-iterations", cal.max_iterations, "Simplex iteration cap")->check(CLI::PositiveNumber);

  SweepOptions sw;
  auto* sweep = app.add_subcommand("sweep", "Sweep one parameter or the source distance");
  sw.model.Attach(sweep);
  sweep->add_option("--param", sw.param, "alpha_s | alpha_L | h_se | h_Le | Q_h | scale");
  sweep->add_option("--values", sw.values, "Comma-separated values");
  sweep->add_option("--distances", sw.distances, "Comma-separated distances, m");
  sweep->add_option("--d-ref", sw.d_ref, "Reference distance for scale 1, m");
  sweep->add_option("--exponent", sw.exponent, "Distance exponent p in (d_ref/d)^p");
  sweep->add_option("--outputs", sw.outputs, "Subset of t63,peak,steady,plateau");
  sweep->add_option("--threads", sw.threads, "Worker threads")->check(CLI::PositiveNumber);
  sweep->add_option("--out", sw.out, "Output CSV (default stdout)");

  BendingOptions bend;
  auto* bending = app.add_subcommand("analyze-bending", "Normalize and summarize a bending-angle series");
  bending->add_option("file", bend.file, "CSV with '# unit: deg'")->required();
  bending->add_option("--plateau-threshold", bend.plateau_threshold, "Plateau range threshold, deg");
  bending->add_option("--plateau-window", bend.plateau_window, "Plateau window, s")->required();
  bending->add_option("--cycle-fraction", bend.cycle_fraction, "Cycle detection level as a fraction of the largest excursion");
  bending->add_option("--reference", bend.reference, "Reference angle for the angular change ratio");
  bending->add_option("--out", bend.out, "Normalized curve CSV");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    fmt::print(err, "error: {}\n\n{}", e.what(), app.help());
    return kExitUsage;
  }

  try {
    if (*simulate) return DoSimulate(sim, out, err);
    if (*steady_cmd) return DoSteady(steady, out, err);
    if (*metrics) return DoMetrics(met, out);
    if (*calibrate) return DoCalibrate(cal, out, err);
    if (*sweep) return DoSweep(sw, out, err);
    if (*bending) return DoAnalyzeBending(bend, out);
  } catch (const UsageError& e) {
    fmt::print(err, "error: {}\n", e.what());
    return kExitUsage;
  } catch (const Error& e) {
    fmt::print(err, "error ({}): {}\n", ErrorKindName(e.kind()), e.what());
    return ExitFor(e.kind());
  }
  return kExitUsage;
}

}  // namespace photothermal::cli
