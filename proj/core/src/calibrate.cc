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

#include "photothermal/calibrate.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <fmt/format.h>

#include "photothermal/error.h"

namespace photothermal {
namespace {

using Point = std::vector<double>;

ModelInputs Apply(const CalibrationProblem& problem,
                  std::span<const double> candidate) {
  ModelInputs inputs = problem.model;
  for (std::size_t i = 0; i < problem.free.size(); ++i) {
    inputs = WithParameter(inputs, problem.free[i].parameter, candidate[i]);
  }
  return inputs;
}

struct Vertex {
  Point u;  // normalized box coordinates
  double value;
};

}  // namespace

void CalibrationProblem::Validate() const {
  if (free.empty()) {
    throw Error(ErrorKind::kInvalidArgument,
                "calibration needs at least one free parameter");
  }
  config.Validate();
  for (std::size_t i = 0; i < free.size(); ++i) {
    const ParamSpec& spec = free[i];
    const auto name = ModelParameterName(spec.parameter);
    if (!(spec.lower < spec.upper) || !std::isfinite(spec.lower) ||
        !std::isfinite(spec.upper)) {
      throw Error(ErrorKind::kInvalidArgument,
                  fmt::format("{}: degenerate bounds [{}, {}]", name,
                              spec.lower, spec.upper));
    }
    if (!(spec.initial >= spec.lower && spec.initial <= spec.upper)) {
      throw Error(ErrorKind::kInvalidArgument,
                  fmt::format("{}: initial guess {} outside [{}, {}]", name,
                              spec.initial, spec.lower, spec.upper));
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (free[j].parameter == spec.parameter) {
        throw Error(ErrorKind::kInvalidArgument,
                    fmt::format("{} listed twice", name));
      }
    }
    // Both corners must describe a valid model.
    WithParameter(model, spec.parameter, spec.lower);
    WithParameter(model, spec.parameter, spec.upper);
  }
  if (target.start_time() < 0.0 ||
      target.end_time() > config.duration * (1.0 + 1e-12)) {
    throw Error(ErrorKind::kInvalidArgument,
                fmt::format("target span [{}, {}] s is not covered by the "
                            "simulated span [0, {}] s",
                            target.start_time(), target.end_time(),
                            config.duration));
  }
  if (channel == Channel::kLig && !model.assembly.is_bilayer()) {
    throw Error(ErrorKind::kKindMismatch,
                "LIG channel requested for a single-layer wall");
  }
}

double Objective(const CalibrationProblem& problem,
                 std::span<const double> candidate) {
  if (candidate.size() != problem.free.size()) {
    throw Error(ErrorKind::kInvalidArgument,
                fmt::format("expected {} parameters, got {}",
                            problem.free.size(), candidate.size()));
  }
  for (std::size_t i = 0; i < candidate.size(); ++i) {
    const ParamSpec& spec = problem.free[i];
    if (!(candidate[i] >= spec.lower && candidate[i] <= spec.upper)) {
      throw Error(ErrorKind::kInvalidArgument,
                  fmt::format("{}={} outside [{}, {}]",
                              ModelParameterName(spec.parameter), candidate[i],
                              spec.lower, spec.upper));
    }
  }
  const ModelInputs inputs = Apply(problem, candidate);
  SimConfig config = problem.config;
  config.record_stride = 1;
  // Nothing past the last measurement affects the loss.
  config.duration = std::clamp(problem.target.end_time(), config.dt,
                               problem.config.duration);

  const Trajectory trajectory =
      Run(inputs.assembly, inputs.source, inputs.schedule, inputs.environment,
          config);
  const double last = trajectory.back().time;
  double sse = 0.0;
  for (const SeriesPoint& p : problem.target.points()) {
    const double sim =
        trajectory.ValueAt(std::min(p.time, last), problem.channel);
    sse += (sim - p.value) * (sim - p.value);
  }
  return sse;
}

NelderMeadResult MinimizeNelderMead(
    const std::function<double(std::span<const double>)>& f,
    std::span<const double> start, std::span<const double> lower,
    std::span<const double> upper, const NelderMeadOptions& options) {
  constexpr double kReflect = 1.0;
  constexpr double kExpand = 2.0;
  constexpr double kContract = 0.5;
  constexpr double kShrink = 0.5;
  constexpr double kInitialStep = 0.05;

  const std::size_t n = start.size();
  if (n == 0 || lower.size() != n || upper.size() != n) {
    throw Error(ErrorKind::kInvalidArgument,
                "start and bounds must have the same non-zero dimension");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!(lower[i] < upper[i])) {
      throw Error(ErrorKind::kInvalidArgument,
                  fmt::format("degenerate bounds on axis {}", i));
    }
  }

  auto to_x = [&](const Point& u) {
    Point x(n);
    for (std::size_t i = 0; i < n; ++i) {
      x[i] = lower[i] + std::clamp(u[i], 0.0, 1.0) * (upper[i] - lower[i]);
    }
    return x;
  };
  auto evaluate = [&](const Point& u) {
    double outside = 0.0;
    for (double ui : u) {
      const double d = ui - std::clamp(ui, 0.0, 1.0);
      outside += d * d;
    }
    const double value = f(to_x(u));
    return value + (1.0 + std::abs(value)) * outside;
  };

  std::vector<Vertex> simplex;
  simplex.reserve(n + 1);
  Point u0(n);
  for (std::size_t i = 0; i < n; ++i) {
    u0[i] = (start[i] - lower[i]) / (upper[i] - lower[i]);
  }
  simplex.push_back({u0, evaluate(u0)});
  for (std::size_t i = 0; i < n; ++i) {
    Point u = u0;
    u[i] += (u[i] + kInitialStep <= 1.0) ? kInitialStep : -kInitialStep;
    simplex.push_back({u, evaluate(u)});
  }

  auto by_value = [](const Vertex& a, const Vertex& b) {
    return a.value < b.value;
  };

  NelderMeadResult result;
  for (int iter = 0;; ++iter) {
    std::stable_sort(simplex.begin(), simplex.end(), by_value);
    const double best = simplex.front().value;
    const double worst = simplex.back().value;
    const double spread = worst - best;
    double diameter = 0.0;
    for (std::size_t v = 1; v <= n; ++v) {
      for (std::size_t i = 0; i < n; ++i) {
        diameter = std::max(diameter,
                            std::abs(simplex[v].u[i] - simplex[0].u[i]));
      }
    }
    const bool converged =
        spread <= options.relative_tolerance *
                      std::max(std::abs(best), std::abs(worst)) ||
        spread <= options.absolute_tolerance ||
        diameter <= options.simplex_tolerance;
    if (converged || iter >= options.max_iterations) {
      result.iterations = iter;
      result.converged = converged;
      break;
    }

    Point centroid(n, 0.0);
    for (std::size_t v = 0; v < n; ++v) {
      for (std::size_t i = 0; i < n; ++i) centroid[i] += simplex[v].u[i];
    }
    for (double& c : centroid) c /= static_cast<double>(n);

    auto along = [&](double coeff, const Point& from) {
      Point p(n);
      for (std::size_t i = 0; i < n; ++i) {
        p[i] = centroid[i] + coeff * (from[i] - centroid[i]);
      }
      return p;
    };

    Vertex& worst_vertex = simplex.back();
    const double second_worst = simplex[n - 1].value;
    Vertex reflected{along(-kReflect, worst_vertex.u), 0.0};
    reflected.value = evaluate(reflected.u);

    if (reflected.value < best) {
      Vertex expanded{along(-kReflect * kExpand, worst_vertex.u), 0.0};
      expanded.value = evaluate(expanded.u);
      worst_vertex = expanded.value < reflected.value ? expanded : reflected;
      continue;
    }
    if (reflected.value < second_worst) {
      worst_vertex = reflected;
      continue;
    }
    if (reflected.value < worst) {
      Vertex outside{along(-kReflect * kContract, worst_vertex.u), 0.0};
      outside.value = evaluate(outside.u);
      if (outside.value <= reflected.value) {
        worst_vertex = outside;
        continue;
      }
    } else {
      Vertex inside{along(kContract, worst_vertex.u), 0.0};
      inside.value = evaluate(inside.u);
      if (inside.value < worst) {
        worst_vertex = inside;
        continue;
      }
    }
    const Point& anchor = simplex.front().u;
    for (std::size_t v = 1; v <= n; ++v) {
      for (std::size_t i = 0; i < n; ++i) {
        simplex[v].u[i] = anchor[i] + kShrink * (simplex[v].u[i] - anchor[i]);
      }
      simplex[v].value = evaluate(simplex[v].u);
    }
  }

  result.x = to_x(simplex.front().u);
  result.value = f(result.x);
  return result;
}

CalibrationResult Fit(const CalibrationProblem& problem,
                      const NelderMeadOptions& options) {
  problem.Validate();
  const std::size_t n = problem.free.size();
  std::vector<double> start(n), lower(n), upper(n);
  for (std::size_t i = 0; i < n; ++i) {
    start[i] = problem.free[i].initial;
    lower[i] = problem.free[i].lower;
    upper[i] = problem.free[i].upper;
  }
  const auto objective = [&](std::span<const double> x) {
    return Objective(problem, x);
  };
  NelderMeadResult nm =
      MinimizeNelderMead(objective, start, lower, upper, options);

  CalibrationResult result;
  result.fitted = std::move(nm.x);
  result.sse = nm.value;
  result.rmse =
      std::sqrt(nm.value / static_cast<double>(problem.target.size()));
  result.iterations = nm.iterations;
  result.converged = nm.converged;
  return result;
}

}  // namespace photothermal
