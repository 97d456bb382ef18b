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

#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "photothermal/error.h"
#include "test_support.h"

namespace photothermal {
namespace {

using testing::kAmbient;
using testing::kSingleRise;
using testing::kSingleTau;
using testing::SingleLayerAnalytic;

ErrorKind KindOf(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no Error thrown";
  return ErrorKind::kIo;
}

MeasurementSeries Sampled(double (*f)(double), double step, double end,
                          SeriesUnit unit = SeriesUnit::kKelvin) {
  std::vector<SeriesPoint> pts;
  const auto n = static_cast<int>(std::lround(end / step));
  for (int i = 0; i <= n; ++i) {
    const double t = i * step;
    pts.push_back({t, f(t)});
  }
  return MeasurementSeries(std::move(pts), unit);
}

MeasurementSeries FromValues(std::vector<double> values, double step = 1.0,
                             SeriesUnit unit = SeriesUnit::kDegreesOfBend) {
  std::vector<SeriesPoint> pts;
  for (std::size_t i = 0; i < values.size(); ++i) {
    pts.push_back({step * static_cast<double>(i), values[i]});
  }
  return MeasurementSeries(std::move(pts), unit);
}

TEST(ResponseTimeTest, WindowFinalOnAnalyticCurve) {
  const MeasurementSeries s = Sampled(SingleLayerAnalytic, 0.1, 300);
  ResponseOptions opts;
  opts.window = 300;
  const ResponseReport r = ResponseTime63(s, opts);
  const double expected =
      -kSingleTau * std::log(1 - 0.632 * (1 - std::exp(-300 / kSingleTau)));
  EXPECT_NEAR(r.t63, expected, 0.01);
  EXPECT_NEAR(r.t63, 100.4, 0.2);
  EXPECT_EQ(r.baseline, kAmbient);
  EXPECT_NEAR(r.final_value, SingleLayerAnalytic(300), 1e-9);
  EXPECT_NEAR(r.peak_time, 300, 1e-9);
}

TEST(ResponseTimeTest, SuppliedAsymptoteGivesTimeConstant) {
  const MeasurementSeries s = Sampled(SingleLayerAnalytic, 0.1, 600);
  ResponseOptions opts;
  opts.convention = ResponseConvention::kSupplied;
  opts.supplied_final = kAmbient + kSingleRise;
  const ResponseReport r = ResponseTime63(s, opts);
  // 0.632 is a rounding of 1 - 1/e, so the crossing sits 0.0057 tau early.
  const double exact = -kSingleTau * std::log(1 - 0.632);
  EXPECT_NEAR(r.t63, exact, 0.01);
  EXPECT_NEAR(r.t63, 113.75, 0.2);
}

TEST(ResponseTimeTest, FallingResponse) {
  const MeasurementSeries s = FromValues({10, 8, 6, 4, 2, 0}, 1.0,
                                         SeriesUnit::kKelvin);
  ResponseOptions opts;
  opts.convention = ResponseConvention::kSupplied;
  opts.supplied_final = 0;
  // level = 10 - 6.32 = 3.68, between t=3 (4) and t=4 (2)
  EXPECT_NEAR(ResponseTime63(s, opts).t63, 3.16, 1e-12);
}

TEST(ResponseTimeTest, FlatAndUnreachedSeries) {
  const MeasurementSeries flat = FromValues({5, 5, 5, 5});
  ResponseOptions opts;
  opts.window = 3;
  EXPECT_EQ(KindOf([&] { ResponseTime63(flat, opts); }),
            ErrorKind::kNoCrossing);
  ResponseOptions supplied;
  supplied.convention = ResponseConvention::kSupplied;
  supplied.supplied_final = 100;
  EXPECT_EQ(KindOf([&] { ResponseTime63(FromValues({0, 1, 2}), supplied); }),
            ErrorKind::kNoCrossing);
}

TEST(ResponseTimeTest, WindowBeyondSpanIsRejected) {
  ResponseOptions opts;
  opts.window = 10;
  EXPECT_EQ(KindOf([&] { ResponseTime63(FromValues({0, 1, 2}), opts); }),
            ErrorKind::kInvalidArgument);
}

TEST(ResponseTimeTest, PlateauConvention) {
  const MeasurementSeries s = FromValues({0, 5, 9, 10, 10, 10, 10});
  ResponseOptions opts;
  opts.convention = ResponseConvention::kPlateau;
  opts.plateau_threshold = 0.5;
  opts.plateau_window = 3;
  const ResponseReport r = ResponseTime63(s, opts);
  EXPECT_EQ(r.final_value, 10);
  EXPECT_NEAR(r.t63, 1 + 1.32 / 4, 1e-12);
}

TEST(ResponseTimeTest, ConventionNames) {
  EXPECT_EQ(ParseResponseConvention("window-final"),
            ResponseConvention::kWindowFinal);
  EXPECT_EQ(ParseResponseConvention("window_final"),
            ResponseConvention::kWindowFinal);
  EXPECT_EQ(ParseResponseConvention("plateau"), ResponseConvention::kPlateau);
  EXPECT_EQ(ParseResponseConvention("supplied"), ResponseConvention::kSupplied);
  EXPECT_EQ(KindOf([] { ParseResponseConvention("final"); }),
            ErrorKind::kBadInput);
  for (auto c : {ResponseConvention::kWindowFinal, ResponseConvention::kPlateau,
                 ResponseConvention::kSupplied}) {
    EXPECT_EQ(ParseResponseConvention(ResponseConventionName(c)), c);
  }
}

TEST(PlateauTest, ConstantSeries) {
  const MeasurementSeries s = FromValues(std::vector<double>(40, 51.7));
  const Plateau p = PlateauValue(s, 1.0, 20);
  EXPECT_NEAR(p.value, 51.7, 1e-12);
  EXPECT_EQ(p.reach_time, 0);
}

TEST(PlateauTest, ExponentialTailMatchesAnalyticBound) {
  const MeasurementSeries s = Sampled(SingleLayerAnalytic, 0.1, 800);
  const double threshold = 0.1;
  const double window = 30;
  const Plateau p = PlateauValue(s, threshold, window);
  // Range over [t, t + w] of a rising exponential is
  // R e^{-t/tau} (1 - e^{-w/tau}); the plateau starts where it drops below
  // the threshold.
  const double t_star =
      kSingleTau *
      std::log(kSingleRise * (1 - std::exp(-window / kSingleTau)) / threshold);
  EXPECT_GE(p.reach_time, t_star - 1e-9);
  EXPECT_LE(p.reach_time, t_star + 0.1 + 1e-9);
  // Window mean of the analytic curve over [t*, t* + w].
  const double mean =
      kAmbient + kSingleRise * (1 - std::exp(-p.reach_time / kSingleTau) *
                                        kSingleTau / window *
                                        (1 - std::exp(-window / kSingleTau)));
  EXPECT_NEAR(p.value, mean, 1e-3);
  EXPECT_LT(kAmbient + kSingleRise - p.value, 0.5);
}

TEST(PlateauTest, LongerWindowNeverReachesEarlier) {
  // Bending-like rise with a slow creep afterwards.
  auto bend = [](double t) { return 50 * (1 - std::exp(-t / 40)) + 0.01 * t; };
  std::vector<SeriesPoint> pts;
  for (int i = 0; i <= 600; ++i) pts.push_back({double(i), bend(i)});
  const MeasurementSeries s(pts, SeriesUnit::kDegreesOfBend);
  const Plateau p20 = PlateauValue(s, 1.0, 20);
  const Plateau p30 = PlateauValue(s, 1.0, 30);
  EXPECT_GE(p30.reach_time, p20.reach_time);
}

TEST(PlateauTest, Errors) {
  const MeasurementSeries ramp = FromValues({0, 10, 20, 30, 40});
  EXPECT_EQ(KindOf([&] { PlateauValue(ramp, 1.0, 2); }),
            ErrorKind::kNoPlateau);
  EXPECT_EQ(KindOf([&] { PlateauValue(ramp, 1.0, 10); }),
            ErrorKind::kNoPlateau);
  EXPECT_EQ(KindOf([&] { PlateauValue(ramp, 0.0, 2); }),
            ErrorKind::kInvalidArgument);
}

TEST(NormalizeTest, AffineMap) {
  const MeasurementSeries s = FromValues({0, 25.85, 51.7});
  const MeasurementSeries n = NormalizeCurve(s, 51.7);
  EXPECT_EQ(n.unit(), SeriesUnit::kDimensionless);
  EXPECT_DOUBLE_EQ(n.points()[0].value, 0.0);
  EXPECT_DOUBLE_EQ(n.points()[1].value, 0.5);
  EXPECT_DOUBLE_EQ(n.points()[2].value, 1.0);

  const MeasurementSeries unit =
      FromValues({0, 0.3, 1.0}, 1.0, SeriesUnit::kDimensionless);
  const MeasurementSeries same = NormalizeCurve(unit, 1.0);
  for (std::size_t i = 0; i < unit.size(); ++i) {
    EXPECT_EQ(same.points()[i].value, unit.points()[i].value);
  }
}

TEST(NormalizeTest, RoundTripAndDegenerate) {
  const MeasurementSeries s = FromValues({3, 20, 48, 51.7});
  const MeasurementSeries back =
      DenormalizeCurve(NormalizeCurve(s, 51.7), 3, 51.7,
                       SeriesUnit::kDegreesOfBend);
  EXPECT_EQ(back.unit(), SeriesUnit::kDegreesOfBend);
  for (std::size_t i = 0; i < s.size(); ++i) {
    EXPECT_NEAR(back.points()[i].value, s.points()[i].value, 1e-12);
  }
  EXPECT_EQ(KindOf([&] { NormalizeCurve(s, 3); }), ErrorKind::kDegenerate);
}

TEST(CoolingFitTest, ExactExponential) {
  const MeasurementSeries s = Sampled(
      [](double t) { return kAmbient + 20 * std::exp(-t / kSingleTau); }, 0.5,
      300);
  const CoolingFit fit = FitCooling(s, kAmbient);
  EXPECT_NEAR(fit.tau, 113.75, 0.01);
  EXPECT_GT(fit.r_squared, 0.9999);
}

TEST(CoolingFitTest, TwoPointsAreExact) {
  const MeasurementSeries s({{0, 310}, {50, 304}});
  const CoolingFit fit = FitCooling(s, 298);
  EXPECT_NEAR(fit.tau, 50 / std::log(2.0), 1e-9);
  EXPECT_EQ(fit.r_squared, 1.0);
}

TEST(CoolingFitTest, Errors) {
  EXPECT_EQ(KindOf([] { FitCooling(MeasurementSeries({{0, 310}, {1, 298}}),
                                   298); }),
            ErrorKind::kInvalidArgument);
  EXPECT_EQ(KindOf([] { FitCooling(MeasurementSeries({{0, 300}, {1, 305}}),
                                   298); }),
            ErrorKind::kDegenerate);
}

TEST(CycleDegradationTest, PaperPeaks) {
  const std::vector<double> peaks = {51.7, 51.6, 50.7, 46.74};
  const std::vector<double> r = CycleDegradation(peaks);
  ASSERT_EQ(r.size(), 4u);
  EXPECT_EQ(r[0], 1.0);
  EXPECT_NEAR(r[1], 0.998, 5e-4);
  EXPECT_NEAR(r[2], 0.981, 5e-4);
  EXPECT_NEAR(r[3], 0.904, 5e-4);
}

TEST(CycleDegradationTest, SingletonAndErrors) {
  const std::vector<double> one = {7.0};
  EXPECT_EQ(CycleDegradation(one), std::vector<double>{1.0});
  const std::vector<double> bad = {0.0, 1.0};
  EXPECT_EQ(KindOf([&] { CycleDegradation(bad); }), ErrorKind::kDegenerate);
  EXPECT_EQ(KindOf([] { CycleDegradation({}); }), ErrorKind::kInvalidArgument);
}

TEST(AngularChangeRatioTest, Examples) {
  EXPECT_EQ(AngularChangeRatio(FromValues({0, 51.7}), 51.7), 1.0);
  EXPECT_EQ(AngularChangeRatio(FromValues({0, 25.85}), 51.7), 0.5);
  EXPECT_LT(AngularChangeRatio(FromValues({0, 30}), 51.7),
            AngularChangeRatio(FromValues({0, 31}), 51.7));
  EXPECT_EQ(KindOf([] { AngularChangeRatio(FromValues({0, 1}), 0); }),
            ErrorKind::kDegenerate);
}

TEST(CyclePeaksTest, ThreeCycles) {
  std::vector<double> v;
  for (double peak : {51.7, 51.6, 50.7}) {
    for (int i = 0; i <= 10; ++i) v.push_back(peak * i / 10.0);
    for (int i = 9; i >= 0; --i) v.push_back(peak * i / 10.0);
  }
  const std::vector<SeriesPoint> peaks = DetectCyclePeaks(FromValues(v));
  ASSERT_EQ(peaks.size(), 3u);
  EXPECT_EQ(peaks[0].value, 51.7);
  EXPECT_EQ(peaks[1].value, 51.6);
  EXPECT_EQ(peaks[2].value, 50.7);
  EXPECT_EQ(peaks[0].time, 10);
  EXPECT_EQ(peaks[1].time, 31);
}

TEST(CyclePeaksTest, Errors) {
  EXPECT_EQ(KindOf([] { DetectCyclePeaks(FromValues({1, 1, 1})); }),
            ErrorKind::kNoCrossing);
  EXPECT_EQ(KindOf([] { DetectCyclePeaks(FromValues({0, 1, 0}), 1.5); }),
            ErrorKind::kInvalidArgument);
}

}  // namespace
}  // namespace photothermal
