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

#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include <gtest/gtest.h>

#include "photothermal/config.h"
#include "photothermal/series_io.h"

namespace photothermal::cli {
namespace {

struct Outcome {
  int code = -1;
  std::string out;
  std::string err;
};

Outcome Cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  Outcome o;
  o.code = RunCli(args, out, err);
  o.out = out.str();
  o.err = err.str();
  return o;
}

std::map<std::string, std::string> KeyValues(const std::string& text) {
  std::map<std::string, std::string> kv;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    const auto eq = line.find('=');
    if (eq != std::string::npos) kv[line.substr(0, eq)] = line.substr(eq + 1);
  }
  return kv;
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("pt_cli_" + std::string(::testing::UnitTest::GetInstance()
                                        ->current_test_info()
                                        ->name()));
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }

  std::string Path(const std::string& name) const {
    return (dir_ / name).string();
  }
  std::string Write(const std::string& name, const std::string& text) const {
    std::ofstream(dir_ / name) << text;
    return Path(name);
  }

  std::filesystem::path dir_;
};

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(Cli({"frobnicate"}).code, kExitUsage);
  const Outcome none = Cli({});
  EXPECT_EQ(none.code, kExitUsage);
  EXPECT_NE(none.err.find("simulate"), std::string::npos);
  EXPECT_EQ(Cli({"steady"}).code, kExitUsage);
  EXPECT_EQ(Cli({"steady", "--preset", "table1_single", "--config", "x.ini"})
                .code,
            kExitUsage);
  EXPECT_EQ(Cli({"simulate", "--preset", "table1_single", "--on", "oops"}).code,
            kExitUsage);
  EXPECT_EQ(Cli({"--help"}).code, kExitOk);
}

TEST_F(CliTest, SteadySingle) {
  const Outcome o = Cli({"steady", "--preset", "table1_single"});
  ASSERT_EQ(o.code, kExitOk) << o.err;
  const auto kv = KeyValues(o.out);
  EXPECT_NEAR(std::stod(kv.at("theta_s_K")), 308.625, 1e-6);
  EXPECT_NEAR(std::stod(kv.at("theta_s_C")), 35.475, 1e-6);
  EXPECT_EQ(kv.count("theta_L_K"), 0u);
}

TEST_F(CliTest, SteadyBilayerWithScale) {
  const Outcome o =
      Cli({"steady", "--preset", "table1_bilayer", "--scale", "0.5"});
  ASSERT_EQ(o.code, kExitOk) << o.err;
  const auto kv = KeyValues(o.out);
  EXPECT_NEAR(std::stod(kv.at("theta_L_K")), 298 + 0.5 * 31.32335, 1e-4);
}

TEST_F(CliTest, SimulateThenMetricsBilayer) {
  const std::string run = Path("run.csv");
  const Outcome sim = Cli({"simulate", "--preset", "table1_bilayer",
                           "--duration", "300", "--dt", "0.01", "--out", run});
  ASSERT_EQ(sim.code, kExitOk) << sim.err;
  const Outcome met =
      Cli({"metrics", run, "--convention", "window-final", "--window", "300"});
  ASSERT_EQ(met.code, kExitOk) << met.err;
  const auto kv = KeyValues(met.out);
  EXPECT_EQ(kv.at("series"), "lig");
  EXPECT_NEAR(std::stod(kv.at("t63_s")), 54.9, 3.0);
  EXPECT_EQ(kv.at("cooling_tau_s"), "NA");
}

TEST_F(CliTest, SimulateToStdoutWithSchedule) {
  const Outcome o = Cli({"simulate", "--preset", "table1_single", "--duration",
                         "400", "--stride", "100", "--on", "0:200"});
  ASSERT_EQ(o.code, kExitOk) << o.err;
  const MeasurementSeries s = ParseSeries(o.out, "stdout");
  EXPECT_EQ(s.size(), 401u);
  EXPECT_LT(s.back().value, s.ValueAt(200));

  const std::string run = Write("cool.csv", o.out);
  const auto kv = KeyValues(
      Cli({"metrics", run, "--window", "200"}).out);
  ASSERT_NE(kv.at("cooling_tau_s"), "NA");
  EXPECT_NEAR(std::stod(kv.at("cooling_tau_s")), 113.75, 1.0);
}

TEST_F(CliTest, DarkRunIsFlat) {
  const Outcome o = Cli({"simulate", "--preset", "table1_bilayer", "--duration",
                         "5", "--stride", "100", "--dark"});
  ASSERT_EQ(o.code, kExitOk);
  EXPECT_NE(o.out.find("5.000000,298.000000,298.000000"), std::string::npos);
  const std::string run = Write("flat.csv", o.out);
  EXPECT_EQ(Cli({"metrics", run, "--window", "5"}).code, kExitBadInput);
}

TEST_F(CliTest, UnstableStepIsBadInput) {
  const Outcome o =
      Cli({"simulate", "--preset", "table1_bilayer", "--dt", "0.5"});
  EXPECT_EQ(o.code, kExitBadInput);
  EXPECT_NE(o.err.find("lig"), std::string::npos);
}

TEST_F(CliTest, NumericalFailureExitCode) {
  std::string text(BundledPresetText("table1_single"));
  text.replace(text.find("power = 0.075"), 13, "power = 1e306");
  text.replace(text.find("conv_faces = 2"), 14, "conv_faces = 0");
  const std::string config = Write("blowup.ini", text);
  const Outcome o = Cli({"simulate", "--config", config, "--dt", "1",
                         "--duration", "100000", "--out", Path("x.csv")});
  EXPECT_EQ(o.code, kExitNumerical) << o.err;
}

TEST_F(CliTest, BadConfigAndData) {
  const std::string config = Write("bad.ini", "[assembly]\nkind = triple\n");
  const Outcome o = Cli({"steady", "--config", config});
  EXPECT_EQ(o.code, kExitBadInput);
  EXPECT_NE(o.err.find("bad.ini:2:"), std::string::npos) << o.err;

  const std::string data = Write("bad.csv", "time_s,value\n0,1\n0,2\n");
  const Outcome m = Cli({"metrics", data});
  EXPECT_EQ(m.code, kExitBadInput);
  EXPECT_NE(m.err.find(":3:"), std::string::npos) << m.err;
  EXPECT_EQ(Cli({"metrics", Path("missing.csv")}).code, kExitBadInput);
}

TEST_F(CliTest, CalibrateRecoversAbsorptance) {
  std::string text(BundledPresetText("table1_bilayer"));
  text.replace(text.find("absorptance = 0.83"), 18, "absorptance = 0.70");
  const std::string truth = Write("truth.ini", text);
  const std::string run = Path("truth.csv");
  ASSERT_EQ(Cli({"simulate", "--config", truth, "--stride", "100", "--out", run})
                .code,
            kExitOk);
  const Outcome o = Cli({"calibrate", "--preset", "table1_bilayer", "--target",
                         run, "--free", "alpha_L:0.3:1.0:0.83"});
  ASSERT_EQ(o.code, kExitOk) << o.err;
  const auto kv = KeyValues(o.out);
  EXPECT_NEAR(std::stod(kv.at("alpha_L")), 0.70, 0.007);
  EXPECT_LT(std::stod(kv.at("rmse_K")), 0.01);
  EXPECT_EQ(Cli({"calibrate", "--preset", "table1_bilayer", "--target", run,
                 "--free", "alpha_L:0.3"})
                .code,
            kExitUsage);
}

TEST_F(CliTest, DistanceSweep) {
  const std::string out = Path("sweep.csv");
  const Outcome o = Cli({"sweep", "--preset", "table1_bilayer", "--distances",
                         "0.05,0.075,0.1", "--outputs", "steady",
                         "--threads", "3", "--out", out});
  ASSERT_EQ(o.code, kExitOk) << o.err;
  const std::string csv = ReadFile(out);
  EXPECT_EQ(csv.substr(0, csv.find('\n')),
            "distance_m,scale,status,steady_theta_s_K,steady_theta_L_K,error");
  EXPECT_NE(csv.find("\n0.1,0.500000,ok,"), std::string::npos) << csv;
}

TEST_F(CliTest, PartialSweepExitCode) {
  const Outcome o = Cli({"sweep", "--preset", "table1_single", "--param",
                         "alpha_s", "--values", "0.17,2.0", "--outputs",
                         "steady"});
  EXPECT_EQ(o.code, kExitPartialSweep);
  EXPECT_NE(o.out.find("2,failed,"), std::string::npos) << o.out;
  EXPECT_EQ(Cli({"sweep", "--preset", "table1_single", "--param", "alpha_s",
                 "--values", "0.17"})
                .code,
            kExitBadInput);
}

TEST_F(CliTest, AnalyzeBendingThreeCycles) {
  std::string text = "# unit: deg\ntime_s,value\n";
  double t = 0;
  for (double peak : {51.7, 51.6, 50.7}) {
    for (int i = 0; i < 300; ++i, ++t) {
      text += std::to_string(t) + "," +
              std::to_string(peak * (1 - std::exp(-i / 40.0))) + "\n";
    }
    const double top = peak * (1 - std::exp(-299 / 40.0));
    for (int i = 0; i < 200; ++i, ++t) {
      text += std::to_string(t) + "," +
              std::to_string(top * std::exp(-(i + 1) / 20.0)) + "\n";
    }
  }
  const std::string data = Write("bend.csv", text);
  const std::string norm = Path("norm.csv");
  const Outcome o = Cli({"analyze-bending", data, "--plateau-window", "20",
                         "--reference", "51.7", "--out", norm});
  ASSERT_EQ(o.code, kExitOk) << o.err;
  const auto kv = KeyValues(o.out);
  EXPECT_EQ(kv.at("cycles"), "3");
  EXPECT_EQ(kv.at("unit"), "deg");
  EXPECT_NE(kv.at("cycle_ratios").find("1.000000,0.998"), std::string::npos);
  const MeasurementSeries n = ReadSeries(norm);
  EXPECT_EQ(n.unit(), SeriesUnit::kDimensionless);
  EXPECT_EQ(n.front().value, 0.0);
  EXPECT_EQ(Cli({"analyze-bending", data}).code, kExitUsage);
}

}  // namespace
}  // namespace photothermal::cli
