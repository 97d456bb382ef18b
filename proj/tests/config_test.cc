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

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include <gtest/gtest.h>

#include "photothermal/error.h"
#include "photothermal/series_io.h"

namespace photothermal {
namespace {

const std::filesystem::path kPresetDir = PHOTOTHERMAL_PRESET_SOURCE_DIR;

std::string PresetText(std::string_view name) {
  return std::string(BundledPresetText(name));
}

// Error message of a config that must fail to parse.
std::string ParseError(const std::string& text) {
  try {
    ParseConfig(text, "test.ini");
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kBadInput);
    return e.what();
  }
  ADD_FAILURE() << "config parsed unexpectedly";
  return {};
}

std::string Replace(std::string text, const std::string& from,
                    const std::string& to) {
  const auto pos = text.find(from);
  EXPECT_NE(pos, std::string::npos) << from;
  if (pos != std::string::npos) text.replace(pos, from.size(), to);
  return text;
}

int LineOf(const std::string& text, const std::string& needle) {
  const auto pos = text.find(needle);
  return 1 + static_cast<int>(std::count(text.begin(),
                                         text.begin() + static_cast<long>(pos),
                                         '\n'));
}

TEST(PresetTest, BilayerMatchesParameterTable) {
  const RunConfig c = LoadPreset("table1_bilayer");
  ASSERT_TRUE(c.model.assembly.is_bilayer());
  EXPECT_EQ(c.model.assembly.silicone().absorptance, 0.17);
  EXPECT_EQ(c.model.assembly.lig().absorptance, 0.83);
  EXPECT_EQ(c.model.source.power(), 0.075);
  EXPECT_EQ(c.model.environment.ambient(), 298);
  EXPECT_EQ(c.model.assembly.silicone().conv_coeff, 6);
  EXPECT_EQ(c.model.assembly.lig().conv_coeff, 18);
  EXPECT_EQ(c.model.assembly.silicone().conductivity, 0.2);
  EXPECT_EQ(c.model.assembly.silicone().thickness, 1e-3);
  EXPECT_EQ(c.model.assembly.lig().thickness, 1e-4);
  EXPECT_EQ(c.sim.dt, 0.01);
  EXPECT_EQ(c.sim.duration, 300);
  EXPECT_EQ(c.channel(), Channel::kLig);
  EXPECT_TRUE(c.warnings.empty());
  EXPECT_EQ(c.origin, "preset:table1_bilayer");
}

TEST(PresetTest, SingleMatchesParameterTable) {
  const RunConfig c = LoadPreset("table1_single");
  EXPECT_FALSE(c.model.assembly.is_bilayer());
  EXPECT_EQ(c.model.assembly.silicone().conv_faces, 2);
  EXPECT_EQ(c.model.assembly.silicone().specific_heat, 1300);
  EXPECT_EQ(c.model.assembly.silicone().density, 1050);
  EXPECT_EQ(c.channel(), Channel::kSilicone);
  EXPECT_EQ(c.model.schedule.ScaleAt(0), 1.0);
  EXPECT_EQ(c.model.schedule.ScaleAt(300), 0.0);
}

TEST(PresetTest, FilesMatchEmbeddedText) {
  for (const std::string& name : PresetNames()) {
    const std::string file = ReadFile(kPresetDir / (name + ".ini"));
    EXPECT_EQ(file, BundledPresetText(name)) << name;
  }
  EXPECT_EQ(PresetNames().size(), 2u);
}

TEST(PresetTest, UnknownPreset) {
  try {
    LoadPreset("table2");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kBadInput);
  }
}

TEST(PresetTest, DirectoryOverride) {
  const auto dir = std::filesystem::temp_directory_path() / "pt_preset_override";
  std::filesystem::create_directories(dir);
  {
    std::ofstream out(dir / "table1_single.ini");
    out << Replace(PresetText("table1_single"), "ambient = 298",
                   "ambient = 300");
  }
  ::setenv("PHOTOTHERMAL_PRESET_DIR", dir.c_str(), 1);
  const RunConfig overridden = LoadPreset("table1_single");
  const RunConfig fallback = LoadPreset("table1_bilayer");
  ::unsetenv("PHOTOTHERMAL_PRESET_DIR");
  EXPECT_EQ(overridden.model.environment.ambient(), 300);
  EXPECT_EQ(fallback.model.environment.ambient(), 298);
  std::filesystem::remove_all(dir);
}

TEST(ParseConfigTest, EmissivityOutOfRangeNamesKeyAndLine) {
  const std::string text = Replace(PresetText("table1_bilayer"),
                                   "emissivity = 0.95", "emissivity = 1.3");
  const std::string msg = ParseError(text);
  EXPECT_NE(msg.find("silicone.emissivity"), std::string::npos) << msg;
  EXPECT_NE(msg.find("test.ini:" +
                     std::to_string(LineOf(text, "emissivity = 1.3")) + ":"),
            std::string::npos)
      << msg;
}

TEST(ParseConfigTest, EmptyFile) {
  const std::string msg = ParseError("");
  EXPECT_NE(msg.find("test.ini: parse error"), std::string::npos) << msg;
}

TEST(ParseConfigTest, SyntaxErrors) {
  EXPECT_NE(ParseError("[assembly\nkind = single\n").find("test.ini:1:"),
            std::string::npos);
  EXPECT_NE(ParseError("kind = single\n").find("before any section"),
            std::string::npos);
  EXPECT_NE(ParseError("[assembly]\nkind single\n").find("test.ini:2:"),
            std::string::npos);
  EXPECT_NE(ParseError("[optics]\n").find("unknown section"),
            std::string::npos);
}

TEST(ParseConfigTest, UnknownAndDuplicateKeys) {
  const std::string base = PresetText("table1_single");
  EXPECT_NE(ParseError(Replace(base, "[environment]\n",
                               "[environment]\nhumidity = 0.4\n"))
                .find("unknown key 'environment.humidity'"),
            std::string::npos);
  EXPECT_NE(ParseError(Replace(base, "[environment]\n",
                               "[environment]\nambient = 290\n"))
                .find("given twice"),
            std::string::npos);
}

TEST(ParseConfigTest, CollectsEveryError) {
  std::string text = Replace(PresetText("table1_single"), "density = 1050",
                             "density = -1");
  text = Replace(text, "dt = 0.01", "dt = fast");
  const std::string msg = ParseError(text);
  EXPECT_NE(msg.find("silicone.density"), std::string::npos) << msg;
  EXPECT_NE(msg.find("simulation.dt"), std::string::npos) << msg;
}

TEST(ParseConfigTest, ScheduleVariants) {
  const std::string base = PresetText("table1_single");
  const RunConfig two = ParseConfig(
      Replace(base, "on = 0 300 1", "on = 0 60\non = 120 180 0.5"), "s.ini");
  EXPECT_EQ(two.model.schedule.intervals().size(), 2u);
  EXPECT_EQ(two.model.schedule.ScaleAt(30), 1.0);
  EXPECT_EQ(two.model.schedule.ScaleAt(90), 0.0);
  EXPECT_EQ(two.model.schedule.ScaleAt(150), 0.5);

  const RunConfig dark =
      ParseConfig(Replace(base, "on = 0 300 1", ""), "s.ini");
  EXPECT_TRUE(dark.model.schedule.empty());

  const RunConfig always =
      ParseConfig(Replace(base, "[schedule]\non = 0 300 1", ""), "s.ini");
  EXPECT_EQ(always.model.schedule.ScaleAt(299.99), 1.0);

  EXPECT_NE(ParseError(Replace(base, "on = 0 300 1", "on = 50 10"))
                .find("schedule.on"),
            std::string::npos);
}

TEST(ParseConfigTest, RadiativeSource) {
  const RunConfig c = ParseConfig(
      Replace(PresetText("table1_single"), "mode = constant_flux\npower = 0.075",
              "mode = radiative\ntemperature = 450\nemissivity = 0.9"),
      "r.ini");
  EXPECT_EQ(c.model.source.mode(), SourceMode::kRadiativeBody);
}

TEST(ParseConfigTest, MetricSettings) {
  const std::string base = PresetText("table1_bilayer");
  const RunConfig supplied = ParseConfig(
      Replace(base, "convention = window-final",
              "convention = supplied\nfinal = 329.3\nchannel = silicone"),
      "m.ini");
  EXPECT_EQ(supplied.channel(), Channel::kSilicone);
  const ResponseOptions opts = supplied.metrics.ToOptions(supplied.sim);
  EXPECT_EQ(opts.convention, ResponseConvention::kSupplied);
  EXPECT_EQ(opts.supplied_final, 329.3);

  EXPECT_NE(ParseError(Replace(base, "convention = window-final",
                               "convention = plateau"))
                .find("plateau_threshold"),
            std::string::npos);
  EXPECT_NE(ParseError(Replace(PresetText("table1_single"),
                               "convention = window-final",
                               "convention = window-final\nchannel = lig"))
                .find("bilayer"),
            std::string::npos);
}

TEST(ParseConfigTest, AbsorptanceSumWarns) {
  const RunConfig c = ParseConfig(
      Replace(PresetText("table1_bilayer"), "absorptance = 0.83",
              "absorptance = 0.9"),
      "w.ini");
  ASSERT_EQ(c.warnings.size(), 1u);
}

TEST(LoadConfigTest, MissingFileIsIoError) {
  try {
    LoadConfig("/nonexistent/run.ini");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kIo);
  }
}

}  // namespace
}  // namespace photothermal
