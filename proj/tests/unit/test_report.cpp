#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>

#include "nchopf/commands.hpp"

using namespace nchopf;

TEST(Report, DirectionDecidesPass) {
  EXPECT_TRUE(CheckRecord::make("s", "n", {}, 1e-12, 1e-10).pass);
  EXPECT_FALSE(CheckRecord::make("s", "n", {}, 1e-9, 1e-10).pass);
  EXPECT_TRUE(CheckRecord::make("s", "n", {}, 1e-3, 1e-6, Direction::above).pass);
  EXPECT_FALSE(CheckRecord::make("s", "n", {}, 1e-7, 1e-6, Direction::above).pass);
}

TEST(Report, NanAlwaysFailsAndSerializesAsString) {
  const double nan = std::numeric_limits<double>::quiet_NaN();
  const CheckRecord below = CheckRecord::make("s", "n", {}, nan, 1.0);
  EXPECT_FALSE(below.pass);
  EXPECT_FALSE(CheckRecord::make("s", "n", {}, nan, 1.0, Direction::above).pass);
  EXPECT_TRUE(below.to_json()["residual"].is_string());
}

TEST(Report, JsonIsFlatVersionedAndSummarized) {
  ReportDocument doc;
  doc.seed = 9;
  doc.checks.push_back(CheckRecord::make("a", "x", {{"theta", 1.0}}, 0.0, 1.0));
  doc.checks.push_back(CheckRecord::make("a", "y", {}, 2.0, 1.0));
  const Json j = doc.to_json();
  EXPECT_EQ(j["version"], "1.0");
  EXPECT_TRUE(j.contains("timestamp"));
  EXPECT_EQ(j["summary"]["total"], 2);
  EXPECT_EQ(j["summary"]["failed"], 1);
  EXPECT_EQ(j["checks"][0]["params"]["theta"], 1.0);
  EXPECT_FALSE(doc.all_pass());
}

TEST(Report, DeterministicApartFromTimestamp) {
  VerifyConfig cfg;
  cfg.cutoff = 24;
  const auto a = run_verify({"classical", "pseudo"}, cfg).to_json(false);
  const auto b = run_verify({"classical", "pseudo"}, cfg).to_json(false);
  EXPECT_EQ(a.dump(), b.dump());
}

TEST(Report, CsvHasHeaderAndOneRowPerCheck) {
  ReportDocument doc;
  doc.checks.push_back(CheckRecord::make("a", "x", {{"k", 1}}, 0.5, 1.0));
  std::istringstream in(doc.to_csv());
  std::string line;
  int lines = 0;
  while (std::getline(in, line)) ++lines;
  EXPECT_EQ(lines, 2);
}

TEST(Report, AtomicWriteReplacesFile) {
  const auto path = std::filesystem::temp_directory_path() / "nchopf_report_test.json";
  write_atomic(path, "first");
  write_atomic(path, "second");
  std::ifstream f(path);
  std::string s;
  f >> s;
  EXPECT_EQ(s, "second");
  EXPECT_FALSE(std::filesystem::exists(path.string() + ".tmp"));
  std::filesystem::remove(path);
  EXPECT_THROW(write_atomic("/nonexistent-dir/x.json", "x"), Error);
}

TEST(Config, ValidationAndSuiteResolution) {
  VerifyConfig cfg;
  cfg.cutoff = 4;
  EXPECT_THROW(cfg.validate(), Error);
  EXPECT_EQ(resolve_suites({"all"}).size(), suite_names().size());
  try {
    resolve_suites({"nope"});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::UnknownSuite);
  }
}

TEST(Commands, ParseInitialStates) {
  const InitialState a = parse_initial("down:3");
  EXPECT_EQ(a.component, 1);
  EXPECT_EQ(a.index, 3);
  const InitialState b = parse_initial("up:coherent:1.5-0.5i");
  ASSERT_TRUE(b.coherent.has_value());
  EXPECT_DOUBLE_EQ(b.coherent->imag(), -0.5);
  EXPECT_THROW(parse_initial("left:1"), Error);
}

TEST(Commands, EvolveConservesNorm) {
  EvolveSpec spec;
  spec.theta = 0.5;
  spec.cutoff = 40;
  spec.initial = parse_initial("up:2");
  spec.grid.points = 5;
  std::istringstream in(run_evolve(spec));
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "gt,pop_up,pop_down,inversion,norm");
  int rows = 0;
  while (std::getline(in, line)) {
    ++rows;
    EXPECT_NEAR(std::stod(line.substr(line.rfind(',') + 1)), 1.0, 1e-9);
  }
  EXPECT_EQ(rows, 5);
  spec.grid.points = 0;
  EXPECT_THROW(run_evolve(spec), Error);
}

TEST(Commands, PseudoEvolveConservesPseudoNorm) {
  EvolveSpec spec;
  spec.kind = ModelKind::pseudo;
  spec.theta = 1.5;
  spec.grid.points = 11;
  std::istringstream in(run_evolve(spec));
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "gt,pop_up,pop_down,inversion,pseudo_norm");
  while (std::getline(in, line)) EXPECT_NEAR(std::stod(line.substr(line.rfind(',') + 1)), 1.0, 1e-9);
}

TEST(Commands, DiracScanJsonMarksGroundOnlyPattern) {
  bool ok = false;
  const Json j = run_dirac_scan({-2.0, -1.0, 1.0, 2.0}, 32, &ok);
  EXPECT_TRUE(ok);
  ASSERT_EQ(j["entries"].size(), 8u);
  for (const auto& e : j["entries"]) {
    const bool negative = e["theta"].get<double>() < 0;
    const bool chart_one = e["chart"] == "I";
    EXPECT_EQ(e["singular"].size(), negative == chart_one ? 1u : 0u);
  }
  EXPECT_THROW(run_dirac_scan({0.0, 1.0}, 32), Error);
}

TEST(Commands, ChernSuiteHasThreeIntegerChecks) {
  int count = 0;
  for (const auto& r : run_suite("chern", VerifyConfig{}))
    if (r.name == "chern_number") {
      ++count;
      EXPECT_TRUE(r.pass);
    }
  EXPECT_EQ(count, 3);
}
