// Copyright 2026 The weakprobe Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

namespace fs = std::filesystem;

namespace {

struct Run {
  int exit_code;
  std::string stderr_text;
};

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::path(WEAKPROBE_TEST_SCRATCH) / name;
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Run run_cli(const std::string& args, const std::string& env = "") {
  const fs::path err = fs::path(WEAKPROBE_TEST_SCRATCH) / "last_stderr.txt";
  const std::string cmd = env + (env.empty() ? "" : " ") + "\"" WEAKPROBE_CLI_PATH "\" " + args +
                          " > /dev/null 2> \"" + err.string() + "\"";
  const int status = std::system(cmd.c_str());
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, slurp(err)};
}

std::vector<std::vector<std::string>> read_csv(const fs::path& path) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(slurp(path));
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream ls(line);
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

std::map<std::string, double> read_key_values(const fs::path& path) {
  std::map<std::string, double> out;
  const auto rows = read_csv(path);
  for (std::size_t i = 1; i < rows.size(); ++i) out[rows[i][0]] = std::stod(rows[i][1]);
  return out;
}

double column(const std::vector<std::vector<std::string>>& rows, std::size_t row,
              const std::string& name) {
  for (std::size_t c = 0; c < rows[0].size(); ++c) {
    if (rows[0][c] == name) return std::stod(rows[row][c]);
  }
  ADD_FAILURE() << "missing column " << name;
  return NAN;
}

TEST(Cli, ValidationExitCodes) {
  const auto dir = scratch("validation");
  auto r = run_cli("--W 0 bounds --out " + dir.string());
  EXPECT_EQ(r.exit_code, 2);
  EXPECT_NE(r.stderr_text.find("prior width must be positive"), std::string::npos);
  EXPECT_EQ(run_cli("--nu 1.5 bounds --out " + dir.string()).exit_code, 2);
  EXPECT_EQ(run_cli("--m 0 simulate --out " + dir.string()).exit_code, 2);
  EXPECT_EQ(run_cli("--phi 0.5 simulate --out " + dir.string()).exit_code, 2);
  EXPECT_EQ(run_cli("--tol 0.5 bounds --out " + dir.string()).exit_code, 2);
  EXPECT_EQ(run_cli("reproduce fig3 --out " + dir.string()).exit_code, 2);
  EXPECT_EQ(run_cli("--bogus 1 bounds").exit_code, 2);
  EXPECT_EQ(run_cli("sweep --vary q --values 1 --out " + dir.string()).exit_code, 2);
  EXPECT_FALSE(fs::exists(dir / "bounds.csv"));
}

TEST(Cli, NumericalExitCode) {
  const auto dir = scratch("numerical");
  // grid narrower than the coverage requirement
  const auto r = run_cli("--sigmas 3 posterior --out " + dir.string());
  EXPECT_TRUE(r.exit_code == 2 || r.exit_code == 3) << r.stderr_text;
  EXPECT_EQ(run_cli("--m 10 --estimator exact --sigmas 8 posterior --out " + dir.string())
                .exit_code,
            2);
}

TEST(Cli, IoExitCode) {
  const auto dir = scratch("io");
  std::ofstream(dir / "blocker") << "x";
  EXPECT_EQ(run_cli("bounds --out " + (dir / "blocker" / "sub").string()).exit_code, 4);
  EXPECT_EQ(run_cli("replay " + (dir / "missing.json").string()).exit_code, 4);
  std::ofstream(dir / "broken.json") << "{not json";
  EXPECT_EQ(run_cli("replay " + (dir / "broken.json").string()).exit_code, 2);
}

TEST(Cli, BoundsOutputAndManifest) {
  const auto dir = scratch("bounds");
  ASSERT_EQ(run_cli("bounds --out " + dir.string()).exit_code, 0);
  const auto rows = read_csv(dir / "bounds.csv");
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_NEAR(column(rows, 1, "zz_exact") / 3.770854228860084e-05, 1.0, 1e-7);
  EXPECT_NEAR(column(rows, 1, "zz_closed"), 3.5355339059327377e-05, 1e-19);
  EXPECT_EQ(column(rows, 1, "c1_ok"), 1.0);
  const std::string manifest = slurp(dir / "bounds_manifest.json");
  for (const char* key : {"\"command\"", "\"parameters\"", "\"master_seed\"", "\"version\"",
                          "\"outputs\"", "\"wall_clock_seconds\"", "bounds.csv"}) {
    EXPECT_NE(manifest.find(key), std::string::npos) << key;
  }
}

TEST(Cli, DeterministicAndReplayable) {
  for (const std::string cmd : {"bounds", "posterior", "--trials 3000 simulate",
                                "--trials 500 --policy prior simulate",
                                "sweep --vary m --values 1e4,1e5,1e6", "reproduce fig1",
                                "reproduce fig2"}) {
    const auto a = scratch("det_a");
    const auto b = scratch("det_b");
    const auto c = scratch("det_c");
    ASSERT_EQ(run_cli(cmd + " --out " + a.string()).exit_code, 0) << cmd;
    ASSERT_EQ(run_cli(cmd + " --threads 3 --out " + b.string()).exit_code, 0) << cmd;
    fs::path manifest;
    for (const auto& e : fs::directory_iterator(a)) {
      if (e.path().string().ends_with("_manifest.json")) manifest = e.path();
    }
    ASSERT_FALSE(manifest.empty()) << cmd;
    ASSERT_EQ(run_cli("replay " + manifest.string() + " --out " + c.string()).exit_code, 0);
    int compared = 0;
    for (const auto& e : fs::directory_iterator(a)) {
      if (e.path().extension() != ".csv") continue;
      const auto name = e.path().filename();
      EXPECT_EQ(slurp(e.path()), slurp(b / name)) << cmd << " " << name;
      EXPECT_EQ(slurp(e.path()), slurp(c / name)) << cmd << " " << name;
      ++compared;
    }
    EXPECT_GT(compared, 0) << cmd;
  }
}

TEST(Cli, SweepScalingAndConsistency) {
  const auto dir = scratch("sweep");
  ASSERT_EQ(run_cli("sweep --vary m --values 1e4,4e4,1e6 --out " + dir.string()).exit_code, 0);
  const auto rows = read_csv(dir / "sweep.csv");
  ASSERT_EQ(rows.size(), 4u);
  EXPECT_NEAR(column(rows, 1, "zz_closed") / column(rows, 2, "zz_closed"), 2.0, 1e-12);
  EXPECT_NEAR(column(rows, 1, "cr") / column(rows, 2, "cr"), 2.0, 1e-12);
  EXPECT_GE(column(rows, 1, "zz_exact"), column(rows, 2, "zz_exact"));
  EXPECT_GE(column(rows, 2, "zz_exact"), column(rows, 3, "zz_exact"));

  const auto single = scratch("sweep_single");
  ASSERT_EQ(run_cli("sweep --vary m --values 1e6 --out " + single.string()).exit_code, 0);
  ASSERT_EQ(run_cli("bounds --out " + single.string()).exit_code, 0);
  EXPECT_EQ(slurp(single / "sweep.csv"), slurp(single / "bounds.csv"));
}

TEST(Cli, SweepHoldingMNuSquaredStaysNearStrongLimit) {
  const auto dir = scratch("sweep_mnu2");
  ASSERT_EQ(run_cli("--trials 4000 sweep --vary nu --values 0.02,0.03,0.05,0.08 --hold-mnu2 20 "
                    "--mc --out " +
                    dir.string())
                .exit_code,
            0);
  const auto rows = read_csv(dir / "sweep.csv");
  ASSERT_EQ(rows.size(), 5u);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    EXPECT_NEAR(column(rows, i, "mnu2"), 20.0, 0.01);
    const double ratio = column(rows, i, "rmse_over_strong");
    EXPECT_GE(ratio, 1.5);
    EXPECT_LE(ratio, 3.0);
  }
}

TEST(Cli, ConfigFileAndPrecedence) {
  const auto dir = scratch("config");
  std::ofstream(dir / "run.ini") << "nu = 0.03\nm = 16000\nW = 2e-3\n";
  ASSERT_EQ(run_cli("--config " + (dir / "run.ini").string() + " --W 1e-3 bounds --out " +
                    dir.string())
                .exit_code,
            0);
  const auto rows = read_csv(dir / "bounds.csv");
  EXPECT_EQ(column(rows, 1, "nu"), 0.03);
  EXPECT_EQ(column(rows, 1, "m"), 16000.0);
  EXPECT_EQ(column(rows, 1, "W"), 1e-3);
  const std::string manifest = slurp(dir / "bounds_manifest.json");
  EXPECT_NE(manifest.find("\"nu\": 0.03"), std::string::npos);
}

TEST(Cli, OutputDirectoryFromEnvironment) {
  const auto dir = scratch("env");
  ASSERT_EQ(run_cli("bounds", "WEAKPROBE_OUT_DIR=" + dir.string()).exit_code, 0);
  EXPECT_TRUE(fs::exists(dir / "bounds.csv"));
  EXPECT_TRUE(fs::exists(dir / "bounds_manifest.json"));
  const auto flag = scratch("env_flag");
  ASSERT_EQ(run_cli("bounds --out " + flag.string(), "WEAKPROBE_OUT_DIR=" + dir.string() + "/x")
                .exit_code,
            0);
  EXPECT_TRUE(fs::exists(flag / "bounds.csv"));
  EXPECT_FALSE(fs::exists(dir / "x"));
}

TEST(Cli, ReproduceRatios) {
  const auto dir = scratch("reproduce");
  ASSERT_EQ(run_cli("reproduce fig1 --out " + dir.string()).exit_code, 0);
  ASSERT_EQ(run_cli("reproduce fig2 --out " + dir.string()).exit_code, 0);
  const auto f1 = read_key_values(dir / "fig1_summary.csv");
  EXPECT_NEAR(f1.at("ratio_weak"), 0.05, 5e-8);
  EXPECT_NEAR(f1.at("ratio_W"), 0.05, 5e-8);
  EXPECT_NEAR(f1.at("ratio_strong"), 50.0, 5e-5);
  const auto f2 = read_key_values(dir / "fig2_summary.csv");
  EXPECT_NEAR(f2.at("posterior_std"), 1.186e-4, 5e-8);
  EXPECT_NEAR(f2.at("ratio_strong"), 1.897, 1e-3);
  EXPECT_EQ(f2.at("gap_within_threshold"), 1.0);
  const auto curve = read_csv(dir / "fig1_curve.csv");
  EXPECT_EQ(curve.size(), 4002u);
}

TEST(Cli, FullPrecisionNumbers) {
  const auto dir = scratch("precision");
  ASSERT_EQ(run_cli("bounds --out " + dir.string()).exit_code, 0);
  const auto rows = read_csv(dir / "bounds.csv");
  for (const auto& cell : rows[1]) {
    const double v = std::stod(cell);
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    EXPECT_EQ(cell, buf);
  }
}

}  // namespace
