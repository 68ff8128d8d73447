// Copyright 2026 The kdom Authors
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

#include "cli.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace kdom::cli {
namespace {

namespace fs = std::filesystem;

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun Invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "kdom");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli_main(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string Slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("kdom_cli_test_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
    std::ofstream(Path("path.txt")) << "3 2\n0 1\n1 2\n";
    std::ofstream(Path("star.txt")) << "3 2\n0 1\n0 2\n";
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string Path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

TEST_F(CliTest, StatsOnPath) {
  const CliRun r = Invoke({"stats", "--in", Path("path.txt")});
  EXPECT_EQ(r.code, kSuccess) << r.err;
  EXPECT_EQ(r.out, "n=3\nm=2\nmin_in=0\navg_in=0.6666666666666666\nmed_in=1\nmax_in=1\nzero_in=1\n");
}

TEST_F(CliTest, VerifyWholeVertexSet) {
  std::ofstream(Path("all.txt")) << "0 1 2\n";
  CliRun r = Invoke({"verify", "--in", Path("path.txt"), "--k", "1", "--set", Path("all.txt")});
  EXPECT_EQ(r.code, kSuccess);
  EXPECT_NE(r.out.find("OK"), std::string::npos);
  r = Invoke({"verify", "--in", Path("path.txt"), "--k", "1", "--set", Path("all.txt"), "--minimal"});
  EXPECT_EQ(r.code, kVerificationFailure);
  std::ofstream(Path("one.txt")) << "1\n";
  r = Invoke({"verify", "--in", Path("path.txt"), "--k", "1", "--set", Path("one.txt")});
  EXPECT_EQ(r.code, kVerificationFailure);
  EXPECT_NE(r.out.find("FAIL"), std::string::npos);
}

TEST_F(CliTest, SolveWritesVerifiableReport) {
  for (const char* h : {"bg", "dcg", "tcg", "rand"}) {
    const std::string json = Path(std::string(h) + ".json");
    CliRun r = Invoke({"solve", "--in", Path("star.txt"), "--k", "1", "--heuristic", h, "--out-json", json});
    ASSERT_EQ(r.code, kSuccess) << h << ": " << r.err;
    const auto report = nlohmann::json::parse(Slurp(json));
    EXPECT_EQ(report.at("heuristic"), h);
    EXPECT_EQ(report.at("instance"), "star");
    EXPECT_EQ(report.at("solution"), nlohmann::json::array({0}));
    EXPECT_EQ(report.at("set_size"), 1);
    EXPECT_TRUE(report.at("wall_time_s").is_null());
    EXPECT_EQ(report.at("status"), "ok");
    r = Invoke({"verify", "--in", Path("star.txt"), "--k", "1", "--set", json, "--minimal"});
    EXPECT_EQ(r.code, kSuccess) << r.out;
  }
}

TEST_F(CliTest, RandomizedMinParameterClampsToK) {
  const CliRun r = Invoke({"solve", "--in", Path("path.txt"), "--k", "1", "--heuristic", "rand", "--param", "min"});
  ASSERT_EQ(r.code, kSuccess) << r.err;
  const auto report = nlohmann::json::parse(r.out);
  EXPECT_EQ(report.at("params").at("raw_x"), 0.0);
  EXPECT_EQ(report.at("params").at("resolved_x"), 1.0);
  EXPECT_EQ(report.at("params").at("p"), 0.5);
}

TEST_F(CliTest, TimingFlagRecordsWallTime) {
  const CliRun r = Invoke({"solve", "--in", Path("star.txt"), "--timing"});
  ASSERT_EQ(r.code, kSuccess);
  EXPECT_TRUE(nlohmann::json::parse(r.out).at("wall_time_s").is_number());
}

TEST_F(CliTest, ExactAndLpExport) {
  CliRun r = Invoke({"exact", "--in", Path("star.txt"), "--k", "2"});
  ASSERT_EQ(r.code, kSuccess) << r.err;
  EXPECT_EQ(nlohmann::json::parse(r.out).at("set_size"), 3);
  r = Invoke({"export-lp", "--in", Path("star.txt"), "--k", "2", "--out", Path("star.lp")});
  ASSERT_EQ(r.code, kSuccess) << r.err;
  EXPECT_EQ(r.out, "variables=3 constraints=3\n");
  EXPECT_NE(Slurp(Path("star.lp")).find(" c2: 2 x2 + x0 >= 2\n"), std::string::npos);
}

TEST_F(CliTest, ExactTimeoutExitsWithThree) {
  ASSERT_EQ(Invoke({"gen-er", "--n", "200", "--p", "0.05", "--seed", "1", "--out", Path("big.txt")}).code, kSuccess);
  const CliRun r = Invoke({"exact", "--in", Path("big.txt"), "--k", "2", "--time-limit-s", "0.05"});
  EXPECT_EQ(r.code, kTimeoutWithIncumbent);
  EXPECT_EQ(nlohmann::json::parse(r.out).at("status"), "timeout_best_known");
}

TEST_F(CliTest, GenErIsDeterministic) {
  ASSERT_EQ(Invoke({"gen-er", "--n", "50", "--p", "0.1", "--seed", "9", "--out", Path("a.txt")}).code, kSuccess);
  ASSERT_EQ(Invoke({"gen-er", "--n", "50", "--p", "0.1", "--seed", "9", "--out", Path("b.txt")}).code, kSuccess);
  EXPECT_EQ(Slurp(Path("a.txt")), Slurp(Path("b.txt")));
}

TEST_F(CliTest, BuildReachOnPath) {
  std::ofstream(Path("net.txt")) << "3 2\n0 1 100\n1 2 150\n";
  CliRun r = Invoke({"build-reach", "--in", Path("net.txt"), "--radius-m", "250", "--threads", "2", "--out",
                  Path("reach.txt")});
  ASSERT_EQ(r.code, kSuccess) << r.err;
  EXPECT_EQ(Slurp(Path("reach.txt")), "3 3\n0 1\n0 2\n1 2\n");
  r = Invoke({"build-reach", "--in", Path("net.txt"), "--radius-m", "250", "--reverse", "--out", Path("rev.txt")});
  ASSERT_EQ(r.code, kSuccess) << r.err;
  EXPECT_EQ(Slurp(Path("rev.txt")), "3 3\n1 0\n2 0\n2 1\n");
}

TEST_F(CliTest, BenchWritesCsv) {
  std::ofstream(Path("spec.json")) << R"({"instances": ["star.txt"], "ks": [1], "heuristics": ["tcg"]})";
  const CliRun r = Invoke({"bench", "--spec", Path("spec.json")});
  ASSERT_EQ(r.code, kSuccess) << r.err;
  EXPECT_EQ(r.out, "instance,n,m,k,heuristic,params,size,time_s,status\nstar,3,2,1,tcg,tie=lowest_id,1,,ok\n");
}

TEST_F(CliTest, InputErrorsExitWithOne) {
  EXPECT_EQ(Invoke({"solve", "--in", Path("star.txt"), "--bogus"}).code, kInputError);
  EXPECT_EQ(Invoke({}).code, kInputError);
  EXPECT_EQ(Invoke({"solve", "--in", Path("missing.txt")}).code, kInputError);
  EXPECT_EQ(Invoke({"solve", "--in", Path("star.txt"), "--k", "0"}).code, kInputError);
  EXPECT_EQ(Invoke({"solve", "--in", Path("star.txt"), "--param", "median"}).code, kInputError);
  std::ofstream(Path("bad.txt")) << "3 1\n0 9\n";
  const CliRun r = Invoke({"stats", "--in", Path("bad.txt")});
  EXPECT_EQ(r.code, kInputError);
  EXPECT_NE(r.err.find(":2:"), std::string::npos) << r.err;
  std::ofstream(Path("neg.txt")) << "2 1\n0 1 -4\n";
  EXPECT_EQ(Invoke({"build-reach", "--in", Path("neg.txt"), "--radius-m", "10", "--out", Path("x.txt")}).code,
            kInputError);
}

TEST_F(CliTest, HelpExitsWithZero) {
  EXPECT_EQ(Invoke({"--help"}).code, kSuccess);
}

}  // namespace
}  // namespace kdom::cli
