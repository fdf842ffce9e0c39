// Copyright 2026 The tsreconf Authors
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

#include "cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "json.hpp"

namespace tsr::cli {
namespace {

using ::testing::HasSubstr;
using ::testing::StartsWith;

const std::string kData = TSR_TEST_DATA_DIR;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return kData + "/" + name; }

TEST(Cli, ReconfigApproxOnStar) {
  const Outcome o =
      invoke({"reconfig", data("star.tss"), data("star_x.set"), data("star_y.set"), "--approx"});
  EXPECT_EQ(o.code, kOk);
  EXPECT_THAT(o.out, StartsWith("size 2\n"));
}

TEST(Cli, ReconfigExactJson) {
  const Outcome o =
      invoke({"--json", "reconfig", data("star.tss"), data("star_x.set"), data("star_y.set")});
  ASSERT_EQ(o.code, kOk) << o.err;
  const auto j = nlohmann::json::parse(o.out);
  EXPECT_EQ(j["schema_version"], kSchemaVersion);
  EXPECT_EQ(j["value"], 2);
  EXPECT_EQ(j["witness"], nlohmann::json::parse("[[2],[2,3],[3]]"));
}

TEST(Cli, ReconfigCap) {
  const Outcome o =
      invoke({"reconfig", data("star.tss"), data("star_x.set"), data("star_y.set"), "--cap", "1"});
  EXPECT_EQ(o.code, kOk);
  EXPECT_THAT(o.out, StartsWith("UNREACHABLE cap 1"));
}

TEST(Cli, GapRatioStrictlyBetweenOneAndTwo) {
  const Outcome o = invoke({"--json", "gap-ratio", "--n", "1024"});
  ASSERT_EQ(o.code, kOk);
  const auto j = nlohmann::json::parse(o.out);
  EXPECT_EQ(j["ratio"], "1048577/525313");
  EXPECT_THAT(j["ratio_decimal"].get<std::string>(), StartsWith("1.99"));
}

TEST(Cli, CheckTargetAndTrace) {
  Outcome o = invoke({"check-target", data("p3.tss"), data("p3_seed.set")});
  EXPECT_EQ(o.code, kOk);
  EXPECT_THAT(o.out, StartsWith("TARGET"));
  o = invoke({"trace", data("p3.tss"), data("p3_seed.set")});
  EXPECT_EQ(o.out, "[[1],[1,2],[1,2,3],[1,2,3]]\n");
  o = invoke({"check-target", data("triangle.tss"), data("p3_seed.set")});
  EXPECT_THAT(o.out, StartsWith("NOT-TARGET"));
}

TEST(Cli, SolveTss) {
  EXPECT_EQ(invoke({"solve-tss", data("triangle.tss")}).out, "size 2\n1 2\n");
  EXPECT_THAT(invoke({"solve-tss", data("star.tss"), "--greedy"}).out, StartsWith("size 1\n"));
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(invoke({"solve-tss", data("missing.tss")}).code, kInvalidInput);
  EXPECT_EQ(invoke({"nonsense"}).code, kInvalidInput);
  EXPECT_EQ(invoke({"gap-ratio", "--n", "1"}).code, kInvalidInput);
  EXPECT_EQ(invoke({"--limit-n", "2", "solve-tss", data("triangle.tss")}).code, kTooLarge);
  EXPECT_EQ(invoke({"reduce", data("p2.tss"), "--ell", "0"}).code, kInvalidInput);
  EXPECT_EQ(invoke({"--help"}).code, kOk);
}

TEST(Cli, ParseErrorsCarryLineNumbers) {
  const auto path = std::filesystem::temp_directory_path() / "tsreconf_bad.tss";
  std::ofstream(path) << "p tss 2 1\nt 1 1\nt 2 1\ne 2 1\n";
  const Outcome o = invoke({"solve-tss", path.string()});
  EXPECT_EQ(o.code, kInvalidInput);
  EXPECT_THAT(o.err, HasSubstr("line 4"));
}

TEST(Cli, VerifyReductionReportsJson) {
  const Outcome o =
      invoke({"verify-reduction", data("2k2.tss"), "--ell", "2", "--kc", "1", "--ks", "1"});
  ASSERT_EQ(o.code, kOk) << o.err;
  const auto j = nlohmann::json::parse(o.out);
  EXPECT_EQ(j["opt_g"], 2);
  EXPECT_EQ(j["opt_h"], 4);
  EXPECT_TRUE(j["soundness"]["triggered"].get<bool>());
  EXPECT_TRUE(j["ok"].get<bool>());
}

TEST(Cli, ReduceWritesFilesUnderOutputDir) {
  const auto dir = std::filesystem::temp_directory_path() / "tsreconf_cli_test";
  std::filesystem::create_directories(dir);
  ::setenv(kOutputDirEnv, dir.c_str(), 1);
  const Outcome o = invoke({"--out", "h.tss", "reduce", data("p2.tss"), "--ell", "2", "--roles",
                            "roles.json", "--dot", "h.dot"});
  ::unsetenv(kOutputDirEnv);
  ASSERT_EQ(o.code, kOk) << o.err;
  std::ifstream h(dir / "h.tss");
  std::string header;
  std::getline(h, header);
  EXPECT_EQ(header, "p tss 90 121");
  std::ifstream roles(dir / "roles.json");
  const auto j = nlohmann::json::parse(roles);
  EXPECT_EQ(j["roles"][0], "original:1");
  EXPECT_EQ(j["roles"].size(), 90u);
  EXPECT_TRUE(std::filesystem::exists(dir / "h.dot"));
}

TEST(Cli, BenchIsDeterministicAcrossThreadCounts) {
  const std::vector<std::string> base{"--seed", "7", "bench", "--grid-n", "5,7", "--grid-p",
                                      "0.5", "--grid-ell", "1,2", "--reps", "2"};
  auto with_threads = [&](const char* t) {
    auto args = base;
    args.insert(args.end(), {"--threads", t});
    return invoke(args);
  };
  const Outcome one = with_threads("1");
  const Outcome four = with_threads("4");
  ASSERT_EQ(one.code, kOk) << one.err;
  EXPECT_EQ(one.out, four.out);
  EXPECT_THAT(one.out, StartsWith("schema_version,instance,n,p,tau,ell,seed"));
  EXPECT_EQ(std::count(one.out.begin(), one.out.end(), '\n'), 1 + 2 * 1 * 2 * 2 * 2);
  EXPECT_EQ(invoke({"bench", "--grid-tau", "bogus"}).code, kInvalidInput);
}

TEST(Cli, SelftestPassesOnBundledCorpus) {
  const Outcome o = invoke({"selftest", "--data", kData});
  EXPECT_EQ(o.code, kOk) << o.out;
  EXPECT_THAT(o.out, HasSubstr("selftest passed"));
}

TEST(Cli, SelftestRejectsAnEmptyCorpus) {
  const auto dir = std::filesystem::temp_directory_path() / "tsreconf_empty_corpus";
  std::filesystem::create_directories(dir);
  EXPECT_EQ(invoke({"selftest", "--data", dir.string()}).code, kInvalidInput);
}

}  // namespace
}  // namespace tsr::cli
