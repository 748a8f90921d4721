// Copyright 2026 The gammaq Authors.
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


#include <gtest/gtest.h>

#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include "app.hpp"
#include "nlohmann/json.hpp"

namespace gammaq::cli {
namespace {

struct Output {
  int code = 0;
  std::string out, err;
};

Output invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "gammaq");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<nlohmann::json> records(const std::string& text) {
  std::vector<nlohmann::json> r;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) r.push_back(nlohmann::json::parse(line));
  return r;
}

TEST(Cli, TrivialWeylValue) {
  const auto o = invoke({"kloosterman", "--n", "3", "--q", "2", "--w", "id", "--c", "1,1", "--M", "1,1", "--N", "1,1"});
  EXPECT_EQ(o.code, 0);
  const auto r = records(o.out);
  ASSERT_EQ(r.size(), 1u);
  EXPECT_EQ(r[0]["status"], "pass");
  EXPECT_EQ(r[0]["payload"]["exact_value"], "2");
  for (const char* key : {"command", "parameters", "anchor", "status", "payload", "seed", "version"})
    EXPECT_TRUE(r[0].contains(key)) << key;
}

TEST(Cli, ClassicalValue) {
  const auto o = invoke({"kloosterman", "--n", "2", "--q", "1", "--w", "wl", "--c", "3", "--M", "1", "--N", "1"});
  EXPECT_EQ(o.code, 0);
  EXPECT_EQ(records(o.out)[0]["payload"]["exact_value"], "-1");
}

TEST(Cli, SupportVanishing) {
  const auto o = invoke({"kloosterman", "--n", "3", "--q", "2", "--w", "wstar", "--c", "16,24", "--M", "1,1", "--N", "1,1"});
  EXPECT_EQ(o.code, 0);
  const auto r = records(o.out)[0];
  EXPECT_EQ(r["status"], "pass");
  EXPECT_EQ(r["payload"]["exact_value"], "0");
}

TEST(Cli, NonzeroSumOutsideSupportFails) {
  const auto o = invoke({"kloosterman", "--n", "3", "--q", "2", "--w", "wstar", "--c", "24,40", "--M", "1,1", "--N", "1,1",
                         "--backend", "echelon"});
  EXPECT_EQ(o.code, 1);
  EXPECT_EQ(records(o.out)[0]["status"], "fail");
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(invoke({"kloosterman", "--n", "3", "--q", "0", "--c", "1,1"}).code, 2);
  EXPECT_EQ(invoke({"no-such-command"}).code, 2);
  EXPECT_EQ(invoke({"verify", "groups", "huge"}).code, 2);
}

TEST(Cli, BudgetExhaustion) {
  ::setenv("GAMMAQ_BUDGET", "5", 1);
  const auto o = invoke({"count-ball", "--n", "2", "--q", "1", "--T", "20"});
  ::unsetenv("GAMMAQ_BUDGET");
  EXPECT_EQ(o.code, 3);
  const auto r = records(o.out)[0];
  EXPECT_EQ(r["status"], "resource_exceeded");
  EXPECT_EQ(r["payload"]["processed"], 5);
  EXPECT_EQ(invoke({"count-ball", "--n", "2", "--q", "1", "--T", "20", "--budget", "5"}).code, 3);
}

TEST(Cli, VerifyGroupsSmoke) {
  const auto o = invoke({"verify", "groups", "smoke"});
  EXPECT_EQ(o.code, 0);
  const auto r = records(o.out);
  EXPECT_GE(r.size(), 3u);
  for (const auto& rec : r) EXPECT_EQ(rec["status"], "pass") << rec.dump();
}

TEST(Cli, DeterministicOutput) {
  const std::vector<std::string> args{"lift", "--n", "2", "--q", "11", "--census", "--seed", "7"};
  const auto a = invoke(args);
  const auto b = invoke(args);
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  const auto parallel = invoke({"verify", "ffchar", "smoke", "--jobs", "4"});
  EXPECT_EQ(parallel.out, invoke({"verify", "ffchar", "smoke", "--jobs", "1"}).out);
}

TEST(Cli, ExperimentCsvToStdout) {
  const auto o = invoke({"experiment", "--kind", "ball_grid", "--n", "2", "--q", "1,2", "--T", "5,10", "--out", "-"});
  EXPECT_EQ(o.code, 0);
  std::istringstream in(o.out);
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  ASSERT_EQ(lines.size(), 5u);
  EXPECT_EQ(records(o.err)[0]["command"], "experiment");
}

TEST(Cli, BruhatAndIndices) {
  const auto b = invoke({"bruhat", "--g", "2,1;3,2"});
  EXPECT_EQ(b.code, 0);
  EXPECT_EQ(records(b.out)[0]["payload"]["c"], nlohmann::json::array({"3"}));
  const auto i = invoke({"indices", "--n", "2", "--q", "6"});
  EXPECT_EQ(i.code, 0);
  EXPECT_NE(i.out.find("144"), std::string::npos);
}

TEST(Cli, GgsumAndLift) {
  const auto g = invoke({"ggsum", "--n", "2", "--p", "5"});
  EXPECT_EQ(g.code, 0);
  EXPECT_EQ(records(g.out)[0]["status"], "pass");
  const auto l = invoke({"lift", "--n", "2", "--q", "3", "--g", "0,2;1,0"});
  EXPECT_EQ(l.code, 0);
  EXPECT_EQ(records(l.out)[0]["payload"]["norm"], 1);
}

}  // namespace
}  // namespace gammaq::cli
