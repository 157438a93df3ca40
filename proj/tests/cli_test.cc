// Copyright 2026 The submax Authors.
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

#include "submax/cli_ops.h"

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "submax/reference.h"

namespace submax {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct Outcome {
  int code = -1;
  std::string out;
};

Outcome Cli(const std::string& args) {
  const std::string cmd =
      std::string(SUBMAX_CLI_PATH) + " " + args + " 2>/dev/null";
  Outcome o;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return o;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) o.out.append(buf, got);
  const int status = pclose(pipe);
  o.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return o;
}

std::string Slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("submax_cli_" + std::to_string(::getpid()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string Path(const std::string& name) const {
    return (dir_ / name).string();
  }

  // Writes an instance and returns its path.
  std::string Gen(const std::string& args, const std::string& name) {
    const Outcome o = Cli("gen " + args + " -o " + Path(name));
    EXPECT_EQ(o.code, kExitPass) << args;
    return Path(name);
  }

  fs::path dir_;
};

TEST_F(CliTest, GenIsByteDeterministic) {
  for (const char* kind : {"laminar", "graphic", "transversal"}) {
    const std::string args = std::string("--matroid ") + kind +
                             " --function coverage --n 25 --seed 3";
    const std::string a = Slurp(Gen(args, "a.json"));
    const std::string b = Slurp(Gen(args, "b.json"));
    EXPECT_FALSE(a.empty());
    EXPECT_EQ(a, b) << kind;
    const std::string c = Slurp(Gen(std::string("--matroid ") + kind +
                                        " --function coverage --n 25 --seed 4",
                                    "c.json"));
    EXPECT_NE(a, c) << kind;
  }
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(Cli("gen --matroid laminar --function coverage --n 0").code,
            kExitUsage);
  EXPECT_EQ(Cli("gen --matroid matrix --function coverage --n 5").code,
            kExitUsage);
  EXPECT_EQ(Cli("gen --matroid laminar --function coverage").code, kExitUsage);
  EXPECT_EQ(Cli("run " + Path("missing.json")).code, kExitUsage);
  EXPECT_EQ(Cli("frobnicate").code, kExitUsage);
  const std::string inst =
      Gen("--matroid laminar --function additive --n 8", "i.json");
  EXPECT_EQ(Cli("run " + inst + " --epsilon 1.5").code, kExitUsage);
  EXPECT_EQ(Cli("run " + inst + " --algorithm magic").code, kExitUsage);
  EXPECT_EQ(Cli("--help").code, kExitPass);
}

TEST_F(CliTest, BruteAndGreedyOnSmallInstances) {
  for (const char* kind : {"laminar", "graphic", "transversal"}) {
    const std::string inst =
        Gen(std::string("--matroid ") + kind + " --function coverage --n 12",
            "i.json");
    const Outcome brute = Cli("run " + inst + " --algorithm brute");
    const Outcome greedy = Cli("run " + inst + " --algorithm greedy");
    ASSERT_EQ(brute.code, kExitPass);
    ASSERT_EQ(greedy.code, kExitPass);
    const json b = json::parse(brute.out);
    const json g = json::parse(greedy.out);
    const Instance loaded = LoadInstance(inst);
    const double opt =
        reference::BruteForceOpt(loaded.function, loaded.matroid).value;
    EXPECT_NEAR(b.at("value").get<double>(), opt, 1e-9) << kind;
    EXPECT_GE(g.at("value").get<double>(), 0.5 * opt - 1e-9) << kind;
  }
}

TEST_F(CliTest, RunIsDeterministicAndVerifies) {
  for (const char* kind : {"laminar", "graphic", "transversal"}) {
    const std::string inst = Gen(
        std::string("--matroid ") + kind + " --function facility --n 40 --seed 2",
        "i.json");
    const std::string a = Path("a.json"), b = Path("b.json");
    ASSERT_EQ(Cli("run " + inst + " --seed 5 -o " + a).code, kExitPass);
    ASSERT_EQ(Cli("run " + inst + " --seed 5 -o " + b).code, kExitPass);
    EXPECT_EQ(Slurp(a), Slurp(b)) << kind;
    const Outcome v = Cli("verify " + inst + " " + a);
    EXPECT_EQ(v.code, kExitPass) << v.out;
    EXPECT_TRUE(json::parse(v.out).at("ok").get<bool>());
    const json r = json::parse(Slurp(a));
    for (const char* key : {"version", "instance_fingerprint", "seed",
                            "sub_seeds", "config", "solution", "value",
                            "counters", "s0", "rank"}) {
      EXPECT_TRUE(r.contains(key)) << key;
    }
    EXPECT_TRUE(r.at("counters").contains("f_queries.total"));
  }
}

class VerifyTamperTest : public CliTest {
 protected:
  void SetUp() override {
    CliTest::SetUp();
    inst_ = Gen("--matroid laminar --function coverage --n 30 --seed 8",
                "i.json");
    const Outcome run = Cli("run " + inst_ + " --seed 1");
    ASSERT_EQ(run.code, kExitPass);
    result_ = json::parse(run.out);
  }

  Outcome VerifyWith(const json& r) {
    const std::string p = Path("r.json");
    std::ofstream(p) << r.dump();
    return Cli("verify " + inst_ + " " + p);
  }

  std::vector<std::string> Failures(const Outcome& o) {
    return json::parse(o.out).at("failures").get<std::vector<std::string>>();
  }

  std::string inst_;
  json result_;
};

TEST_F(VerifyTamperTest, InfeasibleSolution) {
  // Adding every element breaks some capacity.
  json r = result_;
  std::vector<int> all(30);
  for (int e = 0; e < 30; ++e) all[e] = e;
  r["solution"] = all;
  const Outcome o = VerifyWith(r);
  EXPECT_EQ(o.code, kExitViolation);
  EXPECT_EQ(Failures(o)[0], "feasibility");
}

TEST_F(VerifyTamperTest, InflatedCounter) {
  json r = result_;
  r["counters"]["f_queries.phase2"] = uint64_t{1} << 60;
  const Outcome o = VerifyWith(r);
  EXPECT_EQ(o.code, kExitViolation);
  EXPECT_EQ(Failures(o), std::vector<std::string>{"budget:phase2_queries"});
}

TEST_F(VerifyTamperTest, WrongValue) {
  json r = result_;
  r["value"] = r["value"].get<double>() + 1.0;
  const Outcome o = VerifyWith(r);
  EXPECT_EQ(o.code, kExitViolation);
  EXPECT_EQ(Failures(o), std::vector<std::string>{"value_mismatch"});
}

TEST_F(VerifyTamperTest, OtherInstance) {
  const std::string other =
      Gen("--matroid laminar --function coverage --n 30 --seed 9", "o.json");
  const std::string p = Path("r.json");
  std::ofstream(p) << result_.dump();
  const Outcome o = Cli("verify " + other + " " + p);
  EXPECT_EQ(o.code, kExitViolation);
  EXPECT_EQ(Failures(o), std::vector<std::string>{"instance_mismatch"});
}

TEST_F(VerifyTamperTest, MalformedSolution) {
  json r = result_;
  r["solution"] = "nope";
  const Outcome o = VerifyWith(r);
  EXPECT_EQ(o.code, kExitViolation);
  EXPECT_EQ(Failures(o), std::vector<std::string>{"malformed_solution"});
}

TEST(BudgetsTest, Formulas) {
  const Budgets b = ComputeBudgets(100, 10, 0.5);
  EXPECT_NEAR(b.phase1_queries, 8.0 * 100 / 0.5 * std::log(20.0), 1e-9);
  EXPECT_NEAR(b.dt_incremental_ops, 1600.0, 1e-9);
  EXPECT_NEAR(b.batch_inserts, 16.0 * std::log(10.0), 1e-9);
  const double l2 = std::log(200.0);
  EXPECT_NEAR(b.phase2_queries, 8.0 * 100 * 32.0 * l2 * l2, 1e-6);
  // Rank 1 keeps a positive batch budget.
  EXPECT_GT(ComputeBudgets(5, 1, 0.5).batch_inserts, 0.0);
}

TEST(BudgetsTest, Violations) {
  const Budgets b = ComputeBudgets(100, 10, 0.5);
  json c = json::object();
  EXPECT_TRUE(BudgetViolations(c, b).empty());
  c["dt.tests"] = 1000;
  c["dt.inserts"] = 601;
  EXPECT_EQ(BudgetViolations(c, b),
            std::vector<std::string>{"dt_incremental_ops"});
}

}  // namespace
}  // namespace submax
