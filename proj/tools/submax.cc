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

// submax gen | run | verify. Exit codes: 0 pass, 1 violation, 2 usage.

#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "submax/cli_ops.h"
#include "submax/instance.h"

namespace {

using nlohmann::json;
using submax::kExitPass;
using submax::kExitUsage;
using submax::kExitViolation;

void Emit(const json& j, const std::string& path) {
  const std::string text = j.dump(1) + "\n";
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw submax::DomainError("cannot write " + path);
  out << text;
}

json ReadJson(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw submax::DomainError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw submax::DomainError(path + ": " + e.what());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Monotone submodular maximization over matroids"};
  app.require_subcommand(1);

  submax::GenOptions gen;
  std::string gen_matroid = "laminar", gen_function = "coverage", gen_out;
  auto* gen_cmd = app.add_subcommand("gen", "Generate an instance");
  gen_cmd->add_option("--matroid", gen_matroid, "laminar|graphic|transversal")
      ->check(CLI::IsMember({"laminar", "graphic", "transversal"}));
  gen_cmd->add_option("--function", gen_function, "coverage|facility|additive")
      ->check(CLI::IsMember({"coverage", "facility", "additive"}));
  gen_cmd->add_option("--n", gen.n, "Ground set size")->required();
  gen_cmd->add_option("--seed", gen.seed, "Generator seed");
  gen_cmd->add_option("--depth", gen.depth, "Laminar tree depth");
  gen_cmd->add_option("--branching", gen.branching, "Laminar max children");
  gen_cmd->add_option("--avg-degree", gen.avg_degree, "Graphic average degree");
  gen_cmd->add_option("--degree", gen.degree, "Transversal max left degree");
  gen_cmd->add_option("--num-right", gen.num_right, "Transversal right size");
  gen_cmd->add_option("--universe", gen.universe,
                      "Coverage items or facility clients");
  gen_cmd->add_option("--cover-size", gen.cover_size, "Max items per element");
  gen_cmd->add_option("-o,--output", gen_out, "Output file (default stdout)");

  submax::RunOptions run;
  std::string run_instance, run_out, run_variant = "auto";
  bool no_phase1 = false;
  auto* run_cmd = app.add_subcommand("run", "Run an algorithm on an instance");
  run_cmd->add_option("instance", run_instance)->required();
  run_cmd->add_option("--epsilon", run.config.epsilon)
      ->check(CLI::Range(1e-6, 0.999999));
  run_cmd->add_option("--seed", run.config.seed);
  run_cmd->add_option("--algorithm", run.algorithm)
      ->check(CLI::IsMember({"full", "greedy", "brute"}));
  run_cmd->add_option("--threads", run.config.threads,
                      "Multilinear sampling threads")
      ->check(CLI::PositiveNumber);
  run_cmd->add_option("--variant", run_variant, "auto|incremental|approx")
      ->check(CLI::IsMember({"auto", "incremental", "approx"}));
  run_cmd->add_option("--multilinear-constant",
                      run.config.multilinear_constant);
  run_cmd->add_option("--phase1-threshold", run.config.phase1_threshold);
  run_cmd->add_option("--sample-constant", run.config.sample_constant);
  run_cmd->add_flag("--weight-gate", run.config.weight_gate);
  run_cmd->add_flag("--no-phase1", no_phase1);
  run_cmd->add_flag("--verify-rounding", run.config.verify_rounding);
  run_cmd->add_flag("--timing", run.timing, "Record wall time (not byte-stable)");
  run_cmd->add_option("-o,--output", run_out, "Output file (default stdout)");

  std::string verify_instance, verify_result;
  auto* verify_cmd = app.add_subcommand("verify", "Check a result record");
  verify_cmd->add_option("instance", verify_instance)->required();
  verify_cmd->add_option("result", verify_result)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (*gen_cmd) {
      gen.matroid = submax::ParseMatroidKind(gen_matroid);
      gen.function = submax::ParseFunctionKind(gen_function);
      Emit(submax::InstanceToJson(submax::GenerateInstance(gen)), gen_out);
      return kExitPass;
    }
    if (*run_cmd) {
      run.config.run_phase1 = !no_phase1;
      run.config.variant = run_variant == "incremental"
                               ? submax::DtVariant::kIncremental
                           : run_variant == "approx" ? submax::DtVariant::kApprox
                                                     : submax::DtVariant::kAuto;
      const submax::Instance inst = submax::LoadInstance(run_instance);
      Emit(submax::RunInstance(inst, run), run_out);
      return kExitPass;
    }
    const submax::Instance inst = submax::LoadInstance(verify_instance);
    const json result = ReadJson(verify_result);
    const submax::VerifyReport rep = submax::VerifyResult(inst, result);
    json out = {{"ok", rep.ok}, {"failures", rep.failures},
                {"details", rep.details}};
    std::cout << out.dump(1) << "\n";
    return rep.ok ? kExitPass : kExitViolation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
