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

#include <algorithm>
#include <chrono>
#include <cmath>

#include "submax/reference.h"

namespace submax {
namespace {

using nlohmann::json;

const char* VariantName(DtVariant v) {
  switch (v) {
    case DtVariant::kAuto:
      return "auto";
    case DtVariant::kIncremental:
      return "incremental";
    case DtVariant::kApprox:
      return "approx";
  }
  return "auto";
}

json ConfigJson(const RunOptions& o) {
  const OptimizerConfig& c = o.config;
  return json{{"algorithm", o.algorithm},
              {"epsilon", c.epsilon},
              {"threads", c.threads},
              {"phase1_threshold", c.phase1_threshold},
              {"sample_constant", c.sample_constant},
              {"weight_gate", c.weight_gate},
              {"run_phase1", c.run_phase1},
              {"multilinear_constant", c.multilinear_constant},
              {"variant", VariantName(c.variant)},
              {"skip_empty_levels", c.skip_empty_levels},
              {"verify_rounding", c.verify_rounding}};
}

double Value(const ValueOracle& f, const std::vector<ElementId>& set) {
  ValueOracle::State st = f.NewState();
  for (ElementId e : set) st.Add(e);
  return st.UncountedValue();
}

double LogAtLeastOne(double x) { return std::max(1.0, std::log(x)); }

}  // namespace

json RunInstance(const Instance& instance, const RunOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const ValueOracle& f = instance.function;
  const Matroid& m = instance.matroid;
  const uint64_t seed = options.config.seed;
  json r;
  r["version"] = kFormatVersion;
  r["instance_fingerprint"] = Fingerprint(InstanceToJson(instance));
  r["n"] = m.n();
  r["seed"] = seed;
  r["sub_seeds"] = {{"phase1", MixSeed(seed, kPhase1Stream)},
                    {"multilinear", MixSeed(seed, kMultilinearStream)},
                    {"rounding", MixSeed(seed, kRoundingStream)}};
  r["config"] = ConfigJson(options);
  const uint64_t q0 = f.query_count();
  std::vector<ElementId> solution;
  if (options.algorithm == "full") {
    const PipelineResult p = RunPipeline(f, m, options.config);
    solution = p.solution;
    r["s0"] = p.s0;
    r["rank"] = p.rank;
    r["opt_estimate"] = p.opt_estimate;
    r["phase1"] = {{"exit_weight", p.phase1.exit_weight},
                   {"threshold", p.phase1.threshold}};
    r["counters"] = p.counters;
  } else if (options.algorithm == "greedy") {
    const ContractedMatroid whole(&m, {});
    solution = GreedyBaseline(f, whole);
    r["rank"] = whole.Rank();
    r["counters"] = json::object();
  } else if (options.algorithm == "brute") {
    solution = reference::BruteForceOpt(f, m).set;
    std::sort(solution.begin(), solution.end());
    r["rank"] = m.Rank();
    r["counters"] = json::object();
  } else {
    throw DomainError("unknown algorithm: " + options.algorithm);
  }
  r["counters"]["f_queries.total"] = f.query_count() - q0;
  r["solution"] = solution;
  r["value"] = Value(f, solution);
  if (options.timing) {
    r["wall_time_ms"] = std::chrono::duration<double, std::milli>(
                            std::chrono::steady_clock::now() - start)
                            .count();
  }
  return r;
}

Budgets ComputeBudgets(int n, int rank, double epsilon) {
  Budgets b;
  const double r = std::max(1, rank);
  const double l2 = LogAtLeastOne(n / epsilon);
  b.phase1_queries = 8.0 * n / epsilon * LogAtLeastOne(r / epsilon);
  b.phase2_queries = 8.0 * n * std::pow(epsilon, -5.0) * l2 * l2;
  b.dt_incremental_ops = 8.0 * n / epsilon;
  b.batch_inserts = 8.0 / epsilon * LogAtLeastOne(r);
  return b;
}

std::vector<std::string> BudgetViolations(const json& counters,
                                          const Budgets& budgets) {
  auto get = [&](const char* key) -> double {
    return counters.contains(key) ? counters.at(key).get<double>() : 0.0;
  };
  std::vector<std::string> out;
  if (get("f_queries.phase1") > budgets.phase1_queries) {
    out.push_back("phase1_queries");
  }
  if (get("f_queries.phase2") > budgets.phase2_queries) {
    out.push_back("phase2_queries");
  }
  if (get("dt.tests") + get("dt.inserts") > budgets.dt_incremental_ops) {
    out.push_back("dt_incremental_ops");
  }
  if (get("dt.batch_inserts") > budgets.batch_inserts) {
    out.push_back("batch_inserts");
  }
  return out;
}

VerifyReport VerifyResult(const Instance& instance, const json& result) {
  VerifyReport rep;
  auto fail = [&](std::string why) {
    rep.ok = false;
    rep.failures.push_back(std::move(why));
  };
  const Matroid& m = instance.matroid;
  const std::string fp = Fingerprint(InstanceToJson(instance));
  if (!result.contains("instance_fingerprint") ||
      result.at("instance_fingerprint") != fp) {
    fail("instance_mismatch");
    return rep;
  }
  std::vector<ElementId> solution;
  try {
    solution = result.at("solution").get<std::vector<ElementId>>();
  } catch (const nlohmann::json::exception&) {
    fail("malformed_solution");
    return rep;
  }
  std::sort(solution.begin(), solution.end());
  const bool feasible = reference::FeasibilityVerify(solution, m);
  if (!feasible) fail("feasibility");
  rep.details["feasible"] = feasible;
  if (feasible) {
    const double value = Value(instance.function, solution);
    rep.details["value"] = value;
    const double recorded = result.value("value", -1.0);
    if (std::abs(value - recorded) > 1e-9 * std::max(1.0, std::abs(value))) {
      fail("value_mismatch");
    }
  }
  if (result.contains("s0")) {
    for (ElementId e : result.at("s0").get<std::vector<ElementId>>()) {
      if (!std::binary_search(solution.begin(), solution.end(), e)) {
        fail("s0_not_in_solution");
        break;
      }
    }
  }
  const json& config = result.at("config");
  if (config.value("algorithm", "") == "full" && result.contains("counters")) {
    const double eps = config.value("epsilon", 0.0);
    const Budgets b = ComputeBudgets(m.n(), m.Rank(), eps);
    rep.details["budgets"] = {{"phase1_queries", b.phase1_queries},
                              {"phase2_queries", b.phase2_queries},
                              {"dt_incremental_ops", b.dt_incremental_ops},
                              {"batch_inserts", b.batch_inserts}};
    for (const std::string& name :
         BudgetViolations(result.at("counters"), b)) {
      fail("budget:" + name);
    }
  }
  return rep;
}

}  // namespace submax
