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

#ifndef SUBMAX_CLI_OPS_H_
#define SUBMAX_CLI_OPS_H_

#include <string>
#include <vector>

#include "json.hpp"
#include "submax/instance.h"
#include "submax/optimizer.h"

namespace submax {

// Exit codes shared by the tool and its tests.
inline constexpr int kExitPass = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitUsage = 2;

struct RunOptions {
  std::string algorithm = "full";  // full | greedy | brute
  OptimizerConfig config;
  bool timing = false;
};

// Result record for one run. Byte-stable for a fixed seed and config unless
// timing is on.
nlohmann::json RunInstance(const Instance& instance, const RunOptions& options);

// Query and operation budgets with the repo constant 8. log is natural and
// clamped below at 1 so that rank-1 instances keep a non-zero budget.
struct Budgets {
  double phase1_queries = 0.0;
  double phase2_queries = 0.0;
  double dt_incremental_ops = 0.0;
  double batch_inserts = 0.0;
};
Budgets ComputeBudgets(int n, int rank, double epsilon);
// Names of the budgets the counters exceed.
std::vector<std::string> BudgetViolations(const nlohmann::json& counters,
                                          const Budgets& budgets);

struct VerifyReport {
  bool ok = true;
  std::vector<std::string> failures;
  nlohmann::json details;
};

VerifyReport VerifyResult(const Instance& instance,
                          const nlohmann::json& result);

}  // namespace submax

#endif  // SUBMAX_CLI_OPS_H_
