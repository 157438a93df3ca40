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

#ifndef SUBMAX_INSTANCE_H_
#define SUBMAX_INSTANCE_H_

#include <cstdint>
#include <string>

#include "json.hpp"
#include "submax/matroid.h"
#include "submax/submodular.h"

namespace submax {

inline constexpr int kFormatVersion = 1;

struct Instance {
  Instance(Matroid m, ValueOracle f)
      : matroid(std::move(m)), function(std::move(f)) {}
  Matroid matroid;
  ValueOracle function;
};

nlohmann::json InstanceToJson(const Instance& instance);
// Throws DomainError on malformed or inconsistent input.
Instance InstanceFromJson(const nlohmann::json& j);
Instance LoadInstance(const std::string& path);
void SaveInstance(const Instance& instance, const std::string& path);

// FNV-1a over the canonical dump; ties result files to their instance.
std::string Fingerprint(const nlohmann::json& j);

const char* FunctionKindName(ValueOracle::Kind kind);
MatroidKind ParseMatroidKind(const std::string& s);
ValueOracle::Kind ParseFunctionKind(const std::string& s);

struct GenOptions {
  MatroidKind matroid = MatroidKind::kLaminar;
  ValueOracle::Kind function = ValueOracle::Kind::kCoverage;
  int n = 10;
  uint64_t seed = 1;
  // Laminar: internal tree depth and max children per internal node.
  int depth = 3;
  int branching = 3;
  // Graphic: average vertex degree; fixes the vertex count.
  double avg_degree = 3.0;
  // Transversal: max left degree, and right side size (0: n / 2).
  int degree = 3;
  int num_right = 0;
  // Coverage: universe size (0: 2n) and max items per element. Facility:
  // number of clients (0: n).
  int universe = 0;
  int cover_size = 3;
};

Instance GenerateInstance(const GenOptions& options);

}  // namespace submax

#endif  // SUBMAX_INSTANCE_H_
