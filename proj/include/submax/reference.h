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

// Slow exact algorithms used as test oracles. Nothing here shares code with
// the structures it checks.

#ifndef SUBMAX_REFERENCE_H_
#define SUBMAX_REFERENCE_H_

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "submax/matroid.h"
#include "submax/matroid_core.h"
#include "submax/submodular.h"

namespace submax::reference {

// Definition-level independence check. Duplicates and unknown ids are
// rejected.
bool FeasibilityVerify(std::span<const ElementId> set, const Matroid& matroid);

// Greedy max-weight basis with the repo tie-break, restricted to `available`
// when given. Sorted by id.
std::vector<ElementId> MatroidGreedyBasis(
    const std::vector<double>& weights, const Matroid& matroid,
    std::optional<std::span<const ElementId>> available = std::nullopt);

// Max-weight spanning forest by Kruskal, sorted by id.
std::vector<ElementId> KruskalForest(const GraphData& graph,
                                     const std::vector<double>& weights);

struct OptResult {
  std::vector<ElementId> set;
  double value = 0.0;
};

// Exact max of f over independent sets; only bases are enumerated since f
// is monotone. n <= 20.
OptResult BruteForceOpt(const ValueOracle& f, const Matroid& matroid);
// Plain 2^n scan, n <= 16.
OptResult BruteForceOptUnpruned(const ValueOracle& f, const Matroid& matroid);

struct MatchingResult {
  std::vector<int> mate_left;  // -1 if unmatched
  double weight = 0.0;
  int size = 0;
};

// Max-weight matching for edge weights w[l][k] on adjacency[l][k]; the
// Hungarian method on the square completion.
MatchingResult HungarianMaxWeight(const BipartiteGraph& graph,
                                  const std::vector<std::vector<double>>& w);
// Vertex-weighted form: every edge at l weighs left_weights[l].
MatchingResult HungarianVertexWeighted(const BipartiteGraph& graph,
                                       const std::vector<double>& left_weights);
// Hopcroft-Karp.
MatchingResult MaxCardinality(const BipartiteGraph& graph);
// Exhaustive search over all matchings; tiny graphs only.
MatchingResult ExhaustiveMaxWeight(const BipartiteGraph& graph,
                                   const std::vector<std::vector<double>>& w);

// F(x) by summing over all 2^n sets, n <= 20.
double ExactMultilinear(const ValueOracle& f, const FractionalPoint& x);

}  // namespace submax::reference

#endif  // SUBMAX_REFERENCE_H_
