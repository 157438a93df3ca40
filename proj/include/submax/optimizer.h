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

// Two-phase maximization of a monotone submodular function over a matroid:
// a sampled greedy that freezes a small partial solution S0, then continuous
// greedy on f(. | S0) over the contracted matroid, then swap rounding.

#ifndef SUBMAX_OPTIMIZER_H_
#define SUBMAX_OPTIMIZER_H_

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "submax/matroid.h"
#include "submax/random.h"
#include "submax/rounding.h"
#include "submax/submodular.h"

namespace submax {

// Named rng streams derived from the master seed.
inline constexpr uint64_t kPhase1Stream = 1;
inline constexpr uint64_t kMultilinearStream = 2;
inline constexpr uint64_t kRoundingStream = 3;

enum class DtVariant { kAuto, kIncremental, kApprox };

struct OptimizerConfig {
  double epsilon = 0.2;
  uint64_t seed = 1;
  int threads = 1;
  // Phase 1 loops while ApproxBaseWeight >= phase1_threshold / eps' * M,
  // with eps' = eps / 4.
  double phase1_threshold = 50.0;
  // Sample(t) with t = sample_constant * ln n.
  double sample_constant = 128.0;
  // Gate on the estimated weight of stale samples instead of their count.
  bool weight_gate = false;
  bool run_phase1 = true;
  // s = multilinear_constant * ln^2(n/eps) / eps samples per estimate.
  double multilinear_constant = 1.0;
  DtVariant variant = DtVariant::kAuto;
  // Jumps straight to the next threshold that has a candidate.
  bool skip_empty_levels = true;
  bool verify_rounding = false;
};

// Flat counter map; key names are part of the result file format.
using Counters = std::map<std::string, uint64_t>;

struct Phase1Result {
  std::vector<ElementId> s;
  double exit_weight = 0.0;
  double threshold = 0.0;
};

// Runs with the given epsilon (the pipeline passes eps / 4). m must be a
// constant-factor estimate of f(OPT).
Phase1Result LazySamplingGreedyPlus(const ValueOracle& f,
                                    const Matroid& matroid, double epsilon,
                                    double m, Rng& rng,
                                    const OptimizerConfig& config,
                                    Counters* counters);

// Shared state of one continuous greedy round: marginals of
// g(T) = F(x + alpha 1_T) estimated with fresh samples.
class RoundMarginals {
 public:
  RoundMarginals(const MultilinearEstimator* estimator,
                 const FractionalPoint* x, double alpha, Rng* rng);

  // Estimates every element of cands whose estimate predates the last
  // AddToBasis.
  void Refresh(std::span<const ElementId> cands);
  double estimate(ElementId e) const { return est_[e]; }
  void AddToBasis(ElementId e);
  uint64_t estimates() const { return estimates_; }

 private:
  const MultilinearEstimator* estimator_;
  const FractionalPoint* x_;
  double alpha_;
  Rng* rng_;
  FractionalPoint y_;
  std::vector<double> est_;
  std::vector<int64_t> stamp_;
  int64_t version_ = 0;
  uint64_t estimates_ = 0;
};

// Descending thresholds with an incremental independence oracle; elements
// that fail Test are dropped for the rest of the call.
std::vector<ElementId> DtIncremental(RoundMarginals& g,
                                     const ContractedMatroid& m,
                                     double epsilon, double floor,
                                     bool skip_empty, Counters* counters);

// Descending thresholds over the decremental matching structure; transversal
// matroids only.
std::vector<ElementId> DtApproxIndepSet(RoundMarginals& g,
                                        const ContractedMatroid& m,
                                        double epsilon, double floor,
                                        bool skip_empty, Counters* counters);

// ceil(1/eps) rounds of weight 1/ceil(1/eps). Each round's set is completed
// to a basis of m before it enters the combination.
FractionalSolution ContinuousGreedy(const ValueOracle& f,
                                    const ContractedMatroid& m, double epsilon,
                                    double opt_estimate, Rng& rng,
                                    const OptimizerConfig& config,
                                    Counters* counters);

// Lazy greedy over m starting from S0. Returns the added elements.
std::vector<ElementId> GreedyBaseline(const ValueOracle& f,
                                      const ContractedMatroid& m);

struct PipelineResult {
  std::vector<ElementId> solution;
  std::vector<ElementId> s0;
  std::vector<ElementId> s1;
  double value = 0.0;
  double opt_estimate = 0.0;
  int rank = 0;
  FractionalSolution fractional;
  Phase1Result phase1;
  Counters counters;
};

PipelineResult RunPipeline(const ValueOracle& f, const Matroid& matroid,
                           const OptimizerConfig& config);

DtVariant ResolveVariant(DtVariant v, MatroidKind kind);

}  // namespace submax

#endif  // SUBMAX_OPTIMIZER_H_
