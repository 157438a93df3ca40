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

#ifndef SUBMAX_SUBMODULAR_H_
#define SUBMAX_SUBMODULAR_H_

#include <atomic>
#include <cstdint>
#include <span>
#include <vector>

#include "submax/matroid_core.h"
#include "submax/random.h"

namespace submax {

using FractionalPoint = std::vector<double>;

// Monotone submodular set function with an oracle-call counter.
// Value() costs one query, Marginal() and State::Gain() cost two.
class ValueOracle {
 public:
  enum class Kind { kCoverage, kFacility, kAdditive };

  // covers[e] lists universe items covered by e.
  static ValueOracle Coverage(std::vector<double> item_weights,
                              std::vector<std::vector<int>> covers);
  // similarity[e][c] >= 0; f(S) = sum_c max_{e in S} similarity[e][c].
  static ValueOracle Facility(std::vector<std::vector<double>> similarity);
  static ValueOracle Additive(std::vector<double> weights);

  ValueOracle(const ValueOracle& other);
  ValueOracle& operator=(const ValueOracle& other);
  ValueOracle(ValueOracle&& other) noexcept;
  ValueOracle& operator=(ValueOracle&& other) noexcept;

  Kind kind() const { return kind_; }
  int n() const { return n_; }
  const std::vector<double>& item_weights() const { return item_weights_; }
  const std::vector<std::vector<int>>& covers() const { return covers_; }
  const std::vector<std::vector<double>>& similarity() const {
    return similarity_;
  }
  const std::vector<double>& weights() const { return weights_; }

  double Value(std::span<const ElementId> set) const;
  double Marginal(ElementId e, std::span<const ElementId> set) const;

  uint64_t query_count() const { return queries_.load(); }
  void ResetQueryCount() const { queries_.store(0); }
  void ChargeQueries(uint64_t k) const { queries_.fetch_add(k); }

  // Incremental evaluation over a growing set. Adding is free; Value() and
  // Gain() are charged like the corresponding oracle calls.
  class State {
   public:
    explicit State(const ValueOracle* f);
    void Add(ElementId e);
    bool Contains(ElementId e) const { return member_[e]; }
    const std::vector<ElementId>& members() const { return members_; }
    void Clear();
    double Value() const;
    // f(R + e) - f(R - e) for the current set R.
    double Gain(ElementId e) const;
    double UncountedValue() const { return value_; }
    double UncountedGain(ElementId e) const;

   private:
    const ValueOracle* f_;
    std::vector<bool> member_;
    std::vector<ElementId> members_;
    double value_ = 0.0;
    std::vector<int> count_;          // coverage: items covered count
    std::vector<double> best1_;       // facility: best similarity per client
    std::vector<ElementId> best1_id_;
    std::vector<double> best2_;
  };

  State NewState() const { return State(this); }

 private:
  ValueOracle() = default;
  void CheckSet(std::span<const ElementId> set) const;

  Kind kind_ = Kind::kAdditive;
  int n_ = 0;
  std::vector<double> item_weights_;
  std::vector<std::vector<int>> covers_;
  std::vector<std::vector<double>> similarity_;
  std::vector<double> weights_;
  mutable std::atomic<uint64_t> queries_{0};
};

// Each e included independently with probability x[e].
std::vector<ElementId> SampleSet(const FractionalPoint& x, Rng& rng);

// s = ceil(c * eps^-1 * ln^2(n/eps)), at least 1.
int MultilinearSampleCount(int n, double epsilon, double c = 1.0);

// Mean of f(R + e) - f(R) over s draws of R ~ x restricted to N - e.
double EstimateMarginalOnPoint(const ValueOracle& f, ElementId e,
                               const FractionalPoint& x, double epsilon,
                               Rng& rng, double c = 1.0);

// Shared-sample estimator of the derivative of the multilinear extension of
// f(. | S0), for many elements at once. Each sample uses its own seed drawn
// from the caller's stream, so results do not depend on the thread count.
class MultilinearEstimator {
 public:
  MultilinearEstimator(const ValueOracle* f, std::vector<ElementId> s0,
                       int samples, int threads = 1);

  // out[i] = E_{R~y}[f(R + S0 + c_i) - f(R + S0 - c_i)].
  void Estimate(const FractionalPoint& y, std::span<const ElementId> cands,
                Rng& rng, std::vector<double>* out) const;
  int samples() const { return samples_; }

 private:
  const ValueOracle* f_;
  std::vector<ElementId> s0_;
  int samples_;
  int threads_;
};

}  // namespace submax

#endif  // SUBMAX_SUBMODULAR_H_
