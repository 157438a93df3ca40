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

#ifndef SUBMAX_SAMPLER_H_
#define SUBMAX_SAMPLER_H_

#include <memory>
#include <vector>

#include "submax/matroid_core.h"
#include "submax/random.h"

namespace submax {

// One list per weight class over the non-frozen part of the basis.
class BucketLists {
 public:
  // class_values[j] is the rounded weight of class j; values must strictly
  // decrease with j.
  BucketLists(int n, std::vector<double> class_values);

  void Add(ElementId e, int j);
  void Remove(ElementId e);
  // Moves e to class j, which must have a strictly lower value.
  void DecrementMove(ElementId e, int j);

  // Includes e with marginal probability min(1, t * value(e) / Total()).
  std::vector<ElementId> Sample(double t, Rng& rng);
  ElementId UniformSample(Rng& rng) const;

  bool Contains(ElementId e) const { return class_[e] >= 0; }
  int ClassOf(ElementId e) const { return class_[e]; }
  int size() const { return size_; }
  double Total() const { return total_; }
  double RecomputeTotal() const;
  double InclusionProbability(ElementId e, double t) const;
  int num_classes() const { return static_cast<int>(values_.size()); }
  const std::vector<ElementId>& bucket(int j) const { return lists_[j]; }

 private:
  void Unlink(ElementId e);

  std::vector<double> values_;
  std::vector<std::vector<ElementId>> lists_;
  std::vector<int> class_;
  std::vector<int> pos_;
  int size_ = 0;
  double total_ = 0.0;
};

// A dynamic basis structure paired with bucket lists over B \ S, driven by
// weight classes. This is the oracle the first phase talks to.
class SampledOracle {
 public:
  // Builds the inner structure's view from the initial classes.
  SampledOracle(std::unique_ptr<DynamicBasis> basis,
                const WeightClassifier* classifier,
                std::vector<int> initial_classes);

  // Moves e to the strictly lower-valued class j.
  void Decrement(ElementId e, int j);
  void Freeze(ElementId e);

  double ApproxBaseWeight() const { return buckets_.Total() + frozen_weight_; }
  std::vector<ElementId> Sample(double t, Rng& rng) {
    return buckets_.Sample(t, rng);
  }
  ElementId UniformSample(Rng& rng) const {
    return buckets_.UniformSample(rng);
  }
  double InclusionProbability(ElementId e, double t) const {
    return buckets_.InclusionProbability(e, t);
  }

  int ClassOf(ElementId e) const { return class_[e]; }
  bool IsFrozen(ElementId e) const { return frozen_[e]; }
  bool InBasis(ElementId e) const { return basis_->InBasis(e); }
  int unfrozen_size() const { return buckets_.size(); }
  const BucketLists& buckets() const { return buckets_; }
  const DynamicBasis& basis() const { return *basis_; }
  uint64_t oracle_ops() const { return oracle_ops_; }

 private:
  void Apply(const OracleChanges& changes);

  std::unique_ptr<DynamicBasis> basis_;
  const WeightClassifier* classifier_;
  BucketLists buckets_;
  std::vector<int> class_;
  std::vector<bool> frozen_;
  double frozen_weight_ = 0.0;
  uint64_t oracle_ops_ = 0;
};

std::vector<double> ClassValues(const WeightClassifier& classifier);

}  // namespace submax

#endif  // SUBMAX_SAMPLER_H_
