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

#include "submax/sampler.h"

#include <algorithm>

namespace submax {

BucketLists::BucketLists(int n, std::vector<double> class_values)
    : values_(std::move(class_values)),
      lists_(values_.size()),
      class_(n, -1),
      pos_(n, -1) {
  for (size_t j = 1; j < values_.size(); ++j) {
    if (!(values_[j] < values_[j - 1])) {
      throw DomainError("class values must strictly decrease");
    }
  }
}

void BucketLists::Add(ElementId e, int j) {
  if (e < 0 || e >= static_cast<ElementId>(class_.size())) {
    throw DomainError("unknown element");
  }
  if (class_[e] >= 0) throw DomainError("element already present");
  if (j < 0 || j >= num_classes()) throw DomainError("class out of range");
  class_[e] = j;
  pos_[e] = static_cast<int>(lists_[j].size());
  lists_[j].push_back(e);
  ++size_;
  total_ += values_[j];
}

void BucketLists::Unlink(ElementId e) {
  auto& list = lists_[class_[e]];
  const int p = pos_[e];
  const ElementId last = list.back();
  list[p] = last;
  pos_[last] = p;
  list.pop_back();
}

void BucketLists::Remove(ElementId e) {
  if (e < 0 || e >= static_cast<ElementId>(class_.size()) || class_[e] < 0) {
    throw DomainError("element not present");
  }
  Unlink(e);
  total_ -= values_[class_[e]];
  class_[e] = -1;
  pos_[e] = -1;
  --size_;
  if (size_ == 0) total_ = 0.0;
}

void BucketLists::DecrementMove(ElementId e, int j) {
  if (e < 0 || e >= static_cast<ElementId>(class_.size()) || class_[e] < 0) {
    throw DomainError("element not present");
  }
  if (j <= class_[e] || j >= num_classes()) {
    throw DomainError("decrement must move to a lower-valued class");
  }
  Unlink(e);
  total_ += values_[j] - values_[class_[e]];
  class_[e] = j;
  pos_[e] = static_cast<int>(lists_[j].size());
  lists_[j].push_back(e);
}

double BucketLists::RecomputeTotal() const {
  double total = 0.0;
  for (size_t j = 0; j < lists_.size(); ++j) {
    total += static_cast<double>(lists_[j].size()) * values_[j];
  }
  return total;
}

double BucketLists::InclusionProbability(ElementId e, double t) const {
  if (class_[e] < 0 || total_ <= 0.0) return 0.0;
  return std::min(1.0, t * values_[class_[e]] / total_);
}

std::vector<ElementId> BucketLists::Sample(double t, Rng& rng) {
  std::vector<ElementId> out;
  if (size_ == 0 || total_ <= 0.0) return out;
  for (size_t j = 0; j < lists_.size(); ++j) {
    auto& list = lists_[j];
    if (list.empty()) continue;
    const double p = std::min(1.0, t * values_[j] / total_);
    if (p >= 1.0) {
      out.insert(out.end(), list.begin(), list.end());
      continue;
    }
    const int64_t size = static_cast<int64_t>(list.size());
    const int64_t k = Binomial(rng, size, p);
    // Partial Fisher-Yates: the first k slots become a uniform k-subset.
    for (int64_t i = 0; i < k; ++i) {
      const int64_t r = i + static_cast<int64_t>(UniformIndex(rng, size - i));
      std::swap(list[i], list[r]);
      pos_[list[i]] = static_cast<int>(i);
      pos_[list[r]] = static_cast<int>(r);
      out.push_back(list[i]);
    }
  }
  return out;
}

ElementId BucketLists::UniformSample(Rng& rng) const {
  if (size_ == 0) throw DomainError("uniform sample from an empty set");
  // Bucket chosen with probability |L_j| / size, then uniform inside it.
  uint64_t u = UniformIndex(rng, static_cast<uint64_t>(size_));
  for (const auto& list : lists_) {
    if (u < list.size()) {
      return list[UniformIndex(rng, list.size())];
    }
    u -= list.size();
  }
  return kNone;  // unreachable
}

std::vector<double> ClassValues(const WeightClassifier& classifier) {
  std::vector<double> v(classifier.num_classes() + 1);
  for (int j = 0; j <= classifier.num_classes(); ++j) {
    v[j] = classifier.ClassValue(j);
  }
  return v;
}

SampledOracle::SampledOracle(std::unique_ptr<DynamicBasis> basis,
                             const WeightClassifier* classifier,
                             std::vector<int> initial_classes)
    : basis_(std::move(basis)),
      classifier_(classifier),
      buckets_(static_cast<int>(initial_classes.size()),
               ClassValues(*classifier)),
      class_(std::move(initial_classes)),
      frozen_(class_.size(), false) {
  for (ElementId e : basis_->Basis()) buckets_.Add(e, class_[e]);
}

void SampledOracle::Apply(const OracleChanges& changes) {
  for (ElementId e : changes.removed) {
    if (!frozen_[e] && buckets_.Contains(e)) buckets_.Remove(e);
  }
  for (ElementId e : changes.added) {
    if (!frozen_[e] && !buckets_.Contains(e)) buckets_.Add(e, class_[e]);
  }
}

void SampledOracle::Decrement(ElementId e, int j) {
  if (frozen_[e]) throw DomainError("decrement of a frozen element");
  if (j <= class_[e]) throw DomainError("class must strictly drop");
  const bool was_in = buckets_.Contains(e);
  class_[e] = j;
  ++oracle_ops_;
  OracleChanges changes = basis_->Decrement(e, classifier_->ClassValue(j));
  const bool removed = std::find(changes.removed.begin(), changes.removed.end(),
                                 e) != changes.removed.end();
  if (was_in && !removed) buckets_.DecrementMove(e, j);
  Apply(changes);
}

void SampledOracle::Freeze(ElementId e) {
  if (frozen_[e]) throw DomainError("element already frozen");
  if (!buckets_.Contains(e)) throw DomainError("freeze of a non-basis element");
  buckets_.Remove(e);
  frozen_[e] = true;
  frozen_weight_ += classifier_->ClassValue(class_[e]);
  ++oracle_ops_;
  Apply(basis_->Freeze(e));
}

}  // namespace submax
