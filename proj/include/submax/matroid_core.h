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

// Shared vocabulary: element ids, the weight classifier, change records and
// the dynamic approximate-basis contract used by the first phase.

#ifndef SUBMAX_MATROID_CORE_H_
#define SUBMAX_MATROID_CORE_H_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace submax {

using ElementId = int32_t;
inline constexpr ElementId kNone = -1;

class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Repo-wide total order: larger weight first, smaller id on ties.
inline bool Heavier(double wa, ElementId a, double wb, ElementId b) {
  if (wa != wb) return wa > wb;
  return a < b;
}

struct OracleChanges {
  std::vector<ElementId> added;
  std::vector<ElementId> removed;

  bool empty() const { return added.empty() && removed.empty(); }
};

// Net effect of applying `first` and then `second`.
OracleChanges Compose(const OracleChanges& first, const OracleChanges& second);

// Geometric weight classes (1-eps)^j * M. Classes are rounded down: class j
// holds weights in [(1-eps)^j M, (1-eps)^(j-1) M), class 0 absorbs everything
// at or above M, and the bottom class num_classes() holds weights at or below
// eps*M/(10r) and has value 0.
class WeightClassifier {
 public:
  WeightClassifier(double m, double epsilon, int rank);

  int WeightClass(double w) const;
  double ClassValue(int j) const;

  double m() const { return m_; }
  double epsilon() const { return epsilon_; }
  int rank() const { return rank_; }
  int num_classes() const { return num_classes_; }
  int bottom() const { return num_classes_; }
  double bottom_threshold() const { return bottom_threshold_; }

 private:
  double m_;
  double epsilon_;
  int rank_;
  int num_classes_;
  double bottom_threshold_;
};

// A structure maintaining an approximately maximum-weight independent set B
// under weight decrements, with a growing frozen set S ⊆ B.
class DynamicBasis {
 public:
  virtual ~DynamicBasis() = default;
  virtual OracleChanges Freeze(ElementId e) = 0;
  virtual OracleChanges Decrement(ElementId e, double w) = 0;
  virtual bool InBasis(ElementId e) const = 0;
  virtual std::vector<ElementId> Basis() const = 0;
};

class ValueOracle;
class Matroid;

// Lazy greedy restricted to rank steps; a 1/2-approximation of f(OPT).
double EstimateOpt(const ValueOracle& f, const Matroid& matroid);

}  // namespace submax

#endif  // SUBMAX_MATROID_CORE_H_
