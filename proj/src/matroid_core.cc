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

#include "submax/matroid_core.h"

#include <algorithm>
#include <cmath>
#include <queue>

#include "submax/matroid.h"
#include "submax/random.h"
#include "submax/submodular.h"

namespace submax {

OracleChanges Compose(const OracleChanges& first, const OracleChanges& second) {
  OracleChanges out;
  auto contains = [](const std::vector<ElementId>& v, ElementId e) {
    return std::find(v.begin(), v.end(), e) != v.end();
  };
  for (ElementId e : first.added) {
    if (!contains(second.removed, e)) out.added.push_back(e);
  }
  for (ElementId e : second.added) {
    if (!contains(first.removed, e)) out.added.push_back(e);
  }
  for (ElementId e : first.removed) {
    if (!contains(second.added, e)) out.removed.push_back(e);
  }
  for (ElementId e : second.removed) {
    if (!contains(first.added, e)) out.removed.push_back(e);
  }
  return out;
}

WeightClassifier::WeightClassifier(double m, double epsilon, int rank)
    : m_(m), epsilon_(epsilon), rank_(rank) {
  if (!(m > 0.0)) throw DomainError("classifier needs M > 0");
  if (!(epsilon > 0.0 && epsilon < 1.0)) {
    throw DomainError("classifier needs epsilon in (0, 1)");
  }
  if (rank < 1) throw DomainError("classifier needs rank >= 1");
  const double ratio = std::log(epsilon / rank) / std::log(1.0 - epsilon);
  num_classes_ = std::max(1, static_cast<int>(std::ceil(10.0 * ratio)));
  bottom_threshold_ = epsilon * m / (10.0 * rank);
}

int WeightClassifier::WeightClass(double w) const {
  if (w < 0.0 || std::isnan(w)) throw DomainError("negative weight");
  if (w <= bottom_threshold_) return num_classes_;
  if (w >= m_) return 0;
  int j = static_cast<int>(
      std::ceil(std::log(w / m_) / std::log(1.0 - epsilon_)));
  j = std::clamp(j, 0, num_classes_ - 1);
  // Repair floating error at class boundaries.
  while (j > 0 && ClassValue(j - 1) <= w) --j;
  while (j < num_classes_ - 1 && ClassValue(j) > w) ++j;
  return j;
}

double WeightClassifier::ClassValue(int j) const {
  if (j < 0 || j > num_classes_) throw DomainError("class out of range");
  if (j == num_classes_) return 0.0;
  return m_ * std::pow(1.0 - epsilon_, j);
}

double EstimateOpt(const ValueOracle& f, const Matroid& matroid) {
  const int n = matroid.n();
  if (n == 0) throw DomainError("empty ground set");
  auto indep = matroid.NewIncremental();
  ValueOracle::State state = f.NewState();
  // Max-heap of stale upper bounds.
  std::priority_queue<std::pair<double, ElementId>> heap;
  for (ElementId e = 0; e < n; ++e) heap.push({state.Gain(e), -e});
  std::vector<int> stamp(n, 0);
  int round = 0;
  while (!heap.empty()) {
    auto [bound, neg] = heap.top();
    heap.pop();
    const ElementId e = -neg;
    if (!indep->Test(e)) continue;
    if (stamp[e] != round) {
      stamp[e] = round;
      heap.push({state.Gain(e), neg});
      continue;
    }
    indep->Insert(e);
    state.Add(e);
    ++round;
  }
  return state.UncountedValue();
}

int64_t Binomial(Rng& rng, int64_t n, double p) {
  if (n <= 0 || p <= 0.0) return 0;
  if (p >= 1.0) return n;
  if (n <= 64) {
    // Inverse transform on the CDF.
    const double q = 1.0 - p;
    const double u = UniformDouble(rng);
    double prob = std::pow(q, static_cast<double>(n));
    double cdf = prob;
    int64_t k = 0;
    while (u >= cdf && k < n) {
      prob *= (static_cast<double>(n - k) / static_cast<double>(k + 1)) *
              (p / q);
      ++k;
      cdf += prob;
    }
    return k;
  }
  // Waiting-time method: count geometric gaps that fit into n trials.
  const double log_q = std::log1p(-p);
  int64_t count = 0;
  int64_t position = 0;
  while (true) {
    const double u = 1.0 - UniformDouble(rng);  // (0, 1]
    position += static_cast<int64_t>(std::floor(std::log(u) / log_q)) + 1;
    if (position > n) return count;
    ++count;
  }
}

}  // namespace submax
