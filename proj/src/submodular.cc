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

#include "submax/submodular.h"

#include <algorithm>
#include <cmath>
#include <thread>

namespace submax {

ValueOracle ValueOracle::Coverage(std::vector<double> item_weights,
                                  std::vector<std::vector<int>> covers) {
  for (double w : item_weights) {
    if (!(w >= 0.0)) throw DomainError("negative item weight");
  }
  for (auto& c : covers) {
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
    for (int item : c) {
      if (item < 0 || item >= static_cast<int>(item_weights.size())) {
        throw DomainError("covered item out of range");
      }
    }
  }
  ValueOracle f;
  f.kind_ = Kind::kCoverage;
  f.n_ = static_cast<int>(covers.size());
  f.item_weights_ = std::move(item_weights);
  f.covers_ = std::move(covers);
  return f;
}

ValueOracle ValueOracle::Facility(
    std::vector<std::vector<double>> similarity) {
  const size_t clients = similarity.empty() ? 0 : similarity[0].size();
  for (const auto& row : similarity) {
    if (row.size() != clients) throw DomainError("ragged similarity matrix");
    for (double s : row) {
      if (!(s >= 0.0)) throw DomainError("negative similarity");
    }
  }
  ValueOracle f;
  f.kind_ = Kind::kFacility;
  f.n_ = static_cast<int>(similarity.size());
  f.similarity_ = std::move(similarity);
  return f;
}

ValueOracle ValueOracle::Additive(std::vector<double> weights) {
  for (double w : weights) {
    if (!(w >= 0.0)) throw DomainError("negative weight");
  }
  ValueOracle f;
  f.kind_ = Kind::kAdditive;
  f.n_ = static_cast<int>(weights.size());
  f.weights_ = std::move(weights);
  return f;
}

ValueOracle::ValueOracle(const ValueOracle& other)
    : kind_(other.kind_),
      n_(other.n_),
      item_weights_(other.item_weights_),
      covers_(other.covers_),
      similarity_(other.similarity_),
      weights_(other.weights_),
      queries_(other.queries_.load()) {}

ValueOracle& ValueOracle::operator=(const ValueOracle& other) {
  if (this == &other) return *this;
  kind_ = other.kind_;
  n_ = other.n_;
  item_weights_ = other.item_weights_;
  covers_ = other.covers_;
  similarity_ = other.similarity_;
  weights_ = other.weights_;
  queries_.store(other.queries_.load());
  return *this;
}

ValueOracle::ValueOracle(ValueOracle&& other) noexcept
    : kind_(other.kind_),
      n_(other.n_),
      item_weights_(std::move(other.item_weights_)),
      covers_(std::move(other.covers_)),
      similarity_(std::move(other.similarity_)),
      weights_(std::move(other.weights_)),
      queries_(other.queries_.load()) {}

ValueOracle& ValueOracle::operator=(ValueOracle&& other) noexcept {
  kind_ = other.kind_;
  n_ = other.n_;
  item_weights_ = std::move(other.item_weights_);
  covers_ = std::move(other.covers_);
  similarity_ = std::move(other.similarity_);
  weights_ = std::move(other.weights_);
  queries_.store(other.queries_.load());
  return *this;
}

void ValueOracle::CheckSet(std::span<const ElementId> set) const {
  for (ElementId e : set) {
    if (e < 0 || e >= n_) throw DomainError("unknown element");
  }
}

double ValueOracle::Value(std::span<const ElementId> set) const {
  CheckSet(set);
  State s(this);
  for (ElementId e : set) {
    if (!s.Contains(e)) s.Add(e);
  }
  return s.Value();
}

double ValueOracle::Marginal(ElementId e,
                             std::span<const ElementId> set) const {
  CheckSet(set);
  if (e < 0 || e >= n_) throw DomainError("unknown element");
  State s(this);
  for (ElementId x : set) {
    if (x == e) throw DomainError("marginal of an element already in S");
    if (!s.Contains(x)) s.Add(x);
  }
  return s.Gain(e);
}

ValueOracle::State::State(const ValueOracle* f)
    : f_(f), member_(f->n_, false) {
  switch (f->kind_) {
    case Kind::kCoverage:
      count_.assign(f->item_weights_.size(), 0);
      break;
    case Kind::kFacility: {
      const size_t clients =
          f->similarity_.empty() ? 0 : f->similarity_[0].size();
      best1_.assign(clients, 0.0);
      best1_id_.assign(clients, kNone);
      best2_.assign(clients, 0.0);
      break;
    }
    case Kind::kAdditive:
      break;
  }
}

void ValueOracle::State::Clear() {
  for (ElementId e : members_) member_[e] = false;
  members_.clear();
  value_ = 0.0;
  std::fill(count_.begin(), count_.end(), 0);
  std::fill(best1_.begin(), best1_.end(), 0.0);
  std::fill(best1_id_.begin(), best1_id_.end(), kNone);
  std::fill(best2_.begin(), best2_.end(), 0.0);
}

void ValueOracle::State::Add(ElementId e) {
  if (member_[e]) throw DomainError("element already in state");
  member_[e] = true;
  members_.push_back(e);
  switch (f_->kind_) {
    case Kind::kCoverage:
      for (int item : f_->covers_[e]) {
        if (count_[item]++ == 0) value_ += f_->item_weights_[item];
      }
      break;
    case Kind::kFacility: {
      const auto& row = f_->similarity_[e];
      for (size_t c = 0; c < row.size(); ++c) {
        const double s = row[c];
        if (s > best1_[c]) {
          value_ += s - best1_[c];
          best2_[c] = best1_[c];
          best1_[c] = s;
          best1_id_[c] = e;
        } else if (s > best2_[c]) {
          best2_[c] = s;
        }
      }
      break;
    }
    case Kind::kAdditive:
      value_ += f_->weights_[e];
      break;
  }
}

double ValueOracle::State::Value() const {
  f_->ChargeQueries(1);
  return value_;
}

double ValueOracle::State::Gain(ElementId e) const {
  f_->ChargeQueries(2);
  return UncountedGain(e);
}

double ValueOracle::State::UncountedGain(ElementId e) const {
  const bool in = member_[e];
  double gain = 0.0;
  switch (f_->kind_) {
    case Kind::kCoverage:
      for (int item : f_->covers_[e]) {
        if (count_[item] == (in ? 1 : 0)) gain += f_->item_weights_[item];
      }
      break;
    case Kind::kFacility: {
      const auto& row = f_->similarity_[e];
      for (size_t c = 0; c < row.size(); ++c) {
        if (in) {
          if (best1_id_[c] == e) gain += best1_[c] - best2_[c];
        } else if (row[c] > best1_[c]) {
          gain += row[c] - best1_[c];
        }
      }
      break;
    }
    case Kind::kAdditive:
      gain = f_->weights_[e];
      break;
  }
  return gain;
}

std::vector<ElementId> SampleSet(const FractionalPoint& x, Rng& rng) {
  std::vector<ElementId> out;
  for (size_t e = 0; e < x.size(); ++e) {
    if (x[e] >= 1.0 || (x[e] > 0.0 && UniformDouble(rng) < x[e])) {
      out.push_back(static_cast<ElementId>(e));
    }
  }
  return out;
}

int MultilinearSampleCount(int n, double epsilon, double c) {
  const double l = std::log(std::max(1.0, n / epsilon));
  return std::max(1, static_cast<int>(std::ceil(c * l * l / epsilon)));
}

double EstimateMarginalOnPoint(const ValueOracle& f, ElementId e,
                               const FractionalPoint& x, double epsilon,
                               Rng& rng, double c) {
  if (e < 0 || e >= f.n()) throw DomainError("unknown element");
  if (static_cast<int>(x.size()) != f.n()) {
    throw DomainError("point dimension mismatch");
  }
  const int s = MultilinearSampleCount(f.n(), epsilon, c);
  ValueOracle::State state = f.NewState();
  double sum = 0.0;
  for (int k = 0; k < s; ++k) {
    state.Clear();
    for (size_t i = 0; i < x.size(); ++i) {
      if (static_cast<ElementId>(i) == e) continue;
      if (x[i] >= 1.0 || (x[i] > 0.0 && UniformDouble(rng) < x[i])) {
        state.Add(static_cast<ElementId>(i));
      }
    }
    sum += state.Gain(e);
  }
  return sum / s;
}

MultilinearEstimator::MultilinearEstimator(const ValueOracle* f,
                                           std::vector<ElementId> s0,
                                           int samples, int threads)
    : f_(f),
      s0_(std::move(s0)),
      samples_(std::max(1, samples)),
      threads_(std::max(1, threads)) {}

void MultilinearEstimator::Estimate(const FractionalPoint& y,
                                    std::span<const ElementId> cands,
                                    Rng& rng, std::vector<double>* out) const {
  const size_t m = cands.size();
  out->assign(m, 0.0);
  if (m == 0) return;
  std::vector<uint64_t> seeds(samples_);
  for (auto& s : seeds) s = rng();
  // per_sample[k * m + i]: gain of cands[i] in sample k.
  std::vector<double> per_sample(static_cast<size_t>(samples_) * m);
  auto worker = [&](int begin, int end) {
    ValueOracle::State state = f_->NewState();
    for (int k = begin; k < end; ++k) {
      Rng local(seeds[k]);
      state.Clear();
      for (ElementId e : s0_) state.Add(e);
      for (size_t i = 0; i < y.size(); ++i) {
        const ElementId e = static_cast<ElementId>(i);
        if (state.Contains(e)) continue;
        if (y[i] >= 1.0 || (y[i] > 0.0 && UniformDouble(local) < y[i])) {
          state.Add(e);
        }
      }
      for (size_t i = 0; i < m; ++i) {
        per_sample[static_cast<size_t>(k) * m + i] = state.Gain(cands[i]);
      }
    }
  };
  const int t = std::min(threads_, samples_);
  if (t <= 1) {
    worker(0, samples_);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < t; ++w) {
      pool.emplace_back(worker, samples_ * w / t, samples_ * (w + 1) / t);
    }
    for (auto& th : pool) th.join();
  }
  for (int k = 0; k < samples_; ++k) {
    for (size_t i = 0; i < m; ++i) {
      (*out)[i] += per_sample[static_cast<size_t>(k) * m + i];
    }
  }
  for (double& v : *out) v /= samples_;
}

}  // namespace submax
