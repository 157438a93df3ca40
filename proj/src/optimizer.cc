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

#include "submax/optimizer.h"

#include <algorithm>
#include <cmath>
#include <deque>
#include <memory>
#include <queue>

#include "submax/graphic.h"
#include "submax/laminar.h"
#include "submax/matroid_core.h"
#include "submax/sampler.h"
#include "submax/transversal.h"

namespace submax {
namespace {

std::unique_ptr<DynamicBasis> NewApproxBasis(const Matroid& matroid,
                                             const std::vector<double>& w,
                                             const WeightClassifier& wc) {
  switch (matroid.kind()) {
    case MatroidKind::kLaminar:
      return std::make_unique<LaminarBasis>(matroid.laminar(), w);
    case MatroidKind::kGraphic:
      return std::make_unique<GraphicApproxOracle>(matroid.graph(), w);
    case MatroidKind::kTransversal: {
      // Every positive class value sits on a level at or above the unit.
      const double unit = wc.ClassValue(wc.num_classes() - 1);
      return std::make_unique<LStableMatching>(matroid.bipartite(), w,
                                               wc.epsilon(), unit);
    }
  }
  throw DomainError("unknown matroid kind");
}

void RecordStructureOps(const DynamicBasis& basis, Counters* counters) {
  if (auto* lam = dynamic_cast<const LaminarBasis*>(&basis)) {
    const auto& st = lam->tree().stats();
    (*counters)["ds.laminar.splits"] += st.splits;
    (*counters)["ds.laminar.joins"] += st.joins;
    (*counters)["ds.laminar.temp_joins"] += st.temp_joins;
    (*counters)["ds.laminar.rebuilds"] += st.rebuilds;
  } else if (auto* gr = dynamic_cast<const GraphicApproxOracle*>(&basis)) {
    (*counters)["ds.graphic.heap_ops"] += gr->heap_operations();
  } else if (auto* tr = dynamic_cast<const LStableMatching*>(&basis)) {
    (*counters)["ds.transversal.scans"] += tr->scans();
  }
}

// Next threshold tau * (1-eps)^k that is at most target.
double DescendTo(double tau, double target, double epsilon,
                 uint64_t* skipped) {
  int k = static_cast<int>(
      std::ceil(std::log(target / tau) / std::log1p(-epsilon)));
  k = std::max(k, 1);
  double next = tau * std::pow(1.0 - epsilon, k);
  while (next > target) {
    next *= 1.0 - epsilon;
    ++k;
  }
  while (k > 1 && next / (1.0 - epsilon) <= target) {
    next /= 1.0 - epsilon;
    --k;
  }
  *skipped += static_cast<uint64_t>(k - 1);
  return next;
}

}  // namespace

DtVariant ResolveVariant(DtVariant v, MatroidKind kind) {
  if (v != DtVariant::kAuto) return v;
  return kind == MatroidKind::kTransversal ? DtVariant::kApprox
                                           : DtVariant::kIncremental;
}

// ---------------------------------------------------------------------------
// Phase 1

Phase1Result LazySamplingGreedyPlus(const ValueOracle& f,
                                    const Matroid& matroid, double epsilon,
                                    double m, Rng& rng,
                                    const OptimizerConfig& config,
                                    Counters* counters) {
  Phase1Result result;
  const int n = matroid.n();
  const int rank = matroid.Rank();
  if (n == 0 || rank == 0 || !(m > 0.0)) return result;
  const uint64_t q0 = f.query_count();
  const WeightClassifier wc(m, epsilon, rank);
  ValueOracle::State state = f.NewState();
  std::vector<int> classes(n);
  std::vector<double> rounded(n);
  for (ElementId e = 0; e < n; ++e) {
    classes[e] = wc.WeightClass(state.Gain(e));
    rounded[e] = wc.ClassValue(classes[e]);
  }
  SampledOracle oracle(NewApproxBasis(matroid, rounded, wc), &wc, classes);
  result.threshold = config.phase1_threshold / epsilon * m;
  const double t = config.sample_constant * std::log(static_cast<double>(n));
  uint64_t iterations = 0, refreshes = 0, sampled = 0, gate_failures = 0;
  while (oracle.ApproxBaseWeight() >= result.threshold) {
    if (oracle.unfrozen_size() == 0) break;
    ++iterations;
    const std::vector<ElementId> sample = oracle.Sample(t, rng);
    sampled += sample.size();
    int full = 0, full_stale = 0, part = 0, part_stale = 0;
    double weight = 0.0, stale_weight = 0.0;
    std::vector<bool> certain(sample.size());
    for (size_t k = 0; k < sample.size(); ++k) {
      certain[k] = oracle.InclusionProbability(sample[k], t) >= 1.0;
    }
    for (size_t k = 0; k < sample.size(); ++k) {
      const ElementId e = sample[k];
      const int old = oracle.ClassOf(e);
      const double w_old = wc.ClassValue(old);
      const int j = wc.WeightClass(state.Gain(e));
      const bool stale = j > old;
      if (stale) {
        oracle.Decrement(e, j);
        ++refreshes;
      }
      weight += w_old;
      if (stale) stale_weight += w_old;
      if (certain[k]) {
        ++full;
        full_stale += stale ? 1 : 0;
      } else {
        ++part;
        part_stale += stale ? 1 : 0;
      }
    }
    bool pass;
    if (config.weight_gate) {
      pass = weight == 0.0 || 2.0 * stale_weight < weight;
    } else {
      pass = (full == 0 || 2 * full_stale < full) &&
             (part == 0 || 2 * part_stale < part);
    }
    if (!pass) {
      ++gate_failures;
      continue;
    }
    const ElementId e = oracle.UniformSample(rng);
    if (e == kNone) break;
    oracle.Freeze(e);
    state.Add(e);
    result.s.push_back(e);
  }
  result.exit_weight = oracle.ApproxBaseWeight();
  RecordStructureOps(oracle.basis(), counters);
  (*counters)["f_queries.phase1"] += f.query_count() - q0;
  (*counters)["phase1.iterations"] += iterations;
  (*counters)["phase1.freezes"] += result.s.size();
  (*counters)["phase1.refreshes"] += refreshes;
  (*counters)["phase1.sampled"] += sampled;
  (*counters)["phase1.gate_failures"] += gate_failures;
  (*counters)["phase1.oracle_ops"] += oracle.oracle_ops();
  return result;
}

// ---------------------------------------------------------------------------
// Phase 2

RoundMarginals::RoundMarginals(const MultilinearEstimator* estimator,
                               const FractionalPoint* x, double alpha,
                               Rng* rng)
    : estimator_(estimator),
      x_(x),
      alpha_(alpha),
      rng_(rng),
      y_(*x),
      est_(x->size(), 0.0),
      stamp_(x->size(), -1) {}

void RoundMarginals::Refresh(std::span<const ElementId> cands) {
  std::vector<ElementId> todo;
  for (ElementId e : cands) {
    if (stamp_[e] != version_) todo.push_back(e);
  }
  if (todo.empty()) return;
  std::vector<double> out;
  estimator_->Estimate(y_, todo, *rng_, &out);
  for (size_t i = 0; i < todo.size(); ++i) {
    est_[todo[i]] = out[i];
    stamp_[todo[i]] = version_;
  }
  estimates_ += todo.size();
}

void RoundMarginals::AddToBasis(ElementId e) {
  y_[e] = std::min(1.0, (*x_)[e] + alpha_);
  ++version_;
}

std::vector<ElementId> DtIncremental(RoundMarginals& g,
                                     const ContractedMatroid& m,
                                     double epsilon, double floor,
                                     bool skip_empty, Counters* counters) {
  const int n = m.n();
  auto oracle = m.NewIncremental();
  std::vector<bool> alive(n, false);
  std::vector<bool> in_b(n, false);
  std::vector<ElementId> pending;
  for (ElementId e = 0; e < n; ++e) {
    if (!m.InS0(e)) {
      alive[e] = true;
      pending.push_back(e);
    }
  }
  uint64_t levels = 0, skipped = 0, tests = 0, inserts = 0;
  std::vector<ElementId> basis;
  g.Refresh(pending);
  double tau = 0.0;
  for (ElementId e : pending) tau = std::max(tau, g.estimate(e));
  while (tau > 0.0 && tau >= floor) {
    pending.clear();
    for (ElementId e = 0; e < n; ++e) {
      if (alive[e] && !in_b[e]) pending.push_back(e);
    }
    g.Refresh(pending);
    std::vector<ElementId> level;
    double top = 0.0;
    for (ElementId e : pending) {
      top = std::max(top, g.estimate(e));
      if (g.estimate(e) >= tau) level.push_back(e);
    }
    if (level.empty()) {
      // Estimates only move on inserts, so nothing positive is left.
      if (top <= 0.0) break;
      if (!skip_empty) {
        ++levels;
        tau *= 1.0 - epsilon;
        continue;
      }
      if (top < floor) break;
      tau = DescendTo(tau, top, epsilon, &skipped);
      continue;
    }
    ++levels;
    for (ElementId e : level) {
      const ElementId one[] = {e};
      g.Refresh(one);
      if (g.estimate(e) < tau) continue;
      ++tests;
      if (oracle->Test(e)) {
        ++inserts;
        oracle->Insert(e);
        in_b[e] = true;
        basis.push_back(e);
        g.AddToBasis(e);
      } else {
        alive[e] = false;
      }
    }
    tau *= 1.0 - epsilon;
  }
  (*counters)["dt.invocations"] += 1;
  (*counters)["dt.levels"] += levels;
  (*counters)["dt.skipped_levels"] += skipped;
  (*counters)["dt.tests"] += tests;
  (*counters)["dt.inserts"] += inserts;
  return basis;
}

std::vector<ElementId> DtApproxIndepSet(RoundMarginals& g,
                                        const ContractedMatroid& m,
                                        double epsilon, double floor,
                                        bool skip_empty, Counters* counters) {
  if (m.base().kind() != MatroidKind::kTransversal) {
    throw DomainError("the decremental variant needs a transversal matroid");
  }
  const int n = m.n();
  DecMatching dec(m.base().bipartite(), epsilon);
  dec.Seed(m.s0());
  std::vector<bool> in_b(n, false);
  std::vector<bool> alive(n, false);
  std::vector<bool> queued(n, false);
  std::vector<ElementId> basis;
  std::vector<ElementId> pending;
  for (ElementId e = 0; e < n; ++e) {
    if (!m.InS0(e)) {
      alive[e] = true;
      pending.push_back(e);
    }
  }
  uint64_t levels = 0, skipped = 0, batches = 0, deletes = 0;
  g.Refresh(pending);
  double tau = 0.0;
  for (ElementId e : pending) tau = std::max(tau, g.estimate(e));
  while (tau > 0.0 && tau >= floor) {
    pending.clear();
    for (ElementId e = 0; e < n; ++e) {
      if (alive[e] && !in_b[e]) pending.push_back(e);
    }
    g.Refresh(pending);
    std::vector<ElementId> level;
    double top = 0.0;
    for (ElementId e : pending) {
      top = std::max(top, g.estimate(e));
      if (g.estimate(e) >= tau) level.push_back(e);
    }
    if (level.empty()) {
      // Estimates only move on inserts, so nothing positive is left.
      if (top <= 0.0) break;
      if (!skip_empty) {
        ++levels;
        tau *= 1.0 - epsilon;
        continue;
      }
      if (top < floor) break;
      tau = DescendTo(tau, top, epsilon, &skipped);
      continue;
    }
    ++levels;
    ++batches;
    std::deque<ElementId> work;
    // Level elements the matching cannot take are dropped for good.
    for (ElementId e : level) alive[e] = false;
    for (ElementId e : dec.BatchInsert(level)) {
      alive[e] = true;
      work.push_back(e);
      queued[e] = true;
    }
    while (!work.empty()) {
      const ElementId e = work.front();
      work.pop_front();
      queued[e] = false;
      if (!dec.Test(e) || in_b[e]) continue;
      const ElementId one[] = {e};
      g.Refresh(one);
      if (g.estimate(e) < tau) {
        ++deletes;
        for (ElementId r : dec.Delete(e)) {
          alive[r] = true;
          if (!queued[r] && !in_b[r]) {
            work.push_back(r);
            queued[r] = true;
          }
        }
      } else {
        in_b[e] = true;
        basis.push_back(e);
        g.AddToBasis(e);
      }
    }
    tau *= 1.0 - epsilon;
  }
  (*counters)["dt.invocations"] += 1;
  (*counters)["dt.levels"] += levels;
  (*counters)["dt.skipped_levels"] += skipped;
  (*counters)["dt.batch_inserts"] += batches;
  (*counters)["dt.deletes"] += deletes;
  return basis;
}

FractionalSolution ContinuousGreedy(const ValueOracle& f,
                                    const ContractedMatroid& m, double epsilon,
                                    double opt_estimate, Rng& rng,
                                    const OptimizerConfig& config,
                                    Counters* counters) {
  FractionalSolution out;
  const int n = m.n();
  out.x.assign(n, 0.0);
  const int rank = m.Rank();
  if (rank == 0) return out;
  const uint64_t q0 = f.query_count();
  const int rounds = static_cast<int>(std::ceil(1.0 / epsilon - 1e-9));
  const double alpha = 1.0 / rounds;
  const int samples =
      MultilinearSampleCount(n, epsilon, config.multilinear_constant);
  const MultilinearEstimator estimator(&f, m.s0(), samples, config.threads);
  const double floor = epsilon / rank * opt_estimate;
  const DtVariant variant = ResolveVariant(config.variant, m.base().kind());
  uint64_t estimates = 0, completions = 0;
  for (int t = 0; t < rounds; ++t) {
    RoundMarginals g(&estimator, &out.x, alpha, &rng);
    std::vector<ElementId> b =
        variant == DtVariant::kApprox
            ? DtApproxIndepSet(g, m, epsilon, floor, config.skip_empty_levels,
                               counters)
            : DtIncremental(g, m, epsilon, floor, config.skip_empty_levels,
                            counters);
    estimates += g.estimates();
    const size_t before = b.size();
    b = m.ExtendToBasis(std::move(b));
    completions += b.size() - before;
    std::sort(b.begin(), b.end());
    for (ElementId e : b) out.x[e] = std::min(1.0, out.x[e] + alpha);
    out.bases.push_back({alpha, std::move(b)});
  }
  (*counters)["f_queries.phase2"] += f.query_count() - q0;
  (*counters)["phase2.rounds"] += rounds;
  (*counters)["phase2.samples_per_estimate"] = samples;
  (*counters)["phase2.estimates"] += estimates;
  (*counters)["phase2.basis_completions"] += completions;
  return out;
}

std::vector<ElementId> GreedyBaseline(const ValueOracle& f,
                                      const ContractedMatroid& m) {
  const int n = m.n();
  auto indep = m.NewIncremental();
  ValueOracle::State state = f.NewState();
  for (ElementId e : m.s0()) state.Add(e);
  std::priority_queue<std::pair<double, ElementId>> heap;
  for (ElementId e = 0; e < n; ++e) {
    if (!m.InS0(e)) heap.push({state.Gain(e), -e});
  }
  std::vector<int> stamp(n, 0);
  int round = 0;
  std::vector<ElementId> out;
  while (!heap.empty()) {
    const auto [bound, neg] = heap.top();
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
    out.push_back(e);
    ++round;
  }
  std::sort(out.begin(), out.end());
  return out;
}

PipelineResult RunPipeline(const ValueOracle& f, const Matroid& matroid,
                           const OptimizerConfig& config) {
  if (!(config.epsilon > 0.0 && config.epsilon < 1.0)) {
    throw DomainError("epsilon must lie in (0, 1)");
  }
  if (f.n() != matroid.n()) throw DomainError("function and matroid sizes differ");
  PipelineResult result;
  Counters& counters = result.counters;
  result.rank = matroid.Rank();
  if (result.rank == 0) return result;
  uint64_t q0 = f.query_count();
  result.opt_estimate = EstimateOpt(f, matroid);
  counters["f_queries.estimate_opt"] += f.query_count() - q0;
  if (!(result.opt_estimate > 0.0)) return result;

  Rng phase1_rng(MixSeed(config.seed, kPhase1Stream));
  if (config.run_phase1) {
    result.phase1 =
        LazySamplingGreedyPlus(f, matroid, config.epsilon / 4.0,
                               result.opt_estimate, phase1_rng, config,
                               &counters);
  }
  result.s0 = result.phase1.s;
  std::sort(result.s0.begin(), result.s0.end());

  const ContractedMatroid contracted(&matroid, result.s0);
  double opt2 = result.opt_estimate;
  if (!result.s0.empty()) {
    q0 = f.query_count();
    ValueOracle::State st = f.NewState();
    for (ElementId e : result.s0) st.Add(e);
    const double base = st.UncountedValue();
    for (ElementId e : GreedyBaseline(f, contracted)) st.Add(e);
    opt2 = st.UncountedValue() - base;
    counters["f_queries.estimate_opt"] += f.query_count() - q0;
  }

  Rng multilinear_rng(MixSeed(config.seed, kMultilinearStream));
  if (opt2 > 0.0) {
    result.fractional = ContinuousGreedy(f, contracted, config.epsilon, opt2,
                                         multilinear_rng, config, &counters);
  }

  Rng rounding_rng(MixSeed(config.seed, kRoundingStream));
  uint64_t exchanges = 0;
  RoundingOptions ropt;
  ropt.verify = config.verify_rounding;
  result.s1 = SwapRound(result.fractional, contracted, rounding_rng, ropt,
                        &exchanges);
  counters["rounding.exchanges"] += exchanges;
  counters["rounding.bases"] += result.fractional.bases.size();

  result.solution = result.s0;
  result.solution.insert(result.solution.end(), result.s1.begin(),
                         result.s1.end());
  std::sort(result.solution.begin(), result.solution.end());
  ValueOracle::State st = f.NewState();
  for (ElementId e : result.solution) st.Add(e);
  result.value = st.UncountedValue();
  return result;
}

}  // namespace submax
