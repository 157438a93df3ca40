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

// Acceptance run. Prints one PASS/FAIL line per criterion and exits non-zero
// if any criterion fails. `acceptance 3 5` runs a subset.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <string>

#include "submax/cli_ops.h"
#include "submax/graphic.h"
#include "submax/laminar.h"
#include "submax/optimizer.h"
#include "submax/reference.h"
#include "submax/rounding.h"
#include "submax/sampler.h"
#include "submax/transversal.h"
#include "test_util.h"

namespace submax {
namespace {

using testing::RandInt;
using Ids = std::vector<ElementId>;

constexpr double kInvE = 0.36787944117144233;

struct Verdict {
  bool pass = true;
  std::string detail;
};

std::string Fmt(const char* f, double a, double b = 0, double c = 0,
                double d = 0) {
  char buf[256];
  std::snprintf(buf, sizeof(buf), f, a, b, c, d);
  return buf;
}

// ---------------------------------------------------------------------------
// 1 and 9: end-to-end approximation and |S0|.

struct EndToEndStats {
  int runs = 0;
  int good = 0;
  double ratio_sum = 0.0;
  int s0_ok = 0;
  int s0_nonempty = 0;
};

EndToEndStats g_e2e;
bool g_e2e_done = false;

void RunEndToEnd() {
  if (g_e2e_done) return;
  g_e2e_done = true;
  const double eps = 0.2;
  for (MatroidKind kind : testing::kAllKinds) {
    for (int inst = 0; inst < 30; ++inst) {
      const int n = 8 + inst % 5;
      const Instance in = testing::RandomInstance(
          kind, ValueOracle::Kind::kCoverage, n, 1000 + inst);
      const double opt =
          reference::BruteForceOpt(in.function, in.matroid).value;
      for (uint64_t seed = 1; seed <= 100; ++seed) {
        OptimizerConfig cfg;
        cfg.epsilon = eps;
        cfg.seed = seed;
        const PipelineResult r = RunPipeline(in.function, in.matroid, cfg);
        ++g_e2e.runs;
        const double ratio = opt > 0.0 ? r.value / opt : 1.0;
        g_e2e.ratio_sum += ratio;
        if (ratio >= 1 - kInvE - eps - 1e-12) ++g_e2e.good;
        if (r.s0.size() <= eps * r.rank / 2.0 + 1e-12) ++g_e2e.s0_ok;
        if (!r.s0.empty()) ++g_e2e.s0_nonempty;
      }
    }
  }
}

Verdict Criterion1() {
  RunEndToEnd();
  const double frac = g_e2e.good / static_cast<double>(g_e2e.runs);
  const double mean = g_e2e.ratio_sum / g_e2e.runs;
  Verdict v;
  v.pass = frac >= 0.95 && mean >= 1 - kInvE - 0.1;
  v.detail = Fmt("%.0f runs, %.4f at >= 1-1/e-eps, mean ratio %.4f", g_e2e.runs,
                 frac, mean);
  return v;
}

Verdict Criterion9() {
  RunEndToEnd();
  const double frac = g_e2e.s0_ok / static_cast<double>(g_e2e.runs);
  Verdict v;
  v.pass = frac >= 0.99;
  v.detail = Fmt("%.4f of %.0f runs within eps*r/2 (%.0f with non-empty S0)",
                 frac, g_e2e.runs, g_e2e.s0_nonempty);
  return v;
}

// ---------------------------------------------------------------------------
// 2: laminar differential suite.

Ids LaminarGreedy(const LaminarStructure& s, const LaminarFamily& base) {
  LaminarFamily fam = base;
  Ids present;
  std::vector<double> w(s.element_capacity(), 0.0);
  for (ElementId e = 0; e < s.element_capacity(); ++e) {
    if (!s.Present(e)) continue;
    w[e] = s.weight(e);
    present.push_back(e);
  }
  return reference::MatroidGreedyBasis(w, Matroid::Laminar(fam),
                                       std::span<const ElementId>(present));
}

Verdict Criterion2() {
  Rng rng(2);
  int ops = 0;
  double worst_ratio = 0.0;
  uint64_t worst = 0;
  Verdict v;
  while (ops < 10000) {
    const int n = RandInt(rng, 1, 64);
    const LaminarFamily fam =
        testing::RandomFamily(rng, RandInt(rng, 1, 16), n, 4);
    SlowLaminar slow(fam);
    LaminarTopTree top(fam);
    const double log_size = std::log2(top.num_tree_vertices());
    for (int step = 0; step < 60 && ops < 10000; ++step, ++ops) {
      const ElementId e = RandInt(rng, 0, n - 1);
      if (top.Present(e)) {
        slow.Delete(e);
        top.Delete(e);
      } else {
        const double w = RandInt(rng, 1, 20);
        slow.Insert(e, fam.leaf_parent[e], w);
        top.Insert(e, fam.leaf_parent[e], w);
      }
      const Ids b = top.Query();
      if (b != slow.Query() || b != LaminarGreedy(top, fam)) {
        v.pass = false;
        v.detail = "basis mismatch at op " + std::to_string(ops);
        return v;
      }
      const uint64_t cost = top.last_op_cost();
      worst = std::max(worst, cost);
      worst_ratio = std::max(worst_ratio, cost / log_size);
    }
  }
  v.pass = worst_ratio <= 12.0;
  v.detail = Fmt("10^4 ops agree; worst join+split %.0f, worst cost/log2(V) "
                 "%.2f (gate 12)",
                 worst, worst_ratio);
  return v;
}

// ---------------------------------------------------------------------------
// 3: the exact max-weight basis moves by at most one element.

Verdict Criterion3() {
  Rng rng(3);
  int worst = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const MatroidKind kind = testing::kAllKinds[trial % 3];
    const int n = RandInt(rng, 2, 30);
    const Matroid m = testing::RandomMatroid(rng, kind, n);
    const std::vector<double> w = testing::RandomWeights(rng, n);
    Ids avail = testing::RandomSubset(rng, n, 0.5);
    const ElementId e = RandInt(rng, 0, n - 1);
    const Ids before = reference::MatroidGreedyBasis(w, m, avail);
    auto it = std::find(avail.begin(), avail.end(), e);
    if (it == avail.end()) {
      avail.insert(std::upper_bound(avail.begin(), avail.end(), e), e);
    } else {
      avail.erase(it);
    }
    const Ids after = reference::MatroidGreedyBasis(w, m, avail);
    Ids gone, came;
    std::set_difference(before.begin(), before.end(), after.begin(),
                        after.end(), std::back_inserter(gone));
    std::set_difference(after.begin(), after.end(), before.begin(),
                        before.end(), std::back_inserter(came));
    worst = std::max<int>(worst, std::max(gone.size(), came.size()));
  }
  Verdict v;
  v.pass = worst <= 1;
  v.detail = Fmt("10^3 triples, largest one-sided change %.0f", worst);
  return v;
}

// ---------------------------------------------------------------------------
// 4: graphic oracle.

int Root(std::vector<int>& p, int x) {
  while (p[x] != x) x = p[x] = p[p[x]];
  return x;
}

bool Acyclic(const GraphData& g, const Ids& f) {
  std::vector<int> p(g.num_vertices);
  std::iota(p.begin(), p.end(), 0);
  for (ElementId e : f) {
    const int a = Root(p, g.edges[e].first), b = Root(p, g.edges[e].second);
    if (a == b) return false;
    p[a] = b;
  }
  return true;
}

Verdict Criterion4() {
  Rng rng(4);
  int ops = 0, unconditioned_misses = 0;
  double worst_weight = 1e300, worst_size = 1e300;
  Verdict v;
  for (int seq = 0; seq < 1000; ++seq) {
    const int m = RandInt(rng, 1, 500);
    const GraphData g = testing::RandomGraph(rng, RandInt(rng, 2, m + 1), m);
    std::vector<double> w = testing::RandomWeights(rng, m);
    std::vector<bool> frozen(m, false);
    GraphicApproxOracle o(g, w);
    const int rank = Matroid::Graphic(g).Rank();
    for (int step = 0; step < 30; ++step) {
      const ElementId e = RandInt(rng, 0, m - 1);
      if (frozen[e]) continue;
      if (o.InBasis(e) && UniformDouble(rng) < 0.15) {
        o.Freeze(e);
        frozen[e] = true;
      } else if (w[e] > 0.0) {
        w[e] = UniformDouble(rng) < 0.1 ? 0.0 : w[e] * UniformDouble(rng);
        o.Decrement(e, w[e]);
      } else {
        continue;
      }
      ++ops;
      const Ids f = o.Basis();
      if (!Acyclic(g, f)) {
        v.pass = false;
        v.detail = "cycle in F";
        return v;
      }
      // Max spanning forest containing S: frozen edges first.
      std::vector<double> key(m);
      double big = 1.0;
      for (double x : w) big = std::max(big, 2.0 * x + 1.0);
      for (int i = 0; i < m; ++i) key[i] = frozen[i] ? big : w[i];
      const Ids kr = reference::KruskalForest(g, key);
      const Ids plain = reference::KruskalForest(g, w);
      double opt_free = 0.0, plain_weight = 0.0, f_free = 0.0, f_all = 0.0;
      int opt_free_size = 0, f_free_size = 0;
      for (ElementId x : kr) {
        if (frozen[x]) continue;
        opt_free += w[x];
        ++opt_free_size;
      }
      for (ElementId x : plain) plain_weight += w[x];
      for (ElementId x : f) {
        f_all += w[x];
        if (frozen[x]) continue;
        f_free += w[x];
        ++f_free_size;
      }
      if (opt_free > 0.0) worst_weight = std::min(worst_weight, f_free / opt_free);
      if (opt_free_size > 0) {
        worst_size = std::min(worst_size, f_free_size / (double)opt_free_size);
      }
      if (2 * static_cast<int>(f.size()) < rank) {
        v.pass = false;
        v.detail = "|F| < rank/2";
        return v;
      }
      if (f_all < 0.5 * plain_weight - 1e-9) ++unconditioned_misses;
    }
  }
  v.pass = worst_weight >= 0.5 - 1e-12 && worst_size >= 0.5 &&
           unconditioned_misses == 0;
  v.detail = Fmt("%.0f ops; worst w(F\\S)/MSF(G/S) %.3f, worst size ratio "
                 "%.3f, |F| >= rank/2 always; w(F) < Kruskal/2 in %.0f ops",
                 ops, worst_weight, worst_size, unconditioned_misses);
  return v;
}

// ---------------------------------------------------------------------------
// 5: transversal invariants.

std::string TransversalState(const LStableMatching& m) {
  constexpr int kZero = LStableMatching::kZeroLevel;
  const BipartiteGraph& g = m.graph();
  for (int l = 0; l < g.num_left(); ++l) {
    const int r = m.mate_left(l);
    if (r < 0) {
      if (m.virtual_level(l) != m.weight_level(l)) return "inv1 unmatched";
      continue;
    }
    if (m.mate_right(r) != l) return "mates disagree";
    if (m.fallback(l) ? m.virtual_level(l) > m.weight_level(l)
                      : m.virtual_level(l) > m.weight_level(l) - 1) {
      return "inv1 matched";
    }
  }
  for (int r = 0; r < g.num_right; ++r) {
    const int l = m.mate_right(r);
    for (ElementId x : m.right_neighbors(r)) {
      if (l < 0 && m.mate_left(x) < 0) return "not maximal";
      if (l >= 0 && !m.fallback(l) && m.virtual_level(x) != kZero &&
          m.virtual_level(x) > m.virtual_level(l) + 1) {
        return "inv2";
      }
    }
  }
  return "";
}

Verdict Criterion5() {
  Rng rng(5);
  Verdict v;
  double worst_weight = 1e300, worst_scan = 0.0;
  int ops = 0;
  for (int seq = 0; seq < 1000; ++seq) {
    const double eps = seq % 2 ? 0.1 : 0.25;
    const int nl = RandInt(rng, 1, 40), nr = RandInt(rng, 1, 40);
    const BipartiteGraph g = testing::RandomBipartite(rng, nl, nr, 4);
    std::vector<double> w = testing::RandomWeights(rng, nl, 1.0, 100.0);
    LStableMatching m(g, w, eps);
    const int hk = reference::MaxCardinality(g).size;
    for (int step = 0; step < nl; ++step) {
      const ElementId l = RandInt(rng, 0, nl - 1);
      if (w[l] == 0.0 || m.frozen(l)) continue;
      if (m.mate_left(l) >= 0 && UniformDouble(rng) < 0.1) {
        m.Freeze(l);
        continue;
      }
      const Ids before = m.Basis();
      w[l] = UniformDouble(rng) < 0.2 ? 0.0 : w[l] * UniformDouble(rng);
      m.Decrement(l, w[l]);
      ++ops;
      for (ElementId x : before) {
        if (x != l && m.mate_left(x) < 0) {
          v.pass = false;
          v.detail = "L-stability broken";
          return v;
        }
      }
      const std::string err = TransversalState(m);
      if (!err.empty()) {
        v.pass = false;
        v.detail = err;
        return v;
      }
      std::vector<double> rounded(nl);
      for (int i = 0; i < nl; ++i) rounded[i] = m.RoundedWeight(i);
      const double best = reference::HungarianVertexWeighted(g, rounded).weight;
      if (best > 0.0) {
        worst_weight =
            std::min(worst_weight, m.MatchingWeight() / best / (1 - 3 * eps));
      }
      if (2 * m.MatchingSize() < hk) {
        v.pass = false;
        v.detail = "|M| < HK/2";
        return v;
      }
    }
    const double k = m.top_level();
    const double bound = 4.0 * g.num_edges() * (k + 1.0 / eps + 2.0);
    if (g.num_edges() > 0) worst_scan = std::max(worst_scan, m.scans() / bound);
  }
  v.pass = worst_weight >= 1.0 - 1e-12 && worst_scan <= 1.0;
  v.detail = Fmt("%.0f decrements; min weight/((1-3eps)Hungarian) %.3f, max "
                 "scans/bound %.3f",
                 ops, worst_weight, worst_scan);
  return v;
}

// ---------------------------------------------------------------------------
// 6: sampler laws.

// Upper 0.001 point of chi-square with k degrees of freedom
// (Wilson-Hilferty).
double ChiSquareCritical(int k) {
  const double z = 3.090232306167813;
  const double a = 2.0 / (9.0 * k);
  return k * std::pow(1 - a + z * std::sqrt(a), 3);
}

Verdict Criterion6() {
  Rng rng(6);
  Verdict v;
  int checked = 0, misses = 0, chi_fail = 0;
  double worst_z = 0.0;
  for (MatroidKind kind : testing::kAllKinds) {
    const int n = 40;
    const Matroid mat = testing::RandomMatroid(rng, kind, n);
    const std::vector<double> w = testing::RandomWeights(rng, n, 0.5, 100.0);
    const double top = *std::max_element(w.begin(), w.end());
    const WeightClassifier wc(top, 0.2, std::max(1, mat.Rank()));
    std::vector<int> classes(n);
    std::vector<double> rounded(n);
    for (int e = 0; e < n; ++e) {
      classes[e] = wc.WeightClass(w[e]);
      rounded[e] = wc.ClassValue(classes[e]);
    }
    std::unique_ptr<DynamicBasis> basis;
    switch (kind) {
      case MatroidKind::kLaminar:
        basis = std::make_unique<LaminarBasis>(mat.laminar(), rounded);
        break;
      case MatroidKind::kGraphic:
        basis = std::make_unique<GraphicApproxOracle>(mat.graph(), rounded);
        break;
      case MatroidKind::kTransversal:
        basis = std::make_unique<LStableMatching>(
            mat.bipartite(), rounded, wc.epsilon(),
            wc.ClassValue(wc.num_classes() - 1));
        break;
    }
    SampledOracle o(std::move(basis), &wc, classes);
    // Freeze one basis element so that B \ S differs from B.
    for (int e = 0; e < n; ++e) {
      if (o.InBasis(e) && o.buckets().Contains(e)) {
        o.Freeze(e);
        break;
      }
    }
    std::vector<ElementId> live;
    double free_weight = 0.0;
    for (int e = 0; e < n; ++e) {
      if (o.InBasis(e) && !o.IsFrozen(e)) {
        live.push_back(e);
        free_weight += wc.ClassValue(o.ClassOf(e));
      }
    }
    const double t = 3.0;
    const int draws = 10000;
    std::vector<int> count(n, 0);
    for (int d = 0; d < draws; ++d) {
      for (ElementId e : o.Sample(t, rng)) ++count[e];
    }
    for (int e = 0; e < n; ++e) {
      const bool is_live = std::count(live.begin(), live.end(), e) > 0;
      const double p =
          is_live ? std::min(1.0, t * wc.ClassValue(o.ClassOf(e)) / free_weight)
                  : 0.0;
      const double sd = std::sqrt(p * (1 - p) / draws);
      const double diff = std::abs(count[e] / double(draws) - p);
      ++checked;
      if (diff > 4 * sd + 1e-12) ++misses;
      if (sd > 0) worst_z = std::max(worst_z, diff / sd);
    }
    if (live.size() >= 2) {
      std::vector<int> hits(n, 0);
      const int u_draws = 20000;
      for (int d = 0; d < u_draws; ++d) ++hits[o.UniformSample(rng)];
      double chi = 0.0;
      const double expect = u_draws / static_cast<double>(live.size());
      for (ElementId e : live) chi += std::pow(hits[e] - expect, 2) / expect;
      int outside = 0;
      for (int e = 0; e < n; ++e) {
        if (!std::count(live.begin(), live.end(), e)) outside += hits[e];
      }
      if (outside > 0 ||
          chi > ChiSquareCritical(static_cast<int>(live.size()) - 1)) {
        ++chi_fail;
      }
    }
  }
  v.pass = misses == 0 && chi_fail == 0;
  v.detail = Fmt("%.0f marginals, %.0f outside 4 sigma (worst z %.2f), "
                 "%.0f chi-square failures",
                 checked, misses, worst_z, chi_fail);
  return v;
}

// ---------------------------------------------------------------------------
// 7: budget gates at n = 200.

Verdict Criterion7() {
  Verdict v;
  std::ostringstream fails;
  int runs = 0;
  double worst[4] = {0, 0, 0, 0};
  for (MatroidKind kind : testing::kAllKinds) {
    for (auto fn : {ValueOracle::Kind::kCoverage, ValueOracle::Kind::kFacility,
                    ValueOracle::Kind::kAdditive}) {
      const Instance in = testing::RandomInstance(kind, fn, 200, 77);
      for (bool forced : {false, true}) {
        OptimizerConfig cfg;
        cfg.seed = 3;
        if (forced) {
          // Make the first phase actually freeze elements.
          cfg.phase1_threshold = 0.01;
        }
        const PipelineResult r = RunPipeline(in.function, in.matroid, cfg);
        ++runs;
        const nlohmann::json c = r.counters;
        const Budgets b = ComputeBudgets(200, r.rank, cfg.epsilon);
        auto get = [&](const char* k) {
          return c.contains(k) ? c.at(k).get<double>() : 0.0;
        };
        worst[0] = std::max(worst[0], get("f_queries.phase1") / b.phase1_queries);
        worst[1] = std::max(worst[1], get("f_queries.phase2") / b.phase2_queries);
        worst[2] = std::max(worst[2], (get("dt.tests") + get("dt.inserts")) /
                                          b.dt_incremental_ops);
        worst[3] = std::max(worst[3], get("dt.batch_inserts") / b.batch_inserts);
        for (const std::string& name : BudgetViolations(c, b)) {
          v.pass = false;
          fails << " " << MatroidKindName(kind) << "/" << FunctionKindName(fn)
                << (forced ? "/forced" : "") << ":" << name;
        }
      }
    }
  }
  v.detail = Fmt("%.0f runs; worst used/budget phase1 %.3f phase2 %.3f ", runs,
                 worst[0], worst[1]) +
             Fmt("dt-incremental %.3f batch-inserts %.3f", worst[2], worst[3]) +
             fails.str();
  return v;
}

// ---------------------------------------------------------------------------
// 8: swap rounding marginals.

Ids ShuffledBasis(const ContractedMatroid& m, Rng& rng) {
  Ids order(m.n());
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  auto inc = m.NewIncremental();
  Ids b;
  for (ElementId e : order) {
    if (!m.InS0(e) && inc->Test(e)) {
      inc->Insert(e);
      b.push_back(e);
    }
  }
  std::sort(b.begin(), b.end());
  return b;
}

Verdict Criterion8() {
  Rng rng(8);
  Verdict v;
  int checked = 0, misses = 0, dependent = 0;
  for (MatroidKind kind : testing::kAllKinds) {
    const Matroid m = testing::RandomMatroid(rng, kind, 30);
    const ContractedMatroid cm(&m, {});
    FractionalSolution sol;
    sol.x.assign(m.n(), 0.0);
    const double alphas[3] = {0.5, 0.3, 0.2};
    for (double a : alphas) {
      const Ids b = ShuffledBasis(cm, rng);
      for (ElementId e : b) sol.x[e] += a;
      sol.bases.push_back({a, b});
    }
    const int trials = 10000;
    std::vector<int> hits(m.n(), 0);
    for (int t = 0; t < trials; ++t) {
      const Ids out = SwapRound(sol, cm, rng);
      if (!reference::FeasibilityVerify(out, m)) ++dependent;
      for (ElementId e : out) ++hits[e];
    }
    for (int e = 0; e < m.n(); ++e) {
      const double p = sol.x[e];
      const double sd = std::sqrt(trials * p * (1 - p));
      ++checked;
      if (std::abs(hits[e] - trials * p) > 4 * sd + 1e-9) ++misses;
    }
  }
  v.pass = misses == 0 && dependent == 0;
  v.detail = Fmt("%.0f marginals, %.0f outside 4 sigma, %.0f dependent outputs",
                 checked, misses, dependent);
  return v;
}

struct Criterion {
  int id;
  const char* name;
  double limit_s;
  std::function<Verdict()> run;
};

}  // namespace
}  // namespace submax

int main(int argc, char** argv) {
  using submax::Criterion;
  const std::vector<Criterion> all = {
      {1, "end-to-end approximation", 300, submax::Criterion1},
      {2, "laminar differential", 60, submax::Criterion2},
      {3, "exact basis stability", 30, submax::Criterion3},
      {4, "graphic oracle", 60, submax::Criterion4},
      {5, "transversal invariants", 120, submax::Criterion5},
      {6, "sampler laws", 30, submax::Criterion6},
      {7, "budget gates", 120, submax::Criterion7},
      {8, "swap rounding marginals", 60, submax::Criterion8},
      // Reuses the criterion 1 runs, so its own time is not meaningful.
      {9, "|S0| bound", 1e9, submax::Criterion9},
  };
  std::set<int> want;
  for (int i = 1; i < argc; ++i) want.insert(std::atoi(argv[i]));
  int failed = 0;
  for (const Criterion& c : all) {
    if (!want.empty() && !want.count(c.id)) continue;
    const auto t0 = std::chrono::steady_clock::now();
    submax::Verdict v = c.run();
    const double secs = std::chrono::duration<double>(
                            std::chrono::steady_clock::now() - t0)
                            .count();
    if (secs > c.limit_s) {
      v.pass = false;
      v.detail += " [over time limit]";
    }
    std::printf("%s criterion %d (%s): %s [%.1fs]\n", v.pass ? "PASS" : "FAIL",
                c.id, c.name, v.detail.c_str(), secs);
    std::fflush(stdout);
    if (!v.pass) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
