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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <memory>
#include <set>

#include "submax/graphic.h"
#include "submax/laminar.h"
#include "submax/transversal.h"
#include "test_util.h"

namespace submax {
namespace {

using testing::RandInt;

std::vector<double> Geometric(int k, double ratio = 0.5) {
  std::vector<double> v(k);
  for (int j = 0; j < k; ++j) v[j] = std::pow(ratio, j);
  return v;
}

TEST(BucketListsTest, AddRemoveIdentity) {
  BucketLists b(5, Geometric(3));
  b.Add(2, 1);
  EXPECT_TRUE(b.Contains(2));
  EXPECT_DOUBLE_EQ(b.Total(), 0.5);
  b.Remove(2);
  EXPECT_FALSE(b.Contains(2));
  EXPECT_EQ(b.size(), 0);
  EXPECT_DOUBLE_EQ(b.Total(), 0.0);
}

TEST(BucketListsTest, DecrementMoveUpdatesTotal) {
  BucketLists b(5, Geometric(3));
  b.Add(0, 0);
  b.Add(1, 0);
  b.DecrementMove(1, 2);
  EXPECT_DOUBLE_EQ(b.Total(), 1.25);
  EXPECT_EQ(b.ClassOf(1), 2);
  EXPECT_EQ(b.bucket(0), std::vector<ElementId>{0});
}

TEST(BucketListsTest, Errors) {
  EXPECT_THROW(BucketLists(3, {1.0, 1.0}), DomainError);
  BucketLists b(3, Geometric(3));
  EXPECT_THROW(b.Add(3, 0), DomainError);
  EXPECT_THROW(b.Add(0, 3), DomainError);
  b.Add(0, 1);
  EXPECT_THROW(b.Add(0, 2), DomainError);
  EXPECT_THROW(b.Remove(1), DomainError);
  EXPECT_THROW(b.DecrementMove(0, 1), DomainError);
  EXPECT_THROW(b.DecrementMove(0, 0), DomainError);
  EXPECT_THROW(b.DecrementMove(1, 2), DomainError);
  BucketLists empty(3, Geometric(3));
  Rng rng(1);
  EXPECT_THROW(empty.UniformSample(rng), DomainError);
}

// 10^4 random operations; the running total matches recomputation and the
// back-pointers stay consistent.
TEST(BucketListsTest, RandomOpsKeepTotals) {
  Rng rng(2);
  const int n = 40, k = 8;
  BucketLists b(n, Geometric(k, 0.8));
  for (int op = 0; op < 10000; ++op) {
    const ElementId e = RandInt(rng, 0, n - 1);
    if (!b.Contains(e)) {
      b.Add(e, RandInt(rng, 0, k - 1));
    } else if (b.ClassOf(e) < k - 1 && UniformDouble(rng) < 0.5) {
      b.DecrementMove(e, RandInt(rng, b.ClassOf(e) + 1, k - 1));
    } else {
      b.Remove(e);
    }
    ASSERT_NEAR(b.Total(), b.RecomputeTotal(), 1e-9);
  }
  int size = 0;
  for (int j = 0; j < k; ++j) {
    for (ElementId e : b.bucket(j)) {
      EXPECT_EQ(b.ClassOf(e), j);
      ++size;
    }
  }
  EXPECT_EQ(size, b.size());
}

TEST(BucketListsTest, SampleDegenerate) {
  Rng rng(3);
  BucketLists b(6, Geometric(3));
  EXPECT_TRUE(b.Sample(5.0, rng).empty());
  for (ElementId e = 0; e < 6; ++e) b.Add(e, e % 3);
  // t >= total / smallest value makes every p_e = 1.
  auto all = b.Sample(b.Total() / 0.25, rng);
  std::sort(all.begin(), all.end());
  EXPECT_EQ(all, (std::vector<ElementId>{0, 1, 2, 3, 4, 5}));
}

// One bucket of 20 with p = 0.3: marginals within 4 sigma of p, and pairwise
// joint inclusion within 4 sigma of a direct Bernoulli simulation.
TEST(BucketListsTest, SingleBucketLaw) {
  const int n = 20;
  BucketLists b(n, {1.0});
  for (ElementId e = 0; e < n; ++e) b.Add(e, 0);
  const double p = 0.3;
  const double t = p * b.Total();
  Rng rng(4), bern(5);
  const int draws = 10000;
  std::vector<int> count(n, 0);
  int pair01 = 0, pair_last = 0, bern01 = 0;
  for (int d = 0; d < draws; ++d) {
    std::vector<bool> in(n, false);
    for (ElementId e : b.Sample(t, rng)) {
      ASSERT_FALSE(in[e]);
      in[e] = true;
      ++count[e];
    }
    pair01 += in[0] && in[1];
    pair_last += in[n - 2] && in[n - 1];
    bern01 += (UniformDouble(bern) < p) && (UniformDouble(bern) < p);
  }
  const double sigma = std::sqrt(p * (1 - p) / draws);
  for (ElementId e = 0; e < n; ++e) {
    EXPECT_NEAR(count[e] / static_cast<double>(draws), p, 4 * sigma);
    EXPECT_NEAR(b.InclusionProbability(e, t), p, 1e-12);
  }
  const double q = p * p;
  const double pair_sigma = std::sqrt(2 * q * (1 - q) / draws);
  EXPECT_NEAR(pair01 / static_cast<double>(draws),
              bern01 / static_cast<double>(draws), 4 * pair_sigma);
  EXPECT_NEAR(pair_last / static_cast<double>(draws),
              bern01 / static_cast<double>(draws), 4 * pair_sigma);
}

TEST(BucketListsTest, MultiBucketMarginals) {
  const int n = 30;
  BucketLists b(n, Geometric(5, 0.6));
  Rng rng(6);
  for (ElementId e = 0; e < n; ++e) b.Add(e, RandInt(rng, 0, 4));
  const double t = 12.0;
  const int draws = 10000;
  std::vector<int> count(n, 0);
  for (int d = 0; d < draws; ++d) {
    for (ElementId e : b.Sample(t, rng)) ++count[e];
  }
  for (ElementId e = 0; e < n; ++e) {
    const double p = std::min(1.0, t * std::pow(0.6, b.ClassOf(e)) / b.Total());
    EXPECT_DOUBLE_EQ(b.InclusionProbability(e, t), p);
    const double sigma = std::sqrt(p * (1 - p) / draws);
    EXPECT_NEAR(count[e] / static_cast<double>(draws), p, 4 * sigma + 1e-12);
  }
}

TEST(BucketListsTest, DeterministicPerSeed) {
  auto run = [] {
    BucketLists b(10, Geometric(3));
    for (ElementId e = 0; e < 10; ++e) b.Add(e, e % 3);
    Rng rng(7);
    std::vector<std::vector<ElementId>> out;
    for (int i = 0; i < 20; ++i) out.push_back(b.Sample(2.0, rng));
    out.push_back({b.UniformSample(rng)});
    return out;
  };
  EXPECT_EQ(run(), run());
}

TEST(BucketListsTest, UniformSampleSingleton) {
  BucketLists b(4, Geometric(2));
  b.Add(3, 1);
  Rng rng(8);
  for (int i = 0; i < 10; ++i) EXPECT_EQ(b.UniformSample(rng), 3);
}

// Buckets of sizes 1 and 3: each element has probability 1/4. Chi-square
// with 3 degrees of freedom against the 0.001 critical value 16.266.
TEST(BucketListsTest, UniformSampleChiSquare) {
  BucketLists b(4, Geometric(2));
  b.Add(0, 0);
  b.Add(1, 1);
  b.Add(2, 1);
  b.Add(3, 1);
  Rng rng(9);
  const int draws = 10000;
  std::vector<int> count(4, 0);
  for (int i = 0; i < draws; ++i) ++count[b.UniformSample(rng)];
  double chi = 0.0;
  for (int c : count) {
    const double expect = draws / 4.0;
    chi += (c - expect) * (c - expect) / expect;
  }
  EXPECT_LT(chi, 16.266);
}

// Host structures for the sync checks; each keeps its input alive.
struct Host {
  std::unique_ptr<GraphData> graph;
  std::unique_ptr<BipartiteGraph> bip;
  std::unique_ptr<DynamicBasis> basis;
};

Host MakeHost(Rng& rng, MatroidKind kind, int n, const std::vector<double>& w) {
  Host h;
  switch (kind) {
    case MatroidKind::kLaminar:
      h.basis = std::make_unique<LaminarBasis>(
          testing::RandomFamily(rng, RandInt(rng, 1, 5), n), w);
      break;
    case MatroidKind::kGraphic:
      h.graph = std::make_unique<GraphData>(
          testing::RandomGraph(rng, RandInt(rng, 3, n), n));
      h.basis = std::make_unique<GraphicApproxOracle>(*h.graph, w);
      break;
    case MatroidKind::kTransversal:
      h.bip = std::make_unique<BipartiteGraph>(
          testing::RandomBipartite(rng, n, RandInt(rng, 2, n), 3));
      h.basis = std::make_unique<LStableMatching>(*h.bip, w, 0.2);
      break;
  }
  return h;
}

// After every relayed change the buckets hold exactly B \ S with the
// current classes, and the approximate base weight is the class-value sum
// over B.
TEST(SampledOracleTest, StructuralSync) {
  Rng rng(10);
  for (MatroidKind kind : testing::kAllKinds) {
    for (int trial = 0; trial < 40; ++trial) {
      const int n = RandInt(rng, 2, 24);
      const WeightClassifier cls(10.0, 0.2, 4);
      std::vector<int> classes(n);
      std::vector<double> values(n);
      for (int e = 0; e < n; ++e) {
        classes[e] = cls.WeightClass(10.0 * UniformDouble(rng));
        values[e] = cls.ClassValue(classes[e]);
      }
      Host h = MakeHost(rng, kind, n, values);
      SampledOracle so(std::move(h.basis), &cls, classes);
      std::vector<bool> frozen(n, false);
      for (int op = 0; op < 60; ++op) {
        const ElementId e = RandInt(rng, 0, n - 1);
        if (frozen[e]) continue;
        if (UniformDouble(rng) < 0.2 && so.buckets().Contains(e)) {
          so.Freeze(e);
          frozen[e] = true;
        } else if (so.ClassOf(e) < cls.bottom()) {
          so.Decrement(e, RandInt(rng, so.ClassOf(e) + 1, cls.bottom()));
        }
        std::set<ElementId> expect;
        double weight = 0.0;
        for (ElementId x : so.basis().Basis()) {
          weight += cls.ClassValue(so.ClassOf(x));
          if (!frozen[x]) expect.insert(x);
        }
        std::set<ElementId> got;
        for (int j = 0; j <= cls.bottom(); ++j) {
          for (ElementId x : so.buckets().bucket(j)) {
            EXPECT_EQ(so.ClassOf(x), j);
            got.insert(x);
          }
        }
        ASSERT_EQ(got, expect) << MatroidKindName(kind);
        EXPECT_NEAR(so.ApproxBaseWeight(), weight, 1e-9);
        for (ElementId x = 0; x < n; ++x) {
          if (frozen[x]) EXPECT_TRUE(so.InBasis(x));
        }
      }
    }
  }
}

TEST(SampledOracleTest, Errors) {
  const WeightClassifier cls(1.0, 0.2, 1);
  std::vector<int> classes = {0, 1};
  LaminarFamily fam{{-1}, {1}, {0, 0}};
  SampledOracle so(std::make_unique<LaminarBasis>(
                       fam, std::vector<double>{cls.ClassValue(0),
                                                cls.ClassValue(1)}),
                   &cls, classes);
  EXPECT_THROW(so.Freeze(1), DomainError);
  EXPECT_THROW(so.Decrement(0, 0), DomainError);
  so.Freeze(0);
  EXPECT_THROW(so.Freeze(0), DomainError);
  EXPECT_THROW(so.Decrement(0, 3), DomainError);
  EXPECT_EQ(so.unfrozen_size(), 0);
  Rng rng(1);
  EXPECT_TRUE(so.Sample(10.0, rng).empty());
}

}  // namespace
}  // namespace submax
