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

#include "submax/rounding.h"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "submax/graphic.h"
#include "submax/laminar.h"

namespace submax {
namespace {

[[noreturn]] void NoExchange() {
  throw std::logic_error("no exchange element found");
}

class LaminarExchange : public ExchangeFinder {
 public:
  explicit LaminarExchange(const ContractedMatroid& m) : m_(&m) {}

  void Begin(std::span<const ElementId> b1,
             std::span<const ElementId> b2) override {
    const LaminarFamily& fam = m_->base().laminar();
    d1_ = std::make_unique<LaminarTopTree>(fam);
    d2_ = std::make_unique<LaminarTopTree>(fam);
    std::vector<bool> in1(m_->n(), false), in2(m_->n(), false);
    for (ElementId e : b1) in1[e] = true;
    for (ElementId e : b2) in2[e] = true;
    Load(d1_.get(), in1, in2);
    Load(d2_.get(), in2, in1);
  }

  ElementId Find(ElementId i) override {
    int v = d2_->LowestTightConstraint(d2_->LeafNode(i));
    if (v < 0) v = d2_->root();
    d1_->Remove(i);
    d1_->Cut(i);
    const ElementId j = d1_->QueryMax(v);
    if (j == kNone) NoExchange();
    return j;
  }

  void Apply(ElementId i, ElementId j, bool into_b1) override {
    if (into_b1) {
      d1_->Add(j);
      d1_->Cut(j);
      d2_->Cut(i);
      d2_->Cut(j);
      return;
    }
    d1_->Uncut(i);
    d1_->Add(i);
    d1_->Cut(i);
    d1_->Cut(j);
    d2_->Remove(j);
    d2_->Add(i);
    d2_->Cut(i);
    d2_->Cut(j);
  }

 private:
  // Own basis (plus S0) at weight 2, the other side at weight 1; shared
  // elements are settled from the start.
  void Load(LaminarTopTree* d, const std::vector<bool>& own,
            const std::vector<bool>& other) {
    const LaminarFamily& fam = m_->base().laminar();
    for (ElementId e = 0; e < m_->n(); ++e) {
      if (own[e] || m_->InS0(e)) {
        const OracleChanges c = d->Insert(e, fam.leaf_parent[e], 2.0);
        if (c.added.size() != 1 || !c.removed.empty()) {
          throw DomainError("exchange input is not independent");
        }
      }
    }
    for (ElementId e = 0; e < m_->n(); ++e) {
      if (other[e] && !own[e]) d->Insert(e, fam.leaf_parent[e], 1.0);
    }
    for (ElementId e = 0; e < m_->n(); ++e) {
      if (m_->InS0(e) || (own[e] && other[e])) d->Cut(e);
    }
  }

  const ContractedMatroid* m_;
  std::unique_ptr<LaminarTopTree> d1_;
  std::unique_ptr<LaminarTopTree> d2_;
};

class TransversalExchange : public ExchangeFinder {
 public:
  explicit TransversalExchange(const ContractedMatroid& m) : m_(&m) {}

  void Begin(std::span<const ElementId> b1,
             std::span<const ElementId> b2) override {
    Match(b1, &l1_, &r1_);
    Match(b2, &l2_, &r2_);
  }

  // Walks i -M1- r -M2- l -M1- ... until a left vertex without an M1 edge.
  ElementId Find(ElementId i) override {
    lefts_ = {i};
    rights_.clear();
    ElementId l = i;
    while (true) {
      const int r = l1_[l];
      if (r < 0) break;
      rights_.push_back(r);
      l = r2_[r];
      if (l < 0) NoExchange();  // B2 + i would be matchable
      lefts_.push_back(l);
      if (lefts_.size() > l1_.size() + 1) NoExchange();
    }
    if (lefts_.size() < 2) NoExchange();
    return lefts_.back();
  }

  void Apply(ElementId i, ElementId j, bool into_b1) override {
    const size_t k = rights_.size();
    if (lefts_.front() != i || lefts_.back() != j) {
      throw std::logic_error("apply does not follow find");
    }
    if (into_b1) {
      l1_[i] = -1;
      for (size_t t = 1; t <= k; ++t) {
        l1_[lefts_[t]] = rights_[t - 1];
        r1_[rights_[t - 1]] = lefts_[t];
      }
    } else {
      l2_[j] = -1;
      for (size_t t = 1; t <= k; ++t) {
        l2_[lefts_[t - 1]] = rights_[t - 1];
        r2_[rights_[t - 1]] = lefts_[t - 1];
      }
    }
  }

 private:
  void Match(std::span<const ElementId> b, std::vector<int>* ml,
             std::vector<int>* mr) {
    const BipartiteGraph& g = m_->base().bipartite();
    ml->assign(g.num_left(), -1);
    mr->assign(g.num_right, -1);
    std::vector<ElementId> lefts(m_->s0());
    lefts.insert(lefts.end(), b.begin(), b.end());
    std::vector<int> seen(g.num_right, -1);
    std::vector<int> from_r(g.num_right, -1);
    for (size_t idx = 0; idx < lefts.size(); ++idx) {
      // BFS for an augmenting path from lefts[idx].
      const int stamp = static_cast<int>(idx);
      std::deque<int> q = {lefts[idx]};
      int free_r = -1;
      while (!q.empty() && free_r < 0) {
        const int l = q.front();
        q.pop_front();
        for (int r : g.adjacency[l]) {
          if (seen[r] == stamp) continue;
          seen[r] = stamp;
          from_r[r] = l;
          if ((*mr)[r] < 0) {
            free_r = r;
            break;
          }
          q.push_back((*mr)[r]);
        }
      }
      if (free_r < 0) throw DomainError("exchange input is not independent");
      for (int r = free_r; r >= 0;) {
        const int l = from_r[r];
        const int next = (*ml)[l];
        (*ml)[l] = r;
        (*mr)[r] = l;
        r = next;
      }
    }
  }

  const ContractedMatroid* m_;
  std::vector<int> l1_, r1_, l2_, r2_;
  std::vector<ElementId> lefts_;
  std::vector<int> rights_;
};

class GraphicExchange : public ExchangeFinder {
 public:
  explicit GraphicExchange(const ContractedMatroid& m) : m_(&m) {
    const GraphData& g = m.base().graph();
    DisjointSets s0(g.num_vertices);
    for (ElementId e : m.s0()) s0.Union(g.edges[e].first, g.edges[e].second);
    comp_.resize(g.num_vertices);
    for (int v = 0; v < g.num_vertices; ++v) comp_[v] = s0.Find(v);
  }

  void Begin(std::span<const ElementId> b1,
             std::span<const ElementId> b2) override {
    in1_.assign(m_->n(), false);
    in2_.assign(m_->n(), false);
    for (ElementId e : b1) in1_[e] = true;
    for (ElementId e : b2) in2_[e] = true;
  }

  ElementId Find(ElementId i) override {
    const GraphData& g = m_->base().graph();
    const int nv = g.num_vertices;
    DisjointSets rest(nv);
    std::vector<std::vector<std::pair<int, ElementId>>> adj(nv);
    for (ElementId e = 0; e < m_->n(); ++e) {
      const int a = comp_[g.edges[e].first];
      const int b = comp_[g.edges[e].second];
      if (in1_[e] && e != i) rest.Union(a, b);
      if (in2_[e]) {
        adj[a].push_back({b, e});
        adj[b].push_back({a, e});
      }
    }
    const int src = comp_[g.edges[i].first];
    const int dst = comp_[g.edges[i].second];
    std::vector<ElementId> via(nv, kNone);
    std::vector<int> prev(nv, -1);
    std::vector<bool> seen(nv, false);
    std::deque<int> q = {src};
    seen[src] = true;
    while (!q.empty() && !seen[dst]) {
      const int x = q.front();
      q.pop_front();
      for (const auto& [y, e] : adj[x]) {
        if (seen[y]) continue;
        seen[y] = true;
        prev[y] = x;
        via[y] = e;
        q.push_back(y);
      }
    }
    if (!seen[dst]) NoExchange();
    std::vector<ElementId> path;
    for (int x = dst; x != src; x = prev[x]) path.push_back(via[x]);
    std::reverse(path.begin(), path.end());
    for (ElementId e : path) {
      const int a = comp_[g.edges[e].first];
      const int b = comp_[g.edges[e].second];
      if (rest.Find(a) != rest.Find(b)) return e;
    }
    NoExchange();
  }

  void Apply(ElementId i, ElementId j, bool into_b1) override {
    if (into_b1) {
      in1_[i] = false;
      in1_[j] = true;
    } else {
      in2_[j] = false;
      in2_[i] = true;
    }
  }

 private:
  const ContractedMatroid* m_;
  std::vector<int> comp_;
  std::vector<bool> in1_, in2_;
};

class BruteExchange : public ExchangeFinder {
 public:
  explicit BruteExchange(const ContractedMatroid& m) : m_(&m) {}

  void Begin(std::span<const ElementId> b1,
             std::span<const ElementId> b2) override {
    b1_.assign(b1.begin(), b1.end());
    b2_.assign(b2.begin(), b2.end());
  }

  ElementId Find(ElementId i) override {
    std::vector<ElementId> cands;
    for (ElementId j : b2_) {
      if (std::find(b1_.begin(), b1_.end(), j) == b1_.end()) {
        cands.push_back(j);
      }
    }
    std::sort(cands.begin(), cands.end());
    for (ElementId j : cands) {
      if (m_->IsBasis(Swap(b1_, i, j)) && m_->IsBasis(Swap(b2_, j, i))) {
        return j;
      }
    }
    NoExchange();
  }

  void Apply(ElementId i, ElementId j, bool into_b1) override {
    if (into_b1) {
      b1_ = Swap(b1_, i, j);
    } else {
      b2_ = Swap(b2_, j, i);
    }
  }

 private:
  static std::vector<ElementId> Swap(const std::vector<ElementId>& b,
                                     ElementId out, ElementId in) {
    std::vector<ElementId> r;
    for (ElementId e : b) {
      if (e != out) r.push_back(e);
    }
    r.push_back(in);
    return r;
  }

  const ContractedMatroid* m_;
  std::vector<ElementId> b1_, b2_;
};

}  // namespace

std::unique_ptr<ExchangeFinder> NewExchangeFinder(const ContractedMatroid& m) {
  switch (m.base().kind()) {
    case MatroidKind::kLaminar:
      return std::make_unique<LaminarExchange>(m);
    case MatroidKind::kGraphic:
      return std::make_unique<GraphicExchange>(m);
    case MatroidKind::kTransversal:
      return std::make_unique<TransversalExchange>(m);
  }
  throw DomainError("unknown matroid kind");
}

std::unique_ptr<ExchangeFinder> NewBruteExchangeFinder(
    const ContractedMatroid& m) {
  return std::make_unique<BruteExchange>(m);
}

ElementId FindExchange(ElementId i, std::span<const ElementId> b1,
                       std::span<const ElementId> b2,
                       const ContractedMatroid& m) {
  auto finder = NewExchangeFinder(m);
  finder->Begin(b1, b2);
  return finder->Find(i);
}

std::vector<ElementId> MergeBases(double alpha1, std::vector<ElementId> b1,
                                  double alpha2, std::vector<ElementId> b2,
                                  const ContractedMatroid& m, Rng& rng,
                                  const RoundingOptions& options,
                                  uint64_t* exchanges) {
  if (!(alpha1 >= 0.0 && alpha2 >= 0.0 && alpha1 + alpha2 > 0.0)) {
    throw DomainError("merge weights must be non-negative");
  }
  if (b1.size() != b2.size()) throw DomainError("bases differ in size");
  const int n = m.n();
  std::vector<bool> in1(n, false), in2(n, false);
  for (ElementId e : b1) in1[e] = true;
  for (ElementId e : b2) in2[e] = true;
  std::vector<ElementId> todo;
  for (ElementId e : b1) {
    if (!in2[e]) todo.push_back(e);
  }
  std::sort(todo.begin(), todo.end());
  if (todo.empty()) {
    std::sort(b1.begin(), b1.end());
    return b1;
  }
  auto finder =
      options.brute_exchange ? NewBruteExchangeFinder(m) : NewExchangeFinder(m);
  finder->Begin(b1, b2);
  const double p = alpha2 / (alpha1 + alpha2);
  auto members = [&](const std::vector<bool>& in) {
    std::vector<ElementId> out;
    for (ElementId e = 0; e < n; ++e) {
      if (in[e]) out.push_back(e);
    }
    return out;
  };
  for (ElementId i : todo) {
    const ElementId j = finder->Find(i);
    if (j < 0 || j >= n || !in2[j] || in1[j]) {
      throw std::logic_error("exchange element outside B2 \\ B1");
    }
    if (options.verify) {
      std::vector<bool> t1 = in1, t2 = in2;
      t1[i] = false;
      t1[j] = true;
      t2[j] = false;
      t2[i] = true;
      if (!m.IsBasis(members(t1)) || !m.IsBasis(members(t2))) {
        throw std::logic_error("exchange pair does not give two bases");
      }
    }
    const bool into_b1 = UniformDouble(rng) < p;
    if (into_b1) {
      in1[i] = false;
      in1[j] = true;
    } else {
      in2[j] = false;
      in2[i] = true;
    }
    finder->Apply(i, j, into_b1);
    if (exchanges != nullptr) ++*exchanges;
  }
  return members(in1);
}

std::vector<ElementId> SwapRound(const FractionalSolution& solution,
                                 const ContractedMatroid& m, Rng& rng,
                                 const RoundingOptions& options,
                                 uint64_t* exchanges) {
  if (solution.bases.empty()) return {};
  std::vector<ElementId> cur = solution.bases[0].basis;
  double weight = solution.bases[0].alpha;
  for (size_t k = 1; k < solution.bases.size(); ++k) {
    const WeightedBasis& next = solution.bases[k];
    cur = MergeBases(weight, std::move(cur), next.alpha, next.basis, m, rng,
                     options, exchanges);
    weight += next.alpha;
  }
  std::sort(cur.begin(), cur.end());
  return cur;
}

}  // namespace submax
