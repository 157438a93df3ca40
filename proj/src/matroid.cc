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

#include "submax/matroid.h"

#include <algorithm>
#include <numeric>
#include <string>

#include "submax/graphic.h"
#include "submax/laminar.h"
#include "submax/transversal.h"

namespace submax {

int LaminarFamily::root() const {
  for (int v = 0; v < num_nodes(); ++v) {
    if (parent[v] < 0) return v;
  }
  return -1;
}

int BipartiteGraph::num_edges() const {
  int m = 0;
  for (const auto& adj : adjacency) m += static_cast<int>(adj.size());
  return m;
}

const char* MatroidKindName(MatroidKind kind) {
  switch (kind) {
    case MatroidKind::kLaminar:
      return "laminar";
    case MatroidKind::kGraphic:
      return "graphic";
    case MatroidKind::kTransversal:
      return "transversal";
  }
  return "unknown";
}

namespace {

void ValidateLaminar(const LaminarFamily& f) {
  const int k = f.num_nodes();
  if (k == 0) throw DomainError("laminar family needs a root");
  if (static_cast<int>(f.capacity.size()) != k) {
    throw DomainError("capacity array size mismatch");
  }
  int roots = 0;
  for (int v = 0; v < k; ++v) {
    if (f.parent[v] < 0) {
      ++roots;
    } else if (f.parent[v] >= k) {
      throw DomainError("parent out of range");
    }
    if (f.capacity[v] < 0) throw DomainError("negative capacity");
  }
  if (roots != 1) throw DomainError("laminar family needs exactly one root");
  // Every node must reach the root.
  for (int v = 0; v < k; ++v) {
    int x = v;
    int steps = 0;
    while (f.parent[x] >= 0) {
      x = f.parent[x];
      if (++steps > k) throw DomainError("laminar parent array has a cycle");
    }
  }
  for (int p : f.leaf_parent) {
    if (p < 0 || p >= k) throw DomainError("leaf parent out of range");
  }
}

class GraphicIncremental : public IncrementalIndependence {
 public:
  explicit GraphicIncremental(const GraphData* g)
      : g_(g), dsu_(g->num_vertices) {}
  bool Test(ElementId e) override {
    const auto [a, b] = g_->edges[e];
    return dsu_.Find(a) != dsu_.Find(b);
  }
  void Insert(ElementId e) override {
    const auto [a, b] = g_->edges[e];
    if (!dsu_.Union(a, b)) throw DomainError("edge closes a cycle");
  }

 private:
  const GraphData* g_;
  DisjointSets dsu_;
};

class TransversalIncremental : public IncrementalIndependence {
 public:
  explicit TransversalIncremental(const BipartiteGraph* g)
      : g_(g),
        mate_l_(g->num_left(), -1),
        mate_r_(g->num_right, -1),
        seen_(g->num_right, 0) {}
  bool Test(ElementId e) override {
    if (mate_l_[e] >= 0) return false;
    ++stamp_;
    return Augment(e, /*apply=*/false);
  }
  void Insert(ElementId e) override {
    if (mate_l_[e] >= 0) throw DomainError("element already inserted");
    ++stamp_;
    if (!Augment(e, /*apply=*/true)) {
      throw DomainError("insert would make the set dependent");
    }
  }

 private:
  // Kuhn's augmenting search from left vertex l.
  bool Augment(int l, bool apply) {
    std::vector<std::pair<int, int>> stack;  // (left vertex, next adj index)
    std::vector<int> via;                    // right vertex used per level
    stack.push_back({l, 0});
    while (!stack.empty()) {
      auto& [u, idx] = stack.back();
      const auto& adj = g_->adjacency[u];
      if (idx >= static_cast<int>(adj.size())) {
        stack.pop_back();
        if (!via.empty()) via.pop_back();
        continue;
      }
      const int r = adj[idx++];
      if (seen_[r] == stamp_) continue;
      seen_[r] = stamp_;
      via.push_back(r);
      if (mate_r_[r] < 0) {
        if (apply) {
          for (size_t i = 0; i < via.size(); ++i) {
            const int left = stack[i].first;
            mate_l_[left] = via[i];
            mate_r_[via[i]] = left;
          }
        }
        return true;
      }
      stack.push_back({mate_r_[r], 0});
    }
    return false;
  }

  const BipartiteGraph* g_;
  std::vector<int> mate_l_;
  std::vector<int> mate_r_;
  std::vector<int> seen_;
  int stamp_ = 0;
};

}  // namespace

Matroid Matroid::Laminar(LaminarFamily family) {
  ValidateLaminar(family);
  Matroid m;
  m.kind_ = MatroidKind::kLaminar;
  m.n_ = static_cast<int>(family.leaf_parent.size());
  m.laminar_ = std::move(family);
  return m;
}

Matroid Matroid::Graphic(GraphData graph) {
  if (graph.num_vertices < 0) throw DomainError("negative vertex count");
  for (const auto& [a, b] : graph.edges) {
    if (a < 0 || b < 0 || a >= graph.num_vertices || b >= graph.num_vertices) {
      throw DomainError("edge endpoint out of range");
    }
  }
  Matroid m;
  m.kind_ = MatroidKind::kGraphic;
  m.n_ = static_cast<int>(graph.edges.size());
  m.graph_ = std::move(graph);
  return m;
}

Matroid Matroid::Transversal(BipartiteGraph graph) {
  if (graph.num_right < 0) throw DomainError("negative right side");
  for (auto& adj : graph.adjacency) {
    for (int r : adj) {
      if (r < 0 || r >= graph.num_right) {
        throw DomainError("right vertex out of range");
      }
    }
    std::sort(adj.begin(), adj.end());
    adj.erase(std::unique(adj.begin(), adj.end()), adj.end());
  }
  Matroid m;
  m.kind_ = MatroidKind::kTransversal;
  m.n_ = graph.num_left();
  m.bipartite_ = std::move(graph);
  return m;
}

std::unique_ptr<IncrementalIndependence> Matroid::NewIncremental(
    std::span<const ElementId> base) const {
  std::unique_ptr<IncrementalIndependence> out;
  switch (kind_) {
    case MatroidKind::kLaminar:
      out = NewLaminarIncremental(laminar_);
      break;
    case MatroidKind::kGraphic:
      out = std::make_unique<GraphicIncremental>(&graph_);
      break;
    case MatroidKind::kTransversal:
      out = std::make_unique<TransversalIncremental>(&bipartite_);
      break;
  }
  for (ElementId e : base) {
    if (e < 0 || e >= n_) throw DomainError("unknown element");
    if (!out->Test(e)) throw DomainError("seed set is dependent");
    out->Insert(e);
  }
  return out;
}

bool Matroid::IsIndependent(std::span<const ElementId> set) const {
  std::vector<bool> seen(n_, false);
  auto oracle = NewIncremental();
  for (ElementId e : set) {
    if (e < 0 || e >= n_) throw DomainError("unknown element");
    if (seen[e]) return false;
    seen[e] = true;
    if (!oracle->Test(e)) return false;
    oracle->Insert(e);
  }
  return true;
}

int Matroid::Rank() const {
  auto oracle = NewIncremental();
  int rank = 0;
  for (ElementId e = 0; e < n_; ++e) {
    if (oracle->Test(e)) {
      oracle->Insert(e);
      ++rank;
    }
  }
  return rank;
}

ContractedMatroid::ContractedMatroid(const Matroid* matroid,
                                     std::vector<ElementId> s0)
    : matroid_(matroid), s0_(std::move(s0)), in_s0_(matroid->n(), false) {
  for (ElementId e : s0_) {
    if (e < 0 || e >= matroid_->n()) throw DomainError("unknown element");
    in_s0_[e] = true;
  }
  if (!matroid_->IsIndependent(s0_)) {
    throw DomainError("contracted set is dependent");
  }
  rank_ = static_cast<int>(ExtendToBasis({}).size());
}

bool ContractedMatroid::IsIndependent(std::span<const ElementId> set) const {
  std::vector<ElementId> all(s0_);
  for (ElementId e : set) {
    if (e < 0 || e >= n()) throw DomainError("unknown element");
    if (in_s0_[e]) return false;
    all.push_back(e);
  }
  return matroid_->IsIndependent(all);
}

bool ContractedMatroid::IsBasis(std::span<const ElementId> set) const {
  return static_cast<int>(set.size()) == rank_ && IsIndependent(set);
}

std::unique_ptr<IncrementalIndependence> ContractedMatroid::NewIncremental(
    std::span<const ElementId> base) const {
  std::vector<ElementId> seed(s0_);
  seed.insert(seed.end(), base.begin(), base.end());
  return matroid_->NewIncremental(seed);
}

std::vector<ElementId> ContractedMatroid::ExtendToBasis(
    std::vector<ElementId> set) const {
  auto oracle = NewIncremental(set);
  std::vector<bool> member(n(), false);
  for (ElementId e : set) member[e] = true;
  for (ElementId e = 0; e < n(); ++e) {
    if (member[e] || in_s0_[e]) continue;
    if (oracle->Test(e)) {
      oracle->Insert(e);
      set.push_back(e);
    }
  }
  return set;
}

}  // namespace submax
