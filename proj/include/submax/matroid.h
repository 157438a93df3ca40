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

#ifndef SUBMAX_MATROID_H_
#define SUBMAX_MATROID_H_

#include <memory>
#include <span>
#include <utility>
#include <vector>

#include "submax/matroid_core.h"

namespace submax {

// Internal nodes are 0..K-1 with parent[root] == -1; element e hangs under
// internal node leaf_parent[e].
struct LaminarFamily {
  std::vector<int> parent;
  std::vector<int> capacity;
  std::vector<int> leaf_parent;

  int num_nodes() const { return static_cast<int>(parent.size()); }
  int root() const;
};

struct GraphData {
  int num_vertices = 0;
  std::vector<std::pair<int, int>> edges;
};

// Left vertices are the elements; adjacency[l] lists right vertices.
struct BipartiteGraph {
  int num_right = 0;
  std::vector<std::vector<int>> adjacency;

  int num_left() const { return static_cast<int>(adjacency.size()); }
  int num_edges() const;
};

enum class MatroidKind { kLaminar, kGraphic, kTransversal };

const char* MatroidKindName(MatroidKind kind);

// Incremental independence oracle: Test(e) decides whether B + e stays
// independent, Insert(e) commits it.
class IncrementalIndependence {
 public:
  virtual ~IncrementalIndependence() = default;
  virtual bool Test(ElementId e) = 0;
  virtual void Insert(ElementId e) = 0;
};

class Matroid {
 public:
  static Matroid Laminar(LaminarFamily family);
  static Matroid Graphic(GraphData graph);
  static Matroid Transversal(BipartiteGraph graph);

  MatroidKind kind() const { return kind_; }
  int n() const { return n_; }
  const LaminarFamily& laminar() const { return laminar_; }
  const GraphData& graph() const { return graph_; }
  const BipartiteGraph& bipartite() const { return bipartite_; }

  bool IsIndependent(std::span<const ElementId> set) const;
  int Rank() const;

  // Oracle seeded with `base`, which must be independent.
  std::unique_ptr<IncrementalIndependence> NewIncremental(
      std::span<const ElementId> base = {}) const;

 private:
  MatroidKind kind_ = MatroidKind::kLaminar;
  int n_ = 0;
  LaminarFamily laminar_;
  GraphData graph_;
  BipartiteGraph bipartite_;
};

// M / S0: T is independent iff T and S0 are disjoint and T ∪ S0 is
// independent in M.
class ContractedMatroid {
 public:
  ContractedMatroid(const Matroid* matroid, std::vector<ElementId> s0);

  const Matroid& base() const { return *matroid_; }
  const std::vector<ElementId>& s0() const { return s0_; }
  bool InS0(ElementId e) const { return in_s0_[e]; }
  int n() const { return matroid_->n(); }

  bool IsIndependent(std::span<const ElementId> set) const;
  bool IsBasis(std::span<const ElementId> set) const;
  int Rank() const { return rank_; }
  std::unique_ptr<IncrementalIndependence> NewIncremental(
      std::span<const ElementId> base = {}) const;
  // Extends an independent set to a basis by scanning elements in id order.
  std::vector<ElementId> ExtendToBasis(std::vector<ElementId> set) const;

 private:
  const Matroid* matroid_;
  std::vector<ElementId> s0_;
  std::vector<bool> in_s0_;
  int rank_ = 0;
};

}  // namespace submax

#endif  // SUBMAX_MATROID_H_
