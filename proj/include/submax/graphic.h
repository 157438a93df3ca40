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

#ifndef SUBMAX_GRAPHIC_H_
#define SUBMAX_GRAPHIC_H_

#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

#include "submax/matroid.h"
#include "submax/matroid_core.h"

namespace submax {

class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(n), rank_(n, 0) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int Find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  // Returns false if a and b were already joined.
  bool Union(int a, int b) {
    a = Find(a);
    b = Find(b);
    if (a == b) return false;
    if (rank_[a] < rank_[b]) std::swap(a, b);
    parent_[b] = a;
    if (rank_[a] == rank_[b]) ++rank_[a];
    return true;
  }
  int size() const { return static_cast<int>(parent_.size()); }

 private:
  std::vector<int> parent_;
  std::vector<int> rank_;
};

// Max-heap of edge entries with O(1) meld, backed by a shared node pool.
class PairingHeapPool {
 public:
  struct Entry {
    double weight;
    ElementId edge;
    uint32_t version;
  };

  int Push(int root, Entry entry);
  int Meld(int a, int b);
  int Pop(int root);
  const Entry& Top(int root) const { return nodes_[root].entry; }
  uint64_t operations() const { return ops_; }

 private:
  struct Node {
    Entry entry;
    int child = -1;
    int sibling = -1;
  };
  bool Above(int a, int b) const;
  int Link(int a, int b);

  std::vector<Node> nodes_;
  uint64_t ops_ = 0;
};

// Per-supervertex heaviest incident edge, over a graph contracted along the
// frozen edges. F = frozen edges plus every supervertex's selection.
class GraphicApproxOracle : public DynamicBasis {
 public:
  GraphicApproxOracle(const GraphData& graph, std::vector<double> weights);

  OracleChanges Freeze(ElementId e) override;
  OracleChanges Decrement(ElementId e, double w) override;
  bool InBasis(ElementId e) const override;
  std::vector<ElementId> Basis() const override;

  double ApproxBaseWeight() const { return total_; }
  double RecomputeWeight() const;
  bool IsFrozen(ElementId e) const { return frozen_[e]; }
  double weight(ElementId e) const { return weight_[e]; }
  uint64_t heap_operations() const { return heaps_.operations(); }

 private:
  bool Valid(const PairingHeapPool::Entry& entry);
  // Re-selects the heaviest valid edge of supervertex s.
  void Select(int s);
  void SetSelection(int s, ElementId e);
  void Touch(ElementId e);
  // Turns the membership transitions of touched edges into a change record.
  OracleChanges Collect(ElementId changed, double old_weight);

  const GraphData* graph_;
  std::vector<double> weight_;
  std::vector<uint32_t> version_;
  std::vector<bool> frozen_;
  DisjointSets dsu_;
  PairingHeapPool heaps_;
  std::vector<int> heap_;        // heap root per supervertex, -1 if empty
  std::vector<ElementId> sel_;   // selected edge per supervertex
  std::vector<int> count_;       // selections + frozen mark per edge
  std::vector<std::pair<ElementId, int>> touched_;
  double total_ = 0.0;
};

}  // namespace submax

#endif  // SUBMAX_GRAPHIC_H_
