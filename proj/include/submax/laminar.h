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

// Exact dynamic maximum-weight basis of a laminar matroid.
//
// Tree nodes are addressed by a single integer: internal nodes are
// 0..num_internal()-1 and the leaf of element e is num_internal() + e.

#ifndef SUBMAX_LAMINAR_H_
#define SUBMAX_LAMINAR_H_

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "submax/matroid.h"
#include "submax/matroid_core.h"

namespace submax {

class LaminarStructure {
 public:
  explicit LaminarStructure(const LaminarFamily& family);
  virtual ~LaminarStructure() = default;

  // Attaches element u under internal node v and restores a maximum-weight
  // basis. At most one element enters and at most one leaves.
  OracleChanges Insert(ElementId u, int v, double w);
  OracleChanges Delete(ElementId u);

  std::vector<ElementId> Query() const;
  double ApproxBaseWeight() const;

  // Nearest node to x on the root path of x (x included) with zero residual,
  // or -1.
  virtual int LowestTightConstraint(int x) const = 0;
  // Lightest basis element in the subtree of x.
  virtual ElementId QueryMin(int x) const = 0;
  // Heaviest non-basis element in the subtree of x whose ancestors strictly
  // below x all have positive residual.
  virtual ElementId QueryMax(int x) const = 0;
  virtual int Residual(int x) const = 0;
  virtual void Add(ElementId u) = 0;
  virtual void Remove(ElementId u) = 0;

  int num_internal() const { return static_cast<int>(parent_.size()); }
  int root() const { return root_; }
  int LeafNode(ElementId e) const { return num_internal() + e; }
  int parent(int internal) const { return parent_[internal]; }
  int capacity(int internal) const { return capacity_[internal]; }
  bool Present(ElementId e) const {
    return e >= 0 && e < static_cast<ElementId>(present_.size()) &&
           present_[e];
  }
  bool InB(ElementId e) const { return Present(e) && in_b_[e]; }
  double weight(ElementId e) const { return weight_[e]; }
  int LeafParent(ElementId e) const { return leaf_parent_[e]; }
  int element_capacity() const { return static_cast<int>(present_.size()); }

  // Cost of the last Insert/Delete in structural steps (joins + splits for
  // the top tree, visited nodes for the slow structure).
  uint64_t last_op_cost() const { return op_cost_; }

 protected:
  // Registers u under v with weight w; u is not yet present.
  virtual void Prepare(ElementId u, int v, double w);
  // Marks u present (residual 1) and, for the AndAdd form, adds it.
  virtual void Attach(ElementId u) = 0;
  virtual void AttachAndAdd(ElementId u) {
    Attach(u);
    Add(u);
  }
  // Marks a non-basis u absent.
  virtual void Detach(ElementId u) = 0;
  virtual void RemoveAndDetach(ElementId u) {
    Remove(u);
    Detach(u);
  }

  bool HeavierElement(ElementId a, ElementId b) const;

  std::vector<int> parent_;
  std::vector<int> capacity_;
  int root_ = -1;
  std::vector<int> leaf_parent_;  // -1 while absent
  std::vector<double> weight_;
  std::vector<bool> present_;
  std::vector<bool> in_b_;
  int basis_size_ = 0;
  mutable uint64_t op_cost_ = 0;
};

// O(depth) reference structure; every node aggregates its children.
class SlowLaminar : public LaminarStructure {
 public:
  explicit SlowLaminar(const LaminarFamily& family);

  int LowestTightConstraint(int x) const override;
  ElementId QueryMin(int x) const override;
  ElementId QueryMax(int x) const override;
  int Residual(int x) const override;
  void Add(ElementId u) override;
  void Remove(ElementId u) override;

 protected:
  void Prepare(ElementId u, int v, double w) override;
  void Attach(ElementId u) override;
  void Detach(ElementId u) override;

 private:
  void Refresh(int internal);
  ElementId MaxOf(ElementId a, ElementId b) const;
  ElementId MinOf(ElementId a, ElementId b) const;

  std::vector<std::vector<int>> internal_children_;
  std::vector<std::vector<ElementId>> leaf_children_;
  std::vector<int> c_;
  std::vector<ElementId> max_;
  std::vector<ElementId> min_;
};

// Static top tree over the laminar tree with one pre-allocated leaf slot per
// element. Absent slots are neutral (residual +inf, no candidates), so
// insert and delete only walk a root-to-leaf chain of the cluster hierarchy.
// Attaching an element under a different parent than its slot, or a new id,
// rebuilds the hierarchy.
class LaminarTopTree : public LaminarStructure {
 public:
  enum class Kind : uint8_t { kVertex, kAddVertex, kCompress, kAddEdge, kRake };

  struct Cluster {
    Kind kind = Kind::kVertex;
    int left = -1;    // compress: lower part; add-vertex/add-edge: child
    int right = -1;   // compress: upper part
    int parent = -1;
    int vertex = -1;  // vertex and add-vertex clusters
    // Path clusters.
    int minc = 0;
    int delta = 0;
    int lo = -1;  // argmin closest to the bottom
    int hi = -1;  // argmin closest to the top
    ElementId maxe0 = kNone;
    ElementId maxe1 = kNone;
    // Point clusters.
    ElementId maxe = kNone;
    // Both.
    ElementId mine = kNone;

    bool is_path() const {
      return kind == Kind::kVertex || kind == Kind::kAddVertex ||
             kind == Kind::kCompress;
    }
  };

  struct Stats {
    uint64_t splits = 0;
    uint64_t joins = 0;
    uint64_t temp_joins = 0;
    uint64_t rebuilds = 0;
  };

  static constexpr int kAbsent = 1 << 28;

  // Slots are created for every element of family.leaf_parent; all start
  // absent.
  explicit LaminarTopTree(const LaminarFamily& family);

  int LowestTightConstraint(int x) const override;
  ElementId QueryMin(int x) const override;
  ElementId QueryMax(int x) const override;
  int Residual(int x) const override;
  void Add(ElementId u) override;
  void Remove(ElementId u) override;
  // Marks a present u absent without touching ancestor residuals; used by
  // the rounding exchange search to drop settled elements.
  void Cut(ElementId u);
  // Re-attaches a cut element under its slot as a non-basis element.
  void Uncut(ElementId u);

  const Stats& stats() const { return stats_; }
  int num_tree_vertices() const {
    return num_internal() + static_cast<int>(slot_parent_.size());
  }
  int Height() const;
  const std::vector<Cluster>& clusters() const { return nodes_; }
  int root_cluster() const { return root_cluster_; }
  int ClusterOfVertex(int x) const { return node_of_vertex_[x]; }
  // Residual stored in a cluster's minc once pending deltas above it are
  // applied.
  int TrueMinc(int cluster) const;
  // Bottom-to-top vertices covered by a path cluster.
  std::vector<int> PathVertices(int cluster) const;
  // Tree children of a vertex in hierarchy order.
  const std::vector<int>& TreeChildren(int x) const { return children_[x]; }
  int HeavyChild(int x) const { return heavy_[x]; }

 protected:
  void Prepare(ElementId u, int v, double w) override;
  void Attach(ElementId u) override;
  void AttachAndAdd(ElementId u) override;
  void Detach(ElementId u) override;
  void RemoveAndDetach(ElementId u) override;

 private:
  struct PathFields {
    int minc = kAbsent;
    int lo = -1;
    int hi = -1;
    ElementId maxe0 = kNone;
    ElementId maxe1 = kNone;
    ElementId mine = kNone;
  };

  void Rebuild();
  int BuildPath(int top);
  int BuildVertex(int x);
  int MergeCompress(const std::vector<int>& items,
                    const std::vector<int64_t>& weights, int lo, int hi);
  int MergeRake(const std::vector<int>& items,
                const std::vector<int64_t>& weights, int lo, int hi);
  int NewCluster(Kind kind, int left, int right, int vertex);
  void Recompute(int c);
  // Applies d to every residual on the root path of x (x included), calls
  // mutate() at the bottom, and rejoins the chain.
  template <typename F>
  void PathUpdate(int x, int d, F mutate);
  std::vector<int> ChainTo(int x) const;
  PathFields FieldsOf(int cluster, int offset) const;
  PathFields CombineCompress(const PathFields& lower,
                             const PathFields& upper) const;
  ElementId MaxOf(ElementId a, ElementId b) const;
  ElementId MinOf(ElementId a, ElementId b) const;
  ElementId FullMaxe(const PathFields& f) const {
    return f.minc == 0 ? f.maxe0 : f.maxe1;
  }
  int InitialResidual(int x) const;
  bool IsLeafVertex(int x) const { return x >= num_internal(); }

  std::vector<int> slot_parent_;
  std::vector<std::vector<int>> children_;
  std::vector<int> heavy_;
  std::vector<int64_t> size_;
  std::vector<Cluster> nodes_;
  std::vector<int> node_of_vertex_;
  std::vector<int> rebuild_residual_;
  int root_cluster_ = -1;
  mutable Stats stats_;
};

// Max-weight basis oracle: Freeze is a no-op and Decrement is a delete
// followed by a re-insert under the same parent.
class LaminarBasis : public DynamicBasis {
 public:
  LaminarBasis(const LaminarFamily& family, const std::vector<double>& weights);

  OracleChanges Freeze(ElementId e) override;
  OracleChanges Decrement(ElementId e, double w) override;
  bool InBasis(ElementId e) const override { return tree_.InB(e); }
  std::vector<ElementId> Basis() const override { return tree_.Query(); }
  const LaminarTopTree& tree() const { return tree_; }

 private:
  LaminarTopTree tree_;
  std::vector<bool> frozen_;
};

std::unique_ptr<IncrementalIndependence> NewLaminarIncremental(
    const LaminarFamily& family);

}  // namespace submax

#endif  // SUBMAX_LAMINAR_H_
