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

#ifndef SUBMAX_TRANSVERSAL_H_
#define SUBMAX_TRANSVERSAL_H_

#include <climits>
#include <cstdint>
#include <span>
#include <vector>

#include "submax/matroid.h"
#include "submax/matroid_core.h"

namespace submax {

// Weighted matching over a bipartite graph where only the just-decremented
// left vertex may ever lose its partner. Weights are handled as integer
// levels: level j stands for unit * (1+eps)^j.
class LStableMatching : public DynamicBasis {
 public:
  static constexpr int kZeroLevel = INT_MIN / 4;

  // unit defaults to the smallest positive weight.
  LStableMatching(const BipartiteGraph& graph, std::vector<double> weights,
                  double epsilon, double unit = 0.0);

  OracleChanges Decrement(ElementId l, double w) override;
  OracleChanges Freeze(ElementId l) override;
  bool InBasis(ElementId l) const override { return mate_l_[l] >= 0; }
  std::vector<ElementId> Basis() const override;

  // Runs the scan for an unmatched right vertex, following displacements.
  void MatchR(int r);

  int Level(double w) const;
  double LevelValue(int level) const;
  double RoundedWeight(ElementId l) const { return LevelValue(level_[l]); }
  // Sum of rounded weights over matched left vertices.
  double MatchingWeight() const;
  int MatchingSize() const;

  int mate_left(ElementId l) const { return mate_l_[l]; }
  int mate_right(int r) const { return mate_r_[r]; }
  int weight_level(ElementId l) const { return level_[l]; }
  int virtual_level(ElementId l) const { return vw_[l]; }
  bool fallback(ElementId l) const { return fallback_[l]; }
  bool frozen(ElementId l) const { return frozen_[l]; }
  int scan_level(int r) const { return j_[r]; }
  int top_level() const { return k_; }
  int threshold() const { return threshold_; }
  uint64_t scans() const { return scans_; }
  // Positions r's pointer has advanced over, fallback scans excluded.
  uint64_t pointer_scans(int r) const { return pointer_scans_[r]; }
  const std::vector<ElementId>& right_neighbors(int r) const {
    return nbr_[r];
  }
  const BipartiteGraph& graph() const { return *graph_; }

 private:
  void Link(ElementId l, int r, bool by_fallback);

  const BipartiteGraph* graph_;
  double epsilon_;
  double unit_ = 1.0;
  double log_base_;
  int k_ = 0;
  int threshold_;
  std::vector<double> weight_;
  std::vector<int> level_;
  std::vector<int> vw_;
  std::vector<bool> fallback_;
  std::vector<bool> frozen_;
  std::vector<int> mate_l_;
  std::vector<int> mate_r_;
  std::vector<std::vector<ElementId>> nbr_;
  std::vector<int> p_;
  std::vector<int> j_;
  std::vector<ElementId> newly_matched_;
  std::vector<uint64_t> pointer_scans_;
  uint64_t scans_ = 0;
};

// Cardinality matching with no augmenting path of length <= 2 + 2/eps.
// Matched left vertices stay matched; deletions insert a private right
// vertex adjacent only to the deleted element.
class DecMatching {
 public:
  DecMatching(const BipartiteGraph& graph, double epsilon);

  // Seeds an independent set that is matched exactly and never deleted.
  void Seed(std::span<const ElementId> base);
  // Rebuilds over the current basis plus elems; returns the newly matched
  // elements of elems.
  std::vector<ElementId> BatchInsert(std::span<const ElementId> elems);
  // Returns the elements that became matched as a replacement.
  std::vector<ElementId> Delete(ElementId l);
  bool Test(ElementId l) const {
    return active_[l] && !deleted_[l] && mate_l_[l] >= 0;
  }
  // Matched, active, non-deleted elements.
  std::vector<ElementId> Matched() const;

  int max_path_length() const { return max_path_; }
  bool active(ElementId l) const { return active_[l]; }
  bool deleted(ElementId l) const { return deleted_[l]; }
  int mate_left(ElementId l) const { return mate_l_[l]; }
  int num_right_total() const { return static_cast<int>(mate_r_.size()); }
  // Left neighbors of a right vertex, dummies included.
  std::vector<ElementId> LeftNeighbors(int r) const;
  int MatchingSize() const;
  uint64_t batch_inserts() const { return batch_inserts_; }
  uint64_t deletes() const { return deletes_; }

 private:
  // Shortest augmenting path from the free right vertex r within the length
  // bound; ties prefer lower rank. Returns the newly matched left end.
  ElementId InsertRight(int r);

  const BipartiteGraph* graph_;
  int max_path_;
  std::vector<std::vector<ElementId>> radj_;
  std::vector<bool> active_;
  std::vector<bool> deleted_;
  std::vector<bool> seeded_;
  std::vector<int> mate_l_;
  std::vector<int> mate_r_;
  std::vector<ElementId> dummy_of_;  // per right vertex beyond the real ones
  std::vector<int> rank_;
  uint64_t batch_inserts_ = 0;
  uint64_t deletes_ = 0;
};

}  // namespace submax

#endif  // SUBMAX_TRANSVERSAL_H_
