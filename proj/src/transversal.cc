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

#include "submax/transversal.h"

#include <algorithm>
#include <cmath>
#include <deque>

namespace submax {

// ---------------------------------------------------------------------------
// LStableMatching

LStableMatching::LStableMatching(const BipartiteGraph& graph,
                                 std::vector<double> weights, double epsilon,
                                 double unit)
    : graph_(&graph),
      epsilon_(epsilon),
      log_base_(std::log1p(epsilon)),
      threshold_(-static_cast<int>(std::floor(1.0 / epsilon + 1e-9))),
      weight_(std::move(weights)) {
  const int nl = graph.num_left();
  const int nr = graph.num_right;
  if (!(epsilon > 0.0 && epsilon < 1.0)) throw DomainError("bad epsilon");
  if (static_cast<int>(weight_.size()) != nl) {
    throw DomainError("weight vector size mismatch");
  }
  double smallest = 0.0;
  for (double w : weight_) {
    if (!(w >= 0.0)) throw DomainError("negative weight");
    if (w > 0.0 && (smallest == 0.0 || w < smallest)) smallest = w;
  }
  unit_ = unit > 0.0 ? unit : (smallest > 0.0 ? smallest : 1.0);
  level_.resize(nl);
  k_ = 0;
  for (int l = 0; l < nl; ++l) {
    level_[l] = Level(weight_[l]);
    if (level_[l] != kZeroLevel) k_ = std::max(k_, level_[l]);
  }
  vw_ = level_;
  fallback_.assign(nl, false);
  frozen_.assign(nl, false);
  mate_l_.assign(nl, -1);
  mate_r_.assign(nr, -1);
  nbr_.assign(nr, {});
  for (int l = 0; l < nl; ++l) {
    for (int r : graph.adjacency[l]) nbr_[r].push_back(l);
  }
  p_.assign(nr, 0);
  j_.assign(nr, k_);
  pointer_scans_.assign(nr, 0);
  for (int r = 0; r < nr; ++r) MatchR(r);
  newly_matched_.clear();
}

int LStableMatching::Level(double w) const {
  if (!(w > 0.0)) return kZeroLevel;
  const int level =
      static_cast<int>(std::floor(std::log(w / unit_) / log_base_ + 1e-9));
  return level < threshold_ ? kZeroLevel : level;
}

double LStableMatching::LevelValue(int level) const {
  if (level == kZeroLevel) return 0.0;
  return unit_ * std::pow(1.0 + epsilon_, level);
}

void LStableMatching::Link(ElementId l, int r, bool by_fallback) {
  mate_l_[l] = r;
  mate_r_[r] = l;
  fallback_[l] = by_fallback;
}

void LStableMatching::MatchR(int r) {
  if (r < 0 || r >= static_cast<int>(mate_r_.size())) {
    throw DomainError("unknown right vertex");
  }
  if (mate_r_[r] >= 0) throw DomainError("MatchR on a matched vertex");
  std::deque<int> work = {r};
  while (!work.empty()) {
    const int x = work.front();
    work.pop_front();
    const auto& nx = nbr_[x];
    const int size = static_cast<int>(nx.size());
    int unmatched = -1;
    bool done = false;
    while (j_[x] >= threshold_ && unmatched < 0 && !done) {
      while (p_[x] < size && unmatched < 0 && !done) {
        const ElementId l = nx[p_[x]++];
        ++scans_;
        ++pointer_scans_[x];
        if (vw_[l] != kZeroLevel && vw_[l] >= j_[x]) {
          --vw_[l];
          if (mate_l_[l] >= 0) {
            unmatched = mate_l_[l];
            mate_r_[unmatched] = -1;
          } else {
            newly_matched_.push_back(l);
            done = true;
          }
          Link(l, x, false);
        }
      }
      if (done) break;
      if (p_[x] >= size) {
        --j_[x];
        p_[x] = 0;
      }
    }
    if (mate_r_[x] < 0) {
      for (ElementId l : nx) {
        ++scans_;
        if (mate_l_[l] < 0) {
          Link(l, x, true);
          newly_matched_.push_back(l);
          break;
        }
      }
    }
    if (unmatched >= 0) work.push_back(unmatched);
  }
}

OracleChanges LStableMatching::Decrement(ElementId l, double w) {
  if (l < 0 || l >= static_cast<ElementId>(weight_.size())) {
    throw DomainError("unknown element");
  }
  if (frozen_[l]) throw DomainError("decrement of a frozen element");
  if (!(w < weight_[l]) || w < 0.0) {
    throw DomainError("decrement must lower the weight");
  }
  weight_[l] = w;
  const int level = Level(w);
  OracleChanges changes;
  if (level == level_[l]) return changes;
  level_[l] = level;
  if (mate_l_[l] < 0) {
    vw_[l] = level;
    return changes;
  }
  if (level > vw_[l]) return changes;  // still strictly above vw
  vw_[l] = level;
  const int r = mate_l_[l];
  mate_l_[l] = -1;
  mate_r_[r] = -1;
  fallback_[l] = false;
  newly_matched_.clear();
  MatchR(r);
  if (mate_l_[l] < 0) {
    // Keep the matching maximal: an unmatched neighbour of l has finished
    // all its scans, so l can only be taken as a weight-0 fallback.
    for (int x : graph_->adjacency[l]) {
      ++scans_;
      if (mate_r_[x] < 0) {
        Link(l, x, true);
        break;
      }
    }
  }
  for (ElementId x : newly_matched_) {
    if (x != l && mate_l_[x] >= 0) changes.added.push_back(x);
  }
  if (mate_l_[l] < 0) changes.removed.push_back(l);
  newly_matched_.clear();
  return changes;
}

OracleChanges LStableMatching::Freeze(ElementId l) {
  if (mate_l_[l] < 0) throw DomainError("freeze of an unmatched element");
  frozen_[l] = true;
  return {};
}

std::vector<ElementId> LStableMatching::Basis() const {
  std::vector<ElementId> out;
  for (size_t l = 0; l < mate_l_.size(); ++l) {
    if (mate_l_[l] >= 0) out.push_back(static_cast<ElementId>(l));
  }
  return out;
}

double LStableMatching::MatchingWeight() const {
  double total = 0.0;
  for (size_t l = 0; l < mate_l_.size(); ++l) {
    if (mate_l_[l] >= 0) total += LevelValue(level_[l]);
  }
  return total;
}

int LStableMatching::MatchingSize() const {
  int size = 0;
  for (int m : mate_l_) size += m >= 0 ? 1 : 0;
  return size;
}

// ---------------------------------------------------------------------------
// DecMatching

DecMatching::DecMatching(const BipartiteGraph& graph, double epsilon)
    : graph_(&graph),
      max_path_(2 + static_cast<int>(std::floor(2.0 / epsilon + 1e-9))),
      radj_(graph.num_right),
      active_(graph.num_left(), false),
      deleted_(graph.num_left(), false),
      seeded_(graph.num_left(), false),
      mate_l_(graph.num_left(), -1),
      mate_r_(graph.num_right, -1),
      rank_(graph.num_left(), 0) {
  if (!(epsilon > 0.0)) throw DomainError("bad epsilon");
  for (int l = 0; l < graph.num_left(); ++l) {
    for (int r : graph.adjacency[l]) radj_[r].push_back(l);
  }
}

std::vector<ElementId> DecMatching::LeftNeighbors(int r) const {
  if (r >= graph_->num_right) return {dummy_of_[r - graph_->num_right]};
  std::vector<ElementId> out;
  for (ElementId l : radj_[r]) {
    if (active_[l]) out.push_back(l);
  }
  return out;
}

void DecMatching::Seed(std::span<const ElementId> base) {
  for (ElementId l : base) {
    active_[l] = true;
    seeded_[l] = true;
  }
  // Exact matching of the seed by repeated shortest augmentation without a
  // length bound.
  const int saved = max_path_;
  max_path_ = 2 * graph_->num_left() + 1;
  for (int r = 0; r < graph_->num_right; ++r) {
    if (mate_r_[r] < 0) InsertRight(r);
  }
  max_path_ = saved;
  for (ElementId l : base) {
    if (mate_l_[l] < 0) throw DomainError("seed set is dependent");
  }
}

ElementId DecMatching::InsertRight(int r) {
  // BFS over right vertices; parent_l[x] is the left vertex used to reach x.
  const int max_left = (max_path_ + 1) / 2;
  std::vector<int> queue = {r};
  std::vector<int> depth = {1};
  std::vector<int> from = {-1};  // index in queue of the previous right vertex
  std::vector<ElementId> via = {kNone};
  std::vector<bool> seen(mate_l_.size(), false);
  for (size_t head = 0; head < queue.size(); ++head) {
    const int x = queue[head];
    std::vector<ElementId> nbrs = LeftNeighbors(x);
    std::sort(nbrs.begin(), nbrs.end(), [&](ElementId a, ElementId b) {
      return rank_[a] != rank_[b] ? rank_[a] < rank_[b] : a < b;
    });
    for (ElementId l : nbrs) {
      if (seen[l]) continue;
      seen[l] = true;
      if (mate_l_[l] < 0) {
        // Augment along the path back to r.
        ElementId cur_l = l;
        int idx = static_cast<int>(head);
        while (idx >= 0) {
          const int rx = queue[idx];
          const ElementId prev_l = via[idx];
          mate_l_[cur_l] = rx;
          mate_r_[rx] = cur_l;
          ++rank_[cur_l];
          cur_l = prev_l;
          idx = from[idx];
        }
        return l;
      }
      if (depth[head] < max_left && mate_l_[l] != x) {
        queue.push_back(mate_l_[l]);
        depth.push_back(depth[head] + 1);
        from.push_back(static_cast<int>(head));
        via.push_back(l);
      }
    }
  }
  return kNone;
}

std::vector<ElementId> DecMatching::BatchInsert(
    std::span<const ElementId> elems) {
  ++batch_inserts_;
  const std::vector<ElementId> prior = Matched();
  std::vector<int> prior_mate(prior.size());
  for (size_t i = 0; i < prior.size(); ++i) prior_mate[i] = mate_l_[prior[i]];
  std::vector<bool> in_prior(mate_l_.size(), false);
  for (ElementId l : prior) in_prior[l] = true;

  std::fill(active_.begin(), active_.end(), false);
  std::fill(deleted_.begin(), deleted_.end(), false);
  std::fill(mate_l_.begin(), mate_l_.end(), -1);
  std::fill(rank_.begin(), rank_.end(), 0);
  mate_r_.assign(graph_->num_right, -1);
  dummy_of_.clear();
  for (ElementId l : prior) active_[l] = true;
  for (ElementId l : elems) {
    if (l < 0 || l >= static_cast<ElementId>(active_.size())) {
      throw DomainError("unknown element");
    }
    active_[l] = true;
  }
  // Right ends of basis edges go first and take their old partners.
  std::vector<bool> placed(graph_->num_right, false);
  for (size_t i = 0; i < prior.size(); ++i) {
    const int r = prior_mate[i];
    mate_l_[prior[i]] = r;
    mate_r_[r] = prior[i];
    placed[r] = true;
  }
  for (int r = 0; r < graph_->num_right; ++r) {
    if (!placed[r]) InsertRight(r);
  }
  std::vector<ElementId> out;
  for (ElementId l : elems) {
    if (!in_prior[l] && mate_l_[l] >= 0) out.push_back(l);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<ElementId> DecMatching::Delete(ElementId l) {
  if (l < 0 || l >= static_cast<ElementId>(active_.size()) || !active_[l] ||
      deleted_[l]) {
    throw DomainError("delete of an absent element");
  }
  if (seeded_[l]) throw DomainError("seeded elements cannot be deleted");
  ++deletes_;
  deleted_[l] = true;
  const int dummy = static_cast<int>(mate_r_.size());
  mate_r_.push_back(-1);
  dummy_of_.push_back(l);
  const ElementId got = InsertRight(dummy);
  std::vector<ElementId> out;
  if (got != kNone && got != l && !deleted_[got]) out.push_back(got);
  return out;
}

std::vector<ElementId> DecMatching::Matched() const {
  std::vector<ElementId> out;
  for (size_t l = 0; l < mate_l_.size(); ++l) {
    if (active_[l] && !deleted_[l] && mate_l_[l] >= 0) {
      out.push_back(static_cast<ElementId>(l));
    }
  }
  return out;
}

int DecMatching::MatchingSize() const {
  int size = 0;
  for (int m : mate_r_) size += m >= 0 ? 1 : 0;
  return size;
}

}  // namespace submax
