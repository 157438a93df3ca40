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

#include "submax/laminar.h"

#include <algorithm>
#include <cstdlib>

namespace submax {

// ---------------------------------------------------------------------------
// LaminarStructure

LaminarStructure::LaminarStructure(const LaminarFamily& family)
    : parent_(family.parent), capacity_(family.capacity) {
  // Reuse the matroid validation of the parent array.
  (void)Matroid::Laminar(family);
  root_ = family.root();
  const size_t n = family.leaf_parent.size();
  leaf_parent_.assign(n, -1);
  weight_.assign(n, 0.0);
  present_.assign(n, false);
  in_b_.assign(n, false);
}

void LaminarStructure::Prepare(ElementId u, int v, double w) {
  if (u >= static_cast<ElementId>(present_.size())) {
    const size_t n = static_cast<size_t>(u) + 1;
    leaf_parent_.resize(n, -1);
    weight_.resize(n, 0.0);
    present_.resize(n, false);
    in_b_.resize(n, false);
  }
  leaf_parent_[u] = v;
  weight_[u] = w;
}

bool LaminarStructure::HeavierElement(ElementId a, ElementId b) const {
  return Heavier(weight_[a], a, weight_[b], b);
}

OracleChanges LaminarStructure::Insert(ElementId u, int v, double w) {
  if (u < 0) throw DomainError("negative element id");
  if (v < 0 || v >= num_internal()) {
    throw DomainError("insert needs an existing internal node");
  }
  if (Present(u)) throw DomainError("element already present");
  if (!(w >= 0.0)) throw DomainError("negative weight");
  op_cost_ = 0;
  Prepare(u, v, w);
  OracleChanges changes;
  const int y = LowestTightConstraint(v);
  if (y < 0) {
    AttachAndAdd(u);
    changes.added.push_back(u);
    return changes;
  }
  const ElementId m = QueryMin(y);
  if (m != kNone && HeavierElement(u, m)) {
    Remove(m);
    AttachAndAdd(u);
    changes.added.push_back(u);
    changes.removed.push_back(m);
    return changes;
  }
  Attach(u);
  return changes;
}

OracleChanges LaminarStructure::Delete(ElementId u) {
  if (!Present(u)) throw DomainError("delete of an absent element");
  op_cost_ = 0;
  OracleChanges changes;
  if (!in_b_[u]) {
    Detach(u);
    return changes;
  }
  RemoveAndDetach(u);
  changes.removed.push_back(u);
  // After the removal no node on u's path is tight, so the best addable
  // element anywhere is the unique replacement.
  if (Residual(root_) > 0) {
    const ElementId z = QueryMax(root_);
    if (z != kNone) {
      Add(z);
      changes.added.push_back(z);
    }
  }
  return changes;
}

std::vector<ElementId> LaminarStructure::Query() const {
  std::vector<ElementId> out;
  out.reserve(basis_size_);
  for (size_t e = 0; e < in_b_.size(); ++e) {
    if (present_[e] && in_b_[e]) out.push_back(static_cast<ElementId>(e));
  }
  return out;
}

double LaminarStructure::ApproxBaseWeight() const {
  double total = 0.0;
  for (size_t e = 0; e < in_b_.size(); ++e) {
    if (present_[e] && in_b_[e]) total += weight_[e];
  }
  return total;
}

// ---------------------------------------------------------------------------
// SlowLaminar

SlowLaminar::SlowLaminar(const LaminarFamily& family)
    : LaminarStructure(family),
      internal_children_(family.num_nodes()),
      leaf_children_(family.num_nodes()),
      c_(family.capacity),
      max_(family.num_nodes(), kNone),
      min_(family.num_nodes(), kNone) {
  for (int v = 0; v < num_internal(); ++v) {
    if (parent_[v] >= 0) internal_children_[parent_[v]].push_back(v);
  }
}

ElementId SlowLaminar::MaxOf(ElementId a, ElementId b) const {
  if (a == kNone) return b;
  if (b == kNone) return a;
  return HeavierElement(a, b) ? a : b;
}

ElementId SlowLaminar::MinOf(ElementId a, ElementId b) const {
  if (a == kNone) return b;
  if (b == kNone) return a;
  return HeavierElement(a, b) ? b : a;
}

void SlowLaminar::Refresh(int internal) {
  for (int x = internal; x >= 0; x = parent_[x]) {
    ++op_cost_;
    ElementId mx = kNone;
    ElementId mn = kNone;
    for (ElementId e : leaf_children_[x]) {
      if (in_b_[e]) {
        mn = MinOf(mn, e);
      } else {
        mx = MaxOf(mx, e);
      }
    }
    for (int y : internal_children_[x]) {
      mn = MinOf(mn, min_[y]);
      if (c_[y] > 0) mx = MaxOf(mx, max_[y]);
    }
    max_[x] = mx;
    min_[x] = mn;
  }
}

void SlowLaminar::Prepare(ElementId u, int v, double w) {
  LaminarStructure::Prepare(u, v, w);
}

void SlowLaminar::Attach(ElementId u) {
  present_[u] = true;
  leaf_children_[leaf_parent_[u]].push_back(u);
  Refresh(leaf_parent_[u]);
}

void SlowLaminar::Detach(ElementId u) {
  if (in_b_[u]) throw DomainError("detach of a basis element");
  auto& list = leaf_children_[leaf_parent_[u]];
  list.erase(std::find(list.begin(), list.end(), u));
  present_[u] = false;
  const int p = leaf_parent_[u];
  leaf_parent_[u] = -1;
  Refresh(p);
}

void SlowLaminar::Add(ElementId u) {
  if (!Present(u) || in_b_[u]) throw DomainError("add needs a present non-basis element");
  if (LowestTightConstraint(leaf_parent_[u]) >= 0) {
    throw DomainError("infeasible add");
  }
  for (int x = leaf_parent_[u]; x >= 0; x = parent_[x]) --c_[x];
  in_b_[u] = true;
  ++basis_size_;
  Refresh(leaf_parent_[u]);
}

void SlowLaminar::Remove(ElementId u) {
  if (!InB(u)) throw DomainError("remove of a non-basis element");
  for (int x = leaf_parent_[u]; x >= 0; x = parent_[x]) ++c_[x];
  in_b_[u] = false;
  --basis_size_;
  Refresh(leaf_parent_[u]);
}

int SlowLaminar::LowestTightConstraint(int x) const {
  int start = x;
  if (x >= num_internal()) {
    const ElementId e = x - num_internal();
    if (!Present(e)) throw DomainError("unknown node");
    if (in_b_[e]) return x;
    start = leaf_parent_[e];
  }
  for (int y = start; y >= 0; y = parent_[y]) {
    if (c_[y] == 0) return y;
  }
  return -1;
}

ElementId SlowLaminar::QueryMin(int x) const {
  if (x >= num_internal()) {
    const ElementId e = x - num_internal();
    return InB(e) ? e : kNone;
  }
  return min_[x];
}

ElementId SlowLaminar::QueryMax(int x) const {
  if (x >= num_internal()) return kNone;
  return max_[x];
}

int SlowLaminar::Residual(int x) const {
  if (x >= num_internal()) {
    const ElementId e = x - num_internal();
    if (!Present(e)) return LaminarTopTree::kAbsent;
    return in_b_[e] ? 0 : 1;
  }
  return c_[x];
}

// ---------------------------------------------------------------------------
// LaminarTopTree

LaminarTopTree::LaminarTopTree(const LaminarFamily& family)
    : LaminarStructure(family), slot_parent_(family.leaf_parent) {
  Rebuild();
}

ElementId LaminarTopTree::MaxOf(ElementId a, ElementId b) const {
  if (a == kNone) return b;
  if (b == kNone) return a;
  return HeavierElement(a, b) ? a : b;
}

ElementId LaminarTopTree::MinOf(ElementId a, ElementId b) const {
  if (a == kNone) return b;
  if (b == kNone) return a;
  return HeavierElement(a, b) ? b : a;
}

int LaminarTopTree::InitialResidual(int x) const {
  return rebuild_residual_[x];
}

void LaminarTopTree::Rebuild() {
  const int k = num_internal();
  const int v = k + static_cast<int>(slot_parent_.size());
  children_.assign(v, {});
  for (int x = 0; x < k; ++x) {
    if (parent_[x] >= 0) children_[parent_[x]].push_back(x);
  }
  for (size_t s = 0; s < slot_parent_.size(); ++s) {
    children_[slot_parent_[s]].push_back(k + static_cast<int>(s));
  }
  // Breadth-first order from the root; reversed it is bottom-up.
  std::vector<int> order;
  order.reserve(v);
  order.push_back(root_);
  for (size_t i = 0; i < order.size(); ++i) {
    for (int c : children_[order[i]]) order.push_back(c);
  }
  size_.assign(v, 1);
  heavy_.assign(v, -1);
  std::vector<int> basis_count(v, 0);
  for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
    const int x = order[i];
    if (x >= k) {
      const ElementId e = x - k;
      basis_count[x] = (Present(e) && in_b_[e]) ? 1 : 0;
      continue;
    }
    int64_t best = -1;
    for (int c : children_[x]) {
      size_[x] += size_[c];
      basis_count[x] += basis_count[c];
      if (size_[c] > best) {
        best = size_[c];
        heavy_[x] = c;
      }
    }
  }
  rebuild_residual_.assign(v, 0);
  for (int x = 0; x < v; ++x) {
    if (x < k) {
      rebuild_residual_[x] = capacity_[x] - basis_count[x];
    } else {
      const ElementId e = x - k;
      rebuild_residual_[x] = Present(e) ? (in_b_[e] ? 0 : 1) : kAbsent;
    }
  }
  nodes_.clear();
  nodes_.reserve(4 * static_cast<size_t>(v));
  node_of_vertex_.assign(v, -1);
  root_cluster_ = BuildPath(root_);
}

int LaminarTopTree::NewCluster(Kind kind, int left, int right, int vertex) {
  Cluster c;
  c.kind = kind;
  c.left = left;
  c.right = right;
  c.vertex = vertex;
  const int id = static_cast<int>(nodes_.size());
  nodes_.push_back(c);
  if (left >= 0) nodes_[left].parent = id;
  if (right >= 0) nodes_[right].parent = id;
  if (vertex >= 0) node_of_vertex_[vertex] = id;
  return id;
}

int LaminarTopTree::BuildPath(int top) {
  std::vector<int> verts;
  for (int x = top; x >= 0; x = heavy_[x]) verts.push_back(x);
  std::reverse(verts.begin(), verts.end());  // bottom first
  std::vector<int> items;
  std::vector<int64_t> weights;
  for (int x : verts) {
    items.push_back(BuildVertex(x));
    weights.push_back(size_[x] - (heavy_[x] >= 0 ? size_[heavy_[x]] : 0));
  }
  return MergeCompress(items, weights, 0, static_cast<int>(items.size()));
}

int LaminarTopTree::BuildVertex(int x) {
  std::vector<int> points;
  std::vector<int64_t> weights;
  for (int c : children_[x]) {
    if (c == heavy_[x]) continue;
    const int path = BuildPath(c);
    const int edge = NewCluster(Kind::kAddEdge, path, -1, -1);
    Recompute(edge);
    points.push_back(edge);
    weights.push_back(size_[c]);
  }
  int id;
  if (points.empty()) {
    id = NewCluster(Kind::kVertex, -1, -1, x);
  } else {
    const int rake =
        MergeRake(points, weights, 0, static_cast<int>(points.size()));
    id = NewCluster(Kind::kAddVertex, rake, -1, x);
  }
  nodes_[id].minc = InitialResidual(x);
  Recompute(id);
  return id;
}

namespace {

// Split point in (lo, hi) balancing the two weight halves.
int BalancedSplit(const std::vector<int64_t>& weights, int lo, int hi) {
  int64_t total = 0;
  for (int i = lo; i < hi; ++i) total += weights[i];
  int64_t prefix = 0;
  int best = lo + 1;
  int64_t best_gap = -1;
  for (int m = lo + 1; m < hi; ++m) {
    prefix += weights[m - 1];
    const int64_t gap = std::llabs(2 * prefix - total);
    if (best_gap < 0 || gap < best_gap) {
      best_gap = gap;
      best = m;
    }
  }
  return best;
}

}  // namespace

int LaminarTopTree::MergeCompress(const std::vector<int>& items,
                                  const std::vector<int64_t>& weights, int lo,
                                  int hi) {
  if (hi - lo == 1) return items[lo];
  const int m = BalancedSplit(weights, lo, hi);
  const int lower = MergeCompress(items, weights, lo, m);
  const int upper = MergeCompress(items, weights, m, hi);
  const int id = NewCluster(Kind::kCompress, lower, upper, -1);
  Recompute(id);
  return id;
}

int LaminarTopTree::MergeRake(const std::vector<int>& items,
                              const std::vector<int64_t>& weights, int lo,
                              int hi) {
  if (hi - lo == 1) return items[lo];
  const int m = BalancedSplit(weights, lo, hi);
  const int a = MergeRake(items, weights, lo, m);
  const int b = MergeRake(items, weights, m, hi);
  const int id = NewCluster(Kind::kRake, a, b, -1);
  Recompute(id);
  return id;
}

void LaminarTopTree::Recompute(int c) {
  Cluster& x = nodes_[c];
  switch (x.kind) {
    case Kind::kVertex: {
      x.lo = x.hi = x.vertex;
      x.maxe0 = kNone;
      if (IsLeafVertex(x.vertex)) {
        const ElementId e = x.vertex - num_internal();
        x.maxe1 = Present(e) ? e : kNone;
        x.mine = (Present(e) && in_b_[e]) ? e : kNone;
      } else {
        x.maxe1 = kNone;
        x.mine = kNone;
      }
      break;
    }
    case Kind::kAddVertex: {
      const Cluster& r = nodes_[x.left];
      x.lo = x.hi = x.vertex;
      x.maxe0 = kNone;
      x.maxe1 = r.maxe;
      x.mine = r.mine;
      break;
    }
    case Kind::kCompress: {
      const Cluster& a = nodes_[x.left];   // lower
      const Cluster& b = nodes_[x.right];  // upper
      x.minc = std::min(a.minc, b.minc);
      x.lo = a.minc <= b.minc ? a.lo : b.lo;
      x.hi = b.minc <= a.minc ? b.hi : a.hi;
      x.maxe1 = MaxOf(a.maxe1, b.maxe1);
      x.maxe0 = b.minc <= a.minc ? b.maxe0 : MaxOf(a.maxe0, b.maxe1);
      x.mine = MinOf(a.mine, b.mine);
      break;
    }
    case Kind::kAddEdge: {
      const Cluster& p = nodes_[x.left];
      x.maxe = p.minc == 0 ? p.maxe0 : p.maxe1;
      x.mine = p.mine;
      break;
    }
    case Kind::kRake: {
      const Cluster& a = nodes_[x.left];
      const Cluster& b = nodes_[x.right];
      x.maxe = MaxOf(a.maxe, b.maxe);
      x.mine = MinOf(a.mine, b.mine);
      break;
    }
  }
}

std::vector<int> LaminarTopTree::ChainTo(int x) const {
  std::vector<int> chain;
  for (int c = node_of_vertex_[x]; c >= 0; c = nodes_[c].parent) {
    chain.push_back(c);
  }
  std::reverse(chain.begin(), chain.end());
  return chain;
}

template <typename F>
void LaminarTopTree::PathUpdate(int x, int d, F mutate) {
  const std::vector<int> chain = ChainTo(x);
  const int len = static_cast<int>(chain.size());
  for (int i = 0; i + 1 < len; ++i) {
    Cluster& c = nodes_[chain[i]];
    const int next = chain[i + 1];
    if (c.kind == Kind::kCompress) {
      // Split: hand the pending delta to both halves.
      ++stats_.splits;
      ++op_cost_;
      for (int child : {c.left, c.right}) {
        Cluster& h = nodes_[child];
        h.minc += c.delta;
        if (h.kind == Kind::kCompress) h.delta += c.delta;
      }
      c.delta = 0;
      if (d != 0 && next == c.left) {
        Cluster& upper = nodes_[c.right];
        upper.minc += d;
        if (upper.kind == Kind::kCompress) upper.delta += d;
      }
    } else if (c.kind == Kind::kAddVertex && next == c.left) {
      c.minc += d;
    }
  }
  mutate(nodes_[chain[len - 1]]);
  for (int i = len - 1; i >= 0; --i) {
    Recompute(chain[i]);
    if (nodes_[chain[i]].kind != Kind::kVertex) {
      ++stats_.joins;
      ++op_cost_;
    }
  }
}

int LaminarTopTree::TrueMinc(int cluster) const {
  int value = nodes_[cluster].minc;
  for (int c = nodes_[cluster].parent;
       c >= 0 && nodes_[c].kind == Kind::kCompress; c = nodes_[c].parent) {
    value += nodes_[c].delta;
  }
  return value;
}

int LaminarTopTree::Residual(int x) const {
  if (x < 0 || x >= num_tree_vertices()) throw DomainError("unknown node");
  return TrueMinc(node_of_vertex_[x]);
}

int LaminarTopTree::LowestTightConstraint(int x) const {
  if (x < 0 || x >= num_tree_vertices()) throw DomainError("unknown node");
  const std::vector<int> chain = ChainTo(x);
  const int len = static_cast<int>(chain.size());
  std::vector<int> offset(len, 0);
  for (int i = 0; i + 1 < len; ++i) {
    const Cluster& c = nodes_[chain[i]];
    offset[i + 1] = c.kind == Kind::kCompress ? offset[i] + c.delta : 0;
  }
  if (nodes_[chain[len - 1]].minc + offset[len - 1] == 0) return x;
  for (int i = len - 2; i >= 0; --i) {
    const Cluster& c = nodes_[chain[i]];
    const int next = chain[i + 1];
    if (c.kind == Kind::kCompress && next == c.left) {
      const Cluster& upper = nodes_[c.right];
      if (upper.minc + offset[i] + c.delta == 0) return upper.lo;
    } else if (c.kind == Kind::kAddVertex && next == c.left) {
      if (c.minc + offset[i] == 0) return c.vertex;
    }
  }
  return -1;
}

LaminarTopTree::PathFields LaminarTopTree::FieldsOf(int cluster,
                                                    int offset) const {
  const Cluster& c = nodes_[cluster];
  PathFields f;
  f.minc = c.minc + offset;
  f.lo = c.lo;
  f.hi = c.hi;
  f.maxe0 = c.maxe0;
  f.maxe1 = c.maxe1;
  f.mine = c.mine;
  return f;
}

LaminarTopTree::PathFields LaminarTopTree::CombineCompress(
    const PathFields& a, const PathFields& b) const {
  ++stats_.temp_joins;
  ++op_cost_;
  PathFields f;
  f.minc = std::min(a.minc, b.minc);
  f.lo = a.minc <= b.minc ? a.lo : b.lo;
  f.hi = b.minc <= a.minc ? b.hi : a.hi;
  f.maxe1 = MaxOf(a.maxe1, b.maxe1);
  f.maxe0 = b.minc <= a.minc ? b.maxe0 : MaxOf(a.maxe0, b.maxe1);
  f.mine = MinOf(a.mine, b.mine);
  return f;
}

ElementId LaminarTopTree::QueryMin(int x) const {
  if (x < 0 || x >= num_tree_vertices()) throw DomainError("unknown node");
  if (IsLeafVertex(x)) {
    const ElementId e = x - num_internal();
    return InB(e) ? e : kNone;
  }
  const int n = node_of_vertex_[x];
  ElementId best =
      nodes_[n].kind == Kind::kAddVertex ? nodes_[nodes_[n].left].mine : kNone;
  // Lower part of the heavy path: left siblings met while climbing through
  // compress clusters.
  for (int cur = n, p = nodes_[n].parent;
       p >= 0 && nodes_[p].kind == Kind::kCompress;
       cur = p, p = nodes_[p].parent) {
    if (nodes_[p].right == cur) best = MinOf(best, nodes_[nodes_[p].left].mine);
  }
  return best;
}

ElementId LaminarTopTree::QueryMax(int x) const {
  if (x < 0 || x >= num_tree_vertices()) throw DomainError("unknown node");
  if (IsLeafVertex(x)) return kNone;
  const int n = node_of_vertex_[x];
  ElementId best =
      nodes_[n].kind == Kind::kAddVertex ? nodes_[nodes_[n].left].maxe : kNone;
  std::vector<int> ancestors;  // compress ancestors, bottom-up
  for (int p = nodes_[n].parent; p >= 0 && nodes_[p].kind == Kind::kCompress;
       p = nodes_[p].parent) {
    ancestors.push_back(p);
  }
  const int t = static_cast<int>(ancestors.size());
  std::vector<int> offset(t, 0);  // pending deltas above each ancestor
  for (int k = t - 2; k >= 0; --k) {
    offset[k] = offset[k + 1] + nodes_[ancestors[k + 1]].delta;
  }
  bool any = false;
  PathFields below;
  int cur = n;
  for (int k = 0; k < t; ++k) {
    const Cluster& p = nodes_[ancestors[k]];
    if (p.right == cur) {
      const PathFields sib = FieldsOf(p.left, offset[k] + p.delta);
      below = any ? CombineCompress(sib, below) : sib;
      any = true;
    }
    cur = ancestors[k];
  }
  if (any) best = MaxOf(best, FullMaxe(below));
  return best;
}

void LaminarTopTree::Prepare(ElementId u, int v, double w) {
  LaminarStructure::Prepare(u, v, w);
  bool rebuild = false;
  if (u >= static_cast<ElementId>(slot_parent_.size())) {
    slot_parent_.resize(static_cast<size_t>(u) + 1, v);
    rebuild = true;
  } else if (slot_parent_[u] != v) {
    slot_parent_[u] = v;
    rebuild = true;
  }
  if (rebuild) {
    ++stats_.rebuilds;
    Rebuild();
  }
}

void LaminarTopTree::Attach(ElementId u) {
  PathUpdate(LeafNode(u), 0, [&](Cluster& leaf) {
    present_[u] = true;
    leaf.minc = 1;
  });
}

void LaminarTopTree::AttachAndAdd(ElementId u) {
  PathUpdate(LeafNode(u), -1, [&](Cluster& leaf) {
    present_[u] = true;
    in_b_[u] = true;
    ++basis_size_;
    leaf.minc = 0;
  });
}

void LaminarTopTree::Detach(ElementId u) {
  if (in_b_[u]) throw DomainError("detach of a basis element");
  PathUpdate(LeafNode(u), 0, [&](Cluster& leaf) {
    present_[u] = false;
    leaf.minc = kAbsent;
  });
  leaf_parent_[u] = -1;
}

void LaminarTopTree::RemoveAndDetach(ElementId u) {
  PathUpdate(LeafNode(u), +1, [&](Cluster& leaf) {
    in_b_[u] = false;
    --basis_size_;
    present_[u] = false;
    leaf.minc = kAbsent;
  });
  leaf_parent_[u] = -1;
}

void LaminarTopTree::Add(ElementId u) {
  if (!Present(u) || in_b_[u]) {
    throw DomainError("add needs a present non-basis element");
  }
  if (LowestTightConstraint(leaf_parent_[u]) >= 0) {
    throw DomainError("infeasible add");
  }
  PathUpdate(LeafNode(u), -1, [&](Cluster& leaf) {
    in_b_[u] = true;
    ++basis_size_;
    leaf.minc = 0;
  });
}

void LaminarTopTree::Remove(ElementId u) {
  if (!InB(u)) throw DomainError("remove of a non-basis element");
  PathUpdate(LeafNode(u), +1, [&](Cluster& leaf) {
    in_b_[u] = false;
    --basis_size_;
    leaf.minc = 1;
  });
}

void LaminarTopTree::Cut(ElementId u) {
  if (!Present(u)) throw DomainError("cut of an absent element");
  PathUpdate(LeafNode(u), 0, [&](Cluster& leaf) {
    if (in_b_[u]) --basis_size_;
    in_b_[u] = false;
    present_[u] = false;
    leaf.minc = kAbsent;
  });
  leaf_parent_[u] = -1;
}

void LaminarTopTree::Uncut(ElementId u) {
  if (u < 0 || u >= static_cast<ElementId>(slot_parent_.size()) ||
      Present(u)) {
    throw DomainError("uncut needs a cut element");
  }
  leaf_parent_[u] = slot_parent_[u];
  Attach(u);
}

int LaminarTopTree::Height() const {
  int best = 0;
  for (size_t c = 0; c < nodes_.size(); ++c) {
    int h = 0;
    for (int x = static_cast<int>(c); x >= 0; x = nodes_[x].parent) ++h;
    best = std::max(best, h);
  }
  return best;
}

std::vector<int> LaminarTopTree::PathVertices(int cluster) const {
  std::vector<int> out;
  std::vector<int> stack = {cluster};
  // Compress children are (lower, upper); visit lower first.
  while (!stack.empty()) {
    const int c = stack.back();
    stack.pop_back();
    const Cluster& x = nodes_[c];
    if (x.kind == Kind::kCompress) {
      stack.push_back(x.right);
      stack.push_back(x.left);
    } else {
      out.push_back(x.vertex);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// LaminarBasis and the incremental oracle

LaminarBasis::LaminarBasis(const LaminarFamily& family,
                           const std::vector<double>& weights)
    : tree_(family), frozen_(family.leaf_parent.size(), false) {
  if (weights.size() != family.leaf_parent.size()) {
    throw DomainError("weight vector size mismatch");
  }
  for (size_t e = 0; e < weights.size(); ++e) {
    tree_.Insert(static_cast<ElementId>(e), family.leaf_parent[e], weights[e]);
  }
}

OracleChanges LaminarBasis::Freeze(ElementId e) {
  if (!tree_.InB(e)) throw DomainError("freeze of a non-basis element");
  frozen_[e] = true;
  return {};
}

OracleChanges LaminarBasis::Decrement(ElementId e, double w) {
  if (!tree_.Present(e)) throw DomainError("unknown element");
  if (frozen_[e]) throw DomainError("decrement of a frozen element");
  if (!(w < tree_.weight(e))) throw DomainError("decrement must lower the weight");
  const int parent = tree_.LeafParent(e);
  const OracleChanges first = tree_.Delete(e);
  const OracleChanges second = tree_.Insert(e, parent, w);
  return Compose(first, second);
}

namespace {

class LaminarIncremental : public IncrementalIndependence {
 public:
  explicit LaminarIncremental(const LaminarFamily& family)
      : tree_(family), parent_(family.leaf_parent) {}
  bool Test(ElementId e) override {
    if (e < 0 || e >= static_cast<ElementId>(parent_.size())) {
      throw DomainError("unknown element");
    }
    if (tree_.Present(e)) return false;
    return tree_.LowestTightConstraint(parent_[e]) < 0;
  }
  void Insert(ElementId e) override {
    if (!Test(e)) throw DomainError("insert would make the set dependent");
    tree_.Insert(e, parent_[e], 1.0);
  }

 private:
  LaminarTopTree tree_;
  std::vector<int> parent_;
};

}  // namespace

std::unique_ptr<IncrementalIndependence> NewLaminarIncremental(
    const LaminarFamily& family) {
  return std::make_unique<LaminarIncremental>(family);
}

}  // namespace submax
