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

#include "submax/graphic.h"

#include <algorithm>

namespace submax {

bool PairingHeapPool::Above(int a, int b) const {
  const Entry& x = nodes_[a].entry;
  const Entry& y = nodes_[b].entry;
  return Heavier(x.weight, x.edge, y.weight, y.edge);
}

int PairingHeapPool::Link(int a, int b) {
  if (Above(b, a)) std::swap(a, b);
  nodes_[b].sibling = nodes_[a].child;
  nodes_[a].child = b;
  return a;
}

int PairingHeapPool::Push(int root, Entry entry) {
  ++ops_;
  nodes_.push_back(Node{entry, -1, -1});
  return Meld(root, static_cast<int>(nodes_.size()) - 1);
}

int PairingHeapPool::Meld(int a, int b) {
  if (a < 0) return b;
  if (b < 0) return a;
  return Link(a, b);
}

int PairingHeapPool::Pop(int root) {
  ++ops_;
  // Two-pass pairing of the root's children.
  std::vector<int> pairs;
  int c = nodes_[root].child;
  while (c >= 0) {
    const int a = c;
    const int b = nodes_[a].sibling;
    if (b < 0) {
      nodes_[a].sibling = -1;
      pairs.push_back(a);
      break;
    }
    c = nodes_[b].sibling;
    nodes_[a].sibling = -1;
    nodes_[b].sibling = -1;
    pairs.push_back(Link(a, b));
  }
  int merged = -1;
  for (auto it = pairs.rbegin(); it != pairs.rend(); ++it) {
    merged = Meld(merged, *it);
  }
  return merged;
}

GraphicApproxOracle::GraphicApproxOracle(const GraphData& graph,
                                         std::vector<double> weights)
    : graph_(&graph),
      weight_(std::move(weights)),
      version_(graph.edges.size(), 0),
      frozen_(graph.edges.size(), false),
      dsu_(graph.num_vertices),
      heap_(graph.num_vertices, -1),
      sel_(graph.num_vertices, kNone),
      count_(graph.edges.size(), 0) {
  if (weight_.size() != graph.edges.size()) {
    throw DomainError("weight vector size mismatch");
  }
  for (size_t e = 0; e < graph.edges.size(); ++e) {
    if (!(weight_[e] >= 0.0)) throw DomainError("negative weight");
    const auto [a, b] = graph.edges[e];
    if (a == b) continue;
    const PairingHeapPool::Entry entry{weight_[e], static_cast<ElementId>(e),
                                       0};
    heap_[a] = heaps_.Push(heap_[a], entry);
    heap_[b] = heaps_.Push(heap_[b], entry);
  }
  for (int v = 0; v < graph.num_vertices; ++v) Select(v);
  touched_.clear();
  total_ = 0.0;
  for (size_t e = 0; e < count_.size(); ++e) {
    if (count_[e] > 0) total_ += weight_[e];
  }
}

bool GraphicApproxOracle::Valid(const PairingHeapPool::Entry& entry) {
  if (frozen_[entry.edge] || entry.version != version_[entry.edge]) {
    return false;
  }
  const auto [a, b] = graph_->edges[entry.edge];
  return dsu_.Find(a) != dsu_.Find(b);
}

void GraphicApproxOracle::Touch(ElementId e) {
  if (e == kNone) return;
  for (const auto& [x, before] : touched_) {
    if (x == e) return;
  }
  touched_.push_back({e, count_[e]});
}

void GraphicApproxOracle::SetSelection(int s, ElementId e) {
  const ElementId old = sel_[s];
  if (old == e) return;
  Touch(old);
  Touch(e);
  if (old != kNone) --count_[old];
  if (e != kNone) ++count_[e];
  sel_[s] = e;
}

void GraphicApproxOracle::Select(int s) {
  while (heap_[s] >= 0 && !Valid(heaps_.Top(heap_[s]))) {
    heap_[s] = heaps_.Pop(heap_[s]);
  }
  SetSelection(s, heap_[s] >= 0 ? heaps_.Top(heap_[s]).edge : kNone);
}

OracleChanges GraphicApproxOracle::Collect(ElementId changed,
                                           double old_weight) {
  OracleChanges changes;
  for (const auto& [e, before] : touched_) {
    const bool was = before > 0;
    const bool now = count_[e] > 0;
    const double w_before = e == changed ? old_weight : weight_[e];
    if (was) total_ -= w_before;
    if (now) total_ += weight_[e];
    if (was && !now) changes.removed.push_back(e);
    if (!was && now) changes.added.push_back(e);
  }
  touched_.clear();
  return changes;
}

OracleChanges GraphicApproxOracle::Decrement(ElementId e, double w) {
  if (e < 0 || e >= static_cast<ElementId>(weight_.size())) {
    throw DomainError("unknown edge");
  }
  if (frozen_[e]) throw DomainError("decrement of a frozen edge");
  if (!(w < weight_[e]) || w < 0.0) {
    throw DomainError("decrement must lower the weight");
  }
  const double old = weight_[e];
  Touch(e);
  weight_[e] = w;
  ++version_[e];
  const auto [a, b] = graph_->edges[e];
  const int sa = dsu_.Find(a);
  const int sb = dsu_.Find(b);
  if (sa != sb) {
    const PairingHeapPool::Entry entry{w, e, version_[e]};
    heap_[sa] = heaps_.Push(heap_[sa], entry);
    heap_[sb] = heaps_.Push(heap_[sb], entry);
    Select(sa);
    Select(sb);
  }
  return Collect(e, old);
}

OracleChanges GraphicApproxOracle::Freeze(ElementId e) {
  if (e < 0 || e >= static_cast<ElementId>(weight_.size())) {
    throw DomainError("unknown edge");
  }
  if (frozen_[e] || !InBasis(e)) {
    throw DomainError("freeze needs an unfrozen forest edge");
  }
  Touch(e);
  frozen_[e] = true;
  ++count_[e];
  const auto [a, b] = graph_->edges[e];
  const int sa = dsu_.Find(a);
  const int sb = dsu_.Find(b);
  dsu_.Union(sa, sb);
  const int s = dsu_.Find(sa);
  const int other = s == sa ? sb : sa;
  heap_[s] = heaps_.Meld(heap_[sa], heap_[sb]);
  heap_[other] = -1;
  SetSelection(other, kNone);
  Select(s);
  return Collect(kNone, 0.0);
}

bool GraphicApproxOracle::InBasis(ElementId e) const {
  return count_[e] > 0;
}

std::vector<ElementId> GraphicApproxOracle::Basis() const {
  std::vector<ElementId> out;
  for (size_t e = 0; e < count_.size(); ++e) {
    if (count_[e] > 0) out.push_back(static_cast<ElementId>(e));
  }
  return out;
}

double GraphicApproxOracle::RecomputeWeight() const {
  double total = 0.0;
  for (size_t e = 0; e < count_.size(); ++e) {
    if (count_[e] > 0) total += weight_[e];
  }
  return total;
}

}  // namespace submax
