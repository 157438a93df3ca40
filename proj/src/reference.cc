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

#include "submax/reference.h"

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>
#include <queue>

namespace submax::reference {
namespace {

int FindRoot(std::vector<int>& parent, int x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

// Kuhn's algorithm on the sub-graph induced by `lefts`; returns the number
// of matched left vertices.
int KuhnMatchSize(const BipartiteGraph& g, std::span<const ElementId> lefts) {
  std::vector<int> mate_r(g.num_right, -1);
  std::vector<int> seen(g.num_right, -1);
  std::function<bool(int, int)> try_left = [&](int l, int stamp) {
    for (int r : g.adjacency[l]) {
      if (seen[r] == stamp) continue;
      seen[r] = stamp;
      if (mate_r[r] < 0 || try_left(mate_r[r], stamp)) {
        mate_r[r] = l;
        return true;
      }
    }
    return false;
  };
  int size = 0;
  int stamp = 0;
  for (ElementId l : lefts) size += try_left(l, stamp++) ? 1 : 0;
  return size;
}

double SetValue(const ValueOracle& f, std::span<const ElementId> set) {
  ValueOracle::State state = f.NewState();
  for (ElementId e : set) state.Add(e);
  return state.UncountedValue();
}

}  // namespace

bool FeasibilityVerify(std::span<const ElementId> set, const Matroid& matroid) {
  const int n = matroid.n();
  std::vector<bool> seen(n, false);
  for (ElementId e : set) {
    if (e < 0 || e >= n || seen[e]) return false;
    seen[e] = true;
  }
  switch (matroid.kind()) {
    case MatroidKind::kLaminar: {
      const LaminarFamily& fam = matroid.laminar();
      std::vector<int> load(fam.num_nodes(), 0);
      for (ElementId e : set) {
        for (int v = fam.leaf_parent[e]; v >= 0; v = fam.parent[v]) ++load[v];
      }
      for (int v = 0; v < fam.num_nodes(); ++v) {
        if (load[v] > fam.capacity[v]) return false;
      }
      return true;
    }
    case MatroidKind::kGraphic: {
      const GraphData& g = matroid.graph();
      std::vector<int> parent(g.num_vertices);
      std::iota(parent.begin(), parent.end(), 0);
      for (ElementId e : set) {
        const int a = FindRoot(parent, g.edges[e].first);
        const int b = FindRoot(parent, g.edges[e].second);
        if (a == b) return false;
        parent[a] = b;
      }
      return true;
    }
    case MatroidKind::kTransversal:
      return KuhnMatchSize(matroid.bipartite(), set) ==
             static_cast<int>(set.size());
  }
  return false;
}

std::vector<ElementId> MatroidGreedyBasis(
    const std::vector<double>& weights, const Matroid& matroid,
    std::optional<std::span<const ElementId>> available) {
  std::vector<ElementId> order;
  if (available) {
    order.assign(available->begin(), available->end());
  } else {
    order.resize(matroid.n());
    std::iota(order.begin(), order.end(), 0);
  }
  std::sort(order.begin(), order.end(), [&](ElementId a, ElementId b) {
    return Heavier(weights[a], a, weights[b], b);
  });
  std::vector<ElementId> basis;
  for (ElementId e : order) {
    basis.push_back(e);
    if (!FeasibilityVerify(basis, matroid)) basis.pop_back();
  }
  std::sort(basis.begin(), basis.end());
  return basis;
}

std::vector<ElementId> KruskalForest(const GraphData& graph,
                                     const std::vector<double>& weights) {
  std::vector<ElementId> order(graph.edges.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](ElementId a, ElementId b) {
    return Heavier(weights[a], a, weights[b], b);
  });
  std::vector<int> parent(graph.num_vertices);
  std::iota(parent.begin(), parent.end(), 0);
  std::vector<ElementId> forest;
  for (ElementId e : order) {
    const int a = FindRoot(parent, graph.edges[e].first);
    const int b = FindRoot(parent, graph.edges[e].second);
    if (a == b) continue;
    parent[a] = b;
    forest.push_back(e);
  }
  std::sort(forest.begin(), forest.end());
  return forest;
}

OptResult BruteForceOpt(const ValueOracle& f, const Matroid& matroid) {
  const int n = matroid.n();
  if (n > 20) throw DomainError("brute force is limited to n <= 20");
  const int rank = static_cast<int>(
      MatroidGreedyBasis(std::vector<double>(n, 1.0), matroid).size());
  OptResult best;
  best.value = -1.0;
  std::vector<ElementId> cur;
  std::function<void(int)> dfs = [&](int idx) {
    if (static_cast<int>(cur.size()) == rank) {
      const double v = SetValue(f, cur);
      if (v > best.value) {
        best.value = v;
        best.set = cur;
      }
      return;
    }
    if (static_cast<int>(cur.size()) + (n - idx) < rank) return;
    cur.push_back(idx);
    if (FeasibilityVerify(cur, matroid)) dfs(idx + 1);
    cur.pop_back();
    dfs(idx + 1);
  };
  dfs(0);
  if (best.value < 0.0) best.value = 0.0;
  return best;
}

OptResult BruteForceOptUnpruned(const ValueOracle& f, const Matroid& matroid) {
  const int n = matroid.n();
  if (n > 16) throw DomainError("unpruned scan is limited to n <= 16");
  OptResult best;
  best.value = -1.0;
  std::vector<ElementId> set;
  for (uint32_t mask = 0; mask < (1u << n); ++mask) {
    set.clear();
    for (int e = 0; e < n; ++e) {
      if (mask >> e & 1u) set.push_back(e);
    }
    if (!FeasibilityVerify(set, matroid)) continue;
    const double v = SetValue(f, set);
    if (v > best.value) {
      best.value = v;
      best.set = set;
    }
  }
  return best;
}

MatchingResult HungarianMaxWeight(const BipartiteGraph& graph,
                                  const std::vector<std::vector<double>>& w) {
  const int nl = graph.num_left();
  const int nr = graph.num_right;
  const int size = std::max(nl, nr);
  MatchingResult result;
  result.mate_left.assign(nl, -1);
  if (size == 0) return result;
  // Min-cost assignment on cost = -weight; missing edges cost 0.
  std::vector<std::vector<double>> cost(size + 1,
                                        std::vector<double>(size + 1, 0.0));
  std::vector<std::vector<bool>> edge(size + 1,
                                      std::vector<bool>(size + 1, false));
  for (int l = 0; l < nl; ++l) {
    for (size_t k = 0; k < graph.adjacency[l].size(); ++k) {
      const int r = graph.adjacency[l][k];
      if (-w[l][k] < cost[l + 1][r + 1]) cost[l + 1][r + 1] = -w[l][k];
      edge[l + 1][r + 1] = true;
    }
  }
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> u(size + 1, 0.0), v(size + 1, 0.0);
  std::vector<int> p(size + 1, 0), way(size + 1, 0);
  for (int i = 1; i <= size; ++i) {
    p[0] = i;
    int j0 = 0;
    std::vector<double> minv(size + 1, inf);
    std::vector<bool> used(size + 1, false);
    do {
      used[j0] = true;
      const int i0 = p[j0];
      double delta = inf;
      int j1 = 0;
      for (int j = 1; j <= size; ++j) {
        if (used[j]) continue;
        const double cur = cost[i0][j] - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (int j = 0; j <= size; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      const int j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0 != 0);
  }
  for (int j = 1; j <= size; ++j) {
    const int i = p[j];
    if (i >= 1 && i <= nl && j <= nr && edge[i][j] && cost[i][j] < 0.0) {
      result.mate_left[i - 1] = j - 1;
      result.weight += -cost[i][j];
      ++result.size;
    }
  }
  return result;
}

MatchingResult HungarianVertexWeighted(
    const BipartiteGraph& graph, const std::vector<double>& left_weights) {
  std::vector<std::vector<double>> w(graph.num_left());
  for (int l = 0; l < graph.num_left(); ++l) {
    w[l].assign(graph.adjacency[l].size(), left_weights[l]);
  }
  return HungarianMaxWeight(graph, w);
}

MatchingResult MaxCardinality(const BipartiteGraph& graph) {
  const int nl = graph.num_left();
  const int nr = graph.num_right;
  std::vector<int> mate_l(nl, -1), mate_r(nr, -1), dist(nl, 0);
  constexpr int kInf = std::numeric_limits<int>::max();
  auto bfs = [&]() {
    std::queue<int> q;
    bool found = false;
    for (int l = 0; l < nl; ++l) {
      if (mate_l[l] < 0) {
        dist[l] = 0;
        q.push(l);
      } else {
        dist[l] = kInf;
      }
    }
    while (!q.empty()) {
      const int l = q.front();
      q.pop();
      for (int r : graph.adjacency[l]) {
        const int m = mate_r[r];
        if (m < 0) {
          found = true;
        } else if (dist[m] == kInf) {
          dist[m] = dist[l] + 1;
          q.push(m);
        }
      }
    }
    return found;
  };
  std::function<bool(int)> dfs = [&](int l) {
    for (int r : graph.adjacency[l]) {
      const int m = mate_r[r];
      if (m < 0 || (dist[m] == dist[l] + 1 && dfs(m))) {
        mate_l[l] = r;
        mate_r[r] = l;
        return true;
      }
    }
    dist[l] = kInf;
    return false;
  };
  MatchingResult result;
  while (bfs()) {
    for (int l = 0; l < nl; ++l) {
      if (mate_l[l] < 0 && dfs(l)) ++result.size;
    }
  }
  result.mate_left = mate_l;
  result.weight = result.size;
  return result;
}

MatchingResult ExhaustiveMaxWeight(const BipartiteGraph& graph,
                                   const std::vector<std::vector<double>>& w) {
  const int nl = graph.num_left();
  std::vector<bool> used(graph.num_right, false);
  std::vector<int> mate(nl, -1);
  MatchingResult best;
  best.mate_left = mate;
  double cur = 0.0;
  std::function<void(int)> rec = [&](int l) {
    if (l == nl) {
      if (cur > best.weight) {
        best.weight = cur;
        best.mate_left = mate;
      }
      return;
    }
    rec(l + 1);
    for (size_t k = 0; k < graph.adjacency[l].size(); ++k) {
      const int r = graph.adjacency[l][k];
      if (used[r]) continue;
      used[r] = true;
      mate[l] = r;
      cur += w[l][k];
      rec(l + 1);
      cur -= w[l][k];
      mate[l] = -1;
      used[r] = false;
    }
  };
  rec(0);
  best.size = static_cast<int>(
      std::count_if(best.mate_left.begin(), best.mate_left.end(),
                    [](int m) { return m >= 0; }));
  return best;
}

double ExactMultilinear(const ValueOracle& f, const FractionalPoint& x) {
  const int n = static_cast<int>(x.size());
  if (n > 20) throw DomainError("exact multilinear is limited to n <= 20");
  double total = 0.0;
  std::vector<ElementId> set;
  for (uint32_t mask = 0; mask < (1u << n); ++mask) {
    double prob = 1.0;
    set.clear();
    for (int e = 0; e < n; ++e) {
      if (mask >> e & 1u) {
        prob *= x[e];
        set.push_back(e);
      } else {
        prob *= 1.0 - x[e];
      }
    }
    if (prob == 0.0) continue;
    total += prob * SetValue(f, set);
  }
  return total;
}

}  // namespace submax::reference
