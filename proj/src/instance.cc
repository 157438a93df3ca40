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

#include "submax/instance.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <optional>

#include "submax/random.h"

namespace submax {
namespace {

using nlohmann::json;

double Round3(double x) { return std::round(x * 1000.0) / 1000.0; }

int Draw(Rng& rng, int bound) {
  return static_cast<int>(UniformIndex(rng, static_cast<uint64_t>(bound)));
}

// k distinct values from [0, bound), sorted.
std::vector<int> DistinctSorted(Rng& rng, int bound, int k) {
  std::vector<int> all(bound);
  std::iota(all.begin(), all.end(), 0);
  for (int i = 0; i < k; ++i) std::swap(all[i], all[i + Draw(rng, bound - i)]);
  all.resize(k);
  std::sort(all.begin(), all.end());
  return all;
}

LaminarFamily GenLaminar(Rng& rng, const GenOptions& o) {
  LaminarFamily fam;
  std::vector<int> depth = {0};
  fam.parent = {-1};
  for (size_t v = 0; v < fam.parent.size(); ++v) {
    if (depth[v] >= o.depth) continue;
    const int kids = v == 0 ? 1 + Draw(rng, std::max(1, o.branching))
                            : Draw(rng, std::max(1, o.branching) + 1);
    for (int c = 0; c < kids; ++c) {
      fam.parent.push_back(static_cast<int>(v));
      depth.push_back(depth[v] + 1);
    }
  }
  const int nodes = static_cast<int>(fam.parent.size());
  fam.leaf_parent.resize(o.n);
  std::vector<int> size(nodes, 0);
  for (int e = 0; e < o.n; ++e) {
    fam.leaf_parent[e] = Draw(rng, nodes);
    for (int v = fam.leaf_parent[e]; v >= 0; v = fam.parent[v]) ++size[v];
  }
  fam.capacity.resize(nodes);
  for (int v = 0; v < nodes; ++v) {
    const int top = std::max(1, static_cast<int>(std::ceil(0.7 * size[v])));
    fam.capacity[v] = 1 + Draw(rng, top);
  }
  return fam;
}

GraphData GenGraph(Rng& rng, const GenOptions& o) {
  GraphData g;
  g.num_vertices = std::max(
      2, static_cast<int>(std::ceil(2.0 * o.n / std::max(0.5, o.avg_degree))));
  for (int e = 0; e < o.n; ++e) {
    const int a = Draw(rng, g.num_vertices);
    int b = Draw(rng, g.num_vertices - 1);
    if (b >= a) ++b;
    g.edges.push_back({a, b});
  }
  return g;
}

BipartiteGraph GenBipartite(Rng& rng, const GenOptions& o) {
  BipartiteGraph g;
  g.num_right = o.num_right > 0 ? o.num_right : std::max(1, o.n / 2);
  g.adjacency.resize(o.n);
  const int cap = std::max(1, std::min(o.degree, g.num_right));
  for (int l = 0; l < o.n; ++l) {
    g.adjacency[l] = DistinctSorted(rng, g.num_right, 1 + Draw(rng, cap));
  }
  return g;
}

ValueOracle GenFunction(Rng& rng, const GenOptions& o) {
  switch (o.function) {
    case ValueOracle::Kind::kCoverage: {
      const int u = o.universe > 0 ? o.universe : 2 * o.n;
      std::vector<double> items(u);
      for (double& w : items) w = Round3(0.5 + UniformDouble(rng));
      std::vector<std::vector<int>> covers(o.n);
      const int cap = std::max(1, std::min(o.cover_size, u));
      for (auto& c : covers) c = DistinctSorted(rng, u, 1 + Draw(rng, cap));
      return ValueOracle::Coverage(std::move(items), std::move(covers));
    }
    case ValueOracle::Kind::kFacility: {
      const int clients = o.universe > 0 ? o.universe : o.n;
      std::vector<std::vector<double>> sim(o.n, std::vector<double>(clients));
      for (auto& row : sim) {
        for (double& s : row) {
          s = UniformDouble(rng) < 0.5 ? 0.0 : Round3(UniformDouble(rng));
        }
      }
      return ValueOracle::Facility(std::move(sim));
    }
    case ValueOracle::Kind::kAdditive: {
      std::vector<double> w(o.n);
      for (double& x : w) x = Round3(0.05 + 0.95 * UniformDouble(rng));
      return ValueOracle::Additive(std::move(w));
    }
  }
  throw DomainError("unknown function kind");
}

template <typename T>
T Get(const json& j, const char* key) {
  if (!j.contains(key)) throw DomainError(std::string("missing field: ") + key);
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw DomainError(std::string("bad field ") + key + ": " + e.what());
  }
}

}  // namespace

const char* FunctionKindName(ValueOracle::Kind kind) {
  switch (kind) {
    case ValueOracle::Kind::kCoverage:
      return "coverage";
    case ValueOracle::Kind::kFacility:
      return "facility";
    case ValueOracle::Kind::kAdditive:
      return "additive";
  }
  return "unknown";
}

MatroidKind ParseMatroidKind(const std::string& s) {
  if (s == "laminar") return MatroidKind::kLaminar;
  if (s == "graphic") return MatroidKind::kGraphic;
  if (s == "transversal") return MatroidKind::kTransversal;
  throw DomainError("unknown matroid type: " + s);
}

ValueOracle::Kind ParseFunctionKind(const std::string& s) {
  if (s == "coverage") return ValueOracle::Kind::kCoverage;
  if (s == "facility") return ValueOracle::Kind::kFacility;
  if (s == "additive") return ValueOracle::Kind::kAdditive;
  throw DomainError("unknown function type: " + s);
}

json InstanceToJson(const Instance& instance) {
  const Matroid& m = instance.matroid;
  const ValueOracle& f = instance.function;
  json jm;
  jm["type"] = MatroidKindName(m.kind());
  switch (m.kind()) {
    case MatroidKind::kLaminar:
      jm["parent"] = m.laminar().parent;
      jm["capacity"] = m.laminar().capacity;
      jm["leaf_parent"] = m.laminar().leaf_parent;
      break;
    case MatroidKind::kGraphic: {
      jm["num_vertices"] = m.graph().num_vertices;
      json edges = json::array();
      for (const auto& [a, b] : m.graph().edges) edges.push_back({a, b});
      jm["edges"] = edges;
      break;
    }
    case MatroidKind::kTransversal:
      jm["num_right"] = m.bipartite().num_right;
      jm["adjacency"] = m.bipartite().adjacency;
      break;
  }
  json jf;
  jf["type"] = FunctionKindName(f.kind());
  switch (f.kind()) {
    case ValueOracle::Kind::kCoverage:
      jf["item_weights"] = f.item_weights();
      jf["covers"] = f.covers();
      break;
    case ValueOracle::Kind::kFacility:
      jf["similarity"] = f.similarity();
      break;
    case ValueOracle::Kind::kAdditive:
      jf["weights"] = f.weights();
      break;
  }
  json j;
  j["version"] = kFormatVersion;
  j["n"] = m.n();
  j["matroid"] = jm;
  j["function"] = jf;
  return j;
}

Instance InstanceFromJson(const json& j) {
  if (!j.is_object()) throw DomainError("instance must be a JSON object");
  if (Get<int>(j, "version") != kFormatVersion) {
    throw DomainError("unsupported instance version");
  }
  const int n = Get<int>(j, "n");
  if (n <= 0) throw DomainError("n must be positive");
  const json& jm = j.at("matroid");
  const json& jf = j.at("function");
  const MatroidKind mk = ParseMatroidKind(Get<std::string>(jm, "type"));
  Matroid matroid;
  switch (mk) {
    case MatroidKind::kLaminar: {
      LaminarFamily fam;
      fam.parent = Get<std::vector<int>>(jm, "parent");
      fam.capacity = Get<std::vector<int>>(jm, "capacity");
      fam.leaf_parent = Get<std::vector<int>>(jm, "leaf_parent");
      matroid = Matroid::Laminar(std::move(fam));
      break;
    }
    case MatroidKind::kGraphic: {
      GraphData g;
      g.num_vertices = Get<int>(jm, "num_vertices");
      for (const auto& e : Get<std::vector<std::vector<int>>>(jm, "edges")) {
        if (e.size() != 2) throw DomainError("edges need two endpoints");
        g.edges.push_back({e[0], e[1]});
      }
      matroid = Matroid::Graphic(std::move(g));
      break;
    }
    case MatroidKind::kTransversal: {
      BipartiteGraph g;
      g.num_right = Get<int>(jm, "num_right");
      g.adjacency = Get<std::vector<std::vector<int>>>(jm, "adjacency");
      matroid = Matroid::Transversal(std::move(g));
      break;
    }
  }
  const ValueOracle::Kind fk = ParseFunctionKind(Get<std::string>(jf, "type"));
  std::optional<ValueOracle> f;
  switch (fk) {
    case ValueOracle::Kind::kCoverage:
      f.emplace(ValueOracle::Coverage(
          Get<std::vector<double>>(jf, "item_weights"),
          Get<std::vector<std::vector<int>>>(jf, "covers")));
      break;
    case ValueOracle::Kind::kFacility:
      f.emplace(ValueOracle::Facility(
          Get<std::vector<std::vector<double>>>(jf, "similarity")));
      break;
    case ValueOracle::Kind::kAdditive:
      f.emplace(ValueOracle::Additive(Get<std::vector<double>>(jf, "weights")));
      break;
  }
  if (matroid.n() != n || f->n() != n) {
    throw DomainError("matroid, function and n disagree on the ground set");
  }
  return Instance(std::move(matroid), std::move(*f));
}

Instance LoadInstance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw DomainError(path + ": " + e.what());
  }
  return InstanceFromJson(j);
}

void SaveInstance(const Instance& instance, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw DomainError("cannot write " + path);
  out << InstanceToJson(instance).dump(1) << '\n';
}

std::string Fingerprint(const json& j) {
  uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : j.dump()) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Instance GenerateInstance(const GenOptions& o) {
  if (o.n <= 0) throw DomainError("n must be positive");
  Rng rng(MixSeed(o.seed, 0));
  Matroid matroid;
  switch (o.matroid) {
    case MatroidKind::kLaminar:
      matroid = Matroid::Laminar(GenLaminar(rng, o));
      break;
    case MatroidKind::kGraphic:
      matroid = Matroid::Graphic(GenGraph(rng, o));
      break;
    case MatroidKind::kTransversal:
      matroid = Matroid::Transversal(GenBipartite(rng, o));
      break;
  }
  ValueOracle f = GenFunction(rng, o);
  return Instance(std::move(matroid), std::move(f));
}

}  // namespace submax
