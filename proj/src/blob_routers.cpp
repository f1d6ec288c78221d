// Copyright 2026 The pathpair Authors.
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

#include "pathpair/blob_routers.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "pathpair/error.hpp"

namespace pathpair {

void validate_demands(const DemandList& demands, int n) {
  std::vector<char> seen(n, 0);
  for (const auto& [a, b] : demands) {
    if (a == b) throw ParameterError("demand joins a vertex to itself");
    for (Vertex v : {a, b}) {
      if (v < 0 || v >= n) {
        throw ParameterError("demand endpoint " + std::to_string(v) + " out of range");
      }
      if (seen[v]) {
        throw ParameterError("demand endpoint " + std::to_string(v) + " repeats");
      }
      seen[v] = 1;
    }
  }
}

std::vector<Path> star_route(int size, const DemandList& demands) {
  validate_demands(demands, size);
  std::vector<Path> out;
  out.reserve(demands.size());
  for (const auto& [a, b] : demands) {
    if (a == 0 || b == 0) {
      out.push_back({a, b});
    } else {
      out.push_back({a, 0, b});
    }
  }
  return out;
}

namespace {

class Backtracker {
 public:
  Backtracker(const Graph& g, const DemandList& demands)
      : g_(g),
        demands_(demands),
        used_(g.m(), 0),
        on_path_(demands.size(), std::vector<char>(g.n(), 0)) {
    // Edge ids aligned with the adjacency lists.
    edge_ids_.resize(g.n());
    int next = 0;
    for (Vertex u = 0; u < g.n(); ++u) edge_ids_[u].assign(g.degree(u), -1);
    for (Vertex u = 0; u < g.n(); ++u) {
      const auto& nb = g.neighbors(u);
      for (std::size_t j = 0; j < nb.size(); ++j) {
        Vertex v = nb[j];
        if (u < v) {
          edge_ids_[u][j] = next;
          auto it = std::lower_bound(g.neighbors(v).begin(), g.neighbors(v).end(), u);
          edge_ids_[v][it - g.neighbors(v).begin()] = next;
          ++next;
        }
      }
    }
    paths_.resize(demands.size());
  }

  std::optional<std::vector<Path>> solve() {
    if (route_pair(0)) return paths_;
    return std::nullopt;
  }

 private:
  bool route_pair(std::size_t index) {
    if (index == demands_.size()) return true;
    if (!remaining_connected(index)) return false;
    const auto [s, t] = demands_[index];
    Path& path = paths_[index];
    path.assign(1, s);
    on_path_[index][s] = 1;
    bool ok = extend(index, s, t);
    on_path_[index][s] = 0;
    if (!ok) path.clear();
    return ok;
  }

  bool extend(std::size_t index, Vertex cur, Vertex target) {
    if (cur == target) return route_pair(index + 1);
    if (!reachable(index, cur, target)) return false;
    const auto& nb = g_.neighbors(cur);
    for (std::size_t j = 0; j < nb.size(); ++j) {
      Vertex next = nb[j];
      int e = edge_ids_[cur][j];
      if (used_[e] || on_path_[index][next]) continue;
      used_[e] = 1;
      on_path_[index][next] = 1;
      paths_[index].push_back(next);
      if (extend(index, next, target)) return true;
      paths_[index].pop_back();
      on_path_[index][next] = 0;
      used_[e] = 0;
    }
    return false;
  }

  // Can `from` reach `to` over unused edges without touching the current path?
  bool reachable(std::size_t index, Vertex from, Vertex to) {
    const std::vector<char>& on_path = on_path_[index];
    std::vector<char> seen(g_.n(), 0);
    std::vector<Vertex> stack{from};
    seen[from] = 1;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      const auto& nb = g_.neighbors(v);
      for (std::size_t j = 0; j < nb.size(); ++j) {
        Vertex w = nb[j];
        if (seen[w] || used_[edge_ids_[v][j]]) continue;
        if (w == to) return true;
        if (on_path[w]) continue;
        seen[w] = 1;
        stack.push_back(w);
      }
    }
    return false;
  }

  // Every pair from `index` on must be joined in the graph of unused edges.
  bool remaining_connected(std::size_t index) {
    std::vector<Vertex> parent(g_.n());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](Vertex v) {
      while (parent[v] != v) v = parent[v] = parent[parent[v]];
      return v;
    };
    for (Vertex u = 0; u < g_.n(); ++u) {
      const auto& nb = g_.neighbors(u);
      for (std::size_t j = 0; j < nb.size(); ++j) {
        if (nb[j] > u && !used_[edge_ids_[u][j]]) parent[find(u)] = find(nb[j]);
      }
    }
    for (std::size_t i = index; i < demands_.size(); ++i) {
      if (find(demands_[i].first) != find(demands_[i].second)) return false;
    }
    return true;
  }

  const Graph& g_;
  const DemandList& demands_;
  std::vector<std::vector<int>> edge_ids_;
  std::vector<char> used_;
  std::vector<std::vector<char>> on_path_;  // per pair
  std::vector<Path> paths_;
};

}  // namespace

std::optional<std::vector<Path>> brute_force_route(const Graph& g, const DemandList& demands,
                                                   int edge_cap) {
  if (g.m() > edge_cap) {
    throw SizeLimitExceeded("brute-force router: m = " + std::to_string(g.m()) +
                            " exceeds cap " + std::to_string(edge_cap));
  }
  validate_demands(demands, g.n());
  return Backtracker(g, demands).solve();
}

std::optional<std::vector<Path>> inner_route(const BlobSpec& blob, const DemandList& demands,
                                             int edge_cap) {
  switch (blob.kind()) {
    case BlobKind::kStar:
      return star_route(blob.size(), demands);
    case BlobKind::kExplicit:
      return brute_force_route(blob.explicit_inner(), demands, edge_cap);
    case BlobKind::kEmpty:
      validate_demands(demands, blob.size());
      if (demands.empty()) return std::vector<Path>{};
      return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace pathpair
