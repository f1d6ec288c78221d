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

#include "pathpair/graph.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <string>

#include "pathpair/error.hpp"

namespace pathpair {

Graph::Graph(int n) : adj_(n < 0 ? 0 : n) {
  if (n < 0) throw ParameterError("graph: negative vertex count");
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

void Graph::add_edge(Vertex u, Vertex v) {
  if (!contains(u) || !contains(v)) {
    throw ParameterError("graph: edge (" + std::to_string(u) + "," +
                         std::to_string(v) + ") out of range");
  }
  if (u == v) throw ParameterError("graph: self-loop at " + std::to_string(u));
  auto& au = adj_[u];
  auto it = std::lower_bound(au.begin(), au.end(), v);
  if (it != au.end() && *it == v) {
    throw ParameterError("graph: duplicate edge (" + std::to_string(u) + "," +
                         std::to_string(v) + ")");
  }
  au.insert(it, v);
  auto& av = adj_[v];
  av.insert(std::lower_bound(av.begin(), av.end(), u), u);
  ++m_;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (!contains(u) || !contains(v)) return false;
  return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(m_));
  for (Vertex u = 0; u < n(); ++u) {
    for (Vertex v : adj_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph path_graph(int n) {
  Graph g(n);
  for (Vertex v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph cycle_graph(int n) {
  if (n < 3) throw ParameterError("cycle_graph: need n >= 3");
  Graph g = path_graph(n);
  g.add_edge(0, n - 1);
  return g;
}

Graph complete_graph(int n) {
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph star_graph(int n) {
  Graph g(n);
  for (Vertex v = 1; v < n; ++v) g.add_edge(0, v);
  return g;
}

int LayerDecomposition::prefix_at(int i) const {
  if (prefix.empty() || i < 0) return 0;
  if (i >= static_cast<int>(prefix.size())) return prefix.back();
  return prefix[i];
}

std::vector<int> bfs_distances(const Graph& g, Vertex source) {
  std::vector<int> dist(g.n(), -1);
  std::vector<Vertex> queue;
  queue.reserve(g.n());
  dist[source] = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex v = queue[head];
    for (Vertex w : g.neighbors(v)) {
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

LayerDecomposition bfs_layers(const Graph& g, Vertex source) {
  if (!g.contains(source)) throw ParameterError("bfs_layers: source out of range");
  LayerDecomposition out;
  out.source = source;
  std::vector<int> dist = bfs_distances(g, source);
  for (Vertex v = 0; v < g.n(); ++v) {
    if (dist[v] < 0) continue;
    if (dist[v] >= static_cast<int>(out.layers.size())) out.layers.resize(dist[v] + 1);
    out.layers[dist[v]].push_back(v);
  }
  int total = 0;
  for (const auto& layer : out.layers) {
    out.sizes.push_back(static_cast<int>(layer.size()));
    total += static_cast<int>(layer.size());
    out.prefix.push_back(total);
  }
  return out;
}

std::optional<int> diameter(const Graph& g) {
  if (g.n() == 0) throw ParameterError("diameter: empty graph");
  int best = 0;
  for (Vertex s = 0; s < g.n(); ++s) {
    std::vector<int> dist = bfs_distances(g, s);
    for (int d : dist) {
      if (d < 0) return std::nullopt;
      best = std::max(best, d);
    }
  }
  return best;
}

// Bucket peeling (Matula-Beck): repeatedly remove a vertex of minimum
// remaining degree.
Degeneracy degeneracy(const Graph& g) {
  const int n = g.n();
  Degeneracy out;
  if (n == 0) return out;
  std::vector<int> deg(n);
  int max_deg = 0;
  for (Vertex v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    max_deg = std::max(max_deg, deg[v]);
  }
  std::vector<std::vector<Vertex>> buckets(max_deg + 1);
  for (Vertex v = 0; v < n; ++v) buckets[deg[v]].push_back(v);
  std::vector<char> removed(n, 0);
  out.ordering.reserve(n);
  int low = 0;
  while (static_cast<int>(out.ordering.size()) < n) {
    low = std::max(0, low - 1);
    while (buckets[low].empty()) ++low;
    Vertex v = buckets[low].back();
    buckets[low].pop_back();
    // Lazy deletion: stale entries carry an outdated degree.
    if (removed[v] || deg[v] != low) continue;
    removed[v] = 1;
    out.value = std::max(out.value, low);
    out.ordering.push_back(v);
    for (Vertex w : g.neighbors(v)) {
      if (!removed[w]) buckets[--deg[w]].push_back(w);
    }
  }
  return out;
}

std::int64_t cut_edges(const Graph& g, std::span<const Vertex> subset) {
  std::vector<char> inside(g.n(), 0);
  for (Vertex v : subset) {
    if (!g.contains(v)) throw ParameterError("cut_edges: vertex out of range");
    inside[v] = 1;
  }
  std::int64_t count = 0;
  for (Vertex v = 0; v < g.n(); ++v) {
    if (!inside[v]) continue;
    for (Vertex w : g.neighbors(v)) count += inside[w] ? 0 : 1;
  }
  return count;
}

namespace {

// Calls `fn(mask)` for every `size`-subset of n bits in increasing order
// (Gosper's hack); stops early when fn returns true.
template <typename Fn>
bool for_each_subset_of_size(int n, int size, Fn&& fn) {
  if (size == 0) return fn(std::uint32_t{0});
  std::uint32_t mask = (std::uint32_t{1} << size) - 1;
  const std::uint32_t limit = std::uint32_t{1} << n;
  while (mask < limit) {
    if (fn(mask)) return true;
    std::uint32_t c = mask & -mask;
    std::uint32_t r = mask + c;
    mask = (((r ^ mask) >> 2) / c) | r;
  }
  return false;
}

}  // namespace

std::optional<std::vector<Vertex>> check_cut_condition_exhaustive(const Graph& g,
                                                                  int cap) {
  const int n = g.n();
  if (n > cap || n > 30) {
    throw SizeLimitExceeded("cut-condition scan: n = " + std::to_string(n) +
                            " exceeds cap " + std::to_string(cap));
  }
  std::vector<std::uint32_t> adj(n, 0);
  for (Vertex v = 0; v < n; ++v)
    for (Vertex w : g.neighbors(v)) adj[v] |= std::uint32_t{1} << w;

  std::uint32_t violating = 0;
  bool found = false;
  for (int size = 1; size <= n / 2 && !found; ++size) {
    found = for_each_subset_of_size(n, size, [&](std::uint32_t mask) {
      int cut = 0;
      for (std::uint32_t rest = mask; rest; rest &= rest - 1) {
        int v = std::countr_zero(rest);
        cut += std::popcount(adj[v] & ~mask);
      }
      if (cut < size) {
        violating = mask;
        return true;
      }
      return false;
    });
  }
  if (!found) return std::nullopt;
  std::vector<Vertex> out;
  for (Vertex v = 0; v < n; ++v)
    if (violating >> v & 1U) out.push_back(v);
  return out;
}

}  // namespace pathpair
