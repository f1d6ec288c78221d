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

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace pathpair {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;
using Path = std::vector<Vertex>;

// Simple undirected graph on vertices 0..n-1 with sorted adjacency lists.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  // Throws ParameterError on self-loops, duplicate edges or out-of-range ids.
  static Graph from_edges(int n, std::span<const Edge> edges);

  void add_edge(Vertex u, Vertex v);

  int n() const { return static_cast<int>(adj_.size()); }
  std::int64_t m() const { return m_; }
  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
  bool has_edge(Vertex u, Vertex v) const;
  bool contains(Vertex v) const { return v >= 0 && v < n(); }

  // Edges as (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<Vertex>> adj_;
  std::int64_t m_ = 0;
};

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
// K_{1,n-1} centred at vertex 0.
Graph star_graph(int n);

// BFS layers V_0 = {source}, V_1, ... of the source's component.
struct LayerDecomposition {
  Vertex source = 0;
  std::vector<std::vector<Vertex>> layers;
  std::vector<int> sizes;     // n_i = |V_i|
  std::vector<int> prefix;    // u_i = n_0 + ... + n_i

  int eccentricity() const { return static_cast<int>(layers.size()) - 1; }
  // u_i, saturating at the component size beyond the last layer.
  int prefix_at(int i) const;
};

LayerDecomposition bfs_layers(const Graph& g, Vertex source);

// Distances from `source`; -1 marks unreachable vertices.
std::vector<int> bfs_distances(const Graph& g, Vertex source);

// Largest shortest-path distance, or nullopt when g is disconnected.
std::optional<int> diameter(const Graph& g);

struct Degeneracy {
  int value = 0;
  // Removal order: each vertex has at most `value` neighbours later in it.
  std::vector<Vertex> ordering;
};

Degeneracy degeneracy(const Graph& g);

// Number of edges with exactly one endpoint in `subset`.
std::int64_t cut_edges(const Graph& g, std::span<const Vertex> subset);

inline constexpr int kDefaultCutConditionCap = 20;

// Scans every X with |X| <= n/2 in order of increasing size. Returns nullopt
// when the cut-condition holds, otherwise a smallest violating X.
std::optional<std::vector<Vertex>> check_cut_condition_exhaustive(
    const Graph& g, int cap = kDefaultCutConditionCap);

}  // namespace pathpair
