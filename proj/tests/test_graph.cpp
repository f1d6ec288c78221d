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

#include <doctest.h>

#include <algorithm>
#include <random>

#include "pathpair/blowup.hpp"
#include "pathpair/constructions.hpp"
#include "pathpair/error.hpp"
#include "pathpair/graph.hpp"
#include "test_util.hpp"

using namespace pathpair;
using pathpair::testing::count_crossing;
using pathpair::testing::random_graph;

TEST_CASE("graph rejects malformed edges") {
  Graph g(3);
  g.add_edge(0, 1);
  CHECK_THROWS_AS(g.add_edge(1, 0), ParameterError);
  CHECK_THROWS_AS(g.add_edge(2, 2), ParameterError);
  CHECK_THROWS_AS(g.add_edge(0, 3), ParameterError);
  CHECK(g.m() == 1);
  CHECK(g.has_edge(1, 0));
}

TEST_CASE("diameter") {
  CHECK(diameter(Graph(1)) == 0);
  CHECK(diameter(path_graph(5)) == 4);
  CHECK(diameter(complete_graph(4)) == 1);
  CHECK_FALSE(diameter(Graph(2)).has_value());

  Graph two_edges(4);
  two_edges.add_edge(0, 1);
  two_edges.add_edge(2, 3);
  CHECK_FALSE(diameter(two_edges).has_value());

  // Bounded-edge family with k = 6 spans k + 3 blobs.
  CHECK(diameter(expand(thm1_graph(make_thm1_params(200, 1000)))) == 8);
}

TEST_CASE("degeneracy") {
  CHECK(degeneracy(star_graph(2)).value == 1);
  CHECK(degeneracy(star_graph(7)).value == 1);
  CHECK(degeneracy(complete_graph(4)).value == 3);
  CHECK(degeneracy(cycle_graph(6)).value == 2);
  CHECK(degeneracy(Graph(3)).value == 0);
}

TEST_CASE("cut_edges") {
  Graph k4 = complete_graph(4);
  CHECK(cut_edges(k4, std::vector<Vertex>{}) == 0);
  for (Vertex v = 0; v < 4; ++v) CHECK(cut_edges(k4, std::vector<Vertex>{v}) == 3);

  // Blobs 1-2 of the t = 2 counterexample: only the G_2-G_3 bipartite layer
  // crosses.
  Graph g = expand(counterexample_p5(2).blowup);
  std::vector<Vertex> first_two{0, 1, 2, 3};
  CHECK(count_crossing(g, first_two) == 4);
  CHECK(cut_edges(g, first_two) == 4);
}

TEST_CASE("check_cut_condition_exhaustive") {
  CHECK_FALSE(check_cut_condition_exhaustive(star_graph(6)).has_value());

  Graph two_edges(4);
  two_edges.add_edge(0, 1);
  two_edges.add_edge(2, 3);
  auto bad = check_cut_condition_exhaustive(two_edges);
  REQUIRE(bad.has_value());
  // A single vertex already has one leaving edge; the smallest violator is an
  // edge's endpoint pair.
  CHECK(*bad == std::vector<Vertex>{0, 1});

  // k = 2 member of the bounded-edge family on 12 vertices.
  Graph small = expand(thm1_graph(make_thm1_params(12, 40)));
  REQUIRE(small.n() == 12);
  CHECK_FALSE(check_cut_condition_exhaustive(small).has_value());

  CHECK_THROWS_AS(check_cut_condition_exhaustive(Graph(21)), SizeLimitExceeded);
  CHECK_NOTHROW(check_cut_condition_exhaustive(path_graph(21), 21));
}

TEST_CASE("cut-condition scan agrees with naive subset enumeration") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const int n = 4 + static_cast<int>(seed % 7);
    Graph g = random_graph(n, 0.35, seed);
    // Smallest violating size by brute force over all masks.
    int smallest = -1;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
      std::vector<Vertex> x;
      for (Vertex v = 0; v < n; ++v)
        if (mask >> v & 1u) x.push_back(v);
      if (2 * static_cast<int>(x.size()) > n) continue;
      if (count_crossing(g, x) < static_cast<std::int64_t>(x.size()) &&
          (smallest < 0 || static_cast<int>(x.size()) < smallest)) {
        smallest = static_cast<int>(x.size());
      }
    }
    auto found = check_cut_condition_exhaustive(g);
    CHECK(found.has_value() == (smallest >= 0));
    if (found) {
      CHECK(static_cast<int>(found->size()) == smallest);
      CHECK(count_crossing(g, *found) < static_cast<std::int64_t>(found->size()));
    }
  }
}

TEST_CASE("bfs_layers") {
  auto p3 = bfs_layers(path_graph(3), 0);
  CHECK(p3.sizes == std::vector<int>{1, 1, 1});
  CHECK(p3.prefix == std::vector<int>{1, 2, 3});

  auto star = bfs_layers(star_graph(6), 0);
  CHECK(star.sizes == std::vector<int>{1, 5});

  // From the single vertex of blob 1 of the degenerate family, BFS layer j is
  // exactly blob j+1.
  BlownUpPath bp = thm2_graph({.n = 100, .c = 5});
  auto layers = bfs_layers(expand(bp), 0);
  REQUIRE(static_cast<int>(layers.layers.size()) == bp.k());
  for (int i = 0; i < bp.k(); ++i) CHECK(layers.prefix[i] == bp.prefix(i));
}

TEST_CASE("graph properties on random graphs") {
  std::mt19937_64 rng(1234);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 14);
    const double p = 0.15 + 0.1 * static_cast<double>(rng() % 6);
    Graph g = random_graph(n, p, rng());

    // Diameter equals the largest eccentricity.
    auto d = diameter(g);
    int max_ecc = 0;
    bool connected = true;
    for (Vertex v = 0; v < n; ++v) {
      auto dist = bfs_distances(g, v);
      for (int x : dist) {
        if (x < 0) connected = false;
        max_ecc = std::max(max_ecc, x);
      }
    }
    CHECK(d.has_value() == connected);
    if (d) CHECK(*d == max_ecc);

    // Replaying the witness ordering never sees more than `value` later
    // neighbours, and some vertex sees exactly min-degree-at-removal.
    auto deg = degeneracy(g);
    REQUIRE(static_cast<int>(deg.ordering.size()) == n);
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[deg.ordering[i]] = i;
    int worst = 0;
    for (Vertex v = 0; v < n; ++v) {
      int later = 0;
      for (Vertex w : g.neighbors(v)) later += pos[w] > pos[v];
      worst = std::max(worst, later);
    }
    CHECK(worst == deg.value);

    // Cuts are symmetric in X and its complement.
    std::vector<Vertex> x;
    std::vector<Vertex> rest;
    for (Vertex v = 0; v < n; ++v) (rng() % 2 ? x : rest).push_back(v);
    CHECK(cut_edges(g, x) == cut_edges(g, rest));
    CHECK(cut_edges(g, x) == count_crossing(g, x));

    // Layers cover the component and edges span at most one layer.
    auto layers = bfs_layers(g, 0);
    auto dist = bfs_distances(g, 0);
    int reach = static_cast<int>(std::count_if(dist.begin(), dist.end(), [](int v) { return v >= 0; }));
    CHECK(layers.prefix.back() == reach);
    for (auto [u, v] : g.edges()) {
      if (dist[u] >= 0) CHECK(std::abs(dist[u] - dist[v]) <= 1);
    }
    for (std::size_t i = 1; i < layers.prefix.size(); ++i) CHECK(layers.prefix[i] > layers.prefix[i - 1]);
  }
}
