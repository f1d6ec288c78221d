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
#include <set>

#include "pathpair/blob_routers.hpp"
#include "pathpair/error.hpp"
#include "pathpair/oracle.hpp"
#include "test_util.hpp"

using namespace pathpair;

namespace {

Pairing as_pairing(const DemandList& d) { return Pairing{d}; }

bool valid(const Graph& g, const DemandList& d, const std::vector<Path>& paths) {
  return validate_routing(g, as_pairing(d), Routing{paths}).empty();
}

// Independent exhaustive check: enumerate every simple path per demand and try
// all combinations for pairwise edge-disjointness.
bool routable_by_enumeration(const Graph& g, const DemandList& demands) {
  using EdgeSet = std::set<std::pair<Vertex, Vertex>>;
  std::vector<std::vector<EdgeSet>> options;
  for (const auto& [s, t] : demands) {
    std::vector<EdgeSet> found;
    std::vector<Vertex> stack{s};
    std::vector<char> on(g.n(), 0);
    on[s] = 1;
    auto dfs = [&](auto&& self, Vertex v) -> void {
      if (v == t) {
        EdgeSet es;
        for (std::size_t i = 0; i + 1 < stack.size(); ++i)
          es.insert(std::minmax(stack[i], stack[i + 1]));
        found.push_back(std::move(es));
        return;
      }
      for (Vertex w : g.neighbors(v)) {
        if (on[w]) continue;
        on[w] = 1;
        stack.push_back(w);
        self(self, w);
        stack.pop_back();
        on[w] = 0;
      }
    };
    dfs(dfs, s);
    options.push_back(std::move(found));
  }
  EdgeSet used;
  auto pick = [&](auto&& self, std::size_t i) -> bool {
    if (i == options.size()) return true;
    for (const auto& es : options[i]) {
      if (std::any_of(es.begin(), es.end(), [&](const auto& e) { return used.count(e); })) continue;
      used.insert(es.begin(), es.end());
      if (self(self, i + 1)) return true;
      for (const auto& e : es) used.erase(e);
    }
    return false;
  };
  return pick(pick, 0);
}

}  // namespace

TEST_CASE("star_route") {
  auto one = star_route(3, {{1, 2}});
  CHECK(one == std::vector<Path>{{1, 0, 2}});

  auto direct = star_route(3, {{0, 1}});
  CHECK(direct == std::vector<Path>{{0, 1}});

  DemandList two{{1, 2}, {3, 4}};
  auto paths = star_route(5, two);
  CHECK(valid(star_graph(5), two, paths));
  std::set<std::pair<int, int>> edges;
  for (const auto& p : paths)
    for (std::size_t i = 0; i + 1 < p.size(); ++i) edges.insert(std::minmax(p[i], p[i + 1]));
  CHECK(edges.size() == 4);

  CHECK_THROWS_AS(star_route(5, {{1, 2}, {2, 3}}), ParameterError);
  CHECK_THROWS_AS(star_route(3, {{1, 1}}), ParameterError);
}

TEST_CASE("star_route joins every pairing with at most two edges per pair") {
  for (int size = 1; size <= 9; ++size) {
    Graph g = star_graph(size);
    for_each_pairing(size, [&](const Pairing& p) {
      auto paths = star_route(size, p.pairs);
      CHECK(valid(g, p.pairs, paths));
      for (const auto& path : paths) CHECK(path.size() <= 3);
      return true;
    });
  }
}

TEST_CASE("brute_force_route") {
  auto k2 = brute_force_route(complete_graph(2), {{0, 1}});
  REQUIRE(k2.has_value());
  CHECK(*k2 == std::vector<Path>{{0, 1}});

  CHECK_FALSE(brute_force_route(Graph(2), {{0, 1}}).has_value());

  // Each arc for one diagonal shares an edge with each arc for the other.
  DemandList diagonals{{0, 2}, {1, 3}};
  CHECK_FALSE(routable_by_enumeration(cycle_graph(4), diagonals));
  CHECK_FALSE(brute_force_route(cycle_graph(4), diagonals).has_value());

  // One diagonal alone uses one arc.
  auto one = brute_force_route(cycle_graph(4), {{0, 2}});
  REQUIRE(one.has_value());
  CHECK(*one == std::vector<Path>{{0, 1, 2}});

  CHECK_THROWS_AS(brute_force_route(complete_graph(10), {{0, 1}}), SizeLimitExceeded);
  CHECK_NOTHROW(brute_force_route(complete_graph(10), {{0, 1}}, 45));
  CHECK_THROWS_AS(brute_force_route(complete_graph(4), {{0, 1}, {1, 2}}), ParameterError);
}

TEST_CASE("brute_force_route matches enumeration and ignores pair order") {
  std::mt19937_64 rng(7);
  int routable = 0;
  int unroutable = 0;
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 4 + static_cast<int>(rng() % 4);
    Graph g = pathpair::testing::random_graph(n, 0.3 + 0.1 * static_cast<double>(rng() % 4), rng());
    if (g.m() > kDefaultBruteForceEdgeCap) continue;
    std::vector<Vertex> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::shuffle(order.begin(), order.end(), rng);
    DemandList demands;
    const int pairs = 1 + static_cast<int>(rng() % (n / 2));
    for (int i = 0; i < pairs; ++i) demands.push_back({order[2 * i], order[2 * i + 1]});

    auto routed = brute_force_route(g, demands);
    const bool expected = routable_by_enumeration(g, demands);
    CHECK(routed.has_value() == expected);
    if (routed) {
      CHECK(valid(g, demands, *routed));
      ++routable;
    } else {
      ++unroutable;
    }
    DemandList reversed(demands.rbegin(), demands.rend());
    CHECK(brute_force_route(g, reversed).has_value() == expected);
  }
  CHECK(routable > 10);
  CHECK(unroutable > 10);
}

TEST_CASE("inner_route dispatch") {
  auto none = inner_route(BlobSpec::empty(7), {});
  REQUIRE(none.has_value());
  CHECK(none->empty());
  CHECK_FALSE(inner_route(BlobSpec::empty(7), {{0, 1}}).has_value());

  auto star = inner_route(BlobSpec::star(4), {{1, 2}, {0, 3}});
  REQUIRE(star.has_value());
  CHECK(star->size() == 2);

  auto explicit_path = inner_route(BlobSpec::explicit_graph(path_graph(3)), {{0, 2}});
  REQUIRE(explicit_path.has_value());
  CHECK(*explicit_path == std::vector<Path>{{0, 1, 2}});
}
