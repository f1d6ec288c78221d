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

#include <cmath>

#include "pathpair/blob_routers.hpp"
#include "pathpair/constructions.hpp"
#include "pathpair/error.hpp"
#include "pathpair/oracle.hpp"
#include "pathpair/sweep_router.hpp"

using namespace pathpair;

TEST_CASE("bounded-edge family parameters") {
  auto p = make_thm1_params(200, 1000);
  CHECK(p.k == 6);  // floor(cbrt(300))
  CHECK_FALSE(p.in_theorem_range);
  CHECK(make_thm1_params(1000, 3000).in_theorem_range);
  CHECK(make_thm1_params(1000, 3000).k == 7);  // 2 * 7^3 = 686 <= 1000 < 2 * 8^3

  CHECK_THROWS_AS(make_thm1_params(200, 401), ParameterError);
  CHECK_THROWS_AS(make_thm1_params(10, 1000), ParameterError);
}

TEST_CASE("bounded-edge family structure") {
  BlownUpPath bp = thm1_graph(make_thm1_params(200, 1000));
  REQUIRE(bp.k() == 9);
  for (int i = 0; i < 6; ++i) {
    CHECK(bp.blob(i).kind() == BlobKind::kStar);
    CHECK(bp.size(i) == 6);
  }
  CHECK(bp.size(6) == 36);
  CHECK(bp.size(7) == 2);
  CHECK(bp.blob(8).kind() == BlobKind::kEmpty);
  CHECK(bp.size(8) == 126);
  CHECK(bp.n() == 200);

  // u_i = i k for i <= k, then 2k^2 and 2k^2 + 2 (1-based i -> prefix(i-1)).
  for (int i = 1; i <= 6; ++i) CHECK(bp.prefix(i - 1) == 6 * i);
  CHECK(bp.prefix(6) == 72);
  CHECK(bp.prefix(7) == 74);

  CHECK(check_eq1(bp).empty());
  Graph g = expand(bp);
  CHECK(g.m() <= 832);
  CHECK(g.m() <= 1000);
  CHECK(diameter(g) == 8);
  CHECK(8 >= std::cbrt(1000.0 / 2 - 200));
}

TEST_CASE("degenerate family recursion") {
  // The recursion with the 2/(c-1) coefficient, hand-iterated.
  CHECK(thm2_terms(5, 11, OddTermRule::kIncomingLayerOnly) ==
        std::vector<int>{1, 2, 2, 2, 4, 2, 7, 2, 11, 2, 18});
  CHECK(thm2_terms(5, 9) == std::vector<int>{1, 2, 3, 2, 8, 2, 18, 2, 38});
  CHECK(thm2_terms(6, 9) == thm2_terms(5, 9));
  CHECK(thm2_terms(7, 5) == std::vector<int>{1, 3, 2, 3, 5});
  CHECK_THROWS_AS(thm2_terms(4, 3), ParameterError);

  // Odd terms grow by (c+1)/(c-1) and (c-1)/(c-3) per step respectively.
  auto ratio_of = [](OddTermRule rule) {
    auto t = thm2_terms(5, 41, rule);
    return static_cast<double>(t[40]) / t[38];
  };
  CHECK(ratio_of(OddTermRule::kIncomingLayerOnly) == doctest::Approx(6.0 / 4.0).epsilon(1e-3));
  CHECK(ratio_of(OddTermRule::kBothLayers) == doctest::Approx(4.0 / 2.0).epsilon(1e-3));

  auto seq = thm2_sequence(5, 100);
  CHECK(seq.sizes == std::vector<int>{1, 2, 3, 2, 8, 2, 18, 2});
  CHECK(seq.m == 8);
  CHECK(seq.m_prime == 7);
  CHECK(thm2_blob_sizes(seq, 100) == std::vector<int>{1, 2, 3, 2, 8, 2, 64, 2, 8, 2, 3, 2, 1});
  CHECK_THROWS_AS(thm2_sequence(5, 10), ParameterError);
}

TEST_CASE("the 2/(c-1) recursion fails the prefix-cut bound") {
  auto seq = thm2_sequence(5, 100, OddTermRule::kIncomingLayerOnly);
  std::vector<BlobSpec> blobs;
  for (int s : thm2_blob_sizes(seq, 100)) blobs.push_back(BlobSpec::star(s));
  BlownUpPath bp(std::move(blobs));
  auto bad = check_eq1(bp);
  REQUIRE(!bad.empty());
  CHECK(bad.front().layer == 3);
  CHECK(bad.front().cross_edges == 4);
  CHECK(bad.front().required == 5);
  CHECK_THROWS_AS(thm2_graph({.n = 100, .c = 5, .rule = OddTermRule::kIncomingLayerOnly}),
                  InternalInvariantBreach);
}

TEST_CASE("degenerate family structure") {
  for (int n : {100, 500, 1000}) {
    CAPTURE(n);
    BlownUpPath bp = thm2_graph({.n = n, .c = 5});
    auto seq = thm2_sequence(5, n);
    CHECK(bp.n() == n);
    CHECK(bp.k() == 2 * seq.m_prime - 1);
    auto sizes = bp.sizes();
    CHECK(std::equal(sizes.begin(), sizes.end(), sizes.rbegin()));
    for (const auto& blob : bp.blobs()) CHECK(blob.kind() == BlobKind::kStar);
    CHECK(check_eq1(bp).empty());
    Graph g = expand(bp);
    CHECK(degeneracy(g).value <= 5);
    auto d = diameter(g);
    REQUIRE(d.has_value());
    CHECK(*d >= 2 * seq.m - 4);
    CHECK(*d == bp.k() - 1);
  }
  CHECK(degeneracy(expand(thm2_graph({.n = 500, .c = 7}))).value <= 7);
}

TEST_CASE("counterexample on five blobs") {
  auto ce = counterexample_p5(2);
  CHECK(ce.blowup.n() == 10);
  CHECK(ce.blowup.sizes() == std::vector<int>{2, 2, 2, 2, 2});
  CHECK(ce.blowup.blob(2).kind() == BlobKind::kExplicit);
  CHECK(ce.pairing.size() == 5);
  CHECK(ce.pairing.pairs[0] == VertexPair{0, 6});
  CHECK(ce.pairing.pairs[4] == VertexPair{4, 5});
  CHECK(check_eq1(ce.blowup).empty());

  // The t^2 cross pairs fill both bipartite layers at G_3 (2 t^2 edges).
  Graph g = expand(ce.blowup);
  CHECK(ce.blowup.size(1) * ce.blowup.size(2) + ce.blowup.size(2) * ce.blowup.size(3) == 2 * 4);
  CHECK_FALSE(brute_force_route(g, ce.pairing.pairs).has_value());

  auto fixed = counterexample_p5(2, BlobSpec::star(2));
  CHECK(brute_force_route(expand(fixed.blowup), fixed.pairing.pairs).has_value());
  Routing r = route(fixed.blowup, fixed.pairing);
  CHECK(validate_routing(expand(fixed.blowup), fixed.pairing, r).empty());

  auto four = counterexample_p5(4);
  CHECK(four.blowup.n() == 36);
  CHECK(four.pairing.size() == 18);
  CHECK(check_eq1(four.blowup).empty());

  CHECK_THROWS_AS(counterexample_p5(3), ParameterError);
  CHECK_THROWS_AS(counterexample_p5(2, BlobSpec::star(3)), ParameterError);
}
