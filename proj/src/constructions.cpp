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

#include "pathpair/constructions.hpp"

#include <numeric>
#include <string>

#include "pathpair/error.hpp"

namespace pathpair {

Thm1Params make_thm1_params(int n, std::int64_t m) {
  if (n < 1) throw ParameterError("thm1: n must be positive");
  if (m < 2 * static_cast<std::int64_t>(n) + 2) {
    throw ParameterError("thm1: need m >= 2n + 2");
  }
  // Largest k with k^3 <= m/2 - n, in integers: 2k^3 <= m - 2n.
  const std::int64_t slack = m - 2 * static_cast<std::int64_t>(n);
  std::int64_t k = 1;
  while (2 * (k + 1) * (k + 1) * (k + 1) <= slack) ++k;
  if (2 * k * k + 3 > n) {
    throw ParameterError("thm1: n = " + std::to_string(n) + " too small for k = " +
                         std::to_string(k) + " (need n >= 2k^2 + 3)");
  }
  Thm1Params p;
  p.n = n;
  p.m = m;
  p.k = static_cast<int>(k);
  // 16 m^2 <= n^3 is m <= n^{3/2} / 4.
  const long double nn = n;
  p.in_theorem_range = 16.0L * m * m <= nn * nn * nn;
  return p;
}

BlownUpPath thm1_graph(const Thm1Params& params) {
  const int k = params.k;
  if (k < 1 || params.n < 2 * k * k + 3) throw ParameterError("thm1: invalid parameters");
  std::vector<BlobSpec> blobs;
  for (int i = 0; i < k; ++i) blobs.push_back(BlobSpec::star(k));
  blobs.push_back(BlobSpec::star(k * k));
  blobs.push_back(BlobSpec::star(2));
  blobs.push_back(BlobSpec::empty(params.n - 2 * k * k - 2));
  return BlownUpPath(std::move(blobs));
}

namespace {

int normalize_c(int c) {
  if (c < 5) throw ParameterError("thm2: c must be >= 5");
  return c % 2 == 0 ? c - 1 : c;
}

int next_odd_term(std::int64_t partial, int c, OddTermRule rule) {
  const std::int64_t den = rule == OddTermRule::kBothLayers ? c - 3 : c - 1;
  return static_cast<int>((2 * partial + den - 1) / den);
}

}  // namespace

std::vector<int> thm2_terms(int c, int count, OddTermRule rule) {
  c = normalize_c(c);
  std::vector<int> out;
  std::int64_t partial = 0;
  for (int i = 1; i <= count; ++i) {
    int term = i == 1 ? 1 : (i % 2 == 0 ? (c - 1) / 2 : next_odd_term(partial, c, rule));
    out.push_back(term);
    partial += term;
  }
  return out;
}

Thm2Sequence thm2_sequence(int c, int n, OddTermRule rule) {
  Thm2Sequence seq;
  seq.c = normalize_c(c);
  std::int64_t partial = 0;
  for (int i = 1;; ++i) {
    int term = i == 1 ? 1 : (i % 2 == 0 ? (seq.c - 1) / 2 : next_odd_term(partial, seq.c, rule));
    if (2 * (partial + term) > n) break;
    partial += term;
    seq.sizes.push_back(term);
  }
  seq.m = static_cast<int>(seq.sizes.size());
  seq.m_prime = seq.m % 2 == 1 ? seq.m : seq.m - 1;
  if (seq.m_prime < 3) {
    throw ParameterError("thm2: n = " + std::to_string(n) + " too small (m' = " +
                         std::to_string(seq.m_prime) + " < 3)");
  }
  return seq;
}

std::vector<int> thm2_blob_sizes(const Thm2Sequence& seq, int n) {
  const int mp = seq.m_prime;
  std::vector<int> sizes(seq.sizes.begin(), seq.sizes.begin() + (mp - 1));
  const std::int64_t side = std::accumulate(sizes.begin(), sizes.end(), std::int64_t{0});
  sizes.push_back(static_cast<int>(n - 2 * side));
  for (int j = mp - 2; j >= 0; --j) sizes.push_back(seq.sizes[j]);
  return sizes;
}

BlownUpPath thm2_graph(const Thm2Params& params) {
  Thm2Sequence seq = thm2_sequence(params.c, params.n, params.rule);
  std::vector<BlobSpec> blobs;
  for (int s : thm2_blob_sizes(seq, params.n)) blobs.push_back(BlobSpec::star(s));
  BlownUpPath bp(std::move(blobs));
  auto violations = check_eq1(bp);
  if (!violations.empty()) {
    throw InternalInvariantBreach("thm2: generated blow-up fails the prefix-cut bound at layer " +
                                  std::to_string(violations.front().layer));
  }
  return bp;
}

Counterexample counterexample_p5(int t) {
  return counterexample_p5(t, BlobSpec::explicit_graph(Graph(t < 0 ? 0 : t)));
}

Counterexample counterexample_p5(int t, BlobSpec middle) {
  if (t < 2 || t % 2 != 0) throw ParameterError("counterexample: t must be even and >= 2");
  if (middle.size() != t) throw ParameterError("counterexample: middle blob must have t vertices");
  const int outer = t * t - t;
  std::vector<BlobSpec> blobs{BlobSpec::star(outer), BlobSpec::star(t), std::move(middle),
                              BlobSpec::star(t), BlobSpec::star(outer)};
  BlownUpPath bp(std::move(blobs));
  Pairing p;
  const int left = t * t;          // |G_1| + |G_2|
  const int right = left + t;      // first vertex of G_4
  for (int j = 0; j < left; ++j) p.pairs.push_back({j, right + j});
  for (int j = 0; j + 1 < t; j += 2) p.pairs.push_back({left + j, left + j + 1});
  return {std::move(bp), std::move(p)};
}

}  // namespace pathpair
