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
#include <vector>

#include "pathpair/blowup.hpp"
#include "pathpair/pairing.hpp"

namespace pathpair {

// Bounded-edge family: k = floor(cbrt(m/2 - n)), blobs
// [S_k x k, S_{k^2}, S_2, Empty(n - 2k^2 - 2)].
struct Thm1Params {
  int n = 0;
  std::int64_t m = 0;
  int k = 0;
  // 2n <= m <= n^{3/2} / 4. Informational: the construction only needs
  // k >= 1 and a non-empty tail.
  bool in_theorem_range = false;
};

// Throws ParameterError unless m >= 2n + 2 and n >= 2k^2 + 3.
Thm1Params make_thm1_params(int n, std::int64_t m);

BlownUpPath thm1_graph(const Thm1Params& params);

// How the odd-indexed star sizes grow from the partial sum S of earlier sizes.
enum class OddTermRule {
  // ceil(2 S / (c - 3)): enough cross edges on both layers around the odd blob.
  kBothLayers,
  // ceil(2 S / (c - 1)): balances only the layer into the odd blob; the
  // following layer then falls short of the prefix-cut bound.
  kIncomingLayerOnly,
};

struct Thm2Sequence {
  int c = 0;                // odd, >= 5
  std::vector<int> sizes;   // n_1 .. n_m
  int m = 0;                // largest index with n_1 + ... + n_m <= n/2
  int m_prime = 0;          // m if odd, else m - 1
};

// n_1 = 1, n_{2i} = (c-1)/2, odd terms by `rule`. Even c is replaced by c-1.
// Throws ParameterError for c < 5 or when n is too small for m' >= 3.
Thm2Sequence thm2_sequence(int c, int n, OddTermRule rule = OddTermRule::kBothLayers);

// The first `count` terms of the recursion, independent of n.
std::vector<int> thm2_terms(int c, int count, OddTermRule rule = OddTermRule::kBothLayers);

// Symmetric size vector of length 2m'-1: n_1 .. n_{m'-1}, the residual middle
// blob n - 2(n_1 + ... + n_{m'-1}), then the mirror image.
std::vector<int> thm2_blob_sizes(const Thm2Sequence& seq, int n);

struct Thm2Params {
  int n = 0;
  int c = 0;
  OddTermRule rule = OddTermRule::kBothLayers;
};

// All-star blow-up over thm2_blob_sizes. Throws InternalInvariantBreach if the
// result fails check_eq1 (always the case for kIncomingLayerOnly).
BlownUpPath thm2_graph(const Thm2Params& params);

struct Counterexample {
  BlownUpPath blowup;
  Pairing pairing;
};

// Five blobs of sizes (t^2-t, t, t, t, t^2-t): stars around an empty middle
// blob. The pairing matches G_1 u G_2 to G_4 u G_5 in ascending order and
// pairs G_3 consecutively. Throws ParameterError unless t is even and >= 2.
Counterexample counterexample_p5(int t);

// Same pairing with `middle` (t vertices) in place of the empty blob.
Counterexample counterexample_p5(int t, BlobSpec middle);

}  // namespace pathpair
