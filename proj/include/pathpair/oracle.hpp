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
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "pathpair/blob_routers.hpp"
#include "pathpair/blowup.hpp"
#include "pathpair/graph.hpp"
#include "pathpair/pairing.hpp"

namespace pathpair {

// Visits every maximum pairing of 0..n-1 exactly once: perfect matchings for
// even n; for odd n each choice of unpaired vertex followed by the perfect
// matchings of the rest. Each matching fixes the lowest unmatched vertex and
// iterates its partner upward. Stops early when `visit` returns false.
// Returns false iff stopped early.
bool for_each_pairing(int n, const std::function<bool(const Pairing&)>& visit);

// (n-1)!! for even n, n * (n-2)!! for odd n.
std::int64_t pairing_count(int n);

struct PathPairability {
  bool path_pairable = false;
  std::optional<Pairing> witness;  // set when not path-pairable
  std::int64_t pairings_checked = 0;
};

// Exhaustive decision over all pairings; throws SizeLimitExceeded when
// g.n() > cap.
PathPairability is_path_pairable(const Graph& g, int cap = kDefaultPathPairableCap,
                                 int edge_cap = kDefaultBruteForceEdgeCap);

// Pairs the first min(u, n - u) vertices on each side of the prefix cut after
// blob `layer` (1-based) across it, then pairs leftovers consecutively. When
// the layer fails check_eq1 this pairing cannot be routed.
Pairing cross_cut_pairing(const BlownUpPath& bp, int layer);

// Result of a layer-growth check: nullopt on pass, else the first failing k.
struct LayerGrowth {
  std::optional<int> failing_k;
  int checked = 0;  // number of k values inside the u_{2k+1} <= n/2 range

  bool passed() const { return !failing_k.has_value(); }
};

// u_{2k+1} >= C(k+2, 2) for every k with u_{2k+1} <= n/2 (BFS from x).
LayerGrowth layer_growth_binom(const Graph& g, Vertex x);

// u_{2k+1} >= ((c+1)/c)^k over the same range.
LayerGrowth layer_growth_geometric(const Graph& g, Vertex x, int c);

inline constexpr double kBoundRelativeTolerance = 1e-9;

struct BoundCheck {
  std::string name;
  double lhs = 0;
  double rhs = 0;
  bool pass = false;
};

struct BoundReport {
  int n = 0;
  std::int64_t m = 0;
  std::optional<int> diameter;
  int degeneracy = 0;
  int c = 0;  // degeneracy parameter used in the logarithmic bound
  std::vector<BoundCheck> checks;

  bool all_pass() const;
};

// Compares the measured diameter against 16 * cbrt(m),
// 12 * log(n) / log(c / (c - 2)) + 3 and 6 * sqrt(2) * sqrt(n). c is raised to
// 5 when smaller. A disconnected graph fails every check.
BoundReport diameter_bound_report(const Graph& g, std::int64_t m, int c);

// Same, with m = g.m() and c = the measured degeneracy.
BoundReport diameter_bound_report(const Graph& g);

}  // namespace pathpair
