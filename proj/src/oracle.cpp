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

#include "pathpair/oracle.hpp"

#include <algorithm>
#include <cmath>

#include "pathpair/error.hpp"

namespace pathpair {

namespace {

bool match_rest(std::vector<char>& taken, Pairing& current, int n,
                const std::function<bool(const Pairing&)>& visit) {
  Vertex first = 0;
  while (first < n && taken[first]) ++first;
  if (first == n) return visit(current);
  taken[first] = 1;
  for (Vertex partner = first + 1; partner < n; ++partner) {
    if (taken[partner]) continue;
    taken[partner] = 1;
    current.pairs.push_back({first, partner});
    bool keep_going = match_rest(taken, current, n, visit);
    current.pairs.pop_back();
    taken[partner] = 0;
    if (!keep_going) {
      taken[first] = 0;
      return false;
    }
  }
  taken[first] = 0;
  return true;
}

}  // namespace

bool for_each_pairing(int n, const std::function<bool(const Pairing&)>& visit) {
  std::vector<char> taken(n, 0);
  Pairing current;
  if (n % 2 == 0) return match_rest(taken, current, n, visit);
  for (Vertex spare = 0; spare < n; ++spare) {
    taken[spare] = 1;
    bool keep_going = match_rest(taken, current, n, visit);
    taken[spare] = 0;
    if (!keep_going) return false;
  }
  return true;
}

std::int64_t pairing_count(int n) {
  if (n <= 1) return 1;
  std::int64_t count = n % 2 == 0 ? 1 : n;
  for (int k = (n % 2 == 0 ? n : n - 1) - 1; k > 1; k -= 2) count *= k;
  return count;
}

PathPairability is_path_pairable(const Graph& g, int cap, int edge_cap) {
  if (g.n() > cap) {
    throw SizeLimitExceeded("path-pairability oracle: n = " + std::to_string(g.n()) +
                            " exceeds cap " + std::to_string(cap));
  }
  if (g.m() > edge_cap) {
    throw SizeLimitExceeded("path-pairability oracle: m = " + std::to_string(g.m()) +
                            " exceeds edge cap " + std::to_string(edge_cap));
  }
  PathPairability out;
  out.path_pairable = true;
  for_each_pairing(g.n(), [&](const Pairing& p) {
    ++out.pairings_checked;
    if (brute_force_route(g, p.pairs, edge_cap)) return true;
    out.path_pairable = false;
    out.witness = p;
    return false;
  });
  return out;
}

Pairing cross_cut_pairing(const BlownUpPath& bp, int layer) {
  if (layer < 1 || layer >= bp.k()) throw ParameterError("cross_cut_pairing: bad layer");
  const int u = bp.prefix(layer - 1);
  const int n = bp.n();
  const int across = std::min(u, n - u);
  Pairing p;
  for (int j = 0; j < across; ++j) p.pairs.push_back({j, u + j});
  std::vector<Vertex> rest;
  for (Vertex v = across; v < u; ++v) rest.push_back(v);
  for (Vertex v = u + across; v < n; ++v) rest.push_back(v);
  for (std::size_t j = 0; j + 1 < rest.size(); j += 2) p.pairs.push_back({rest[j], rest[j + 1]});
  return p;
}

namespace {

// Shared driver: checks u_{2k+1} >= bound(k) while u_{2k+1} <= n/2.
template <typename Bound>
LayerGrowth layer_growth(const Graph& g, Vertex x, Bound&& bound) {
  LayerDecomposition layers = bfs_layers(g, x);
  LayerGrowth out;
  for (int k = 0;; ++k) {
    const int u = layers.prefix_at(2 * k + 1);
    if (2 * static_cast<std::int64_t>(u) > g.n()) break;
    ++out.checked;
    if (!bound(k, u)) {
      out.failing_k = k;
      break;
    }
    // Past the component every further u is the same value.
    if (2 * k + 1 > layers.eccentricity() + 1) break;
  }
  return out;
}

}  // namespace

LayerGrowth layer_growth_binom(const Graph& g, Vertex x) {
  return layer_growth(g, x, [](int k, int u) {
    const std::int64_t need = std::int64_t{k + 2} * (k + 1) / 2;
    return u >= need;
  });
}

LayerGrowth layer_growth_geometric(const Graph& g, Vertex x, int c) {
  if (c < 1) throw ParameterError("layer_growth_geometric: c must be positive");
  const double ratio = static_cast<double>(c + 1) / c;
  return layer_growth(g, x, [ratio](int k, int u) {
    const double need = std::pow(ratio, k);
    return static_cast<double>(u) * (1.0 + kBoundRelativeTolerance) >= need;
  });
}

bool BoundReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const BoundCheck& b) { return b.pass; });
}

BoundReport diameter_bound_report(const Graph& g, std::int64_t m, int c) {
  BoundReport r;
  r.n = g.n();
  r.m = m;
  r.diameter = diameter(g);
  r.degeneracy = degeneracy(g).value;
  r.c = std::max(c, 5);
  const double d = r.diameter ? static_cast<double>(*r.diameter) : INFINITY;
  auto add = [&](std::string name, double rhs) {
    bool pass = r.diameter.has_value() && d <= rhs * (1.0 + kBoundRelativeTolerance);
    r.checks.push_back({std::move(name), d, rhs, pass});
  };
  const double n = r.n;
  add("edges", 16.0 * std::cbrt(static_cast<double>(m)));
  add("degenerate", 12.0 * std::log(n) / std::log(r.c / (r.c - 2.0)) + 3.0);
  add("general", 6.0 * std::sqrt(2.0) * std::sqrt(n));
  return r;
}

BoundReport diameter_bound_report(const Graph& g) {
  return diameter_bound_report(g, g.m(), degeneracy(g).value);
}

}  // namespace pathpair
