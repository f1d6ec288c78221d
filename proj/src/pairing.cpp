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

#include "pathpair/pairing.hpp"

#include <algorithm>
#include <random>
#include <unordered_map>

#include "pathpair/error.hpp"

namespace pathpair {

void Pairing::validate(int n) const {
  std::vector<char> seen(n < 0 ? 0 : n, 0);
  for (const auto& [a, b] : pairs) {
    for (Vertex v : {a, b}) {
      if (v < 0 || v >= n) {
        throw ParameterError("pairing: vertex " + std::to_string(v) + " out of range");
      }
      if (seen[v]) {
        throw ParameterError("pairing: vertex " + std::to_string(v) +
                             " appears in more than one pair");
      }
      seen[v] = 1;
    }
  }
}

std::vector<Vertex> Pairing::siblings(int n) const {
  std::vector<Vertex> out(n, -1);
  for (const auto& [a, b] : pairs) {
    out[a] = b;
    out[b] = a;
  }
  return out;
}

namespace {

std::uint64_t edge_key(Vertex u, Vertex v) {
  if (u > v) std::swap(u, v);
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(u)) << 32) |
         static_cast<std::uint32_t>(v);
}

std::string edge_text(Vertex u, Vertex v) {
  return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

}  // namespace

std::vector<RoutingViolation> validate_routing(const Graph& g, const Pairing& p,
                                               const Routing& r) {
  std::vector<RoutingViolation> out;
  if (r.paths.size() != p.pairs.size()) {
    out.push_back({ViolationKind::kMissingPath, std::min(r.paths.size(), p.pairs.size()),
                   "routing has " + std::to_string(r.paths.size()) + " paths for " +
                       std::to_string(p.pairs.size()) + " pairs"});
  }
  // edge -> first path that used it
  std::unordered_map<std::uint64_t, std::size_t> owner;
  const std::size_t count = std::min(r.paths.size(), p.pairs.size());
  for (std::size_t i = 0; i < count; ++i) {
    const Path& path = r.paths[i];
    const auto& pair = p.pairs[i];
    if (path.empty() || path.front() != pair.first || path.back() != pair.second) {
      out.push_back({ViolationKind::kMissingPath, i, "endpoints do not match the pair"});
      continue;
    }
    for (std::size_t j = 0; j + 1 < path.size(); ++j) {
      Vertex u = path[j];
      Vertex v = path[j + 1];
      if (!g.has_edge(u, v)) {
        out.push_back({ViolationKind::kNotAdjacent, i, edge_text(u, v) + " is not an edge"});
        continue;
      }
      auto [it, inserted] = owner.emplace(edge_key(u, v), i);
      if (inserted) continue;
      if (it->second == i) {
        out.push_back({ViolationKind::kRepeatedEdge, i, edge_text(u, v) + " repeats"});
      } else {
        out.push_back({ViolationKind::kSharedEdge, i,
                       edge_text(u, v) + " also used by pair " + std::to_string(it->second)});
      }
    }
  }
  return out;
}

Pairing random_pairing(int n, std::uint64_t seed) {
  std::vector<Vertex> order(n);
  for (Vertex v = 0; v < n; ++v) order[v] = v;
  std::mt19937_64 rng(seed);
  for (int i = n - 1; i > 0; --i) {
    std::uniform_int_distribution<int> pick(0, i);
    std::swap(order[i], order[pick(rng)]);
  }
  Pairing p;
  for (int i = 0; i + 1 < n; i += 2) p.pairs.push_back({order[i], order[i + 1]});
  return p;
}

}  // namespace pathpair
