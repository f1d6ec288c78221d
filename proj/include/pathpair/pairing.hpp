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
#include <string>
#include <vector>

#include "pathpair/graph.hpp"

namespace pathpair {

// Two siblings. Orientation is kept only so that routings can be reported in
// the order the caller gave.
struct VertexPair {
  Vertex first = 0;
  Vertex second = 0;

  friend bool operator==(const VertexPair&, const VertexPair&) = default;
};

// Disjoint unordered pairs. Not every vertex needs to be paired.
struct Pairing {
  std::vector<VertexPair> pairs;

  std::size_t size() const { return pairs.size(); }
  bool empty() const { return pairs.empty(); }

  // Throws ParameterError if an endpoint repeats or is outside 0..n-1.
  void validate(int n) const;
  // sibling[v] or -1 for unpaired vertices.
  std::vector<Vertex> siblings(int n) const;

  friend bool operator==(const Pairing&, const Pairing&) = default;
};

// paths[i] joins pairs[i].first to pairs[i].second.
struct Routing {
  std::vector<Path> paths;

  friend bool operator==(const Routing&, const Routing&) = default;
};

enum class ViolationKind {
  kMissingPath,     // no path, or wrong endpoints
  kNotAdjacent,     // consecutive vertices not adjacent in g
  kSharedEdge,      // edge used by two different paths
  kRepeatedEdge,    // edge used twice by the same path
};

struct RoutingViolation {
  ViolationKind kind;
  std::size_t pair_index = 0;
  std::string detail;
};

// Empty result means the routing is a valid edge-disjoint linkage of p in g.
std::vector<RoutingViolation> validate_routing(const Graph& g, const Pairing& p,
                                               const Routing& r);

// Seeded Fisher-Yates shuffle of 0..n-1, consecutive entries paired; the last
// vertex stays unpaired when n is odd.
Pairing random_pairing(int n, std::uint64_t seed);

}  // namespace pathpair
