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

#include "pathpair/blob_routers.hpp"
#include "pathpair/blowup.hpp"
#include "pathpair/pairing.hpp"

namespace pathpair {

// One round of assigning unfinished paths across a complete bipartite layer.
// Sources are the vertices of the current blob, targets those of the next,
// both in local indices.
struct AssignmentProblem {
  int sources = 0;
  int targets = 0;
  // Weight each target carries before assignment (1 for a vertex whose own
  // path starts there and continues further).
  std::vector<int> base_weight;
  // sources x targets, row-major; 1 where the edge is already taken by a
  // path-ending edge this round.
  std::vector<std::uint8_t> taken;
  // Source vertex of every path to assign.
  std::vector<int> paths;
};

struct Assignment {
  std::vector<int> target;  // per path
  std::vector<int> weight;  // per target, base weight included
  int descent_moves = 0;
};

// Greedy lightest-target pass (ties to the lowest index) followed by
// single-path descent on the sum of squared weights: a path from v at x moves
// to y whenever edge vy is free and w(x) >= w(y) + 2. Path-ending edges are
// fixed. At the fixpoint w(x) <= w(y) + 1 for every movable path and free y.
// Throws CapacityExceeded if a source has more paths than free targets.
Assignment balanced_assign(const AssignmentProblem& problem);

// Per-round bookkeeping, in 0-based blob indices: round i crosses the layer
// between blob i and blob i+1.
struct RoundRecord {
  int round = 0;
  bool terminal = false;       // last layer: no assignment, no weights
  int unfinished_in = 0;       // paths entering the layer
  int path_ending = 0;         // finished by a direct edge
  std::int64_t weight_sum = 0;  // sum of w over blob i+1 after assignment
  std::int64_t weight_bound = 0;  // min(u, n - u) at the cut after blob i+1
  int max_in_multiplicity = 0;  // largest w(x) over x in blob i
  int next_size = 0;           // size of blob i+1
  int max_weight = 0;
  int min_weight = 0;
  int capacity = 0;            // size of blob i+2
  bool repaired = false;
  int x_count = 0;
  int y_count = 0;
  int descent_moves = 0;
};

struct RouteTrace {
  std::vector<RoundRecord> rounds;
  int inner_route_calls = 0;
  int repairs = 0;

  // Counters for the invariant checks performed (each failure throws).
  std::int64_t weight_bound_checks = 0;
  std::int64_t capacity_checks = 0;
  std::int64_t repair_structure_checks = 0;
};

struct RouteOptions {
  int edge_cap = kDefaultBruteForceEdgeCap;
  int oracle_cap = kDefaultPathPairableCap;
  // Skip check_eq1 / lemma_preconditions (the caller already ran them).
  bool skip_preconditions = false;
};

// Joins every pair of `p` in expand(bp) by edge-disjoint paths, sweeping the
// blobs left to right. Throws PreconditionViolated, InnerRoutingFailed or
// InternalInvariantBreach. When `trace` is given, per-round records are
// appended to it.
Routing route(const BlownUpPath& bp, const Pairing& p, RouteTrace* trace = nullptr,
              const RouteOptions& options = {});

}  // namespace pathpair
