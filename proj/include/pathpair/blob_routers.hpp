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

#include <optional>
#include <vector>

#include "pathpair/blowup.hpp"
#include "pathpair/graph.hpp"
#include "pathpair/pairing.hpp"

namespace pathpair {

// Terminal pairs with pairwise-disjoint endpoints, in a blob's local indices.
using DemandList = std::vector<VertexPair>;

// Throws ParameterError if an endpoint repeats, a pair is degenerate, or an
// endpoint falls outside 0..n-1.
void validate_demands(const DemandList& demands, int n);

// Routes through the centre (local vertex 0) of S_size. Never fails on valid
// demands: every leaf edge serves only the pair owning that leaf.
std::vector<Path> star_route(int size, const DemandList& demands);

inline constexpr int kDefaultBruteForceEdgeCap = 40;

// Exact edge-disjoint routing by backtracking. Pairs are taken in input order
// and paths grown in ascending neighbour order. Only vertex-simple paths are
// explored, which loses nothing: a walk that revisits a vertex shortcuts to a
// simple path on a subset of its edges. Returns nullopt iff no routing exists.
// Throws SizeLimitExceeded when g has more than `edge_cap` edges.
std::optional<std::vector<Path>> brute_force_route(const Graph& g, const DemandList& demands,
                                                   int edge_cap = kDefaultBruteForceEdgeCap);

// Dispatches on the blob kind; demands and paths use local indices.
std::optional<std::vector<Path>> inner_route(const BlobSpec& blob, const DemandList& demands,
                                             int edge_cap = kDefaultBruteForceEdgeCap);

}  // namespace pathpair
