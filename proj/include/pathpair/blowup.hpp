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
#include <string>
#include <vector>

#include "pathpair/graph.hpp"

namespace pathpair {

enum class BlobKind { kStar, kEmpty, kExplicit };

const char* to_string(BlobKind kind);

// One graph substituted for a vertex of the base path. A star's centre is its
// lowest local index.
class BlobSpec {
 public:
  static BlobSpec star(int size);
  static BlobSpec empty(int size);
  static BlobSpec explicit_graph(Graph inner);

  BlobKind kind() const { return kind_; }
  int size() const { return size_; }
  // Edges inside the blob, local indices.
  Graph inner_graph() const;
  const Graph& explicit_inner() const { return inner_; }
  std::int64_t inner_edge_count() const;

  friend bool operator==(const BlobSpec&, const BlobSpec&) = default;

 private:
  BlobSpec(BlobKind kind, int size, Graph inner);

  BlobKind kind_ = BlobKind::kStar;
  int size_ = 1;
  Graph inner_;
};

// P_k(G_1, ..., G_k). Blob i (0-based here) occupies the contiguous vertex
// range [offset(i), offset(i) + size(i)).
class BlownUpPath {
 public:
  explicit BlownUpPath(std::vector<BlobSpec> blobs);

  int k() const { return static_cast<int>(blobs_.size()); }
  int n() const { return offsets_.back(); }
  const BlobSpec& blob(int i) const { return blobs_[i]; }
  const std::vector<BlobSpec>& blobs() const { return blobs_; }
  int size(int i) const { return blobs_[i].size(); }
  int offset(int i) const { return offsets_[i]; }
  // Vertices in blobs 0..i, i.e. u_{i+1} in 1-based blob numbering.
  int prefix(int i) const { return offsets_[i + 1]; }
  int blob_of(Vertex v) const;
  std::vector<int> sizes() const;

  friend bool operator==(const BlownUpPath&, const BlownUpPath&) = default;

 private:
  std::vector<BlobSpec> blobs_;
  std::vector<int> offsets_;  // k + 1 entries
};

Graph expand(const BlownUpPath& bp);

// One failing layer of n_i * n_{i+1} >= min(u_i, n - u_i). `layer` is the
// 1-based i: the layer between blob i and blob i+1.
struct Eq1Violation {
  int layer = 0;
  std::int64_t cross_edges = 0;  // n_i * n_{i+1}
  std::int64_t required = 0;     // min(u_i, n - u_i)
};

// Empty result means the prefix-cut inequality holds at every layer.
std::vector<Eq1Violation> check_eq1(const BlownUpPath& bp);

struct BlobDiagnostic {
  int position = 0;  // 1-based blob index
  std::string reason;
};

inline constexpr int kDefaultPathPairableCap = 10;

// Every blob except the last must be path-pairable: stars always are, empty
// blobs only on a single vertex, explicit blobs are decided by the exhaustive
// oracle (throws SizeLimitExceeded beyond `oracle_cap` vertices). When k = 1
// the lone blob is checked as well. Empty result means pass.
std::vector<BlobDiagnostic> lemma_preconditions(const BlownUpPath& bp,
                                                int oracle_cap = kDefaultPathPairableCap);

std::string describe(const BlownUpPath& bp);

}  // namespace pathpair
