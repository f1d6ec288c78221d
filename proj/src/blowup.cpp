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

#include "pathpair/blowup.hpp"

#include <algorithm>
#include <sstream>

#include "pathpair/error.hpp"
#include "pathpair/oracle.hpp"

namespace pathpair {

const char* to_string(BlobKind kind) {
  switch (kind) {
    case BlobKind::kStar: return "star";
    case BlobKind::kEmpty: return "empty";
    case BlobKind::kExplicit: return "explicit";
  }
  return "?";
}

BlobSpec::BlobSpec(BlobKind kind, int size, Graph inner)
    : kind_(kind), size_(size), inner_(std::move(inner)) {
  if (size_ < 1) throw ParameterError("blob size must be >= 1");
}

BlobSpec BlobSpec::star(int size) { return BlobSpec(BlobKind::kStar, size, Graph()); }

BlobSpec BlobSpec::empty(int size) { return BlobSpec(BlobKind::kEmpty, size, Graph()); }

BlobSpec BlobSpec::explicit_graph(Graph inner) {
  int size = inner.n();
  return BlobSpec(BlobKind::kExplicit, size, std::move(inner));
}

Graph BlobSpec::inner_graph() const {
  switch (kind_) {
    case BlobKind::kStar: return star_graph(size_);
    case BlobKind::kEmpty: return Graph(size_);
    case BlobKind::kExplicit: return inner_;
  }
  return Graph(size_);
}

std::int64_t BlobSpec::inner_edge_count() const {
  switch (kind_) {
    case BlobKind::kStar: return size_ - 1;
    case BlobKind::kEmpty: return 0;
    case BlobKind::kExplicit: return inner_.m();
  }
  return 0;
}

BlownUpPath::BlownUpPath(std::vector<BlobSpec> blobs) : blobs_(std::move(blobs)) {
  if (blobs_.empty()) throw ParameterError("blow-up needs at least one blob");
  offsets_.reserve(blobs_.size() + 1);
  offsets_.push_back(0);
  for (const auto& b : blobs_) offsets_.push_back(offsets_.back() + b.size());
}

int BlownUpPath::blob_of(Vertex v) const {
  if (v < 0 || v >= n()) throw ParameterError("blob_of: vertex out of range");
  auto it = std::upper_bound(offsets_.begin(), offsets_.end(), v);
  return static_cast<int>(it - offsets_.begin()) - 1;
}

std::vector<int> BlownUpPath::sizes() const {
  std::vector<int> out;
  for (const auto& b : blobs_) out.push_back(b.size());
  return out;
}

Graph expand(const BlownUpPath& bp) {
  Graph g(bp.n());
  for (int i = 0; i < bp.k(); ++i) {
    const int base = bp.offset(i);
    for (auto [a, b] : bp.blob(i).inner_graph().edges()) g.add_edge(base + a, base + b);
    if (i + 1 < bp.k()) {
      const int next = bp.offset(i + 1);
      for (int a = 0; a < bp.size(i); ++a)
        for (int b = 0; b < bp.size(i + 1); ++b) g.add_edge(base + a, next + b);
    }
  }
  return g;
}

std::vector<Eq1Violation> check_eq1(const BlownUpPath& bp) {
  std::vector<Eq1Violation> out;
  const std::int64_t n = bp.n();
  for (int i = 0; i + 1 < bp.k(); ++i) {
    const std::int64_t cross = std::int64_t{bp.size(i)} * bp.size(i + 1);
    const std::int64_t u = bp.prefix(i);
    const std::int64_t required = std::min(u, n - u);
    if (cross < required) out.push_back({i + 1, cross, required});
  }
  return out;
}

std::vector<BlobDiagnostic> lemma_preconditions(const BlownUpPath& bp, int oracle_cap) {
  std::vector<BlobDiagnostic> out;
  const int checked = bp.k() == 1 ? 1 : bp.k() - 1;
  for (int i = 0; i < checked; ++i) {
    const BlobSpec& blob = bp.blob(i);
    switch (blob.kind()) {
      case BlobKind::kStar:
        break;
      case BlobKind::kEmpty:
        if (blob.size() >= 2) {
          out.push_back({i + 1, "empty blob on " + std::to_string(blob.size()) +
                                    " vertices is not path-pairable"});
        }
        break;
      case BlobKind::kExplicit: {
        auto verdict = is_path_pairable(blob.explicit_inner(), oracle_cap);
        if (!verdict.path_pairable) {
          out.push_back({i + 1, "explicit blob is not path-pairable"});
        }
        break;
      }
    }
  }
  return out;
}

std::string describe(const BlownUpPath& bp) {
  std::ostringstream os;
  os << "P_" << bp.k() << "(";
  for (int i = 0; i < bp.k(); ++i) {
    if (i) os << ", ";
    switch (bp.blob(i).kind()) {
      case BlobKind::kStar: os << "S" << bp.size(i); break;
      case BlobKind::kEmpty: os << "E" << bp.size(i); break;
      case BlobKind::kExplicit: os << "G" << bp.size(i); break;
    }
  }
  os << ")";
  return os.str();
}

}  // namespace pathpair
