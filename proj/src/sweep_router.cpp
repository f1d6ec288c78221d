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

#include "pathpair/sweep_router.hpp"

#include <algorithm>
#include <string>

#include "pathpair/error.hpp"

namespace pathpair {

Assignment balanced_assign(const AssignmentProblem& problem) {
  const int sources = problem.sources;
  const int targets = problem.targets;
  if (static_cast<int>(problem.base_weight.size()) != targets ||
      problem.taken.size() != static_cast<std::size_t>(sources) * targets) {
    throw ParameterError("balanced_assign: inconsistent problem dimensions");
  }
  Assignment out;
  out.weight = problem.base_weight;
  out.target.assign(problem.paths.size(), -1);
  std::vector<std::uint8_t> used = problem.taken;
  auto& w = out.weight;

  auto lightest_free = [&](int v) {
    const std::uint8_t* row = &used[static_cast<std::size_t>(v) * targets];
    int best = -1;
    for (int y = 0; y < targets; ++y) {
      if (!row[y] && (best < 0 || w[y] < w[best])) best = y;
    }
    return best;
  };

  for (std::size_t p = 0; p < problem.paths.size(); ++p) {
    const int v = problem.paths[p];
    if (v < 0 || v >= sources) throw ParameterError("balanced_assign: source out of range");
    const int y = lightest_free(v);
    if (y < 0) {
      throw CapacityExceeded("source " + std::to_string(v) + " has more paths than free targets");
    }
    used[static_cast<std::size_t>(v) * targets + y] = 1;
    ++w[y];
    out.target[p] = y;
  }

  // Each move lowers sum w^2 by at least 2, so this terminates.
  for (bool moved = true; moved;) {
    moved = false;
    for (std::size_t p = 0; p < problem.paths.size(); ++p) {
      const int v = problem.paths[p];
      const int x = out.target[p];
      const int y = lightest_free(v);
      if (y < 0 || w[x] < w[y] + 2) continue;
      used[static_cast<std::size_t>(v) * targets + x] = 0;
      used[static_cast<std::size_t>(v) * targets + y] = 1;
      --w[x];
      ++w[y];
      out.target[p] = y;
      ++out.descent_moves;
      moved = true;
    }
  }
  return out;
}

namespace {

struct PairInfo {
  Vertex source = 0;
  Vertex target = 0;
  int source_blob = 0;
  int target_blob = 0;
};

// An unfinished path: pair id and the vertex it currently ends at.
struct Active {
  int pair = 0;
  Vertex at = 0;
};

class SweepRouter {
 public:
  SweepRouter(const BlownUpPath& bp, const Pairing& p, RouteTrace* trace,
              const RouteOptions& options)
      : bp_(bp), pairing_(p), trace_(trace), options_(options) {}

  Routing run() {
    classify();
    const int k = bp_.k();
    route_blob(0, inner_pairs_[0], {});
    if (k > 1) {
      std::vector<Active> active;
      for (int pid : starts_[0]) active.push_back({pid, info_[pid].source});
      for (int i = 0; i + 1 < k; ++i) active = run_round(i, std::move(active));
    }
    return assemble();
  }

 private:
  void classify() {
    const auto& pairs = pairing_.pairs;
    info_.resize(pairs.size());
    paths_.resize(pairs.size());
    inner_pairs_.assign(bp_.k(), {});
    starts_.assign(bp_.k(), {});
    for (std::size_t pid = 0; pid < pairs.size(); ++pid) {
      Vertex a = pairs[pid].first;
      Vertex b = pairs[pid].second;
      int ba = bp_.blob_of(a);
      int bb = bp_.blob_of(b);
      // Grow from the sibling in the earlier blob, ties to the lower index.
      if (bb < ba || (bb == ba && b < a)) {
        std::swap(a, b);
        std::swap(ba, bb);
      }
      info_[pid] = {a, b, ba, bb};
      paths_[pid].assign(1, a);
      if (ba == bb) {
        inner_pairs_[ba].push_back(static_cast<int>(pid));
      } else {
        starts_[ba].push_back(static_cast<int>(pid));
      }
    }
  }

  // Runs the blob's own router on its sibling pairs plus `extra` local
  // demands; returns the paths for `extra` in order.
  std::vector<Path> route_blob(int b, const std::vector<int>& sibling_pairs,
                               const DemandList& extra) {
    const int base = bp_.offset(b);
    DemandList demands;
    for (int pid : sibling_pairs) {
      demands.push_back({info_[pid].source - base, info_[pid].target - base});
    }
    demands.insert(demands.end(), extra.begin(), extra.end());
    if (demands.empty()) return {};
    if (trace_) ++trace_->inner_route_calls;
    auto routed = inner_route(bp_.blob(b), demands, options_.edge_cap);
    if (!routed) {
      throw InnerRoutingFailed("blob " + std::to_string(b + 1) + " (" +
                               to_string(bp_.blob(b).kind()) + ", size " +
                               std::to_string(bp_.size(b)) + ") cannot join its " +
                               std::to_string(demands.size()) + " demands");
    }
    for (std::size_t j = 0; j < sibling_pairs.size(); ++j) {
      Path& path = paths_[sibling_pairs[j]];
      path.clear();
      for (Vertex v : (*routed)[j]) path.push_back(base + v);
    }
    return {routed->begin() + static_cast<std::ptrdiff_t>(sibling_pairs.size()), routed->end()};
  }

  [[noreturn]] void breach(int round, const std::string& what) const {
    throw InternalInvariantBreach("round " + std::to_string(round + 1) + ": " + what);
  }

  std::vector<Active> run_round(int i, std::vector<Active> active) {
    const int k = bp_.k();
    const int n = bp_.n();
    const int src_size = bp_.size(i);
    const int dst_size = bp_.size(i + 1);
    const int src_base = bp_.offset(i);
    const int dst_base = bp_.offset(i + 1);
    RoundRecord rec;
    rec.round = i;
    rec.unfinished_in = static_cast<int>(active.size());
    rec.next_size = dst_size;

    // Condition (b) on entry: no source carries more paths than it has
    // neighbours in the next blob.
    std::vector<int> multiplicity(src_size, 0);
    for (const Active& a : active) ++multiplicity[a.at - src_base];
    rec.max_in_multiplicity =
        multiplicity.empty() ? 0 : *std::max_element(multiplicity.begin(), multiplicity.end());
    if (trace_) ++trace_->capacity_checks;
    if (rec.max_in_multiplicity > dst_size) {
      breach(i, "an endpoint carries " + std::to_string(rec.max_in_multiplicity) +
                    " paths into a blob of size " + std::to_string(dst_size));
    }

    std::vector<std::uint8_t> taken(static_cast<std::size_t>(src_size) * dst_size, 0);
    auto edge = [&](Vertex x, Vertex y) -> std::uint8_t& {
      return taken[static_cast<std::size_t>(x - src_base) * dst_size + (y - dst_base)];
    };

    // Path-ending edges first.
    std::vector<Active> remaining;
    for (const Active& a : active) {
      const PairInfo& pi = info_[a.pair];
      if (pi.target_blob == i + 1) {
        edge(a.at, pi.target) = 1;
        paths_[a.pair].push_back(pi.target);
        ++rec.path_ending;
      } else {
        remaining.push_back(a);
      }
    }

    if (i == k - 2) {
      rec.terminal = true;
      if (!remaining.empty()) breach(i, "unfinished paths left after the last layer");
      // Siblings inside the last blob are joined through a middle vertex.
      for (int pid : inner_pairs_[k - 1]) {
        const Vertex u = info_[pid].source;
        const Vertex v = info_[pid].target;
        Vertex middle = -1;
        for (Vertex w = src_base; w < src_base + src_size; ++w) {
          if (!edge(w, u) && !edge(w, v)) {
            middle = w;
            break;
          }
        }
        if (middle < 0) breach(i, "no free middle vertex for a pair in the last blob");
        edge(middle, u) = 1;
        edge(middle, v) = 1;
        paths_[pid] = {u, middle, v};
      }
      finish_record(std::move(rec));
      return {};
    }

    // Balanced assignment of the remaining paths.
    AssignmentProblem problem;
    problem.sources = src_size;
    problem.targets = dst_size;
    problem.base_weight.assign(dst_size, 0);
    for (int pid : starts_[i + 1]) problem.base_weight[info_[pid].source - dst_base] = 1;
    problem.taken = std::move(taken);
    problem.paths.reserve(remaining.size());
    for (const Active& a : remaining) problem.paths.push_back(a.at - src_base);
    Assignment assignment;
    try {
      assignment = balanced_assign(problem);
    } catch (const CapacityExceeded& e) {
      breach(i, e.what());
    }
    rec.descent_moves = assignment.descent_moves;

    std::vector<Active> next;
    next.reserve(remaining.size() + starts_[i + 1].size());
    for (std::size_t r = 0; r < remaining.size(); ++r) {
      const Vertex y = dst_base + assignment.target[r];
      paths_[remaining[r].pair].push_back(y);
      next.push_back({remaining[r].pair, y});
    }
    for (int pid : starts_[i + 1]) next.push_back({pid, info_[pid].source});

    std::vector<int>& w = assignment.weight;
    for (int x : w) rec.weight_sum += x;
    const std::int64_t u = bp_.prefix(i + 1);
    rec.weight_bound = std::min<std::int64_t>(u, n - u);
    if (trace_) ++trace_->weight_bound_checks;
    if (rec.weight_sum > rec.weight_bound) {
      breach(i, "weight sum " + std::to_string(rec.weight_sum) + " exceeds cut bound " +
                    std::to_string(rec.weight_bound));
    }

    const int cap = bp_.size(i + 2);
    rec.capacity = cap;
    rec.max_weight = *std::max_element(w.begin(), w.end());
    rec.min_weight = *std::min_element(w.begin(), w.end());

    DemandList repair;
    if (rec.max_weight > cap) {
      if (trace_) ++trace_->repair_structure_checks;
      if (rec.max_weight != cap + 1) {
        breach(i, "max weight " + std::to_string(rec.max_weight) + " above capacity + 1");
      }
      if (rec.min_weight < cap - 1) {
        breach(i, "min weight " + std::to_string(rec.min_weight) +
                      " below capacity - 1 while a vertex is overloaded");
      }
      std::vector<int> over;
      std::vector<int> under;
      for (int y = 0; y < dst_size; ++y) {
        if (w[y] == cap + 1) over.push_back(y);
        if (w[y] == cap - 1) under.push_back(y);
      }
      rec.repaired = true;
      rec.x_count = static_cast<int>(over.size());
      rec.y_count = static_cast<int>(under.size());
      if (over.size() > under.size()) {
        breach(i, std::to_string(over.size()) + " overloaded vertices but only " +
                      std::to_string(under.size()) + " underloaded");
      }
      for (int pid : inner_pairs_[i + 1]) {
        for (Vertex v : {info_[pid].source, info_[pid].target}) {
          if (w[v - dst_base] != cap) breach(i, "sibling pair inside the blob is not balanced");
        }
      }
      for (std::size_t j = 0; j < over.size(); ++j) repair.push_back({over[j], under[j]});
      if (trace_) ++trace_->repairs;
    }

    std::vector<Path> detours = route_blob(i + 1, inner_pairs_[i + 1], repair);

    // Divert the lowest-numbered path at each overloaded vertex.
    for (std::size_t j = 0; j < repair.size(); ++j) {
      const Vertex x = dst_base + repair[j].first;
      Active* chosen = nullptr;
      for (Active& a : next) {
        if (a.at == x && (!chosen || a.pair < chosen->pair)) chosen = &a;
      }
      if (!chosen) breach(i, "overloaded vertex has no path to divert");
      Path& path = paths_[chosen->pair];
      for (std::size_t s = 1; s < detours[j].size(); ++s) path.push_back(dst_base + detours[j][s]);
      chosen->at = path.back();
      --w[repair[j].first];
      ++w[repair[j].second];
    }
    if (*std::max_element(w.begin(), w.end()) > cap) breach(i, "repair left a vertex overloaded");

    finish_record(std::move(rec));
    return next;
  }

  void finish_record(RoundRecord rec) {
    if (trace_) trace_->rounds.push_back(std::move(rec));
  }

  Routing assemble() {
    Routing out;
    out.paths.resize(paths_.size());
    for (std::size_t pid = 0; pid < paths_.size(); ++pid) {
      Path path = std::move(paths_[pid]);
      if (path.empty() || path.back() != info_[pid].target) {
        throw InternalInvariantBreach("pair " + std::to_string(pid) + " left unjoined");
      }
      if (path.front() != pairing_.pairs[pid].first) std::reverse(path.begin(), path.end());
      out.paths[pid] = std::move(path);
    }
    return out;
  }

  const BlownUpPath& bp_;
  const Pairing& pairing_;
  RouteTrace* trace_;
  RouteOptions options_;
  std::vector<PairInfo> info_;
  std::vector<Path> paths_;
  std::vector<std::vector<int>> inner_pairs_;  // per blob, pairs inside it
  std::vector<std::vector<int>> starts_;       // per blob, pairs starting there
};

std::string describe_violations(const std::vector<Eq1Violation>& eq1,
                                const std::vector<BlobDiagnostic>& blobs) {
  std::string out;
  for (const auto& v : eq1) {
    out += "layer " + std::to_string(v.layer) + ": " + std::to_string(v.cross_edges) + " < " +
           std::to_string(v.required) + "; ";
  }
  for (const auto& d : blobs) out += "blob " + std::to_string(d.position) + ": " + d.reason + "; ";
  return out;
}

}  // namespace

Routing route(const BlownUpPath& bp, const Pairing& p, RouteTrace* trace,
              const RouteOptions& options) {
  p.validate(bp.n());
  if (!options.skip_preconditions) {
    auto eq1 = check_eq1(bp);
    auto blobs = lemma_preconditions(bp, options.oracle_cap);
    if (!eq1.empty() || !blobs.empty()) {
      throw PreconditionViolated("blow-up rejected: " + describe_violations(eq1, blobs));
    }
  }
  return SweepRouter(bp, p, trace, options).run();
}

}  // namespace pathpair
