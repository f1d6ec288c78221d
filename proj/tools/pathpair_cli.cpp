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


// pathpair: construct blown-up paths, route pairings through them and verify
// graph properties.
//
//   pathpair construct thm1 --n 200 --m 1000 --out-dir out
//   pathpair construct thm2 --n 100 --c 5
//   pathpair construct counterexample --t 2
//   pathpair expand spec.json graph.txt
//   pathpair route spec.json [pairing.txt] [--seed S] [--count C] [--out-dir D]
//   pathpair verify graph.txt [--cut] [--pp] [--layers] [--bounds] [--json] [--cap N]
//
// Exit status is 0 when every requested check or route succeeded, 1 when a
// check failed or a route was refused, 2 on bad input.

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pathpair/blowup.hpp"
#include "pathpair/constructions.hpp"
#include "pathpair/error.hpp"
#include "pathpair/graph.hpp"
#include "pathpair/io.hpp"
#include "pathpair/oracle.hpp"
#include "pathpair/pairing.hpp"
#include "pathpair/sweep_router.hpp"

namespace fs = std::filesystem;
using namespace pathpair;

namespace {

constexpr int kExitFailed = 1;
constexpr int kExitError = 2;

std::string pairs_text(const Pairing& p) {
  std::ostringstream os;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) os << ' ';
    os << p.pairs[i].first << '-' << p.pairs[i].second;
  }
  return os.str();
}

// ---------------------------------------------------------------- construct

struct ConstructArgs {
  std::string family;
  int n = 0;
  std::int64_t m = 0;
  int c = 5;
  int t = 2;
  std::string out_dir = ".";
};

int cmd_construct(const ConstructArgs& a) {
  std::optional<BlownUpPath> bp;
  std::optional<Pairing> adversarial;
  std::string stem;
  std::vector<std::pair<std::string, std::string>> extra;

  if (a.family == "thm1") {
    Thm1Params params = make_thm1_params(a.n, a.m);
    bp = thm1_graph(params);
    stem = "thm1_n" + std::to_string(a.n) + "_m" + std::to_string(a.m);
    extra.emplace_back("k", std::to_string(params.k));
    extra.emplace_back("in_theorem_range", params.in_theorem_range ? "yes" : "no");
  } else if (a.family == "thm2") {
    Thm2Sequence seq = thm2_sequence(a.c, a.n);
    bp = thm2_graph(Thm2Params{a.n, a.c});
    stem = "thm2_n" + std::to_string(a.n) + "_c" + std::to_string(seq.c);
    extra.emplace_back("c", std::to_string(seq.c));
    extra.emplace_back("sequence_m", std::to_string(seq.m));
    extra.emplace_back("m_prime", std::to_string(seq.m_prime));
  } else {
    Counterexample ce = counterexample_p5(a.t);
    bp = ce.blowup;
    adversarial = ce.pairing;
    stem = "counterexample_t" + std::to_string(a.t);
    extra.emplace_back("t", std::to_string(a.t));
  }

  Graph g = expand(*bp);
  fs::path dir(a.out_dir);
  fs::create_directories(dir);
  fs::path spec_path = dir / (stem + ".json");
  fs::path graph_path = dir / (stem + ".graph");
  io::write_file(spec_path, io::blowup_to_json(*bp));
  std::ostringstream gs;
  io::write_graph(gs, g);
  io::write_file(graph_path, gs.str());

  std::optional<int> d = diameter(g);
  std::cout << "family=" << a.family << '\n'
            << "n=" << g.n() << '\n'
            << "m=" << g.m() << '\n';
  for (const auto& [key, value] : extra) std::cout << key << '=' << value << '\n';
  std::cout << "blobs=" << bp->k() << '\n'
            << "diameter=" << (d ? std::to_string(*d) : "inf") << '\n'
            << "degeneracy=" << degeneracy(g).value << '\n'
            << "eq1=" << (check_eq1(*bp).empty() ? "pass" : "fail") << '\n'
            << "spec=" << spec_path.string() << '\n'
            << "graph=" << graph_path.string() << '\n';
  if (adversarial) {
    fs::path pairing_path = dir / (stem + ".pairing");
    std::ostringstream ps;
    io::write_pairing(ps, *adversarial);
    io::write_file(pairing_path, ps.str());
    std::cout << "pairing=" << pairing_path.string() << '\n';
  }
  return 0;
}

// ---------------------------------------------------------------- expand

int cmd_expand(const std::string& spec_file, const std::string& graph_file) {
  BlownUpPath bp = io::blowup_from_json(io::read_file(spec_file));
  Graph g = expand(bp);
  std::ostringstream os;
  io::write_graph(os, g);
  io::write_file(graph_file, os.str());
  std::cout << "n=" << g.n() << '\n' << "m=" << g.m() << '\n';
  return 0;
}

// ---------------------------------------------------------------- route

struct RouteArgs {
  std::string spec_file;
  std::string pairing_file;
  std::uint64_t seed = 0;
  int count = 1;
  std::string out_dir = ".";
  std::optional<int> cap;
};

int cmd_route(const RouteArgs& a) {
  BlownUpPath bp = io::blowup_from_json(io::read_file(a.spec_file));
  RouteOptions options;
  if (a.cap) options.oracle_cap = *a.cap;

  bool refused = false;
  auto eq1 = check_eq1(bp);
  if (!eq1.empty()) {
    std::cerr << "eq1 violated at layers:";
    for (const auto& v : eq1) std::cerr << ' ' << v.layer;
    std::cerr << '\n';
    for (const auto& v : eq1) {
      std::cerr << "  layer " << v.layer << ": " << v.cross_edges << " cross edges < "
                << v.required << " required\n";
    }
    refused = true;
  }
  auto diags = lemma_preconditions(bp, options.oracle_cap);
  if (!diags.empty()) {
    std::cerr << "blob preconditions failed at blobs:";
    for (const auto& d : diags) std::cerr << ' ' << d.position;
    std::cerr << '\n';
    for (const auto& d : diags) std::cerr << "  blob " << d.position << ": " << d.reason << '\n';
    refused = true;
  }
  if (refused) return kExitFailed;
  options.skip_preconditions = true;

  std::vector<Pairing> jobs;
  if (!a.pairing_file.empty()) {
    std::istringstream is(io::read_file(a.pairing_file));
    jobs.push_back(io::read_pairing(is));
  } else {
    for (int j = 0; j < a.count; ++j) {
      jobs.push_back(random_pairing(bp.n(), a.seed + static_cast<std::uint64_t>(j)));
    }
  }

  Graph g = expand(bp);
  fs::path dir(a.out_dir);
  fs::create_directories(dir);
  int ok = 0;
  RouteTrace trace;
  for (std::size_t j = 0; j < jobs.size(); ++j) {
    const Pairing& p = jobs[j];
    std::cout << "pairing " << j << ": pairs=" << p.size();
    Routing r;
    try {
      r = route(bp, p, &trace, options);
    } catch (const Error& e) {
      std::cout << " FAILED " << e.what() << '\n';
      continue;
    }
    auto violations = validate_routing(g, p, r);
    std::map<std::size_t, int> histogram;
    std::size_t total = 0;
    for (const Path& path : r.paths) {
      ++histogram[path.size() - 1];
      total += path.size() - 1;
    }
    std::cout << " total_length=" << total << " lengths=";
    bool first = true;
    for (const auto& [len, cnt] : histogram) {
      std::cout << (first ? "" : ",") << len << ':' << cnt;
      first = false;
    }
    if (!violations.empty()) {
      std::cout << " INVALID pair " << violations.front().pair_index << ": "
                << violations.front().detail << '\n';
      continue;
    }
    std::ostringstream os;
    io::write_routing(os, p, r);
    io::write_file(dir / ("routing_" + std::to_string(j) + ".txt"), os.str());
    std::cout << " valid\n";
    ++ok;
  }
  std::cout << "routed " << ok << '/' << jobs.size() << " rounds=" << trace.rounds.size()
            << " repairs=" << trace.repairs << '\n';
  return ok == static_cast<int>(jobs.size()) ? 0 : kExitFailed;
}

// ---------------------------------------------------------------- verify

struct VerifyArgs {
  std::string graph_file;
  bool cut = false;
  bool pp = false;
  bool layers = false;
  bool bounds = false;
  bool json = false;
  std::optional<int> cap;
};

int cmd_verify(const VerifyArgs& a) {
  if (!a.cut && !a.pp && !a.layers && !a.bounds) {
    std::cerr << "verify: select at least one of --cut --pp --layers --bounds\n";
    return kExitError;
  }
  std::istringstream is(io::read_file(a.graph_file));
  Graph g = io::read_graph(is);

  nlohmann::ordered_json report;
  std::vector<std::pair<std::string, std::string>> lines;
  auto put = [&](const std::string& key, const nlohmann::ordered_json& value) {
    report[key] = value;
    lines.emplace_back(key, value.is_string() ? value.get<std::string>() : value.dump());
  };
  bool all_pass = true;

  put("n", g.n());
  put("m", g.m());

  if (a.cut) {
    auto violator = check_cut_condition_exhaustive(g, a.cap.value_or(kDefaultCutConditionCap));
    put("cut", violator ? "fail" : "pass");
    if (violator) {
      put("cut_witness", *violator);
      all_pass = false;
    }
  }

  if (a.pp) {
    PathPairability result = is_path_pairable(g, a.cap.value_or(kDefaultPathPairableCap));
    put("pp", result.path_pairable ? "yes" : "no");
    put("pairings_checked", result.pairings_checked);
    if (result.witness) {
      put("pp_witness", pairs_text(*result.witness));
      all_pass = false;
    }
  }

  if (a.layers) {
    const int c = std::max(5, degeneracy(g).value);
    std::optional<std::pair<Vertex, int>> binom_fail;
    std::optional<std::pair<Vertex, int>> geom_fail;
    for (Vertex x = 0; x < g.n(); ++x) {
      if (!binom_fail) {
        auto r = layer_growth_binom(g, x);
        if (!r.passed()) binom_fail.emplace(x, *r.failing_k);
      }
      if (!geom_fail) {
        auto r = layer_growth_geometric(g, x, c);
        if (!r.passed()) geom_fail.emplace(x, *r.failing_k);
      }
    }
    put("layers_c", c);
    put("layers_binom", binom_fail ? "fail" : "pass");
    if (binom_fail) {
      put("layers_binom_source", binom_fail->first);
      put("layers_binom_k", binom_fail->second);
    }
    put("layers_geometric", geom_fail ? "fail" : "pass");
    if (geom_fail) {
      put("layers_geometric_source", geom_fail->first);
      put("layers_geometric_k", geom_fail->second);
    }
    if (binom_fail || geom_fail) all_pass = false;
  }

  if (a.bounds) {
    BoundReport br = diameter_bound_report(g);
    put("diameter", br.diameter ? nlohmann::ordered_json(*br.diameter)
                                : nlohmann::ordered_json("inf"));
    put("degeneracy", br.degeneracy);
    put("bounds_c", br.c);
    for (const BoundCheck& check : br.checks) {
      put("bound_" + check.name, check.pass ? "pass" : "fail");
      std::ostringstream os;
      os.precision(10);
      os << check.lhs << " <= " << check.rhs;
      put("bound_" + check.name + "_values", os.str());
    }
    if (!br.all_pass()) all_pass = false;
  }

  if (a.json) {
    std::cout << report.dump() << '\n';
  } else {
    for (const auto& [key, value] : lines) std::cout << key << '=' << value << '\n';
  }
  return all_pass ? 0 : kExitFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Routing and verification for blown-up path graphs"};
  app.require_subcommand(1);

  ConstructArgs construct_args;
  auto* construct = app.add_subcommand("construct", "Build a family instance");
  construct->add_option("family", construct_args.family, "thm1, thm2 or counterexample")
      ->required()
      ->check(CLI::IsMember({"thm1", "thm2", "counterexample"}));
  construct->add_option("--n", construct_args.n, "Vertex count");
  construct->add_option("--m", construct_args.m, "Edge budget (thm1)");
  construct->add_option("--c", construct_args.c, "Degeneracy parameter (thm2)");
  construct->add_option("--t", construct_args.t, "Counterexample parameter");
  construct->add_option("--out-dir", construct_args.out_dir, "Output directory");

  std::string expand_spec, expand_graph;
  auto* expand_cmd = app.add_subcommand("expand", "Expand a blow-up spec into a graph file");
  expand_cmd->add_option("spec", expand_spec)->required();
  expand_cmd->add_option("graph", expand_graph)->required();

  RouteArgs route_args;
  int route_cap = 0;
  auto* route_cmd = app.add_subcommand("route", "Route pairings through a blow-up spec");
  route_cmd->add_option("spec", route_args.spec_file)->required();
  route_cmd->add_option("pairing", route_args.pairing_file, "Pairing file; random pairings if absent");
  route_cmd->add_option("--seed", route_args.seed, "Seed of the first random pairing");
  route_cmd->add_option("--count", route_args.count, "Number of random pairings")
      ->check(CLI::PositiveNumber);
  route_cmd->add_option("--out-dir", route_args.out_dir, "Directory for routing files");
  auto* route_cap_opt = route_cmd->add_option("--cap", route_cap, "Oracle size cap for explicit blobs");

  VerifyArgs verify_args;
  int verify_cap = 0;
  auto* verify = app.add_subcommand("verify", "Run checks on a graph file");
  verify->add_option("graph", verify_args.graph_file)->required();
  verify->add_flag("--cut", verify_args.cut, "Exhaustive cut condition");
  verify->add_flag("--pp", verify_args.pp, "Exhaustive path-pairability");
  verify->add_flag("--layers", verify_args.layers, "BFS layer growth from every vertex");
  verify->add_flag("--bounds", verify_args.bounds, "Diameter bounds");
  verify->add_flag("--json", verify_args.json, "Emit one JSON object");
  auto* verify_cap_opt = verify->add_option("--cap", verify_cap, "Size cap for exhaustive checks");

  CLI11_PARSE(app, argc, argv);
  if (*route_cap_opt) route_args.cap = route_cap;
  if (*verify_cap_opt) verify_args.cap = verify_cap;

  try {
    if (*construct) return cmd_construct(construct_args);
    if (*expand_cmd) return cmd_expand(expand_spec, expand_graph);
    if (*route_cmd) {
      if (!route_args.pairing_file.empty() && route_cmd->count("--count")) {
        std::cerr << "route: give a pairing file or --count, not both\n";
        return kExitError;
      }
      return cmd_route(route_args);
    }
    return cmd_verify(verify_args);
  } catch (const SizeLimitExceeded& e) {
    std::cerr << "size limit: " << e.what() << '\n';
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
  }
  return kExitError;
}
