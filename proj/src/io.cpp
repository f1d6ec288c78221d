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

#include "pathpair/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "pathpair/error.hpp"

namespace pathpair::io {

namespace {

// Non-empty lines with surrounding whitespace trimmed.
bool next_line(std::istream& is, std::string& line, int& line_no) {
  while (std::getline(is, line)) {
    ++line_no;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    auto last = line.find_last_not_of(" \t\r");
    line = line.substr(first, last - first + 1);
    return true;
  }
  return false;
}

[[noreturn]] void fail(int line_no, const std::string& what) {
  throw ParseError("line " + std::to_string(line_no) + ": " + what);
}

std::vector<long long> parse_ints(const std::string& text, int line_no) {
  std::istringstream ss(text);
  std::vector<long long> out;
  std::string token;
  while (ss >> token) {
    std::size_t used = 0;
    long long value = 0;
    try {
      value = std::stoll(token, &used);
    } catch (const std::exception&) {
      fail(line_no, "expected an integer, got '" + token + "'");
    }
    if (used != token.size()) fail(line_no, "expected an integer, got '" + token + "'");
    out.push_back(value);
  }
  return out;
}

}  // namespace

void write_graph(std::ostream& os, const Graph& g) {
  os << "graph " << g.n() << ' ' << g.m() << '\n';
  for (auto [u, v] : g.edges()) os << u << ' ' << v << '\n';
}

Graph read_graph(std::istream& is) {
  std::string line;
  int line_no = 0;
  if (!next_line(is, line, line_no)) throw ParseError("empty graph file");
  std::istringstream header(line);
  std::string tag;
  long long n = -1;
  long long m = -1;
  if (!(header >> tag >> n >> m) || tag != "graph" || n < 0 || m < 0) {
    fail(line_no, "expected 'graph <n> <m>'");
  }
  std::string trailing;
  if (header >> trailing) fail(line_no, "trailing tokens after header");
  Graph g(static_cast<int>(n));
  long long read = 0;
  while (next_line(is, line, line_no)) {
    auto values = parse_ints(line, line_no);
    if (values.size() != 2) fail(line_no, "expected '<u> <v>'");
    const long long u = values[0];
    const long long v = values[1];
    if (u < 0 || v < 0 || u >= n || v >= n) fail(line_no, "vertex id out of range");
    if (u == v) fail(line_no, "self-loop");
    if (u > v) fail(line_no, "edge must be written with u < v");
    if (g.has_edge(static_cast<Vertex>(u), static_cast<Vertex>(v))) fail(line_no, "duplicate edge");
    g.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
    ++read;
  }
  if (read != m) {
    throw ParseError("header declares " + std::to_string(m) + " edges, found " +
                     std::to_string(read));
  }
  return g;
}

void write_pairing(std::ostream& os, const Pairing& p) {
  for (const auto& [a, b] : p.pairs) os << a << ' ' << b << '\n';
}

Pairing read_pairing(std::istream& is) {
  Pairing p;
  std::string line;
  int line_no = 0;
  while (next_line(is, line, line_no)) {
    auto values = parse_ints(line, line_no);
    if (values.size() != 2) fail(line_no, "expected '<u> <v>'");
    if (values[0] < 0 || values[1] < 0) fail(line_no, "negative vertex id");
    if (values[0] == values[1]) fail(line_no, "vertex paired with itself");
    p.pairs.push_back({static_cast<Vertex>(values[0]), static_cast<Vertex>(values[1])});
  }
  return p;
}

void write_routing(std::ostream& os, const Pairing& p, const Routing& r) {
  for (std::size_t i = 0; i < p.pairs.size(); ++i) {
    os << p.pairs[i].first << ' ' << p.pairs[i].second << " :";
    if (i < r.paths.size()) {
      for (Vertex v : r.paths[i]) os << ' ' << v;
    }
    os << '\n';
  }
}

std::pair<Pairing, Routing> read_routing(std::istream& is) {
  Pairing p;
  Routing r;
  std::string line;
  int line_no = 0;
  while (next_line(is, line, line_no)) {
    auto colon = line.find(':');
    if (colon == std::string::npos) fail(line_no, "missing ':'");
    auto head = parse_ints(line.substr(0, colon), line_no);
    auto tail = parse_ints(line.substr(colon + 1), line_no);
    if (head.size() != 2) fail(line_no, "expected '<u> <v>' before ':'");
    p.pairs.push_back({static_cast<Vertex>(head[0]), static_cast<Vertex>(head[1])});
    Path path;
    for (long long v : tail) path.push_back(static_cast<Vertex>(v));
    r.paths.push_back(std::move(path));
  }
  return {std::move(p), std::move(r)};
}

std::string blowup_to_json(const BlownUpPath& bp) {
  nlohmann::json blobs = nlohmann::json::array();
  for (const auto& blob : bp.blobs()) {
    nlohmann::json entry{{"kind", to_string(blob.kind())}, {"size", blob.size()}};
    if (blob.kind() == BlobKind::kExplicit) {
      nlohmann::json edges = nlohmann::json::array();
      for (auto [u, v] : blob.explicit_inner().edges()) edges.push_back({u, v});
      entry["edges"] = std::move(edges);
    }
    blobs.push_back(std::move(entry));
  }
  return nlohmann::json{{"blobs", std::move(blobs)}}.dump(2) + "\n";
}

BlownUpPath blowup_from_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("blow-up spec: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("blobs") || !doc["blobs"].is_array()) {
    throw ParseError("blow-up spec: expected an object with a 'blobs' array");
  }
  std::vector<BlobSpec> blobs;
  int index = 0;
  for (const auto& entry : doc["blobs"]) {
    ++index;
    const std::string where = "blow-up spec blob " + std::to_string(index) + ": ";
    if (!entry.is_object() || !entry.contains("kind") || !entry["kind"].is_string() ||
        !entry.contains("size") || !entry["size"].is_number_integer()) {
      throw ParseError(where + "needs string 'kind' and integer 'size'");
    }
    const std::string kind = entry["kind"].get<std::string>();
    const long long size = entry["size"].get<long long>();
    if (size < 1) throw ParseError(where + "size must be >= 1");
    const bool has_edges = entry.contains("edges");
    if (kind == "explicit") {
      if (!has_edges || !entry["edges"].is_array()) {
        throw ParseError(where + "explicit blob needs an 'edges' array");
      }
      Graph inner(static_cast<int>(size));
      for (const auto& e : entry["edges"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
            !e[1].is_number_integer()) {
          throw ParseError(where + "edges must be [u, v] integer pairs");
        }
        try {
          inner.add_edge(e[0].get<int>(), e[1].get<int>());
        } catch (const ParameterError& err) {
          throw ParseError(where + err.what());
        }
      }
      blobs.push_back(BlobSpec::explicit_graph(std::move(inner)));
    } else if (kind == "star" || kind == "empty") {
      if (has_edges) throw ParseError(where + "'edges' only allowed for explicit blobs");
      blobs.push_back(kind == "star" ? BlobSpec::star(static_cast<int>(size))
                                     : BlobSpec::empty(static_cast<int>(size)));
    } else {
      throw ParseError(where + "unknown kind '" + kind + "'");
    }
  }
  if (blobs.empty()) throw ParseError("blow-up spec: no blobs");
  return BlownUpPath(std::move(blobs));
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& path, const std::string& contents) {
  // Write to a sibling temp file and rename so readers never see partial output.
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw ParseError("cannot write " + path.string());
    out << contents;
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace pathpair::io
