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

#include <filesystem>
#include <iosfwd>
#include <string>

#include "pathpair/blowup.hpp"
#include "pathpair/graph.hpp"
#include "pathpair/pairing.hpp"

namespace pathpair::io {

// `graph <n> <m>` followed by m lines `<u> <v>` with u < v.
void write_graph(std::ostream& os, const Graph& g);
// Throws ParseError on malformed input, self-loops, duplicate edges,
// out-of-range ids or an edge count that disagrees with the header.
Graph read_graph(std::istream& is);

// One `<u> <v>` line per pair.
void write_pairing(std::ostream& os, const Pairing& p);
Pairing read_pairing(std::istream& is);

// One `<u> <v> : <v_0> <v_1> ... <v_t>` line per pair.
void write_routing(std::ostream& os, const Pairing& p, const Routing& r);
// Reads both the pairing and its paths.
std::pair<Pairing, Routing> read_routing(std::istream& is);

// {"blobs": [{"kind": "star"|"empty"|"explicit", "size": N, "edges": [[u, v], ...]}]}
std::string blowup_to_json(const BlownUpPath& bp);
BlownUpPath blowup_from_json(const std::string& text);

// File helpers; throw ParseError when the file cannot be opened.
std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const std::string& contents);

}  // namespace pathpair::io
