// Copyright 2026 The polymeta Authors
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

#include <string>
#include <string_view>

#include "polymeta/graph.hpp"
#include "polymeta/group.hpp"
#include "polymeta/meta.hpp"
#include "polymeta/reductions.hpp"
#include "polymeta/structure.hpp"

namespace polymeta {

// Every parser throws ParseError whose where() is "source:line" (or just
// the source when the problem has no line, e.g. a semantic JSON error).

/// Whole file contents; throws ParseError when it cannot be read.
std::string read_file(const std::string& path);

/// {"domain": n, "relations": [{"name": s, "arity": r, "tuples": [[...]]}]}
RelationalStructure parse_structure(std::string_view text, std::string_view source = {});
std::string to_json(const RelationalStructure& s);

/// {"order": n, "mul": [[...], ...]}
GroupTable parse_group(std::string_view text, std::string_view source = {});
std::string to_json(const GroupTable& g);

/// "p edge n m" followed by m lines "e u v", endpoints 1-indexed. Lines
/// starting with 'c' are comments.
Graph parse_graph(std::string_view text, std::string_view source = {});
std::string to_dimacs(const Graph& g);

/// "nae n m" followed by m lines of three 1-indexed variables.
NaeInstance parse_nae(std::string_view text, std::string_view source = {});
std::string to_text(const NaeInstance& phi);

/// {"answer": "yes"|"no", "witness": {symbol: {"domain", "arity", "table"}},
///  "group": {"order", "mul"}, "promise_violation": bool}; witness and group
/// only when present.
std::string to_json(const MetaVerdict& v);
MetaVerdict parse_verdict(std::string_view text, std::string_view source = {});

/// {"matching": [[u, v], ...], "side": [...]} with 0-indexed vertices.
std::string to_json(const Decomposition& d);

}  // namespace polymeta
