// Copyright 2026 The gdma Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>

#include "json.hpp"

#include "gdma/conditions.hpp"
#include "gdma/constructions.hpp"
#include "gdma/graphs.hpp"
#include "gdma/labelling.hpp"
#include "gdma/search.hpp"

namespace gdma {

nlohmann::json to_json(const GroupSpec& spec);
nlohmann::json to_json(const Graph& g);
nlohmann::json to_json(const Labelling& f);
nlohmann::json to_json(const VerificationReport& r);
nlohmann::json to_json(const Claim& c);
nlohmann::json to_json(const ConstructionResult& r);
nlohmann::json to_json(const SearchOutcome& o);
nlohmann::json to_json(const Obstruction& o);

GroupSpec group_from_json(const nlohmann::json& j);
Graph graph_from_json(const nlohmann::json& j);
Labelling labelling_from_json(const nlohmann::json& j);

/// Reads a graph from a JSON file or a plain edge-list text file
/// (one "u v" pair per line). The format is sniffed from the content.
Graph load_graph(const std::string& path);

/// Parses builder expressions such as
///   cartesian(cycle(3), cycle(5))
///   circulant(8, 1, 7, 4)
///   cayley([2,2], [0,1], [1,0])
Graph parse_graph_expr(const std::string& expr);

/// Resolves --graph arguments: builder expression when it parses as one,
/// otherwise a file path.
Graph resolve_graph_arg(const std::string& arg);

/// Parses construction expressions, e.g.
///   cartesian_cyclic(cycle(3), cycle(5))
///   cartesian_mixed(I(hamming_magic(2,2)), J(cayley_identity([2,2],[0,1],[1,0],[1,1])))
///   complete_strong(2, complete(3))
ConstructionResult parse_construction_expr(const std::string& expr);

std::string format_element(const GroupElement& e);

}  // namespace gdma
