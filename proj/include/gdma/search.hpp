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

#include <cstdint>
#include <optional>
#include <vector>

#include "gdma/graphs.hpp"
#include "gdma/labelling.hpp"

// Exhaustive backtracking over bijections vertex -> group element. A vertex
// is closed once all its neighbours carry labels; closed weights are
// maintained incrementally and pruned:
//   antimagic  prune on any repeated closed weight
//   magic      prune on any closed weight differing from the first
//
// Symmetry reduction (all sound for the requested classifications):
//   fix_first_vertex  pins the first assigned vertex's label to 0; sound on
//                     regular graphs only (translations shift every weight
//                     by r*c) and is disabled automatically otherwise.
//   use_negation      keeps only the lexicographically smaller of {f, -f};
//                     applied at the first vertex whose label is not its
//                     own inverse.

namespace gdma {

enum class SearchMode { Magic, Antimagic };

enum class VertexOrderHeuristic {
  GreedyAdjacency,  // max adjacency to the prefix, closes vertices early
  Natural,
};

struct SearchConfig {
  SearchMode mode = SearchMode::Antimagic;
  std::int64_t budget = 50'000'000;  // node expansions
  bool fix_first_vertex = true;
  bool use_negation = true;
  VertexOrderHeuristic vertex_order = VertexOrderHeuristic::GreedyAdjacency;
};

enum class SearchStatus { Found, ExhaustedNone, BudgetExceeded };

struct SearchOutcome {
  SearchStatus status = SearchStatus::ExhaustedNone;
  std::optional<Labelling> witness;
  std::int64_t nodes_expanded = 0;
};

SearchOutcome search(const Graph& g, const GroupSpec& a, const SearchConfig& cfg);

/// All solutions up to the enabled symmetries, capped at `limit`.
std::vector<Labelling> enumerate_all(const Graph& g, const GroupSpec& a, SearchMode mode,
                                     std::size_t limit, const SearchConfig& base = SearchConfig{});

}  // namespace gdma
