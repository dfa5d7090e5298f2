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

#include <optional>
#include <utility>
#include <vector>

#include "gdma/abelian.hpp"
#include "gdma/graphs.hpp"

namespace gdma {

/// A vertex labelling: a bijection from the vertices of a graph onto the
/// elements of a group of the same order.
struct Labelling {
  GroupSpec spec{std::vector<std::int64_t>{2}};
  std::vector<GroupElement> values;  // indexed by vertex
};

/// Outcome of verifying a labelling. The weight of a vertex is the group
/// sum of the labels on its open neighbourhood.
///
///   magic      <=> all weights equal (the common value is the constant)
///   antimagic  <=> all weights pairwise distinct
///   balanced   <=> graph is r-regular and w(x) = r*f(x) everywhere
///                  (false, not an error, for non-regular graphs)
struct VerificationReport {
  std::vector<GroupElement> weights;
  std::optional<GroupElement> magic;
  bool antimagic = false;
  bool balanced = false;
  std::optional<std::pair<int, int>> duplicate_witness;  // two vertices of equal weight
};

/// Weight of a single vertex; the empty sum (isolated vertex) is 0.
GroupElement weight(const Graph& g, const Labelling& f, int v);

/// Throws StructuralError (naming a repeated element) if the labelling is
/// not a bijection onto the group.
void check_bijection(const Graph& g, const Labelling& f);

/// Computes the full weight table and classification. Always O(sum of
/// degrees); never early-exits, so the report doubles as a certificate.
VerificationReport verify(const Graph& g, const Labelling& f);

}  // namespace gdma
