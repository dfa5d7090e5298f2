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

#include "gdma/abelian.hpp"

namespace gdma {

/// Finite simple undirected graph with 0-based vertex indices and sorted
/// neighbour lists. vertex_tags optionally keep structured coordinates
/// (group residues, product tuples) for traceability; they carry no
/// semantics beyond display.
struct Graph {
  int n = 0;
  std::vector<std::vector<int>> adj;
  std::vector<std::vector<std::int64_t>> tags;  // empty or size n

  int degree(int v) const { return static_cast<int>(adj[v].size()); }
  std::int64_t edge_count() const;
  bool operator==(const Graph& other) const { return n == other.n && adj == other.adj; }
};

/// Builds a graph from an edge set; validates simplicity and sorts
/// neighbour lists.
Graph graph_from_edges(int n, const std::vector<std::pair<int, int>>& edges);

/// A Cayley connection set: 0 not in S and S = -S.
struct ConnectionSet {
  GroupSpec spec;
  std::vector<GroupElement> elements;

  ConnectionSet(GroupSpec spec_, std::vector<GroupElement> elements_);
  std::size_t size() const { return elements.size(); }
};

Graph cycle(int n);     // n >= 3
Graph complete(int n);  // n >= 1
Graph prism(int n);     // n >= 3; vertex (i,j) at index 2i+j, rim edges plus rungs

Graph cayley(const GroupSpec& spec, const ConnectionSet& s);
Graph circulant(std::int64_t n, const std::vector<std::int64_t>& s);

Graph hamming(int d, std::int64_t q);                       // q^d vertices, d(q-1)-regular
Graph hamming_mixed(const std::vector<std::int64_t>& qs);   // K_{q1} box ... box K_{qd}
Graph hypercube(int d);                                     // hamming(d, 2)

Graph cartesian(const Graph& g, const Graph& h);
Graph direct(const Graph& g, const Graph& h);
Graph strong(const Graph& g, const Graph& h);

std::optional<int> is_regular(const Graph& g);

}  // namespace gdma
