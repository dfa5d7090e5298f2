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

#include "gdma/graphs.hpp"

#include <algorithm>
#include <set>

#include "gdma/errors.hpp"

namespace gdma {

std::int64_t Graph::edge_count() const {
  std::int64_t twice = 0;
  for (const auto& nb : adj) twice += static_cast<std::int64_t>(nb.size());
  return twice / 2;
}

Graph graph_from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  if (n < 0) throw ParameterError("negative vertex count");
  Graph g;
  g.n = n;
  g.adj.assign(n, {});
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw ParameterError("edge endpoint out of range: " + std::to_string(u) + " " + std::to_string(v));
    if (u == v) throw ParameterError("loop at vertex " + std::to_string(u));
    g.adj[u].push_back(v);
    g.adj[v].push_back(u);
  }
  for (auto& nb : g.adj) {
    std::sort(nb.begin(), nb.end());
    if (std::adjacent_find(nb.begin(), nb.end()) != nb.end())
      throw ParameterError("multi-edge in edge list");
  }
  return g;
}

ConnectionSet::ConnectionSet(GroupSpec spec_, std::vector<GroupElement> elements_)
    : spec(std::move(spec_)), elements(std::move(elements_)) {
  std::set<std::int64_t> seen;
  for (const auto& e : elements) {
    if (!contains(spec, e)) throw ParameterError("connection set element outside the group");
    std::int64_t idx = index_of(spec, e);
    if (idx == 0) throw ParameterError("connection set contains 0");
    if (!seen.insert(idx).second) throw ParameterError("duplicate connection set element");
  }
  for (const auto& e : elements) {
    if (!seen.count(index_of(spec, neg(spec, e))))
      throw ParameterError("connection set is not closed under negation (missing -(" + to_string(e) + "))");
  }
}

Graph cycle(int n) {
  if (n < 3) throw ParameterError("cycle needs n >= 3");
  Graph g;
  g.n = n;
  g.adj.assign(n, {});
  for (int i = 0; i < n; ++i) {
    g.adj[i].push_back((i + 1) % n);
    g.adj[i].push_back((i + n - 1) % n);
    std::sort(g.adj[i].begin(), g.adj[i].end());
    g.adj[i].erase(std::unique(g.adj[i].begin(), g.adj[i].end()), g.adj[i].end());
  }
  return g;
}

Graph complete(int n) {
  if (n < 1) throw ParameterError("complete graph needs n >= 1");
  Graph g;
  g.n = n;
  g.adj.assign(n, {});
  for (int i = 0; i < n; ++i) {
    g.adj[i].reserve(n - 1);
    for (int j = 0; j < n; ++j)
      if (j != i) g.adj[i].push_back(j);
  }
  return g;
}

Graph prism(int n) {
  if (n < 3) throw ParameterError("prism needs n >= 3");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) {
    int ni = (i + 1) % n;
    edges.emplace_back(2 * i, 2 * ni);          // outer rim
    edges.emplace_back(2 * i + 1, 2 * ni + 1);  // inner rim
    edges.emplace_back(2 * i, 2 * i + 1);       // rung
  }
  Graph g = graph_from_edges(2 * n, edges);
  g.tags.resize(2 * n);
  for (int i = 0; i < n; ++i) {
    g.tags[2 * i] = {i, 0};
    g.tags[2 * i + 1] = {i, 1};
  }
  return g;
}

Graph cayley(const GroupSpec& spec, const ConnectionSet& s) {
  if (!(s.spec == spec)) throw ParameterError("connection set belongs to a different group");
  const std::int64_t order = spec.order();
  Graph g;
  g.n = static_cast<int>(order);
  g.adj.assign(g.n, {});
  g.tags.resize(g.n);
  std::vector<std::int64_t> step_indices;
  step_indices.reserve(s.elements.size());
  for (const auto& e : s.elements) step_indices.push_back(index_of(spec, e));
  for (std::int64_t v = 0; v < order; ++v) {
    GroupElement x = element_at(spec, v);
    g.tags[v].assign(x.begin(), x.end());
    auto& nb = g.adj[v];
    nb.reserve(step_indices.size());
    for (const auto& e : s.elements) nb.push_back(static_cast<int>(index_of(spec, add(spec, x, e))));
    std::sort(nb.begin(), nb.end());
  }
  return g;
}

Graph circulant(std::int64_t n, const std::vector<std::int64_t>& s) {
  if (n < 2) throw ParameterError("circulant needs n >= 2");
  GroupSpec spec({n});
  std::vector<GroupElement> elems;
  for (auto v : s) {
    if (v < 1 || v > n - 1) throw ParameterError("circulant connection value out of {1,...,n-1}");
    elems.push_back(GroupElement{v});
  }
  return cayley(spec, ConnectionSet(spec, std::move(elems)));
}

Graph hamming_mixed(const std::vector<std::int64_t>& qs) {
  if (qs.empty()) throw ParameterError("hamming graph needs at least one factor");
  for (auto q : qs)
    if (q < 2) throw ParameterError("hamming factor size must be >= 2");
  GroupSpec spec(qs);
  Graph g;
  g.n = static_cast<int>(spec.order());
  g.adj.assign(g.n, {});
  g.tags.resize(g.n);
  for (std::int64_t v = 0; v < spec.order(); ++v) {
    GroupElement x = element_at(spec, v);
    g.tags[v].assign(x.begin(), x.end());
    auto& nb = g.adj[v];
    std::int64_t stride = 1;
    for (std::size_t i = 0; i < qs.size(); ++i) {
      for (std::int64_t t = 0; t < qs[i]; ++t) {
        if (t == x[i]) continue;
        nb.push_back(static_cast<int>(v + (t - x[i]) * stride));
      }
      stride *= qs[i];
    }
    std::sort(nb.begin(), nb.end());
  }
  return g;
}

Graph hamming(int d, std::int64_t q) {
  if (d < 1) throw ParameterError("hamming needs d >= 1");
  return hamming_mixed(std::vector<std::int64_t>(d, q));
}

Graph hypercube(int d) { return hamming(d, 2); }

namespace {

enum class ProductKind { Cartesian, Direct, Strong };

Graph product(const Graph& g, const Graph& h, ProductKind kind) {
  if (g.n == 0 || h.n == 0) throw ParameterError("product factors must be nonempty");
  Graph out;
  out.n = g.n * h.n;
  out.adj.assign(out.n, {});
  out.tags.resize(out.n);
  auto tag_of = [](const Graph& gr, int v) {
    if (!gr.tags.empty()) return gr.tags[v];
    return std::vector<std::int64_t>{v};
  };
  for (int x = 0; x < g.n; ++x) {
    for (int y = 0; y < h.n; ++y) {
      int v = x * h.n + y;
      auto& nb = out.adj[v];
      if (kind != ProductKind::Direct) {
        for (int y2 : h.adj[y]) nb.push_back(x * h.n + y2);
        for (int x2 : g.adj[x]) nb.push_back(x2 * h.n + y);
      }
      if (kind != ProductKind::Cartesian) {
        for (int x2 : g.adj[x])
          for (int y2 : h.adj[y]) nb.push_back(x2 * h.n + y2);
      }
      std::sort(nb.begin(), nb.end());
      auto tg = tag_of(g, x);
      auto th = tag_of(h, y);
      tg.insert(tg.end(), th.begin(), th.end());
      out.tags[v] = std::move(tg);
    }
  }
  return out;
}

}  // namespace

Graph cartesian(const Graph& g, const Graph& h) { return product(g, h, ProductKind::Cartesian); }
Graph direct(const Graph& g, const Graph& h) { return product(g, h, ProductKind::Direct); }
Graph strong(const Graph& g, const Graph& h) { return product(g, h, ProductKind::Strong); }

std::optional<int> is_regular(const Graph& g) {
  if (g.n == 0) return std::nullopt;
  int r = g.degree(0);
  for (int v = 1; v < g.n; ++v)
    if (g.degree(v) != r) return std::nullopt;
  return r;
}

}  // namespace gdma
