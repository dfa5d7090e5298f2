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

#include "gdma/search.hpp"

#include <algorithm>
#include <limits>

#include "gdma/errors.hpp"

namespace gdma {

namespace {

std::vector<int> static_order(const Graph& g, VertexOrderHeuristic heuristic) {
  const int n = g.n;
  std::vector<int> order;
  if (heuristic == VertexOrderHeuristic::Natural) {
    order.resize(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    return order;
  }
  std::vector<int> adj_to_prefix(n, 0);
  std::vector<char> chosen(n, 0);
  order.reserve(n);
  for (int step = 0; step < n; ++step) {
    int best = -1;
    for (int v = 0; v < n; ++v) {
      if (chosen[v]) continue;
      if (best < 0 || adj_to_prefix[v] > adj_to_prefix[best] ||
          (adj_to_prefix[v] == adj_to_prefix[best] && g.degree(v) > g.degree(best)))
        best = v;
    }
    chosen[best] = 1;
    order.push_back(best);
    for (int u : g.adj[best]) adj_to_prefix[u]++;
  }
  return order;
}

struct Searcher {
  const Graph& g;
  const GroupSpec& spec;
  SearchConfig cfg;
  SearchMode mode;
  int n;

  std::vector<int> order;
  std::vector<GroupElement> elems;
  std::vector<std::int64_t> neg_index;  // element index -> index of its negation

  std::vector<std::int64_t> label;  // vertex -> element index, -1 unassigned
  std::vector<char> label_used;
  std::vector<GroupElement> partial;  // accumulated neighbour labels
  std::vector<int> open_neighbours;
  std::vector<char> weight_used;
  std::int64_t magic_idx = -1;

  std::int64_t nodes = 0;
  bool stop = false;
  bool budget_hit = false;

  std::size_t limit = 1;
  std::vector<Labelling>* sink = nullptr;

  Searcher(const Graph& g_, const GroupSpec& spec_, const SearchConfig& cfg_)
      : g(g_), spec(spec_), cfg(cfg_), mode(cfg_.mode), n(g_.n) {
    if (static_cast<std::int64_t>(n) != spec.order())
      throw StructuralError("search: graph order " + std::to_string(n) + " does not match group order " +
                            std::to_string(spec.order()));
    if (!is_regular(g)) cfg.fix_first_vertex = false;
    order = static_order(g, cfg.vertex_order);
    elems.reserve(n);
    for (int i = 0; i < n; ++i) elems.push_back(element_at(spec, i));
    neg_index.resize(n);
    for (int i = 0; i < n; ++i) neg_index[i] = index_of(spec, neg(spec, elems[i]));
    bool has_nontrivial_negation = false;
    for (int i = 0; i < n; ++i)
      if (neg_index[i] != i) has_nontrivial_negation = true;
    if (!has_nontrivial_negation) cfg.use_negation = false;

    label.assign(n, -1);
    label_used.assign(n, 0);
    partial.assign(n, zero(spec));
    open_neighbours.resize(n);
    for (int v = 0; v < n; ++v) open_neighbours[v] = g.degree(v);
    weight_used.assign(n, 0);
  }

  // Closes vertex u (all neighbours labelled); returns false on prune.
  bool close(int u, std::vector<std::pair<int, std::int64_t>>& closed_trail, bool& magic_set) {
    std::int64_t w = index_of(spec, partial[u]);
    if (mode == SearchMode::Antimagic) {
      if (weight_used[w]) return false;
      weight_used[w] = 1;
    } else {
      if (magic_idx < 0) {
        magic_idx = w;
        magic_set = true;
      } else if (w != magic_idx) {
        return false;
      }
    }
    closed_trail.emplace_back(u, w);
    return true;
  }

  void undo_close(const std::vector<std::pair<int, std::int64_t>>& closed_trail, bool magic_set) {
    if (mode == SearchMode::Antimagic) {
      for (auto [u, w] : closed_trail) weight_used[w] = 0;
    } else if (magic_set) {
      magic_idx = -1;
    }
  }

  bool assign(int v, std::int64_t e, std::vector<std::pair<int, std::int64_t>>& closed_trail,
              bool& magic_set) {
    label[v] = e;
    label_used[e] = 1;
    int touched = 0;
    bool ok = true;
    for (int u : g.adj[v]) {
      partial[u] = add(spec, partial[u], elems[e]);
      --open_neighbours[u];
      ++touched;
      if (open_neighbours[u] == 0 && !close(u, closed_trail, magic_set)) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
    int i = 0;
    for (int u : g.adj[v]) {
      if (i++ == touched) break;
      partial[u] = add(spec, partial[u], neg(spec, elems[e]));
      ++open_neighbours[u];
    }
    undo_close(closed_trail, magic_set);
    label[v] = -1;
    label_used[e] = 0;
    return false;
  }

  void unassign(int v, std::int64_t e, const std::vector<std::pair<int, std::int64_t>>& closed_trail,
                bool magic_set) {
    for (int u : g.adj[v]) {
      partial[u] = add(spec, partial[u], neg(spec, elems[e]));
      ++open_neighbours[u];
    }
    undo_close(closed_trail, magic_set);
    label[v] = -1;
    label_used[e] = 0;
  }

  void record() {
    Labelling f{spec, {}};
    f.values.reserve(n);
    for (int v = 0; v < n; ++v) f.values.push_back(elems[label[v]]);
    sink->push_back(std::move(f));
    if (sink->size() >= limit) stop = true;
  }

  // neg_cmp: 0 = f equal to -f so far, 1 = f already smaller (free)
  void dfs(int pos, int neg_cmp) {
    if (stop) return;
    if (pos == n) {
      record();
      return;
    }
    int v = order[pos];
    for (std::int64_t e = 0; e < n; ++e) {
      if (label_used[e]) continue;
      if (pos == 0 && cfg.fix_first_vertex && e != 0) break;
      int next_cmp = neg_cmp;
      if (cfg.use_negation && neg_cmp == 0) {
        std::int64_t ne = neg_index[e];
        if (ne < e) continue;  // the mirrored branch covers this one
        if (ne > e) next_cmp = 1;
      }
      if (++nodes > cfg.budget) {
        budget_hit = true;
        stop = true;
        return;
      }
      std::vector<std::pair<int, std::int64_t>> closed_trail;
      bool magic_set = false;
      if (assign(v, e, closed_trail, magic_set)) {
        dfs(pos + 1, next_cmp);
        unassign(v, e, closed_trail, magic_set);
        if (stop) return;
      }
    }
  }

  bool preclose_isolated() {
    std::vector<std::pair<int, std::int64_t>> closed_trail;
    bool magic_set = false;
    for (int v = 0; v < n; ++v) {
      if (open_neighbours[v] == 0 && !close(v, closed_trail, magic_set)) return false;
    }
    return true;
  }
};

}  // namespace

SearchOutcome search(const Graph& g, const GroupSpec& a, const SearchConfig& cfg) {
  Searcher s(g, a, cfg);
  std::vector<Labelling> found;
  s.sink = &found;
  s.limit = 1;
  SearchOutcome out;
  if (s.preclose_isolated()) s.dfs(0, 0);
  out.nodes_expanded = s.nodes;
  if (!found.empty()) {
    out.status = SearchStatus::Found;
    out.witness = std::move(found.front());
  } else if (s.budget_hit) {
    out.status = SearchStatus::BudgetExceeded;
  } else {
    out.status = SearchStatus::ExhaustedNone;
  }
  return out;
}

std::vector<Labelling> enumerate_all(const Graph& g, const GroupSpec& a, SearchMode mode,
                                     std::size_t limit, const SearchConfig& base) {
  SearchConfig cfg = base;
  cfg.mode = mode;
  Searcher s(g, a, cfg);
  std::vector<Labelling> found;
  s.sink = &found;
  s.limit = limit == 0 ? std::numeric_limits<std::size_t>::max() : limit;
  if (s.preclose_isolated()) s.dfs(0, 0);
  return found;
}

}  // namespace gdma
