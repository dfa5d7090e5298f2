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

#include "gdma/labelling.hpp"

#include <vector>

#include "gdma/errors.hpp"

namespace gdma {

GroupElement weight(const Graph& g, const Labelling& f, int v) {
  if (v < 0 || v >= g.n) throw ParameterError("vertex out of range");
  GroupElement w = zero(f.spec);
  for (int u : g.adj[v]) w = add(f.spec, w, f.values[u]);
  return w;
}

void check_bijection(const Graph& g, const Labelling& f) {
  if (static_cast<std::int64_t>(g.n) != f.spec.order())
    throw StructuralError("graph has " + std::to_string(g.n) + " vertices but group has order " +
                          std::to_string(f.spec.order()));
  if (static_cast<int>(f.values.size()) != g.n)
    throw StructuralError("labelling has " + std::to_string(f.values.size()) + " values for " +
                          std::to_string(g.n) + " vertices");
  std::vector<int> seen(g.n, -1);
  for (int v = 0; v < g.n; ++v) {
    if (!contains(f.spec, f.values[v]))
      throw StructuralError("label of vertex " + std::to_string(v) + " is outside the group");
    std::int64_t idx = index_of(f.spec, f.values[v]);
    if (seen[idx] >= 0)
      throw StructuralError("labelling repeats element (" + to_string(f.values[v]) + ") at vertices " +
                            std::to_string(seen[idx]) + " and " + std::to_string(v));
    seen[idx] = v;
  }
}

VerificationReport verify(const Graph& g, const Labelling& f) {
  check_bijection(g, f);
  VerificationReport report;
  report.weights.reserve(g.n);

  const std::size_t k = f.spec.rank();
  if (k == 1) {
    // Flat path for cyclic groups; this dominates the large complete-graph
    // verifications.
    const std::int64_t n = f.spec.moduli()[0];
    std::vector<std::int64_t> label(g.n);
    for (int v = 0; v < g.n; ++v) label[v] = f.values[v][0];
    for (int v = 0; v < g.n; ++v) {
      std::int64_t acc = 0;
      for (int u : g.adj[v]) acc += label[u];
      report.weights.push_back(GroupElement{acc % n});
    }
  } else {
    for (int v = 0; v < g.n; ++v) {
      GroupElement w = zero(f.spec);
      for (int u : g.adj[v]) {
        const GroupElement& lu = f.values[u];
        for (std::size_t i = 0; i < k; ++i) {
          w[i] += lu[i];
          if (w[i] >= f.spec.moduli()[i]) w[i] -= f.spec.moduli()[i];
        }
      }
      report.weights.push_back(std::move(w));
    }
  }

  bool all_equal = true;
  std::vector<int> weight_owner(f.spec.order(), -1);
  report.antimagic = true;
  for (int v = 0; v < g.n; ++v) {
    if (report.weights[v] != report.weights[0]) all_equal = false;
    std::int64_t idx = index_of(f.spec, report.weights[v]);
    if (weight_owner[idx] >= 0) {
      report.antimagic = false;
      if (!report.duplicate_witness) report.duplicate_witness = {weight_owner[idx], v};
    } else {
      weight_owner[idx] = v;
    }
  }
  if (all_equal && g.n > 0) report.magic = report.weights[0];

  if (auto r = is_regular(g)) {
    report.balanced = true;
    for (int v = 0; v < g.n; ++v) {
      if (report.weights[v] != scale(f.spec, *r, f.values[v])) {
        report.balanced = false;
        break;
      }
    }
  }
  return report;
}

}  // namespace gdma
