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

#include "gdma/constructions.hpp"

#include <algorithm>
#include <numeric>

#include "gdma/conditions.hpp"
#include "gdma/errors.hpp"

namespace gdma {

namespace {

ConstructionResult finalize(ConstructionResult r) {
  r.report = verify(r.graph, r.labelling);
  if (r.claim.antimagic && !r.report.antimagic) {
    auto [u, v] = *r.report.duplicate_witness;
    throw VerificationMismatch(r.theorem_tag + ": claimed antimagic but vertices " + std::to_string(u) +
                               " and " + std::to_string(v) + " share weight (" +
                               to_string(r.report.weights[u]) + ")");
  }
  if (r.claim.balanced && !r.report.balanced)
    throw VerificationMismatch(r.theorem_tag + ": claimed balanced but the balance identity fails");
  if (r.claim.magic) {
    if (!r.report.magic)
      throw VerificationMismatch(r.theorem_tag + ": claimed magic but weights are not all equal");
    if (*r.report.magic != *r.claim.magic)
      throw VerificationMismatch(r.theorem_tag + ": magic constant (" + to_string(*r.report.magic) +
                                 ") differs from claimed (" + to_string(*r.claim.magic) + ")");
  }
  return r;
}

void require(const ScreenResult& s, const std::string& tag) {
  if (!s.pass) throw HypothesisNotMet(tag + ": " + s.reason);
}

int regular_degree(const ConstructionResult& r, const std::string& tag) {
  auto d = is_regular(r.graph);
  if (!d) throw HypothesisNotMet(tag + ": all factors must be regular");
  return *d;
}

std::vector<int> decompose(std::int64_t v, const std::vector<int>& sizes) {
  std::vector<int> xs(sizes.size());
  for (std::size_t i = sizes.size(); i-- > 0;) {
    xs[i] = static_cast<int>(v % sizes[i]);
    v /= sizes[i];
  }
  return xs;
}

GroupSpec concat_specs(const std::vector<ConstructionResult>& factors) {
  std::vector<std::int64_t> moduli;
  for (const auto& f : factors)
    moduli.insert(moduli.end(), f.labelling.spec.moduli().begin(), f.labelling.spec.moduli().end());
  return GroupSpec(std::move(moduli));
}

GroupElement concat_labels(const std::vector<ConstructionResult>& factors, const std::vector<int>& xs) {
  GroupElement out;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const auto& g = factors[i].labelling.values[xs[i]];
    out.insert(out.end(), g.begin(), g.end());
  }
  return out;
}

GroupElement slice(const GroupElement& w, std::size_t offset, std::size_t len) {
  return GroupElement(w.begin() + offset, w.begin() + offset + len);
}

}  // namespace

ConstructionResult label_cayley_by_automorphism(const GroupSpec& a, const ConnectionSet& s,
                                                const GroupAutomorphism& phi) {
  const std::int64_t n = a.order();
  const std::int64_t r = static_cast<std::int64_t>(s.size());
  const bool antimagic_ok = screens::cayley_antimagic(n, r).pass;
  const bool magic_ok = screens::cayley_magic(a.exponent(), r).pass;
  if (!antimagic_ok && !magic_ok)
    throw HypothesisNotMet("cayley-automorphism: gcd(|A|, |S|) = " + std::to_string(gcd64(n, r)) +
                           " is not 1, and exp(A) = " + std::to_string(a.exponent()) +
                           " does not divide |S| = " + std::to_string(r));
  ConstructionResult out;
  out.theorem_tag = "cayley-automorphism";
  out.graph = cayley(a, s);
  out.labelling.spec = a;
  out.labelling.values.reserve(n);
  for (std::int64_t v = 0; v < n; ++v) out.labelling.values.push_back(phi.apply(element_at(a, v)));
  out.claim.antimagic = antimagic_ok;
  if (magic_ok) {
    GroupElement c = zero(a);
    for (const auto& e : s.elements) c = add(a, c, phi.apply(e));
    out.claim.magic = c;
  }
  return finalize(std::move(out));
}

ConstructionResult label_hamming_cyclic(int d, std::int64_t q) {
  require(screens::hamming_cyclic(d, q), "hamming-cyclic");
  ConstructionResult out;
  out.theorem_tag = "hamming-cyclic";
  out.graph = hamming(d, q);
  std::int64_t order = 1;
  for (int i = 0; i < d; ++i) order *= q;
  out.labelling.spec = GroupSpec({order});
  out.labelling.values.reserve(order);
  // The digit evaluation sum x_i q^{i-1} is exactly the vertex index in the
  // mixed-radix vertex order of hamming().
  for (std::int64_t v = 0; v < order; ++v) out.labelling.values.push_back(GroupElement{v});
  out.claim.antimagic = true;
  if (d >= 2) {
    out.grid_rows = static_cast<int>(order / q);
    out.grid_cols = static_cast<int>(q);
  }
  out = finalize(std::move(out));
  // w(x) = (d(q-1) - q) f(x) + q(q^d - 1)/2  in Z_{q^d}; q(q^d - 1) is
  // always even (q even, or q^d - 1 even).
  const std::int64_t coeff = (static_cast<std::int64_t>(d) * (q - 1) - q) % order;
  const std::int64_t affine = order % 2 == 1 ? q % order * ((order - 1) / 2 % order) % order
                                             : (q / 2) % order * ((order - 1) % order) % order;
  for (std::int64_t v = 0; v < order; ++v) {
    std::int64_t expect = ((coeff * v % order + affine) % order + order) % order;
    if (out.report.weights[v][0] != expect)
      throw VerificationMismatch("hamming-cyclic: weight identity fails at vertex " + std::to_string(v));
  }
  return out;
}

ConstructionResult label_hamming_elementary_magic(int d, std::int64_t q) {
  require(screens::hamming_magic(d, q), "hamming-magic");
  ConstructionResult out;
  out.theorem_tag = "hamming-magic";
  out.graph = hamming(d, q);
  out.labelling.spec = GroupSpec(std::vector<std::int64_t>(d, q));
  const std::int64_t order = out.labelling.spec.order();
  out.labelling.values.reserve(order);
  for (std::int64_t v = 0; v < order; ++v) out.labelling.values.push_back(element_at(out.labelling.spec, v));
  const std::int64_t c = (q * (q - 1) / 2) % q;  // q/2 for even q, 0 for odd
  out.claim.magic = GroupElement(d, c);
  return finalize(std::move(out));
}

namespace {

ConstructionResult combine_cartesian(const std::vector<ConstructionResult>& factors,
                                     const std::string& tag, bool want_magic) {
  std::vector<std::int64_t> degrees, exponents;
  std::vector<int> sizes;
  for (const auto& f : factors) {
    degrees.push_back(regular_degree(f, tag));
    exponents.push_back(f.labelling.spec.exponent());
    sizes.push_back(f.graph.n);
  }
  require(screens::cartesian_group(degrees, exponents), tag);
  const std::int64_t r = std::accumulate(degrees.begin(), degrees.end(), std::int64_t{0});

  ConstructionResult out;
  out.theorem_tag = tag;
  out.graph = factors[0].graph;
  for (std::size_t i = 1; i < factors.size(); ++i) out.graph = cartesian(out.graph, factors[i].graph);
  out.labelling.spec = concat_specs(factors);
  out.labelling.values.reserve(out.graph.n);
  for (std::int64_t v = 0; v < out.graph.n; ++v)
    out.labelling.values.push_back(concat_labels(factors, decompose(v, sizes)));
  if (want_magic) {
    GroupElement c;
    for (const auto& f : factors) c.insert(c.end(), f.claim.magic->begin(), f.claim.magic->end());
    out.claim.magic = std::move(c);
  } else {
    out.claim.antimagic = true;
  }
  if (factors.size() == 2) {
    out.grid_rows = factors[0].graph.n;
    out.grid_cols = factors[1].graph.n;
  }
  out = finalize(std::move(out));

  // The componentwise weight identity holds unconditionally; assert it.
  std::vector<std::size_t> offsets(factors.size());
  std::size_t off = 0;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    offsets[i] = off;
    off += factors[i].labelling.spec.rank();
  }
  for (std::int64_t v = 0; v < out.graph.n; ++v) {
    auto xs = decompose(v, sizes);
    for (std::size_t i = 0; i < factors.size(); ++i) {
      const auto& ai = factors[i].labelling.spec;
      GroupElement expect = add(ai, factors[i].report.weights[xs[i]],
                                scale(ai, r - degrees[i], factors[i].labelling.values[xs[i]]));
      if (slice(out.report.weights[v], offsets[i], ai.rank()) != expect)
        throw VerificationMismatch(tag + ": componentwise weight identity fails at vertex " +
                                   std::to_string(v) + ", factor " + std::to_string(i));
    }
  }
  return out;
}

}  // namespace

ConstructionResult combine_cartesian_product_group(const std::vector<ConstructionResult>& factors) {
  if (factors.empty()) throw ParameterError("cartesian-group: no factors");
  bool all_anti = std::all_of(factors.begin(), factors.end(),
                              [](const ConstructionResult& f) { return f.claim.antimagic; });
  bool all_magic = std::all_of(factors.begin(), factors.end(),
                               [](const ConstructionResult& f) { return f.claim.magic.has_value(); });
  if (!all_anti && !all_magic)
    throw HypothesisNotMet(
        "cartesian-group: factors must be all antimagic or all magic (use cartesian-mixed otherwise)");
  return combine_cartesian(factors, "cartesian-group", !all_anti);
}

ConstructionResult combine_cartesian_mixed(const std::vector<ConstructionResult>& magic_factors,
                                           const std::vector<ConstructionResult>& antimagic_factors,
                                           const std::vector<ConstructionResult>& balanced_factors) {
  const std::string tag = "cartesian-mixed";
  std::vector<std::pair<std::int64_t, std::int64_t>> mg, an, bl;
  for (const auto& f : magic_factors) {
    if (!f.claim.magic) throw HypothesisNotMet(tag + ": a factor passed as magic has no magic claim");
    mg.emplace_back(regular_degree(f, tag), f.labelling.spec.order());
  }
  for (const auto& f : antimagic_factors) {
    if (!f.claim.antimagic) throw HypothesisNotMet(tag + ": a factor passed as antimagic is not");
    an.emplace_back(regular_degree(f, tag), f.labelling.spec.exponent());
  }
  for (const auto& f : balanced_factors) {
    if (!f.claim.balanced) throw HypothesisNotMet(tag + ": a factor passed as balanced is not");
    bl.emplace_back(regular_degree(f, tag), f.labelling.spec.order());
  }
  require(screens::cartesian_mixed(mg, an, bl), tag);

  std::vector<ConstructionResult> factors;
  factors.insert(factors.end(), magic_factors.begin(), magic_factors.end());
  factors.insert(factors.end(), antimagic_factors.begin(), antimagic_factors.end());
  factors.insert(factors.end(), balanced_factors.begin(), balanced_factors.end());

  std::vector<int> sizes;
  for (const auto& f : factors) sizes.push_back(f.graph.n);

  ConstructionResult out;
  out.theorem_tag = tag;
  out.graph = factors[0].graph;
  for (std::size_t i = 1; i < factors.size(); ++i) out.graph = cartesian(out.graph, factors[i].graph);
  out.labelling.spec = concat_specs(factors);
  out.labelling.values.reserve(out.graph.n);
  for (std::int64_t v = 0; v < out.graph.n; ++v)
    out.labelling.values.push_back(concat_labels(factors, decompose(v, sizes)));
  out.claim.antimagic = true;
  if (factors.size() == 2) {
    out.grid_rows = factors[0].graph.n;
    out.grid_cols = factors[1].graph.n;
  }
  return finalize(std::move(out));
}

namespace {

const GroupElement kQ4Table[16] = {
    {0, 0, 0, 0}, {0, 1, 0, 0}, {1, 1, 1, 1}, {1, 1, 0, 0},
    {0, 0, 0, 1}, {1, 0, 1, 1}, {1, 1, 1, 0}, {0, 1, 0, 1},
    {0, 0, 1, 1}, {1, 0, 1, 0}, {1, 0, 0, 1}, {0, 1, 1, 0},
    {0, 0, 1, 0}, {0, 1, 1, 1}, {1, 0, 0, 0}, {1, 1, 0, 1},
};

ConstructionResult q4_base() {
  ConstructionResult out;
  out.theorem_tag = "hypercube";
  out.graph = cartesian(cycle(4), cycle(4));
  out.labelling.spec = GroupSpec({2, 2, 2, 2});
  out.labelling.values.assign(kQ4Table, kQ4Table + 16);
  out.claim.antimagic = true;
  out.grid_rows = 4;
  out.grid_cols = 4;
  return finalize(std::move(out));
}

}  // namespace

ConstructionResult label_hypercube_antimagic(int d) {
  if (d < 1) throw ParameterError("hypercube dimension must be >= 1");
  auto screen = screens::hypercube_antimagic(d);
  if (!screen.pass) throw UnsupportedConstruction("hypercube: " + screen.reason);
  if (d % 2 == 1) {
    GroupSpec a(std::vector<std::int64_t>(d, 2));
    std::vector<GroupElement> units;
    for (int i = 0; i < d; ++i) {
      GroupElement e = zero(a);
      e[i] = 1;
      units.push_back(std::move(e));
    }
    auto out = label_cayley_by_automorphism(a, ConnectionSet(a, std::move(units)),
                                            GroupAutomorphism::identity(a));
    out.theorem_tag = "hypercube";
    return out;
  }
  ConstructionResult out = q4_base();
  if (d == 4) return out;
  std::vector<ConstructionResult> copies(d / 4, out);
  out = combine_cartesian_product_group(copies);
  out.theorem_tag = "hypercube";
  return out;
}

ConstructionResult label_cycle_sequential(int n) {
  ConstructionResult out;
  out.theorem_tag = "cycle-sequential";
  out.graph = cycle(n);
  out.labelling.spec = GroupSpec({n});
  for (int i = 0; i < n; ++i) out.labelling.values.push_back(GroupElement{i});
  out.claim.balanced = true;
  out.claim.antimagic = n % 2 == 1;
  return finalize(std::move(out));
}

ConstructionResult label_complete_balanced(int n) {
  require(screens::complete_balanced(n), "complete-balanced");
  ConstructionResult out;
  out.theorem_tag = "complete-balanced";
  out.graph = complete(n);
  out.labelling.spec = GroupSpec({n});
  for (int i = 0; i < n; ++i) out.labelling.values.push_back(GroupElement{i});
  out.claim.balanced = true;
  out.claim.antimagic = true;
  out = finalize(std::move(out));
  for (int i = 0; i < n; ++i) {
    std::int64_t expect = (n - i) % n;  // -i mod n
    if (out.report.weights[i][0] != expect)
      throw VerificationMismatch("complete-balanced: weight identity fails at vertex " + std::to_string(i));
  }
  return out;
}

ConstructionResult label_prism(int n) {
  require(screens::prism(n), "prism");
  ConstructionResult out;
  out.theorem_tag = "prism";
  out.graph = prism(n);
  out.labelling.spec = GroupSpec({2 * n});
  for (int v = 0; v < 2 * n; ++v) out.labelling.values.push_back(GroupElement{v});
  out.claim.antimagic = true;
  out.grid_rows = n;
  out.grid_cols = 2;
  out = finalize(std::move(out));
  for (int i = 0; i < n; ++i) {
    std::int64_t outer = (6LL * i + 1) % (2 * n);
    std::int64_t inner = (6LL * i + 2) % (2 * n);
    if (out.report.weights[2 * i][0] != outer || out.report.weights[2 * i + 1][0] != inner)
      throw VerificationMismatch("prism: weight formula fails at ring position " + std::to_string(i));
  }
  return out;
}

ConstructionResult combine_direct_product_group(const std::vector<ConstructionResult>& factors) {
  const std::string tag = "direct-group";
  if (factors.empty()) throw ParameterError(tag + ": no factors");
  std::vector<std::int64_t> degrees, orders;
  std::vector<int> sizes;
  for (const auto& f : factors) {
    if (!f.claim.antimagic) throw HypothesisNotMet(tag + ": every factor must be antimagic");
    degrees.push_back(regular_degree(f, tag));
    orders.push_back(f.labelling.spec.order());
    sizes.push_back(f.graph.n);
  }
  require(screens::direct_cyclic(degrees, orders), tag);
  const std::int64_t r = std::accumulate(degrees.begin(), degrees.end(), std::int64_t{1},
                                         std::multiplies<>());

  ConstructionResult out;
  out.theorem_tag = tag;
  out.graph = factors[0].graph;
  for (std::size_t i = 1; i < factors.size(); ++i) out.graph = direct(out.graph, factors[i].graph);
  out.labelling.spec = concat_specs(factors);
  for (std::int64_t v = 0; v < out.graph.n; ++v)
    out.labelling.values.push_back(concat_labels(factors, decompose(v, sizes)));
  out.claim.antimagic = true;
  if (factors.size() == 2) {
    out.grid_rows = factors[0].graph.n;
    out.grid_cols = factors[1].graph.n;
  }
  out = finalize(std::move(out));

  std::vector<std::size_t> offsets(factors.size());
  std::size_t off = 0;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    offsets[i] = off;
    off += factors[i].labelling.spec.rank();
  }
  for (std::int64_t v = 0; v < out.graph.n; ++v) {
    auto xs = decompose(v, sizes);
    for (std::size_t i = 0; i < factors.size(); ++i) {
      const auto& ai = factors[i].labelling.spec;
      GroupElement expect = scale(ai, r / degrees[i], factors[i].report.weights[xs[i]]);
      if (slice(out.report.weights[v], offsets[i], ai.rank()) != expect)
        throw VerificationMismatch(tag + ": weight identity fails at vertex " + std::to_string(v));
    }
  }
  return out;
}

namespace {

// Shared by the cyclic Cartesian/direct combinators: mixed-radix labelling
// g_1(x_1) + g_2(x_2) n_1 + ... into Z_{n_1 ... n_k}.
Labelling mixed_radix_labelling(const std::vector<ConstructionResult>& factors, const Graph& g,
                                const std::vector<int>& sizes, const std::string& tag) {
  for (const auto& f : factors)
    if (f.labelling.spec.rank() != 1)
      throw HypothesisNotMet(tag + ": factors must be labelled over cyclic groups");
  std::int64_t total = 1;
  for (const auto& f : factors) total *= f.labelling.spec.order();
  Labelling out{GroupSpec({total}), {}};
  out.values.reserve(g.n);
  for (std::int64_t v = 0; v < g.n; ++v) {
    auto xs = decompose(v, sizes);
    std::int64_t val = 0, stride = 1;
    for (std::size_t i = 0; i < factors.size(); ++i) {
      val += factors[i].labelling.values[xs[i]][0] * stride;
      stride *= factors[i].labelling.spec.order();
    }
    out.values.push_back(GroupElement{val});
  }
  return out;
}

}  // namespace

ConstructionResult combine_cartesian_cyclic(const std::vector<ConstructionResult>& factors) {
  const std::string tag = "cartesian-cyclic";
  if (factors.empty()) throw ParameterError(tag + ": no factors");
  std::vector<std::int64_t> degrees, orders;
  std::vector<int> sizes;
  for (const auto& f : factors) {
    if (!f.claim.balanced) throw HypothesisNotMet(tag + ": every factor must carry a balanced labelling");
    degrees.push_back(regular_degree(f, tag));
    orders.push_back(f.labelling.spec.order());
    sizes.push_back(f.graph.n);
  }
  require(screens::cartesian_cyclic(degrees, orders), tag);

  ConstructionResult out;
  out.theorem_tag = tag;
  out.graph = factors[0].graph;
  for (std::size_t i = 1; i < factors.size(); ++i) out.graph = cartesian(out.graph, factors[i].graph);
  out.labelling = mixed_radix_labelling(factors, out.graph, sizes, tag);
  out.claim.antimagic = true;
  if (factors.size() == 2) {
    out.grid_rows = factors[0].graph.n;
    out.grid_cols = factors[1].graph.n;
  }
  return finalize(std::move(out));
}

ConstructionResult combine_direct_cyclic(const std::vector<ConstructionResult>& factors,
                                         DirectCyclicMode mode) {
  const std::string tag = "direct-cyclic";
  if (factors.empty()) throw ParameterError(tag + ": no factors");
  std::vector<std::int64_t> degrees, orders;
  std::vector<int> sizes;
  for (const auto& f : factors) {
    if (mode == DirectCyclicMode::Antimagic && !f.claim.antimagic)
      throw HypothesisNotMet(tag + ": every factor must be antimagic in antimagic mode");
    if (mode == DirectCyclicMode::Magic && !f.claim.magic)
      throw HypothesisNotMet(tag + ": every factor must be magic in magic mode");
    degrees.push_back(regular_degree(f, tag));
    orders.push_back(f.labelling.spec.order());
    sizes.push_back(f.graph.n);
  }
  const std::int64_t r = std::accumulate(degrees.begin(), degrees.end(), std::int64_t{1},
                                         std::multiplies<>());
  const std::int64_t total = std::accumulate(orders.begin(), orders.end(), std::int64_t{1},
                                             std::multiplies<>());
  if (mode == DirectCyclicMode::Antimagic && r % 2 == 0 && total % 2 == 0)
    throw ObstructionError("unique-involution-even-degree", "even-regular-unique-involution",
                           "the direct product is " + std::to_string(r) +
                               "-regular on a cyclic group of even order " + std::to_string(total) +
                               ": no antimagic labelling exists");
  require(screens::direct_cyclic(degrees, orders), tag);

  ConstructionResult out;
  out.theorem_tag = tag;
  out.graph = factors[0].graph;
  for (std::size_t i = 1; i < factors.size(); ++i) out.graph = direct(out.graph, factors[i].graph);
  out.labelling = mixed_radix_labelling(factors, out.graph, sizes, tag);
  if (mode == DirectCyclicMode::Antimagic) {
    out.claim.antimagic = true;
  } else {
    std::int64_t c = 0, stride = 1;
    for (std::size_t i = 0; i < factors.size(); ++i) {
      std::int64_t mu = (*factors[i].claim.magic)[0];
      c += (r / degrees[i]) % orders[i] * (mu % orders[i]) % orders[i] * stride;
      stride *= orders[i];
    }
    out.claim.magic = GroupElement{c % total};
  }
  if (factors.size() == 2) {
    out.grid_rows = factors[0].graph.n;
    out.grid_cols = factors[1].graph.n;
  }
  return finalize(std::move(out));
}

ConstructionResult combine_strong_cyclic(const ConstructionResult& a, const ConstructionResult& b,
                                         StrongCyclicMode mode) {
  const std::string tag = "strong-cyclic";
  std::int64_t r1 = regular_degree(a, tag), r2 = regular_degree(b, tag);
  std::int64_t n1 = a.labelling.spec.order(), n2 = b.labelling.spec.order();
  if (mode == StrongCyclicMode::BalancedPair) {
    if (!a.claim.balanced || !b.claim.balanced)
      throw HypothesisNotMet(tag + ": balanced-pair mode needs two balanced factors");
    require(screens::strong_cyclic_balanced(r1, r2, n1, n2), tag);
  } else {
    if (!a.claim.magic || !b.claim.magic)
      throw HypothesisNotMet(tag + ": magic-pair mode needs two magic factors");
    require(screens::strong_cyclic_magic(r1, r2, n1, n2), tag);
  }
  std::vector<ConstructionResult> factors{a, b};
  std::vector<int> sizes{a.graph.n, b.graph.n};
  ConstructionResult out;
  out.theorem_tag = tag;
  out.graph = strong(a.graph, b.graph);
  out.labelling = mixed_radix_labelling(factors, out.graph, sizes, tag);
  out.claim.antimagic = true;
  out.grid_rows = a.graph.n;
  out.grid_cols = b.graph.n;
  return finalize(std::move(out));
}

ConstructionResult balanced_strong_product(const ConstructionResult& a, const ConstructionResult& b) {
  const std::string tag = "balanced-strong";
  if (!a.claim.balanced || !b.claim.balanced)
    throw HypothesisNotMet(tag + ": both factors must carry balanced labellings");
  regular_degree(a, tag);
  regular_degree(b, tag);
  std::vector<ConstructionResult> factors{a, b};
  std::vector<int> sizes{a.graph.n, b.graph.n};
  ConstructionResult out;
  out.theorem_tag = tag;
  out.graph = strong(a.graph, b.graph);
  out.labelling = mixed_radix_labelling(factors, out.graph, sizes, tag);
  out.claim.balanced = true;
  out.grid_rows = a.graph.n;
  out.grid_cols = b.graph.n;
  return finalize(std::move(out));
}

ConstructionResult label_complete_strong_regular(int n, const Graph& g) {
  const std::string tag = "complete-strong";
  auto rr = is_regular(g);
  if (!rr) throw HypothesisNotMet(tag + ": the second factor must be regular");
  const int r = *rr;
  const int m = g.n;
  require(screens::complete_strong(n, m, r), tag);
  const std::int64_t total = static_cast<std::int64_t>(n) * m;

  ConstructionResult out;
  out.theorem_tag = tag;
  out.graph = strong(complete(n), g);
  out.labelling.spec = GroupSpec({total});
  out.labelling.values.assign(total, GroupElement{0});
  if (n % 2 == 0) {
    // paired complements down each K_n fibre
    for (int j = 0; j < n; ++j) {
      for (int i = 0; i < m; ++i) {
        std::int64_t f;
        if (j % 2 == 0) {
          f = static_cast<std::int64_t>(i) * (n / 2) + j / 2;
        } else {
          std::int64_t prev = static_cast<std::int64_t>(i) * (n / 2) + (j - 1) / 2;
          f = total - 1 - prev;
        }
        out.labelling.values[static_cast<std::int64_t>(j) * m + i] = GroupElement{f};
      }
    }
  } else {
    auto rect = magic_rectangle(n, m);
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < m; ++i)
        out.labelling.values[static_cast<std::int64_t>(j) * m + i] = GroupElement{rect[j][i] % total};
  }
  out.claim.antimagic = true;
  out.grid_rows = n;
  out.grid_cols = m;
  out = finalize(std::move(out));

  // w(x) + f(x) is one fixed group element: (r+1) times the common column
  // sum of the fibre labels.
  std::int64_t expect = (out.report.weights[0][0] + out.labelling.values[0][0]) % total;
  for (std::int64_t v = 1; v < total; ++v) {
    if ((out.report.weights[v][0] + out.labelling.values[v][0]) % total != expect)
      throw VerificationMismatch(tag + ": w + f is not constant at vertex " + std::to_string(v));
  }
  return out;
}

ConstructionResult label_circulant(std::int64_t n, const std::vector<std::int64_t>& s) {
  const std::string tag = "circulant";
  Graph g = circulant(n, s);  // validates S
  const std::int64_t degree = static_cast<std::int64_t>(s.size());
  if (n % 2 == 0 && degree % 2 == 0) {
    throw ObstructionError("unique-involution-even-degree", "even-regular-unique-involution",
                           "circulant on Z_" + std::to_string(n) + " with even degree " +
                               std::to_string(degree) + ": no antimagic labelling exists");
  }
  if (n % 2 == 0 && screens::circulant_even(n, s).pass) {
    const std::int64_t m = n / 2;
    std::int64_t evens = 0, odds = 0;
    for (auto v : s) {
      if (v == m) continue;
      (v % 2 == 0 ? evens : odds)++;
    }
    const std::int64_t se = evens / 2, so = odds / 2;
    ConstructionResult out;
    out.theorem_tag = tag;
    out.graph = std::move(g);
    out.labelling.spec = GroupSpec({n});
    for (std::int64_t k = 0; k < n; ++k)
      out.labelling.values.push_back(GroupElement{k % 2 == 1 ? k : (n - k) % n});
    out.claim.antimagic = true;
    out = finalize(std::move(out));
    auto norm = [&](std::int64_t v) { return ((v % n) + n) % n; };
    for (std::int64_t k = 0; k < n; ++k) {
      std::int64_t w;
      if (k % 2 == 0) {
        w = m % 2 == 0 ? (2 * (so - se) - 1) * k - m : (2 * (so - se) + 1) * k + m;
      } else {
        w = m % 2 == 0 ? (2 * (se - so) + 1) * k + m : (2 * (se - so) - 1) * k - m;
      }
      if (out.report.weights[k][0] != norm(w))
        throw VerificationMismatch(tag + ": parity weight formula fails at vertex " + std::to_string(k));
    }
    return out;
  }
  if (screens::cayley_antimagic(n, degree).pass) {
    GroupSpec spec({n});
    std::vector<GroupElement> elems;
    for (auto v : s) elems.push_back(GroupElement{v});
    auto out = label_cayley_by_automorphism(spec, ConnectionSet(spec, std::move(elems)),
                                            GroupAutomorphism::identity(spec));
    out.theorem_tag = tag;
    return out;
  }
  throw HypothesisNotMet(tag + ": neither the even-order parity construction nor the coprime-degree "
                               "construction applies");
}

}  // namespace gdma
