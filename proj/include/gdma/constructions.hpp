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
#include <string>
#include <vector>

#include "gdma/abelian.hpp"
#include "gdma/graphs.hpp"
#include "gdma/labelling.hpp"

// One operation per constructive sufficient condition. Every constructor
// re-verifies the labelling it built and checks its claim (and any exact
// weight identity of the underlying argument) before returning; a mismatch
// aborts with a counterexample rather than returning a bad certificate.
// Unsatisfied hypotheses raise HypothesisNotMet so callers can fall back to
// search.

namespace gdma {

struct Claim {
  bool antimagic = false;
  bool balanced = false;
  std::optional<GroupElement> magic;
};

struct ConstructionResult {
  Graph graph;
  Labelling labelling;
  Claim claim;
  VerificationReport report;
  std::string theorem_tag;
  // Display hint: when set, labels/weights print as a rows x cols grid.
  int grid_rows = 0;
  int grid_cols = 0;
};

/// x -> phi(x) on Cay(A, S). Antimagic when gcd(|A|, |S|) = 1; magic with
/// constant sum_{s in S} phi(s) when exp(A) | |S|.
ConstructionResult label_cayley_by_automorphism(const GroupSpec& a, const ConnectionSet& s,
                                                const GroupAutomorphism& phi);

/// The base-q digit evaluation of H(d, q) into Z_{q^d}; needs gcd(d, q) = 1.
/// Weights satisfy w(x) = (d(q-1) - q) f(x) + q(q^d - 1)/2 exactly.
ConstructionResult label_hamming_cyclic(int d, std::int64_t q);

/// Identity labelling of H(d, q) into Z_q^d; needs q | d. Magic constant is
/// (q/2, ..., q/2) for even q and 0 for odd q.
ConstructionResult label_hamming_elementary_magic(int d, std::int64_t q);

/// Tuple labelling of G_1 box ... box G_k over A_1 x ... x A_k. Needs all
/// factors regular with exp(A_i) | (r - r_i), and either all antimagic or
/// all magic claims. The componentwise weight identity
/// w(x)_i = w_{G_i}(x_i) + (r - r_i) g_i(x_i) is asserted at every vertex.
ConstructionResult combine_cartesian_product_group(const std::vector<ConstructionResult>& factors);

/// Mixed Cartesian combinator: magic factors I with gcd(r - r_i, n_i) = 1,
/// antimagic factors J with exp(A_j) | (r - r_j), balanced factors L with
/// gcd(r, n_l) = 1. Factors are ordered I, J, L in the product.
ConstructionResult combine_cartesian_mixed(const std::vector<ConstructionResult>& magic_factors,
                                           const std::vector<ConstructionResult>& antimagic_factors,
                                           const std::vector<ConstructionResult>& balanced_factors);

/// Antimagic labelling of Q_d over Z_2^d for d odd (automorphism route) or
/// d = 0 (mod 4) (folds a fixed 4x4 toroidal table through the Cartesian
/// combinator). d = 2 (mod 4) raises UnsupportedConstruction.
ConstructionResult label_hypercube_antimagic(int d);

/// 0..n-1 along the cycle: balanced for every n, antimagic iff n is odd.
ConstructionResult label_cycle_sequential(int n);

/// f(x_i) = i on K_n for odd n: balanced and antimagic.
ConstructionResult label_complete_balanced(int n);

/// f(x_{i,j}) = 2i + j on the prism D_n for n >= 4, 3 not dividing n;
/// weights 6i+1 / 6i+2 (mod 2n) are asserted.
ConstructionResult label_prism(int n);

/// Tuple labelling of the direct product of antimagic factors; needs
/// gcd(n_i, r/r_i) = 1 with r the product of the degrees. The identity
/// w(x)_i = (r/r_i) w_{G_i}(x_i) is asserted.
ConstructionResult combine_direct_product_group(const std::vector<ConstructionResult>& factors);

/// Mixed-radix labelling of a Cartesian product of balanced cyclic factors
/// into Z_{n_1...n_k}; needs r_i <= n_j for all pairs and gcd(r, n_1...n_k)
/// = 1. The antimagic conclusion is verified directly.
ConstructionResult combine_cartesian_cyclic(const std::vector<ConstructionResult>& factors);

enum class DirectCyclicMode { Antimagic, Magic };

/// Mixed-radix labelling of a direct product of cyclic factors; needs
/// gcd(n_i, r/r_i) = 1 with r the product of the degrees.
ConstructionResult combine_direct_cyclic(const std::vector<ConstructionResult>& factors,
                                         DirectCyclicMode mode);

enum class StrongCyclicMode { BalancedPair, MagicPair };

/// g_1(x_1) + g_2(x_2) n_1 on G_1 strong G_2 over Z_{n_1 n_2}; antimagic.
/// BalancedPair needs gcd(r_1 r_2 + r_1 + r_2, n_1 n_2) = 1; MagicPair needs
/// gcd(r_1, n_2) = gcd(r_2, n_1) = 1.
ConstructionResult combine_strong_cyclic(const ConstructionResult& a, const ConstructionResult& b,
                                         StrongCyclicMode mode);

/// g_1(x_1) + g_2(x_2) n_1 is balanced on G_1 strong G_2 when both inputs
/// are balanced over cyclic groups.
ConstructionResult balanced_strong_product(const ConstructionResult& a, const ConstructionResult& b);

/// An m x n array holding each of 1..mn once with constant row sums
/// n(mn+1)/2 and constant column sums m(mn+1)/2. Exists (and is built) for
/// m = n = 1 and for m, n both odd with min(m, n) >= 3 or m = n.
std::vector<std::vector<std::int64_t>> magic_rectangle(std::int64_t m, std::int64_t n);

/// K_n strong G for a regular graph G on m vertices with degree r >= 1:
/// case n even uses the paired complement labelling, case n, m odd places a
/// magic (n, m)-rectangle. Antimagic over Z_{nm}; w(x) + f(x) constant is
/// asserted.
ConstructionResult label_complete_strong_regular(int n, const Graph& g);

/// Circulant constructions: either the even-order parity labelling
/// (n even, n/2 in S, both 2(s-t)+1 and 2(t-s)+1 coprime to n) or the
/// identity labelling when gcd(|S|, n) = 1. Raises ObstructionError when n
/// and |S| are both even.
ConstructionResult label_circulant(std::int64_t n, const std::vector<std::int64_t>& s);

}  // namespace gdma
