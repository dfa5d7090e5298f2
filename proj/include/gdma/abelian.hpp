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
#include <string>
#include <vector>

namespace gdma {

using Residue = std::int64_t;

/// An element of a direct product of cyclic groups, stored as one residue
/// per factor, each reduced into [0, n_i).
using GroupElement = std::vector<Residue>;

/// A finite Abelian group presented as Z_{n1} x ... x Z_{nk}.
///
/// The moduli list is kept exactly as supplied: Z_6 and Z_2 x Z_3 are
/// distinct specs even though the groups are isomorphic, because labellings
/// are stated against explicit factorizations. Order is capped at 10^9.
class GroupSpec {
 public:
  explicit GroupSpec(std::vector<std::int64_t> moduli);

  // Parses "n1,n2,..." (e.g. "2,2,2" for Z_2^3).
  static GroupSpec parse(const std::string& text);

  const std::vector<std::int64_t>& moduli() const { return moduli_; }
  std::size_t rank() const { return moduli_.size(); }
  std::int64_t order() const { return order_; }

  /// Least m >= 1 with m*x = 0 for all x; the lcm of the moduli.
  std::int64_t exponent() const;

  bool operator==(const GroupSpec& other) const { return moduli_ == other.moduli_; }

  std::string to_string() const;

 private:
  std::vector<std::int64_t> moduli_;
  std::int64_t order_;
};

GroupElement zero(const GroupSpec& spec);
bool contains(const GroupSpec& spec, const GroupElement& a);

GroupElement add(const GroupSpec& spec, const GroupElement& a, const GroupElement& b);
GroupElement neg(const GroupSpec& spec, const GroupElement& a);

/// m-fold sum of a, for any integer m (negative m uses the inverse).
GroupElement scale(const GroupSpec& spec, std::int64_t m, const GroupElement& a);

/// Least m >= 1 with scale(m, a) = 0.
std::int64_t element_order(const GroupSpec& spec, const GroupElement& a);

/// Mixed-radix position of a: a_1 + a_2*n_1 + a_3*n_1*n_2 + ...
std::int64_t index_of(const GroupSpec& spec, const GroupElement& a);
GroupElement element_at(const GroupSpec& spec, std::int64_t index);

/// Sum of all group elements: the unique involution when the group has
/// exactly one, and 0 otherwise.
GroupElement sigma(const GroupSpec& spec);

/// All x != 0 with 2x = 0. The count is 2^t - 1 where t is the number of
/// even moduli (each even modulus contributes exactly one cyclic factor of
/// even prime-power order in the canonical decomposition).
std::vector<GroupElement> involutions(const GroupSpec& spec);
int involution_count_exponent(const GroupSpec& spec);  // the t above

std::string to_string(const GroupElement& a);
GroupElement parse_element(const GroupSpec& spec, const std::string& text);

/// An automorphism of a direct product group, either multiplication by a
/// unit in each coordinate, or an invertible matrix over Z_q when all
/// moduli equal q. Validity (gcd / determinant witness) is checked on
/// construction.
class GroupAutomorphism {
 public:
  static GroupAutomorphism identity(const GroupSpec& spec);
  static GroupAutomorphism units(const GroupSpec& spec, std::vector<std::int64_t> unit_per_coord);
  static GroupAutomorphism matrix(const GroupSpec& spec, std::vector<std::vector<std::int64_t>> rows);

  const GroupSpec& spec() const { return spec_; }
  GroupElement apply(const GroupElement& a) const;

 private:
  enum class Kind { Units, Matrix };
  GroupAutomorphism(GroupSpec spec, Kind kind) : spec_(std::move(spec)), kind_(kind) {}

  GroupSpec spec_;
  Kind kind_;
  std::vector<std::int64_t> units_;
  std::vector<std::vector<std::int64_t>> rows_;
};

std::int64_t gcd64(std::int64_t a, std::int64_t b);
std::int64_t lcm64(std::int64_t a, std::int64_t b);

}  // namespace gdma
