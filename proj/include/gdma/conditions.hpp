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
#include <string>

#include "gdma/abelian.hpp"
#include "gdma/graphs.hpp"

// Deterministic screens for the sufficient conditions of every constructor,
// plus the proven non-existence obstructions. The screens are conservative:
// absence of an obstruction is not an existence proof.

namespace gdma {

struct Obstruction {
  std::string kind;       // unique-involution-even-degree | n-2-mod-4-even-degree
  std::string citation;   // rule id
  std::string narrative;  // one-line human explanation
};

/// Fires when G is r-regular with r even and A has exactly one involution.
/// When |A| = 2 (mod 4) the obstruction holds for every Abelian group of
/// that order and is reported under the stronger kind.
std::optional<Obstruction> antimagic_obstruction(const Graph& g, const GroupSpec& a);

struct ScreenResult {
  bool pass = false;
  std::string reason;  // set when pass is false
};

// Forward declaration; params are JSON to keep the CLI surface uniform.
// Known tags mirror the constructor names, e.g. "hamming-cyclic" with
// {"d":2,"q":3}. Unknown tags raise ParameterError.
ScreenResult hypothesis_screen(const std::string& tag, const std::string& params_json);

// Shared predicates used by both the screen and the constructors.
namespace screens {
ScreenResult cayley_antimagic(std::int64_t order, std::int64_t degree);
ScreenResult cayley_magic(std::int64_t exponent, std::int64_t degree);
ScreenResult hamming_cyclic(std::int64_t d, std::int64_t q);
ScreenResult hamming_magic(std::int64_t d, std::int64_t q);
ScreenResult cartesian_group(const std::vector<std::int64_t>& degrees,
                             const std::vector<std::int64_t>& exponents);
ScreenResult cartesian_mixed(const std::vector<std::pair<std::int64_t, std::int64_t>>& magic_deg_order,
                             const std::vector<std::pair<std::int64_t, std::int64_t>>& anti_deg_exp,
                             const std::vector<std::pair<std::int64_t, std::int64_t>>& bal_deg_order);
ScreenResult cartesian_cyclic(const std::vector<std::int64_t>& degrees,
                              const std::vector<std::int64_t>& orders);
ScreenResult direct_cyclic(const std::vector<std::int64_t>& degrees,
                           const std::vector<std::int64_t>& orders);
ScreenResult strong_cyclic_balanced(std::int64_t r1, std::int64_t r2, std::int64_t n1, std::int64_t n2);
ScreenResult strong_cyclic_magic(std::int64_t r1, std::int64_t r2, std::int64_t n1, std::int64_t n2);
ScreenResult prism(std::int64_t n);
ScreenResult complete_balanced(std::int64_t n);
ScreenResult hypercube_antimagic(std::int64_t d);
ScreenResult circulant_even(std::int64_t n, const std::vector<std::int64_t>& s);
ScreenResult complete_strong(std::int64_t n, std::int64_t m, std::int64_t r);
ScreenResult magic_rectangle(std::int64_t m, std::int64_t n);
}  // namespace screens

}  // namespace gdma
