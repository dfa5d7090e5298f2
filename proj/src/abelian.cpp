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

#include "gdma/abelian.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "gdma/errors.hpp"

namespace gdma {

namespace {

constexpr std::int64_t kMaxOrder = 1'000'000'000;

std::int64_t mod_reduce(std::int64_t v, std::int64_t n) {
  std::int64_t r = v % n;
  return r < 0 ? r + n : r;
}

void check_same_spec(const GroupSpec& spec, const GroupElement& a, const char* who) {
  if (a.size() != spec.rank()) {
    throw StructuralError(std::string(who) + ": element has " + std::to_string(a.size()) +
                          " residues, spec has " + std::to_string(spec.rank()) + " moduli");
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < 0 || a[i] >= spec.moduli()[i]) {
      throw StructuralError(std::string(who) + ": residue " + std::to_string(a[i]) +
                            " out of range for modulus " + std::to_string(spec.moduli()[i]));
    }
  }
}

}  // namespace

std::int64_t gcd64(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

std::int64_t lcm64(std::int64_t a, std::int64_t b) {
  if (a == 0 || b == 0) return 0;
  return a / std::gcd(a, b) * b;
}

GroupSpec::GroupSpec(std::vector<std::int64_t> moduli) : moduli_(std::move(moduli)) {
  if (moduli_.empty()) throw ParameterError("group spec needs at least one modulus");
  order_ = 1;
  for (auto n : moduli_) {
    if (n < 2) throw ParameterError("group modulus must be >= 2, got " + std::to_string(n));
    if (order_ > kMaxOrder / n) throw ParameterError("group order exceeds 10^9");
    order_ *= n;
  }
}

GroupSpec GroupSpec::parse(const std::string& text) {
  std::vector<std::int64_t> mods;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    try {
      mods.push_back(std::stoll(tok));
    } catch (const std::exception&) {
      throw ParameterError("cannot parse modulus '" + tok + "' in group spec '" + text + "'");
    }
  }
  if (mods.empty()) throw ParameterError("empty group spec '" + text + "'");
  return GroupSpec(std::move(mods));
}

std::int64_t GroupSpec::exponent() const {
  std::int64_t e = 1;
  for (auto n : moduli_) e = lcm64(e, n);
  return e;
}

std::string GroupSpec::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < moduli_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(moduli_[i]);
  }
  return out;
}

GroupElement zero(const GroupSpec& spec) { return GroupElement(spec.rank(), 0); }

bool contains(const GroupSpec& spec, const GroupElement& a) {
  if (a.size() != spec.rank()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] < 0 || a[i] >= spec.moduli()[i]) return false;
  return true;
}

GroupElement add(const GroupSpec& spec, const GroupElement& a, const GroupElement& b) {
  check_same_spec(spec, a, "add");
  check_same_spec(spec, b, "add");
  GroupElement out(spec.rank());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = a[i] + b[i];
    if (out[i] >= spec.moduli()[i]) out[i] -= spec.moduli()[i];
  }
  return out;
}

GroupElement neg(const GroupSpec& spec, const GroupElement& a) {
  check_same_spec(spec, a, "neg");
  GroupElement out(spec.rank());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a[i] == 0 ? 0 : spec.moduli()[i] - a[i];
  return out;
}

GroupElement scale(const GroupSpec& spec, std::int64_t m, const GroupElement& a) {
  check_same_spec(spec, a, "scale");
  GroupElement out(spec.rank());
  for (std::size_t i = 0; i < out.size(); ++i) {
    std::int64_t n = spec.moduli()[i];
    out[i] = mod_reduce(mod_reduce(m, n) * a[i], n);
  }
  return out;
}

std::int64_t element_order(const GroupSpec& spec, const GroupElement& a) {
  check_same_spec(spec, a, "element_order");
  std::int64_t m = 1;
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::int64_t n = spec.moduli()[i];
    m = lcm64(m, n / std::gcd(n, a[i]));
  }
  return m;
}

std::int64_t index_of(const GroupSpec& spec, const GroupElement& a) {
  check_same_spec(spec, a, "index_of");
  std::int64_t idx = 0;
  std::int64_t stride = 1;
  for (std::size_t i = 0; i < a.size(); ++i) {
    idx += a[i] * stride;
    stride *= spec.moduli()[i];
  }
  return idx;
}

GroupElement element_at(const GroupSpec& spec, std::int64_t index) {
  if (index < 0 || index >= spec.order()) {
    throw ParameterError("element index " + std::to_string(index) + " out of range for group of order " +
                         std::to_string(spec.order()));
  }
  GroupElement out(spec.rank());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = index % spec.moduli()[i];
    index /= spec.moduli()[i];
  }
  return out;
}

int involution_count_exponent(const GroupSpec& spec) {
  int t = 0;
  for (auto n : spec.moduli())
    if (n % 2 == 0) ++t;
  return t;
}

GroupElement sigma(const GroupSpec& spec) {
  if (involution_count_exponent(spec) != 1) return zero(spec);
  GroupElement out = zero(spec);
  for (std::size_t i = 0; i < spec.rank(); ++i)
    if (spec.moduli()[i] % 2 == 0) out[i] = spec.moduli()[i] / 2;
  return out;
}

std::vector<GroupElement> involutions(const GroupSpec& spec) {
  // Coordinatewise 2x = 0 means each residue is 0 or n_i/2 (even n_i only).
  std::vector<std::size_t> even_coords;
  for (std::size_t i = 0; i < spec.rank(); ++i)
    if (spec.moduli()[i] % 2 == 0) even_coords.push_back(i);
  std::vector<GroupElement> out;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << even_coords.size()); ++mask) {
    GroupElement e = zero(spec);
    for (std::size_t b = 0; b < even_coords.size(); ++b)
      if (mask & (std::uint64_t{1} << b)) e[even_coords[b]] = spec.moduli()[even_coords[b]] / 2;
    out.push_back(std::move(e));
  }
  std::sort(out.begin(), out.end(),
            [&](const GroupElement& x, const GroupElement& y) { return index_of(spec, x) < index_of(spec, y); });
  return out;
}

std::string to_string(const GroupElement& a) {
  std::string out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(a[i]);
  }
  return out;
}

GroupElement parse_element(const GroupSpec& spec, const std::string& text) {
  GroupElement e;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    try {
      e.push_back(std::stoll(tok));
    } catch (const std::exception&) {
      throw ParameterError("cannot parse residue '" + tok + "'");
    }
  }
  if (e.size() != spec.rank())
    throw StructuralError("element '" + text + "' has wrong number of residues for group " + spec.to_string());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = mod_reduce(e[i], spec.moduli()[i]);
  return e;
}

GroupAutomorphism GroupAutomorphism::identity(const GroupSpec& spec) {
  return units(spec, std::vector<std::int64_t>(spec.rank(), 1));
}

GroupAutomorphism GroupAutomorphism::units(const GroupSpec& spec, std::vector<std::int64_t> unit_per_coord) {
  if (unit_per_coord.size() != spec.rank())
    throw StructuralError("unit automorphism needs one unit per coordinate");
  for (std::size_t i = 0; i < unit_per_coord.size(); ++i) {
    unit_per_coord[i] = mod_reduce(unit_per_coord[i], spec.moduli()[i]);
    if (std::gcd(unit_per_coord[i], spec.moduli()[i]) != 1)
      throw StructuralError("unit " + std::to_string(unit_per_coord[i]) + " is not invertible mod " +
                            std::to_string(spec.moduli()[i]));
  }
  GroupAutomorphism a(spec, Kind::Units);
  a.units_ = std::move(unit_per_coord);
  return a;
}

namespace {

// Invertibility of an integer matrix mod q holds iff it holds mod every
// prime dividing q; each of those reduces to a nonzero determinant over F_p.
bool invertible_mod_prime(std::vector<std::vector<std::int64_t>> m, std::int64_t p) {
  const std::size_t k = m.size();
  for (auto& row : m)
    for (auto& v : row) v = ((v % p) + p) % p;
  for (std::size_t col = 0; col < k; ++col) {
    std::size_t pivot = col;
    while (pivot < k && m[pivot][col] == 0) ++pivot;
    if (pivot == k) return false;
    std::swap(m[pivot], m[col]);
    // Eliminate below using modular inverse of the pivot.
    std::int64_t inv = 1, base = m[col][col] % p, e = p - 2;
    // p is prime, Fermat inverse.
    std::int64_t acc = base;
    while (e > 0) {
      if (e & 1) inv = inv * acc % p;
      acc = acc * acc % p;
      e >>= 1;
    }
    for (std::size_t r = col + 1; r < k; ++r) {
      std::int64_t f = m[r][col] * inv % p;
      if (f == 0) continue;
      for (std::size_t c = col; c < k; ++c) m[r][c] = ((m[r][c] - f * m[col][c]) % p + p) % p;
    }
  }
  return true;
}

std::vector<std::int64_t> prime_factors(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

GroupAutomorphism GroupAutomorphism::matrix(const GroupSpec& spec, std::vector<std::vector<std::int64_t>> rows) {
  const std::size_t k = spec.rank();
  std::int64_t q = spec.moduli()[0];
  for (auto n : spec.moduli())
    if (n != q) throw StructuralError("matrix automorphisms require all moduli equal");
  if (rows.size() != k) throw StructuralError("automorphism matrix must be square of the group rank");
  for (auto& row : rows) {
    if (row.size() != k) throw StructuralError("automorphism matrix must be square of the group rank");
    for (auto& v : row) v = ((v % q) + q) % q;
  }
  for (auto p : prime_factors(q)) {
    if (!invertible_mod_prime(rows, p))
      throw StructuralError("automorphism matrix is singular mod " + std::to_string(p));
  }
  GroupAutomorphism a(spec, Kind::Matrix);
  a.rows_ = std::move(rows);
  return a;
}

GroupElement GroupAutomorphism::apply(const GroupElement& a) const {
  check_same_spec(spec_, a, "apply_automorphism");
  GroupElement out(spec_.rank(), 0);
  if (kind_ == Kind::Units) {
    for (std::size_t i = 0; i < out.size(); ++i)
      out[i] = mod_reduce(units_[i] * a[i], spec_.moduli()[i]);
  } else {
    std::int64_t q = spec_.moduli()[0];
    for (std::size_t i = 0; i < out.size(); ++i) {
      std::int64_t acc = 0;
      for (std::size_t j = 0; j < out.size(); ++j) acc += rows_[i][j] * a[j] % q;
      out[i] = mod_reduce(acc, q);
    }
  }
  return out;
}

}  // namespace gdma
