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

#include "gdma/conditions.hpp"

#include <numeric>

#include "gdma/errors.hpp"
#include "json.hpp"

namespace gdma {

std::optional<Obstruction> antimagic_obstruction(const Graph& g, const GroupSpec& a) {
  if (static_cast<std::int64_t>(g.n) != a.order())
    throw StructuralError("graph order " + std::to_string(g.n) + " does not match group order " +
                          std::to_string(a.order()));
  auto r = is_regular(g);
  if (!r || *r % 2 != 0 || *r == 0) return std::nullopt;
  if (involution_count_exponent(a) != 1) return std::nullopt;
  Obstruction obs;
  if (a.order() % 4 == 2) {
    obs.kind = "n-2-mod-4-even-degree";
    obs.citation = "even-regular-order-2-mod-4";
    obs.narrative = "order " + std::to_string(a.order()) +
                    " = 2 (mod 4) forces a unique involution in every Abelian group of that order, and the "
                    "degree " +
                    std::to_string(*r) + " is even: no distance antimagic labelling exists over any such group";
  } else {
    obs.kind = "unique-involution-even-degree";
    obs.citation = "even-regular-unique-involution";
    obs.narrative = "group " + a.to_string() + " has exactly one involution and the degree " +
                    std::to_string(*r) + " is even: the weight sum argument rules out antimagic labellings";
  }
  return obs;
}

namespace screens {

namespace {
ScreenResult ok() { return {true, ""}; }
ScreenResult fail(std::string reason) { return {false, std::move(reason)}; }
}  // namespace

ScreenResult cayley_antimagic(std::int64_t order, std::int64_t degree) {
  if (std::gcd(order, degree) != 1)
    return fail("gcd(|A|, |S|) = " + std::to_string(std::gcd(order, degree)) + " is not 1");
  return ok();
}

ScreenResult cayley_magic(std::int64_t exponent, std::int64_t degree) {
  if (degree % exponent != 0)
    return fail("exp(A) = " + std::to_string(exponent) + " does not divide |S| = " + std::to_string(degree));
  return ok();
}

ScreenResult hamming_cyclic(std::int64_t d, std::int64_t q) {
  if (d < 1 || q < 2) return fail("need d >= 1 and q >= 2");
  if (std::gcd(d, q) != 1) return fail("gcd(d, q) = " + std::to_string(std::gcd(d, q)) + " is not 1");
  return ok();
}

ScreenResult hamming_magic(std::int64_t d, std::int64_t q) {
  if (d < 2 || q < 2) return fail("need d >= 2 and q >= 2");
  if (d % q != 0) return fail("q = " + std::to_string(q) + " does not divide d = " + std::to_string(d));
  return ok();
}

ScreenResult cartesian_group(const std::vector<std::int64_t>& degrees,
                             const std::vector<std::int64_t>& exponents) {
  if (degrees.empty() || degrees.size() != exponents.size()) return fail("need matching factor lists");
  std::int64_t r = std::accumulate(degrees.begin(), degrees.end(), std::int64_t{0});
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    if ((r - degrees[i]) % exponents[i] != 0)
      return fail("factor " + std::to_string(i) + ": exp(A_i) = " + std::to_string(exponents[i]) +
                  " does not divide r - r_i = " + std::to_string(r - degrees[i]));
  }
  return ok();
}

ScreenResult cartesian_mixed(const std::vector<std::pair<std::int64_t, std::int64_t>>& magic_deg_order,
                             const std::vector<std::pair<std::int64_t, std::int64_t>>& anti_deg_exp,
                             const std::vector<std::pair<std::int64_t, std::int64_t>>& bal_deg_order) {
  if (magic_deg_order.empty() && anti_deg_exp.empty() && bal_deg_order.empty())
    throw ParameterError("mixed cartesian combinator needs at least one factor");
  std::int64_t r = 0;
  for (auto [d, x] : magic_deg_order) r += d;
  for (auto [d, x] : anti_deg_exp) r += d;
  for (auto [d, x] : bal_deg_order) r += d;
  std::size_t pos = 0;
  for (auto [d, n] : magic_deg_order) {
    if (std::gcd(r - d, n) != 1)
      return fail("magic factor " + std::to_string(pos) + ": gcd(r - r_i, n_i) = " +
                  std::to_string(std::gcd(r - d, n)) + " is not 1");
    ++pos;
  }
  pos = 0;
  for (auto [d, e] : anti_deg_exp) {
    if ((r - d) % e != 0)
      return fail("antimagic factor " + std::to_string(pos) + ": exp(A_j) = " + std::to_string(e) +
                  " does not divide r - r_j = " + std::to_string(r - d));
    ++pos;
  }
  pos = 0;
  for (auto [d, n] : bal_deg_order) {
    if (std::gcd(r, n) != 1)
      return fail("balanced factor " + std::to_string(pos) + ": gcd(r, n_l) = " +
                  std::to_string(std::gcd(r, n)) + " is not 1");
    ++pos;
  }
  return ok();
}

ScreenResult cartesian_cyclic(const std::vector<std::int64_t>& degrees,
                              const std::vector<std::int64_t>& orders) {
  if (degrees.empty() || degrees.size() != orders.size()) return fail("need matching factor lists");
  std::int64_t r = std::accumulate(degrees.begin(), degrees.end(), std::int64_t{0});
  for (auto ri : degrees)
    for (auto nj : orders)
      if (ri > nj)
        return fail("degree " + std::to_string(ri) + " exceeds factor order " + std::to_string(nj));
  for (auto n : orders) {
    std::int64_t gg = std::gcd(r, n);
    if (gg != 1)
      return fail("r = " + std::to_string(r) + " shares factor " + std::to_string(gg) +
                  " with the product of the orders");
  }
  return ok();
}

ScreenResult direct_cyclic(const std::vector<std::int64_t>& degrees,
                           const std::vector<std::int64_t>& orders) {
  if (degrees.empty() || degrees.size() != orders.size()) return fail("need matching factor lists");
  std::int64_t r = 1;
  for (auto d : degrees) {
    if (d < 1) return fail("every factor must have degree >= 1");
    r *= d;
  }
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    std::int64_t cof = r / degrees[i];
    if (std::gcd(orders[i], cof) != 1)
      return fail("factor " + std::to_string(i) + ": gcd(n_i, r/r_i) = " +
                  std::to_string(std::gcd(orders[i], cof)) + " is not 1");
  }
  return ok();
}

ScreenResult strong_cyclic_balanced(std::int64_t r1, std::int64_t r2, std::int64_t n1, std::int64_t n2) {
  std::int64_t c = r1 * r2 + r1 + r2;
  if (std::gcd(c, n1 * n2) != 1)
    return fail("gcd(r1*r2 + r1 + r2, n1*n2) = " + std::to_string(std::gcd(c, n1 * n2)) + " is not 1");
  return ok();
}

ScreenResult strong_cyclic_magic(std::int64_t r1, std::int64_t r2, std::int64_t n1, std::int64_t n2) {
  if (std::gcd(r1, n2) != 1) return fail("gcd(r1, n2) = " + std::to_string(std::gcd(r1, n2)) + " is not 1");
  if (std::gcd(r2, n1) != 1) return fail("gcd(r2, n1) = " + std::to_string(std::gcd(r2, n1)) + " is not 1");
  return ok();
}

ScreenResult prism(std::int64_t n) {
  if (n < 4) return fail("prism construction needs n >= 4");
  if (n % 3 == 0) return fail("n = " + std::to_string(n) + " is divisible by 3");
  return ok();
}

ScreenResult complete_balanced(std::int64_t n) {
  if (n < 1) return fail("need n >= 1");
  if (n % 2 == 0) return fail("complete graphs admit balanced labellings only for odd n");
  return ok();
}

ScreenResult hypercube_antimagic(std::int64_t d) {
  if (d < 1) return fail("need d >= 1");
  if (d % 2 == 1 || d % 4 == 0) return ok();
  return fail("d = 2 (mod 4) is not covered by any known construction");
}

ScreenResult circulant_even(std::int64_t n, const std::vector<std::int64_t>& s) {
  if (n % 2 != 0) return fail("n must be even");
  std::int64_t m = n / 2;
  bool has_half = false;
  std::int64_t evens = 0, odds = 0;
  for (auto v : s) {
    if (v == m) {
      has_half = true;
    } else if (v % 2 == 0) {
      ++evens;
    } else {
      ++odds;
    }
  }
  if (!has_half) return fail("n/2 must belong to S");
  if (evens % 2 != 0 || odds % 2 != 0) return fail("S \\ {n/2} must split into +/- pairs");
  std::int64_t se = evens / 2, so = odds / 2;
  std::int64_t c1 = 2 * (se - so) + 1, c2 = 2 * (so - se) + 1;
  auto norm = [&](std::int64_t v) { return ((v % n) + n) % n; };
  if (std::gcd(norm(c1), n) != 1)
    return fail("2(s-t)+1 = " + std::to_string(c1) + " shares a factor with n");
  if (std::gcd(norm(c2), n) != 1)
    return fail("2(t-s)+1 = " + std::to_string(c2) + " shares a factor with n");
  return ok();
}

ScreenResult complete_strong(std::int64_t n, std::int64_t m, std::int64_t r) {
  if (r < 1) return fail("the second factor must have degree >= 1");
  if (n < 2) return fail("need n >= 2");
  if (n % 2 == 0) return ok();
  if (m % 2 == 1) return ok();
  return fail("need n even, or n and m both odd");
}

ScreenResult magic_rectangle(std::int64_t m, std::int64_t n) {
  if (m < 1 || n < 1) return fail("need m, n >= 1");
  if (m % 2 == 0 || n % 2 == 0) return fail("both sides must be odd");
  if ((m == 1) != (n == 1)) return fail("1 x k rectangles are constant-forced and do not exist for k > 1");
  return ok();
}

}  // namespace screens

ScreenResult hypothesis_screen(const std::string& tag, const std::string& params_json) {
  nlohmann::json p;
  try {
    p = nlohmann::json::parse(params_json.empty() ? "{}" : params_json);
  } catch (const nlohmann::json::exception& e) {
    throw ParameterError(std::string("bad screen params: ") + e.what());
  }
  auto vec = [&](const char* key) {
    std::vector<std::int64_t> out;
    if (p.contains(key))
      for (const auto& v : p.at(key)) out.push_back(v.get<std::int64_t>());
    return out;
  };
  auto pairs = [&](const char* key) {
    std::vector<std::pair<std::int64_t, std::int64_t>> out;
    if (p.contains(key))
      for (const auto& v : p.at(key)) out.emplace_back(v.at(0).get<std::int64_t>(), v.at(1).get<std::int64_t>());
    return out;
  };
  auto num = [&](const char* key) { return p.at(key).get<std::int64_t>(); };

  if (tag == "cayley-antimagic") return screens::cayley_antimagic(num("order"), num("degree"));
  if (tag == "cayley-magic") return screens::cayley_magic(num("exponent"), num("degree"));
  if (tag == "hamming-cyclic") return screens::hamming_cyclic(num("d"), num("q"));
  if (tag == "hamming-magic") return screens::hamming_magic(num("d"), num("q"));
  if (tag == "cartesian-group") return screens::cartesian_group(vec("degrees"), vec("exponents"));
  if (tag == "cartesian-mixed")
    return screens::cartesian_mixed(pairs("magic"), pairs("antimagic"), pairs("balanced"));
  if (tag == "cartesian-cyclic") return screens::cartesian_cyclic(vec("degrees"), vec("orders"));
  if (tag == "direct-group" || tag == "direct-cyclic")
    return screens::direct_cyclic(vec("degrees"), vec("orders"));
  if (tag == "strong-cyclic-balanced")
    return screens::strong_cyclic_balanced(num("r1"), num("r2"), num("n1"), num("n2"));
  if (tag == "strong-cyclic-magic")
    return screens::strong_cyclic_magic(num("r1"), num("r2"), num("n1"), num("n2"));
  if (tag == "prism") return screens::prism(num("n"));
  if (tag == "complete-balanced") return screens::complete_balanced(num("n"));
  if (tag == "hypercube") return screens::hypercube_antimagic(num("d"));
  if (tag == "circulant-even") return screens::circulant_even(num("n"), vec("s"));
  if (tag == "circulant-coprime") return screens::cayley_antimagic(num("n"), num("degree"));
  if (tag == "complete-strong") return screens::complete_strong(num("n"), num("m"), num("r"));
  if (tag == "magic-rectangle") return screens::magic_rectangle(num("m"), num("n"));
  throw ParameterError("unknown hypothesis tag '" + tag + "'");
}

}  // namespace gdma
