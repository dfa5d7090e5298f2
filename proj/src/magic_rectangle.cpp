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

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

#include "gdma/conditions.hpp"
#include "gdma/constructions.hpp"
#include "gdma/errors.hpp"

// Odd x odd magic rectangles, built constructively and validated before
// returning. Internally everything is 0-based (values 0..mn-1, row sum
// target n(mn-1)/2, column sum target m(mn-1)/2); the public API shifts to
// 1..mn.
//
// Case split for a <= b (both odd):
//   a == b      classical uphill placement (odd magic square)
//   a | b       cyclic packs: columns grouped in packs of a cyclic shifts,
//               each pack drawing its low digits from one block of an
//               equal-sum partition of [0, b)
//   otherwise   complement structure around s = ab - 1: a 3-row core built
//               from column pairs {C, s - C} plus (a - 3)/2 row pairs that
//               are elementwise complements, with exact subset-sum choices
//               balancing every row.

namespace gdma {

namespace {

using Row = std::vector<std::int64_t>;
using Table = std::vector<Row>;

// ---------------------------------------------------------------------
// exact subset selection: k values from `pool` summing to `target`

template <typename Accept>
bool subset_dfs(const std::vector<std::int64_t>& sorted_desc, std::size_t pos, std::int64_t k,
                std::int64_t target, const std::vector<std::int64_t>& suffix_sum,
                std::vector<std::size_t>& chosen, long& nodes, Accept&& accept) {
  if (k == 0) return target == 0 && accept(chosen);
  if (pos >= sorted_desc.size() || --nodes < 0) return false;
  std::size_t remaining = sorted_desc.size() - pos;
  if (static_cast<std::int64_t>(remaining) < k) return false;
  // Max take: k largest from pos; min take: k smallest of the suffix.
  std::int64_t max_take = suffix_sum[pos] - suffix_sum[pos + k];
  std::int64_t min_take = suffix_sum[sorted_desc.size() - k] - suffix_sum[sorted_desc.size()];
  if (target > max_take || target < min_take) return false;
  chosen.push_back(pos);
  if (subset_dfs(sorted_desc, pos + 1, k - 1, target - sorted_desc[pos], suffix_sum, chosen, nodes,
                 accept))
    return true;
  chosen.pop_back();
  return subset_dfs(sorted_desc, pos + 1, k, target, suffix_sum, chosen, nodes, accept);
}

// Enumerates size-k subsets of `pool` with the given sum until `accept`
// returns true; accept receives the chosen values.
template <typename Accept>
bool for_each_subset(std::vector<std::int64_t> pool, std::int64_t k, std::int64_t target,
                     Accept&& accept) {
  if (k < 0 || k > static_cast<std::int64_t>(pool.size())) return false;
  std::sort(pool.begin(), pool.end(), std::greater<>());
  std::vector<std::int64_t> suffix(pool.size() + 1, 0);
  for (std::size_t i = pool.size(); i-- > 0;) suffix[i] = suffix[i + 1] + pool[i];
  std::vector<std::size_t> chosen;
  long nodes = 4'000'000;
  auto on_indices = [&](const std::vector<std::size_t>& idx) {
    std::vector<std::int64_t> values;
    values.reserve(idx.size());
    for (auto i : idx) values.push_back(pool[i]);
    return accept(values);
  };
  return subset_dfs(pool, 0, k, target, suffix, chosen, nodes, on_indices);
}

// Returns the first size-k subset with the given sum, or nullopt.
std::optional<std::vector<std::int64_t>> pick_subset(std::vector<std::int64_t> pool, std::int64_t k,
                                                     std::int64_t target) {
  std::optional<std::vector<std::int64_t>> out;
  for_each_subset(std::move(pool), k, target, [&](const std::vector<std::int64_t>& values) {
    out = values;
    return true;
  });
  return out;
}

// Perfect matching of `rest` into pairs with the prescribed sums (repeats
// allowed among sums). Backtracks; wants are processed largest first.
bool match_pairs(std::multiset<std::int64_t>& rest, const std::vector<std::int64_t>& wants,
                 std::size_t i, std::vector<std::pair<std::int64_t, std::int64_t>>& out, long& nodes) {
  if (i == wants.size()) return true;
  if (--nodes < 0) return false;
  const std::int64_t want = wants[i];
  std::vector<std::int64_t> candidates;
  for (auto it = rest.rbegin(); it != rest.rend(); ++it) {
    std::int64_t v = *it;
    std::int64_t partner = want - v;
    if (partner >= v) break;
    if (rest.count(partner)) candidates.push_back(v);
  }
  for (std::int64_t v : candidates) {
    std::int64_t partner = want - v;
    rest.erase(rest.find(v));
    rest.erase(rest.find(partner));
    out.emplace_back(v, partner);
    if (match_pairs(rest, wants, i + 1, out, nodes)) return true;
    out.pop_back();
    rest.insert(v);
    rest.insert(partner);
  }
  return false;
}

// ---------------------------------------------------------------------
// odd magic square, uphill placement

Table odd_square(std::int64_t a) {
  Table t(a, Row(a, -1));
  std::int64_t i = 0, j = (a - 1) / 2;
  for (std::int64_t k = 0; k < a * a; ++k) {
    t[i][j] = k;
    std::int64_t i2 = (i - 1 + a) % a, j2 = (j + 1) % a;
    if (t[i2][j2] >= 0) {
      i2 = (i + 1) % a;
      j2 = j;
    }
    i = i2;
    j = j2;
  }
  return t;
}

// ---------------------------------------------------------------------
// permutation tuples with constant pointwise sums (sizes odd), used by the
// pack construction: a perms of [0, w) whose pointwise sums are all
// a(w-1)/2.

std::vector<std::vector<std::int64_t>> balanced_perm_tuple(std::int64_t count, std::int64_t w) {
  std::vector<std::vector<std::int64_t>> perms;
  auto iota_perm = [&] {
    std::vector<std::int64_t> p(w);
    std::iota(p.begin(), p.end(), 0);
    return p;
  };
  auto reverse_perm = [&] {
    auto p = iota_perm();
    std::reverse(p.begin(), p.end());
    return p;
  };
  std::int64_t remaining = count;
  if (count % 2 == 1) {
    // triple (id, shift by h, exact complement), needs w odd
    std::int64_t h = (w - 1) / 2;
    std::vector<std::int64_t> p2(w), p3(w);
    for (std::int64_t t = 0; t < w; ++t) {
      p2[t] = (t + h) % w;
      p3[t] = 3 * h - t - p2[t];
    }
    perms.push_back(iota_perm());
    perms.push_back(std::move(p2));
    perms.push_back(std::move(p3));
    remaining -= 3;
  }
  for (std::int64_t i = 0; i < remaining / 2; ++i) {
    perms.push_back(iota_perm());
    perms.push_back(reverse_perm());
  }
  return perms;
}

// a | b, a < b, both odd
Table pack_rect(std::int64_t a, std::int64_t b) {
  const std::int64_t w = b / a;
  auto tau = balanced_perm_tuple(a, w);
  // pack t's low-digit set: W_t[q] = q*w + tau_q(t)
  std::vector<std::vector<std::int64_t>> packs(w, std::vector<std::int64_t>(a));
  for (std::int64_t t = 0; t < w; ++t)
    for (std::int64_t q = 0; q < a; ++q) packs[t][q] = q * w + tau[q][t];
  Table out(a, Row(b));
  for (std::int64_t t = 0; t < w; ++t) {
    for (std::int64_t u = 0; u < a; ++u) {
      for (std::int64_t i = 0; i < a; ++i) {
        std::int64_t p = (i + u) % a;
        out[i][t * a + u] = b * p + packs[t][(i + 2 * u) % a];
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------
// the 3-row core: three aligned rows over the value set
// pool ∪ {s/2} ∪ (s - pool), every column summing 3s/2, every row summing
// b*s/2, bijective onto that value set. pool has (3b-1)/2 values < s/2.

struct Core {
  Table rows;  // 3 x b
};

std::optional<Core> three_row_core(std::int64_t b, std::int64_t s, std::vector<std::int64_t> pool) {
  const std::int64_t pairs = (b - 1) / 2;
  const std::int64_t half = s / 2;
  std::sort(pool.begin(), pool.end());
  const std::int64_t pool_sum = std::accumulate(pool.begin(), pool.end(), std::int64_t{0});

  // triples (l1, l2, l3) from pool \ {a*} with l1 + l2 = half + l3; the
  // chosen a* joins the fixed-point column {a*, s/2, s - a*}.
  std::vector<std::int64_t> candidates = pool;
  // Prefer middle-of-pool candidates; the subset targets land interior.
  std::stable_sort(candidates.begin(), candidates.end(), [&](std::int64_t x, std::int64_t y) {
    std::int64_t mid = pool[pool.size() / 2];
    return std::llabs(x - mid) < std::llabs(y - mid);
  });

  // Inner stage: given the fixed-point pair value and a concrete triple
  // system, split triples across the three rows via the signed-difference
  // DP. Returns the assembled core on success.
  auto try_triples = [&](std::int64_t astar,
                         const std::vector<std::array<std::int64_t, 3>>& triples) -> std::optional<Core> {
    std::vector<std::array<std::int64_t, 3>> cols;  // {x, y, z-high} as values
    for (auto& tr : triples) cols.push_back({tr[0], tr[1], s - tr[2]});

    for (std::int64_t mid0 : {astar, s - astar}) {
      std::int64_t delta_target = half - mid0;
      // DP over signed differences, offset by max range
      std::int64_t range = 0;
      std::vector<std::array<std::int64_t, 6>> options(cols.size());
      for (std::size_t t = 0; t < cols.size(); ++t) {
        auto [x, y, zv] = cols[t];
        options[t] = {x - y, y - x, x - zv, zv - x, y - zv, zv - y};
        range += std::max({std::llabs(x - y), std::llabs(x - zv), std::llabs(y - zv)});
      }
      if (std::llabs(delta_target) > range) continue;
      std::int64_t width = 2 * range + 1;
      // choice[t][sum+range] = option index + 1, 0 if unreachable
      std::vector<std::vector<std::int8_t>> choice(cols.size() + 1,
                                                   std::vector<std::int8_t>(width, 0));
      std::vector<char> reach(width, 0), next(width, 0);
      reach[range] = 1;
      bool feasible = true;
      for (std::size_t t = 0; t < cols.size() && feasible; ++t) {
        std::fill(next.begin(), next.end(), 0);
        for (std::int64_t off = 0; off < width; ++off) {
          if (!reach[off]) continue;
          for (int o = 0; o < 6; ++o) {
            std::int64_t noff = off + options[t][o];
            if (noff < 0 || noff >= width || next[noff]) continue;
            next[noff] = 1;
            choice[t + 1][noff] = static_cast<std::int8_t>(o + 1);
          }
        }
        reach.swap(next);
      }
      std::int64_t goal = delta_target + range;
      if (goal < 0 || goal >= width || !reach[goal]) continue;

      // reconstruct
      std::vector<int> picks(cols.size());
      std::int64_t cur = goal;
      for (std::size_t t = cols.size(); t-- > 0;) {
        int o = choice[t + 1][cur] - 1;
        // The table stores one predecessor option; rewalk if stale.
        if (o < 0) break;
        picks[t] = o;
        cur -= options[t][o];
      }
      if (cur != range) {
        // Rare: the stored option chain does not line up; redo with a
        // full per-step table walk.
        std::vector<std::vector<char>> reach_all(cols.size() + 1, std::vector<char>(width, 0));
        reach_all[0][range] = 1;
        for (std::size_t t = 0; t < cols.size(); ++t)
          for (std::int64_t off = 0; off < width; ++off)
            if (reach_all[t][off])
              for (int o = 0; o < 6; ++o) {
                std::int64_t noff = off + options[t][o];
                if (noff >= 0 && noff < width) reach_all[t + 1][noff] = 1;
              }
        if (!reach_all[cols.size()][goal]) continue;
        cur = goal;
        for (std::size_t t = cols.size(); t-- > 0;) {
          for (int o = 0; o < 6; ++o) {
            std::int64_t prev = cur - options[t][o];
            if (prev >= 0 && prev < width && reach_all[t][prev]) {
              picks[t] = o;
              cur = prev;
              break;
            }
          }
        }
      }

      // assemble: columns [C_0..C_{P-1}, mid, C'_{P-1}..C'_0]
      Core core;
      core.rows.assign(3, Row(b, 0));
      for (std::size_t t = 0; t < cols.size(); ++t) {
        auto [x, y, zv] = cols[t];
        std::array<std::int64_t, 3> colv = {x, y, zv};
        int o = picks[t];
        std::int64_t p = 0, wv = 0;
        switch (o) {
          case 0: p = x, wv = y; break;
          case 1: p = y, wv = x; break;
          case 2: p = x, wv = zv; break;
          case 3: p = zv, wv = x; break;
          case 4: p = y, wv = zv; break;
          default: p = zv, wv = y; break;
        }
        std::int64_t third = colv[0] + colv[1] + colv[2] - p - wv;
        std::size_t cl = t;                    // left column
        std::size_t cr = b - 1 - t;            // mirrored column
        core.rows[0][cl] = p;
        core.rows[1][cl] = third;
        core.rows[2][cl] = wv;
        core.rows[0][cr] = s - wv;
        core.rows[1][cr] = s - third;
        core.rows[2][cr] = s - p;
      }
      std::size_t cm = pairs;  // middle column
      core.rows[0][cm] = mid0;
      core.rows[1][cm] = half;
      core.rows[2][cm] = s - mid0;
      return core;
    }
    return std::nullopt;
  };

  for (std::int64_t astar : candidates) {
    std::int64_t rem_sum = pool_sum - astar;
    std::int64_t twice_z = rem_sum - pairs * half;
    if (twice_z % 2 != 0) continue;
    std::int64_t z_target = twice_z / 2;
    std::vector<std::int64_t> rem;
    for (auto v : pool)
      if (v != astar) rem.push_back(v);

    std::optional<Core> found;
    int z_attempts = 0;
    for_each_subset(rem, pairs, z_target, [&](const std::vector<std::int64_t>& z_vals) {
      if (++z_attempts > 64) return true;  // give up on this fixed point
      std::multiset<std::int64_t> rest(rem.begin(), rem.end());
      for (auto z : z_vals) rest.erase(rest.find(z));
      std::vector<std::int64_t> zs = z_vals;
      std::sort(zs.begin(), zs.end(), std::greater<>());
      std::vector<std::int64_t> wants;
      wants.reserve(zs.size());
      for (auto z : zs) wants.push_back(half + z);
      std::vector<std::pair<std::int64_t, std::int64_t>> matched;
      long nodes = 200'000;
      if (!match_pairs(rest, wants, 0, matched, nodes)) return false;
      std::vector<std::array<std::int64_t, 3>> triples;
      for (std::size_t i = 0; i < zs.size(); ++i)
        triples.push_back({matched[i].first, matched[i].second, zs[i]});
      found = try_triples(astar, triples);
      return found.has_value();
    });
    if (found) return found;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------
// general odd case: (a-3)/2 complement row pairs around a 3-row core

std::optional<Table> strips_rect(std::int64_t a, std::int64_t b) {
  const std::int64_t s = a * b - 1;
  const std::int64_t half = s / 2;
  const std::int64_t t_strips = (a - 3) / 2;
  const std::int64_t core_size = (3 * b - 1) / 2;

  // Deal the pair lows [0, half) so chunks and the core all span the range:
  // each full round walks chunk 0..T-1, gives the core three, then walks
  // back. The final partial round tops every slot up to capacity.
  std::vector<std::vector<std::int64_t>> chunks(t_strips);
  std::vector<std::int64_t> core_pool;
  {
    std::int64_t v = 0;
    auto give_chunk = [&](std::int64_t t) {
      if (static_cast<std::int64_t>(chunks[t].size()) < b) chunks[t].push_back(v++);
    };
    auto give_core = [&] {
      if (static_cast<std::int64_t>(core_pool.size()) < core_size) core_pool.push_back(v++);
    };
    while (v < half) {
      for (std::int64_t t = 0; t < t_strips && v < half; ++t) give_chunk(t);
      for (int k = 0; k < 3 && v < half; ++k) give_core();
      for (std::int64_t t = t_strips; t-- > 0 && v < half;) give_chunk(t);
    }
  }

  // Row-balance parity: each chunk needs sum(chunk) + half even. Fix by
  // swapping one odd-difference pair with the next slot over.
  auto chunk_parity_bad = [&](const std::vector<std::int64_t>& c) {
    std::int64_t sum = std::accumulate(c.begin(), c.end(), std::int64_t{0});
    return (sum + half) % 2 != 0;
  };
  auto swap_odd_pair = [&](std::vector<std::int64_t>& x, std::vector<std::int64_t>& y) {
    for (auto& vx : x)
      for (auto& vy : y)
        if ((vx + vy) % 2 != 0) {
          std::swap(vx, vy);
          return true;
        }
    return false;
  };
  for (std::int64_t t = 0; t < t_strips; ++t) {
    if (!chunk_parity_bad(chunks[t])) continue;
    bool fixed = t + 1 < t_strips ? swap_odd_pair(chunks[t], chunks[t + 1])
                                  : swap_odd_pair(chunks[t], core_pool);
    if (!fixed) return std::nullopt;
  }

  // Core first (it is the fussier part); on failure, exchange same-parity
  // values with a chunk and retry a few times.
  std::optional<Core> core;
  for (int attempt = 0; attempt < 32 && !core; ++attempt) {
    core = three_row_core(b, s, core_pool);
    if (core) break;
    if (t_strips == 0) break;
    auto& donor = chunks[attempt % t_strips];
    bool swapped = false;
    for (std::size_t i = attempt / t_strips; i < donor.size() && !swapped; ++i)
      for (auto& cv : core_pool)
        if ((cv + donor[i]) % 2 == 0 && cv != donor[i]) {
          std::swap(cv, donor[i]);
          swapped = true;
          break;
        }
    if (!swapped) break;
  }
  if (!core) return std::nullopt;

  // Chunks: pick flip sets so the top row of each pair sums to b*s/2.
  Table out(a, Row(b, 0));
  for (std::int64_t t = 0; t < t_strips; ++t) {
    auto& chunk = chunks[t];
    std::int64_t chunk_sum = std::accumulate(chunk.begin(), chunk.end(), std::int64_t{0});
    std::optional<std::vector<std::int64_t>> flips;
    for (std::int64_t spread = 0; spread <= b && !flips; ++spread) {
      for (std::int64_t f : {(b + 1) / 2 + spread, (b + 1) / 2 - spread}) {
        if (f < 0 || f > b) continue;
        std::int64_t twice = chunk_sum + (2 * f - b) * half;
        if (twice % 2 != 0) continue;
        flips = pick_subset(chunk, f, twice / 2);
        if (flips) break;
      }
    }
    if (!flips) return std::nullopt;
    std::multiset<std::int64_t> flip_set(flips->begin(), flips->end());
    for (std::int64_t j = 0; j < b; ++j) {
      std::int64_t w = chunk[j];
      bool flip = false;
      auto it = flip_set.find(w);
      if (it != flip_set.end()) {
        flip = true;
        flip_set.erase(it);
      }
      std::int64_t top = flip ? s - w : w;
      out[t][j] = top;
      out[a - 1 - t][j] = s - top;
    }
  }
  for (int r = 0; r < 3; ++r) out[t_strips + r] = core->rows[r];
  return out;
}

Table build_rect(std::int64_t a, std::int64_t b) {
  if (a == 1 && b == 1) return {{0}};
  if (a == b) return odd_square(a);
  if (b % a == 0) return pack_rect(a, b);
  if (a == 3) {
    std::vector<std::int64_t> pool((3 * b - 1) / 2);
    std::iota(pool.begin(), pool.end(), 0);
    auto core = three_row_core(b, 3 * b - 1, pool);
    if (!core) throw VerificationMismatch("3x" + std::to_string(b) + " rectangle construction failed");
    return core->rows;
  }
  auto t = strips_rect(a, b);
  if (!t)
    throw VerificationMismatch("magic rectangle construction failed for " + std::to_string(a) + "x" +
                               std::to_string(b));
  return *t;
}

void validate(const Table& t, std::int64_t m, std::int64_t n) {
  std::vector<char> seen(m * n, 0);
  std::int64_t row_target = n * (m * n + 1) / 2;
  std::int64_t col_target = m * (m * n + 1) / 2;
  if (static_cast<std::int64_t>(t.size()) != m) throw VerificationMismatch("bad rectangle row count");
  for (const auto& row : t) {
    if (static_cast<std::int64_t>(row.size()) != n) throw VerificationMismatch("bad rectangle row width");
    std::int64_t sum = 0;
    for (auto v : row) {
      if (v < 1 || v > m * n || seen[v - 1]) throw VerificationMismatch("rectangle is not a bijection");
      seen[v - 1] = 1;
      sum += v;
    }
    if (sum != row_target) throw VerificationMismatch("rectangle row sum mismatch");
  }
  for (std::int64_t j = 0; j < n; ++j) {
    std::int64_t sum = 0;
    for (std::int64_t i = 0; i < m; ++i) sum += t[i][j];
    if (sum != col_target) throw VerificationMismatch("rectangle column sum mismatch");
  }
}

}  // namespace

std::vector<std::vector<std::int64_t>> magic_rectangle(std::int64_t m, std::int64_t n) {
  auto screen = screens::magic_rectangle(m, n);
  if (!screen.pass) throw HypothesisNotMet("magic rectangle " + std::to_string(m) + "x" +
                                           std::to_string(n) + ": " + screen.reason);
  Table t;
  if (m <= n) {
    t = build_rect(m, n);
  } else {
    Table tt = build_rect(n, m);
    t.assign(m, Row(n));
    for (std::int64_t i = 0; i < m; ++i)
      for (std::int64_t j = 0; j < n; ++j) t[i][j] = tt[j][i];
  }
  for (auto& row : t)
    for (auto& v : row) ++v;
  validate(t, m, n);
  return t;
}

}  // namespace gdma
