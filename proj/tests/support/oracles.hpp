// Copyright 2026 The qcjkls Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Test-only reference implementations. They avoid the library's fast paths
// on purpose: no inverse tables, no parallel chunks, no affine solver.

#pragma once

#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "qcjkls/braid.hpp"
#include "qcjkls/cocycle.hpp"
#include "qcjkls/quandle.hpp"

namespace qcjkls::oracle {

/// x with x * b == a, found by search.
inline Element solve_right(const QuandleTable& q, Element a, Element b) {
  for (Element x = 0; x < q.size(); ++x)
    if (q.op(x, b) == a) return x;
  return static_cast<Element>(q.size());
}

/// Walks every top tuple and keeps the ones that return to themselves.
/// Returns per-group-element counts of phi-weights (exponents read off as
/// group element indices; the group must be cyclic with index = exponent).
struct StateSum {
  std::vector<std::uint64_t> coeffs;
  std::uint64_t colorings = 0;
};

inline StateSum state_sum(const BraidWord& w, const Cocycle& phi) {
  const QuandleTable& q = phi.quandle();
  const std::size_t order = phi.group().order();
  const std::uint32_t s = w.strands();
  StateSum out{std::vector<std::uint64_t>(order, 0), 0};
  std::vector<Element> top(s, 0);
  while (true) {
    std::vector<Element> cur = top;
    std::int64_t exponent = 0;  // cyclic group: t^k has index k
    for (const auto& l : w.letters()) {
      const std::size_t i = l.index - 1;
      const Element x = cur[i], y = cur[i + 1];
      if (l.sign == Sign::kPositive) {
        // Left strand goes under; it meets the over-arc y and becomes x * y.
        exponent += phi(x, y);
        cur[i] = y;
        cur[i + 1] = q.op(x, y);
      } else {
        // Right strand goes under; its color before the crossing is u with
        // u * x = y.
        const Element u = solve_right(q, y, x);
        exponent -= phi(u, x);
        cur[i] = u;
        cur[i + 1] = x;
      }
    }
    if (cur == top) {
      ++out.coeffs[static_cast<std::size_t>(((exponent % static_cast<std::int64_t>(order)) + order) % order)];
      ++out.colorings;
    }
    std::size_t k = s;
    while (k > 0 && ++top[k - 1] == q.size()) top[--k] = 0;
    if (k == 0) break;
  }
  return out;
}

/// Nugatory crossings from the two checkerboard (Tait) graphs. Faces of the
/// closure live in columns 0..s (column c lies between positions c and
/// c+1); even and odd columns get opposite colors. Crossing sigma_k
/// touches faces left and right of it (columns k-1, k+1) and above and below
/// it (column k). In each color's graph it contributes the edge between its
/// two faces of that color. It is nugatory iff that edge is a bridge or a
/// loop. Valid for connected shadows, i.e. every generator occurs.
inline std::vector<std::size_t> tait_nugatory(const BraidWord& w) {
  const std::uint32_t s = w.strands();
  const auto& L = w.letters();
  std::vector<std::size_t> count(s + 1, 0);
  for (const auto& l : L) ++count[l.index];
  // Face of column c at time t (before letter t): crossings of index c seen so far.
  auto face = [&](std::uint32_t c, std::size_t t) -> std::pair<std::uint32_t, std::size_t> {
    if (c == 0 || c == s || count[c] == 0) return {c, 0};
    std::size_t seen = 0;
    for (std::size_t u = 0; u < t; ++u) seen += L[u].index == c;
    return {c, seen % count[c]};
  };
  using Face = std::pair<std::uint32_t, std::size_t>;
  struct Edge {
    Face a, b;
  };
  std::vector<Edge> even, odd;
  for (std::size_t t = 0; t < L.size(); ++t) {
    const std::uint32_t k = L[t].index;
    const Edge sides{face(k - 1, t), face(k + 1, t)};
    const Edge ends{face(k, t), face(k, t + 1)};
    (k % 2 == 1 ? even : odd).push_back(sides);
    (k % 2 == 1 ? odd : even).push_back(ends);
  }
  auto is_bridge_or_loop = [](const std::vector<Edge>& edges, std::size_t e) {
    if (edges[e].a == edges[e].b) return true;
    std::map<Face, std::vector<Face>> adj;
    for (std::size_t j = 0; j < edges.size(); ++j)
      if (j != e) {
        adj[edges[j].a].push_back(edges[j].b);
        adj[edges[j].b].push_back(edges[j].a);
      }
    std::set<Face> seen{edges[e].a};
    std::vector<Face> stack{edges[e].a};
    while (!stack.empty()) {
      const Face f = stack.back();
      stack.pop_back();
      for (const auto& g : adj[f])
        if (seen.insert(g).second) stack.push_back(g);
    }
    return !seen.count(edges[e].b);
  };
  std::vector<std::size_t> out;
  for (std::size_t t = 0; t < L.size(); ++t)
    if (is_bridge_or_loop(even, t) || is_bridge_or_loop(odd, t)) out.push_back(t);
  return out;
}

/// A connected braid closure diagram is alternating iff each generator keeps
/// one sign and neighbouring generators have opposite signs.
inline bool sign_pattern_alternating(const BraidWord& w) {
  std::map<std::uint32_t, Sign> sign;
  for (const auto& l : w.letters()) {
    const auto [it, fresh] = sign.emplace(l.index, l.sign);
    if (!fresh && it->second != l.sign) return false;
  }
  for (const auto& [k, sg] : sign) {
    const auto next = sign.find(k + 1);
    if (next != sign.end() && next->second == sg) return false;
  }
  return true;
}

inline bool uses_every_generator(const BraidWord& w) {
  std::set<std::uint32_t> seen;
  for (const auto& l : w.letters()) seen.insert(l.index);
  return seen.size() + 1 == w.strands();
}

inline BraidWord random_braid(std::mt19937& rng, std::uint32_t max_strands, std::size_t max_length,
                              std::uint32_t min_strands = 2) {
  std::uniform_int_distribution<std::uint32_t> strands_dist(min_strands, max_strands);
  const std::uint32_t s = strands_dist(rng);
  std::uniform_int_distribution<std::size_t> len_dist(1, max_length);
  std::uniform_int_distribution<std::uint32_t> index_dist(1, s - 1);
  std::bernoulli_distribution positive(0.5);
  std::vector<Letter> letters(len_dist(rng));
  for (auto& l : letters) l = Letter{index_dist(rng), positive(rng) ? Sign::kPositive : Sign::kNegative};
  return BraidWord(s, std::move(letters));
}

/// Random T-invertible spec over Z_n with ring size n^deg <= max_size.
inline AlexanderQuandleSpec random_alexander_spec(std::mt19937& rng, std::size_t max_size) {
  static const std::vector<std::uint32_t> moduli{2, 3, 4, 5, 6, 7, 8, 9, 11, 13, 25, 27};
  while (true) {
    const std::uint32_t n = moduli[std::uniform_int_distribution<std::size_t>(0, moduli.size() - 1)(rng)];
    std::size_t deg = 1, size = n;
    std::vector<std::size_t> degrees;
    while (size <= max_size) {
      degrees.push_back(deg);
      ++deg;
      size *= n;
    }
    if (degrees.empty()) continue;
    const std::size_t d = degrees[std::uniform_int_distribution<std::size_t>(0, degrees.size() - 1)(rng)];
    std::vector<std::int64_t> poly(d + 1);
    std::uniform_int_distribution<std::int64_t> coeff(0, n - 1);
    for (auto& c : poly) c = coeff(rng);
    poly[d] = 1;
    if (std::gcd<std::int64_t>(poly[0], n) != 1) continue;  // T invertible needs a unit constant term
    return AlexanderQuandleSpec{n, poly};
  }
}

}  // namespace qcjkls::oracle
