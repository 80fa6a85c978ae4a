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

#include "qcjkls/diagram.hpp"

#include <map>
#include <numeric>
#include <utility>

namespace qcjkls {

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n), rank_(n, 0) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (rank_[a] < rank_[b]) std::swap(a, b);
    parent_[b] = a;
    if (rank_[a] == rank_[b]) ++rank_[a];
  }

  std::size_t count_roots() {
    std::size_t n = 0;
    for (std::size_t i = 0; i < parent_.size(); ++i)
      if (find(i) == i) ++n;
    return n;
  }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::uint8_t> rank_;
};

// Ports of crossing k are 4k + {kTopLeft, kTopRight, kBottomLeft, kBottomRight};
// node 4L + p is the closure point above strand position p.
enum Port : std::size_t { kTopLeft = 0, kTopRight = 1, kBottomLeft = 2, kBottomRight = 3 };

struct Shadow {
  std::size_t node_count = 0;
  std::vector<std::pair<std::size_t, std::size_t>> arcs;
};

Shadow build_shadow(const BraidWord& w) {
  const std::size_t crossings = w.size();
  Shadow s;
  s.node_count = 4 * crossings + w.strands();
  std::vector<std::size_t> open(w.strands());
  for (std::size_t p = 0; p < w.strands(); ++p) open[p] = 4 * crossings + p;
  for (std::size_t k = 0; k < crossings; ++k) {
    const std::size_t left = w.letters()[k].index - 1;
    s.arcs.emplace_back(open[left], 4 * k + kTopLeft);
    s.arcs.emplace_back(open[left + 1], 4 * k + kTopRight);
    open[left] = 4 * k + kBottomLeft;
    open[left + 1] = 4 * k + kBottomRight;
  }
  for (std::size_t p = 0; p < w.strands(); ++p) s.arcs.emplace_back(open[p], 4 * crossings + p);
  return s;
}

UnionFind join_arcs(const Shadow& s) {
  UnionFind uf(s.node_count);
  for (const auto& [a, b] : s.arcs) uf.unite(a, b);
  return uf;
}

}  // namespace

bool has_alternating_sign_pattern(const BraidWord& w) {
  std::map<std::uint32_t, Sign> sign_of;
  for (const auto& l : w.letters()) {
    auto [it, inserted] = sign_of.emplace(l.index, l.sign);
    if (!inserted && it->second != l.sign) return false;
  }
  for (const auto& [index, sign] : sign_of) {
    auto next = sign_of.find(index + 1);
    if (next != sign_of.end() && next->second == sign) return false;
  }
  return true;
}

bool is_alternating_closure(const BraidWord& w) {
  if (has_alternating_sign_pattern(w)) return true;

  const std::uint32_t s = w.strands();
  std::vector<bool> visited(s, false);
  for (std::uint32_t start = 0; start < s; ++start) {
    if (visited[start]) continue;
    // true = over
    std::vector<bool> passes;
    std::uint32_t pos = start;
    do {
      visited[pos] = true;
      for (const auto& l : w.letters()) {
        const std::uint32_t left = l.index - 1;
        if (pos == left) {
          passes.push_back(l.sign == Sign::kNegative);
          pos = left + 1;
        } else if (pos == left + 1) {
          passes.push_back(l.sign == Sign::kPositive);
          pos = left;
        }
      }
    } while (pos != start);
    for (std::size_t i = 0; i < passes.size(); ++i) {
      if (passes[i] == passes[(i + 1) % passes.size()]) return false;
    }
  }
  return true;
}

std::vector<std::size_t> nugatory_crossings(const BraidWord& w) {
  const Shadow shadow = build_shadow(w);
  const std::size_t crossings = w.size();

  UnionFind whole = join_arcs(shadow);
  for (std::size_t k = 0; k < crossings; ++k)
    for (std::size_t p = 1; p < 4; ++p) whole.unite(4 * k, 4 * k + p);
  const std::size_t base_pieces = whole.count_roots();

  std::vector<std::size_t> nugatory;
  static constexpr std::pair<Port, Port> kSmoothings[2][2] = {
      {{kTopLeft, kTopRight}, {kBottomLeft, kBottomRight}},
      {{kTopLeft, kBottomLeft}, {kTopRight, kBottomRight}},
  };
  for (std::size_t c = 0; c < crossings; ++c) {
    for (const auto& smoothing : kSmoothings) {
      UnionFind uf = join_arcs(shadow);
      for (std::size_t k = 0; k < crossings; ++k) {
        if (k == c) continue;
        for (std::size_t p = 1; p < 4; ++p) uf.unite(4 * k, 4 * k + p);
      }
      for (const auto& [a, b] : smoothing) uf.unite(4 * c + a, 4 * c + b);
      if (uf.count_roots() > base_pieces) {
        nugatory.push_back(c);
        break;
      }
    }
  }
  return nugatory;
}

bool is_reduced_closure(const BraidWord& w) { return nugatory_crossings(w).empty(); }

std::size_t link_component_count(const BraidWord& w) {
  std::vector<std::uint32_t> perm(w.strands());
  std::iota(perm.begin(), perm.end(), 0u);
  // perm[p] = strand position reached at the bottom from top position p.
  std::vector<std::uint32_t> at(w.strands());
  std::iota(at.begin(), at.end(), 0u);  // at[position] = originating top position
  for (const auto& l : w.letters()) std::swap(at[l.index - 1], at[l.index]);
  for (std::uint32_t p = 0; p < w.strands(); ++p) perm[at[p]] = p;
  std::vector<bool> seen(w.strands(), false);
  std::size_t cycles = 0;
  for (std::uint32_t p = 0; p < w.strands(); ++p) {
    if (seen[p]) continue;
    ++cycles;
    for (std::uint32_t x = p; !seen[x]; x = perm[x]) seen[x] = true;
  }
  return cycles;
}

ClosureDiagram analyze_closure(const BraidWord& w) {
  return ClosureDiagram{w, w.size(), is_alternating_closure(w), is_reduced_closure(w)};
}

}  // namespace qcjkls
