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

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "qcjkls/braid.hpp"
#include "qcjkls/cocycle.hpp"
#include "qcjkls/quandle.hpp"

namespace qcjkls {

/// Colors of the strands at the top of the braid, left to right.
using Coloring = std::vector<Element>;

/// 4^12: the default cap on brute-force tuples.
inline constexpr std::uint64_t kDefaultEnumerationBudget = 16'777'216;

struct EnumerationOptions {
  std::uint64_t budget = kDefaultEnumerationBudget;
  /// 0 = std::thread::hardware_concurrency().
  unsigned threads = 0;
};

struct CrossingColors {
  Element under = 0;  ///< a_C: color of the under-arc entering the crossing
  Element over = 0;   ///< b_C: color of the over-arc
  Sign sign = Sign::kPositive;
};

struct ColoringTrace {
  Coloring top;
  Coloring bottom;
  GroupElement weight = 0;  ///< product of phi(under, over)^sign
  std::vector<CrossingColors> per_crossing;
};

/// Pushes `top` down through every letter. A positive letter at position i
/// maps (x, y) to (y, x*y) with weight phi(x, y); a negative letter maps
/// (x, y) to (y *bar x, x) with weight phi(y *bar x, x)^-1.
/// Throws StructuralError on a length or quandle mismatch.
ColoringTrace propagate(const BraidWord& w, const QuandleTable& q, const Cocycle& phi,
                        std::span<const Element> top);

/// Bottom colors only, no cocycle. `state` is updated in place.
void propagate_colors(const BraidWord& w, const QuandleTable& q, std::span<Element> state);

/// All top tuples that come back unchanged at the bottom (closure colorings),
/// in lexicographic order. Throws BudgetError if q^s exceeds the budget.
std::vector<Coloring> enumerate_colorings(const BraidWord& w, const QuandleTable& q,
                                          const EnumerationOptions& options = {});

/// Same set for an Alexander quandle, obtained by solving the linear
/// fixed-point system over Z_n[T]/(p) instead of trying every tuple. The
/// BudgetError cap applies to the number of solutions. Element indices match
/// build_alexander_quandle(spec).
std::vector<Coloring> enumerate_colorings_affine(const BraidWord& w, const AlexanderQuandleSpec& spec,
                                                 const EnumerationOptions& options = {});

/// Number of closure colorings via the linear system, without listing them.
BigInt count_colorings_affine(const BraidWord& w, const AlexanderQuandleSpec& spec);

/// q^s, saturating at UINT64_MAX.
std::uint64_t tuple_space_size(std::size_t quandle_size, std::uint32_t strands);

}  // namespace qcjkls
