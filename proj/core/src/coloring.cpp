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

#include "qcjkls/coloring.hpp"

#include <algorithm>
#include <limits>

#include "parallel.hpp"
#include "qcjkls/error.hpp"

namespace qcjkls {

std::uint64_t tuple_space_size(std::size_t quandle_size, std::uint32_t strands) {
  std::uint64_t total = 1;
  for (std::uint32_t i = 0; i < strands; ++i) {
    if (total > std::numeric_limits<std::uint64_t>::max() / quandle_size)
      return std::numeric_limits<std::uint64_t>::max();
    total *= quandle_size;
  }
  return total;
}

ColoringTrace propagate(const BraidWord& w, const QuandleTable& q, const Cocycle& phi,
                        std::span<const Element> top) {
  if (top.size() != w.strands())
    throw StructuralError("expected " + std::to_string(w.strands()) + " top colors, got " +
                          std::to_string(top.size()));
  if (phi.quandle().size() != q.size())
    throw StructuralError("cocycle is defined over a quandle of a different size");
  for (auto c : top)
    if (c >= q.size()) throw StructuralError("top color " + std::to_string(c) + " is not a quandle element");

  const AbelianGroup& g = phi.group();
  ColoringTrace trace;
  trace.top.assign(top.begin(), top.end());
  Coloring state = trace.top;
  GroupElement weight = g.identity();
  trace.per_crossing.reserve(w.size());
  for (const auto& l : w.letters()) {
    const std::size_t i = l.index - 1;
    const Element x = state[i];
    const Element y = state[i + 1];
    if (l.sign == Sign::kPositive) {
      weight = g.mul(weight, phi(x, y));
      trace.per_crossing.push_back({x, y, Sign::kPositive});
      state[i] = y;
      state[i + 1] = q.op(x, y);
    } else {
      const Element under = q.inv_op(y, x);
      weight = g.mul(weight, g.inverse(phi(under, x)));
      trace.per_crossing.push_back({under, x, Sign::kNegative});
      state[i] = under;
      state[i + 1] = x;
    }
  }
  trace.bottom = std::move(state);
  trace.weight = weight;
  return trace;
}

void propagate_colors(const BraidWord& w, const QuandleTable& q, std::span<Element> state) {
  for (const auto& l : w.letters()) {
    const std::size_t i = l.index - 1;
    const Element x = state[i];
    const Element y = state[i + 1];
    if (l.sign == Sign::kPositive) {
      state[i] = y;
      state[i + 1] = q.op(x, y);
    } else {
      state[i] = q.inv_op(y, x);
      state[i + 1] = x;
    }
  }
}

std::vector<Coloring> enumerate_colorings(const BraidWord& w, const QuandleTable& q,
                                          const EnumerationOptions& options) {
  const std::uint64_t total = tuple_space_size(q.size(), w.strands());
  if (total > options.budget) {
    throw BudgetError("brute-force enumeration of " + std::to_string(q.size()) + "^" +
                      std::to_string(w.strands()) + " tuples exceeds the budget of " +
                      std::to_string(options.budget) +
                      "; use the affine solver for Alexander quandles or raise --budget");
  }
  const unsigned chunks = detail::resolve_threads(options.threads, total);
  std::vector<std::vector<Coloring>> found(chunks);
  detail::parallel_chunks(total, chunks, [&](unsigned chunk, std::uint64_t begin, std::uint64_t end) {
    detail::TupleCursor cursor(static_cast<std::uint32_t>(q.size()), w.strands(), begin);
    Coloring state(w.strands());
    for (std::uint64_t k = begin; k < end; ++k, cursor.advance()) {
      const auto& top = cursor.digits();
      std::copy(top.begin(), top.end(), state.begin());
      propagate_colors(w, q, state);
      if (std::equal(state.begin(), state.end(), top.begin())) found[chunk].emplace_back(top.begin(), top.end());
    }
  });
  std::vector<Coloring> out;
  for (auto& part : found) std::move(part.begin(), part.end(), std::back_inserter(out));
  return out;
}

}  // namespace qcjkls
