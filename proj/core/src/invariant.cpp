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

#include "qcjkls/invariant.hpp"

#include <algorithm>

#include "parallel.hpp"
#include "qcjkls/diagram.hpp"
#include "qcjkls/error.hpp"

namespace qcjkls {

namespace {

struct Tally {
  std::vector<std::uint64_t> per_element;
  std::uint64_t fixed = 0;
};

// Weight of one top tuple, or nullopt when the bottom differs from the top.
class WeightKernel {
 public:
  WeightKernel(const BraidWord& w, const Cocycle& phi)
      : w_(w),
        q_(phi.quandle()),
        g_(phi.group()),
        phi_(phi),
        n_(static_cast<Element>(phi.quandle().size())) {}

  std::optional<GroupElement> operator()(std::span<const Element> top, std::span<Element> scratch) const {
    std::copy(top.begin(), top.end(), scratch.begin());
    GroupElement weight = g_.identity();
    const Element* op = q_.op_table().cells.data();
    const Element* inv = q_.inv_op_table().cells.data();
    for (const auto& l : w_.letters()) {
      const std::size_t i = l.index - 1;
      const Element x = scratch[i];
      const Element y = scratch[i + 1];
      if (l.sign == Sign::kPositive) {
        weight = g_.mul(weight, phi_(x, y));
        scratch[i] = y;
        scratch[i + 1] = op[x * n_ + y];
      } else {
        const Element under = inv[y * n_ + x];
        weight = g_.mul(weight, g_.inverse(phi_(under, x)));
        scratch[i] = under;
        scratch[i + 1] = x;
      }
    }
    if (!std::equal(top.begin(), top.end(), scratch.begin())) return std::nullopt;
    return weight;
  }

 private:
  const BraidWord& w_;
  const QuandleTable& q_;
  const AbelianGroup& g_;
  const Cocycle& phi_;
  Element n_;
};

GroupAlgebraElement to_element(const GroupPtr& group, const Tally& tally) {
  GroupAlgebraElement z(group);
  for (GroupElement g = 0; g < tally.per_element.size(); ++g)
    if (tally.per_element[g] != 0) z.accumulate(g, BigInt(tally.per_element[g]));
  return z;
}

Tally brute_force_tally(const BraidWord& w, const Cocycle& phi, const EnumerationOptions& options) {
  const QuandleTable& q = phi.quandle();
  const std::uint64_t total = tuple_space_size(q.size(), w.strands());
  if (total > options.budget) {
    throw BudgetError("state-sum over " + std::to_string(q.size()) + "^" + std::to_string(w.strands()) +
                      " tuples exceeds the budget of " + std::to_string(options.budget) +
                      "; use the affine solver for Alexander quandles or raise --budget");
  }
  const WeightKernel kernel(w, phi);
  const unsigned chunks = detail::resolve_threads(options.threads, total);
  std::vector<Tally> tallies(chunks, Tally{std::vector<std::uint64_t>(phi.group().order(), 0), 0});
  detail::parallel_chunks(total, chunks, [&](unsigned chunk, std::uint64_t begin, std::uint64_t end) {
    detail::TupleCursor cursor(static_cast<std::uint32_t>(q.size()), w.strands(), begin);
    std::vector<Element> scratch(w.strands());
    Tally& tally = tallies[chunk];
    for (std::uint64_t k = begin; k < end; ++k, cursor.advance()) {
      if (const auto weight = kernel(cursor.digits(), scratch)) {
        ++tally.per_element[*weight];
        ++tally.fixed;
      }
    }
  });
  Tally merged{std::vector<std::uint64_t>(phi.group().order(), 0), 0};
  for (const auto& t : tallies) {
    for (std::size_t g = 0; g < t.per_element.size(); ++g) merged.per_element[g] += t.per_element[g];
    merged.fixed += t.fixed;
  }
  return merged;
}

Tally affine_tally(const BraidWord& w, const Cocycle& phi, const AlexanderQuandleSpec& spec,
                   const EnumerationOptions& options) {
  const auto colorings = enumerate_colorings_affine(w, spec, options);
  const WeightKernel kernel(w, phi);
  Tally tally{std::vector<std::uint64_t>(phi.group().order(), 0), 0};
  std::vector<Element> scratch(w.strands());
  for (const auto& c : colorings) {
    const auto weight = kernel(c, scratch);
    if (!weight) throw DomainError("affine solver returned a tuple that is not a closure coloring");
    ++tally.per_element[*weight];
    ++tally.fixed;
  }
  return tally;
}

void check_alexander(const Cocycle& phi, const AlexanderQuandleSpec& spec) {
  const auto& own = phi.quandle().alexander_spec();
  if (own && *own == spec) return;
  if (!(build_alexander_quandle(spec) == phi.quandle()))
    throw DomainError("cocycle quandle is not the Alexander quandle of the given spec");
}

}  // namespace

GroupAlgebraElement cjkls_state_sum(const BraidWord& w, const Cocycle& phi,
                                    const EnumerationOptions& options) {
  return to_element(phi.group_ptr(), brute_force_tally(w, phi, options));
}

GroupAlgebraElement cjkls_state_sum_affine(const BraidWord& w, const Cocycle& phi,
                                           const AlexanderQuandleSpec& spec,
                                           const EnumerationOptions& options) {
  check_alexander(phi, spec);
  return to_element(phi.group_ptr(), affine_tally(w, phi, spec, options));
}

FVector free_energy(const GroupAlgebraElement& z) {
  FVector out;
  out.coords.reserve(z.coeffs().size());
  for (const auto& c : z.coeffs()) out.coords.push_back(extended_log(c));
  return out;
}

FVector f_invariant(const GroupAlgebraElement& z, std::uint64_t crossing_number) {
  if (crossing_number == 0) throw DomainError("crossing number must be positive");
  FVector out = free_energy(z);
  for (auto& x : out.coords) x /= static_cast<double>(crossing_number);
  return out;
}

std::uint64_t crossing_number_reduced_alternating(const BraidWord& w) {
  if (!is_alternating_closure(w))
    throw DomainError("closure of " + w.canonical() +
                      " is not alternating; crossing number unknown (supply it explicitly)");
  const auto nugatory = nugatory_crossings(w);
  if (!nugatory.empty())
    throw DomainError("closure of " + w.canonical() + " has a nugatory crossing at letter " +
                      std::to_string(nugatory.front() + 1) + "; crossing number unknown (supply it explicitly)");
  return w.size();
}

void attach_crossing_data(InvariantRecord& record, const BraidWord& w,
                          std::optional<std::uint64_t> assume_crossing_number) {
  record.crossing_number.reset();
  record.f.reset();
  std::optional<std::uint64_t> c = assume_crossing_number;
  if (!c) {
    try {
      c = crossing_number_reduced_alternating(w);
    } catch (const DomainError&) {
      return;
    }
  }
  if (*c == 0) return;
  record.crossing_number = c;
  record.f = f_invariant(record.z, *c);
}

InvariantRecord compute_invariant(const BraidWord& w, const Cocycle& phi, const RecordOptions& options) {
  const auto& spec = phi.quandle().alexander_spec();
  Tally tally;
  BigInt colorings;
  if (options.prefer_affine && spec) {
    tally = affine_tally(w, phi, *spec, options.enumeration);
    colorings = count_colorings_affine(w, *spec);
  } else {
    tally = brute_force_tally(w, phi, options.enumeration);
    colorings = tally.fixed;
  }
  InvariantRecord record{w.canonical(), phi.quandle().content_hash(), phi.content_hash(),
                         to_element(phi.group_ptr(), tally), colorings, std::nullopt, std::nullopt};
  if (record.z.coefficient_sum() != record.coloring_count)
    throw DomainError("state-sum coefficients do not add up to the coloring count");
  // Constant colorings always exist, so Z is never zero.
  if (record.coloring_count < phi.quandle().size())
    throw DomainError("fewer colorings than quandle elements; the enumeration is broken");
  attach_crossing_data(record, w, options.assume_crossing_number);
  return record;
}

}  // namespace qcjkls
