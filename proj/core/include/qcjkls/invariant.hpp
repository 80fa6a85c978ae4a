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
#include <optional>
#include <string>

#include "qcjkls/bigint.hpp"
#include "qcjkls/braid.hpp"
#include "qcjkls/cocycle.hpp"
#include "qcjkls/coloring.hpp"
#include "qcjkls/group_algebra.hpp"

namespace qcjkls {

/// Quandle 2-cocycle state-sum
///   Z(K) = sum over closure colorings C of prod over crossings phi(a_C, b_C)^sign
/// by brute force over all top tuples. The quandle is taken from `phi`.
/// Throws BudgetError when q^s exceeds the budget.
GroupAlgebraElement cjkls_state_sum(const BraidWord& w, const Cocycle& phi,
                                    const EnumerationOptions& options = {});

/// Same sum restricted to the colorings produced by the affine solver. Only
/// valid when phi's quandle is the Alexander quandle of `spec`.
GroupAlgebraElement cjkls_state_sum_affine(const BraidWord& w, const Cocycle& phi,
                                           const AlexanderQuandleSpec& spec,
                                           const EnumerationOptions& options = {});

/// F(K): coordinate-wise ln with ln 0 := 0.
FVector free_energy(const GroupAlgebraElement& z);

/// f(K) = F(K) / c_K. Throws DomainError when crossing_number == 0.
FVector f_invariant(const GroupAlgebraElement& z, std::uint64_t crossing_number);

/// Letter count of w, which is the crossing number when the closure is a
/// reduced alternating diagram. Throws DomainError otherwise (the caller may
/// still supply a crossing number explicitly).
std::uint64_t crossing_number_reduced_alternating(const BraidWord& w);

struct InvariantRecord {
  std::string braid;        ///< canonical braid string
  std::string quandle_id;   ///< QuandleTable::content_hash
  std::string cocycle_id;   ///< Cocycle::content_hash
  GroupAlgebraElement z;
  BigInt coloring_count;
  std::optional<std::uint64_t> crossing_number;
  std::optional<FVector> f;  ///< present iff crossing_number is present
};

struct RecordOptions {
  EnumerationOptions enumeration;
  /// Used instead of the reduced-alternating crossing number when set.
  std::optional<std::uint64_t> assume_crossing_number;
  /// Use the affine solver when phi's quandle is Alexander.
  bool prefer_affine = false;
};

/// Computes Z and the coloring count, then c_K and f when available.
/// Throws DomainError if the coefficient sum disagrees with the coloring
/// count.
InvariantRecord compute_invariant(const BraidWord& w, const Cocycle& phi,
                                  const RecordOptions& options = {});

/// Fills crossing_number and f of a record whose z is already known.
void attach_crossing_data(InvariantRecord& record, const BraidWord& w,
                          std::optional<std::uint64_t> assume_crossing_number);

}  // namespace qcjkls
