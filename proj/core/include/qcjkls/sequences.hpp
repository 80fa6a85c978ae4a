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
#include <string>
#include <string_view>
#include <utility>

#include "qcjkls/bigint.hpp"
#include "qcjkls/braid.hpp"
#include "qcjkls/group_algebra.hpp"

namespace qcjkls {

// Five infinite families of alternating braid closures, all built from
// blocks sigma_i^(+-e) with e = 3 (or 3(2m+1) for the m-families). Every
// block returns its two top colors unchanged under S4, so each family has
// a closed-form invariant over (S4, Z2).

enum class FamilyKind {
  kKn,       ///< palindrome s_n ... s_2 s_1 s_2 ... s_n, alternating signs
  kKPrime,   ///< odd-index blocks repeated an odd number of times
  kK0,       ///< triangular weave on 2n strands, single middle block
  kKm,       ///< kKn with block exponent 3(2m+1)
  kKPrimeM,  ///< kKPrime with block exponent 3(2m+1)
};

struct FamilyId {
  FamilyKind kind = FamilyKind::kKn;
  std::uint32_t m = 0;  ///< >= 1 for kKm and kKPrimeM, otherwise 0

  /// Throws DomainError when m is missing or superfluous.
  static FamilyId make(FamilyKind kind, std::uint32_t m = 0);

  bool parametrized() const noexcept { return kind == FamilyKind::kKm || kind == FamilyKind::kKPrimeM; }
  /// 3 or 3(2m+1).
  std::uint32_t block_exponent() const noexcept;
  /// "Kn", "KPrime", "K0", "Km", "KPrimeM".
  std::string kind_name() const;
  /// kind_name, plus ":m" for the parametrized kinds ("Km:2").
  std::string to_string() const;

  friend bool operator==(const FamilyId&, const FamilyId&) = default;
};

/// Accepts "Kn", "KPrime", "K0", "Km:2", "KPrimeM:1" (also "K'", "Kp",
/// "K'm"); `m` is used when the text has no ":m" suffix.
FamilyId parse_family(std::string_view text, std::uint32_t m = 0);

/// Throws DomainError when n == 0.
BraidWord family_braid(FamilyId family, std::uint32_t n);

/// Closed-form crossing number; equals the letter count of family_braid.
std::uint64_t family_crossing_number(FamilyId family, std::uint32_t n);

/// (S^e_m, S^o_m): sums of C(m,k) 3^k over even and odd k.
std::pair<BigInt, BigInt> binomial_sums(std::uint32_t m);

/// Z2 = {1, t}, shared by every closed-form value.
const GroupPtr& z2_group();

/// Closed-form value of the state-sum over (S4, Z2, standard cocycle).
GroupAlgebraElement family_closed_Z(FamilyId family, std::uint32_t n);

/// Closed-form f, written directly in terms of ln 2, ln 3 and ln S^e/S^o.
FVector family_closed_f(FamilyId family, std::uint32_t n);

struct FamilyPoint {
  FamilyId family;
  std::uint32_t n = 0;
  BraidWord braid;
  GroupAlgebraElement closed_z;
  std::uint64_t closed_c = 0;
  FVector closed_f;
};

FamilyPoint family_point(FamilyId family, std::uint32_t n);

}  // namespace qcjkls
