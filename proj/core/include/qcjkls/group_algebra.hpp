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
#include <memory>
#include <string>
#include <vector>

#include "qcjkls/bigint.hpp"

namespace qcjkls {

/// Index of an element of a finite abelian group.
using GroupElement = std::uint32_t;

/// Finite abelian group given by its multiplication table, with a fixed
/// element order. The order is the coordinate order of every coefficient
/// vector built over the group.
class AbelianGroup {
 public:
  /// Validates associativity, commutativity, identity and inverses.
  /// Throws StructuralError / DomainError.
  AbelianGroup(std::vector<GroupElement> mul, std::size_t order, GroupElement identity,
               std::vector<std::string> labels);

  /// Z_order written multiplicatively: labels 1, t, t^2, ...; identity first.
  static AbelianGroup cyclic(std::size_t order);

  std::size_t order() const noexcept { return order_; }
  GroupElement identity() const noexcept { return identity_; }
  GroupElement mul(GroupElement a, GroupElement b) const { return mul_[a * order_ + b]; }
  GroupElement inverse(GroupElement a) const { return inverse_[a]; }
  const std::string& label(GroupElement a) const { return labels_.at(a); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  /// True when every element squares to the identity.
  bool has_exponent_two() const;

  std::string content_hash() const;

  friend bool operator==(const AbelianGroup& x, const AbelianGroup& y) {
    return x.order_ == y.order_ && x.identity_ == y.identity_ && x.mul_ == y.mul_ &&
           x.labels_ == y.labels_;
  }

 private:
  std::size_t order_;
  GroupElement identity_;
  std::vector<GroupElement> mul_;
  std::vector<GroupElement> inverse_;
  std::vector<std::string> labels_;
};

using GroupPtr = std::shared_ptr<const AbelianGroup>;

/// Point of R^N. Entries are always finite.
struct FVector {
  std::vector<double> coords;

  std::size_t dimension() const noexcept { return coords.size(); }
  friend bool operator==(const FVector&, const FVector&) = default;
};

/// Element n_1 g_1 + ... + n_N g_N of the integer group algebra with
/// non-negative coefficients.
class GroupAlgebraElement {
 public:
  explicit GroupAlgebraElement(GroupPtr group);
  /// Throws StructuralError on a length mismatch, DomainError on a negative
  /// coefficient.
  GroupAlgebraElement(GroupPtr group, std::vector<BigInt> coeffs);

  const AbelianGroup& group() const noexcept { return *group_; }
  const GroupPtr& group_ptr() const noexcept { return group_; }
  const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }
  const BigInt& coeff(GroupElement g) const { return coeffs_.at(g); }

  /// Adds `count` copies of basis element g. Throws StructuralError when g is
  /// out of range.
  void accumulate(GroupElement g, const BigInt& count = 1);

  BigInt coefficient_sum() const;
  bool is_zero() const;

  /// "4 + 12t" style rendering using the group labels.
  std::string to_string() const;

  friend bool operator==(const GroupAlgebraElement& x, const GroupAlgebraElement& y) {
    return *x.group_ == *y.group_ && x.coeffs_ == y.coeffs_;
  }

 private:
  GroupPtr group_;
  std::vector<BigInt> coeffs_;
};

/// Value-returning form: z with coefficient of g increased by one.
GroupAlgebraElement accumulate(GroupAlgebraElement z, GroupElement g);

/// Coefficients as real coordinates, in group element order.
FVector embed(const GroupAlgebraElement& z);

/// Throws StructuralError on a dimension mismatch.
double euclidean_distance(const FVector& u, const FVector& v);

}  // namespace qcjkls
