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

#include "qcjkls/group_algebra.hpp"

#include <cmath>

#include "qcjkls/error.hpp"
#include "qcjkls/hash.hpp"

namespace qcjkls {

AbelianGroup::AbelianGroup(std::vector<GroupElement> mul, std::size_t order,
                           GroupElement identity, std::vector<std::string> labels)
    : order_(order), identity_(identity), mul_(std::move(mul)), labels_(std::move(labels)) {
  if (order_ == 0) throw StructuralError("group order must be positive");
  if (mul_.size() != order_ * order_) throw StructuralError("group table is not order x order");
  if (labels_.size() != order_) throw StructuralError("group label count does not match order");
  if (identity_ >= order_) throw StructuralError("identity index out of range");
  for (auto v : mul_)
    if (v >= order_) throw StructuralError("group table entry out of range");

  const auto n = static_cast<GroupElement>(order_);
  for (GroupElement a = 0; a < n; ++a) {
    if (this->mul(identity_, a) != a) throw DomainError("identity_index is not a two-sided identity");
    for (GroupElement b = 0; b < n; ++b) {
      if (this->mul(a, b) != this->mul(b, a)) throw DomainError("group table is not commutative");
      for (GroupElement c = 0; c < n; ++c)
        if (this->mul(this->mul(a, b), c) != this->mul(a, this->mul(b, c)))
          throw DomainError("group table is not associative");
    }
  }
  inverse_.assign(order_, n);
  for (GroupElement a = 0; a < n; ++a) {
    for (GroupElement b = 0; b < n; ++b)
      if (this->mul(a, b) == identity_) {
        inverse_[a] = b;
        break;
      }
    if (inverse_[a] == n) throw DomainError("element " + labels_[a] + " has no inverse");
  }
}

AbelianGroup AbelianGroup::cyclic(std::size_t order) {
  if (order == 0) throw DomainError("cyclic group order must be at least 1");
  std::vector<GroupElement> mul(order * order);
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < order; ++a) {
    for (std::size_t b = 0; b < order; ++b) mul[a * order + b] = static_cast<GroupElement>((a + b) % order);
    if (a == 0)
      labels.emplace_back("1");
    else if (a == 1)
      labels.emplace_back("t");
    else
      labels.push_back("t^" + std::to_string(a));
  }
  return AbelianGroup(std::move(mul), order, 0, std::move(labels));
}

bool AbelianGroup::has_exponent_two() const {
  for (GroupElement a = 0; a < order_; ++a)
    if (mul(a, a) != identity_) return false;
  return true;
}

std::string AbelianGroup::content_hash() const {
  Fnv1a h;
  h.add_u64(order_);
  h.add_u64(identity_);
  for (auto v : mul_) h.add_u64(v);
  return h.hex();
}

// ---------------------------------------------------------------------------

GroupAlgebraElement::GroupAlgebraElement(GroupPtr group)
    : group_(std::move(group)), coeffs_(group_->order(), BigInt(0)) {}

GroupAlgebraElement::GroupAlgebraElement(GroupPtr group, std::vector<BigInt> coeffs)
    : group_(std::move(group)), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != group_->order())
    throw StructuralError("coefficient vector length " + std::to_string(coeffs_.size()) +
                          " does not match group order " + std::to_string(group_->order()));
  for (const auto& c : coeffs_)
    if (c < 0) throw DomainError("group algebra coefficients must be non-negative");
}

void GroupAlgebraElement::accumulate(GroupElement g, const BigInt& count) {
  if (g >= coeffs_.size())
    throw StructuralError("group element index " + std::to_string(g) + " out of range");
  if (count < 0) throw DomainError("cannot accumulate a negative count");
  coeffs_[g] += count;
}

BigInt GroupAlgebraElement::coefficient_sum() const {
  BigInt s = 0;
  for (const auto& c : coeffs_) s += c;
  return s;
}

bool GroupAlgebraElement::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

std::string GroupAlgebraElement::to_string() const {
  std::string out;
  for (GroupElement g = 0; g < coeffs_.size(); ++g) {
    if (coeffs_[g] == 0) continue;
    if (!out.empty()) out += " + ";
    out += coeffs_[g].str();
    if (g != group_->identity()) out += group_->label(g);
  }
  return out.empty() ? "0" : out;
}

GroupAlgebraElement accumulate(GroupAlgebraElement z, GroupElement g) {
  z.accumulate(g);
  return z;
}

FVector embed(const GroupAlgebraElement& z) {
  FVector v;
  v.coords.reserve(z.coeffs().size());
  for (const auto& c : z.coeffs()) v.coords.push_back(c.convert_to<double>());
  return v;
}

double euclidean_distance(const FVector& u, const FVector& v) {
  if (u.dimension() != v.dimension())
    throw StructuralError("dimension mismatch: " + std::to_string(u.dimension()) + " vs " +
                          std::to_string(v.dimension()));
  double s = 0.0;
  for (std::size_t i = 0; i < u.dimension(); ++i) {
    const double d = u.coords[i] - v.coords[i];
    s += d * d;
  }
  return std::sqrt(s);
}

}  // namespace qcjkls
