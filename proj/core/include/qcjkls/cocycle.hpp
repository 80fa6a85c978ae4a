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

#include <string>
#include <vector>

#include "qcjkls/group_algebra.hpp"
#include "qcjkls/quandle.hpp"

namespace qcjkls {

/// Map phi: X x X -> A, stored as a q x q table of group element indices.
/// Construction checks shape only; use verify_cocycle for the 2-cocycle
/// conditions.
class Cocycle {
 public:
  /// Throws StructuralError if the table is not q x q or an entry is not a
  /// group element.
  Cocycle(QuandlePtr quandle, GroupPtr group, std::vector<GroupElement> table);

  const QuandleTable& quandle() const noexcept { return *quandle_; }
  const QuandlePtr& quandle_ptr() const noexcept { return quandle_; }
  const AbelianGroup& group() const noexcept { return *group_; }
  const GroupPtr& group_ptr() const noexcept { return group_; }
  const std::vector<GroupElement>& table() const noexcept { return table_; }

  GroupElement operator()(Element a, Element b) const { return table_[a * quandle_->size() + b]; }

  /// Hash of quandle, group and table.
  std::string content_hash() const;

 private:
  QuandlePtr quandle_;
  GroupPtr group_;
  std::vector<GroupElement> table_;
};

enum class CocycleCondition {
  kDiagonal,  ///< phi(a, a) = 1
  kTriple,    ///< phi(a,b) phi(a*b,c) = phi(a,c) phi(a*c,b*c)
};

std::string to_string(CocycleCondition condition);

struct CocycleViolation {
  CocycleCondition condition;
  Element a = 0;
  Element b = 0;
  Element c = 0;
};

struct ViolationReport {
  std::vector<CocycleViolation> violations;
  bool valid() const noexcept { return violations.empty(); }
};

/// Exhaustive check of both 2-cocycle conditions.
ViolationReport verify_cocycle(const Cocycle& phi);

/// phi on (S4, Z2): t when a != b and neither argument is T, else 1.
Cocycle build_s4_cocycle();

/// phi_0 = 1 everywhere.
Cocycle build_trivial_cocycle(QuandlePtr quandle, GroupPtr group);

/// Product of the three weights met along a sigma^3 block with top colors
/// (a, b): phi(a,b) phi(b, a*b) phi(a*b, a).
GroupElement phi_block(const Cocycle& phi, Element a, Element b);

}  // namespace qcjkls
