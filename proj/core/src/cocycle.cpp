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

#include "qcjkls/cocycle.hpp"

#include "qcjkls/error.hpp"
#include "qcjkls/hash.hpp"

namespace qcjkls {

Cocycle::Cocycle(QuandlePtr quandle, GroupPtr group, std::vector<GroupElement> table)
    : quandle_(std::move(quandle)), group_(std::move(group)), table_(std::move(table)) {
  if (!quandle_ || !group_) throw StructuralError("cocycle needs a quandle and a group");
  const std::size_t q = quandle_->size();
  if (table_.size() != q * q)
    throw StructuralError("cocycle table has " + std::to_string(table_.size()) +
                          " entries, expected " + std::to_string(q * q));
  for (auto g : table_)
    if (g >= group_->order())
      throw StructuralError("cocycle entry " + std::to_string(g) + " is not an element of a group of order " +
                            std::to_string(group_->order()));
}

std::string Cocycle::content_hash() const {
  Fnv1a h;
  h.add_string(quandle_->content_hash());
  h.add_string(group_->content_hash());
  for (auto g : table_) h.add_u64(g);
  return h.hex();
}

std::string to_string(CocycleCondition condition) {
  return condition == CocycleCondition::kDiagonal ? "diagonal" : "triple";
}

ViolationReport verify_cocycle(const Cocycle& phi) {
  const QuandleTable& x = phi.quandle();
  const AbelianGroup& g = phi.group();
  const auto q = static_cast<Element>(x.size());
  ViolationReport report;
  for (Element a = 0; a < q; ++a)
    if (phi(a, a) != g.identity()) report.violations.push_back({CocycleCondition::kDiagonal, a, a, 0});

  for (Element a = 0; a < q; ++a)
    for (Element b = 0; b < q; ++b)
      for (Element c = 0; c < q; ++c) {
        const GroupElement lhs = g.mul(phi(a, b), phi(x.op(a, b), c));
        const GroupElement rhs = g.mul(phi(a, c), phi(x.op(a, c), x.op(b, c)));
        if (lhs != rhs) report.violations.push_back({CocycleCondition::kTriple, a, b, c});
      }
  return report;
}

Cocycle build_s4_cocycle() {
  auto quandle = std::make_shared<const QuandleTable>(build_s4());
  auto group = std::make_shared<const AbelianGroup>(AbelianGroup::cyclic(2));
  const Element t_element = *quandle->find_label("T");
  std::vector<GroupElement> table(16);
  for (Element a = 0; a < 4; ++a)
    for (Element b = 0; b < 4; ++b)
      table[a * 4 + b] = (a != b && a != t_element && b != t_element) ? 1 : 0;
  return Cocycle(std::move(quandle), std::move(group), std::move(table));
}

Cocycle build_trivial_cocycle(QuandlePtr quandle, GroupPtr group) {
  const std::size_t q = quandle->size();
  const GroupElement e = group->identity();
  return Cocycle(std::move(quandle), std::move(group), std::vector<GroupElement>(q * q, e));
}

GroupElement phi_block(const Cocycle& phi, Element a, Element b) {
  const Element middle = phi.quandle().op(a, b);
  const AbelianGroup& g = phi.group();
  return g.mul(g.mul(phi(a, b), phi(b, middle)), phi(middle, a));
}

}  // namespace qcjkls
