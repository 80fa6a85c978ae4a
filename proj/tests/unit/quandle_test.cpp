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

#include <gtest/gtest.h>

#include <random>

#include "../support/oracles.hpp"
#include "qcjkls/error.hpp"
#include "qcjkls/quandle.hpp"

namespace qcjkls {
namespace {

TEST(S4, KnownProducts) {
  const QuandleTable q = build_s4();
  ASSERT_EQ(q.size(), 4u);
  const Element zero = 0, one = 1, t = 2, t1 = 3;
  EXPECT_EQ(q.labels(), (std::vector<std::string>{"0", "1", "T", "T+1"}));
  // 1 * (T+1) = T + (1 - T)(T + 1) = T + T + 1 - T^2 - T = 0.
  EXPECT_EQ(q.op(one, t1), zero);
  for (Element a = 0; a < 4; ++a) EXPECT_EQ(q.op(a, a), a);
  // a *bar b = (T+1) a + T b, so 0 *bar 1 = T.
  EXPECT_EQ(q.inv_op(zero, one), t);
  // a *bar b undoes * b.
  for (Element a = 0; a < 4; ++a)
    for (Element b = 0; b < 4; ++b) EXPECT_EQ(q.inv_op(q.op(a, b), b), a);
  EXPECT_EQ(q.find_label("T"), t);
  EXPECT_EQ(q.find_label("nope"), std::nullopt);
  EXPECT_TRUE(verify_quandle_axioms(q).valid());
}

// Dihedral quandle R3: a * b = 2b - a mod 3, written out by hand.
TEST(Alexander, MatchesDihedralR3) {
  const QuandleTable q = build_alexander_quandle({3, {1, 1}});  // T = -1
  for (Element a = 0; a < 3; ++a)
    for (Element b = 0; b < 3; ++b) EXPECT_EQ(q.op(a, b), (2 * b + 3 - a) % 3) << a << "," << b;
}

TEST(Alexander, RandomSpecsAreQuandles) {
  std::mt19937 rng(7);
  for (int i = 0; i < 20; ++i) {
    const auto spec = oracle::random_alexander_spec(rng, 27);
    const QuandleTable q = build_alexander_quandle(spec);
    EXPECT_TRUE(verify_quandle_axioms(q).valid());
    EXPECT_EQ(q.alexander_spec(), spec);
  }
}

TEST(Alexander, RejectsNonInvertibleT) {
  EXPECT_THROW(build_alexander_quandle({2, {0, 1}}), DomainError);  // T = 0
}

TEST(OperationTable, MalformedShapes) {
  EXPECT_THROW(OperationTable::from_rows({{0, 1}, {0}}), StructuralError);
  EXPECT_THROW(OperationTable::from_rows({{0, 2}, {1, 1}}), StructuralError);
  EXPECT_THROW(OperationTable::from_rows({{0, -1}, {1, 1}}), StructuralError);
}

TEST(OperationTable, ReportsEveryAxiom) {
  // Not idempotent at 1 and column 1 not a bijection.
  auto op = OperationTable::from_rows({{0, 0}, {0, 0}});
  const auto report = verify_operation_table(op);
  ASSERT_FALSE(report.valid());
  bool idem = false, inv = false;
  for (const auto& v : report.violations) {
    idem |= v.axiom == Axiom::kIdempotence;
    inv |= v.axiom == Axiom::kRightInvertibility;
  }
  EXPECT_TRUE(idem);
  EXPECT_TRUE(inv);
  EXPECT_THROW(QuandleTable::from_operation(op, {}), DomainError);
}

TEST(OperationTable, SelfDistributivityFailure) {
  // Idempotent with bijective columns but not self-distributive.
  auto op = OperationTable::from_rows({{0, 2, 1}, {2, 1, 0}, {0, 0, 2}});
  const auto report = verify_operation_table(op);
  EXPECT_FALSE(report.valid());
}

TEST(QuandleTable, MutatedS4IsRejected) {
  auto rows = build_s4().op_table().rows();
  std::vector<std::vector<std::int64_t>> mutated;
  for (const auto& r : rows) mutated.emplace_back(r.begin(), r.end());
  std::swap(mutated[0][1], mutated[0][2]);
  EXPECT_FALSE(verify_operation_table(OperationTable::from_rows(mutated)).valid());
}

TEST(QuandleTable, InvOpMismatchIsAnError) {
  const QuandleTable s4 = build_s4();
  auto inv = s4.inv_op_table();
  EXPECT_NO_THROW(QuandleTable::from_tables(s4.op_table(), inv, {}));
  std::swap(inv.cells[1], inv.cells[2]);
  EXPECT_THROW(QuandleTable::from_tables(s4.op_table(), inv, {}), Error);
}

TEST(QuandleTable, DefaultLabelsAndHash) {
  const auto q = QuandleTable::from_operation(build_s4().op_table(), {});
  EXPECT_EQ(q.label(3), "3");
  EXPECT_EQ(q.content_hash(), build_s4().content_hash());
  EXPECT_EQ(q.content_hash().size(), 16u);
  EXPECT_NE(q.content_hash(), build_alexander_quandle({3, {1, 1}}).content_hash());
}

}  // namespace
}  // namespace qcjkls
