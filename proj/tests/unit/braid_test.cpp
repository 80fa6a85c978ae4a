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

#include "qcjkls/braid.hpp"
#include "qcjkls/error.hpp"

namespace qcjkls {
namespace {

TEST(ParseBraid, PowersAndStrandInference) {
  const BraidWord w = parse_braid("s1^3");
  EXPECT_EQ(w.strands(), 2u);
  EXPECT_EQ(w.size(), 3u);
  EXPECT_EQ(w.canonical(), "B2: s1^3");

  const BraidWord v = parse_braid("s2 s1^-2  s2");
  EXPECT_EQ(v.strands(), 3u);
  EXPECT_EQ(v.canonical(), "B3: s2^1 s1^-2 s2^1");
}

TEST(ParseBraid, ExplicitStrands) {
  const BraidWord w = parse_braid("B4: s1 s1");
  EXPECT_EQ(w.strands(), 4u);
  EXPECT_EQ(w.canonical(), "B4: s1^2");
  EXPECT_EQ(parse_braid("B3:").canonical(), "B3:");
  EXPECT_TRUE(parse_braid("B3:").empty());
}

TEST(ParseBraid, CanonicalRoundTrip) {
  for (const char* text : {"s1^3", "s1 s2^-1 s1 s2^-1", "B5: s4^-2 s1", "B2:"}) {
    const BraidWord w = parse_braid(text);
    EXPECT_EQ(parse_braid(w.canonical()), w) << text;
  }
}

TEST(ParseBraid, Errors) {
  EXPECT_THROW(parse_braid(""), ParseError);
  EXPECT_THROW(parse_braid("s0"), ParseError);
  EXPECT_THROW(parse_braid("s1^0"), ParseError);
  EXPECT_THROW(parse_braid("s1^"), ParseError);
  EXPECT_THROW(parse_braid("x1"), ParseError);
  EXPECT_THROW(parse_braid("B2: s2"), ParseError);
  EXPECT_THROW(parse_braid("B1: s1"), ParseError);
  EXPECT_THROW(parse_braid("s1^99999999999"), ParseError);
  try {
    parse_braid("s1 s2 q");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 6u);
  }
}

TEST(BraidWord, Validation) {
  EXPECT_THROW(BraidWord(1, {}), StructuralError);
  EXPECT_THROW(BraidWord(3, {Letter{3, Sign::kPositive}}), StructuralError);
  EXPECT_THROW(BraidWord(3, {Letter{0, Sign::kPositive}}), StructuralError);
}

TEST(BraidOps, Mirror) {
  EXPECT_EQ(mirror(parse_braid("s1^3 s2^-1")), parse_braid("s1^-3 s2"));
}

TEST(BraidOps, MarkovMoves) {
  const BraidWord w = parse_braid("s1^3");
  EXPECT_EQ(markov_conjugate(w, Letter{1, Sign::kPositive}), parse_braid("s1^-1 s1^3 s1"));
  const BraidWord st = markov_stabilize(w, Sign::kNegative);
  EXPECT_EQ(st.strands(), 3u);
  EXPECT_EQ(st.canonical(), "B3: s1^3 s2^-1");
  EXPECT_THROW(markov_conjugate(w, Letter{2, Sign::kPositive}), StructuralError);
}

TEST(BraidOps, AppendPower) {
  std::vector<Letter> letters;
  append_power(letters, 2, -3);
  append_power(letters, 1, 2);
  EXPECT_EQ(BraidWord(3, letters).canonical(), "B3: s2^-3 s1^2");
}

}  // namespace
}  // namespace qcjkls
