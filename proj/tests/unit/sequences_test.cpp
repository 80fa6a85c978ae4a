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

#include <cmath>

#include "qcjkls/error.hpp"
#include "qcjkls/invariant.hpp"
#include "qcjkls/sequences.hpp"

namespace qcjkls {
namespace {

const double kLn2 = std::log(2.0);

TEST(FamilyId, ParseAndPrint) {
  EXPECT_EQ(parse_family("Kn").to_string(), "Kn");
  EXPECT_EQ(parse_family("K'").kind, FamilyKind::kKPrime);
  EXPECT_EQ(parse_family("Km:2").m, 2u);
  EXPECT_EQ(parse_family("Km", 3).to_string(), "Km:3");
  EXPECT_EQ(parse_family("KPrimeM:1").block_exponent(), 9u);
  EXPECT_THROW(parse_family("Km"), DomainError);
  EXPECT_THROW(parse_family("Kx"), ParseError);
  EXPECT_THROW(parse_family("Km:two"), ParseError);
  EXPECT_EQ(parse_family("Kn", 5).m, 0u);
}

TEST(FamilyBraid, SmallWords) {
  EXPECT_EQ(family_braid(parse_family("Kn"), 1).canonical(), "B2: s1^3");
  EXPECT_EQ(family_braid(parse_family("Kn"), 2).canonical(), "B3: s2^-3 s1^3 s2^-3");
  EXPECT_EQ(family_braid(parse_family("KPrime"), 3).canonical(), "B4: s3^3 s2^-3 s1^3 s3^3 s2^-3 s3^3");
  EXPECT_EQ(family_braid(parse_family("KPrime"), 4).canonical(),
            "B5: s4^-3 s3^3 s2^-3 s1^3 s3^3 s2^-3 s3^3 s4^-3");
  EXPECT_EQ(family_braid(parse_family("K0"), 1).canonical(), "B2: s1^3");
  EXPECT_EQ(family_braid(parse_family("K0"), 2).canonical(), "B4: s1^-3 s3^-3 s2^3 s1^-3 s3^-3");
  EXPECT_EQ(family_braid(parse_family("Km:1"), 1).canonical(), "B2: s1^9");
  EXPECT_THROW(family_braid(parse_family("Kn"), 0), DomainError);
}

TEST(FamilyBraid, LetterCountIsCrossingNumber) {
  for (const char* id : {"Kn", "KPrime", "K0", "Km:1", "Km:3", "KPrimeM:2"})
    for (std::uint32_t n = 1; n <= 20; ++n) {
      const FamilyId f = parse_family(id);
      EXPECT_EQ(family_braid(f, n).size(), family_crossing_number(f, n)) << id << " " << n;
    }
  EXPECT_EQ(family_crossing_number(parse_family("KPrime"), 7), 48u);
  EXPECT_EQ(family_crossing_number(parse_family("KPrime"), 8), 54u);
  EXPECT_EQ(family_crossing_number(parse_family("K0"), 4), 57u);
}

TEST(BinomialSums, SmallValuesAndIdentity) {
  EXPECT_EQ(binomial_sums(1), (std::pair<BigInt, BigInt>{1, 3}));
  EXPECT_EQ(binomial_sums(2), (std::pair<BigInt, BigInt>{10, 6}));
  EXPECT_EQ(binomial_sums(3), (std::pair<BigInt, BigInt>{28, 36}));
  for (std::uint32_t m = 0; m <= 60; ++m) {
    const auto [e, o] = binomial_sums(m);
    EXPECT_EQ(e + o, big_pow(4, m));
    // (1+3)^m + (1-3)^m = 2 S^e.
    const BigInt minus_two = (m % 2 ? -1 : 1) * (BigInt(1) << m);
    EXPECT_EQ(2 * e, big_pow(4, m) + minus_two);
  }
}

TEST(ClosedZ, MatchesBruteForce) {
  const Cocycle phi = build_s4_cocycle();
  const std::vector<std::pair<const char*, std::uint32_t>> cases{
      {"Kn", 5}, {"KPrime", 5}, {"K0", 3}, {"Km:1", 3}, {"KPrimeM:1", 3}, {"Km:2", 2}};
  for (const auto& [id, max_n] : cases)
    for (std::uint32_t n = 1; n <= max_n; ++n) {
      const FamilyId f = parse_family(id);
      EXPECT_EQ(cjkls_state_sum(family_braid(f, n), phi), family_closed_Z(f, n)) << id << " " << n;
    }
}

TEST(ClosedZ, KnownValues) {
  EXPECT_EQ(family_closed_Z(parse_family("KPrime"), 3).to_string(), "160 + 96t");
  EXPECT_EQ(family_closed_Z(parse_family("KPrime"), 4).to_string(), "640 + 384t");
  EXPECT_EQ(family_closed_Z(parse_family("KPrime"), 5).to_string(), "1792 + 2304t");
  EXPECT_EQ(family_closed_Z(parse_family("K0"), 2).to_string(), "64 + 192t");
}

TEST(ClosedF, AgreesWithFreeEnergyOfClosedZ) {
  for (const char* id : {"Kn", "KPrime", "K0", "Km:2", "KPrimeM:3"})
    for (std::uint32_t n : {1u, 2u, 3u, 10u, 51u, 200u}) {
      const FamilyId f = parse_family(id);
      const FVector direct = f_invariant(family_closed_Z(f, n), family_crossing_number(f, n));
      const FVector closed = family_closed_f(f, n);
      ASSERT_EQ(closed.dimension(), 2u);
      for (std::size_t k = 0; k < 2; ++k) EXPECT_NEAR(closed.coords[k], direct.coords[k], 1e-12) << id << " " << n;
    }
}

TEST(ClosedF, TrefoilValue) {
  const FVector f = family_closed_f(parse_family("Kn"), 1);
  EXPECT_NEAR(f.coords[0], 2 * kLn2 / 3, 1e-15);
  EXPECT_NEAR(f.coords[1], (2 * kLn2 + std::log(3.0)) / 3, 1e-15);
}

TEST(FamilyPoint, Bundles) {
  const FamilyPoint p = family_point(parse_family("K0"), 2);
  EXPECT_EQ(p.closed_c, 15u);
  EXPECT_EQ(p.braid.strands(), 4u);
  EXPECT_EQ(p.closed_z.coefficient_sum(), 256);
}

}  // namespace
}  // namespace qcjkls
