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

#include "qcjkls/sequences.hpp"

#include <charconv>
#include <cmath>
#include <memory>
#include <numbers>

#include "qcjkls/error.hpp"

namespace qcjkls {

namespace {

constexpr double kLn2 = std::numbers::ln2;
const double kLn3 = std::log(3.0);

bool is_kn_like(FamilyKind k) { return k == FamilyKind::kKn || k == FamilyKind::kKm; }
bool is_kprime_like(FamilyKind k) { return k == FamilyKind::kKPrime || k == FamilyKind::kKPrimeM; }

// Blocks alternate in sign with the generator index: odd indices positive.
Sign alternating_sign(std::uint32_t index) { return index % 2 == 1 ? Sign::kPositive : Sign::kNegative; }

void push_block(std::vector<Letter>& letters, std::uint32_t index, Sign sign, std::uint32_t exponent) {
  letters.insert(letters.end(), exponent, Letter{index, sign});
}

std::vector<Letter> kn_letters(std::uint32_t n, std::uint32_t e) {
  std::vector<Letter> out;
  for (std::uint32_t k = n; k >= 1; --k) push_block(out, k, alternating_sign(k), e);
  for (std::uint32_t k = 2; k <= n; ++k) push_block(out, k, alternating_sign(k), e);
  return out;
}

std::vector<Letter> kprime_letters(std::uint32_t n, std::uint32_t e) {
  if (n <= 2) return kn_letters(n, e);
  if (n % 2 == 0) {
    std::vector<Letter> out;
    push_block(out, n, alternating_sign(n), e);
    const auto inner = kprime_letters(n - 1, e);
    out.insert(out.end(), inner.begin(), inner.end());
    push_block(out, n, alternating_sign(n), e);
    return out;
  }
  // n = 2i+1: descending run n..1, then the odd indices 3, 5, ..., n, then
  // the ascending run 2..n.
  std::vector<Letter> out;
  for (std::uint32_t k = n; k >= 1; --k) push_block(out, k, alternating_sign(k), e);
  for (std::uint32_t k = 3; k <= n; k += 2) push_block(out, k, alternating_sign(k), e);
  for (std::uint32_t k = 2; k <= n; ++k) push_block(out, k, alternating_sign(k), e);
  return out;
}

// Layer j (1 <= j < n) holds indices j, j+2, ..., 2n-j. The word is
// layers 1..n-1, the single middle block s_n, then layers n-1..1 again.
std::vector<Letter> k0_letters(std::uint32_t n, std::uint32_t e) {
  auto sign_of = [n](std::uint32_t k) { return (k + n) % 2 == 0 ? Sign::kPositive : Sign::kNegative; };
  std::vector<std::vector<std::uint32_t>> layers;
  for (std::uint32_t j = 1; j < n; ++j) {
    std::vector<std::uint32_t> layer;
    for (std::uint32_t k = j; k <= 2 * n - j; k += 2) layer.push_back(k);
    layers.push_back(std::move(layer));
  }
  std::vector<Letter> out;
  for (const auto& layer : layers)
    for (auto k : layer) push_block(out, k, sign_of(k), e);
  push_block(out, n, sign_of(n), e);
  for (auto it = layers.rbegin(); it != layers.rend(); ++it)
    for (auto k : *it) push_block(out, k, sign_of(k), e);
  return out;
}

void require_n(std::uint32_t n) {
  if (n == 0) throw DomainError("family index n must be at least 1");
}

}  // namespace

FamilyId FamilyId::make(FamilyKind kind, std::uint32_t m) {
  FamilyId id{kind, m};
  if (id.parametrized() && m == 0) throw DomainError(id.kind_name() + " needs m >= 1");
  if (!id.parametrized()) id.m = 0;
  return id;
}

std::uint32_t FamilyId::block_exponent() const noexcept { return parametrized() ? 3 * (2 * m + 1) : 3; }

std::string FamilyId::kind_name() const {
  switch (kind) {
    case FamilyKind::kKn: return "Kn";
    case FamilyKind::kKPrime: return "KPrime";
    case FamilyKind::kK0: return "K0";
    case FamilyKind::kKm: return "Km";
    case FamilyKind::kKPrimeM: return "KPrimeM";
  }
  return "?";
}

std::string FamilyId::to_string() const {
  return parametrized() ? kind_name() + ":" + std::to_string(m) : kind_name();
}

FamilyId parse_family(std::string_view text, std::uint32_t m) {
  std::string_view name = text;
  if (const auto colon = text.find(':'); colon != std::string_view::npos) {
    name = text.substr(0, colon);
    const auto digits = text.substr(colon + 1);
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), m);
    if (ec != std::errc{} || ptr != digits.data() + digits.size())
      throw ParseError("invalid m in family id '" + std::string(text) + "'", colon + 1);
  }
  FamilyKind kind;
  if (name == "Kn" || name == "K")
    kind = FamilyKind::kKn;
  else if (name == "KPrime" || name == "K'" || name == "Kp")
    kind = FamilyKind::kKPrime;
  else if (name == "K0")
    kind = FamilyKind::kK0;
  else if (name == "Km")
    kind = FamilyKind::kKm;
  else if (name == "KPrimeM" || name == "K'm" || name == "Kpm")
    kind = FamilyKind::kKPrimeM;
  else
    throw ParseError("unknown family '" + std::string(name) + "' (expected Kn, KPrime, K0, Km, KPrimeM)", 0);
  return FamilyId::make(kind, m);
}

BraidWord family_braid(FamilyId family, std::uint32_t n) {
  require_n(n);
  const std::uint32_t e = family.block_exponent();
  switch (family.kind) {
    case FamilyKind::kKn:
    case FamilyKind::kKm: return BraidWord(n + 1, kn_letters(n, e));
    case FamilyKind::kKPrime:
    case FamilyKind::kKPrimeM: return BraidWord(n + 1, kprime_letters(n, e));
    case FamilyKind::kK0:
      // b^0_1 is the trefoil braid in B_2.
      return BraidWord(2 * n, k0_letters(n, e));
  }
  throw DomainError("unknown family");
}

std::uint64_t family_crossing_number(FamilyId family, std::uint32_t n) {
  require_n(n);
  const std::uint64_t N = n;
  const std::uint64_t scale = family.parametrized() ? 2 * std::uint64_t{family.m} + 1 : 1;
  if (is_kn_like(family.kind)) return 3 * scale * (2 * N - 1);
  if (is_kprime_like(family.kind)) return (N % 2 == 1 ? (15 * N - 9) / 2 : (15 * N - 12) / 2) * scale;
  return 3 * N * N + 3 * N - 3;
}

std::pair<BigInt, BigInt> binomial_sums(std::uint32_t m) {
  BigInt even = 0, odd = 0;
  BigInt binom = 1;  // C(m, k)
  BigInt power = 1;  // 3^k
  for (std::uint32_t k = 0; k <= m; ++k) {
    (k % 2 == 0 ? even : odd) += binom * power;
    binom = binom * (m - k) / (k + 1);
    power *= 3;
  }
  return {even, odd};
}

const GroupPtr& z2_group() {
  static const GroupPtr group = std::make_shared<const AbelianGroup>(AbelianGroup::cyclic(2));
  return group;
}

GroupAlgebraElement family_closed_Z(FamilyId family, std::uint32_t n) {
  require_n(n);
  auto one_plus_three_t = [](const BigInt& scale) {
    return GroupAlgebraElement(z2_group(), {scale, 3 * scale});
  };
  if (is_kn_like(family.kind)) return one_plus_three_t(big_pow(4, n));
  if (family.kind == FamilyKind::kK0) return one_plus_three_t(big_pow(4, 2 * n - 1));
  const bool odd = n % 2 == 1;
  const std::uint32_t pairs = odd ? (n + 1) / 2 : n / 2;
  const BigInt scale = big_pow(4, odd ? pairs : pairs + 1);
  const auto [even_sum, odd_sum] = binomial_sums(pairs);
  return GroupAlgebraElement(z2_group(), {scale * even_sum, scale * odd_sum});
}

FVector family_closed_f(FamilyId family, std::uint32_t n) {
  require_n(n);
  const double N = n;
  const double c = static_cast<double>(family_crossing_number(family, n));
  if (is_kn_like(family.kind)) return FVector{{2 * N * kLn2 / c, (2 * N * kLn2 + kLn3) / c}};
  if (family.kind == FamilyKind::kK0)
    return FVector{{(4 * N - 2) * kLn2 / c, ((4 * N - 2) * kLn2 + kLn3) / c}};
  const bool odd = n % 2 == 1;
  const std::uint32_t pairs = odd ? (n + 1) / 2 : n / 2;
  const double fours = odd ? pairs : pairs + 1;  // exponent of 4
  const auto [even_sum, odd_sum] = binomial_sums(pairs);
  return FVector{{(2 * fours * kLn2 + extended_log(even_sum)) / c, (2 * fours * kLn2 + extended_log(odd_sum)) / c}};
}

FamilyPoint family_point(FamilyId family, std::uint32_t n) {
  return FamilyPoint{family,
                     n,
                     family_braid(family, n),
                     family_closed_Z(family, n),
                     family_crossing_number(family, n),
                     family_closed_f(family, n)};
}

}  // namespace qcjkls
