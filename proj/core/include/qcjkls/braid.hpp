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
#include <vector>

namespace qcjkls {

enum class Sign : std::int8_t { kPositive = 1, kNegative = -1 };

constexpr Sign operator-(Sign s) noexcept {
  return s == Sign::kPositive ? Sign::kNegative : Sign::kPositive;
}

/// sigma_index^sign. `index` is 1-based: sigma_i crosses strands i and i+1.
struct Letter {
  std::uint32_t index = 1;
  Sign sign = Sign::kPositive;

  friend bool operator==(const Letter&, const Letter&) = default;
};

/// Word in the braid group B_s, exponents flattened into repeated letters.
class BraidWord {
 public:
  /// Throws StructuralError if strands < 2 or a letter index is not in
  /// [1, strands - 1].
  BraidWord(std::uint32_t strands, std::vector<Letter> letters);

  std::uint32_t strands() const noexcept { return strands_; }
  const std::vector<Letter>& letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }

  /// "B<s>: s<i>^<e> ..." with maximal runs grouped, e.g. "B2: s1^3".
  std::string canonical() const;

  friend bool operator==(const BraidWord&, const BraidWord&) = default;

 private:
  std::uint32_t strands_;
  std::vector<Letter> letters_;
};

/// Appends sigma_index^exponent as |exponent| letters.
void append_power(std::vector<Letter>& letters, std::uint32_t index, std::int64_t exponent);

/// Grammar:
///   braid  := [ "B" INT ":" ] word
///   word   := item ( WS item )*
///   item   := "s" INT [ "^" SIGNEDINT ]
/// Strands default to 1 + max index. An empty word needs the "B<s>:" prefix.
/// Throws ParseError (with byte position) on syntax errors, a zero exponent
/// or an index >= strands.
BraidWord parse_braid(std::string_view text);

/// Negates every letter, order preserved.
BraidWord mirror(const BraidWord& w);

/// g^-1 w g. Throws StructuralError if g.index is out of range.
BraidWord markov_conjugate(const BraidWord& w, Letter g);

/// w sigma_s^sign in B_{s+1}.
BraidWord markov_stabilize(const BraidWord& w, Sign sign);

}  // namespace qcjkls
