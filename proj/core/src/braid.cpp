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

#include "qcjkls/braid.hpp"

#include <algorithm>
#include <cctype>
#include <optional>

#include "qcjkls/error.hpp"

namespace qcjkls {

namespace {

constexpr std::int64_t kMaxExponent = 1'000'000;
constexpr std::uint64_t kMaxIndex = 1'000'000;

class BraidParser {
 public:
  explicit BraidParser(std::string_view text) : text_(text) {}

  BraidWord parse() {
    skip_ws();
    std::optional<std::uint32_t> strands;
    std::size_t strands_pos = 0;
    if (!at_end() && (peek() == 'B' || peek() == 'b')) {
      strands_pos = pos_;
      ++pos_;
      const auto s = integer("strand count");
      if (s < 2) throw ParseError("a braid needs at least 2 strands", strands_pos);
      strands = static_cast<std::uint32_t>(s);
      skip_ws();
      if (at_end() || peek() != ':') throw ParseError("expected ':' after strand count", pos_);
      ++pos_;
    }

    std::vector<Letter> letters;
    std::uint32_t max_index = 0;
    std::size_t max_index_pos = 0;
    bool first = true;
    while (true) {
      const std::size_t before = pos_;
      skip_ws();
      if (at_end()) break;
      if (!first && before == pos_) throw ParseError("expected whitespace between generators", pos_);
      first = false;
      const std::size_t item_pos = pos_;
      if (peek() != 's' && peek() != 'S') throw ParseError("expected generator 's<i>'", pos_);
      ++pos_;
      const auto index = integer("generator index");
      if (index == 0) throw ParseError("generator indices start at 1", item_pos);
      std::int64_t exponent = 1;
      if (!at_end() && peek() == '^') {
        ++pos_;
        const std::size_t exp_pos = pos_;
        exponent = signed_integer();
        if (exponent == 0) throw ParseError("zero exponent is not allowed", exp_pos);
      }
      if (index > max_index) {
        max_index = static_cast<std::uint32_t>(index);
        max_index_pos = item_pos;
      }
      append_power(letters, static_cast<std::uint32_t>(index), exponent);
    }

    if (!strands) {
      if (letters.empty()) throw ParseError("empty braid word needs an explicit 'B<s>:' prefix", pos_);
      strands = max_index + 1;
    } else if (max_index >= *strands) {
      throw ParseError("generator s" + std::to_string(max_index) + " needs at least " +
                           std::to_string(max_index + 1) + " strands, braid has " +
                           std::to_string(*strands),
                       max_index_pos);
    }
    return BraidWord(*strands, std::move(letters));
  }

 private:
  std::uint64_t integer(const char* what) {
    if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
      throw ParseError(std::string("expected ") + what, pos_);
    const std::size_t start = pos_;
    std::uint64_t value = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      value = value * 10 + static_cast<std::uint64_t>(peek() - '0');
      if (value > kMaxIndex) throw ParseError(std::string(what) + " too large", start);
      ++pos_;
    }
    return value;
  }

  std::int64_t signed_integer() {
    std::int64_t sign = 1;
    if (!at_end() && (peek() == '-' || peek() == '+')) {
      sign = peek() == '-' ? -1 : 1;
      ++pos_;
    }
    const std::size_t start = pos_;
    const auto magnitude = integer("exponent");
    if (static_cast<std::int64_t>(magnitude) > kMaxExponent) throw ParseError("exponent too large", start);
    return sign * static_cast<std::int64_t>(magnitude);
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

BraidWord::BraidWord(std::uint32_t strands, std::vector<Letter> letters)
    : strands_(strands), letters_(std::move(letters)) {
  if (strands_ < 2) throw StructuralError("a braid needs at least 2 strands");
  for (const auto& l : letters_) {
    if (l.index < 1 || l.index >= strands_)
      throw StructuralError("generator s" + std::to_string(l.index) + " is out of range for B_" +
                            std::to_string(strands_));
  }
}

std::string BraidWord::canonical() const {
  std::string out = "B" + std::to_string(strands_) + ":";
  std::size_t i = 0;
  while (i < letters_.size()) {
    std::size_t j = i;
    while (j < letters_.size() && letters_[j] == letters_[i]) ++j;
    const auto run = static_cast<std::int64_t>(j - i);
    out += " s" + std::to_string(letters_[i].index) + "^" +
           std::to_string(letters_[i].sign == Sign::kPositive ? run : -run);
    i = j;
  }
  return out;
}

void append_power(std::vector<Letter>& letters, std::uint32_t index, std::int64_t exponent) {
  const Sign sign = exponent > 0 ? Sign::kPositive : Sign::kNegative;
  const auto count = static_cast<std::size_t>(exponent > 0 ? exponent : -exponent);
  letters.insert(letters.end(), count, Letter{index, sign});
}

BraidWord parse_braid(std::string_view text) { return BraidParser(text).parse(); }

BraidWord mirror(const BraidWord& w) {
  std::vector<Letter> letters = w.letters();
  for (auto& l : letters) l.sign = -l.sign;
  return BraidWord(w.strands(), std::move(letters));
}

BraidWord markov_conjugate(const BraidWord& w, Letter g) {
  if (g.index < 1 || g.index >= w.strands())
    throw StructuralError("conjugating generator s" + std::to_string(g.index) + " is out of range");
  std::vector<Letter> letters;
  letters.reserve(w.size() + 2);
  letters.push_back({g.index, -g.sign});
  letters.insert(letters.end(), w.letters().begin(), w.letters().end());
  letters.push_back(g);
  return BraidWord(w.strands(), std::move(letters));
}

BraidWord markov_stabilize(const BraidWord& w, Sign sign) {
  std::vector<Letter> letters = w.letters();
  letters.push_back({w.strands(), sign});
  return BraidWord(w.strands() + 1, std::move(letters));
}

}  // namespace qcjkls
