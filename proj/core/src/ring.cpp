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

#include "qcjkls/ring.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <numeric>

#include "qcjkls/error.hpp"

namespace qcjkls {

std::uint32_t mod_reduce(std::int64_t a, std::uint32_t n) {
  const std::int64_t m = static_cast<std::int64_t>(n);
  std::int64_t r = a % m;
  if (r < 0) r += m;
  return static_cast<std::uint32_t>(r);
}

std::optional<std::uint32_t> mod_inverse(std::uint64_t a, std::uint32_t n) {
  std::int64_t old_r = static_cast<std::int64_t>(a % n), r = n;
  std::int64_t old_s = 1, s = 0;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    std::tie(old_r, r) = std::pair{r, old_r - q * r};
    std::tie(old_s, s) = std::pair{s, old_s - q * s};
  }
  if (old_r != 1) return std::nullopt;
  return mod_reduce(old_s, n);
}

// ---------------------------------------------------------------------------
// Polynomial text parser.

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : text_(text) {}

  std::vector<std::int64_t> parse() {
    std::vector<std::int64_t> coeffs;
    skip_ws();
    if (at_end()) throw ParseError("empty polynomial", pos_);
    bool first = true;
    while (!at_end()) {
      std::int64_t sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_ws();
      } else if (!first) {
        throw ParseError("expected '+' or '-' between terms", pos_);
      }
      first = false;
      auto [coeff, exponent] = term();
      if (coeffs.size() <= exponent) coeffs.resize(exponent + 1, 0);
      coeffs[exponent] += sign * coeff;
      skip_ws();
    }
    return coeffs;
  }

 private:
  std::pair<std::int64_t, std::size_t> term() {
    const std::size_t start = pos_;
    std::optional<std::int64_t> coeff;
    if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = integer();
      skip_ws();
      if (!at_end() && peek() == '*') {
        ++pos_;
        skip_ws();
        if (at_end() || !is_var(peek())) throw ParseError("expected variable after '*'", pos_);
      }
    }
    std::size_t exponent = 0;
    if (!at_end() && is_var(peek())) {
      ++pos_;
      exponent = 1;
      skip_ws();
      if (!at_end() && peek() == '^') {
        ++pos_;
        skip_ws();
        if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
          throw ParseError("expected exponent after '^'", pos_);
        exponent = static_cast<std::size_t>(integer());
        if (exponent > 64) throw ParseError("exponent too large", pos_);
      }
    } else if (!coeff) {
      throw ParseError("expected a term", start);
    }
    return {coeff.value_or(1), exponent};
  }

  std::int64_t integer() {
    std::int64_t value = 0;
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      if (value > (std::numeric_limits<std::int64_t>::max() - 9) / 10)
        throw ParseError("integer too large", start);
      value = value * 10 + (peek() - '0');
      ++pos_;
    }
    return value;
  }

  static bool is_var(char c) { return c == 'T' || c == 't' || c == 'x' || c == 'X'; }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::vector<std::int64_t> parse_polynomial(std::string_view text) {
  return PolyParser(text).parse();
}

// ---------------------------------------------------------------------------
// QuotientRing

QuotientRing::QuotientRing(const AlexanderQuandleSpec& spec, std::size_t max_size)
    : spec_(spec), modulus_(spec.modulus) {
  if (modulus_ < 2) throw DomainError("coefficient modulus must be at least 2");
  std::vector<std::uint32_t> reduced;
  reduced.reserve(spec.poly.size());
  for (auto c : spec.poly) reduced.push_back(mod_reduce(c, modulus_));
  while (!reduced.empty() && reduced.back() == 0) reduced.pop_back();
  if (reduced.empty()) throw DomainError("quotient polynomial is zero mod " + std::to_string(modulus_));

  const auto lead_inv = mod_inverse(reduced.back(), modulus_);
  if (!lead_inv) {
    throw DomainError("leading coefficient " + std::to_string(reduced.back()) +
                      " is not a unit mod " + std::to_string(modulus_));
  }
  degree_ = reduced.size() - 1;
  monic_.resize(degree_);
  for (std::size_t i = 0; i < degree_; ++i)
    monic_[i] = static_cast<std::uint32_t>((std::uint64_t{reduced[i]} * *lead_inv) % modulus_);

  std::size_t size = 1;
  for (std::size_t i = 0; i < degree_; ++i) {
    if (size > max_size / modulus_) {
      throw CapacityError("ring Z_" + std::to_string(modulus_) + "[T]/(p) of degree " +
                          std::to_string(degree_) + " exceeds the table budget of " +
                          std::to_string(max_size) + " elements");
    }
    size *= modulus_;
  }
  if (size > max_size) throw CapacityError("ring exceeds the table budget");
  size_ = size;
}

Element QuotientRing::one() const noexcept { return degree_ == 0 ? 0 : 1; }

Element QuotientRing::variable() const noexcept {
  if (degree_ == 0) return 0;
  if (degree_ == 1) return (modulus_ - monic_[0]) % modulus_;
  return modulus_;
}

std::vector<std::uint32_t> QuotientRing::coefficients(Element a) const {
  std::vector<std::uint32_t> out(degree_);
  for (std::size_t i = 0; i < degree_; ++i) {
    out[i] = a % modulus_;
    a /= modulus_;
  }
  return out;
}

Element QuotientRing::encode(std::span<const std::uint32_t> coeffs) const {
  Element out = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) out = out * modulus_ + coeffs[i] % modulus_;
  return out;
}

std::vector<std::uint32_t> QuotientRing::reduce(std::vector<std::uint64_t> poly) const {
  for (auto& c : poly) c %= modulus_;
  for (std::size_t k = poly.size(); k-- > degree_;) {
    const std::uint64_t c = poly[k];
    if (c == 0) continue;
    poly[k] = 0;
    for (std::size_t i = 0; i < degree_; ++i) {
      const std::uint64_t sub = (c * monic_[i]) % modulus_;
      auto& slot = poly[k - degree_ + i];
      slot = (slot + modulus_ - sub) % modulus_;
    }
  }
  std::vector<std::uint32_t> out(degree_, 0);
  for (std::size_t i = 0; i < degree_ && i < poly.size(); ++i) out[i] = static_cast<std::uint32_t>(poly[i]);
  return out;
}

Element QuotientRing::add(Element a, Element b) const {
  auto ca = coefficients(a);
  const auto cb = coefficients(b);
  for (std::size_t i = 0; i < degree_; ++i) ca[i] = (ca[i] + cb[i]) % modulus_;
  return encode(ca);
}

Element QuotientRing::neg(Element a) const {
  auto ca = coefficients(a);
  for (auto& c : ca) c = (modulus_ - c) % modulus_;
  return encode(ca);
}

Element QuotientRing::sub(Element a, Element b) const { return add(a, neg(b)); }

Element QuotientRing::mul(Element a, Element b) const {
  if (degree_ == 0) return 0;
  const auto ca = coefficients(a);
  const auto cb = coefficients(b);
  std::vector<std::uint64_t> prod(2 * degree_ - 1, 0);
  for (std::size_t i = 0; i < degree_; ++i) {
    if (ca[i] == 0) continue;
    for (std::size_t j = 0; j < degree_; ++j)
      prod[i + j] = (prod[i + j] + std::uint64_t{ca[i]} * cb[j]) % modulus_;
  }
  return encode(reduce(std::move(prod)));
}

std::optional<Element> QuotientRing::inverse(Element a) const {
  const Element unit = one();
  for (Element x = 0; x < size_; ++x) {
    if (mul(a, x) == unit) return x;
  }
  return std::nullopt;
}

std::string QuotientRing::label(Element a) const {
  const auto c = coefficients(a);
  std::string out;
  for (std::size_t k = degree_; k-- > 0;) {
    if (c[k] == 0) continue;
    if (!out.empty()) out += '+';
    if (k == 0) {
      out += std::to_string(c[k]);
      continue;
    }
    if (c[k] != 1) out += std::to_string(c[k]);
    out += 'T';
    if (k > 1) out += '^' + std::to_string(k);
  }
  return out.empty() ? "0" : out;
}

}  // namespace qcjkls
