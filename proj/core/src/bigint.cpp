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

#include "qcjkls/bigint.hpp"

#include <cmath>
#include <numbers>

#include "qcjkls/error.hpp"

namespace qcjkls {

double extended_log(const BigInt& value) {
  if (value < 0) throw DomainError("extended_log of a negative integer");
  if (value == 0) return 0.0;
  // Keep the top 64 bits as the mantissa so huge values never overflow.
  const unsigned bits = boost::multiprecision::msb(value) + 1;
  if (bits <= 64) return std::log(static_cast<double>(static_cast<unsigned long long>(value)));
  const unsigned shift = bits - 64;
  const BigInt top = value >> shift;
  const double mantissa = static_cast<double>(static_cast<unsigned long long>(top));
  return std::log(mantissa) + static_cast<double>(shift) * std::numbers::ln2;
}

BigInt big_pow(unsigned base, unsigned exponent) {
  return boost::multiprecision::pow(BigInt(base), exponent);
}

std::string to_decimal(const BigInt& value) { return value.str(); }

BigInt parse_decimal(std::string_view text) {
  if (text.empty()) throw ParseError("expected a decimal integer", 0);
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') throw ParseError("invalid digit in decimal integer", i);
  }
  return BigInt(std::string(text));
}

}  // namespace qcjkls
