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
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qcjkls {

/// Index of a quandle element. For Alexander quandles this is the residue
/// polynomial c_0 + c_1 T + ... encoded as sum(c_i * modulus^i).
using Element = std::uint32_t;

/// Largest ring (and hence quandle) that may be tabulated.
inline constexpr std::size_t kDefaultMaxQuandleSize = 1024;

/// Z_n[T, T^-1] / (p(T)). `poly` holds coefficients in ascending degree
/// order (poly[0] is the constant term); entries may be negative and are
/// reduced mod `modulus`.
struct AlexanderQuandleSpec {
  std::uint32_t modulus = 0;
  std::vector<std::int64_t> poly;

  friend bool operator==(const AlexanderQuandleSpec&, const AlexanderQuandleSpec&) = default;
};

/// Parses "T^2+T+1", "T-2", "2T^3 - T + 1", "x^2+x+1" into ascending
/// coefficients. Throws ParseError.
std::vector<std::int64_t> parse_polynomial(std::string_view text);

/// Finite quotient ring Z_n[T]/(p) with a canonical residue representation.
/// Immutable after construction.
class QuotientRing {
 public:
  /// Throws DomainError if the modulus is < 2 or the leading coefficient of p
  /// is not a unit mod n; CapacityError if n^deg(p) exceeds `max_size`.
  explicit QuotientRing(const AlexanderQuandleSpec& spec,
                        std::size_t max_size = kDefaultMaxQuandleSize);

  std::uint32_t modulus() const noexcept { return modulus_; }
  std::size_t degree() const noexcept { return degree_; }
  std::size_t size() const noexcept { return size_; }
  const AlexanderQuandleSpec& spec() const noexcept { return spec_; }

  Element zero() const noexcept { return 0; }
  Element one() const noexcept;
  /// The class of T.
  Element variable() const noexcept;

  Element add(Element a, Element b) const;
  Element sub(Element a, Element b) const;
  Element neg(Element a) const;
  Element mul(Element a, Element b) const;
  std::optional<Element> inverse(Element a) const;

  /// Residue coefficients c_0..c_{deg-1}.
  std::vector<std::uint32_t> coefficients(Element a) const;
  Element encode(std::span<const std::uint32_t> coeffs) const;

  /// Canonical label, highest degree first: "0", "1", "T", "T+1", "2T^2+T".
  std::string label(Element a) const;

 private:
  std::vector<std::uint32_t> reduce(std::vector<std::uint64_t> poly) const;

  AlexanderQuandleSpec spec_;
  std::uint32_t modulus_ = 0;
  std::size_t degree_ = 0;
  std::size_t size_ = 0;
  /// Monic reduction rule: T^deg = -sum_{i<deg} monic_[i] T^i.
  std::vector<std::uint32_t> monic_;
};

/// Modular helpers on Z_n.
std::optional<std::uint32_t> mod_inverse(std::uint64_t a, std::uint32_t n);
std::uint32_t mod_reduce(std::int64_t a, std::uint32_t n);

}  // namespace qcjkls
