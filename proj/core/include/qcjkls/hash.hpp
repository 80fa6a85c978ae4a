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

namespace qcjkls {

/// 64-bit FNV-1a, used for cache keys. Not collision resistant against
/// adversarial input.
class Fnv1a {
 public:
  void add_byte(std::uint8_t b) noexcept {
    state_ ^= b;
    state_ *= 0x100000001b3ULL;
  }
  void add_u64(std::uint64_t v) noexcept {
    for (int i = 0; i < 8; ++i) add_byte(static_cast<std::uint8_t>(v >> (8 * i)));
  }
  void add_string(std::string_view s) noexcept {
    add_u64(s.size());
    for (char c : s) add_byte(static_cast<std::uint8_t>(c));
  }
  std::uint64_t value() const noexcept { return state_; }
  std::string hex() const {
    static constexpr char kDigits[] = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 0; i < 16; ++i) out[15 - i] = kDigits[(state_ >> (4 * i)) & 0xF];
    return out;
  }

 private:
  std::uint64_t state_ = 0xcbf29ce484222325ULL;
};

}  // namespace qcjkls
