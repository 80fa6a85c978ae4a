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

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace qcjkls {

using BigInt = boost::multiprecision::cpp_int;

/// Natural log extended to zero: ln(0) := 0. Accurate for values far beyond
/// the double range. Throws DomainError on negative input.
double extended_log(const BigInt& value);

/// base^exponent for a small base.
BigInt big_pow(unsigned base, unsigned exponent);

std::string to_decimal(const BigInt& value);

/// Parses a non-negative decimal integer; throws ParseError otherwise.
BigInt parse_decimal(std::string_view text);

}  // namespace qcjkls
