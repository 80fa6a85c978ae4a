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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qcjkls {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text. `position()` is a 0-based byte offset into the input.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// A table, braid or file does not have the required shape.
class StructuralError : public Error {
 public:
  using Error::Error;
};

/// An algebraic precondition failed (non-invertible T, axiom violation, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A construction would exceed a size limit (ring too large for a table).
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// Brute-force enumeration would visit more tuples than the configured budget.
class BudgetError : public Error {
 public:
  using Error::Error;
};

}  // namespace qcjkls
