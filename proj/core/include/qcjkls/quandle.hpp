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
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qcjkls/ring.hpp"

namespace qcjkls {

/// Square operation table, row-major: table[a * size + b] = a op b.
struct OperationTable {
  std::size_t size = 0;
  std::vector<Element> cells;

  Element at(Element a, Element b) const { return cells[a * size + b]; }

  /// Builds from nested rows; throws StructuralError unless square with
  /// every entry in [0, size).
  static OperationTable from_rows(const std::vector<std::vector<std::int64_t>>& rows);
  std::vector<std::vector<Element>> rows() const;

  friend bool operator==(const OperationTable&, const OperationTable&) = default;
};

enum class Axiom {
  kIdempotence,         ///< a * a = a
  kRightInvertibility,  ///< b -> (x -> x * b) is a bijection
  kInverseTable,        ///< inv_op undoes op
  kSelfDistributivity,  ///< (a * b) * c = (a * c) * (b * c)
};

std::string to_string(Axiom axiom);

struct AxiomViolation {
  Axiom axiom;
  Element a = 0;
  Element b = 0;
  Element c = 0;

  friend bool operator==(const AxiomViolation&, const AxiomViolation&) = default;
};

struct AxiomReport {
  std::vector<AxiomViolation> violations;
  bool valid() const noexcept { return violations.empty(); }
};

/// Checks every axiom instance of a raw operation table. Right-invertibility
/// failures are reported as (b, a) = (column, value with no or several
/// preimages). Throws StructuralError on a malformed table.
AxiomReport verify_operation_table(const OperationTable& op);

/// Finite quandle with both operation tables stored eagerly. The
/// constructors enforce every quandle axiom, so a QuandleTable is always a
/// valid quandle.
class QuandleTable {
 public:
  /// Derives inv_op from `op`. Throws StructuralError for shape problems,
  /// DomainError (carrying the first violation) when an axiom fails.
  static QuandleTable from_operation(OperationTable op, std::vector<std::string> labels);

  /// As from_operation, additionally requiring `inv_op` to match the derived
  /// table exactly.
  static QuandleTable from_tables(OperationTable op, const OperationTable& inv_op,
                                  std::vector<std::string> labels);

  std::size_t size() const noexcept { return op_.size; }
  Element op(Element a, Element b) const { return op_.cells[a * op_.size + b]; }
  Element inv_op(Element a, Element b) const { return inv_op_.cells[a * op_.size + b]; }
  const OperationTable& op_table() const noexcept { return op_; }
  const OperationTable& inv_op_table() const noexcept { return inv_op_; }
  const std::string& label(Element a) const { return labels_.at(a); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::optional<Element> find_label(const std::string& label) const;

  /// Present when the table was produced by build_alexander_quandle.
  const std::optional<AlexanderQuandleSpec>& alexander_spec() const noexcept { return alexander_; }

  /// Stable 64-bit FNV-1a hash of size and op table, as 16 hex digits.
  std::string content_hash() const;

  friend bool operator==(const QuandleTable& x, const QuandleTable& y) {
    return x.op_ == y.op_ && x.labels_ == y.labels_;
  }

 private:
  QuandleTable() = default;

  OperationTable op_;
  OperationTable inv_op_;
  std::vector<std::string> labels_;
  std::optional<AlexanderQuandleSpec> alexander_;

  friend QuandleTable build_alexander_quandle(const AlexanderQuandleSpec&, std::size_t);
};

/// Full checker over a constructed quandle, including op/inv_op consistency.
AxiomReport verify_quandle_axioms(const QuandleTable& q);

/// a * b = T a + (1 - T) b over Z_n[T, T^-1]/(p). Elements are all residue
/// polynomials, ordered by their coefficient tuple read as a base-n number.
/// Throws DomainError when T is not invertible, CapacityError when the ring
/// is larger than `max_size`.
QuandleTable build_alexander_quandle(const AlexanderQuandleSpec& spec,
                                     std::size_t max_size = kDefaultMaxQuandleSize);

/// The four-element Alexander quandle Z_2[T, T^-1]/(T^2 + T + 1), element
/// order [0, 1, T, T+1].
QuandleTable build_s4();

/// Shared handle used by cocycles and records.
using QuandlePtr = std::shared_ptr<const QuandleTable>;

}  // namespace qcjkls
