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

#include "qcjkls/quandle.hpp"

#include <cstdio>

#include "qcjkls/error.hpp"
#include "qcjkls/hash.hpp"

namespace qcjkls {

OperationTable OperationTable::from_rows(const std::vector<std::vector<std::int64_t>>& rows) {
  OperationTable t;
  t.size = rows.size();
  if (t.size == 0) throw StructuralError("operation table is empty");
  t.cells.reserve(t.size * t.size);
  for (std::size_t a = 0; a < t.size; ++a) {
    if (rows[a].size() != t.size) {
      throw StructuralError("operation table row " + std::to_string(a) + " has " +
                            std::to_string(rows[a].size()) + " entries, expected " +
                            std::to_string(t.size));
    }
    for (std::size_t b = 0; b < t.size; ++b) {
      const auto v = rows[a][b];
      if (v < 0 || static_cast<std::size_t>(v) >= t.size) {
        throw StructuralError("operation table entry [" + std::to_string(a) + "][" +
                              std::to_string(b) + "] = " + std::to_string(v) + " is out of range");
      }
      t.cells.push_back(static_cast<Element>(v));
    }
  }
  return t;
}

std::vector<std::vector<Element>> OperationTable::rows() const {
  std::vector<std::vector<Element>> out(size);
  for (std::size_t a = 0; a < size; ++a)
    out[a].assign(cells.begin() + a * size, cells.begin() + (a + 1) * size);
  return out;
}

std::string to_string(Axiom axiom) {
  switch (axiom) {
    case Axiom::kIdempotence: return "idempotence";
    case Axiom::kRightInvertibility: return "right-invertibility";
    case Axiom::kInverseTable: return "inverse-table";
    case Axiom::kSelfDistributivity: return "self-distributivity";
  }
  return "unknown";
}

namespace {

void check_shape(const OperationTable& op) {
  if (op.size == 0) throw StructuralError("operation table is empty");
  if (op.cells.size() != op.size * op.size)
    throw StructuralError("operation table is not square");
  for (auto v : op.cells)
    if (v >= op.size) throw StructuralError("operation table entry out of range");
}

std::string describe(const AxiomViolation& v) {
  return to_string(v.axiom) + " fails at (" + std::to_string(v.a) + ", " + std::to_string(v.b) +
         ", " + std::to_string(v.c) + ")";
}

OperationTable derive_inverse(const OperationTable& op) {
  OperationTable inv{op.size, std::vector<Element>(op.cells.size())};
  for (Element b = 0; b < op.size; ++b)
    for (Element x = 0; x < op.size; ++x) inv.cells[op.at(x, b) * op.size + b] = x;
  return inv;
}

std::vector<std::string> default_labels(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(std::to_string(i));
  return out;
}

}  // namespace

AxiomReport verify_operation_table(const OperationTable& op) {
  check_shape(op);
  const auto q = static_cast<Element>(op.size);
  AxiomReport report;
  for (Element a = 0; a < q; ++a)
    if (op.at(a, a) != a) report.violations.push_back({Axiom::kIdempotence, a, a, 0});

  std::vector<std::uint32_t> hits(q);
  for (Element b = 0; b < q; ++b) {
    std::fill(hits.begin(), hits.end(), 0);
    for (Element x = 0; x < q; ++x) ++hits[op.at(x, b)];
    for (Element a = 0; a < q; ++a)
      if (hits[a] != 1) report.violations.push_back({Axiom::kRightInvertibility, a, b, 0});
  }

  for (Element a = 0; a < q; ++a)
    for (Element b = 0; b < q; ++b) {
      const Element ab = op.at(a, b);
      for (Element c = 0; c < q; ++c) {
        if (op.at(ab, c) != op.at(op.at(a, c), op.at(b, c)))
          report.violations.push_back({Axiom::kSelfDistributivity, a, b, c});
      }
    }
  return report;
}

AxiomReport verify_quandle_axioms(const QuandleTable& q) {
  AxiomReport report = verify_operation_table(q.op_table());
  const auto n = static_cast<Element>(q.size());
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) {
      if (q.inv_op(q.op(a, b), b) != a || q.op(q.inv_op(a, b), b) != a)
        report.violations.push_back({Axiom::kInverseTable, a, b, 0});
    }
  return report;
}

QuandleTable QuandleTable::from_operation(OperationTable op, std::vector<std::string> labels) {
  const AxiomReport report = verify_operation_table(op);
  if (!report.valid()) {
    throw DomainError("not a quandle: " + describe(report.violations.front()) + " (" +
                      std::to_string(report.violations.size()) + " violations)");
  }
  if (labels.empty()) labels = default_labels(op.size);
  if (labels.size() != op.size)
    throw StructuralError("expected " + std::to_string(op.size) + " labels, got " +
                          std::to_string(labels.size()));
  QuandleTable q;
  q.inv_op_ = derive_inverse(op);
  q.op_ = std::move(op);
  q.labels_ = std::move(labels);
  return q;
}

QuandleTable QuandleTable::from_tables(OperationTable op, const OperationTable& inv_op,
                                       std::vector<std::string> labels) {
  QuandleTable q = from_operation(std::move(op), std::move(labels));
  if (!(inv_op == q.inv_op_))
    throw DomainError("supplied inv_op table does not match the inverse derived from op");
  return q;
}

std::optional<Element> QuandleTable::find_label(const std::string& label) const {
  for (Element i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return i;
  return std::nullopt;
}

std::string QuandleTable::content_hash() const {
  Fnv1a h;
  h.add_u64(op_.size);
  for (auto v : op_.cells) h.add_u64(v);
  return h.hex();
}

QuandleTable build_alexander_quandle(const AlexanderQuandleSpec& spec, std::size_t max_size) {
  const QuotientRing ring(spec, max_size);
  const Element t = ring.variable();
  const auto t_inv = ring.inverse(t);
  if (!t_inv) {
    throw DomainError("T = " + ring.label(t) + " is not invertible in Z_" +
                      std::to_string(ring.modulus()) + "[T]/(p); the inverse operation does not exist");
  }
  const Element one_minus_t = ring.sub(ring.one(), t);
  const Element one_minus_t_inv = ring.sub(ring.one(), *t_inv);

  const auto q = static_cast<Element>(ring.size());
  std::vector<Element> ta(q), tb(q), ia(q), ib(q);
  for (Element x = 0; x < q; ++x) {
    ta[x] = ring.mul(t, x);
    tb[x] = ring.mul(one_minus_t, x);
    ia[x] = ring.mul(*t_inv, x);
    ib[x] = ring.mul(one_minus_t_inv, x);
  }

  QuandleTable out;
  out.op_ = OperationTable{q, std::vector<Element>(std::size_t{q} * q)};
  out.inv_op_ = OperationTable{q, std::vector<Element>(std::size_t{q} * q)};
  for (Element a = 0; a < q; ++a)
    for (Element b = 0; b < q; ++b) {
      out.op_.cells[std::size_t{a} * q + b] = ring.add(ta[a], tb[b]);
      out.inv_op_.cells[std::size_t{a} * q + b] = ring.add(ia[a], ib[b]);
    }
  out.labels_.reserve(q);
  for (Element x = 0; x < q; ++x) out.labels_.push_back(ring.label(x));
  out.alexander_ = spec;
  return out;
}

QuandleTable build_s4() { return build_alexander_quandle({2, {1, 1, 1}}); }

}  // namespace qcjkls
