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

#include "qcjkls/serialize.hpp"

#include <fstream>
#include <sstream>

#include "qcjkls/error.hpp"

namespace qcjkls {

namespace {

const Json& field(const Json& j, const char* name) {
  if (!j.is_object()) throw ParseError("expected a JSON object", 0);
  const auto it = j.find(name);
  if (it == j.end()) throw ParseError(std::string("missing field \"") + name + "\"", 0);
  return *it;
}

std::int64_t as_integer(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw ParseError(std::string(what) + " must be an integer", 0);
  return j.get<std::int64_t>();
}

std::vector<std::vector<std::int64_t>> integer_rows(const Json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + " must be an array of rows", 0);
  std::vector<std::vector<std::int64_t>> rows;
  for (const auto& row : j) {
    if (!row.is_array()) throw ParseError(std::string(what) + " must be an array of rows", 0);
    auto& out = rows.emplace_back();
    for (const auto& x : row) out.push_back(as_integer(x, what));
  }
  return rows;
}

template <typename T>
Json rows_json(const std::vector<T>& cells, std::size_t width) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < cells.size(); i += width)
    rows.push_back(std::vector<T>(cells.begin() + static_cast<std::ptrdiff_t>(i),
                                  cells.begin() + static_cast<std::ptrdiff_t>(i + width)));
  return rows;
}

std::vector<std::string> string_list(const Json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + " must be an array of strings", 0);
  std::vector<std::string> out;
  for (const auto& x : j) {
    if (!x.is_string()) throw ParseError(std::string(what) + " must be an array of strings", 0);
    out.push_back(x.get<std::string>());
  }
  return out;
}

Json box_json(const Box& b) { return Json{{"lo", b.lo.coords}, {"hi", b.hi.coords}}; }

}  // namespace

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what(), e.byte);
  }
}

Json load_json_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_json(buf.str());
}

RawQuandle raw_quandle_from_json(const Json& j) {
  const std::int64_t size = as_integer(field(j, "size"), "size");
  RawQuandle raw;
  raw.op = OperationTable::from_rows(integer_rows(field(j, "op"), "op"));
  if (static_cast<std::int64_t>(raw.op.size) != size)
    throw StructuralError("\"size\" is " + std::to_string(size) + " but \"op\" has " +
                          std::to_string(raw.op.size) + " rows");
  if (j.contains("inv_op")) {
    raw.inv_op = OperationTable::from_rows(integer_rows(j.at("inv_op"), "inv_op"));
    if (raw.inv_op->size != raw.op.size) throw StructuralError("\"inv_op\" and \"op\" differ in size");
  }
  if (j.contains("labels")) {
    raw.labels = string_list(j.at("labels"), "labels");
    if (raw.labels.size() != raw.op.size)
      throw StructuralError("expected " + std::to_string(raw.op.size) + " labels, got " +
                            std::to_string(raw.labels.size()));
  }
  return raw;
}

QuandleTable quandle_from_json(const Json& j) {
  RawQuandle raw = raw_quandle_from_json(j);
  if (raw.inv_op) return QuandleTable::from_tables(std::move(raw.op), *raw.inv_op, std::move(raw.labels));
  return QuandleTable::from_operation(std::move(raw.op), std::move(raw.labels));
}

Json quandle_to_json(const QuandleTable& q, bool with_inv_op) {
  Json j{{"size", q.size()}, {"op", rows_json(q.op_table().cells, q.size())}, {"labels", q.labels()}};
  if (with_inv_op) j["inv_op"] = rows_json(q.inv_op_table().cells, q.size());
  return j;
}

Cocycle cocycle_from_json(const Json& j, const std::filesystem::path& base_dir) {
  const Json& qj = field(j, "quandle");
  QuandlePtr quandle;
  if (qj.is_string()) {
    std::filesystem::path p = qj.get<std::string>();
    if (p.is_relative() && !base_dir.empty()) p = base_dir / p;
    quandle = std::make_shared<const QuandleTable>(quandle_from_json(load_json_file(p)));
  } else {
    quandle = std::make_shared<const QuandleTable>(quandle_from_json(qj));
  }
  const std::int64_t order = as_integer(field(j, "group_order"), "group_order");
  if (order < 1) throw DomainError("group_order must be positive");
  auto group = std::make_shared<const AbelianGroup>(AbelianGroup::cyclic(static_cast<std::size_t>(order)));
  const auto rows = integer_rows(field(j, "table"), "table");
  if (rows.size() != quandle->size()) throw StructuralError("cocycle table must have one row per quandle element");
  std::vector<GroupElement> table;
  for (const auto& row : rows) {
    if (row.size() != quandle->size()) throw StructuralError("cocycle table must be square");
    for (auto x : row) {
      if (x < 0 || x >= order) throw StructuralError("cocycle entry " + std::to_string(x) + " is not a group element");
      table.push_back(static_cast<GroupElement>(x));
    }
  }
  return Cocycle(std::move(quandle), std::move(group), std::move(table));
}

Json cocycle_to_json(const Cocycle& phi) {
  return Json{{"quandle", quandle_to_json(phi.quandle(), false)},
              {"group_order", phi.group().order()},
              {"table", rows_json(phi.table(), phi.quandle().size())}};
}

Json group_algebra_to_json(const GroupAlgebraElement& z) {
  Json coeffs = Json::array();
  for (const auto& c : z.coeffs()) coeffs.push_back(to_decimal(c));
  return Json{{"group_labels", z.group().labels()}, {"coeffs", coeffs}};
}

GroupAlgebraElement group_algebra_from_json(const Json& j, const GroupPtr& group) {
  if (string_list(field(j, "group_labels"), "group_labels") != group->labels())
    throw StructuralError("group labels do not match the expected group");
  const Json& cj = field(j, "coeffs");
  if (!cj.is_array()) throw ParseError("coeffs must be an array", 0);
  std::vector<BigInt> coeffs;
  for (const auto& c : cj) {
    if (c.is_string())
      coeffs.push_back(parse_decimal(c.get<std::string>()));
    else
      coeffs.emplace_back(as_integer(c, "coeffs"));
  }
  return GroupAlgebraElement(group, std::move(coeffs));
}

Json fvector_to_json(const FVector& v) { return v.coords; }

FVector fvector_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("vector must be an array of numbers", 0);
  FVector v;
  for (const auto& x : j) {
    if (!x.is_number()) throw ParseError("vector must be an array of numbers", 0);
    v.coords.push_back(x.get<double>());
  }
  return v;
}

Json record_to_json(const InvariantRecord& r) {
  Json j{{"braid", r.braid},
         {"quandle_id", r.quandle_id},
         {"cocycle_id", r.cocycle_id},
         {"z", group_algebra_to_json(r.z)},
         {"coloring_count", to_decimal(r.coloring_count)}};
  j["crossing_number"] = r.crossing_number ? Json(*r.crossing_number) : Json(nullptr);
  j["f"] = r.f ? fvector_to_json(*r.f) : Json(nullptr);
  return j;
}

InvariantRecord record_from_json(const Json& j, const GroupPtr& group) {
  auto text = [&](const char* name) {
    const Json& x = field(j, name);
    if (!x.is_string()) throw ParseError(std::string(name) + " must be a string", 0);
    return x.get<std::string>();
  };
  InvariantRecord r{text("braid"), text("quandle_id"), text("cocycle_id"),
                    group_algebra_from_json(field(j, "z"), group), parse_decimal(text("coloring_count")),
                    std::nullopt, std::nullopt};
  if (j.contains("crossing_number") && !j.at("crossing_number").is_null())
    r.crossing_number = static_cast<std::uint64_t>(as_integer(j.at("crossing_number"), "crossing_number"));
  if (j.contains("f") && !j.at("f").is_null()) r.f = fvector_from_json(j.at("f"));
  return r;
}

Json region_to_json(const Region& r) {
  if (const auto* p = std::get_if<FVector>(&r)) return fvector_to_json(*p);
  return box_json(std::get<Box>(r));
}

Json limit_report_to_json(const LimitReport& r) {
  Json samples = Json::array();
  for (const auto& s : r.samples) samples.push_back(Json{{"n", s.n}, {"f", s.f.coords}});
  return Json{{"family", r.family ? Json(r.family->to_string()) : Json(nullptr)},
              {"estimate", region_to_json(r.estimate)},
              {"closed_form", r.closed_form ? region_to_json(*r.closed_form) : Json(nullptr)},
              {"converged", r.converged},
              {"max_tail_deviation", r.max_tail_deviation},
              {"tolerance", r.tolerance},
              {"samples", samples}};
}

}  // namespace qcjkls
