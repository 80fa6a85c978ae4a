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

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qcjkls/cocycle.hpp"
#include "qcjkls/group_algebra.hpp"
#include "qcjkls/invariant.hpp"
#include "qcjkls/limits.hpp"
#include "qcjkls/quandle.hpp"

namespace qcjkls {

using Json = nlohmann::json;

/// Reads and parses a JSON document. Throws Error when the file cannot be
/// read, ParseError (with byte offset) on malformed JSON.
Json load_json_file(const std::filesystem::path& path);

/// Parses JSON text; ParseError on malformed input.
Json parse_json(const std::string& text);

// Quandle files: {"size": q, "op": [[...]], "labels": [...], "inv_op": [[...]]?}

/// Quandle file content before axiom checks, so violations can be listed.
struct RawQuandle {
  OperationTable op;
  std::optional<OperationTable> inv_op;
  std::vector<std::string> labels;
};

/// Shape checks only. Throws ParseError on missing or mistyped fields,
/// StructuralError on a malformed table.
RawQuandle raw_quandle_from_json(const Json& j);

/// Full load: shape checks, then every quandle axiom and the inv_op match.
QuandleTable quandle_from_json(const Json& j);
Json quandle_to_json(const QuandleTable& q, bool with_inv_op = true);

// Cocycle files: {"quandle": <object or path>, "group_order": N, "table": [[...]]}.
// The group is cyclic of the given order with labels 1, t, t^2, ...

/// Shape checks only; a string "quandle" is resolved against `base_dir`.
Cocycle cocycle_from_json(const Json& j, const std::filesystem::path& base_dir = {});
Json cocycle_to_json(const Cocycle& phi);

/// {"group_labels": [...], "coeffs": ["4", "12"]}; coefficients are decimal
/// strings so they survive any JSON reader.
Json group_algebra_to_json(const GroupAlgebraElement& z);
/// The labels must match `group`.
GroupAlgebraElement group_algebra_from_json(const Json& j, const GroupPtr& group);

Json fvector_to_json(const FVector& v);
FVector fvector_from_json(const Json& j);

Json record_to_json(const InvariantRecord& r);
InvariantRecord record_from_json(const Json& j, const GroupPtr& group);

Json region_to_json(const Region& r);
Json limit_report_to_json(const LimitReport& r);

}  // namespace qcjkls
