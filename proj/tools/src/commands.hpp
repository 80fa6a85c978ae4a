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
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace qcjkls::cli {

enum class Format { kPretty, kJson, kCsv };

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;  // axiom/cocycle violation, oracle disagreement
inline constexpr int kExitBadInput = 2;            // parse errors, malformed files, bad flags
inline constexpr int kExitRefused = 3;             // budget or capacity exceeded

struct RunConfig {
  std::uint64_t budget = 16'777'216;
  double tolerance = 1e-3;
  std::optional<std::filesystem::path> cache_path;
  Format format = Format::kPretty;
  std::optional<std::filesystem::path> quandle_file;
  std::optional<std::filesystem::path> cocycle_file;
  std::optional<std::uint64_t> assume_crossing_number;
  unsigned threads = 0;
  bool affine = false;
};

struct Streams {
  std::ostream& out;
  std::ostream& err;
};

struct IndexRange {
  std::uint32_t first = 1;
  std::uint32_t last = 1;
  std::uint32_t step = 1;
  std::vector<std::uint32_t> values() const;
};

/// "A..B" or "A"; throws ParseError.
IndexRange parse_range(const std::string& text, std::uint32_t step = 1);

int cmd_quandle_build(const RunConfig& cfg, Streams io, const std::string& kind, std::uint32_t modulus,
                      const std::string& poly);
int cmd_quandle_check(const RunConfig& cfg, Streams io, const std::filesystem::path& file);
int cmd_cocycle_check(const RunConfig& cfg, Streams io, const std::optional<std::filesystem::path>& file);
int cmd_invariant(const RunConfig& cfg, Streams io, const std::string& braid);
int cmd_colorings(const RunConfig& cfg, Streams io, const std::string& braid, bool count_only);
int cmd_family(const RunConfig& cfg, Streams io, const std::string& family, const IndexRange& range,
               std::uint32_t m, bool verify);
int cmd_limits(const RunConfig& cfg, Streams io, const std::vector<std::string>& families, const IndexRange& range);

}  // namespace qcjkls::cli
