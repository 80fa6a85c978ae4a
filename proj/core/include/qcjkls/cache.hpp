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
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <tuple>

#include "qcjkls/invariant.hpp"

namespace qcjkls {

/// Append-only JSON-lines store of InvariantRecords keyed by
/// (canonical braid, quandle hash, cocycle hash). Lines that fail to parse
/// (for example a write cut short) are skipped and counted. Thread-safe.
class ResultCache {
 public:
  using Key = std::tuple<std::string, std::string, std::string>;

  /// Loads existing entries; a missing file is an empty cache. Records are
  /// decoded against `group` (the codomain of the cocycles in use).
  ResultCache(std::filesystem::path path, GroupPtr group);

  const std::filesystem::path& path() const noexcept { return path_; }
  std::size_t size() const;
  std::size_t skipped_lines() const noexcept { return skipped_; }

  std::optional<InvariantRecord> find(const Key& key) const;
  /// Appends one line unless an identical entry is present; a differing
  /// entry is superseded (the last line for a key wins on reload). Throws
  /// Error when the file cannot be written.
  void store(const InvariantRecord& record);

  static Key key_of(const InvariantRecord& r) { return {r.braid, r.quandle_id, r.cocycle_id}; }

 private:
  std::filesystem::path path_;
  GroupPtr group_;
  mutable std::mutex mutex_;
  std::map<Key, InvariantRecord> entries_;
  std::size_t skipped_ = 0;
};

/// compute_invariant with a cache in front. A hit reuses Z and the coloring
/// count; crossing data is always recomputed from the options, so
/// --assume-crossing-number behaves the same with a warm cache.
InvariantRecord compute_invariant_cached(const BraidWord& w, const Cocycle& phi, const RecordOptions& options,
                                         ResultCache* cache, bool* hit = nullptr);

}  // namespace qcjkls
