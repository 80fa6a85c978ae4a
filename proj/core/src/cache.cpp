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

#include "qcjkls/cache.hpp"

#include <fstream>

#include "qcjkls/error.hpp"
#include "qcjkls/serialize.hpp"

namespace qcjkls {

ResultCache::ResultCache(std::filesystem::path path, GroupPtr group) : path_(std::move(path)), group_(std::move(group)) {
  std::ifstream in(path_);
  if (!in) return;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    try {
      auto record = record_from_json(parse_json(line), group_);
      auto key = key_of(record);
      entries_.insert_or_assign(std::move(key), std::move(record));  // later lines win
    } catch (const Error&) {
      ++skipped_;
    }
  }
}

std::size_t ResultCache::size() const {
  std::lock_guard lock(mutex_);
  return entries_.size();
}

std::optional<InvariantRecord> ResultCache::find(const Key& key) const {
  std::lock_guard lock(mutex_);
  const auto it = entries_.find(key);
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

void ResultCache::store(const InvariantRecord& record) {
  std::lock_guard lock(mutex_);
  const auto key = key_of(record);
  if (const auto it = entries_.find(key);
      it != entries_.end() && it->second.z == record.z && it->second.coloring_count == record.coloring_count)
    return;
  if (path_.has_parent_path()) std::filesystem::create_directories(path_.parent_path());
  std::ofstream out(path_, std::ios::app);
  if (!out) throw Error("cannot write cache file " + path_.string());
  out << record_to_json(record).dump() << '\n';
  if (!out) throw Error("cannot write cache file " + path_.string());
  entries_.insert_or_assign(key, record);
}

InvariantRecord compute_invariant_cached(const BraidWord& w, const Cocycle& phi, const RecordOptions& options,
                                         ResultCache* cache, bool* hit) {
  if (hit) *hit = false;
  if (cache) {
    if (auto record = cache->find({w.canonical(), phi.quandle().content_hash(), phi.content_hash()})) {
      if (record->z.group() == phi.group() && record->z.coefficient_sum() == record->coloring_count) {
        if (hit) *hit = true;
        attach_crossing_data(*record, w, options.assume_crossing_number);
        return *record;
      }
    }
  }
  InvariantRecord record = compute_invariant(w, phi, options);
  if (cache) {
    // Store the crossing-independent part only; it is recomputed on a hit.
    InvariantRecord stored = record;
    attach_crossing_data(stored, w, std::nullopt);
    cache->store(stored);
  }
  return record;
}

}  // namespace qcjkls
