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

#include <algorithm>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace qcjkls::detail {

/// Below this many tuples a single thread is used.
inline constexpr std::uint64_t kMinParallelWork = 1 << 14;

inline unsigned resolve_threads(unsigned requested, std::uint64_t work) {
  unsigned n = requested != 0 ? requested : std::max(1u, std::thread::hardware_concurrency());
  if (work < kMinParallelWork) n = 1;
  return static_cast<unsigned>(std::min<std::uint64_t>(n, std::max<std::uint64_t>(work, 1)));
}

/// Splits [0, total) into `chunks` contiguous ranges in order and calls
/// fn(chunk, begin, end) for each, one thread per chunk. Exceptions are
/// rethrown on the calling thread.
template <typename Fn>
void parallel_chunks(std::uint64_t total, unsigned chunks, Fn&& fn) {
  if (chunks <= 1) {
    fn(0u, std::uint64_t{0}, total);
    return;
  }
  std::vector<std::thread> workers;
  std::vector<std::exception_ptr> errors(chunks);
  const std::uint64_t step = total / chunks;
  const std::uint64_t extra = total % chunks;
  std::uint64_t begin = 0;
  for (unsigned c = 0; c < chunks; ++c) {
    const std::uint64_t end = begin + step + (c < extra ? 1 : 0);
    workers.emplace_back([&, c, begin, end] {
      try {
        fn(c, begin, end);
      } catch (...) {
        errors[c] = std::current_exception();
      }
    });
    begin = end;
  }
  for (auto& t : workers) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

/// Odometer over base-q tuples, most significant digit first.
class TupleCursor {
 public:
  TupleCursor(std::uint32_t base, std::size_t length, std::uint64_t start)
      : base_(base), digits_(length, 0) {
    for (std::size_t i = length; i-- > 0;) {
      digits_[i] = static_cast<std::uint32_t>(start % base_);
      start /= base_;
    }
  }

  const std::vector<std::uint32_t>& digits() const noexcept { return digits_; }

  void advance() noexcept {
    for (std::size_t i = digits_.size(); i-- > 0;) {
      if (++digits_[i] < base_) return;
      digits_[i] = 0;
    }
  }

 private:
  std::uint32_t base_;
  std::vector<std::uint32_t> digits_;
};

}  // namespace qcjkls::detail
