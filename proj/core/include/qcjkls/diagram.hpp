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
#include <vector>

#include "qcjkls/braid.hpp"

namespace qcjkls {

// Diagram-level checks on the standard planar closure of a braid. Strands
// run downward; at a positive letter the strand entering from the left
// passes under, at a negative letter it passes over.

struct ClosureDiagram {
  BraidWord braid;
  std::size_t crossing_count = 0;
  bool alternating = false;
  bool reduced = false;
};

ClosureDiagram analyze_closure(const BraidWord& w);

/// Sufficient condition for alternation: every generator index carries a
/// single sign and adjacent indices carry opposite signs.
bool has_alternating_sign_pattern(const BraidWord& w);

/// True iff every component of the closure meets its crossings in strictly
/// alternating over/under order (cyclically).
bool is_alternating_closure(const BraidWord& w);

/// Positions (0-based letter indices) of nugatory crossings: those where one
/// of the two smoothings increases the number of connected pieces of the
/// closure shadow.
std::vector<std::size_t> nugatory_crossings(const BraidWord& w);

/// True iff the closure has no nugatory crossing.
bool is_reduced_closure(const BraidWord& w);

/// Number of link components of the closure (cycles of the strand
/// permutation).
std::size_t link_component_count(const BraidWord& w);

}  // namespace qcjkls
