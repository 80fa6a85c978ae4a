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
#include <optional>
#include <variant>
#include <vector>

#include "qcjkls/group_algebra.hpp"
#include "qcjkls/sequences.hpp"

namespace qcjkls {

inline constexpr double kDefaultLimitTolerance = 1e-3;

struct Sample {
  std::uint32_t n = 0;
  FVector f;
};

/// Axis-aligned box [lo, hi] in R^N.
struct Box {
  FVector lo, hi;
  bool contains(const FVector& p, double slack = 0.0) const;
};

/// A limit point or a box known to contain it.
using Region = std::variant<FVector, Box>;

std::size_t region_dimension(const Region& r);

/// Euclidean distance between the closest points of two regions (0 when
/// they intersect). Throws StructuralError on a dimension mismatch.
double region_distance(const Region& a, const Region& b);

struct LimitReport {
  std::optional<FamilyId> family;
  std::vector<Sample> samples;
  Region estimate;                     ///< last sample if converged, else tail box
  std::optional<Region> closed_form;   ///< analytic limit, or bounds box
  double max_tail_deviation = 0.0;     ///< largest pairwise distance in the tail
  bool converged = false;
  double tolerance = kDefaultLimitTolerance;
};

/// Number of trailing samples inspected for n total samples: ceil(n/3),
/// never fewer than 2.
std::size_t tail_length(std::size_t sample_count);

/// Cauchy test on the tail. A report with a point closed form only counts
/// as converged when the last sample is also within tolerance of it.
/// Throws DomainError on fewer than 3 samples, non-increasing n or ragged
/// dimensions.
LimitReport limit_estimate(std::vector<Sample> samples, double tolerance = kDefaultLimitTolerance,
                           std::optional<FamilyId> family = std::nullopt);

/// Kn: (ln2/3, ln2/3). K0: (0, 0). Km: ln2/(3(2m+1)) in both coordinates.
/// KPrime: the box [ln12/15, 4ln2/15]^2, scaled by 1/(2m+1) for KPrimeM.
Region closed_form_limit(FamilyId family);

/// Closed-form f sampled at each n, then limit_estimate.
LimitReport family_limit_report(FamilyId family, const std::vector<std::uint32_t>& ns,
                                double tolerance = kDefaultLimitTolerance);

enum class Separation { kDistinct, kOverlapping };

const char* to_string(Separation s) noexcept;

/// Region used to compare a report with others: the closed form when
/// present, otherwise the estimate.
const Region& limit_region(const LimitReport& report);

/// Pairwise DISTINCT when the limit regions are more than `tolerance` apart.
std::vector<std::vector<Separation>> distinguish_limits(const std::vector<LimitReport>& reports,
                                                        double tolerance = kDefaultLimitTolerance);

}  // namespace qcjkls
