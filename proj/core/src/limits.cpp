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

#include "qcjkls/limits.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <type_traits>

#include "qcjkls/error.hpp"

namespace qcjkls {

namespace {

Box as_box(const Region& r) {
  if (const auto* p = std::get_if<FVector>(&r)) return Box{*p, *p};
  return std::get<Box>(r);
}

FVector uniform(double x) { return FVector{{x, x}}; }

}  // namespace

bool Box::contains(const FVector& p, double slack) const {
  if (p.dimension() != lo.dimension()) return false;
  for (std::size_t i = 0; i < p.dimension(); ++i)
    if (p.coords[i] < lo.coords[i] - slack || p.coords[i] > hi.coords[i] + slack) return false;
  return true;
}

std::size_t region_dimension(const Region& r) {
  return std::visit([](const auto& x) {
    if constexpr (std::is_same_v<std::decay_t<decltype(x)>, Box>)
      return x.lo.dimension();
    else
      return x.dimension();
  }, r);
}

double region_distance(const Region& a, const Region& b) {
  const Box x = as_box(a), y = as_box(b);
  if (x.lo.dimension() != y.lo.dimension())
    throw StructuralError("regions of dimension " + std::to_string(x.lo.dimension()) + " and " +
                          std::to_string(y.lo.dimension()) + " cannot be compared");
  double sum = 0.0;
  for (std::size_t i = 0; i < x.lo.dimension(); ++i) {
    const double gap = std::max({0.0, y.lo.coords[i] - x.hi.coords[i], x.lo.coords[i] - y.hi.coords[i]});
    sum += gap * gap;
  }
  return std::sqrt(sum);
}

std::size_t tail_length(std::size_t sample_count) {
  return std::max<std::size_t>(2, (sample_count + 2) / 3);
}

LimitReport limit_estimate(std::vector<Sample> samples, double tolerance, std::optional<FamilyId> family) {
  if (samples.size() < 3) throw DomainError("limit estimate needs at least 3 samples");
  if (!(tolerance > 0.0)) throw DomainError("tolerance must be positive");
  const std::size_t dim = samples.front().f.dimension();
  for (std::size_t i = 0; i < samples.size(); ++i) {
    if (samples[i].f.dimension() != dim) throw DomainError("samples have different dimensions");
    if (i > 0 && samples[i].n <= samples[i - 1].n)
      throw DomainError("sample indices must be strictly increasing");
  }

  const std::size_t tail = tail_length(samples.size());
  const auto first = samples.end() - static_cast<std::ptrdiff_t>(tail);
  double deviation = 0.0;
  for (auto i = first; i != samples.end(); ++i)
    for (auto j = i + 1; j != samples.end(); ++j) deviation = std::max(deviation, euclidean_distance(i->f, j->f));

  LimitReport report{family, {}, FVector{}, std::nullopt, deviation, deviation <= tolerance, tolerance};
  if (family) report.closed_form = closed_form_limit(*family);
  const FVector& last = samples.back().f;
  if (report.converged && report.closed_form && std::holds_alternative<FVector>(*report.closed_form))
    report.converged = euclidean_distance(last, std::get<FVector>(*report.closed_form)) <= tolerance;

  if (report.converged) {
    report.estimate = last;
  } else {
    Box box{first->f, first->f};
    for (auto i = first; i != samples.end(); ++i)
      for (std::size_t k = 0; k < dim; ++k) {
        box.lo.coords[k] = std::min(box.lo.coords[k], i->f.coords[k]);
        box.hi.coords[k] = std::max(box.hi.coords[k], i->f.coords[k]);
      }
    report.estimate = std::move(box);
  }
  report.samples = std::move(samples);
  return report;
}

Region closed_form_limit(FamilyId family) {
  constexpr double ln2 = std::numbers::ln2;
  const double scale = family.parametrized() ? 1.0 / (2.0 * family.m + 1.0) : 1.0;
  switch (family.kind) {
    case FamilyKind::kKn:
    case FamilyKind::kKm: return uniform(scale * ln2 / 3.0);
    case FamilyKind::kK0: return uniform(0.0);
    case FamilyKind::kKPrime:
    case FamilyKind::kKPrimeM: return Box{uniform(scale * std::log(12.0) / 15.0), uniform(scale * 4.0 * ln2 / 15.0)};
  }
  throw DomainError("unknown family");
}

LimitReport family_limit_report(FamilyId family, const std::vector<std::uint32_t>& ns, double tolerance) {
  std::vector<Sample> samples;
  samples.reserve(ns.size());
  for (auto n : ns) samples.push_back({n, family_closed_f(family, n)});
  return limit_estimate(std::move(samples), tolerance, family);
}

const char* to_string(Separation s) noexcept { return s == Separation::kDistinct ? "DISTINCT" : "OVERLAPPING"; }

const Region& limit_region(const LimitReport& report) {
  return report.closed_form ? *report.closed_form : report.estimate;
}

std::vector<std::vector<Separation>> distinguish_limits(const std::vector<LimitReport>& reports, double tolerance) {
  const std::size_t k = reports.size();
  std::vector<std::vector<Separation>> out(k, std::vector<Separation>(k, Separation::kOverlapping));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      const double d = region_distance(limit_region(reports[i]), limit_region(reports[j]));
      out[i][j] = out[j][i] = d > tolerance ? Separation::kDistinct : Separation::kOverlapping;
    }
  return out;
}

}  // namespace qcjkls
