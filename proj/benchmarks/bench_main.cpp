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

#include <benchmark/benchmark.h>

#include <memory>

#include "qcjkls/cocycle.hpp"
#include "qcjkls/invariant.hpp"
#include "qcjkls/limits.hpp"
#include "qcjkls/sequences.hpp"

namespace {

using namespace qcjkls;

const Cocycle& s4_cocycle() {
  static const Cocycle phi = build_s4_cocycle();
  return phi;
}

EnumerationOptions single_thread() {
  EnumerationOptions opts;
  opts.threads = 1;
  return opts;
}

// Brute force visits 4^(n+1) top tuples.
void BM_StateSumBruteKn(benchmark::State& state) {
  const auto w = family_braid(FamilyId::make(FamilyKind::kKn), static_cast<std::uint32_t>(state.range(0)));
  const auto opts = single_thread();
  for (auto _ : state) benchmark::DoNotOptimize(cjkls_state_sum(w, s4_cocycle(), opts));
}
BENCHMARK(BM_StateSumBruteKn)->DenseRange(2, 8, 2);

void BM_StateSumAffineKn(benchmark::State& state) {
  const auto w = family_braid(FamilyId::make(FamilyKind::kKn), static_cast<std::uint32_t>(state.range(0)));
  const auto spec = *s4_cocycle().quandle().alexander_spec();
  const auto opts = single_thread();
  for (auto _ : state) benchmark::DoNotOptimize(cjkls_state_sum_affine(w, s4_cocycle(), spec, opts));
}
BENCHMARK(BM_StateSumAffineKn)->DenseRange(2, 8, 2);

void BM_ColoringCountAffineK0(benchmark::State& state) {
  const auto w = family_braid(FamilyId::make(FamilyKind::kK0), static_cast<std::uint32_t>(state.range(0)));
  const auto spec = *s4_cocycle().quandle().alexander_spec();
  for (auto _ : state) benchmark::DoNotOptimize(count_colorings_affine(w, spec));
}
BENCHMARK(BM_ColoringCountAffineK0)->RangeMultiplier(2)->Range(2, 16);

void BM_ClosedFormF(benchmark::State& state) {
  const auto family = FamilyId::make(FamilyKind::kKPrime);
  const auto n = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(family_closed_f(family, n));
}
BENCHMARK(BM_ClosedFormF)->RangeMultiplier(4)->Range(16, 1024);

void BM_FamilyLimitReport(benchmark::State& state) {
  std::vector<std::uint32_t> ns;
  for (std::uint32_t n = 10; n <= 200; n += 10) ns.push_back(n);
  for (auto _ : state)
    benchmark::DoNotOptimize(family_limit_report(FamilyId::make(FamilyKind::kK0), ns, kDefaultLimitTolerance));
}
BENCHMARK(BM_FamilyLimitReport);

}  // namespace

BENCHMARK_MAIN();
