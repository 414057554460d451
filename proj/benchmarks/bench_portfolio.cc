// Copyright 2026 The patlas Authors.
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

#include <random>
#include <vector>

#include "patlas/entity.h"
#include "patlas/portfolio.h"

namespace {

void BM_Entropy(benchmark::State& state) {
  std::vector<double> p(7, 1.0 / 7.0);
  for (auto _ : state) benchmark::DoNotOptimize(patlas::entropy(p));
}
BENCHMARK(BM_Entropy);

void BM_Otsu(benchmark::State& state) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<std::uint64_t> count(0, 1000);
  std::vector<std::uint64_t> h(100);
  for (auto& c : h) c = count(rng);
  for (auto _ : state) benchmark::DoNotOptimize(patlas::otsu_threshold(h));
}
BENCHMARK(BM_Otsu);

void BM_Heatmap(benchmark::State& state) {
  std::mt19937_64 rng(4);
  std::lognormal_distribution<double> credit(2.0, 1.0);
  std::uniform_real_distribution<double> ent(0.0, 1.9);
  std::vector<patlas::HeatPoint> pts(static_cast<std::size_t>(state.range(0)));
  for (auto& p : pts) p = {credit(rng), ent(rng)};
  for (auto _ : state) benchmark::DoNotOptimize(patlas::heatmap(pts, 50).counts.size());
}
BENCHMARK(BM_Heatmap)->Arg(10000)->Arg(100000);

}  // namespace
