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

#include <string>

#include "patlas/similarity.h"

namespace {

void BM_LevenshteinShort(benchmark::State& state) {
  const std::string a = "SAMSUNG ELECTRONICS CO LTD";
  const std::string b = "ELECTRONICS SAMSUNG COMPANY LIMITED";
  for (auto _ : state) benchmark::DoNotOptimize(patlas::levenshtein(a, b));
}
BENCHMARK(BM_LevenshteinShort);

void BM_LevenshteinLong(benchmark::State& state) {
  const std::string a(200, 'A');
  std::string b = a;
  for (std::size_t i = 0; i < b.size(); i += 7) b[i] = 'B';
  for (auto _ : state) benchmark::DoNotOptimize(patlas::levenshtein(a, b));
}
BENCHMARK(BM_LevenshteinLong);

void BM_Similarity(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        patlas::similarity("TOKYO ELECTRIC POWER CO INC", "TOKYO ELECTRIC POWER COMPANY"));
  }
}
BENCHMARK(BM_Similarity);

}  // namespace
