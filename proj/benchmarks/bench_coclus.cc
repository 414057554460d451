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

#include "patlas/coclus.h"
#include "patlas/synthetic.h"

namespace {

void BM_FitPlanted(benchmark::State& state) {
  const auto rows = static_cast<std::size_t>(state.range(0));
  auto planted = patlas::planted_block_matrix(rows, rows / 10, 7, 0.8, 0.02, 1);
  patlas::FitOptions opt{7, 42, 100, 1};
  for (auto _ : state) {
    auto c = patlas::fit(planted.matrix, opt);
    benchmark::DoNotOptimize(c.modularity);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(planted.matrix.nnz()));
}
BENCHMARK(BM_FitPlanted)->Arg(700)->Arg(7000)->Unit(benchmark::kMillisecond);

void BM_Modularity(benchmark::State& state) {
  auto planted = patlas::planted_block_matrix(7000, 700, 7, 0.1, 0.005, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        patlas::modularity_of(planted.matrix, planted.row_labels, planted.col_labels));
  }
}
BENCHMARK(BM_Modularity)->Unit(benchmark::kMicrosecond);

}  // namespace
