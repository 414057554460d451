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

// Diagonal block co-clustering of a binary matrix by modularity ascent.
//
// Rows and columns are each split into g clusters; row cluster k is paired
// with column cluster k. The objective is
//
//   Q = (1/T) * sum_ij (a_ij - r_i * c_j / T) * [row(i) == col(j)]
//
// with T the number of entries and r_i, c_j the row and column degrees.
// Given the column clusters, Q separates into one independent term per row
// (and vice versa), so a batch best-response update of all rows followed by
// all columns never lowers Q. `fit` alternates the two steps from several
// random starts and keeps the best result.

#ifndef PATLAS_COCLUS_H_
#define PATLAS_COCLUS_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "patlas/ingest.h"
#include "patlas/sparse_matrix.h"

namespace patlas {

struct CoClustering {
  int g = 0;
  std::vector<int> row_assignment;  // row index -> cluster in [0, g)
  std::vector<int> col_assignment;  // column index -> cluster in [0, g)
  double modularity = 0.0;
};

struct FitOptions {
  int g = 7;
  std::uint64_t seed = 42;
  int max_iter = 100;
  int restarts = 10;
};

// One full row-then-column sweep of a single run.
struct SweepRecord {
  double modularity_before = 0.0;
  double modularity_after = 0.0;
  bool reseeded = false;  // an emptied cluster was refilled during the sweep
  std::size_t moves = 0;  // assignments changed by the sweep
};

struct CurvePoint {
  int g = 0;
  double modularity = 0.0;
};
using ModularityCurve = std::vector<CurvePoint>;

// values[a][b] = |L_a n R_b| / max(|L_a|, |R_b|), 0 when both are empty.
struct OverlapMatrix {
  std::vector<std::vector<double>> values;
};

// Exact modularity of the given assignments. Cluster ids may be any
// nonnegative integers; only equality between row and column ids matters.
double modularity_of(const SparseBinaryMatrix& m, std::span<const int> rows,
                     std::span<const int> cols);
double modularity_of(const SparseBinaryMatrix& m, const CoClustering& c);

// Best of `restarts` independent runs; ties go to the lower restart index.
// g = 1 returns the trivial clustering (Q = 0). When the smaller axis has at
// most 4096 labelings they are all enumerated and the result is exact.
CoClustering fit(const SparseBinaryMatrix& m, const FitOptions& options);

// A single run from the given seed. `trace`, if set, receives one record per
// sweep.
CoClustering fit_once(const SparseBinaryMatrix& m, int g, std::uint64_t seed,
                      int max_iter, std::vector<SweepRecord>* trace = nullptr);

ModularityCurve modularity_curve(const SparseBinaryMatrix& m, int g_min,
                                 int g_max, std::uint64_t seed, int restarts,
                                 int max_iter = 100);

OverlapMatrix overlap(const CoClustering& l, const CoClustering& r, Axis side);
OverlapMatrix overlap(std::span<const int> left, int left_g,
                      std::span<const int> right, int right_g);

// Greedy one-to-one pairing of left to right clusters by descending overlap;
// result[a] is the right cluster matched to left cluster a, or -1.
std::vector<int> best_matching(const OverlapMatrix& f);

struct SensitivityOptions {
  Axis axis = Axis::kRows;
  double fraction = 0.9;
  int trials = 10;
  int g = 7;
  int g_min = 2;
  int g_max = 12;
  std::uint64_t seed = 42;
  int restarts = 10;
  int max_iter = 100;
};

struct SensitivityTrial {
  std::vector<Index> kept;  // surviving indices on the subsampled axis
  ModularityCurve curve;
  CoClustering clustering;  // fit at options.g on the subsample
  OverlapMatrix overlap;    // subsample clusters vs. full fit, on that axis
};

struct SensitivityResult {
  CoClustering full;
  std::vector<SensitivityTrial> trials;
};

SensitivityResult sensitivity_subsample(const SparseBinaryMatrix& m,
                                        const SensitivityOptions& options);

// Adjusted Rand index between two labelings of the same items.
double adjusted_rand_index(std::span<const int> a, std::span<const int> b);

}  // namespace patlas

#endif  // PATLAS_COCLUS_H_
