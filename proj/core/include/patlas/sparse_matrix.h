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

#ifndef PATLAS_SPARSE_MATRIX_H_
#define PATLAS_SPARSE_MATRIX_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace patlas {

using Index = std::uint32_t;

// Binary incidence matrix stored twice, row-major (CSR) and column-major
// (CSC), so both sweep directions of the co-clustering walk contiguous
// memory. Entries carry no weight: a pair is either present or absent.
class SparseBinaryMatrix {
 public:
  SparseBinaryMatrix() = default;

  // Builds from (row, col) pairs. Duplicates collapse; out-of-range indices
  // throw. Labels are optional but, when given, must match the dimensions.
  static SparseBinaryMatrix from_entries(
      std::size_t n_rows, std::size_t n_cols,
      std::vector<std::pair<Index, Index>> entries,
      std::vector<std::string> row_labels = {},
      std::vector<std::string> col_labels = {});

  // Dense 0/1 rows, mostly for tests.
  static SparseBinaryMatrix from_dense(
      const std::vector<std::vector<int>>& dense);

  std::size_t n_rows() const { return n_rows_; }
  std::size_t n_cols() const { return n_cols_; }
  std::size_t nnz() const { return col_idx_.size(); }
  bool empty() const { return nnz() == 0; }

  std::span<const Index> row(std::size_t i) const {
    return {col_idx_.data() + row_ptr_[i], row_ptr_[i + 1] - row_ptr_[i]};
  }
  std::span<const Index> col(std::size_t j) const {
    return {row_idx_.data() + col_ptr_[j], col_ptr_[j + 1] - col_ptr_[j]};
  }
  std::size_t row_degree(std::size_t i) const { return row(i).size(); }
  std::size_t col_degree(std::size_t j) const { return col(j).size(); }
  bool contains(std::size_t i, std::size_t j) const;

  const std::vector<std::string>& row_labels() const { return row_labels_; }
  const std::vector<std::string>& col_labels() const { return col_labels_; }

  // Restriction to the kept rows and columns, with any row or column left
  // without entries removed. `row_map`/`col_map` receive, for each surviving
  // index of the result, its index in this matrix.
  SparseBinaryMatrix submatrix(std::span<const Index> keep_rows,
                               std::span<const Index> keep_cols,
                               std::vector<Index>* row_map,
                               std::vector<Index>* col_map) const;

 private:
  std::size_t n_rows_ = 0;
  std::size_t n_cols_ = 0;
  std::vector<std::size_t> row_ptr_{0};
  std::vector<Index> col_idx_;
  std::vector<std::size_t> col_ptr_{0};
  std::vector<Index> row_idx_;
  std::vector<std::string> row_labels_;
  std::vector<std::string> col_labels_;
};

}  // namespace patlas

#endif  // PATLAS_SPARSE_MATRIX_H_
