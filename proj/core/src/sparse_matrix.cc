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

#include "patlas/sparse_matrix.h"

#include <algorithm>
#include <limits>

#include "patlas/error.h"

namespace patlas {

SparseBinaryMatrix SparseBinaryMatrix::from_entries(
    std::size_t n_rows, std::size_t n_cols,
    std::vector<std::pair<Index, Index>> entries,
    std::vector<std::string> row_labels, std::vector<std::string> col_labels) {
  if (n_rows > std::numeric_limits<Index>::max() ||
      n_cols > std::numeric_limits<Index>::max()) {
    throw ConfigError("matrix", "matrix dimensions exceed index range");
  }
  if (!row_labels.empty() && row_labels.size() != n_rows) {
    throw ConfigError("matrix", "row label count does not match n_rows");
  }
  if (!col_labels.empty() && col_labels.size() != n_cols) {
    throw ConfigError("matrix", "column label count does not match n_cols");
  }
  for (const auto& [r, c] : entries) {
    if (r >= n_rows || c >= n_cols) {
      throw ConfigError("matrix", "matrix entry out of range");
    }
  }
  std::sort(entries.begin(), entries.end());
  entries.erase(std::unique(entries.begin(), entries.end()), entries.end());

  SparseBinaryMatrix m;
  m.n_rows_ = n_rows;
  m.n_cols_ = n_cols;
  m.row_labels_ = std::move(row_labels);
  m.col_labels_ = std::move(col_labels);

  m.row_ptr_.assign(n_rows + 1, 0);
  m.col_ptr_.assign(n_cols + 1, 0);
  m.col_idx_.reserve(entries.size());
  for (const auto& [r, c] : entries) {
    ++m.row_ptr_[r + 1];
    ++m.col_ptr_[c + 1];
    m.col_idx_.push_back(c);
  }
  for (std::size_t i = 0; i < n_rows; ++i) m.row_ptr_[i + 1] += m.row_ptr_[i];
  for (std::size_t j = 0; j < n_cols; ++j) m.col_ptr_[j + 1] += m.col_ptr_[j];

  // Entries are row-sorted, so filling columns in order leaves each column's
  // row list sorted as well.
  m.row_idx_.resize(entries.size());
  std::vector<std::size_t> fill(m.col_ptr_.begin(), m.col_ptr_.end() - 1);
  for (const auto& [r, c] : entries) m.row_idx_[fill[c]++] = r;
  return m;
}

SparseBinaryMatrix SparseBinaryMatrix::from_dense(
    const std::vector<std::vector<int>>& dense) {
  std::size_t n_rows = dense.size();
  std::size_t n_cols = n_rows == 0 ? 0 : dense.front().size();
  std::vector<std::pair<Index, Index>> entries;
  for (std::size_t i = 0; i < n_rows; ++i) {
    if (dense[i].size() != n_cols) {
      throw ConfigError("matrix", "ragged dense matrix");
    }
    for (std::size_t j = 0; j < n_cols; ++j) {
      if (dense[i][j] != 0) {
        entries.emplace_back(static_cast<Index>(i), static_cast<Index>(j));
      }
    }
  }
  return from_entries(n_rows, n_cols, std::move(entries));
}

bool SparseBinaryMatrix::contains(std::size_t i, std::size_t j) const {
  auto r = row(i);
  return std::binary_search(r.begin(), r.end(), static_cast<Index>(j));
}

SparseBinaryMatrix SparseBinaryMatrix::submatrix(
    std::span<const Index> keep_rows, std::span<const Index> keep_cols,
    std::vector<Index>* row_map, std::vector<Index>* col_map) const {
  constexpr Index kDropped = std::numeric_limits<Index>::max();
  std::vector<Index> col_new(n_cols_, kDropped);
  std::vector<char> col_kept(n_cols_, 0);
  for (Index j : keep_cols) col_kept.at(j) = 1;

  // A kept row survives only if it still has an entry in a kept column, and
  // a kept column survives only if a surviving row touches it.
  std::vector<Index> rows;
  for (Index i : keep_rows) {
    for (Index j : row(i)) {
      if (col_kept[j]) {
        rows.push_back(i);
        break;
      }
    }
  }
  std::sort(rows.begin(), rows.end());
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());

  std::vector<char> col_used(n_cols_, 0);
  for (Index i : rows) {
    for (Index j : row(i)) {
      if (col_kept[j]) col_used[j] = 1;
    }
  }
  std::vector<Index> cols;
  for (std::size_t j = 0; j < n_cols_; ++j) {
    if (col_used[j]) {
      col_new[j] = static_cast<Index>(cols.size());
      cols.push_back(static_cast<Index>(j));
    }
  }

  std::vector<std::pair<Index, Index>> entries;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (Index j : row(rows[r])) {
      if (col_new[j] != kDropped) {
        entries.emplace_back(static_cast<Index>(r), col_new[j]);
      }
    }
  }
  std::vector<std::string> rl, cl;
  if (!row_labels_.empty()) {
    for (Index i : rows) rl.push_back(row_labels_[i]);
  }
  if (!col_labels_.empty()) {
    for (Index j : cols) cl.push_back(col_labels_[j]);
  }
  auto out = from_entries(rows.size(), cols.size(), std::move(entries),
                          std::move(rl), std::move(cl));
  if (row_map) *row_map = std::move(rows);
  if (col_map) *col_map = std::move(cols);
  return out;
}

}  // namespace patlas
