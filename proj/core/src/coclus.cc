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

#include "patlas/coclus.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <string>

#include "patlas/error.h"
#include "patlas/parallel.h"

namespace patlas {
namespace {

constexpr const char* kStage = "cluster";

using i64 = std::int64_t;
__extension__ typedef __int128 i128;

// Q * T^2 = T * in_block - sum_k R_k * C_k, evaluated in integers so that
// relabeling clusters or reordering the sums cannot change the result.
double modularity_from_counts(i64 total, i64 in_block,
                              const std::vector<i64>& row_mass,
                              const std::vector<i64>& col_mass) {
  i128 expected = 0;
  std::size_t g = std::min(row_mass.size(), col_mass.size());
  for (std::size_t k = 0; k < g; ++k) {
    expected += static_cast<i128>(row_mass[k]) * col_mass[k];
  }
  i128 numer = static_cast<i128>(total) * in_block - expected;
  long double t = static_cast<long double>(total);
  return static_cast<double>(static_cast<long double>(numer) / (t * t));
}

std::mt19937_64 make_rng(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed & 0xffffffffu),
                    static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream & 0xffffffffu),
                    static_cast<std::uint32_t>(stream >> 32)};
  return std::mt19937_64(seq);
}

void check_g(const SparseBinaryMatrix& m, int g) {
  if (m.empty()) throw Error(kStage, "cannot cluster an empty matrix");
  std::size_t limit = std::min(m.n_rows(), m.n_cols());
  if (g < 1 || static_cast<std::size_t>(g) > limit) {
    throw ConfigError(kStage, "g = " + std::to_string(g) +
                                  " is outside [1, min(n_rows, n_cols)] = [1, " +
                                  std::to_string(limit) + "]");
  }
}

// Alternating best-response optimizer for one run. The same code handles
// both directions: `side` is the axis being reassigned, `other` the fixed one.
class Run {
 public:
  Run(const SparseBinaryMatrix& m, int g)
      : m_(m), g_(g), total_(static_cast<i64>(m.nnz())),
        rows_(m.n_rows(), 0), cols_(m.n_cols(), 0),
        counts_(static_cast<std::size_t>(g), 0) {}

  // Seeded start: g rows chosen k-means++ style (far apart by cosine
  // overlap), every row joins its closest seed, then columns best-respond.
  void init(std::mt19937_64& rng) {
    const std::size_t n = rows_.size();
    std::vector<std::size_t> seeds;
    std::vector<double> closest(n, 0.0);  // max cosine to any chosen seed
    std::vector<int> mark(m_.n_cols(), -1);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    auto cosine_to = [&](std::size_t i, std::size_t s) {
      std::size_t hit = 0;
      for (Index j : m_.row(i)) hit += mark[j] == static_cast<int>(s) ? 1 : 0;
      double d = static_cast<double>(m_.row_degree(i)) * static_cast<double>(m_.row_degree(s));
      return d > 0 ? static_cast<double>(hit) / std::sqrt(d) : 0.0;
    };
    std::size_t first = static_cast<std::size_t>(rng() % n);
    while (static_cast<int>(seeds.size()) < g_) {
      std::size_t pick = first;
      if (!seeds.empty()) {
        double mass = 0.0;
        for (std::size_t i = 0; i < n; ++i) mass += (1.0 - closest[i]) * (1.0 - closest[i]);
        if (mass <= 0.0) break;
        double u = unit(rng) * mass;
        pick = n - 1;
        for (std::size_t i = 0; i < n; ++i) {
          u -= (1.0 - closest[i]) * (1.0 - closest[i]);
          if (u < 0.0) {
            pick = i;
            break;
          }
        }
      }
      for (Index j : m_.row(pick)) mark[j] = static_cast<int>(pick);
      seeds.push_back(pick);
      for (std::size_t i = 0; i < n; ++i) closest[i] = std::max(closest[i], cosine_to(i, pick));
      closest[pick] = 1.0;
    }
    // Closest seed per row; rows touching no seed get a random cluster.
    std::vector<double> best(n, 0.0);
    for (auto& r : rows_) r = static_cast<int>(rng() % static_cast<std::uint64_t>(g_));
    for (std::size_t k = 0; k < seeds.size(); ++k) {
      for (Index j : m_.row(seeds[k])) mark[j] = static_cast<int>(seeds[k]);
      for (std::size_t i = 0; i < n; ++i) {
        double c = cosine_to(i, seeds[k]);
        if (c > best[i]) {
          best[i] = c;
          rows_[i] = static_cast<int>(k);
        }
      }
    }
    // No current column cluster yet: every column starts at -1 so ties go to
    // the lowest id.
    std::fill(cols_.begin(), cols_.end(), -1);
    step(Axis::kCols);
  }

  // Returns the number of changed assignments; sets *reseeded on refill.
  std::size_t step(Axis axis, bool* reseeded = nullptr) {
    const bool by_row = axis == Axis::kRows;
    std::vector<int>& mine = by_row ? rows_ : cols_;
    const std::vector<int>& fixed = by_row ? cols_ : rows_;
    const std::size_t n = mine.size();

    // Degree mass of the fixed side per cluster.
    std::vector<i64> mass(static_cast<std::size_t>(g_), 0);
    for (std::size_t j = 0; j < fixed.size(); ++j) {
      i64 deg = static_cast<i64>(by_row ? m_.col_degree(j) : m_.row_degree(j));
      mass[static_cast<std::size_t>(fixed[j])] += deg;
    }

    std::vector<int> next(n);
    contribution_.assign(n, 0);
    std::size_t moves = 0;
    for (std::size_t i = 0; i < n; ++i) {
      auto nbrs = by_row ? m_.row(i) : m_.col(i);
      const i64 deg = static_cast<i64>(nbrs.size());
      std::fill(counts_.begin(), counts_.end(), 0);
      for (Index j : nbrs) ++counts_[static_cast<std::size_t>(fixed[j])];

      // Score in units of 1/T^2: T * a_ik - deg_i * mass_k.
      const int current = mine[i];
      int best = current;
      i64 best_score = current >= 0
                           ? total_ * counts_[current] - deg * mass[current]
                           : 0;
      for (int k = 0; k < g_; ++k) {
        i64 score = total_ * counts_[k] - deg * mass[k];
        if (best < 0 || score > best_score) {
          best = k;
          best_score = score;
        }
      }
      next[i] = best;
      contribution_[i] = best_score;
      if (best != current) ++moves;
    }
    mine.swap(next);

    bool refilled = reseed(mine, mass, axis);
    if (reseeded) *reseeded = *reseeded || refilled;
    return moves;
  }

  double modularity() const {
    std::vector<i64> row_mass(static_cast<std::size_t>(g_), 0);
    std::vector<i64> col_mass(static_cast<std::size_t>(g_), 0);
    i64 in_block = 0;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      row_mass[rows_[i]] += static_cast<i64>(m_.row_degree(i));
      for (Index j : m_.row(i)) {
        if (cols_[j] == rows_[i]) ++in_block;
      }
    }
    for (std::size_t j = 0; j < cols_.size(); ++j) {
      col_mass[cols_[j]] += static_cast<i64>(m_.col_degree(j));
    }
    return modularity_from_counts(total_, in_block, row_mass, col_mass);
  }

  CoClustering result() const {
    CoClustering c;
    c.g = g_;
    c.row_assignment = rows_;
    c.col_assignment = cols_;
    c.modularity = modularity();
    return c;
  }

 private:
  // Refills every empty cluster with the item of lowest current contribution
  // taken from a cluster that keeps at least one other member.
  bool reseed(std::vector<int>& mine, const std::vector<i64>& mass, Axis axis) {
    std::vector<std::size_t> size(static_cast<std::size_t>(g_), 0);
    for (int k : mine) ++size[static_cast<std::size_t>(k)];
    bool any = false;
    for (int k = 0; k < g_; ++k) {
      if (size[k] != 0) continue;
      std::size_t pick = mine.size();
      for (std::size_t i = 0; i < mine.size(); ++i) {
        if (size[mine[i]] < 2) continue;
        if (pick == mine.size() || contribution_[i] < contribution_[pick]) pick = i;
      }
      if (pick == mine.size()) break;  // fewer items than clusters
      --size[mine[pick]];
      mine[pick] = k;
      ++size[k];
      auto nbrs = axis == Axis::kRows ? m_.row(pick) : m_.col(pick);
      const std::vector<int>& fixed = axis == Axis::kRows ? cols_ : rows_;
      i64 a = 0;
      for (Index j : nbrs) a += fixed[j] == k ? 1 : 0;
      contribution_[pick] = total_ * a - static_cast<i64>(nbrs.size()) * mass[k];
      any = true;
    }
    return any;
  }

  const SparseBinaryMatrix& m_;
  const int g_;
  const i64 total_;
  std::vector<int> rows_;
  std::vector<int> cols_;
  std::vector<i64> counts_;
  std::vector<i64> contribution_;
};

CoClustering trivial_clustering(const SparseBinaryMatrix& m) {
  CoClustering c;
  c.g = 1;
  c.row_assignment.assign(m.n_rows(), 0);
  c.col_assignment.assign(m.n_cols(), 0);
  c.modularity = modularity_of(m, c.row_assignment, c.col_assignment);
  return c;
}

// Exact optimum when the smaller axis admits at most kExactLimit labelings.
// Given one side, Q separates over the items of the other side, so the best
// response there is optimal; enumerating the smaller side is therefore exact.
constexpr std::uint64_t kExactLimit = 4096;

std::optional<CoClustering> exact_small(const SparseBinaryMatrix& m, int g) {
  const bool rows_small = m.n_rows() <= m.n_cols();
  const std::size_t n = rows_small ? m.n_rows() : m.n_cols();
  std::uint64_t space = 1;
  for (std::size_t i = 0; i < n; ++i) {
    space *= static_cast<std::uint64_t>(g);
    if (space > kExactLimit) return std::nullopt;
  }
  const std::size_t other = rows_small ? m.n_cols() : m.n_rows();
  const i64 total = static_cast<i64>(m.nnz());
  auto deg_small = [&](std::size_t i) {
    return static_cast<i64>(rows_small ? m.row_degree(i) : m.col_degree(i));
  };
  auto nbrs_other = [&](std::size_t j) { return rows_small ? m.col(j) : m.row(j); };

  std::vector<int> label(n, 0), best_small, best_other, choice(other);
  std::vector<i64> mass(static_cast<std::size_t>(g)), counts(static_cast<std::size_t>(g));
  i64 best_score = 0;
  bool have = false;
  for (std::uint64_t code = 0; code < space; ++code) {
    std::uint64_t c = code;
    for (std::size_t i = 0; i < n; ++i) {
      label[i] = static_cast<int>(c % static_cast<std::uint64_t>(g));
      c /= static_cast<std::uint64_t>(g);
    }
    std::fill(mass.begin(), mass.end(), 0);
    for (std::size_t i = 0; i < n; ++i) mass[static_cast<std::size_t>(label[i])] += deg_small(i);
    // Sum over the other side of max_k (T * a_jk - d_j * M_k) equals Q * T^2.
    i64 score = 0;
    for (std::size_t j = 0; j < other; ++j) {
      auto nb = nbrs_other(j);
      std::fill(counts.begin(), counts.end(), 0);
      for (Index i : nb) ++counts[static_cast<std::size_t>(label[i])];
      const i64 d = static_cast<i64>(nb.size());
      int arg = 0;
      i64 top = total * counts[0] - d * mass[0];
      for (int k = 1; k < g; ++k) {
        i64 v = total * counts[k] - d * mass[k];
        if (v > top) {
          top = v;
          arg = k;
        }
      }
      choice[j] = arg;
      score += top;
    }
    if (!have || score > best_score) {
      have = true;
      best_score = score;
      best_small = label;
      best_other = choice;
    }
  }
  CoClustering out;
  out.g = g;
  out.row_assignment = rows_small ? best_small : best_other;
  out.col_assignment = rows_small ? best_other : best_small;
  out.modularity = modularity_of(m, out.row_assignment, out.col_assignment);
  return out;
}

}  // namespace

double modularity_of(const SparseBinaryMatrix& m, std::span<const int> rows,
                     std::span<const int> cols) {
  if (m.empty()) throw Error(kStage, "modularity of an empty matrix");
  if (rows.size() != m.n_rows() || cols.size() != m.n_cols()) {
    throw ConfigError(kStage, "assignments do not cover the matrix");
  }
  int max_id = 0;
  for (int k : rows) {
    if (k < 0) throw ConfigError(kStage, "negative cluster id");
    max_id = std::max(max_id, k);
  }
  for (int k : cols) {
    if (k < 0) throw ConfigError(kStage, "negative cluster id");
    max_id = std::max(max_id, k);
  }
  std::vector<i64> row_mass(static_cast<std::size_t>(max_id) + 1, 0);
  std::vector<i64> col_mass(static_cast<std::size_t>(max_id) + 1, 0);
  i64 in_block = 0;
  for (std::size_t i = 0; i < m.n_rows(); ++i) {
    row_mass[rows[i]] += static_cast<i64>(m.row_degree(i));
    for (Index j : m.row(i)) {
      if (cols[j] == rows[i]) ++in_block;
    }
  }
  for (std::size_t j = 0; j < m.n_cols(); ++j) {
    col_mass[cols[j]] += static_cast<i64>(m.col_degree(j));
  }
  return modularity_from_counts(static_cast<i64>(m.nnz()), in_block, row_mass,
                                col_mass);
}

double modularity_of(const SparseBinaryMatrix& m, const CoClustering& c) {
  return modularity_of(m, c.row_assignment, c.col_assignment);
}

CoClustering fit_once(const SparseBinaryMatrix& m, int g, std::uint64_t seed,
                      int max_iter, std::vector<SweepRecord>* trace) {
  check_g(m, g);
  if (g == 1) return trivial_clustering(m);
  std::mt19937_64 rng(seed);
  Run run(m, g);
  run.init(rng);
  double q = run.modularity();
  for (int it = 0; it < max_iter; ++it) {
    SweepRecord rec;
    rec.modularity_before = q;
    rec.moves = run.step(Axis::kRows, &rec.reseeded);
    rec.moves += run.step(Axis::kCols, &rec.reseeded);
    q = run.modularity();
    rec.modularity_after = q;
    if (trace) trace->push_back(rec);
    if (rec.moves == 0) break;
  }
  return run.result();
}

CoClustering fit(const SparseBinaryMatrix& m, const FitOptions& options) {
  check_g(m, options.g);
  if (options.g == 1) return trivial_clustering(m);
  if (options.restarts < 1) throw ConfigError(kStage, "restarts must be >= 1");
  if (options.max_iter < 1) throw ConfigError(kStage, "max_iter must be >= 1");
  if (auto exact = exact_small(m, options.g)) return std::move(*exact);

  // Restart seeds are drawn up front so results do not depend on which
  // thread ran which restart.
  auto seeder = make_rng(options.seed, 1);
  std::vector<std::uint64_t> seeds(static_cast<std::size_t>(options.restarts));
  for (auto& s : seeds) s = seeder();
  std::vector<CoClustering> runs(seeds.size());
  parallel_for(runs.size(), [&](std::size_t r) {
    runs[r] = fit_once(m, options.g, seeds[r], options.max_iter);
  });
  std::size_t best = 0;
  for (std::size_t r = 1; r < runs.size(); ++r) {
    if (runs[r].modularity > runs[best].modularity) best = r;
  }
  return std::move(runs[best]);
}

ModularityCurve modularity_curve(const SparseBinaryMatrix& m, int g_min,
                                 int g_max, std::uint64_t seed, int restarts,
                                 int max_iter) {
  std::size_t limit = std::min(m.n_rows(), m.n_cols());
  if (g_min < 2 || g_max < g_min || static_cast<std::size_t>(g_max) > limit) {
    throw ConfigError(kStage, "g range [" + std::to_string(g_min) + ", " +
                                  std::to_string(g_max) + "] outside [2, " +
                                  std::to_string(limit) + "]");
  }
  ModularityCurve curve;
  for (int g = g_min; g <= g_max; ++g) {
    FitOptions opt{g, seed, max_iter, restarts};
    curve.push_back({g, fit(m, opt).modularity});
  }
  return curve;
}

OverlapMatrix overlap(std::span<const int> left, int left_g,
                      std::span<const int> right, int right_g) {
  if (left.size() != right.size()) {
    throw ConfigError(kStage, "overlap between clusterings of different item sets");
  }
  if (left_g < 0 || right_g < 0) throw ConfigError(kStage, "negative cluster count");
  std::vector<std::size_t> lsize(static_cast<std::size_t>(left_g), 0);
  std::vector<std::size_t> rsize(static_cast<std::size_t>(right_g), 0);
  std::vector<std::vector<std::size_t>> inter(
      static_cast<std::size_t>(left_g),
      std::vector<std::size_t>(static_cast<std::size_t>(right_g), 0));
  for (std::size_t i = 0; i < left.size(); ++i) {
    if (left[i] < 0 || left[i] >= left_g || right[i] < 0 || right[i] >= right_g) {
      throw ConfigError(kStage, "cluster id outside [0, g)");
    }
    ++lsize[left[i]];
    ++rsize[right[i]];
    ++inter[left[i]][right[i]];
  }
  OverlapMatrix f;
  f.values.assign(static_cast<std::size_t>(left_g),
                  std::vector<double>(static_cast<std::size_t>(right_g), 0.0));
  for (int a = 0; a < left_g; ++a) {
    for (int b = 0; b < right_g; ++b) {
      std::size_t denom = std::max(lsize[a], rsize[b]);
      if (denom > 0) {
        f.values[a][b] = static_cast<double>(inter[a][b]) / static_cast<double>(denom);
      }
    }
  }
  return f;
}

OverlapMatrix overlap(const CoClustering& l, const CoClustering& r, Axis side) {
  if (side == Axis::kRows) return overlap(l.row_assignment, l.g, r.row_assignment, r.g);
  return overlap(l.col_assignment, l.g, r.col_assignment, r.g);
}

std::vector<int> best_matching(const OverlapMatrix& f) {
  struct Cell {
    double v;
    int a, b;
  };
  std::vector<Cell> cells;
  for (std::size_t a = 0; a < f.values.size(); ++a) {
    for (std::size_t b = 0; b < f.values[a].size(); ++b) {
      cells.push_back({f.values[a][b], static_cast<int>(a), static_cast<int>(b)});
    }
  }
  std::stable_sort(cells.begin(), cells.end(),
                   [](const Cell& x, const Cell& y) { return x.v > y.v; });
  std::vector<int> match(f.values.size(), -1);
  std::vector<char> used(f.values.empty() ? 0 : f.values.front().size(), 0);
  for (const auto& c : cells) {
    if (match[c.a] < 0 && !used[c.b]) {
      match[c.a] = c.b;
      used[c.b] = 1;
    }
  }
  return match;
}

SensitivityResult sensitivity_subsample(const SparseBinaryMatrix& m,
                                        const SensitivityOptions& o) {
  if (!(o.fraction > 0.0 && o.fraction < 1.0)) {
    throw ConfigError(kStage, "subsample fraction must lie in (0, 1)");
  }
  if (o.trials < 0) throw ConfigError(kStage, "trials must be >= 0");
  SensitivityResult out;
  out.full = fit(m, FitOptions{o.g, o.seed, o.max_iter, o.restarts});

  const bool rows = o.axis == Axis::kRows;
  const std::size_t n = rows ? m.n_rows() : m.n_cols();
  const std::size_t keep_n = static_cast<std::size_t>(
      std::ceil(o.fraction * static_cast<double>(n) - 1e-9));

  std::vector<Index> all_rows(m.n_rows()), all_cols(m.n_cols());
  std::iota(all_rows.begin(), all_rows.end(), 0);
  std::iota(all_cols.begin(), all_cols.end(), 0);

  for (int t = 0; t < o.trials; ++t) {
    auto rng = make_rng(o.seed, 0x5eed0000ull + static_cast<std::uint64_t>(t));
    std::vector<Index> pool(n);
    std::iota(pool.begin(), pool.end(), 0);
    // Partial Fisher-Yates: the first keep_n slots are a uniform sample.
    for (std::size_t i = 0; i < keep_n && i + 1 < n; ++i) {
      std::size_t j = i + static_cast<std::size_t>(rng() % (n - i));
      std::swap(pool[i], pool[j]);
    }
    pool.resize(keep_n);
    std::sort(pool.begin(), pool.end());

    std::vector<Index> row_map, col_map;
    SparseBinaryMatrix sub = rows ? m.submatrix(pool, all_cols, &row_map, &col_map)
                                  : m.submatrix(all_rows, pool, &row_map, &col_map);
    if (sub.empty()) throw Error(kStage, "subsample produced an empty matrix");

    SensitivityTrial trial;
    trial.kept = rows ? row_map : col_map;
    int limit = static_cast<int>(std::min(sub.n_rows(), sub.n_cols()));
    int g_hi = std::min(o.g_max, limit);
    if (o.g_min <= g_hi) {
      trial.curve = modularity_curve(sub, o.g_min, g_hi, o.seed, o.restarts, o.max_iter);
    }
    int g = std::min(o.g, limit);
    trial.clustering = fit(sub, FitOptions{g, o.seed, o.max_iter, o.restarts});

    const std::vector<int>& full_assign =
        rows ? out.full.row_assignment : out.full.col_assignment;
    std::vector<int> restricted;
    restricted.reserve(trial.kept.size());
    for (Index i : trial.kept) restricted.push_back(full_assign[i]);
    const std::vector<int>& sub_assign =
        rows ? trial.clustering.row_assignment : trial.clustering.col_assignment;
    trial.overlap = overlap(sub_assign, trial.clustering.g, restricted, out.full.g);
    out.trials.push_back(std::move(trial));
  }
  return out;
}

double adjusted_rand_index(std::span<const int> a, std::span<const int> b) {
  if (a.size() != b.size()) throw ConfigError(kStage, "ARI over different item sets");
  const double n = static_cast<double>(a.size());
  if (a.size() < 2) return 1.0;
  std::map<std::pair<int, int>, double> table;
  std::map<int, double> ra, rb;
  for (std::size_t i = 0; i < a.size(); ++i) {
    table[{a[i], b[i]}] += 1;
    ra[a[i]] += 1;
    rb[b[i]] += 1;
  }
  auto c2 = [](double x) { return x * (x - 1) / 2; };
  double index = 0, sa = 0, sb = 0;
  for (const auto& [k, v] : table) index += c2(v);
  for (const auto& [k, v] : ra) sa += c2(v);
  for (const auto& [k, v] : rb) sb += c2(v);
  double expected = sa * sb / c2(n);
  double max_index = (sa + sb) / 2;
  if (max_index == expected) return 1.0;
  return (index - expected) / (max_index - expected);
}

}  // namespace patlas
