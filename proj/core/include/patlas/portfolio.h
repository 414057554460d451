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

// Technology-area portfolios and their diversification over time.
//
// A portfolio is an entity's accumulated credit per area, normalized to
// proportions. Entropy uses the natural log.

#ifndef PATLAS_PORTFOLIO_H_
#define PATLAS_PORTFOLIO_H_

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "patlas/entity.h"

namespace patlas {

// application_id -> technology area in [0, g).
using AreaLabels = std::map<std::string, int, std::less<>>;

// Shannon entropy of a proportion vector. Throws ConfigError when entries
// are negative or do not sum to 1 within 1e-9.
double entropy(std::span<const double> p);
// Entropy of nonnegative weights after normalization; 0 for all-zero input.
double entropy_of_counts(std::span<const double> counts);

// Mean |dS| over every single-patent addition to every integer portfolio of
// n patents over g areas, counting only nonzero changes.
double mean_entropy_step(int n, int g);

enum class GroupBy { kNone, kRegion, kCategory };
std::string_view group_by_name(GroupBy g);

struct ProportionRow {
  std::string group;  // "all" for GroupBy::kNone
  int year = 0;
  std::vector<double> counts;       // applications per area
  std::vector<double> proportions;  // counts / sum
};

// Application counts per (group, year, area). Applications without an area
// label are skipped; years without applications are omitted.
std::vector<ProportionRow> proportions_timeseries(std::span<const CreditRow> ledger,
                                                  const AreaLabels& labels, int g,
                                                  GroupBy group_by);

struct RankedRegion {
  std::string region;
  double count = 0.0;
  int rank = 0;  // 1-based
};

struct RankingYear {
  int year = 0;
  std::vector<RankedRegion> regions;  // best first, at most top_n
};

// Per year, regions by credited application count (descending, ties by
// name). `area` restricts to one technology area. Unknown regions ("??")
// are left out.
std::vector<RankingYear> region_rankings(std::span<const CreditRow> ledger,
                                         const AreaLabels& labels,
                                         std::optional<int> area, std::size_t top_n = 10);

// Total applications per known region over all years, descending.
std::vector<RankedRegion> region_totals(std::span<const CreditRow> ledger);

enum class Quartile { kLower, kInter, kUpper };
std::string_view quartile_name(Quartile q);

// Lower when credit < q25, upper when credit > q75, inter otherwise, with
// linear-interpolation percentiles. Throws ConfigError for fewer than four
// entities or a nonpositive credit.
std::map<std::string, Quartile> quartile_groups(const std::map<std::string, double>& credit);

struct TrajectoryPoint {
  int year = 0;
  double credit = 0.0;   // accumulated, all areas
  double entropy = 0.0;  // of the accumulated portfolio
  std::vector<double> areas;
};

struct Trajectory {
  std::string entity_id;
  std::vector<TrajectoryPoint> points;  // consecutive years
};

// Yearly accumulated portfolios, from each entity's first credited year up
// to `last_year` (default: the latest year in the ledger). Years without
// new credit repeat the previous point.
std::vector<Trajectory> trajectories(std::span<const CreditRow> ledger, const AreaLabels& labels,
                                     int g, std::optional<int> last_year = std::nullopt);

// Accumulated credit per entity at the end of `year`; entities that have
// not started yet are absent.
std::map<std::string, double> credit_as_of(std::span<const Trajectory> trajectories, int year);

enum class XAxis { kLogCredit, kRelativeYear };
enum class YAxis { kEntropy, kLogEntropy };
enum class Density { kLow, kIntermediate, kHigh };
std::string_view density_name(Density d);

struct FieldOptions {
  XAxis x = XAxis::kLogCredit;
  YAxis y = YAxis::kEntropy;
  std::size_t bins = 20;
  int base_year = 2004;
  double epsilon = 1e-3;
};

struct FieldBin {
  std::size_t ix = 0;
  std::size_t iy = 0;
  double x = 0.0;  // bin centre
  double y = 0.0;
  double dx = 0.0;  // mean displacement
  double dy = 0.0;
  std::size_t count = 0;
  Density density = Density::kLow;
};

struct VectorField {
  double x_lo = 0.0, x_hi = 1.0, y_lo = 0.0, y_hi = 1.0;
  std::size_t bins = 0;
  std::size_t total_vectors = 0;
  std::vector<FieldBin> cells;  // nonempty bins, row-major by (iy, ix)
};

// Year-over-year displacement vectors, binned by their start point.
VectorField vector_field(std::span<const Trajectory> trajectories, const FieldOptions& options);

// Terciles of the counts decide the class: <= first tercile is low,
// > second tercile is high.
std::vector<Density> density_classes(std::span<const std::size_t> counts);

struct HeatPoint {
  double credit = 0.0;
  double entropy = 0.0;
};

struct Heatmap2D {
  std::size_t bins = 0;
  double x_lo = 0.0, x_hi = 1.0, y_lo = 0.0, y_hi = 1.0;  // log10 axes
  double epsilon = 1e-3;
  std::vector<std::size_t> counts;  // bins * bins, index iy * bins + ix
  std::vector<Density> classes;     // per cell; meaningful where count > 0
  std::size_t at(std::size_t ix, std::size_t iy) const { return counts[iy * bins + ix]; }
};

// Counts of (log10 credit, log10(entropy + eps)) on an equal-width grid.
Heatmap2D heatmap(std::span<const HeatPoint> points, std::size_t bins = 50, double epsilon = 1e-3);

// group -> year -> mean log10(entropy + eps) over the group's entities that
// have a point with positive credit in that year.
std::map<std::string, std::map<int, double>> avg_log_entropy_curves(
    std::span<const Trajectory> trajectories, const std::map<std::string, std::string>& groups,
    double epsilon = 1e-3);

}  // namespace patlas

#endif  // PATLAS_PORTFOLIO_H_
