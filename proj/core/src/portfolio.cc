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

#include "patlas/portfolio.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "patlas/error.h"
#include "patlas/parallel.h"

namespace patlas {
namespace {

constexpr const char* kStage = "portfolio";

std::size_t bin_of(double v, double lo, double hi, std::size_t bins) {
  if (!(hi > lo)) return 0;
  double t = (v - lo) / (hi - lo) * static_cast<double>(bins);
  if (t < 0.0) return 0;
  return std::min(static_cast<std::size_t>(t), bins - 1);
}

// Pads a degenerate range so every value lands inside one bin.
void widen(double& lo, double& hi) {
  if (hi > lo) return;
  lo -= 0.5;
  hi += 0.5;
}

}  // namespace

double entropy(std::span<const double> p) {
  double sum = 0.0;
  for (double v : p) {
    if (!(v >= 0.0)) throw ConfigError(kStage, "portfolio proportions must be nonnegative");
    sum += v;
  }
  if (std::abs(sum - 1.0) > 1e-9) throw ConfigError(kStage, "portfolio proportions must sum to 1");
  double s = 0.0;
  for (double v : p) {
    if (v > 0.0) s -= v * std::log(v);
  }
  return s < 0.0 ? 0.0 : s;
}

double entropy_of_counts(std::span<const double> counts) {
  double total = 0.0;
  for (double c : counts) {
    if (!(c >= 0.0)) throw ConfigError(kStage, "negative portfolio weight");
    total += c;
  }
  if (total <= 0.0) return 0.0;
  double s = 0.0;
  for (double c : counts) {
    if (c > 0.0) {
      double p = c / total;
      s -= p * std::log(p);
    }
  }
  return s < 0.0 ? 0.0 : s;
}

double mean_entropy_step(int n, int g) {
  if (n < 1 || g < 2) throw ConfigError(kStage, "mean_entropy_step needs n >= 1 and g >= 2");
  std::vector<double> counts(static_cast<std::size_t>(g), 0.0);
  double sum = 0.0;
  std::size_t steps = 0;
  // Visits every composition of n into g nonnegative parts.
  auto visit = [&](auto&& self, int area, int left) -> void {
    if (area == g - 1) {
      counts[area] = left;
      const double base = entropy_of_counts(counts);
      for (int k = 0; k < g; ++k) {
        counts[k] += 1.0;
        double d = std::abs(entropy_of_counts(counts) - base);
        counts[k] -= 1.0;
        if (d > 1e-12) {
          sum += d;
          ++steps;
        }
      }
      return;
    }
    for (int c = 0; c <= left; ++c) {
      counts[area] = c;
      self(self, area + 1, left - c);
    }
  };
  visit(visit, 0, n);
  return steps ? sum / static_cast<double>(steps) : 0.0;
}

std::string_view group_by_name(GroupBy g) {
  switch (g) {
    case GroupBy::kNone: return "none";
    case GroupBy::kRegion: return "region";
    case GroupBy::kCategory: return "category";
  }
  return "none";
}

std::vector<ProportionRow> proportions_timeseries(std::span<const CreditRow> ledger,
                                                  const AreaLabels& labels, int g,
                                                  GroupBy group_by) {
  if (g < 1) throw ConfigError(kStage, "g must be positive");
  std::map<std::pair<std::string, int>, std::vector<double>> table;
  for (const auto& row : ledger) {
    auto it = labels.find(row.application_id);
    if (it == labels.end()) continue;
    if (it->second < 0 || it->second >= g) throw ConfigError(kStage, "area label out of range");
    std::string group = "all";
    if (group_by == GroupBy::kRegion) group = row.region;
    if (group_by == GroupBy::kCategory) group = std::string(category_name(row.category));
    auto& counts = table[{group, row.year}];
    counts.resize(static_cast<std::size_t>(g), 0.0);
    counts[static_cast<std::size_t>(it->second)] += 1.0;
  }
  std::vector<ProportionRow> out;
  for (auto& [key, counts] : table) {
    double total = std::accumulate(counts.begin(), counts.end(), 0.0);
    ProportionRow row{key.first, key.second, counts, counts};
    for (auto& p : row.proportions) p /= total;
    out.push_back(std::move(row));
  }
  return out;
}

std::vector<RankingYear> region_rankings(std::span<const CreditRow> ledger,
                                         const AreaLabels& labels, std::optional<int> area,
                                         std::size_t top_n) {
  std::map<int, std::map<std::string, double>> by_year;
  for (const auto& row : ledger) {
    if (row.region == "??") continue;
    if (area) {
      auto it = labels.find(row.application_id);
      if (it == labels.end() || it->second != *area) continue;
    }
    by_year[row.year][row.region] += 1.0;
  }
  std::vector<RankingYear> out;
  for (auto& [year, regions] : by_year) {
    RankingYear ry{year, {}};
    for (auto& [r, c] : regions) ry.regions.push_back({r, c, 0});
    std::stable_sort(ry.regions.begin(), ry.regions.end(),
                     [](const RankedRegion& a, const RankedRegion& b) { return a.count > b.count; });
    if (ry.regions.size() > top_n) ry.regions.resize(top_n);
    for (std::size_t i = 0; i < ry.regions.size(); ++i) ry.regions[i].rank = static_cast<int>(i + 1);
    out.push_back(std::move(ry));
  }
  return out;
}

std::vector<RankedRegion> region_totals(std::span<const CreditRow> ledger) {
  std::map<std::string, double> totals;
  for (const auto& row : ledger) {
    if (row.region != "??") totals[row.region] += 1.0;
  }
  std::vector<RankedRegion> out;
  for (auto& [r, c] : totals) out.push_back({r, c, 0});
  std::stable_sort(out.begin(), out.end(),
                   [](const RankedRegion& a, const RankedRegion& b) { return a.count > b.count; });
  for (std::size_t i = 0; i < out.size(); ++i) out[i].rank = static_cast<int>(i + 1);
  return out;
}

std::string_view quartile_name(Quartile q) {
  switch (q) {
    case Quartile::kLower: return "lower";
    case Quartile::kInter: return "inter";
    case Quartile::kUpper: return "upper";
  }
  return "inter";
}

std::map<std::string, Quartile> quartile_groups(const std::map<std::string, double>& credit) {
  if (credit.size() < 4) throw ConfigError(kStage, "quartile groups need at least 4 entities");
  std::vector<double> values;
  for (const auto& [id, c] : credit) {
    if (!(c > 0.0)) throw ConfigError(kStage, "entity '" + id + "' has nonpositive credit");
    values.push_back(c);
  }
  const double q25 = percentile(values, 25.0);
  const double q75 = percentile(values, 75.0);
  std::map<std::string, Quartile> out;
  for (const auto& [id, c] : credit) {
    out[id] = c < q25 ? Quartile::kLower : (c > q75 ? Quartile::kUpper : Quartile::kInter);
  }
  return out;
}

std::vector<Trajectory> trajectories(std::span<const CreditRow> ledger, const AreaLabels& labels,
                                     int g, std::optional<int> last_year) {
  if (g < 1) throw ConfigError(kStage, "g must be positive");
  // entity -> year -> per-area credit gained that year
  std::map<std::string, std::map<int, std::vector<double>>> gains;
  int max_year = last_year.value_or(std::numeric_limits<int>::min());
  for (const auto& row : ledger) {
    auto it = labels.find(row.application_id);
    if (it == labels.end()) continue;
    if (it->second < 0 || it->second >= g) throw ConfigError(kStage, "area label out of range");
    if (!last_year) max_year = std::max(max_year, row.year);
    for (const auto& [id, c] : row.credits) {
      auto& v = gains[id][row.year];
      v.resize(static_cast<std::size_t>(g), 0.0);
      v[static_cast<std::size_t>(it->second)] += c;
    }
  }
  std::vector<const std::string*> ids;
  std::vector<const std::map<int, std::vector<double>>*> yearly;
  for (const auto& [id, y] : gains) {
    ids.push_back(&id);
    yearly.push_back(&y);
  }
  std::vector<Trajectory> out(ids.size());
  parallel_for(ids.size(), [&](std::size_t e) {
    Trajectory& t = out[e];
    t.entity_id = *ids[e];
    const auto& years = *yearly[e];
    std::vector<double> acc(static_cast<std::size_t>(g), 0.0);
    for (int y = years.begin()->first; y <= max_year; ++y) {
      if (auto it = years.find(y); it != years.end()) {
        for (std::size_t k = 0; k < acc.size(); ++k) acc[k] += it->second[k];
      }
      TrajectoryPoint p;
      p.year = y;
      p.credit = std::accumulate(acc.begin(), acc.end(), 0.0);
      p.entropy = entropy_of_counts(acc);
      p.areas = acc;
      t.points.push_back(std::move(p));
    }
  });
  return out;
}

std::map<std::string, double> credit_as_of(std::span<const Trajectory> trajectories, int year) {
  std::map<std::string, double> out;
  for (const auto& t : trajectories) {
    const TrajectoryPoint* last = nullptr;
    for (const auto& p : t.points) {
      if (p.year <= year) last = &p;
    }
    if (last && last->credit > 0.0) out[t.entity_id] = last->credit;
  }
  return out;
}

std::string_view density_name(Density d) {
  switch (d) {
    case Density::kLow: return "low";
    case Density::kIntermediate: return "intermediate";
    case Density::kHigh: return "high";
  }
  return "low";
}

std::vector<Density> density_classes(std::span<const std::size_t> counts) {
  std::vector<Density> out(counts.size(), Density::kLow);
  if (counts.empty()) return out;
  std::vector<double> v(counts.begin(), counts.end());
  const double t1 = percentile(v, 100.0 / 3.0);
  const double t2 = percentile(v, 200.0 / 3.0);
  for (std::size_t i = 0; i < counts.size(); ++i) {
    double c = static_cast<double>(counts[i]);
    out[i] = c > t2 ? Density::kHigh : (c > t1 ? Density::kIntermediate : Density::kLow);
  }
  return out;
}

VectorField vector_field(std::span<const Trajectory> trajectories, const FieldOptions& options) {
  if (options.bins == 0) throw ConfigError(kStage, "vector field needs at least one bin");
  struct Vec {
    double x0, y0, dx, dy;
  };
  auto x_of = [&](const TrajectoryPoint& p) {
    return options.x == XAxis::kLogCredit ? std::log10(p.credit)
                                          : static_cast<double>(p.year - options.base_year);
  };
  auto y_of = [&](const TrajectoryPoint& p) {
    return options.y == YAxis::kEntropy ? p.entropy : std::log10(p.entropy + options.epsilon);
  };
  std::vector<std::vector<Vec>> per(trajectories.size());
  parallel_for(trajectories.size(), [&](std::size_t e) {
    const auto& pts = trajectories[e].points;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
      double x0 = x_of(pts[i]), y0 = y_of(pts[i]);
      per[e].push_back({x0, y0, x_of(pts[i + 1]) - x0, y_of(pts[i + 1]) - y0});
    }
  });
  VectorField f;
  f.bins = options.bins;
  std::vector<Vec> all;
  for (auto& v : per) all.insert(all.end(), v.begin(), v.end());
  f.total_vectors = all.size();
  if (all.empty()) return f;
  f.x_lo = f.x_hi = all.front().x0;
  f.y_lo = f.y_hi = all.front().y0;
  for (const auto& v : all) {
    f.x_lo = std::min(f.x_lo, v.x0);
    f.x_hi = std::max(f.x_hi, v.x0);
    f.y_lo = std::min(f.y_lo, v.y0);
    f.y_hi = std::max(f.y_hi, v.y0);
  }
  widen(f.x_lo, f.x_hi);
  widen(f.y_lo, f.y_hi);
  std::map<std::pair<std::size_t, std::size_t>, FieldBin> grid;
  for (const auto& v : all) {
    std::size_t ix = bin_of(v.x0, f.x_lo, f.x_hi, f.bins);
    std::size_t iy = bin_of(v.y0, f.y_lo, f.y_hi, f.bins);
    FieldBin& b = grid[{iy, ix}];
    b.ix = ix;
    b.iy = iy;
    b.dx += v.dx;
    b.dy += v.dy;
    ++b.count;
  }
  const double wx = (f.x_hi - f.x_lo) / static_cast<double>(f.bins);
  const double wy = (f.y_hi - f.y_lo) / static_cast<double>(f.bins);
  std::vector<std::size_t> counts;
  for (auto& [key, b] : grid) {
    b.dx /= static_cast<double>(b.count);
    b.dy /= static_cast<double>(b.count);
    b.x = f.x_lo + (static_cast<double>(b.ix) + 0.5) * wx;
    b.y = f.y_lo + (static_cast<double>(b.iy) + 0.5) * wy;
    counts.push_back(b.count);
    f.cells.push_back(b);
  }
  auto classes = density_classes(counts);
  for (std::size_t i = 0; i < f.cells.size(); ++i) f.cells[i].density = classes[i];
  return f;
}

Heatmap2D heatmap(std::span<const HeatPoint> points, std::size_t bins, double epsilon) {
  if (bins == 0) throw ConfigError(kStage, "heat map needs at least one bin");
  if (points.empty()) throw ConfigError(kStage, "heat map needs at least one point");
  Heatmap2D h;
  h.bins = bins;
  h.epsilon = epsilon;
  std::vector<std::pair<double, double>> xy;
  for (const auto& p : points) {
    if (!(p.credit > 0.0)) throw ConfigError(kStage, "heat map credit must be positive");
    if (!(p.entropy >= 0.0)) throw ConfigError(kStage, "heat map entropy must be nonnegative");
    xy.emplace_back(std::log10(p.credit), std::log10(p.entropy + epsilon));
  }
  h.x_lo = h.x_hi = xy.front().first;
  h.y_lo = h.y_hi = xy.front().second;
  for (auto [x, y] : xy) {
    h.x_lo = std::min(h.x_lo, x);
    h.x_hi = std::max(h.x_hi, x);
    h.y_lo = std::min(h.y_lo, y);
    h.y_hi = std::max(h.y_hi, y);
  }
  widen(h.x_lo, h.x_hi);
  widen(h.y_lo, h.y_hi);
  h.counts.assign(bins * bins, 0);
  for (auto [x, y] : xy) {
    ++h.counts[bin_of(y, h.y_lo, h.y_hi, bins) * bins + bin_of(x, h.x_lo, h.x_hi, bins)];
  }
  std::vector<std::size_t> nonzero;
  for (auto c : h.counts) {
    if (c > 0) nonzero.push_back(c);
  }
  auto classes = density_classes(nonzero);
  h.classes.assign(bins * bins, Density::kLow);
  for (std::size_t i = 0, k = 0; i < h.counts.size(); ++i) {
    if (h.counts[i] > 0) h.classes[i] = classes[k++];
  }
  return h;
}

std::map<std::string, std::map<int, double>> avg_log_entropy_curves(
    std::span<const Trajectory> trajectories, const std::map<std::string, std::string>& groups,
    double epsilon) {
  std::map<std::string, std::map<int, std::pair<double, std::size_t>>> acc;
  for (const auto& t : trajectories) {
    auto g = groups.find(t.entity_id);
    if (g == groups.end()) continue;
    for (const auto& p : t.points) {
      if (!(p.credit > 0.0)) continue;
      auto& cell = acc[g->second][p.year];
      cell.first += std::log10(p.entropy + epsilon);
      ++cell.second;
    }
  }
  std::map<std::string, std::map<int, double>> out;
  for (auto& [group, years] : acc) {
    for (auto& [year, cell] : years) {
      out[group][year] = cell.first / static_cast<double>(cell.second);
    }
  }
  return out;
}

}  // namespace patlas
