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

#include <cmath>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "patlas/error.h"
#include "patlas/portfolio.h"

namespace patlas {
namespace {

CreditRow row(std::string app, int year, std::string region, Category cat,
              std::vector<std::pair<std::string, double>> credits) {
  CreditRow r;
  r.application_id = std::move(app);
  r.year = year;
  r.region = std::move(region);
  r.category = cat;
  r.credits = std::move(credits);
  return r;
}

// Entity E gains one patent in area 0 (2010), then one in area 1 (2012).
// Entity F gains two patents in area 1 (2011).
struct Ledger {
  std::vector<CreditRow> rows = {
      row("a1", 2010, "CN", Category::kCorporation, {{"E", 1.0}}),
      row("a2", 2011, "US", Category::kUniversity, {{"F", 1.0}}),
      row("a3", 2011, "US", Category::kUniversity, {{"F", 1.0}}),
      row("a4", 2012, "CN", Category::kCorporation, {{"E", 0.5}, {"F", 0.5}}),
      row("a5", 2012, "??", Category::kOthers, {{"G", 1.0}}),
  };
  AreaLabels labels = {{"a1", 0}, {"a2", 1}, {"a3", 1}, {"a4", 1}, {"a5", 0}};
};

TEST(Entropy, Basics) {
  std::vector<double> p = {0.5, 0.5};
  EXPECT_DOUBLE_EQ(entropy(p), std::log(2.0));
  std::vector<double> bad = {0.5, 0.6};
  EXPECT_THROW(entropy(bad), ConfigError);
  std::vector<double> neg = {1.5, -0.5};
  EXPECT_THROW(entropy(neg), ConfigError);
  std::vector<double> zeros = {0.0, 0.0};
  EXPECT_EQ(entropy_of_counts(zeros), 0.0);
}

TEST(Entropy, MeanStepNearDocumentedValue) {
  double v = mean_entropy_step(20, 7);
  EXPECT_GT(v, 0.04);
  EXPECT_LT(v, 0.06);
  EXPECT_THROW(mean_entropy_step(0, 7), ConfigError);
}

TEST(Proportions, ByYearAndGroup) {
  Ledger l;
  auto all = proportions_timeseries(l.rows, l.labels, 2, GroupBy::kNone);
  ASSERT_EQ(all.size(), 3u);
  EXPECT_EQ(all[2].year, 2012);
  EXPECT_DOUBLE_EQ(all[2].counts[0], 1.0);
  EXPECT_DOUBLE_EQ(all[2].proportions[1], 0.5);
  auto by_region = proportions_timeseries(l.rows, l.labels, 2, GroupBy::kRegion);
  bool saw_us = false;
  for (const auto& r : by_region) saw_us = saw_us || (r.group == "US" && r.counts[1] == 2.0);
  EXPECT_TRUE(saw_us);
  EXPECT_EQ(group_by_name(GroupBy::kCategory), "category");
}

TEST(Rankings, SkipUnknownRegion) {
  Ledger l;
  auto years = region_rankings(l.rows, l.labels, std::nullopt, 10);
  ASSERT_EQ(years.size(), 3u);
  for (const auto& y : years) {
    for (const auto& r : y.regions) EXPECT_NE(r.region, "??");
  }
  EXPECT_EQ(years[1].regions[0].region, "US");
  EXPECT_EQ(years[1].regions[0].rank, 1);
  auto area0 = region_rankings(l.rows, l.labels, 0, 10);
  for (const auto& y : area0) {
    for (const auto& r : y.regions) EXPECT_EQ(r.region, "CN");
  }
  auto totals = region_totals(l.rows);
  ASSERT_EQ(totals.size(), 2u);
}

TEST(Quartiles, RuleAndValidation) {
  std::map<std::string, double> credit = {{"a", 1}, {"b", 2}, {"c", 3}, {"d", 4}, {"e", 5}};
  auto q = quartile_groups(credit);
  EXPECT_EQ(q["a"], Quartile::kLower);
  EXPECT_EQ(q["c"], Quartile::kInter);
  EXPECT_EQ(q["b"], Quartile::kInter);  // equal to the 25th percentile
  EXPECT_EQ(q["e"], Quartile::kUpper);
  EXPECT_THROW(quartile_groups({{"a", 1}, {"b", 2}, {"c", 3}}), ConfigError);
  credit["f"] = 0.0;
  EXPECT_THROW(quartile_groups(credit), ConfigError);
}

TEST(Trajectories, CarryForward) {
  Ledger l;
  auto t = trajectories(l.rows, l.labels, 2);
  const Trajectory* e = nullptr;
  for (const auto& x : t) {
    if (x.entity_id == "E") e = &x;
  }
  ASSERT_NE(e, nullptr);
  ASSERT_EQ(e->points.size(), 3u);  // 2010, 2011 carried, 2012
  EXPECT_EQ(e->points[1].year, 2011);
  EXPECT_DOUBLE_EQ(e->points[1].credit, 1.0);
  EXPECT_DOUBLE_EQ(e->points[1].entropy, 0.0);
  EXPECT_DOUBLE_EQ(e->points[2].credit, 1.5);
  EXPECT_NEAR(e->points[2].entropy, entropy_of_counts(std::vector<double>{1.0, 0.5}), 1e-15);
  auto as_of = credit_as_of(t, 2011);
  EXPECT_DOUBLE_EQ(as_of["E"], 1.0);
  EXPECT_DOUBLE_EQ(as_of["F"], 2.0);
}

TEST(VectorField, CountsDisplacements) {
  Ledger l;
  auto t = trajectories(l.rows, l.labels, 2);
  FieldOptions opt;
  opt.bins = 4;
  auto f = vector_field(t, opt);
  std::size_t sum = 0;
  for (const auto& c : f.cells) sum += c.count;
  EXPECT_EQ(sum, f.total_vectors);
  EXPECT_GT(f.total_vectors, 0u);
  opt.x = XAxis::kRelativeYear;
  opt.y = YAxis::kLogEntropy;
  EXPECT_EQ(vector_field(t, opt).total_vectors, f.total_vectors);
}

TEST(Density, Terciles) {
  std::vector<std::size_t> counts = {1, 2, 3, 4, 5, 6, 0};
  auto d = density_classes(counts);
  EXPECT_EQ(d[0], Density::kLow);
  EXPECT_EQ(d[5], Density::kHigh);
  EXPECT_EQ(density_name(Density::kIntermediate), "intermediate");
}

TEST(Heatmap, BinsEveryPoint) {
  std::vector<HeatPoint> pts = {{1, 0.0}, {10, 0.5}, {100, 1.0}, {1000, 1.9}};
  auto h = heatmap(pts, 5);
  std::size_t total = 0;
  for (auto c : h.counts) total += c;
  EXPECT_EQ(total, 4u);
  EXPECT_EQ(h.at(0, 0), 1u);
  EXPECT_THROW(heatmap(std::vector<HeatPoint>{{0.0, 1.0}}, 5), ConfigError);
  EXPECT_THROW(heatmap(std::vector<HeatPoint>{}, 5), ConfigError);
}

TEST(AvgLogEntropy, GroupsAverageLog) {
  Ledger l;
  auto t = trajectories(l.rows, l.labels, 2);
  auto curves = avg_log_entropy_curves(t, {{"E", "g1"}, {"F", "g1"}}, 1e-3);
  ASSERT_TRUE(curves.count("g1"));
  // 2010: only E, entropy 0.
  EXPECT_NEAR(curves["g1"][2010], std::log10(1e-3), 1e-12);
}

}  // namespace
}  // namespace patlas
