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

// Compares the library against frozen values from tests/oracles.

#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "json.hpp"
#include "patlas/coclus.h"
#include "patlas/entity.h"
#include "patlas/ingest.h"
#include "patlas/portfolio.h"
#include "patlas/similarity.h"
#include "patlas/topics.h"

namespace patlas {
namespace {

using nlohmann::json;

const json& oracle() {
  static const json data = [] {
    std::ifstream in(std::filesystem::path(PATLAS_ORACLE_DIR) / "expected.json");
    return json::parse(in);
  }();
  return data;
}

SparseBinaryMatrix dense(const json& rows) {
  return SparseBinaryMatrix::from_dense(rows.get<std::vector<std::vector<int>>>());
}

TEST(Oracle, StringSimilarity) {
  for (const auto& c : oracle()["similarity"]) {
    std::string a = normalize_name(c["a"].get<std::string>());
    std::string b = normalize_name(c["b"].get<std::string>());
    SCOPED_TRACE(a + " | " + b);
    EXPECT_EQ(levenshtein(a, b), c["levenshtein"].get<std::size_t>());
    EXPECT_DOUBLE_EQ(normal_ratio(a, b), c["normal_ratio"].get<double>());
    EXPECT_DOUBLE_EQ(partial_ratio(a, b), c["partial_ratio"].get<double>());
    EXPECT_DOUBLE_EQ(partial_token_sort_ratio(a, b), c["partial_token_sort_ratio"].get<double>());
    EXPECT_DOUBLE_EQ(similarity(c["a"].get<std::string>(), c["b"].get<std::string>()),
                     c["similarity"].get<double>());
  }
}

TEST(Oracle, ModularityOfGivenLabels) {
  for (const auto& c : oracle()["modularity"]) {
    auto m = dense(c["matrix"]);
    auto rows = c["rows"].get<std::vector<int>>();
    auto cols = c["cols"].get<std::vector<int>>();
    EXPECT_NEAR(modularity_of(m, rows, cols), c["modularity"].get<double>(), 1e-12);
  }
}

TEST(Oracle, FitReachesExhaustiveMaximum) {
  for (const auto& c : oracle()["modularity"]) {
    auto m = dense(c["matrix"]);
    FitOptions opt;
    opt.g = c["g"].get<int>();
    EXPECT_NEAR(fit(m, opt).modularity, c["max_modularity"].get<double>(), 1e-12)
        << c["matrix"].dump();
  }
}

TEST(Oracle, OtsuThreshold) {
  for (const auto& c : oracle()["otsu"]) {
    auto counts = c["counts"].get<std::vector<std::uint64_t>>();
    EXPECT_DOUBLE_EQ(otsu_threshold(counts), c["threshold"].get<double>()) << c["counts"].dump();
  }
}

TEST(Oracle, EntropyOfCounts) {
  for (const auto& c : oracle()["entropy"]) {
    auto counts = c["counts"].get<std::vector<double>>();
    EXPECT_NEAR(entropy_of_counts(counts), c["entropy"].get<double>(), 1e-12);
  }
}

TEST(Oracle, MeanEntropyStep) {
  for (const auto& c : oracle()["mean_entropy_step"]) {
    EXPECT_NEAR(mean_entropy_step(c["n"].get<int>(), c["g"].get<int>()), c["value"].get<double>(),
                1e-12);
  }
}

TEST(Oracle, LinearPercentile) {
  for (const auto& c : oracle()["percentile"]) {
    EXPECT_NEAR(percentile(c["values"].get<std::vector<double>>(), c["p"].get<double>()),
                c["result"].get<double>(), 1e-9);
  }
}

TEST(Oracle, KeywordZScores) {
  const auto& z = oracle()["zscore"];
  auto corpus =
      TokenizedCorpus::from_documents(z["documents"].get<std::vector<std::vector<std::string>>>());
  auto labels = z["labels"].get<std::vector<int>>();
  for (const auto& c : z["scores"]) {
    auto s = zscore(c["word"].get<std::string>(), c["cluster"].get<int>(), corpus, labels);
    EXPECT_EQ(s.in_cluster, c["in_cluster"].get<std::size_t>());
    EXPECT_NEAR(s.mu, c["mu"].get<double>(), 1e-12);
    EXPECT_NEAR(s.sigma, c["sigma"].get<double>(), 1e-12);
    if (c["z"].is_null()) {
      EXPECT_TRUE(s.degenerate);
    } else {
      EXPECT_FALSE(s.degenerate);
      EXPECT_NEAR(s.z, c["z"].get<double>(), 1e-9);
    }
  }
}

TEST(Oracle, AdjustedRandIndex) {
  for (const auto& c : oracle()["ari"]) {
    auto a = c["a"].get<std::vector<int>>();
    auto b = c["b"].get<std::vector<int>>();
    EXPECT_NEAR(adjusted_rand_index(a, b), c["ari"].get<double>(), 1e-12);
  }
}

TEST(Oracle, QuartileGroups) {
  for (const auto& c : oracle()["quartiles"]) {
    auto groups = quartile_groups(c["credit"].get<std::map<std::string, double>>());
    for (const auto& [id, want] : c["groups"].items()) {
      EXPECT_EQ(quartile_name(groups.at(id)), want.get<std::string>()) << id;
    }
  }
}

TEST(Oracle, DegreeRegression) {
  const auto& r = oracle()["degree_regression"];
  std::vector<std::pair<Index, Index>> entries;
  Index row = 0;
  for (const auto& pair : r["counts"]) {
    auto d = pair[0].get<Index>();
    auto n = pair[1].get<std::size_t>();
    for (std::size_t k = 0; k < n; ++k, ++row) {
      for (Index j = 0; j < d; ++j) entries.emplace_back(row, j);
    }
  }
  auto m = SparseBinaryMatrix::from_entries(row, 64, std::move(entries));
  auto dist = degree_distribution(m, Axis::kRows);
  ASSERT_TRUE(dist.slope.has_value());
  EXPECT_NEAR(*dist.slope, r["slope"].get<double>(), 1e-9);
  EXPECT_NEAR(*dist.intercept, r["intercept"].get<double>(), 1e-9);
}

}  // namespace
}  // namespace patlas
