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

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include <gmock/gmock.h>
#include <gtest/gtest.h>

#include "patlas/error.h"
#include "patlas/pipeline.h"
#include "patlas/report.h"

namespace patlas {
namespace {

namespace fs = std::filesystem;
using ::testing::HasSubstr;
using ::testing::StartsWith;

TEST(Report, Sha256KnownVector) {
  EXPECT_EQ(sha256_hex("abc"),
            "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST(Report, MetaHeader) {
  std::vector<std::pair<std::string, std::string>> extra = {{"epsilon", "0.001"}};
  auto h = csv_meta_header("abc", extra);
  EXPECT_THAT(h, StartsWith(std::string("# patlas ") + std::string(tool_version()) + " config=abc\n"));
  EXPECT_THAT(h, HasSubstr("# epsilon = 0.001\n"));
}

TEST(Report, WriteCreatesDirectories) {
  auto dir = fs::temp_directory_path() / "patlas_report_test";
  fs::remove_all(dir);
  write_file(dir / "a" / "b.txt", "hello", "portfolio");
  EXPECT_EQ(read_file(dir / "a" / "b.txt", "portfolio"), "hello");
  EXPECT_EQ(sha256_file(dir / "a" / "b.txt"), sha256_hex("hello"));
  fs::remove_all(dir);
  EXPECT_THROW(read_file(dir / "missing", "portfolio"), Error);
}

TEST(Report, SvgCharts) {
  std::vector<RankingYear> years = {{2010, {{"CN", 3, 1}, {"US", 2, 2}}},
                                    {2011, {{"US", 4, 1}, {"CN", 1, 2}}}};
  auto bump = svg_bump_chart(years, "Regions");
  EXPECT_THAT(bump, StartsWith("<svg"));
  EXPECT_THAT(bump, HasSubstr("CN"));
  Heatmap2D h;
  h.bins = 2;
  h.counts = {1, 0, 0, 5};
  h.classes = {Density::kLow, Density::kLow, Density::kLow, Density::kHigh};
  EXPECT_THAT(svg_heatmap(h, "Heat"), HasSubstr(std::string(density_color(Density::kHigh))));
  VectorField f;
  f.bins = 2;
  f.cells = {{0, 0, 0.25, 0.25, 0.1, 0.1, 3, Density::kIntermediate}};
  EXPECT_THAT(svg_vector_field(f, "Field"), HasSubstr("#2ca02c"));
}

TEST(Pipeline, EndToEndOnBundledFixture) {
  auto config = PipelineConfig::load(fs::path(PATLAS_DATA_DIR) / "patlas.toml");
  auto out = fs::temp_directory_path() / "patlas_pipeline_test";
  fs::remove_all(out);
  auto manifest = run_pipeline(config, out);
  EXPECT_EQ(manifest.config_hash, config.hash());
  EXPECT_TRUE(fs::exists(out / "manifest.json"));
  auto clusters = read_clusters(out / "clusters.json");
  EXPECT_EQ(clusters.g, config.g);
  EXPECT_GT(clusters.modularity, 0.3);
  auto credits = read_credits(out / "credits.csv");
  auto reg = read_registry(out / "registry.json");
  EXPECT_EQ(credits.size(), reg.patents.size());
  double total = 0;
  for (const auto& r : credits) {
    for (const auto& [id, c] : r.credits) total += c;
  }
  EXPECT_NEAR(total, static_cast<double>(credits.size()), 1e-6);
  auto header = read_file(out / "credits.csv", "test");
  EXPECT_THAT(header, StartsWith("# patlas "));
  fs::remove_all(out);
}

TEST(Pipeline, MissingInputIsIngestError) {
  auto config = PipelineConfig::parse("input = /nonexistent/records.jsonl\n");
  try {
    run_pipeline(config, fs::temp_directory_path() / "patlas_pipeline_missing");
    FAIL() << "expected Error";
  } catch (const Error& e) {
    EXPECT_EQ(e.stage(), "ingest");
  }
}

}  // namespace
}  // namespace patlas
