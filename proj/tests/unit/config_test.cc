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

#include <gtest/gtest.h>

#include "patlas/config.h"
#include "patlas/error.h"

namespace patlas {
namespace {

TEST(Config, ParsesCommentsQuotesAndPaths) {
  auto c = PipelineConfig::parse(
      "# header\n"
      "input = \"corpus #1.jsonl\"  # trailing\n"
      "g = 5\n"
      "p0 = 95.5\n"
      "seed = 7\n",
      "/data/run");
  EXPECT_EQ(c.input, std::filesystem::path("/data/run/corpus #1.jsonl"));
  EXPECT_EQ(c.g, 5);
  EXPECT_DOUBLE_EQ(c.p0, 95.5);
  EXPECT_EQ(c.seed, 7u);
  EXPECT_EQ(c.restarts, 10);
}

TEST(Config, UnknownKeyAndBadValue) {
  EXPECT_THROW(PipelineConfig::parse("colour = red\n"), ParseError);
  EXPECT_THROW(PipelineConfig::parse("g = seven\n"), ParseError);
  EXPECT_THROW(PipelineConfig::parse("no equals\n"), ParseError);
}

TEST(Config, Validation) {
  auto c = PipelineConfig::parse("input = x.jsonl\n");
  EXPECT_NO_THROW(c.validate());
  c.p0 = 80;
  EXPECT_THROW(c.validate(), ConfigError);
  c.p0 = 99;
  c.format = "xml";
  EXPECT_THROW(c.validate(), ConfigError);
  EXPECT_THROW(PipelineConfig().validate(), ConfigError);
}

TEST(Config, HashIgnoresDirectoryButNotValues) {
  auto a = PipelineConfig::parse("input = x.jsonl\n", "/one");
  auto b = PipelineConfig::parse("input = x.jsonl\n", "/two");
  EXPECT_EQ(a.hash(), b.hash());
  EXPECT_EQ(a.hash().size(), 64u);
  b.seed = 43;
  EXPECT_NE(a.hash(), b.hash());
}

TEST(Config, DocumentsEveryCanonicalKey) {
  auto canonical = PipelineConfig::parse("input = x\n").canonical();
  for (const auto& [key, doc] : PipelineConfig::documentation()) {
    EXPECT_NE(canonical.find(key + " = "), std::string::npos) << key;
    EXPECT_FALSE(doc.empty());
  }
}

TEST(Config, MissingFile) {
  EXPECT_THROW(PipelineConfig::load("/nonexistent/patlas.toml"), Error);
}

}  // namespace
}  // namespace patlas
