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
#include <filesystem>
#include <fstream>
#include <vector>

#include <gmock/gmock.h>
#include <gtest/gtest.h>

#include "patlas/ingest.h"
#include "patlas/topics.h"

namespace patlas {
namespace {

using ::testing::ElementsAre;

TEST(Tokenize, FiltersShortNumericAndStopwords) {
  StopwordSet stop = {"method"};
  auto toks = tokenize_text("Method for Graphene-oxide films, 2015 and 3D ink; graphene", stop);
  EXPECT_THAT(toks, ElementsAre("and", "films", "for", "graphene", "ink", "oxide"));
  EXPECT_TRUE(default_stopwords().contains("the"));
}

TEST(Tokenize, LoadsStopwordFile) {
  auto path = std::filesystem::temp_directory_path() / "patlas_stopwords_test.txt";
  std::ofstream(path) << "# comment\nalpha\n\nBeta\n";
  auto set = load_stopwords(path);
  std::filesystem::remove(path);
  EXPECT_TRUE(set.contains("alpha"));
  EXPECT_EQ(set.size(), 2u);
}

TEST(Corpus, DocumentFrequency) {
  auto c = TokenizedCorpus::from_documents({{"a", "b", "a"}, {"b"}, {"c"}});
  EXPECT_EQ(c.size(), 3u);
  EXPECT_EQ(c.document_frequency(c.word_id("b")), 2u);
  EXPECT_EQ(c.document(0).size(), 2u);
  EXPECT_EQ(c.word_id("zzz"), -1);
}

TEST(Corpus, BuildsFromTitleAndAbstract) {
  PatentRecord p;
  p.title = "Graphene transistor";
  p.abstract = "A transistor with graphene channel";
  auto c = TokenizedCorpus::build({p}, default_stopwords());
  EXPECT_GE(c.word_id("channel"), 0);
  EXPECT_EQ(c.document(0).size(), c.vocabulary().size());
}

TEST(ZScore, HandComputed) {
  // 4 documents, cluster 0 = {0, 1}; "x" appears in docs 0, 1, 2.
  auto c = TokenizedCorpus::from_documents({{"x"}, {"x"}, {"x"}, {"y"}});
  std::vector<int> labels = {0, 0, 1, 1};
  auto s = zscore("x", 0, c, labels);
  EXPECT_EQ(s.in_cluster, 2u);
  EXPECT_DOUBLE_EQ(s.mu, 1.5);
  EXPECT_DOUBLE_EQ(s.sigma, std::sqrt(2 * 0.75 * 0.25));
  EXPECT_DOUBLE_EQ(s.z, 0.5 / std::sqrt(0.375));
}

TEST(ZScore, DegenerateWordsExcluded) {
  auto c = TokenizedCorpus::from_documents({{"all", "a"}, {"all"}, {"all", "b"}});
  std::vector<int> labels = {0, 0, 1};
  EXPECT_TRUE(zscore("all", 0, c, labels).degenerate);
  auto top = top_keywords(0, c, labels, 10);
  for (const auto& k : top) EXPECT_NE(k.word, "all");
  ASSERT_FALSE(top.empty());
  EXPECT_EQ(top.front().word, "a");
}

}  // namespace
}  // namespace patlas
