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

// Cluster keywords by the z-score of in-cluster document frequency against
// a null model where each word lands in patents uniformly at random.

#ifndef PATLAS_TOPICS_H_
#define PATLAS_TOPICS_H_

#include <cstddef>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "patlas/ingest.h"

namespace patlas {

using StopwordSet = std::unordered_set<std::string>;

// Built-in English stoplist (lowercase).
const StopwordSet& default_stopwords();
// One word per line; blank lines and lines starting with '#' are skipped.
StopwordSet load_stopwords(const std::filesystem::path& path);

// Lowercased title + abstract tokens: runs of letters/digits, at least three
// characters long, not purely numeric, not a stopword. Distinct and sorted.
std::vector<std::string> tokenize_text(std::string_view text,
                                       const StopwordSet& stopwords);

class TokenizedCorpus {
 public:
  static TokenizedCorpus build(const std::vector<PatentRecord>& apps,
                               const StopwordSet& stopwords);
  // Documents given directly as token lists (deduplicated here).
  static TokenizedCorpus from_documents(
      const std::vector<std::vector<std::string>>& docs);

  std::size_t size() const { return docs_.size(); }
  const std::vector<std::string>& vocabulary() const { return vocab_; }
  // Sorted distinct word ids of document d.
  const std::vector<int>& document(std::size_t d) const { return docs_[d]; }
  // Number of documents containing word id w (m_k).
  std::size_t document_frequency(int w) const { return df_[w]; }
  // -1 when the word never occurs.
  int word_id(std::string_view word) const;

 private:
  std::vector<std::string> vocab_;
  std::unordered_map<std::string, int> ids_;
  std::vector<std::vector<int>> docs_;
  std::vector<std::size_t> df_;
};

struct KeywordScore {
  std::string word;
  int cluster = 0;
  std::size_t in_cluster = 0;  // M: cluster documents containing the word
  double mu = 0.0;             // |cluster| * m / n
  double sigma = 0.0;          // sqrt(|cluster| * p * (1 - p))
  double z = 0.0;              // (M - mu) / sigma
  bool degenerate = false;     // sigma == 0; excluded from rankings
};

// `labels[d]` is the cluster of document d; every label must lie in [0, g).
KeywordScore zscore(std::string_view word, int cluster,
                    const TokenizedCorpus& corpus, std::span<const int> labels);

// Descending z, then larger M, then lexicographic word. Empty for k = 0 or
// an empty cluster.
std::vector<KeywordScore> top_keywords(int cluster, const TokenizedCorpus& corpus,
                                       std::span<const int> labels,
                                       std::size_t k = 25);

}  // namespace patlas

#endif  // PATLAS_TOPICS_H_
