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

#include "patlas/topics.h"

#include <algorithm>
#include <cmath>
#include <fstream>

#include "patlas/error.h"
#include "patlas/text.h"

namespace patlas {
namespace {

constexpr const char* kStage = "keywords";

constexpr const char* kStopwords[] = {
    "a", "able", "about", "above", "according", "accordingly", "across",
    "actually", "after", "afterwards", "again", "against", "all", "allow",
    "allows", "almost", "alone", "along", "already", "also", "although",
    "always", "am", "among", "amongst", "an", "and", "another", "any",
    "anybody", "anyhow", "anyone", "anything", "anyway", "anywhere", "apart",
    "appear", "are", "around", "as", "aside", "ask", "at", "available",
    "away", "be", "became", "because", "become", "becomes", "becoming", "been",
    "before", "beforehand", "behind", "being", "below", "beside", "besides",
    "best", "better", "between", "beyond", "both", "brief", "but", "by",
    "came", "can", "cannot", "cant", "certain", "certainly", "clearly", "come",
    "comes", "consequently", "could", "couldn", "currently", "did", "didn",
    "different", "do", "does", "doesn", "doing", "done", "down", "during",
    "each", "either", "else", "elsewhere", "enough", "entirely", "especially",
    "etc", "even", "ever", "every", "everybody", "everyone", "everything",
    "everywhere", "exactly", "example", "except", "far", "few", "first",
    "followed", "following", "follows", "for", "former", "formerly", "from",
    "further", "furthermore", "get", "gets", "getting", "given", "gives", "go",
    "goes", "going", "gone", "got", "had", "hardly", "has", "hasn", "have",
    "haven", "having", "he", "hence", "her", "here", "hereafter", "hereby",
    "herein", "hereupon", "hers", "herself", "him", "himself", "his", "how",
    "however", "i", "ie", "if", "in", "inasmuch", "inc", "indeed", "instead",
    "into", "inward", "is", "isn", "it", "its", "itself", "just", "keep",
    "keeps", "kept", "know", "known", "last", "later", "latter", "latterly",
    "least", "less", "lest", "let", "like", "likely", "little", "made",
    "mainly", "make", "makes", "many", "may", "maybe", "me", "meanwhile",
    "merely", "might", "more", "moreover", "most", "mostly", "much", "must",
    "my", "myself", "namely", "near", "nearly", "necessary", "need", "needs",
    "neither", "never", "nevertheless", "new", "next", "no", "nobody", "non",
    "none", "nor", "not", "nothing", "now", "nowhere", "obtained", "obviously",
    "of", "off", "often", "on", "once", "one", "ones", "only", "onto", "or",
    "other", "others", "otherwise", "ought", "our", "ours", "ourselves", "out",
    "over", "overall", "own", "particular", "particularly", "per", "perhaps",
    "placed", "please", "possible", "probably", "provide", "provided",
    "provides", "quite", "rather", "really", "regarding", "relatively",
    "respectively", "said", "same", "second", "see", "seem", "seemed",
    "seeming", "seems", "seen", "several", "shall", "she", "should", "shouldn",
    "since", "so", "some", "somebody", "somehow", "someone", "something",
    "sometime", "sometimes", "somewhat", "somewhere", "soon", "specified",
    "still", "such", "sure", "take", "taken", "than", "that", "the", "their",
    "theirs", "them", "themselves", "then", "thence", "there", "thereafter",
    "thereby", "therefore", "therein", "thereof", "thereto", "thereupon",
    "these", "they", "third", "this", "thorough", "thoroughly", "those",
    "though", "three", "through", "throughout", "thru", "thus", "to",
    "together", "too", "took", "toward", "towards", "tried", "tries", "truly",
    "try", "trying", "twice", "two", "under", "unless", "until", "unto", "up",
    "upon", "us", "use", "used", "uses", "using", "usually", "various", "very",
    "via", "was", "wasn", "way", "we", "well", "went", "were", "weren", "what",
    "whatever", "when", "whence", "whenever", "where", "whereafter", "whereas",
    "whereby", "wherein", "whereupon", "wherever", "whether", "which", "while",
    "whither", "who", "whoever", "whole", "whom", "whose", "why", "will",
    "willing", "wish", "with", "within", "without", "won", "would", "wouldn",
    "yet", "you", "your", "yours", "yourself", "yourselves", "zero",
};

bool is_numeric(const std::string& s) {
  return std::all_of(s.begin(), s.end(),
                     [](char c) { return c >= '0' && c <= '9'; });
}

}  // namespace

const StopwordSet& default_stopwords() {
  static const StopwordSet words(std::begin(kStopwords), std::end(kStopwords));
  return words;
}

StopwordSet load_stopwords(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(kStage, "cannot open stopword file '" + path.string() + "'");
  StopwordSet out;
  std::string line;
  while (std::getline(in, line)) {
    auto t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    out.insert(to_lower(t));
  }
  return out;
}

std::vector<std::string> tokenize_text(std::string_view text,
                                       const StopwordSet& stopwords) {
  std::vector<std::string> out;
  for (auto& tok : alnum_tokens(text)) {
    std::string w = to_lower(tok);
    if (w.size() < 3 || is_numeric(w) || stopwords.contains(w)) continue;
    out.push_back(std::move(w));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

TokenizedCorpus TokenizedCorpus::build(const std::vector<PatentRecord>& apps,
                                       const StopwordSet& stopwords) {
  std::vector<std::vector<std::string>> docs;
  docs.reserve(apps.size());
  for (const auto& p : apps) {
    docs.push_back(tokenize_text(p.title + " " + p.abstract, stopwords));
  }
  return from_documents(docs);
}

TokenizedCorpus TokenizedCorpus::from_documents(
    const std::vector<std::vector<std::string>>& docs) {
  TokenizedCorpus c;
  // Sorted vocabulary keeps word ids independent of document order.
  std::vector<std::string> words;
  for (const auto& d : docs) words.insert(words.end(), d.begin(), d.end());
  std::sort(words.begin(), words.end());
  words.erase(std::unique(words.begin(), words.end()), words.end());
  c.vocab_ = std::move(words);
  for (std::size_t i = 0; i < c.vocab_.size(); ++i) {
    c.ids_.emplace(c.vocab_[i], static_cast<int>(i));
  }
  c.df_.assign(c.vocab_.size(), 0);
  c.docs_.reserve(docs.size());
  for (const auto& d : docs) {
    std::vector<int> ids;
    ids.reserve(d.size());
    for (const auto& w : d) ids.push_back(c.ids_.at(w));
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    for (int w : ids) ++c.df_[w];
    c.docs_.push_back(std::move(ids));
  }
  return c;
}

int TokenizedCorpus::word_id(std::string_view word) const {
  auto it = ids_.find(std::string(word));
  return it == ids_.end() ? -1 : it->second;
}

namespace {

KeywordScore score_word(const TokenizedCorpus& corpus, int word, int cluster,
                        std::size_t cluster_size, std::size_t in_cluster) {
  KeywordScore s;
  s.word = corpus.vocabulary()[word];
  s.cluster = cluster;
  s.in_cluster = in_cluster;
  const double n = static_cast<double>(corpus.size());
  const double p = static_cast<double>(corpus.document_frequency(word)) / n;
  const double size = static_cast<double>(cluster_size);
  s.mu = size * p;
  s.sigma = std::sqrt(size * p * (1.0 - p));
  if (s.sigma > 0.0) {
    s.z = (static_cast<double>(in_cluster) - s.mu) / s.sigma;
  } else {
    s.degenerate = true;
  }
  return s;
}

void check_labels(const TokenizedCorpus& corpus, std::span<const int> labels) {
  if (labels.size() != corpus.size()) {
    throw ConfigError(kStage, "cluster labels do not cover the corpus");
  }
}

}  // namespace

KeywordScore zscore(std::string_view word, int cluster,
                    const TokenizedCorpus& corpus, std::span<const int> labels) {
  check_labels(corpus, labels);
  int w = corpus.word_id(word);
  if (w < 0) throw ConfigError(kStage, "word '" + std::string(word) + "' not in corpus");
  std::size_t size = 0, in_cluster = 0;
  for (std::size_t d = 0; d < corpus.size(); ++d) {
    if (labels[d] != cluster) continue;
    ++size;
    const auto& doc = corpus.document(d);
    if (std::binary_search(doc.begin(), doc.end(), w)) ++in_cluster;
  }
  return score_word(corpus, w, cluster, size, in_cluster);
}

std::vector<KeywordScore> top_keywords(int cluster, const TokenizedCorpus& corpus,
                                       std::span<const int> labels, std::size_t k) {
  check_labels(corpus, labels);
  if (k == 0) return {};
  std::vector<std::size_t> counts(corpus.vocabulary().size(), 0);
  std::size_t size = 0;
  for (std::size_t d = 0; d < corpus.size(); ++d) {
    if (labels[d] != cluster) continue;
    ++size;
    for (int w : corpus.document(d)) ++counts[w];
  }
  if (size == 0) return {};

  std::vector<KeywordScore> scores;
  for (std::size_t w = 0; w < counts.size(); ++w) {
    if (corpus.document_frequency(static_cast<int>(w)) == 0) continue;
    auto s = score_word(corpus, static_cast<int>(w), cluster, size, counts[w]);
    if (!s.degenerate) scores.push_back(std::move(s));
  }
  auto better = [](const KeywordScore& a, const KeywordScore& b) {
    if (a.z != b.z) return a.z > b.z;
    if (a.in_cluster != b.in_cluster) return a.in_cluster > b.in_cluster;
    return a.word < b.word;
  };
  std::size_t keep = std::min(k, scores.size());
  std::partial_sort(scores.begin(), scores.begin() + static_cast<std::ptrdiff_t>(keep),
                    scores.end(), better);
  scores.resize(keep);
  return scores;
}

}  // namespace patlas
