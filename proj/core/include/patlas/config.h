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

// Pipeline configuration: a flat `key = value` file.
//
// '#' starts a comment. String values may be double-quoted. Relative paths
// resolve against the directory of the config file.

#ifndef PATLAS_CONFIG_H_
#define PATLAS_CONFIG_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace patlas {

struct PipelineConfig {
  std::filesystem::path input;
  std::string format = "jsonl";
  int g = 7;
  int restarts = 10;
  std::uint64_t seed = 42;
  int max_iter = 100;
  double p0 = 99.0;
  std::filesystem::path stopwords;  // empty: built-in list
  std::filesystem::path aliases;    // empty: no alias families
  std::filesystem::path lexicon;    // empty: built-in category lexicon
  std::size_t keywords = 25;
  int base_year = 2004;
  std::size_t bins = 20;
  std::size_t heatmap_bins = 50;
  double epsilon = 1e-3;
  std::size_t top_n = 10;  // regions per ranking year
  std::size_t top_k = 10;  // licensors per category

  static PipelineConfig parse(std::string_view text, const std::filesystem::path& base_dir = {});
  static PipelineConfig load(const std::filesystem::path& path);

  // Throws ConfigError when a value is out of range.
  void validate() const;
  // One `key = value` line per key in a fixed order; paths by file name.
  std::string canonical() const;
  // SHA-256 of canonical(), hex encoded.
  std::string hash() const;

  // (key, description) for every key, in canonical order.
  static const std::vector<std::pair<std::string, std::string>>& documentation();
};

}  // namespace patlas

#endif  // PATLAS_CONFIG_H_
