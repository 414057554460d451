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

// Levenshtein-based name similarity on a 0..100 scale.

#ifndef PATLAS_SIMILARITY_H_
#define PATLAS_SIMILARITY_H_

#include <cstddef>
#include <string>
#include <string_view>

namespace patlas {

// Uppercase, runs of whitespace collapsed to one space, ends trimmed.
std::string normalize_name(std::string_view name);

// Unit-cost insert/delete/substitute distance. Uses a 64-bit bit-parallel
// kernel when the shorter string fits in a word.
std::size_t levenshtein(std::string_view a, std::string_view b);

// 100 * (1 - d / max(|a|, |b|)).
double normal_ratio(std::string_view a, std::string_view b);
// Best normal ratio of the shorter string against every substring of the
// longer one with the same length.
double partial_ratio(std::string_view a, std::string_view b);
// Space-separated tokens, sorted and rejoined.
std::string token_sort(std::string_view s);
double partial_token_sort_ratio(std::string_view a, std::string_view b);

// max(normal, partial, partial token sort) over normalized names. Throws
// ConfigError when either name is blank.
double similarity(std::string_view a, std::string_view b);

}  // namespace patlas

#endif  // PATLAS_SIMILARITY_H_
