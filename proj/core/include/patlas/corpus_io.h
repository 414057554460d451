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

#ifndef PATLAS_CORPUS_IO_H_
#define PATLAS_CORPUS_IO_H_

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "patlas/ingest.h"

namespace patlas {

// Binary corpus layout (little endian):
//   "PATLASCB" | u32 version | u64 record count | records...
// Strings are u32 length + bytes, lists are u32 count + items.
inline constexpr char kCorpusMagic[8] = {'P', 'A', 'T', 'L', 'A', 'S', 'C', 'B'};
inline constexpr std::uint32_t kCorpusVersion = 1;

std::string encode_corpus(const std::vector<PatentRecord>& apps);
std::vector<PatentRecord> decode_corpus(const std::string& bytes);

void write_corpus(const std::filesystem::path& path,
                  const std::vector<PatentRecord>& apps);
std::vector<PatentRecord> read_corpus(const std::filesystem::path& path);

}  // namespace patlas

#endif  // PATLAS_CORPUS_IO_H_
