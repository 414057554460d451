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

// Synthetic data with planted structure, used as ground truth by tests,
// benchmarks and the bundled demo corpus.

#ifndef PATLAS_SYNTHETIC_H_
#define PATLAS_SYNTHETIC_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "patlas/entity.h"
#include "patlas/ingest.h"
#include "patlas/sparse_matrix.h"
#include "patlas/transactions.h"

namespace patlas {

// Deterministic generator for stream `stream` of a base seed.
std::mt19937_64 make_generator(std::uint64_t seed, std::uint64_t stream = 0);

struct PlantedMatrix {
  SparseBinaryMatrix matrix;
  std::vector<int> row_labels;
  std::vector<int> col_labels;
};

// rows x cols matrix split into `blocks` contiguous diagonal blocks; an
// entry is set with probability p_in inside its row's block and p_out
// elsewhere. Rows and columns left empty get one in-block entry.
PlantedMatrix planted_block_matrix(std::size_t rows, std::size_t cols, int blocks, double p_in,
                                   double p_out, std::uint64_t seed);

struct PlantedName {
  std::string name;
  int identity = 0;
  std::string code;
  Category category = Category::kOthers;
};

struct NameVariantSpec {
  std::size_t identities = 500;
  std::size_t min_variants = 3;
  std::size_t max_variants = 6;
  std::size_t identities_per_code = 75;  // assignee codes are shared
};

// Identities with 3..6 distinct name variants each: token reorderings,
// suffix changes and at most two character edits of a base name.
std::vector<PlantedName> planted_names(const NameVariantSpec& spec, std::uint64_t seed);

// One application per planted name, carrying only its (name, code) pool.
std::vector<PatentRecord> records_from_names(const std::vector<PlantedName>& names);

struct SyntheticSpec {
  std::size_t applications = 2000;
  int blocks = 7;
  std::size_t codes_per_block = 8;
  double off_block_code_rate = 0.05;  // chance each code comes from another block
  std::size_t signature_words = 5;    // per block
  std::size_t identities = 150;
  std::size_t min_variants = 2;
  std::size_t max_variants = 4;
  std::size_t identities_per_code = 50;
  double university_share = 0.2;
  double others_share = 0.1;
  double co_assigned_rate = 0.1;  // applications with two first assignees
  double duplicate_rate = 0.1;    // applications published twice
  double us_share = 0.3;
  double reassignment_rate = 0.15;  // of US applications
  double license_rate = 0.06;
  int first_year = 2004;
  int last_year = 2017;
  int ramp_area = 2;  // area whose share grows from ramp_start
  int ramp_start = 2008;
};

struct SyntheticTruth {
  std::map<std::string, int> area;                     // application -> block
  std::map<std::string, std::vector<int>> identities;  // application -> first assignees
  std::map<std::string, int> name_identity;            // normalized name -> identity
  std::map<int, std::string> identity_category;
  std::map<int, std::string> identity_region;
  std::map<int, std::vector<std::string>> signature_words;  // block -> words
  std::size_t reassignments = 0;
  std::size_t licenses = 0;
};

struct SyntheticCorpus {
  std::vector<RawRecord> records;
  SyntheticTruth truth;
};

// Throws ConfigError for infeasible specs (rates outside [0, 1], empty
// ranges, ...).
SyntheticCorpus generate_corpus(const SyntheticSpec& spec, std::uint64_t seed);

std::string truth_to_json(const SyntheticTruth& truth, const SyntheticSpec& spec,
                          std::uint64_t seed);
void write_corpus_jsonl(const std::filesystem::path& path, const std::vector<RawRecord>& records);

// Ledger and events reproducing published US transaction aggregates:
// corporate and university patent pools with fixed reassignment counts,
// category-pair splits, license histograms and licensee totals.
struct TransactionFixture {
  std::vector<CreditRow> ledger;
  std::vector<TransactionEvent> events;
  IdentityRegistry registry;
};

struct FixtureCategory {
  std::size_t patents = 0;
  std::size_t changed = 0;
  std::map<Category, std::size_t> transfers;  // receiving category -> transactions
  std::map<std::size_t, std::size_t> license_histogram;
};

struct FixtureLicensee {
  std::string name;
  std::size_t corporate = 0;
  std::size_t university = 0;
};

TransactionFixture build_transaction_fixture(const FixtureCategory& corporate,
                                             const FixtureCategory& university,
                                             const std::vector<FixtureLicensee>& licensees);

}  // namespace patlas

#endif  // PATLAS_SYNTHETIC_H_
