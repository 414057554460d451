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

// Patent record ingestion: raw publication records in, merged applications
// and the patent x IPC-subclass incidence matrix out.

#ifndef PATLAS_INGEST_H_
#define PATLAS_INGEST_H_

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "patlas/sparse_matrix.h"

namespace patlas {

struct DwpiAssignee {
  std::string name;
  std::string code;

  friend bool operator==(const DwpiAssignee&, const DwpiAssignee&) = default;
  friend auto operator<=>(const DwpiAssignee&, const DwpiAssignee&) = default;
};

struct OriginalAssignee {
  std::string name;
  std::string address;

  friend bool operator==(const OriginalAssignee&,
                         const OriginalAssignee&) = default;
};

// One publication as it appears in an input file.
struct RawRecord {
  std::string publication_id;
  std::string application_id;
  int application_year = 0;
  std::string title;
  std::string abstract;
  std::vector<std::string> ipc_subclasses;  // 4-character codes
  std::vector<DwpiAssignee> dwpi_assignees;
  std::vector<OriginalAssignee> original_assignees;
  std::optional<std::string> us_reassignment;

  friend bool operator==(const RawRecord&, const RawRecord&) = default;
};

// One distinct application after merging its publications.
struct PatentRecord {
  std::string application_id;
  int year = 0;                              // earliest application year
  std::vector<std::string> ipc_subclasses;   // sorted, unique
  std::vector<std::string> merged_publication_ids;  // sorted
  std::string title;                         // from the latest publication
  std::string abstract;
  std::vector<std::string> first_assignee_names;  // original assignees, in order
  std::string first_assignee_address;
  std::vector<DwpiAssignee> assignee_name_pool;   // sorted, unique
  std::optional<std::string> us_reassignment;

  friend bool operator==(const PatentRecord&, const PatentRecord&) = default;
};

enum class RecordFormat { kCsv, kJsonl };

// "csv" or "jsonl"; anything else is a ConfigError.
RecordFormat parse_record_format(std::string_view name);

// Uppercases, truncates to the 4-character subclass and checks the
// letter-digit-digit-letter shape. Returns nullopt for malformed codes.
std::optional<std::string> normalize_ipc_subclass(std::string_view code);

std::vector<RawRecord> parse_records(const std::filesystem::path& path,
                                     RecordFormat format);
std::vector<RawRecord> parse_records_text(std::string_view text,
                                          RecordFormat format);

// Serializers matching the input schemas (one line / row per record).
std::string to_jsonl_line(const RawRecord& record);
std::string csv_header();
std::string to_csv_row(const RawRecord& record);

// Output is sorted by application_id; input order never matters.
std::vector<PatentRecord> merge_applications(std::vector<RawRecord> records);

// Rows follow the order of `apps` with codeless applications skipped;
// columns are the distinct subclasses in lexicographic order. Throws when no
// application carries a subclass.
SparseBinaryMatrix filter_and_build_matrix(const std::vector<PatentRecord>& apps);

enum class Axis { kRows, kCols };

struct DegreeDistribution {
  std::vector<std::pair<std::size_t, std::size_t>> points;  // (degree, count)
  // Least-squares slope and intercept of ln(count) on ln(degree); absent
  // when fewer than two distinct degrees exist.
  std::optional<double> slope;
  std::optional<double> intercept;
};

DegreeDistribution degree_distribution(const SparseBinaryMatrix& m, Axis axis);

}  // namespace patlas

#endif  // PATLAS_INGEST_H_
