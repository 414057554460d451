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
#include <vector>

#include <gmock/gmock.h>
#include <gtest/gtest.h>

#include "patlas/corpus_io.h"
#include "patlas/error.h"
#include "patlas/ingest.h"
#include "patlas/sparse_matrix.h"

namespace patlas {
namespace {

using ::testing::ElementsAre;
using ::testing::HasSubstr;

RawRecord record(std::string pub, std::string app, int year, std::vector<std::string> ipc) {
  RawRecord r;
  r.publication_id = std::move(pub);
  r.application_id = std::move(app);
  r.application_year = year;
  r.title = "title " + r.publication_id;
  r.abstract = "graphene oxide film";
  r.ipc_subclasses = std::move(ipc);
  r.dwpi_assignees = {{"ACME CO LTD", "ACME-C"}};
  r.original_assignees = {{"ACME CO., LTD.", "1 MAIN ST, SEOUL, KR"}};
  return r;
}

TEST(IpcSubclass, NormalizesToFourCharacters) {
  EXPECT_EQ(normalize_ipc_subclass(" c01b 32/182 "), "C01B");
  EXPECT_EQ(normalize_ipc_subclass("H01L"), "H01L");
  EXPECT_EQ(normalize_ipc_subclass("C1B"), std::nullopt);
  EXPECT_EQ(normalize_ipc_subclass("01BC"), std::nullopt);
}

TEST(Records, JsonlRoundTrip) {
  auto r = record("P1", "A1", 2012, {"C01B", "H01L"});
  r.us_reassignment = "X | Y | | | | | | LICENSE | ";
  auto parsed = parse_records_text(to_jsonl_line(r) + "\n", RecordFormat::kJsonl);
  ASSERT_EQ(parsed.size(), 1u);
  EXPECT_EQ(parsed[0], r);
}

TEST(Records, CsvRoundTripWithQuotes) {
  auto r = record("P1", "A1", 2012, {"C01B"});
  r.title = "a \"quoted\", title";
  std::string text = csv_header() + "\n" + to_csv_row(r) + "\n";
  auto parsed = parse_records_text(text, RecordFormat::kCsv);
  ASSERT_EQ(parsed.size(), 1u);
  EXPECT_EQ(parsed[0], r);
}

TEST(Records, MalformedJsonReportsLine) {
  std::string text = to_jsonl_line(record("P1", "A1", 2012, {"C01B"})) + "\n{oops\n";
  try {
    parse_records_text(text, RecordFormat::kJsonl);
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_EQ(e.stage(), "ingest");
  }
}

TEST(Records, MalformedIpcRejected) {
  auto line = to_jsonl_line(record("P1", "A1", 2012, {"C01B"}));
  line.replace(line.find("C01B"), 4, "XXXX");
  EXPECT_THROW(parse_records_text(line, RecordFormat::kJsonl), ParseError);
}

TEST(Records, DuplicatePublicationRejected) {
  auto line = to_jsonl_line(record("P1", "A1", 2012, {"C01B"}));
  EXPECT_THROW(parse_records_text(line + "\n" + line + "\n", RecordFormat::kJsonl), ParseError);
}

TEST(Records, MissingFileIsIngestError) {
  try {
    parse_records("/nonexistent/records.jsonl", RecordFormat::kJsonl);
    FAIL() << "expected Error";
  } catch (const Error& e) {
    EXPECT_EQ(e.stage(), "ingest");
    EXPECT_THAT(e.what(), HasSubstr("cannot open"));
  }
}

TEST(Merge, CombinesPublicationsOfOneApplication) {
  auto early = record("P1", "A1", 2011, {"C01B"});
  auto late = record("P2", "A1", 2013, {"H01L", "C01B"});
  late.original_assignees = {{"ACME CORP", "9 ROAD, SEOUL, KR"}, {"BETA INC", ""}};
  late.dwpi_assignees.push_back({"BETA INC", "BETA-C"});
  auto other = record("P3", "A2", 2015, {"B82Y"});
  auto apps = merge_applications({late, other, early});
  ASSERT_EQ(apps.size(), 2u);
  const auto& a = apps[0];
  EXPECT_EQ(a.application_id, "A1");
  EXPECT_EQ(a.year, 2011);
  EXPECT_THAT(a.ipc_subclasses, ElementsAre("C01B", "H01L"));
  EXPECT_THAT(a.merged_publication_ids, ElementsAre("P1", "P2"));
  EXPECT_EQ(a.title, "title P2");
  EXPECT_THAT(a.first_assignee_names, ElementsAre("ACME CORP", "BETA INC"));
  EXPECT_EQ(a.first_assignee_address, "9 ROAD, SEOUL, KR");
  EXPECT_EQ(a.assignee_name_pool.size(), 2u);
}

TEST(Matrix, SkipsApplicationsWithoutCodes) {
  auto a = record("P1", "A1", 2011, {"C01B", "H01L"});
  auto b = record("P2", "A2", 2011, {});
  auto c = record("P3", "A3", 2011, {"H01L"});
  auto m = filter_and_build_matrix(merge_applications({a, b, c}));
  EXPECT_EQ(m.n_rows(), 2u);
  EXPECT_EQ(m.n_cols(), 2u);
  EXPECT_THAT(m.row_labels(), ElementsAre("A1", "A3"));
  EXPECT_THAT(m.col_labels(), ElementsAre("C01B", "H01L"));
  EXPECT_TRUE(m.contains(1, 1));
  EXPECT_FALSE(m.contains(1, 0));
  EXPECT_THROW(filter_and_build_matrix(merge_applications({b})), Error);
}

TEST(Matrix, DenseAndSubmatrix) {
  auto m = SparseBinaryMatrix::from_dense({{1, 0, 1}, {0, 1, 0}, {1, 1, 1}});
  EXPECT_EQ(m.nnz(), 6u);
  EXPECT_EQ(m.col_degree(0), 2u);
  std::vector<Index> rows = {0, 2}, cols = {0, 2}, rmap, cmap;
  auto s = m.submatrix(rows, cols, &rmap, &cmap);
  EXPECT_EQ(s.n_rows(), 2u);
  EXPECT_EQ(s.nnz(), 4u);
}

TEST(Degrees, PowerLawSlope) {
  // Row degree d occurs 64 / d times: slope exactly -1.
  std::vector<std::pair<Index, Index>> entries;
  Index row = 0;
  for (Index d : {1u, 2u, 4u, 8u, 16u}) {
    for (Index k = 0; k < 64 / d; ++k, ++row) {
      for (Index j = 0; j < d; ++j) entries.emplace_back(row, j);
    }
  }
  auto m = SparseBinaryMatrix::from_entries(row, 16, entries);
  auto dist = degree_distribution(m, Axis::kRows);
  ASSERT_TRUE(dist.slope);
  EXPECT_NEAR(*dist.slope, -1.0, 1e-12);
  EXPECT_EQ(dist.points.size(), 5u);
}

TEST(CorpusIo, BinaryRoundTrip) {
  auto a = record("P1", "A1", 2011, {"C01B"});
  a.us_reassignment = "R";
  auto apps = merge_applications({a, record("P2", "A2", 2012, {"H01L"})});
  EXPECT_EQ(decode_corpus(encode_corpus(apps)), apps);
  auto path = std::filesystem::temp_directory_path() / "patlas_corpus_io_test.bin";
  write_corpus(path, apps);
  EXPECT_EQ(read_corpus(path), apps);
  std::filesystem::remove(path);
}

TEST(CorpusIo, RejectsForeignBytes) {
  EXPECT_THROW(decode_corpus("not a corpus"), Error);
  auto bytes = encode_corpus({});
  bytes[0] = 'X';
  EXPECT_THROW(decode_corpus(bytes), Error);
}

}  // namespace
}  // namespace patlas
