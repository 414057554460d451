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

#include "patlas/ingest.h"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <tuple>
#include <unordered_map>
#include <unordered_set>

#include "json.hpp"
#include "patlas/csv.h"
#include "patlas/error.h"
#include "patlas/text.h"

namespace patlas {
namespace {

using nlohmann::json;

constexpr std::string_view kStage = "ingest";
constexpr std::size_t kMaxObservedSubclasses = 19;

const std::vector<std::string>& schema_keys() {
  static const std::vector<std::string> keys = {
      "publication_id", "application_id", "application_year",
      "title",          "abstract",       "ipc",
      "dwpi_assignees", "original_assignees", "us_reassignment"};
  return keys;
}

std::vector<std::string> normalize_codes(const std::vector<std::string>& raw,
                                         std::size_t line) {
  std::vector<std::string> out;
  out.reserve(raw.size());
  for (const auto& code : raw) {
    auto norm = normalize_ipc_subclass(code);
    if (!norm) {
      throw ParseError(std::string(kStage), line,
                       "malformed IPC subclass '" + code + "'");
    }
    out.push_back(std::move(*norm));
  }
  return out;
}

// ---- JSONL ---------------------------------------------------------------

std::string json_string(const json& obj, const char* key, std::size_t line,
                        bool required) {
  auto it = obj.find(key);
  if (it == obj.end() || it->is_null()) {
    if (required) {
      throw ParseError(std::string(kStage), line,
                       std::string("missing field '") + key + "'");
    }
    return {};
  }
  if (!it->is_string()) {
    throw ParseError(std::string(kStage), line,
                     std::string("field '") + key + "' must be a string");
  }
  return it->get<std::string>();
}

template <typename Pair>
std::vector<Pair> json_pairs(const json& obj, const char* key,
                             const char* second, std::size_t line) {
  std::vector<Pair> out;
  auto it = obj.find(key);
  if (it == obj.end() || it->is_null()) return out;
  if (!it->is_array()) {
    throw ParseError(std::string(kStage), line,
                     std::string("field '") + key + "' must be an array");
  }
  for (const auto& item : *it) {
    if (item.is_object() && item.contains("name") &&
        item["name"].is_string()) {
      std::string b;
      if (item.contains(second) && item[second].is_string()) {
        b = item[second].get<std::string>();
      }
      out.push_back(Pair{item["name"].get<std::string>(), b});
    } else if (item.is_array() && item.size() == 2 && item[0].is_string() &&
               item[1].is_string()) {
      out.push_back(Pair{item[0].get<std::string>(), item[1].get<std::string>()});
    } else {
      throw ParseError(std::string(kStage), line,
                       std::string("malformed entry in '") + key + "'");
    }
  }
  return out;
}

RawRecord parse_json_line(std::string_view text, std::size_t line) {
  json obj;
  try {
    obj = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string(kStage), line,
                     std::string("invalid JSON: ") + e.what());
  }
  if (!obj.is_object()) {
    throw ParseError(std::string(kStage), line, "expected a JSON object");
  }
  RawRecord r;
  r.publication_id = json_string(obj, "publication_id", line, true);
  r.application_id = json_string(obj, "application_id", line, true);
  auto year = obj.find("application_year");
  if (year == obj.end() || !year->is_number_integer()) {
    throw ParseError(std::string(kStage), line,
                     "missing or non-integer field 'application_year'");
  }
  r.application_year = year->get<int>();
  r.title = json_string(obj, "title", line, false);
  r.abstract = json_string(obj, "abstract", line, false);
  if (auto ipc = obj.find("ipc"); ipc != obj.end() && !ipc->is_null()) {
    if (!ipc->is_array()) {
      throw ParseError(std::string(kStage), line, "field 'ipc' must be an array");
    }
    std::vector<std::string> raw;
    for (const auto& c : *ipc) {
      if (!c.is_string()) {
        throw ParseError(std::string(kStage), line, "IPC codes must be strings");
      }
      raw.push_back(c.get<std::string>());
    }
    r.ipc_subclasses = normalize_codes(raw, line);
  }
  r.dwpi_assignees = json_pairs<DwpiAssignee>(obj, "dwpi_assignees", "code", line);
  r.original_assignees =
      json_pairs<OriginalAssignee>(obj, "original_assignees", "address", line);
  std::string reassign = json_string(obj, "us_reassignment", line, false);
  if (!reassign.empty()) r.us_reassignment = std::move(reassign);
  return r;
}

// ---- CSV -----------------------------------------------------------------

// "a|b;c|d" -> {(a,b),(c,d)}, splitting each pair at its first '|' so
// DWPI codes such as "UYHE|N" stay intact.
template <typename Pair>
std::vector<Pair> split_pairs(const std::string& field) {
  std::vector<Pair> out;
  for (const auto& item : split(field, ';')) {
    std::string_view sv = trim(item);
    if (sv.empty()) continue;
    auto bar = sv.find('|');
    if (bar == std::string_view::npos) {
      out.push_back(Pair{std::string(trim(sv)), ""});
    } else {
      out.push_back(Pair{std::string(trim(sv.substr(0, bar))),
                         std::string(trim(sv.substr(bar + 1)))});
    }
  }
  return out;
}

std::vector<RawRecord> parse_csv(std::string_view text) {
  std::vector<RawRecord> out;
  CsvReader reader(text, std::string(kStage));
  std::vector<std::string> fields;
  std::size_t line = 0;
  if (!reader.next(&fields, &line)) return out;

  std::unordered_map<std::string, std::size_t> column;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    column[std::string(trim(fields[i]))] = i;
  }
  for (const auto& key : schema_keys()) {
    if (!column.contains(key)) {
      throw ParseError(std::string(kStage), line,
                       "CSV header lacks column '" + key + "'");
    }
  }
  const std::size_t width = fields.size();
  auto get = [&](const char* key) -> const std::string& {
    return fields[column.at(key)];
  };

  while (reader.next(&fields, &line)) {
    if (fields.size() != width) {
      throw ParseError(std::string(kStage), line,
                       "expected " + std::to_string(width) + " fields, found " +
                           std::to_string(fields.size()));
    }
    RawRecord r;
    r.publication_id = std::string(trim(get("publication_id")));
    r.application_id = std::string(trim(get("application_id")));
    if (r.publication_id.empty()) {
      throw ParseError(std::string(kStage), line, "missing field 'publication_id'");
    }
    if (r.application_id.empty()) {
      throw ParseError(std::string(kStage), line, "missing field 'application_id'");
    }
    try {
      std::size_t used = 0;
      std::string year(trim(get("application_year")));
      r.application_year = std::stoi(year, &used);
      if (used != year.size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw ParseError(std::string(kStage), line,
                       "missing or non-integer field 'application_year'");
    }
    r.title = get("title");
    r.abstract = get("abstract");
    std::vector<std::string> codes;
    for (const auto& c : split(get("ipc"), ';')) {
      auto t = trim(c);
      if (!t.empty()) codes.emplace_back(t);
    }
    r.ipc_subclasses = normalize_codes(codes, line);
    r.dwpi_assignees = split_pairs<DwpiAssignee>(get("dwpi_assignees"));
    r.original_assignees = split_pairs<OriginalAssignee>(get("original_assignees"));
    std::string reassign(trim(get("us_reassignment")));
    if (!reassign.empty()) r.us_reassignment = std::move(reassign);
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<RawRecord> parse_jsonl(std::string_view text) {
  std::vector<RawRecord> out;
  std::size_t line = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    ++line;
    std::string_view row = trim(text.substr(pos, end - pos));
    if (!row.empty()) out.push_back(parse_json_line(row, line));
    if (end == text.size()) break;
    pos = end + 1;
  }
  return out;
}

void check_unique_publications(const std::vector<RawRecord>& records) {
  std::unordered_set<std::string> seen;
  for (std::size_t i = 0; i < records.size(); ++i) {
    if (!seen.insert(records[i].publication_id).second) {
      throw ParseError(std::string(kStage), 0,
                       "duplicate publication_id '" + records[i].publication_id +
                           "' (record " + std::to_string(i + 1) + ")");
    }
  }
}

}  // namespace

RecordFormat parse_record_format(std::string_view name) {
  if (name == "csv") return RecordFormat::kCsv;
  if (name == "jsonl") return RecordFormat::kJsonl;
  throw ConfigError(std::string(kStage),
                    "unknown record format '" + std::string(name) +
                        "' (expected csv or jsonl)");
}

std::optional<std::string> normalize_ipc_subclass(std::string_view code) {
  code = trim(code);
  if (code.size() < 4) return std::nullopt;
  std::string out(code.substr(0, 4));
  for (char& c : out) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  auto alpha = [](char c) { return c >= 'A' && c <= 'Z'; };
  auto digit = [](char c) { return c >= '0' && c <= '9'; };
  if (!alpha(out[0]) || !digit(out[1]) || !digit(out[2]) || !alpha(out[3])) {
    return std::nullopt;
  }
  return out;
}

std::vector<RawRecord> parse_records_text(std::string_view text,
                                          RecordFormat format) {
  auto records = format == RecordFormat::kCsv ? parse_csv(text) : parse_jsonl(text);
  check_unique_publications(records);
  return records;
}

std::vector<RawRecord> parse_records(const std::filesystem::path& path,
                                     RecordFormat format) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(std::string(kStage), "cannot open input '" + path.string() + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_records_text(buf.str(), format);
}

std::string to_jsonl_line(const RawRecord& r) {
  json obj = json::object();
  obj["publication_id"] = r.publication_id;
  obj["application_id"] = r.application_id;
  obj["application_year"] = r.application_year;
  obj["title"] = r.title;
  obj["abstract"] = r.abstract;
  obj["ipc"] = r.ipc_subclasses;
  json dwpi = json::array();
  for (const auto& a : r.dwpi_assignees) {
    dwpi.push_back({{"name", a.name}, {"code", a.code}});
  }
  obj["dwpi_assignees"] = std::move(dwpi);
  json orig = json::array();
  for (const auto& a : r.original_assignees) {
    orig.push_back({{"name", a.name}, {"address", a.address}});
  }
  obj["original_assignees"] = std::move(orig);
  obj["us_reassignment"] =
      r.us_reassignment ? json(*r.us_reassignment) : json(nullptr);
  return obj.dump();
}

std::string csv_header() {
  std::string out;
  for (const auto& k : schema_keys()) {
    if (!out.empty()) out += ',';
    out += k;
  }
  return out;
}

std::string to_csv_row(const RawRecord& r) {
  std::vector<std::string> dwpi, orig;
  for (const auto& a : r.dwpi_assignees) dwpi.push_back(a.name + "|" + a.code);
  for (const auto& a : r.original_assignees) orig.push_back(a.name + "|" + a.address);
  std::vector<std::string> cells = {
      r.publication_id,
      r.application_id,
      std::to_string(r.application_year),
      r.title,
      r.abstract,
      join(r.ipc_subclasses, ";"),
      join(dwpi, ";"),
      join(orig, ";"),
      r.us_reassignment.value_or("")};
  std::string out;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out += ',';
    out += csv_quote(cells[i]);
  }
  return out;
}

std::vector<PatentRecord> merge_applications(std::vector<RawRecord> records) {
  std::map<std::string, std::vector<RawRecord>> groups;
  for (auto& r : records) groups[r.application_id].push_back(std::move(r));

  std::vector<PatentRecord> out;
  out.reserve(groups.size());
  for (auto& [app_id, group] : groups) {
    // Publication order stands in for publication date: the last entry is
    // treated as the latest document of the application.
    std::sort(group.begin(), group.end(), [](const RawRecord& a, const RawRecord& b) {
      return std::tie(a.application_year, a.publication_id) <
             std::tie(b.application_year, b.publication_id);
    });
    PatentRecord p;
    p.application_id = app_id;
    p.year = group.front().application_year;
    std::set<std::string> codes;
    std::set<DwpiAssignee> pool;
    for (const auto& r : group) {
      p.year = std::min(p.year, r.application_year);
      codes.insert(r.ipc_subclasses.begin(), r.ipc_subclasses.end());
      pool.insert(r.dwpi_assignees.begin(), r.dwpi_assignees.end());
      p.merged_publication_ids.push_back(r.publication_id);
    }
    std::sort(p.merged_publication_ids.begin(), p.merged_publication_ids.end());
    p.ipc_subclasses.assign(codes.begin(), codes.end());
    p.assignee_name_pool.assign(pool.begin(), pool.end());

    const RawRecord& latest = group.back();
    p.title = latest.title;
    p.abstract = latest.abstract;

    // Assignee lists and the reassignment history come from the latest
    // publication that carries them.
    for (auto it = group.rbegin(); it != group.rend(); ++it) {
      if (!it->original_assignees.empty()) {
        for (const auto& a : it->original_assignees) {
          p.first_assignee_names.push_back(a.name);
        }
        p.first_assignee_address = it->original_assignees.front().address;
        break;
      }
    }
    for (auto it = group.rbegin(); it != group.rend(); ++it) {
      if (it->us_reassignment) {
        p.us_reassignment = it->us_reassignment;
        break;
      }
    }
    if (p.ipc_subclasses.size() > kMaxObservedSubclasses) {
      std::clog << "patlas: warning: application " << app_id << " lists "
                << p.ipc_subclasses.size() << " IPC subclasses\n";
    }
    out.push_back(std::move(p));
  }
  return out;
}

SparseBinaryMatrix filter_and_build_matrix(const std::vector<PatentRecord>& apps) {
  std::map<std::string, Index> col_of;
  for (const auto& p : apps) {
    for (const auto& c : p.ipc_subclasses) col_of.emplace(c, 0);
  }
  if (col_of.empty()) {
    throw Error(std::string(kStage), "empty matrix: no application has an IPC subclass");
  }
  std::vector<std::string> col_labels;
  for (auto& [code, idx] : col_of) {
    idx = static_cast<Index>(col_labels.size());
    col_labels.push_back(code);
  }
  std::vector<std::string> row_labels;
  std::vector<std::pair<Index, Index>> entries;
  for (const auto& p : apps) {
    if (p.ipc_subclasses.empty()) continue;
    Index row = static_cast<Index>(row_labels.size());
    row_labels.push_back(p.application_id);
    for (const auto& c : p.ipc_subclasses) entries.emplace_back(row, col_of.at(c));
  }
  const std::size_t n_rows = row_labels.size(), n_cols = col_labels.size();
  return SparseBinaryMatrix::from_entries(n_rows, n_cols, std::move(entries),
                                          std::move(row_labels), std::move(col_labels));
}

DegreeDistribution degree_distribution(const SparseBinaryMatrix& m, Axis axis) {
  if (m.empty()) throw Error(std::string(kStage), "degree distribution of an empty matrix");
  std::map<std::size_t, std::size_t> freq;
  std::size_t n = axis == Axis::kRows ? m.n_rows() : m.n_cols();
  for (std::size_t i = 0; i < n; ++i) {
    ++freq[axis == Axis::kRows ? m.row_degree(i) : m.col_degree(i)];
  }
  DegreeDistribution out;
  out.points.assign(freq.begin(), freq.end());

  std::vector<std::pair<double, double>> xy;
  for (const auto& [deg, count] : out.points) {
    if (deg > 0 && count > 0) {
      xy.emplace_back(std::log(static_cast<double>(deg)),
                      std::log(static_cast<double>(count)));
    }
  }
  if (xy.size() < 2) return out;
  double mx = 0, my = 0;
  for (const auto& [x, y] : xy) {
    mx += x;
    my += y;
  }
  mx /= static_cast<double>(xy.size());
  my /= static_cast<double>(xy.size());
  double sxx = 0, sxy = 0;
  for (const auto& [x, y] : xy) {
    sxx += (x - mx) * (x - mx);
    sxy += (x - mx) * (y - my);
  }
  out.slope = sxy / sxx;
  out.intercept = my - *out.slope * mx;
  return out;
}

}  // namespace patlas
