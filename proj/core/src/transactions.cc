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

#include "patlas/transactions.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <optional>
#include <set>

#include "patlas/error.h"
#include "patlas/parallel.h"
#include "patlas/similarity.h"
#include "patlas/text.h"

namespace patlas {
namespace {

constexpr const char* kStage = "transactions";

std::optional<int> parse_year(std::string_view s) {
  s = trim(s);
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

TransactionEvent parse_event(std::string_view text, std::size_t offset,
                             std::string_view application_id) {
  TransactionEvent e;
  e.application_id = std::string(application_id);
  std::size_t slot = 0, start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == '|') {
      if (slot < 9) e.slots[slot] = std::string(trim(text.substr(start, i - start)));
      ++slot;
      start = i + 1;
    }
  }
  if (slot != 9) {
    throw Error(kStage, "offset " + std::to_string(offset) + ": expected 9 slots, found " +
                            std::to_string(slot));
  }
  e.kind = to_upper(e.reasons()).find("LICENSE") != std::string::npos
               ? TransactionKind::kLicense
               : TransactionKind::kReassignment;
  e.year = parse_year(e.slots[3]).value_or(parse_year(e.slots[6]).value_or(0));
  return e;
}

std::string_view origin_key(Category c) { return category_name(c); }

bool counted(const CreditRow& row, bool us_only) {
  return !us_only || row.application_id.starts_with("US");
}

}  // namespace

std::string_view kind_name(TransactionKind k) {
  return k == TransactionKind::kLicense ? "license" : "reassignment";
}

std::vector<TransactionEvent> parse_reassignment_field(std::string_view raw,
                                                       std::string_view application_id) {
  std::vector<TransactionEvent> out;
  std::size_t start = 0;
  while (start <= raw.size()) {
    std::size_t end = raw.find(";;", start);
    if (end == std::string_view::npos) end = raw.size();
    std::string_view piece = raw.substr(start, end - start);
    if (!trim(piece).empty()) out.push_back(parse_event(piece, start, application_id));
    start = end + 2;
  }
  return out;
}

std::string serialize_events(std::span<const TransactionEvent> events) {
  std::vector<std::string> parts;
  for (const auto& e : events) {
    parts.push_back(join(std::vector<std::string>(e.slots.begin(), e.slots.end()), " | "));
  }
  return join(parts, ";;");
}

void resolve_events(std::span<TransactionEvent> events, IdentityRegistry& registry,
                    double threshold, const AliasFamilies& families) {
  auto resolve = [&](const std::string& name) -> std::string {
    if (normalize_name(name).empty()) return {};
    return match_name(name, {}, registry, threshold);
  };
  auto category_of = [&](const std::string& id) {
    const Entity* e = id.empty() ? nullptr : registry.find(id);
    return e ? e->category : Category::kOthers;
  };
  for (auto& e : events) {
    e.assignor_entity = resolve(e.assignor());
    e.assignee_entity = resolve(e.assignee());
    e.from_category = category_of(e.assignor_entity);
    e.to_category = category_of(e.assignee_entity);
    e.internal = !e.assignor_entity.empty() && !e.assignee_entity.empty() &&
                 families.same_family(e.assignor_entity, e.assignee_entity);
  }
}

std::vector<TransactionEvent> collect_events(const std::vector<PatentRecord>& apps) {
  std::vector<std::vector<TransactionEvent>> per(apps.size());
  parallel_for(apps.size(), [&](std::size_t i) {
    if (apps[i].us_reassignment) {
      per[i] = parse_reassignment_field(*apps[i].us_reassignment, apps[i].application_id);
    }
  });
  std::vector<TransactionEvent> out;
  for (auto& v : per) {
    for (auto& e : v) out.push_back(std::move(e));
  }
  return out;
}

double round1(double pct) { return std::round(pct * 10.0) / 10.0; }

ReassignmentStats reassignment_stats(std::span<const TransactionEvent> events,
                                     std::span<const CreditRow> ledger, bool include_internal,
                                     bool us_only) {
  ReassignmentStats stats;
  stats.include_internal = include_internal;
  std::map<std::string_view, Category> origin;
  for (const auto& row : ledger) {
    if (!counted(row, us_only)) continue;
    origin[row.application_id] = row.category;
    ++stats.by_origin[std::string(origin_key(row.category))].total;
  }
  std::set<std::string_view> changed;
  for (const auto& e : events) {
    if (e.kind != TransactionKind::kReassignment) continue;
    if (e.internal && !include_internal) continue;
    auto it = origin.find(e.application_id);
    if (it == origin.end()) continue;
    auto& c = stats.by_origin[std::string(origin_key(it->second))];
    ++c.transactions;
    if (e.internal) ++c.internal;
    ++c.pairs[std::string(category_name(e.to_category))];
    changed.insert(it->first);
  }
  for (auto id : changed) ++stats.by_origin[std::string(origin_key(origin[id]))].changed;
  for (auto& [key, c] : stats.by_origin) {
    c.unchanged = c.total - c.changed;
    if (c.total > 0) {
      c.changed_pct = 100.0 * static_cast<double>(c.changed) / static_cast<double>(c.total);
      c.unchanged_pct = 100.0 * static_cast<double>(c.unchanged) / static_cast<double>(c.total);
    }
    for (const auto& [to, n] : c.pairs) {
      c.pair_pct[to] = 100.0 * static_cast<double>(n) / static_cast<double>(c.transactions);
    }
  }
  return stats;
}

LicensingStats licensing_stats(std::span<const TransactionEvent> events,
                               std::span<const CreditRow> ledger, const IdentityRegistry& registry,
                               std::size_t top_k, bool us_only) {
  LicensingStats stats;
  std::map<std::string_view, const CreditRow*> rows;
  for (const auto& row : ledger) {
    if (!counted(row, us_only)) continue;
    rows[row.application_id] = &row;
    ++stats.by_origin[std::string(origin_key(row.category))].total;
  }
  std::map<std::string_view, std::size_t> times;
  // licensee key -> (name votes, corporate, university)
  struct LicenseeAcc {
    std::map<std::string, std::size_t> names;
    std::size_t corp = 0, univ = 0;
  };
  std::map<std::string, LicenseeAcc> licensees;
  for (const auto& e : events) {
    if (e.kind != TransactionKind::kLicense) continue;
    auto it = rows.find(e.application_id);
    if (it == rows.end()) continue;
    ++times[it->first];
    std::string name = normalize_name(e.assignee());
    std::string key = e.assignee_entity.empty() ? name : e.assignee_entity;
    auto& acc = licensees[key];
    ++acc.names[name];
    if (it->second->category == Category::kCorporation) ++acc.corp;
    if (it->second->category == Category::kUniversity) ++acc.univ;
  }
  std::map<std::string, std::map<std::string, double>> licensor_credit;
  for (const auto& [id, n] : times) {
    const CreditRow& row = *rows[id];
    auto& c = stats.by_origin[std::string(origin_key(row.category))];
    ++c.histogram[n];
    ++c.licensed;
    c.instances += n;
    for (const auto& [entity, credit] : row.credits) {
      licensor_credit[std::string(origin_key(row.category))][entity] += credit;
    }
  }
  for (auto& [key, c] : stats.by_origin) {
    if (c.total > 0) {
      c.licensed_pct = 100.0 * static_cast<double>(c.licensed) / static_cast<double>(c.total);
    }
    stats.total_instances += c.instances;
    for (const auto& [entity, credit] : licensor_credit[key]) {
      const Entity* e = registry.find(entity);
      c.top_licensors.push_back({entity, e && !e->names.empty() ? e->names.front() : entity, credit});
    }
    std::sort(c.top_licensors.begin(), c.top_licensors.end(),
              [](const Licensor& a, const Licensor& b) {
                if (a.credit != b.credit) return a.credit > b.credit;
                return a.entity_id < b.entity_id;
              });
    if (c.top_licensors.size() > top_k) c.top_licensors.resize(top_k);
  }
  for (auto& [key, acc] : licensees) {
    std::string best;
    std::size_t votes = 0;
    for (const auto& [name, v] : acc.names) {
      if (v > votes) {
        best = name;
        votes = v;
      }
    }
    stats.licensees.push_back({key, best, acc.corp, acc.univ});
  }
  std::sort(stats.licensees.begin(), stats.licensees.end(), [](const Licensee& a, const Licensee& b) {
    if (a.total() != b.total()) return a.total() > b.total();
    return a.name < b.name;
  });
  return stats;
}

}  // namespace patlas
