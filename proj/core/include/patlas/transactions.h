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

// US reassignment and licensing records.
//
// A record field holds events separated by ";;". Each event has nine
// '|'-separated slots:
//
//   Assignee | Assignor | Assignee Date | Assignee Year | Document Number |
//   Document Date | Document Year | Reason(s) | Legal Agent
//
// An event is a license when its reasons contain "LICENSE" in any case and
// a reassignment otherwise.

#ifndef PATLAS_TRANSACTIONS_H_
#define PATLAS_TRANSACTIONS_H_

#include <array>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "patlas/entity.h"

namespace patlas {

enum class TransactionKind { kReassignment, kLicense };
std::string_view kind_name(TransactionKind k);

struct TransactionEvent {
  std::string application_id;
  TransactionKind kind = TransactionKind::kReassignment;
  std::array<std::string, 9> slots;  // trimmed raw slots
  int year = 0;                      // assignee year, else document year, else 0
  std::string assignor_entity;       // filled by resolve_events
  std::string assignee_entity;
  Category from_category = Category::kOthers;
  Category to_category = Category::kOthers;
  bool internal = false;  // both parties in one alias family

  const std::string& assignee() const { return slots[0]; }
  const std::string& assignor() const { return slots[1]; }
  const std::string& reasons() const { return slots[7]; }

  friend bool operator==(const TransactionEvent&, const TransactionEvent&) = default;
};

// Splits a raw field into events. Throws ParseError naming the character
// offset of an event whose slot count is not nine.
std::vector<TransactionEvent> parse_reassignment_field(std::string_view raw,
                                                       std::string_view application_id = {});

// Canonical text of events: trimmed slots joined by " | ", events by ";;".
std::string serialize_events(std::span<const TransactionEvent> events);

// Maps assignor and assignee names onto registry entities (adding
// singletons for unseen names) and fills categories and the internal flag.
void resolve_events(std::span<TransactionEvent> events, IdentityRegistry& registry,
                    double threshold, const AliasFamilies& families = {});

// Parses every application's US field, in application order.
std::vector<TransactionEvent> collect_events(const std::vector<PatentRecord>& apps);

struct CategoryTransfers {
  std::size_t total = 0;      // patents of this origin category
  std::size_t unchanged = 0;  // without any counted reassignment
  std::size_t changed = 0;
  double unchanged_pct = 0.0;
  double changed_pct = 0.0;
  std::size_t transactions = 0;
  std::size_t internal = 0;                  // internal transactions among them
  std::map<std::string, std::size_t> pairs;  // receiving category -> count
  std::map<std::string, double> pair_pct;    // share of `transactions`
};

struct ReassignmentStats {
  bool include_internal = true;
  std::map<std::string, CategoryTransfers> by_origin;
};

struct Licensor {
  std::string entity_id;
  std::string name;
  double credit = 0.0;  // fractional credit over its licensed patents
};

struct Licensee {
  std::string entity_id;
  std::string name;
  std::size_t from_corporation = 0;  // instances on corporate patents
  std::size_t from_university = 0;
  std::size_t total() const { return from_corporation + from_university; }
};

struct CategoryLicensing {
  std::size_t total = 0;
  std::map<std::size_t, std::size_t> histogram;  // times licensed -> patents
  std::size_t licensed = 0;                      // licensed at least once
  double licensed_pct = 0.0;
  std::size_t instances = 0;  // sum of times * patents
  std::vector<Licensor> top_licensors;
};

struct LicensingStats {
  std::map<std::string, CategoryLicensing> by_origin;
  std::size_t total_instances = 0;
  std::vector<Licensee> licensees;  // by total instances, then name
};

// Origin category and credits of each patent come from the ledger. Only
// rows whose application_id starts with "US" count when `us_only` is set.
ReassignmentStats reassignment_stats(std::span<const TransactionEvent> events,
                                     std::span<const CreditRow> ledger, bool include_internal = true,
                                     bool us_only = true);

LicensingStats licensing_stats(std::span<const TransactionEvent> events,
                               std::span<const CreditRow> ledger, const IdentityRegistry& registry,
                               std::size_t top_k = 10, bool us_only = true);

// Percentage rounded half away from zero to one decimal place.
double round1(double pct);

}  // namespace patlas

#endif  // PATLAS_TRANSACTIONS_H_
