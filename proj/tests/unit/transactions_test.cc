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

#include <string>
#include <vector>

#include <gmock/gmock.h>
#include <gtest/gtest.h>

#include "patlas/error.h"
#include "patlas/synthetic.h"
#include "patlas/transactions.h"

namespace patlas {
namespace {

using ::testing::HasSubstr;

const char* kTwoEvents =
    "ACME CORP | TSINGHUA UNIV | | 2014 | | | 2013 | ASSIGNMENT OF ASSIGNORS INTEREST | ;;"
    "NAVY | ACME CORP | | | | | 2016 | license (confirmatory) | ";

TEST(Parse, SlotsKindsAndYears) {
  auto ev = parse_reassignment_field(kTwoEvents, "US1");
  ASSERT_EQ(ev.size(), 2u);
  EXPECT_EQ(ev[0].application_id, "US1");
  EXPECT_EQ(ev[0].assignee(), "ACME CORP");
  EXPECT_EQ(ev[0].assignor(), "TSINGHUA UNIV");
  EXPECT_EQ(ev[0].kind, TransactionKind::kReassignment);
  EXPECT_EQ(ev[0].year, 2014);
  EXPECT_EQ(ev[1].kind, TransactionKind::kLicense);
  EXPECT_EQ(ev[1].year, 2016);
  EXPECT_EQ(kind_name(ev[1].kind), "license");
}

TEST(Parse, SerializeRoundTrip) {
  auto ev = parse_reassignment_field(kTwoEvents, "US1");
  EXPECT_EQ(parse_reassignment_field(serialize_events(ev), "US1"), ev);
  EXPECT_TRUE(parse_reassignment_field("", "US1").empty());
}

TEST(Parse, WrongSlotCountReportsOffset) {
  std::string bad = std::string(kTwoEvents) + ";;A | B | C";
  try {
    parse_reassignment_field(bad, "US1");
    FAIL() << "expected Error";
  } catch (const Error& e) {
    EXPECT_EQ(e.stage(), "transactions");
    EXPECT_THAT(e.what(), HasSubstr("expected 9 slots, found 3"));
    EXPECT_THAT(e.what(), HasSubstr("offset " + std::to_string(std::string(kTwoEvents).size() + 2)));
  }
}

TEST(Resolve, CategoriesAndInternal) {
  IdentityRegistry reg;
  reg.assign("ACME CORP", "A#0", "A");
  reg.assign("ACME HOLDINGS CORP", "H#0", "H");
  reg.assign("TSINGHUA UNIV", "T#0", "T");
  auto fam = AliasFamilies::parse("acme = A#0; H#0\n", reg);
  auto ev = parse_reassignment_field(
      "ACME CORP | TSINGHUA UNIV | | 2014 | | | | ASSIGNMENT | ;;"
      "ACME HOLDINGS CORP | ACME CORP | | 2015 | | | | MERGER | ",
      "US1");
  resolve_events(ev, reg, 90.0, fam);
  EXPECT_EQ(ev[0].assignee_entity, "A#0");
  EXPECT_EQ(ev[0].from_category, Category::kUniversity);
  EXPECT_EQ(ev[0].to_category, Category::kCorporation);
  EXPECT_FALSE(ev[0].internal);
  EXPECT_TRUE(ev[1].internal);
}

TEST(Stats, SmallFixture) {
  FixtureCategory corp;
  corp.patents = 10;
  corp.changed = 2;
  corp.transfers = {{Category::kCorporation, 2}, {Category::kUniversity, 1}};
  corp.license_histogram = {{1, 1}};
  FixtureCategory univ;
  univ.patents = 4;
  univ.changed = 1;
  univ.transfers = {{Category::kOthers, 1}};
  univ.license_histogram = {{2, 1}};
  auto fx = build_transaction_fixture(corp, univ, {{"NAVY", 1, 2}});
  auto re = reassignment_stats(fx.events, fx.ledger);
  const auto& rc = re.by_origin.at("corporation");
  EXPECT_EQ(rc.total, 10u);
  EXPECT_EQ(rc.changed, 2u);
  EXPECT_EQ(rc.transactions, 3u);
  EXPECT_DOUBLE_EQ(rc.changed_pct, 20.0);
  EXPECT_EQ(rc.pairs.at("university"), 1u);
  EXPECT_EQ(re.by_origin.at("university").pairs.at("others"), 1u);
  auto li = licensing_stats(fx.events, fx.ledger, fx.registry);
  EXPECT_EQ(li.total_instances, 3u);
  EXPECT_EQ(li.by_origin.at("university").histogram.at(2), 1u);
  ASSERT_EQ(li.licensees.size(), 1u);
  EXPECT_EQ(li.licensees[0].name, "NAVY");
  EXPECT_EQ(li.licensees[0].total(), 3u);
  EXPECT_FALSE(li.by_origin.at("corporation").top_licensors.empty());
}

TEST(Stats, NonUsApplicationsIgnored) {
  std::vector<CreditRow> ledger(1);
  ledger[0].application_id = "CN1";
  ledger[0].category = Category::kCorporation;
  ledger[0].credits = {{"A#0", 1.0}};
  auto ev = parse_reassignment_field("B | A | | 2014 | | | | ASSIGNMENT | ", "CN1");
  auto re = reassignment_stats(ev, ledger);
  EXPECT_TRUE(re.by_origin.empty());
  auto all = reassignment_stats(ev, ledger, true, false);
  EXPECT_EQ(all.by_origin.at("corporation").changed, 1u);
}

TEST(Round, HalfAwayFromZero) {
  EXPECT_DOUBLE_EQ(round1(18.25), 18.3);
  EXPECT_DOUBLE_EQ(round1(2.94), 2.9);
}

}  // namespace
}  // namespace patlas
