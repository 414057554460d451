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

#include "patlas/synthetic.h"

#include <algorithm>
#include <cmath>
#include <set>

#include <fmt/format.h>

#include "json.hpp"
#include "patlas/error.h"
#include "patlas/report.h"
#include "patlas/similarity.h"
#include "patlas/text.h"

namespace patlas {
namespace {

using nlohmann::json;

constexpr const char* kStage = "generate";

constexpr const char* kCorporateSuffixes[] = {"CO LTD", "INC", "CORP", "LLC", "GMBH", "CO"};
constexpr const char* kUniversityForms[] = {"UNIV {}", "{} UNIVERSITY", "UNIV OF {}"};
constexpr const char* kOtherSuffixes[] = {"RES INST", "FOUND", "LAB", "RES CENT"};

constexpr const char* kRegions[] = {"CN", "US", "KR", "JP", "DE", "GB", "TW", "FR", "CA", "IN"};
constexpr double kRegionWeights[] = {0.34, 0.2, 0.12, 0.1, 0.05, 0.03, 0.05, 0.03, 0.04, 0.04};

constexpr const char* kLicensees[] = {"US DEPARTMENT OF ENERGY", "NATIONAL SCIENCE FOUNDATION",
                                      "NATIONAL INSTITUTES OF HEALTH", "NAVY", "NASA"};

std::string pseudo_word(std::mt19937_64& rng, int syllables) {
  static constexpr char kCons[] = "BDFGKLMNPRSTVZ";
  static constexpr char kVow[] = "AEIOU";
  std::uniform_int_distribution<int> c(0, 13), v(0, 4);
  std::string w;
  for (int s = 0; s < syllables; ++s) {
    w += kCons[c(rng)];
    w += kVow[v(rng)];
  }
  return w;
}

template <typename T, std::size_t N>
const T& pick(std::mt19937_64& rng, const T (&items)[N]) {
  return items[std::uniform_int_distribution<std::size_t>(0, N - 1)(rng)];
}

template <typename T>
const T& pick(std::mt19937_64& rng, const std::vector<T>& items) {
  return items[std::uniform_int_distribution<std::size_t>(0, items.size() - 1)(rng)];
}

bool chance(std::mt19937_64& rng, double p) {
  return std::uniform_real_distribution<double>(0.0, 1.0)(rng) < p;
}

// A name built from base tokens plus a category-specific suffix form.
struct NameShape {
  std::vector<std::string> tokens;
  Category category = Category::kCorporation;
  int form = 0;

  std::string render() const {
    std::string base = join(tokens, " ");
    switch (category) {
      case Category::kCorporation: return base + " " + kCorporateSuffixes[form];
      case Category::kUniversity: return fmt::format(fmt::runtime(kUniversityForms[form]), base);
      case Category::kOthers: return base + " " + kOtherSuffixes[form];
    }
    return base;
  }
  int forms() const {
    switch (category) {
      case Category::kCorporation: return static_cast<int>(std::size(kCorporateSuffixes));
      case Category::kUniversity: return static_cast<int>(std::size(kUniversityForms));
      case Category::kOthers: return static_cast<int>(std::size(kOtherSuffixes));
    }
    return 1;
  }
};

// One random variation: reorder, suffix change, or one or two edits.
NameShape vary(const NameShape& base, std::mt19937_64& rng) {
  static constexpr char kLetters[] = "ABCDEFGHIJKLMNOPQRSTUVWXYZ";
  NameShape v = base;
  switch (std::uniform_int_distribution<int>(0, 2)(rng)) {
    case 0:
      if (v.tokens.size() > 1) {
        std::reverse(v.tokens.begin(), v.tokens.end());
        break;
      }
      [[fallthrough]];
    case 1:
      v.form = (v.form + 1 + std::uniform_int_distribution<int>(0, v.forms() - 2)(rng)) % v.forms();
      break;
    default: {
      int edits = std::uniform_int_distribution<int>(1, 2)(rng);
      for (int e = 0; e < edits; ++e) {
        auto& tok = v.tokens[std::uniform_int_distribution<std::size_t>(0, v.tokens.size() - 1)(rng)];
        std::size_t pos = std::uniform_int_distribution<std::size_t>(0, tok.size() - 1)(rng);
        tok[pos] = kLetters[std::uniform_int_distribution<int>(0, 25)(rng)];
      }
    }
  }
  return v;
}

std::string make_code(std::mt19937_64& rng, std::set<std::string>& used) {
  static constexpr char kLetters[] = "ABCDEFGHIJKLMNOPQRSTUVWXYZ";
  for (;;) {
    std::string c;
    for (int i = 0; i < 4; ++i) c += kLetters[std::uniform_int_distribution<int>(0, 25)(rng)];
    c += chance(rng, 0.8) ? "-C" : "-N";
    if (used.insert(c).second) return c;
  }
}

struct Identity {
  NameShape shape;
  std::vector<std::string> variants;
  std::string code;
  std::string region;
};

// Distinct base names with 2..max variants each.
std::vector<Identity> make_identities(std::size_t n, std::size_t min_v, std::size_t max_v,
                                      double univ_share, double other_share,
                                      std::size_t per_code, std::mt19937_64& rng) {
  std::vector<Identity> out;
  std::set<std::string> words, names, codes;
  std::string code;
  std::discrete_distribution<std::size_t> region(std::begin(kRegionWeights), std::end(kRegionWeights));
  for (std::size_t i = 0; i < n; ++i) {
    if (i % per_code == 0) code = make_code(rng, codes);
    Identity id;
    double u = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
    id.shape.category = u < univ_share ? Category::kUniversity
                                       : (u < univ_share + other_share ? Category::kOthers
                                                                       : Category::kCorporation);
    for (int t = 0; t < 2; ++t) {
      std::string w;
      do {
        w = pseudo_word(rng, std::uniform_int_distribution<int>(3, 4)(rng));
      } while (!words.insert(w).second);
      id.shape.tokens.push_back(w);
    }
    id.shape.form = std::uniform_int_distribution<int>(0, id.shape.forms() - 1)(rng);
    id.code = code;
    id.region = kRegions[region(rng)];
    std::size_t want = std::uniform_int_distribution<std::size_t>(min_v, max_v)(rng);
    std::string first = normalize_name(id.shape.render());
    names.insert(first);
    id.variants.push_back(first);
    for (int tries = 0; id.variants.size() < want && tries < 200; ++tries) {
      std::string v = normalize_name(vary(id.shape, rng).render());
      if (names.insert(v).second) id.variants.push_back(v);
    }
    out.push_back(std::move(id));
  }
  return out;
}

void check_rate(double v, const char* name) {
  if (!(v >= 0.0 && v <= 1.0)) {
    throw ConfigError(kStage, fmt::format("'{}' must lie in [0, 1]", name));
  }
}

}  // namespace

std::mt19937_64 make_generator(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed & 0xffffffffu),
                    static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream & 0xffffffffu),
                    static_cast<std::uint32_t>(stream >> 32)};
  return std::mt19937_64(seq);
}

PlantedMatrix planted_block_matrix(std::size_t rows, std::size_t cols, int blocks, double p_in,
                                   double p_out, std::uint64_t seed) {
  check_rate(p_in, "p_in");
  check_rate(p_out, "p_out");
  if (blocks < 1 || rows < static_cast<std::size_t>(blocks) ||
      cols < static_cast<std::size_t>(blocks)) {
    throw ConfigError(kStage, "need 1 <= blocks <= min(rows, cols)");
  }
  auto rng = make_generator(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  PlantedMatrix out;
  const auto b = static_cast<std::size_t>(blocks);
  for (std::size_t i = 0; i < rows; ++i) out.row_labels.push_back(static_cast<int>(i * b / rows));
  for (std::size_t j = 0; j < cols; ++j) out.col_labels.push_back(static_cast<int>(j * b / cols));
  std::vector<std::pair<Index, Index>> entries;
  std::vector<bool> row_hit(rows, false), col_hit(cols, false);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      double p = out.row_labels[i] == out.col_labels[j] ? p_in : p_out;
      if (u(rng) < p) {
        entries.emplace_back(static_cast<Index>(i), static_cast<Index>(j));
        row_hit[i] = col_hit[j] = true;
      }
    }
  }
  // Keep every row and column nonempty with an in-block entry.
  for (std::size_t i = 0; i < rows; ++i) {
    if (row_hit[i]) continue;
    std::size_t k = static_cast<std::size_t>(out.row_labels[i]);
    std::size_t j = (k * cols + b - 1) / b;
    entries.emplace_back(static_cast<Index>(i), static_cast<Index>(j));
    col_hit[j] = true;
  }
  for (std::size_t j = 0; j < cols; ++j) {
    if (col_hit[j]) continue;
    std::size_t k = static_cast<std::size_t>(out.col_labels[j]);
    std::size_t i = (k * rows + b - 1) / b;
    entries.emplace_back(static_cast<Index>(i), static_cast<Index>(j));
  }
  out.matrix = SparseBinaryMatrix::from_entries(rows, cols, std::move(entries));
  return out;
}

std::vector<PlantedName> planted_names(const NameVariantSpec& spec, std::uint64_t seed) {
  if (spec.identities == 0 || spec.min_variants == 0 || spec.min_variants > spec.max_variants ||
      spec.identities_per_code == 0) {
    throw ConfigError(kStage, "invalid name variant spec");
  }
  auto rng = make_generator(seed, 1);
  auto ids = make_identities(spec.identities, spec.min_variants, spec.max_variants, 0.2, 0.1,
                             spec.identities_per_code, rng);
  std::vector<PlantedName> out;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    for (const auto& v : ids[i].variants) {
      out.push_back({v, static_cast<int>(i), ids[i].code, ids[i].shape.category});
    }
  }
  return out;
}

std::vector<PatentRecord> records_from_names(const std::vector<PlantedName>& names) {
  std::vector<PatentRecord> out;
  for (std::size_t i = 0; i < names.size(); ++i) {
    PatentRecord p;
    p.application_id = fmt::format("N{:06d}", i);
    p.year = 2010;
    p.assignee_name_pool.push_back({names[i].name, names[i].code});
    out.push_back(std::move(p));
  }
  return out;
}

SyntheticCorpus generate_corpus(const SyntheticSpec& spec, std::uint64_t seed) {
  check_rate(spec.off_block_code_rate, "off_block_code_rate");
  check_rate(spec.university_share, "university_share");
  check_rate(spec.others_share, "others_share");
  check_rate(spec.co_assigned_rate, "co_assigned_rate");
  check_rate(spec.duplicate_rate, "duplicate_rate");
  check_rate(spec.us_share, "us_share");
  check_rate(spec.reassignment_rate, "reassignment_rate");
  check_rate(spec.license_rate, "license_rate");
  if (spec.university_share + spec.others_share > 1.0) {
    throw ConfigError(kStage, "category shares exceed 1");
  }
  if (spec.blocks < 1 || spec.blocks > 26 || spec.codes_per_block == 0 ||
      spec.codes_per_block > 20 || spec.applications == 0 || spec.identities < 2 ||
      spec.min_variants == 0 || spec.min_variants > spec.max_variants ||
      spec.identities_per_code == 0 || spec.first_year > spec.last_year) {
    throw ConfigError(kStage, "infeasible synthetic spec");
  }
  auto rng = make_generator(seed, 2);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  SyntheticCorpus out;
  SyntheticTruth& truth = out.truth;

  // Classification codes: one section letter per block.
  std::vector<std::vector<std::string>> codes(static_cast<std::size_t>(spec.blocks));
  for (int b = 0; b < spec.blocks; ++b) {
    for (std::size_t j = 0; j < spec.codes_per_block; ++j) {
      codes[b].push_back(fmt::format("{}{:02d}{}", static_cast<char>('A' + b),
                                     10 + (static_cast<int>(j) * 7 + b * 3) % 89,
                                     static_cast<char>('B' + j)));
    }
  }
  // Vocabulary: shared filler plus block signatures.
  std::set<std::string> used_words;
  auto fresh_word = [&]() {
    std::string w;
    do {
      w = to_lower(pseudo_word(rng, std::uniform_int_distribution<int>(2, 4)(rng)));
    } while (!used_words.insert(w).second);
    return w;
  };
  std::vector<std::string> filler;
  for (int i = 0; i < 300; ++i) filler.push_back(fresh_word());
  for (int b = 0; b < spec.blocks; ++b) {
    for (std::size_t i = 0; i < spec.signature_words; ++i) truth.signature_words[b].push_back(fresh_word());
  }

  auto identities = make_identities(spec.identities, spec.min_variants, spec.max_variants,
                                    spec.university_share, spec.others_share, spec.identities_per_code, rng);
  std::vector<int> favorite;
  std::vector<double> weight;
  for (std::size_t i = 0; i < identities.size(); ++i) {
    favorite.push_back(std::uniform_int_distribution<int>(0, spec.blocks - 1)(rng));
    weight.push_back(1.0 / std::pow(static_cast<double>(i + 1), 0.8));
    truth.identity_category[static_cast<int>(i)] =
        std::string(category_name(identities[i].shape.category));
    truth.identity_region[static_cast<int>(i)] = identities[i].region;
    for (const auto& v : identities[i].variants) truth.name_identity[v] = static_cast<int>(i);
  }
  std::discrete_distribution<std::size_t> pick_identity(weight.begin(), weight.end());

  std::vector<double> year_weight;
  for (int y = spec.first_year; y <= spec.last_year; ++y) {
    year_weight.push_back(std::pow(static_cast<double>(y - spec.first_year + 1), 1.5));
  }
  std::discrete_distribution<int> pick_year(year_weight.begin(), year_weight.end());

  std::set<std::string> app_ids;
  for (std::size_t a = 0; a < spec.applications; ++a) {
    const int year = spec.first_year + pick_year(rng);
    std::vector<std::size_t> owners{pick_identity(rng)};
    if (chance(rng, spec.co_assigned_rate)) {
      std::size_t second = pick_identity(rng);
      if (second != owners[0]) owners.push_back(second);
    }
    const Identity& lead = identities[owners[0]];

    // Area: the lead owner's favorite half of the time, else the
    // year-dependent global mix with the ramp area growing.
    int area = favorite[owners[0]];
    if (!chance(rng, 0.5)) {
      std::vector<double> w(static_cast<std::size_t>(spec.blocks), 1.0);
      if (spec.ramp_area >= 0 && spec.ramp_area < spec.blocks && year >= spec.ramp_start) {
        w[static_cast<std::size_t>(spec.ramp_area)] += 0.6 * (year - spec.ramp_start + 1);
      }
      area = std::discrete_distribution<int>(w.begin(), w.end())(rng);
    }

    RawRecord r;
    const bool us = chance(rng, spec.us_share);
    const std::string prefix = us ? "US" : (lead.region == "US" ? "WO" : lead.region);
    do {
      r.application_id = fmt::format("{}{}{:06d}", prefix, year,
                                     std::uniform_int_distribution<int>(0, 999999)(rng));
    } while (!app_ids.insert(r.application_id).second);
    r.application_year = year;

    std::size_t n_codes = 1 + std::min<std::size_t>(3, std::geometric_distribution<std::size_t>(0.5)(rng));
    std::set<std::string> chosen;
    for (std::size_t k = 0; k < n_codes; ++k) {
      int b = area;
      if (chance(rng, spec.off_block_code_rate)) b = std::uniform_int_distribution<int>(0, spec.blocks - 1)(rng);
      chosen.insert(pick(rng, codes[static_cast<std::size_t>(b)]));
    }
    r.ipc_subclasses.assign(chosen.begin(), chosen.end());

    const auto& sig = truth.signature_words[area];
    std::vector<std::string> title{pick(rng, sig), pick(rng, filler), pick(rng, filler)};
    std::vector<std::string> abstract;
    for (int i = 0; i < 3; ++i) abstract.push_back(pick(rng, sig));
    for (int i = 0; i < 12; ++i) abstract.push_back(pick(rng, filler));
    r.title = join(title, " ");
    r.abstract = join(abstract, " ");

    for (std::size_t o : owners) {
      const Identity& id = identities[o];
      r.original_assignees.push_back(
          {pick(rng, id.variants), fmt::format("{} ROAD {}, {}", std::uniform_int_distribution<int>(1, 999)(rng),
                                               pseudo_word(rng, 3), id.region)});
      r.dwpi_assignees.push_back({pick(rng, id.variants), id.code});
      truth.identities[r.application_id].push_back(static_cast<int>(o));
    }
    truth.area[r.application_id] = area;

    if (us) {
      std::vector<std::string> events;
      const std::string owner_name = lead.variants.front();
      if (chance(rng, spec.reassignment_rate)) {
        int n = chance(rng, 0.25) ? 2 : 1;
        for (int e = 0; e < n; ++e) {
          const Identity& to = identities[pick_identity(rng)];
          int ey = std::min(spec.last_year + 3, year + std::uniform_int_distribution<int>(1, 5)(rng));
          events.push_back(fmt::format("{} | {} | {}-06-01 | {} | {} | {}-05-20 | {} | "
                                       "ASSIGNMENT OF ASSIGNORS INTEREST | {}",
                                       to.variants.front(), owner_name, ey, ey,
                                       std::uniform_int_distribution<int>(100000, 999999)(rng), ey,
                                       ey, "SMITH AND PARTNERS"));
          ++truth.reassignments;
        }
      }
      if (chance(rng, spec.license_rate)) {
        int ey = year + 1;
        events.push_back(fmt::format("{} | {} | {}-03-15 | {} | {} | {}-03-01 | {} | "
                                     "LICENSE (SEE DOCUMENT FOR DETAILS) | ",
                                     pick(rng, kLicensees), owner_name, ey, ey,
                                     std::uniform_int_distribution<int>(100000, 999999)(rng), ey, ey));
        ++truth.licenses;
      }
      r.us_reassignment = join(events, ";;");
    }

    r.publication_id = r.application_id + "A1";
    out.records.push_back(r);
    if (chance(rng, spec.duplicate_rate)) {
      RawRecord dup = r;
      dup.publication_id = r.application_id + "B2";
      dup.application_year = std::min(spec.last_year, year + 1);
      out.records.push_back(std::move(dup));
    }
  }
  return out;
}

std::string truth_to_json(const SyntheticTruth& truth, const SyntheticSpec& spec,
                          std::uint64_t seed) {
  json j;
  j["seed"] = seed;
  j["blocks"] = spec.blocks;
  j["applications"] = spec.applications;
  json apps = json::object();
  for (const auto& [id, area] : truth.area) {
    apps[id] = {{"area", area}, {"identities", truth.identities.at(id)}};
  }
  j["applications_truth"] = std::move(apps);
  json names = json::object();
  for (const auto& [n, id] : truth.name_identity) names[n] = id;
  j["name_identity"] = std::move(names);
  json ids = json::object();
  for (const auto& [id, cat] : truth.identity_category) {
    ids[std::to_string(id)] = {{"category", cat}, {"region", truth.identity_region.at(id)}};
  }
  j["identities"] = std::move(ids);
  json sig = json::object();
  for (const auto& [b, words] : truth.signature_words) sig[std::to_string(b)] = words;
  j["signature_words"] = std::move(sig);
  j["reassignments"] = truth.reassignments;
  j["licenses"] = truth.licenses;
  return j.dump(1) + "\n";
}

void write_corpus_jsonl(const std::filesystem::path& path, const std::vector<RawRecord>& records) {
  std::string text;
  for (const auto& r : records) text += to_jsonl_line(r) + "\n";
  write_file(path, text, kStage);
}

TransactionFixture build_transaction_fixture(const FixtureCategory& corporate,
                                             const FixtureCategory& university,
                                             const std::vector<FixtureLicensee>& licensees) {
  TransactionFixture fx;
  const std::string owners[2][3] = {
      {"ALPHA MATERIALS CO LTD", "BETA ELECTRONICS INC", "GAMMA CHEMICAL CORP"},
      {"RICE UNIVERSITY", "UNIV CALIFORNIA", "NORTHWESTERN UNIVERSITY"}};
  const std::string receivers[3] = {"DELTA HOLDINGS INC", "UNIV TEXAS", "US GOVERNMENT"};
  for (int c = 0; c < 2; ++c) {
    for (const auto& o : owners[c]) fx.registry.assign(o, o, "FIXTURE");
  }
  for (const auto& r : receivers) fx.registry.assign(r, r, "FIXTURE");

  auto make_event = [](const std::string& app, const std::string& to, const std::string& from,
                       const std::string& reasons) {
    TransactionEvent e;
    e.application_id = app;
    e.slots = {to, from, "2012-01-01", "2012", "000000", "2011-12-01", "2012", reasons, ""};
    e.year = 2012;
    e.kind = to_upper(reasons).find("LICENSE") != std::string::npos ? TransactionKind::kLicense
                                                                    : TransactionKind::kReassignment;
    return e;
  };

  const FixtureCategory* cats[2] = {&corporate, &university};
  const Category origin[2] = {Category::kCorporation, Category::kUniversity};
  for (int c = 0; c < 2; ++c) {
    const FixtureCategory& fc = *cats[c];
    std::size_t transfers = 0;
    for (const auto& [cat, n] : fc.transfers) transfers += n;
    if (fc.changed > fc.patents || (fc.changed == 0) != (transfers == 0) || transfers < fc.changed) {
      throw ConfigError(kStage, "inconsistent transaction fixture");
    }
    std::vector<std::string> ids;
    for (std::size_t i = 0; i < fc.patents; ++i) {
      const std::string id = fmt::format("US{}{:06d}", c == 0 ? "C" : "U", i);
      ids.push_back(id);
      CreditRow row;
      row.application_id = id;
      row.year = 2005 + static_cast<int>(i % 12);
      row.region = "US";
      row.category = origin[c];
      row.credits.emplace_back(owners[c][i % 3], 1.0);
      fx.ledger.push_back(std::move(row));
    }
    // Receivers in category order; patent k gets event k, and the surplus
    // wraps around onto the first changed patents.
    std::vector<Category> to;
    for (const auto& [cat, n] : fc.transfers) to.insert(to.end(), n, cat);
    for (std::size_t k = 0; k < to.size(); ++k) {
      const std::string& app = ids[k % fc.changed];
      auto e = make_event(app, receivers[static_cast<int>(to[k])], owners[c][(k % fc.changed) % 3],
                          "ASSIGNMENT OF ASSIGNORS INTEREST");
      e.to_category = to[k];
      e.from_category = origin[c];
      fx.events.push_back(std::move(e));
    }
    // License slots: patents counted from the end of the pool.
    std::vector<std::string> slots;
    std::size_t next = fc.patents;
    for (const auto& [times, count] : fc.license_histogram) {
      for (std::size_t p = 0; p < count; ++p) {
        if (next == 0) throw ConfigError(kStage, "license histogram exceeds the patent pool");
        --next;
        slots.insert(slots.end(), times, ids[next]);
      }
    }
    std::vector<std::string> names;
    for (const auto& l : licensees) names.insert(names.end(), c == 0 ? l.corporate : l.university, l.name);
    if (names.size() != slots.size()) {
      throw ConfigError(kStage, "licensee counts do not match the license histogram");
    }
    for (std::size_t k = 0; k < slots.size(); ++k) {
      auto e = make_event(slots[k], names[k], owners[c][0], "LICENSE (SEE DOCUMENT FOR DETAILS)");
      e.assignee_entity = normalize_name(names[k]);
      e.from_category = origin[c];
      fx.events.push_back(std::move(e));
    }
  }
  return fx;
}

}  // namespace patlas
