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

// Assignee disambiguation and credit allocation.
//
// Names sharing a DWPI assignee code form a similarity graph; edges below a
// global percentile threshold are cut and each surviving component becomes
// an entity `CODE#k`. A name listed under several codes is given to one
// component by a fixed cascade. Original and US assignee names are matched
// onto those entities, and each patent's credit is split evenly over its
// first-assignee entities.

#ifndef PATLAS_ENTITY_H_
#define PATLAS_ENTITY_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "patlas/ingest.h"

namespace patlas {

enum class Category { kCorporation, kUniversity, kOthers };

std::string_view category_name(Category c);
Category parse_category(std::string_view name);

// Keyword phrases (uppercase, space separated) that mark a name's category.
// A phrase matches when its tokens occur consecutively among the name's
// tokens.
struct CategoryLexicon {
  std::vector<std::string> university;
  std::vector<std::string> corporation;

  static const CategoryLexicon& builtin();
  // Lines "university: PHRASE" or "corporation: PHRASE"; '#' comments.
  static CategoryLexicon load(const std::filesystem::path& path);
};

Category categorize_name(std::string_view name,
                         const CategoryLexicon& lexicon = CategoryLexicon::builtin());
// Most common category; any tie for first place yields kOthers.
Category majority_category(std::span<const Category> votes);

// Linear-interpolation percentile (p in [0, 100]) of unsorted values.
double percentile(std::vector<double> values, double p);

struct NameEdge {
  std::size_t a = 0;
  std::size_t b = 0;
  double weight = 0.0;
};

// Complete similarity graph over the distinct names of one code.
struct CodeGraph {
  std::string code;
  std::vector<std::string> names;  // normalized, sorted, unique
  std::vector<NameEdge> edges;
};

CodeGraph build_code_graph(std::string code, std::vector<std::string> names);

// p0-th percentile of every edge weight across all graphs; p0 in [85, 99].
// 100 when there are no edges at all.
double edge_threshold(std::span<const CodeGraph> graphs, double p0);

struct Component {
  std::string entity_id;
  std::vector<std::string> names;  // sorted
};

// Connected components after dropping edges lighter than `threshold`,
// ordered by size (descending) then smallest name, and named code#0,
// code#1, ...
std::vector<Component> split_code(const CodeGraph& graph, double threshold);

// Code form letter ('C' standard, 'N' non-standard, ...): the first letter
// after the last '|' or '-' in the code. 0 when absent.
char code_form(std::string_view entity_id);

// Picks one of `candidates` for `name`:
//   1. highest max-similarity between the name and the candidate's other names
//   2. highest average of those similarities
//   3. code form C before N before anything else
//   4. lexicographically smallest entity id
// Candidates must be nonempty.
std::string resolve_name(std::string_view name, std::span<const Component> candidates);

// Equal-width histogram of scores over [lo, hi]; the top edge is inclusive.
std::vector<std::uint64_t> histogram(std::span<const double> scores,
                                     std::size_t bins = 100, double lo = 0.0,
                                     double hi = 100.0);

// Otsu cut over histogram counts on [lo, hi): the upper edge of the last
// bin of the low class that maximizes between-class variance. Ties between
// cuts pick the middle one. Throws on fewer than two nonempty bins.
double otsu_threshold(std::span<const std::uint64_t> counts, double lo = 0.0,
                      double hi = 100.0);

struct Entity {
  std::string id;
  std::string code;
  std::vector<std::string> names;  // sorted
  Category category = Category::kOthers;
  std::string region = "??";
};

class IdentityRegistry {
 public:
  std::optional<std::string> entity_of(std::string_view name) const;
  const Entity* find(std::string_view id) const;
  Entity* find(std::string_view id);
  const std::map<std::string, Entity, std::less<>>& entities() const { return entities_; }
  const std::map<std::string, std::string, std::less<>>& names() const { return names_; }

  // Registers `name` under `id`, creating the entity on first use. The
  // entity's category is recomputed from its names.
  void assign(const std::string& name, const std::string& id, const std::string& code,
              const CategoryLexicon& lexicon = CategoryLexicon::builtin());
  // New entity holding only `name`; ids are NEW#0, NEW#1, ... in creation order.
  std::string add_singleton(const std::string& name,
                            const CategoryLexicon& lexicon = CategoryLexicon::builtin());

  // Every registered name as (normalized name, entity id), sorted by name.
  std::vector<std::pair<std::string, std::string>> name_list() const;

 private:
  std::map<std::string, Entity, std::less<>> entities_;
  std::map<std::string, std::string, std::less<>> names_;
  std::size_t singletons_ = 0;
};

struct RegistryBuild {
  IdentityRegistry registry;
  double threshold = 100.0;  // edge threshold at p0
  std::vector<CodeGraph> graphs;
};

// Builds the registry from the DWPI (name, code) pools of all applications.
RegistryBuild build_registry(const std::vector<PatentRecord>& apps, double p0,
                             const CategoryLexicon& lexicon = CategoryLexicon::builtin());

// Similarities between each application's first original assignee and the
// DWPI names of the same application; the input to the Otsu cut.
std::vector<double> original_match_scores(const std::vector<PatentRecord>& apps);

// Maps a name to an entity: exact registry hit, else the best same-record
// name scoring >= threshold, else the resolve cascade over the entities of
// the (at most) five best registry names scoring >= threshold, else a new
// singleton entity. `similarity_out` receives the winning score (100 for an
// exact hit, 0 for a singleton).
std::string match_name(std::string_view name,
                       std::span<const std::string> same_record_names,
                       IdentityRegistry& registry, double threshold,
                       double* similarity_out = nullptr,
                       const CategoryLexicon& lexicon = CategoryLexicon::builtin());

// First-assignee entities of each application, in application order: the
// distinct matches of its original assignee names, or the entities of its
// DWPI names when no original names exist. Names are matched in parallel
// against a snapshot; singleton creation is committed afterwards in order.
std::vector<std::vector<std::string>> match_original_names(
    const std::vector<PatentRecord>& apps, IdentityRegistry& registry,
    double threshold, const CategoryLexicon& lexicon = CategoryLexicon::builtin());

// Region code: last comma-separated token of the address when it is two
// letters (uppercased); "??" otherwise.
std::string region_of_address(std::string_view address);

Category patent_category(std::span<const std::string> entity_ids,
                         const IdentityRegistry& registry);

struct CreditRow {
  std::string application_id;
  int year = 0;
  std::string region;
  Category category = Category::kOthers;
  std::vector<std::pair<std::string, double>> credits;  // sums to 1
};

// Splits one credit evenly over the distinct entities, in first-seen order.
CreditRow allocate_credits(const PatentRecord& patent,
                           std::span<const std::string> entity_ids,
                           const IdentityRegistry& registry);

// Entity region = most common region over its credited patents (ties to the
// smallest code); unknown regions are ignored unless nothing else is seen.
void assign_entity_regions(std::span<const CreditRow> ledger, IdentityRegistry& registry);

// Total credit per entity.
std::map<std::string, double> entity_totals(std::span<const CreditRow> ledger);

// Entity families for internal-transfer detection. File lines look like
// "SAMSUNG = SAMSUNG ELECTRONICS CO LTD; SAMSUNG SDI CO LTD"; members may be
// names (resolved through the registry) or entity ids.
class AliasFamilies {
 public:
  static AliasFamilies load(const std::filesystem::path& path,
                            const IdentityRegistry& registry);
  static AliasFamilies parse(std::string_view text, const IdentityRegistry& registry);

  void add(const std::string& family, const std::string& entity_id);
  // The family of an entity, or the entity id itself when it has none.
  std::string family_of(std::string_view entity_id) const;
  bool same_family(std::string_view a, std::string_view b) const {
    return family_of(a) == family_of(b);
  }

 private:
  std::map<std::string, std::string, std::less<>> family_;
};

}  // namespace patlas

#endif  // PATLAS_ENTITY_H_
