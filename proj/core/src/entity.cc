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

#include "patlas/entity.h"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numeric>
#include <set>
#include <sstream>
#include <tuple>

#include <boost/multiprecision/cpp_int.hpp>

#include "patlas/error.h"
#include "patlas/parallel.h"
#include "patlas/similarity.h"
#include "patlas/text.h"

namespace patlas {
namespace {

constexpr const char* kStage = "resolve";

std::vector<std::string> name_tokens(std::string_view name) {
  std::vector<std::string> out;
  for (auto& t : alnum_tokens(name)) out.push_back(to_upper(t));
  return out;
}

bool phrase_matches(const std::vector<std::string>& tokens, std::string_view phrase) {
  std::vector<std::string> words = name_tokens(phrase);
  if (words.empty() || words.size() > tokens.size()) return false;
  for (std::size_t i = 0; i + words.size() <= tokens.size(); ++i) {
    if (std::equal(words.begin(), words.end(), tokens.begin() + static_cast<std::ptrdiff_t>(i))) {
      return true;
    }
  }
  return false;
}

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

int form_rank(char form) {
  if (form == 'C') return 0;
  if (form == 'N') return 1;
  return 2;
}

}  // namespace

std::string_view category_name(Category c) {
  switch (c) {
    case Category::kCorporation: return "corporation";
    case Category::kUniversity: return "university";
    case Category::kOthers: return "others";
  }
  return "others";
}

Category parse_category(std::string_view name) {
  if (name == "corporation") return Category::kCorporation;
  if (name == "university") return Category::kUniversity;
  if (name == "others") return Category::kOthers;
  throw ParseError(kStage, 0, "unknown category '" + std::string(name) + "'");
}

const CategoryLexicon& CategoryLexicon::builtin() {
  static const CategoryLexicon lexicon{
      {"UNIV", "UNIVERSITY", "COLLEGE", "INST OF TECHNOLOGY", "ACADEMY", "SCHOOL"},
      {"CO", "LTD", "INC", "CORP", "LLC", "GMBH", "SA", "AG", "KK", "OY", "PLC"}};
  return lexicon;
}

CategoryLexicon CategoryLexicon::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(kStage, "cannot open lexicon '" + path.string() + "'");
  CategoryLexicon lex;
  std::string line;
  std::size_t n = 0;
  while (std::getline(in, line)) {
    ++n;
    auto t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    auto colon = t.find(':');
    if (colon == std::string_view::npos) {
      throw ParseError(kStage, n, "expected 'category: PHRASE'");
    }
    auto key = trim(t.substr(0, colon));
    std::string phrase = to_upper(trim(t.substr(colon + 1)));
    if (key == "university") {
      lex.university.push_back(phrase);
    } else if (key == "corporation") {
      lex.corporation.push_back(phrase);
    } else {
      throw ParseError(kStage, n, "unknown lexicon category '" + std::string(key) + "'");
    }
  }
  return lex;
}

Category categorize_name(std::string_view name, const CategoryLexicon& lexicon) {
  auto tokens = name_tokens(name);
  for (const auto& p : lexicon.university) {
    if (phrase_matches(tokens, p)) return Category::kUniversity;
  }
  for (const auto& p : lexicon.corporation) {
    if (phrase_matches(tokens, p)) return Category::kCorporation;
  }
  return Category::kOthers;
}

Category majority_category(std::span<const Category> votes) {
  std::array<std::size_t, 3> count{};
  for (Category c : votes) ++count[static_cast<std::size_t>(c)];
  std::size_t best = *std::max_element(count.begin(), count.end());
  if (best == 0) return Category::kOthers;
  int winners = 0;
  Category pick = Category::kOthers;
  for (std::size_t k = 0; k < 3; ++k) {
    if (count[k] == best) {
      ++winners;
      pick = static_cast<Category>(k);
    }
  }
  return winners == 1 ? pick : Category::kOthers;
}

double percentile(std::vector<double> values, double p) {
  if (values.empty()) throw ConfigError(kStage, "percentile of an empty set");
  if (!(p >= 0.0 && p <= 100.0)) throw ConfigError(kStage, "percentile outside [0, 100]");
  std::sort(values.begin(), values.end());
  double rank = p / 100.0 * static_cast<double>(values.size() - 1);
  std::size_t lo = static_cast<std::size_t>(std::floor(rank));
  std::size_t hi = std::min(lo + 1, values.size() - 1);
  double frac = rank - static_cast<double>(lo);
  return values[lo] + frac * (values[hi] - values[lo]);
}

CodeGraph build_code_graph(std::string code, std::vector<std::string> names) {
  CodeGraph g;
  g.code = std::move(code);
  for (auto& n : names) n = normalize_name(n);
  names.erase(std::remove(names.begin(), names.end(), std::string()), names.end());
  std::sort(names.begin(), names.end());
  names.erase(std::unique(names.begin(), names.end()), names.end());
  g.names = std::move(names);
  const std::size_t n = g.names.size();
  g.edges.resize(n * (n - (n > 0 ? 1 : 0)) / 2);
  std::vector<std::size_t> row_start(n, 0);
  for (std::size_t a = 1; a < n; ++a) row_start[a] = row_start[a - 1] + (n - a);
  auto fill_row = [&](std::size_t a) {
    std::size_t e = row_start[a];
    for (std::size_t b = a + 1; b < n; ++b) {
      g.edges[e++] = NameEdge{a, b, similarity(g.names[a], g.names[b])};
    }
  };
  if (n > 48) {
    parallel_for(n, fill_row);
  } else {
    for (std::size_t a = 0; a < n; ++a) fill_row(a);
  }
  return g;
}

double edge_threshold(std::span<const CodeGraph> graphs, double p0) {
  if (!(p0 >= 85.0 && p0 <= 99.0)) {
    throw ConfigError(kStage, "p0 must lie in [85, 99]");
  }
  std::vector<double> weights;
  for (const auto& g : graphs) {
    for (const auto& e : g.edges) weights.push_back(e.weight);
  }
  if (weights.empty()) return 100.0;
  return percentile(std::move(weights), p0);
}

std::vector<Component> split_code(const CodeGraph& graph, double threshold) {
  UnionFind uf(graph.names.size());
  for (const auto& e : graph.edges) {
    if (e.weight >= threshold) uf.unite(e.a, e.b);
  }
  std::map<std::size_t, std::vector<std::string>> groups;
  for (std::size_t i = 0; i < graph.names.size(); ++i) {
    groups[uf.find(i)].push_back(graph.names[i]);
  }
  std::vector<Component> out;
  for (auto& [root, names] : groups) out.push_back(Component{"", std::move(names)});
  std::sort(out.begin(), out.end(), [](const Component& a, const Component& b) {
    if (a.names.size() != b.names.size()) return a.names.size() > b.names.size();
    return a.names.front() < b.names.front();
  });
  for (std::size_t k = 0; k < out.size(); ++k) {
    out[k].entity_id = graph.code + "#" + std::to_string(k);
  }
  return out;
}

char code_form(std::string_view entity_id) {
  auto hash = entity_id.find('#');
  std::string_view code = entity_id.substr(0, hash);
  auto sep = code.find_last_of("|-");
  if (sep == std::string_view::npos || sep + 1 >= code.size()) return 0;
  return static_cast<char>(std::toupper(static_cast<unsigned char>(code[sep + 1])));
}

std::string resolve_name(std::string_view name, std::span<const Component> candidates) {
  if (candidates.empty()) throw ConfigError(kStage, "resolve_name without candidates");
  const std::string norm = normalize_name(name);
  struct Score {
    double max_sim;
    double avg_sim;
    int form;
    const std::string* id;
  };
  std::vector<Score> scores;
  for (const auto& c : candidates) {
    double mx = 0.0, sum = 0.0;
    std::size_t others = 0;
    for (const auto& other : c.names) {
      if (other == norm) continue;
      double s = similarity(norm, other);
      mx = std::max(mx, s);
      sum += s;
      ++others;
    }
    scores.push_back({mx, others ? sum / static_cast<double>(others) : 0.0,
                      form_rank(code_form(c.entity_id)), &c.entity_id});
  }
  auto best = std::min_element(scores.begin(), scores.end(), [](const Score& a, const Score& b) {
    if (a.max_sim != b.max_sim) return a.max_sim > b.max_sim;
    if (a.avg_sim != b.avg_sim) return a.avg_sim > b.avg_sim;
    if (a.form != b.form) return a.form < b.form;
    return *a.id < *b.id;
  });
  return *best->id;
}

std::vector<std::uint64_t> histogram(std::span<const double> scores, std::size_t bins,
                                     double lo, double hi) {
  if (bins == 0 || !(hi > lo)) throw ConfigError(kStage, "invalid histogram range");
  std::vector<std::uint64_t> counts(bins, 0);
  const double width = (hi - lo) / static_cast<double>(bins);
  for (double s : scores) {
    if (s < lo || s > hi) continue;
    auto b = static_cast<std::size_t>(std::floor((s - lo) / width));
    ++counts[std::min(b, bins - 1)];
  }
  return counts;
}

double otsu_threshold(std::span<const std::uint64_t> counts, double lo, double hi) {
  using boost::multiprecision::cpp_int;
  std::size_t nonempty = 0;
  for (auto c : counts) nonempty += c > 0 ? 1 : 0;
  if (nonempty < 2) throw Error(kStage, "unimodal histogram: Otsu threshold undefined");

  // Bin index stands in for the bin value (an affine map keeps the argmax).
  // Between-class variance is proportional to (N*S0 - N0*S)^2 / (N0*N1),
  // compared exactly as a fraction.
  cpp_int total = 0, weighted = 0;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    total += counts[i];
    weighted += cpp_int(counts[i]) * i;
  }
  cpp_int n0 = 0, s0 = 0;
  cpp_int best_num = -1, best_den = 1;
  std::vector<std::size_t> tied;
  for (std::size_t k = 0; k + 1 < counts.size(); ++k) {
    n0 += counts[k];
    s0 += cpp_int(counts[k]) * k;
    cpp_int n1 = total - n0;
    if (n0 == 0 || n1 == 0) continue;
    cpp_int diff = total * s0 - n0 * weighted;
    cpp_int num = diff * diff;
    cpp_int den = n0 * n1;
    if (best_num < 0) {
      best_num = num;
      best_den = den;
      tied = {k};
      continue;
    }
    cpp_int lhs = num * best_den, rhs = best_num * den;
    if (lhs > rhs) {
      best_num = num;
      best_den = den;
      tied = {k};
    } else if (lhs == rhs) {
      tied.push_back(k);
    }
  }
  std::size_t cut = tied[(tied.size() - 1) / 2];
  const double width = (hi - lo) / static_cast<double>(counts.size());
  return lo + static_cast<double>(cut + 1) * width;
}

// ---- IdentityRegistry ------------------------------------------------------

std::optional<std::string> IdentityRegistry::entity_of(std::string_view name) const {
  auto it = names_.find(normalize_name(name));
  if (it == names_.end()) return std::nullopt;
  return it->second;
}

const Entity* IdentityRegistry::find(std::string_view id) const {
  auto it = entities_.find(id);
  return it == entities_.end() ? nullptr : &it->second;
}

Entity* IdentityRegistry::find(std::string_view id) {
  auto it = entities_.find(id);
  return it == entities_.end() ? nullptr : &it->second;
}

void IdentityRegistry::assign(const std::string& name, const std::string& id,
                              const std::string& code, const CategoryLexicon& lexicon) {
  std::string norm = normalize_name(name);
  if (auto old = names_.find(norm); old != names_.end()) {
    if (old->second == id) return;
    Entity& prev = entities_.at(old->second);
    prev.names.erase(std::remove(prev.names.begin(), prev.names.end(), norm), prev.names.end());
    if (prev.names.empty()) entities_.erase(old->second);
  }
  names_[norm] = id;
  // Keep fresh singleton ids unique after a registry is reloaded.
  if (id.starts_with("NEW#")) {
    std::size_t k = std::strtoull(id.c_str() + 4, nullptr, 10);
    singletons_ = std::max(singletons_, k + 1);
  }
  Entity& e = entities_[id];
  if (e.id.empty()) {
    e.id = id;
    e.code = code;
  }
  e.names.insert(std::lower_bound(e.names.begin(), e.names.end(), norm), norm);
  std::vector<Category> votes;
  for (const auto& n : e.names) votes.push_back(categorize_name(n, lexicon));
  e.category = majority_category(votes);
}

std::string IdentityRegistry::add_singleton(const std::string& name,
                                            const CategoryLexicon& lexicon) {
  std::string id = "NEW#" + std::to_string(singletons_++);
  assign(name, id, "NEW", lexicon);
  return id;
}

std::vector<std::pair<std::string, std::string>> IdentityRegistry::name_list() const {
  return {names_.begin(), names_.end()};
}

RegistryBuild build_registry(const std::vector<PatentRecord>& apps, double p0,
                             const CategoryLexicon& lexicon) {
  std::map<std::string, std::set<std::string>> by_code;
  for (const auto& p : apps) {
    for (const auto& a : p.assignee_name_pool) {
      std::string norm = normalize_name(a.name);
      if (norm.empty() || a.code.empty()) continue;
      by_code[a.code].insert(norm);
    }
  }
  RegistryBuild out;
  for (auto& [code, names] : by_code) {
    out.graphs.push_back(build_code_graph(code, {names.begin(), names.end()}));
  }
  out.threshold = edge_threshold(out.graphs, p0);

  std::vector<std::vector<Component>> comps(out.graphs.size());
  for (std::size_t c = 0; c < out.graphs.size(); ++c) {
    comps[c] = split_code(out.graphs[c], out.threshold);
  }
  // name -> (graph index, component index) for every place it appears.
  std::map<std::string, std::vector<std::pair<std::size_t, std::size_t>>> homes;
  for (std::size_t c = 0; c < comps.size(); ++c) {
    for (std::size_t k = 0; k < comps[c].size(); ++k) {
      for (const auto& n : comps[c][k].names) homes[n].emplace_back(c, k);
    }
  }
  std::vector<std::pair<std::string, std::size_t>> choice(homes.size());
  std::vector<const std::string*> keys;
  std::vector<const std::vector<std::pair<std::size_t, std::size_t>>*> vals;
  for (const auto& [n, h] : homes) {
    keys.push_back(&n);
    vals.push_back(&h);
  }
  parallel_for(keys.size(), [&](std::size_t i) {
    const auto& h = *vals[i];
    if (h.size() == 1) {
      choice[i] = {comps[h[0].first][h[0].second].entity_id, h[0].first};
      return;
    }
    std::vector<Component> cands;
    for (auto [c, k] : h) cands.push_back(comps[c][k]);
    std::string id = resolve_name(*keys[i], cands);
    for (auto [c, k] : h) {
      if (comps[c][k].entity_id == id) choice[i] = {id, c};
    }
  });
  for (std::size_t i = 0; i < keys.size(); ++i) {
    out.registry.assign(*keys[i], choice[i].first, out.graphs[choice[i].second].code, lexicon);
  }
  return out;
}

std::vector<double> original_match_scores(const std::vector<PatentRecord>& apps) {
  std::vector<std::vector<double>> per(apps.size());
  parallel_for(apps.size(), [&](std::size_t i) {
    const auto& p = apps[i];
    if (p.first_assignee_names.empty()) return;
    const std::string& first = p.first_assignee_names.front();
    if (normalize_name(first).empty()) return;
    for (const auto& a : p.assignee_name_pool) {
      if (normalize_name(a.name).empty()) continue;
      per[i].push_back(similarity(first, a.name));
    }
  });
  std::vector<double> out;
  for (auto& v : per) out.insert(out.end(), v.begin(), v.end());
  return out;
}

namespace {

// Matching without mutation; nullopt means "needs a new singleton".
std::optional<std::string> match_readonly(const std::string& norm,
                                          std::span<const std::string> same_record,
                                          const IdentityRegistry& registry,
                                          const std::vector<std::pair<std::string, std::string>>& all,
                                          double threshold, double* sim_out) {
  if (auto hit = registry.entity_of(norm)) {
    if (sim_out) *sim_out = 100.0;
    return hit;
  }
  double best = -1.0;
  std::optional<std::string> best_id;
  for (const auto& other : same_record) {
    std::string on = normalize_name(other);
    if (on.empty()) continue;
    auto id = registry.entity_of(on);
    if (!id) continue;
    double s = similarity(norm, on);
    if (s < threshold) continue;
    if (s > best || (s == best && *id < *best_id)) {
      best = s;
      best_id = id;
    }
  }
  if (best_id) {
    if (sim_out) *sim_out = best;
    return best_id;
  }

  // Up to five best registry names over the threshold.
  std::vector<std::pair<double, const std::pair<std::string, std::string>*>> top;
  for (const auto& entry : all) {
    double s = similarity(norm, entry.first);
    if (s < threshold) continue;
    top.emplace_back(s, &entry);
  }
  if (top.empty()) {
    if (sim_out) *sim_out = 0.0;
    return std::nullopt;
  }
  std::sort(top.begin(), top.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first > b.first;
    return a.second->first < b.second->first;
  });
  if (top.size() > 5) top.resize(5);
  std::vector<Component> cands;
  for (const auto& [s, entry] : top) {
    const std::string& id = entry->second;
    if (std::any_of(cands.begin(), cands.end(),
                    [&](const Component& c) { return c.entity_id == id; })) {
      continue;
    }
    cands.push_back(Component{id, registry.find(id)->names});
  }
  if (sim_out) *sim_out = top.front().first;
  return resolve_name(norm, cands);
}

}  // namespace

std::string match_name(std::string_view name, std::span<const std::string> same_record_names,
                       IdentityRegistry& registry, double threshold, double* similarity_out,
                       const CategoryLexicon& lexicon) {
  std::string norm = normalize_name(name);
  if (norm.empty()) throw ConfigError(kStage, "cannot match an empty name");
  auto all = registry.name_list();
  auto hit = match_readonly(norm, same_record_names, registry, all, threshold, similarity_out);
  if (hit) return *hit;
  return registry.add_singleton(norm, lexicon);
}

std::vector<std::vector<std::string>> match_original_names(
    const std::vector<PatentRecord>& apps, IdentityRegistry& registry, double threshold,
    const CategoryLexicon& lexicon) {
  const auto all = registry.name_list();
  // Per application: one slot per distinct original name, either an entity
  // id or the normalized name awaiting a singleton.
  struct Slot {
    std::optional<std::string> id;
    std::string name;
  };
  std::vector<std::vector<Slot>> slots(apps.size());
  parallel_for(apps.size(), [&](std::size_t i) {
    const auto& p = apps[i];
    std::vector<std::string> pool;
    for (const auto& a : p.assignee_name_pool) pool.push_back(a.name);
    std::set<std::string> seen;
    for (const auto& raw : p.first_assignee_names) {
      std::string norm = normalize_name(raw);
      if (norm.empty() || !seen.insert(norm).second) continue;
      slots[i].push_back({match_readonly(norm, pool, registry, all, threshold, nullptr), norm});
    }
  });

  std::vector<std::vector<std::string>> out(apps.size());
  for (std::size_t i = 0; i < apps.size(); ++i) {
    const auto& p = apps[i];
    auto push = [&](const std::string& id) {
      if (std::find(out[i].begin(), out[i].end(), id) == out[i].end()) out[i].push_back(id);
    };
    if (!slots[i].empty()) {
      for (auto& s : slots[i]) {
        if (s.id) {
          push(*s.id);
        } else if (auto again = registry.entity_of(s.name)) {
          push(*again);
        } else {
          push(registry.add_singleton(s.name, lexicon));
        }
      }
      continue;
    }
    for (const auto& a : p.assignee_name_pool) {
      if (auto id = registry.entity_of(a.name)) push(*id);
    }
  }
  return out;
}

std::string region_of_address(std::string_view address) {
  auto parts = split(address, ',');
  if (parts.empty()) return "??";
  auto last = trim(parts.back());
  if (last.size() == 2 && std::isalpha(static_cast<unsigned char>(last[0])) &&
      std::isalpha(static_cast<unsigned char>(last[1]))) {
    return to_upper(last);
  }
  return "??";
}

Category patent_category(std::span<const std::string> entity_ids,
                         const IdentityRegistry& registry) {
  std::vector<Category> votes;
  for (const auto& id : entity_ids) {
    const Entity* e = registry.find(id);
    votes.push_back(e ? e->category : Category::kOthers);
  }
  return majority_category(votes);
}

CreditRow allocate_credits(const PatentRecord& patent, std::span<const std::string> entity_ids,
                           const IdentityRegistry& registry) {
  CreditRow row;
  row.application_id = patent.application_id;
  row.year = patent.year;
  row.region = region_of_address(patent.first_assignee_address);
  if (row.region == "??" && !patent.first_assignee_address.empty()) {
    std::clog << "patlas: warning: no region in address of " << patent.application_id << "\n";
  }
  std::vector<std::string> distinct;
  for (const auto& id : entity_ids) {
    if (std::find(distinct.begin(), distinct.end(), id) == distinct.end()) distinct.push_back(id);
  }
  if (distinct.empty()) {
    throw ConfigError("credits", "application " + patent.application_id +
                                     " has no resolved first assignee");
  }
  row.category = patent_category(distinct, registry);
  const double share = 1.0 / static_cast<double>(distinct.size());
  for (auto& id : distinct) row.credits.emplace_back(std::move(id), share);
  return row;
}

void assign_entity_regions(std::span<const CreditRow> ledger, IdentityRegistry& registry) {
  std::map<std::string, std::map<std::string, double>> seen;
  for (const auto& row : ledger) {
    for (const auto& [id, credit] : row.credits) seen[id][row.region] += 1.0;
  }
  for (auto& [id, regions] : seen) {
    Entity* e = registry.find(id);
    if (!e) continue;
    std::string best = "??";
    double best_count = 0.0;
    for (const auto& [region, count] : regions) {
      if (region == "??") continue;
      if (count > best_count) {
        best = region;
        best_count = count;
      }
    }
    e->region = best;
  }
}

std::map<std::string, double> entity_totals(std::span<const CreditRow> ledger) {
  std::map<std::string, double> out;
  for (const auto& row : ledger) {
    for (const auto& [id, credit] : row.credits) out[id] += credit;
  }
  return out;
}

AliasFamilies AliasFamilies::parse(std::string_view text, const IdentityRegistry& registry) {
  AliasFamilies out;
  std::size_t n = 0;
  for (const auto& raw : split(text, '\n')) {
    ++n;
    auto line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ParseError("transactions", n, "expected 'FAMILY = member; member'");
    }
    std::string family(trim(line.substr(0, eq)));
    for (const auto& m : split(line.substr(eq + 1), ';')) {
      std::string member(trim(m));
      if (member.empty()) continue;
      if (registry.find(member)) {
        out.add(family, member);
      } else if (auto id = registry.entity_of(member)) {
        out.add(family, *id);
      }
    }
  }
  return out;
}

AliasFamilies AliasFamilies::load(const std::filesystem::path& path,
                                  const IdentityRegistry& registry) {
  std::ifstream in(path);
  if (!in) throw Error("transactions", "cannot open alias file '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str(), registry);
}

void AliasFamilies::add(const std::string& family, const std::string& entity_id) {
  family_[entity_id] = family;
}

std::string AliasFamilies::family_of(std::string_view entity_id) const {
  auto it = family_.find(entity_id);
  return it == family_.end() ? std::string(entity_id) : "family:" + it->second;
}

}  // namespace patlas
