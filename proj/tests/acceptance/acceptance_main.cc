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

// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <fmt/format.h>
#include <unistd.h>

#include "patlas/coclus.h"
#include "patlas/config.h"
#include "patlas/entity.h"
#include "patlas/ingest.h"
#include "patlas/pipeline.h"
#include "patlas/portfolio.h"
#include "patlas/report.h"
#include "patlas/synthetic.h"
#include "patlas/topics.h"
#include "patlas/transactions.h"

namespace fs = std::filesystem;
using namespace patlas;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// ---- 1: fit vs exhaustive search on every matrix up to 4x4 ---------------

// Maximum of Q * T^2 over all 2-labelings of rows and columns.
std::int64_t exhaustive_best(int r, int c, std::uint32_t mask) {
  std::uint32_t row_bits[4] = {0, 0, 0, 0};
  std::int64_t rd[4] = {0, 0, 0, 0}, cd[4] = {0, 0, 0, 0}, total = 0;
  for (int k = 0; k < r * c; ++k) {
    if (mask >> k & 1u) {
      row_bits[k / c] |= 1u << (k % c);
      ++rd[k / c];
      ++cd[k % c];
      ++total;
    }
  }
  const std::uint32_t all_cols = (1u << c) - 1;
  std::int64_t best = INT64_MIN;
  for (std::uint32_t ca = 0; ca <= all_cols; ++ca) {
    std::int64_t cm[2] = {0, 0};
    for (int j = 0; j < c; ++j) cm[ca >> j & 1u] += cd[j];
    for (std::uint32_t ra = 0; ra < (1u << r); ++ra) {
      std::int64_t in = 0, rm[2] = {0, 0};
      for (int i = 0; i < r; ++i) {
        const bool one = ra >> i & 1u;
        rm[one] += rd[i];
        in += std::popcount(row_bits[i] & (one ? ca : ~ca & all_cols));
      }
      best = std::max(best, total * in - rm[0] * cm[0] - rm[1] * cm[1]);
    }
  }
  return best;
}

Outcome criterion_exhaustive() {
  std::size_t checked = 0, mismatched = 0;
  double worst = 0.0;
  for (int r = 2; r <= 4; ++r) {
    for (int c = 2; c <= 4; ++c) {
      for (std::uint32_t mask = 1; mask < (1u << (r * c)); ++mask) {
        std::vector<std::pair<Index, Index>> entries;
        std::int64_t total = 0;
        for (int k = 0; k < r * c; ++k) {
          if (mask >> k & 1u) {
            entries.emplace_back(static_cast<Index>(k / c), static_cast<Index>(k % c));
            ++total;
          }
        }
        auto m = SparseBinaryMatrix::from_entries(r, c, std::move(entries));
        double truth = static_cast<double>(exhaustive_best(r, c, mask)) /
                       static_cast<double>(total * total);
        FitOptions opt;
        opt.g = 2;
        double got = fit(m, opt).modularity;
        double err = std::abs(got - truth);
        worst = std::max(worst, err);
        if (err > 1e-12) ++mismatched;
        ++checked;
      }
    }
  }
  return {mismatched == 0, fmt::format("{} matrices, {} mismatches, max |dQ| {:.3g}", checked,
                                       mismatched, worst)};
}

// ---- 2: planted co-cluster recovery ---------------------------------------

Outcome criterion_planted() {
  auto planted = planted_block_matrix(700, 70, 7, 0.8, 0.02, 7);
  FitOptions opt;
  opt.g = 7;
  opt.restarts = 10;
  auto fitted = fit(planted.matrix, opt);
  double ari = adjusted_rand_index(fitted.row_assignment, planted.row_labels);
  auto curve = modularity_curve(planted.matrix, 2, 12, 42, 10);
  int plateau = -1;
  for (std::size_t i = 0; i + 1 < curve.size(); ++i) {
    if (curve[i + 1].modularity - curve[i].modularity < 0.02) {
      plateau = curve[i].g;
      break;
    }
  }
  bool rising = true;
  for (std::size_t i = 0; i + 1 < curve.size() && curve[i + 1].g <= 7; ++i) {
    rising = rising && curve[i + 1].modularity > curve[i].modularity;
  }
  return {ari >= 0.9 && plateau == 7 && rising,
          fmt::format("row ARI {:.4f}, first plateau at g = {}, Q(7) = {:.4f}, rising to 7: {}", ari,
                      plateau, curve[5].modularity, rising)};
}

// ---- 3: trivial cases -----------------------------------------------------

Outcome criterion_trivial() {
  auto planted = planted_block_matrix(120, 40, 4, 0.6, 0.05, 3);
  FitOptions one;
  one.g = 1;
  double q1 = fit(planted.matrix, one).modularity;
  FitOptions four;
  four.g = 4;
  auto fitted = fit(planted.matrix, four);
  std::mt19937_64 rng(11);
  std::size_t unequal = 0;
  for (int t = 0; t < 100; ++t) {
    std::vector<int> perm(4);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<int> rows, cols;
    for (int k : fitted.row_assignment) rows.push_back(perm[k]);
    for (int k : fitted.col_assignment) cols.push_back(perm[k]);
    if (modularity_of(planted.matrix, rows, cols) != fitted.modularity) ++unequal;
  }
  return {q1 == 0.0 && unequal == 0,
          fmt::format("Q(g=1) = {}, permutations changing Q: {}/100", q1, unequal)};
}

// ---- 4: z-score null model and planted signatures -------------------------

Outcome criterion_zscore() {
  constexpr int kDocs = 10000, kClusters = 7, kWords = 100;
  double z_sum = 0.0;
  std::size_t z_count = 0, extreme = 0, signature_first = 0;
  double worst_seed_fraction = 0.0;
  for (int seed = 1; seed <= 20; ++seed) {
    auto rng = make_generator(static_cast<std::uint64_t>(seed), 40);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<int> labels(kDocs);
    for (auto& l : labels) l = std::uniform_int_distribution<int>(0, kClusters - 1)(rng);
    std::vector<double> rate(kWords);
    for (auto& p : rate) p = 0.01 + 0.29 * unit(rng);
    std::vector<std::vector<std::string>> docs(kDocs);
    for (int d = 0; d < kDocs; ++d) {
      for (int w = 0; w < kWords; ++w) {
        if (unit(rng) < rate[w]) docs[d].push_back(fmt::format("w{:03d}", w));
      }
      // One planted signature word per cluster.
      for (int k = 0; k < kClusters; ++k) {
        if (unit(rng) < (labels[d] == k ? 0.2 : 0.02)) docs[d].push_back(fmt::format("sig{}", k));
      }
    }
    auto corpus = TokenizedCorpus::from_documents(docs);
    std::size_t seed_extreme = 0, seed_count = 0;
    for (int k = 0; k < kClusters; ++k) {
      for (int w = 0; w < kWords; ++w) {
        auto s = zscore(fmt::format("w{:03d}", w), k, corpus, labels);
        if (s.degenerate) continue;
        z_sum += s.z;
        ++z_count;
        ++seed_count;
        if (std::abs(s.z) > 3.0) {
          ++extreme;
          ++seed_extreme;
        }
      }
    }
    worst_seed_fraction =
        std::max(worst_seed_fraction, static_cast<double>(seed_extreme) / seed_count);
    bool all_first = true;
    for (int k = 0; k < kClusters; ++k) {
      auto top = top_keywords(k, corpus, labels, 1);
      all_first = all_first && !top.empty() && top[0].word == fmt::format("sig{}", k);
    }
    if (all_first) ++signature_first;
  }
  double mean = z_sum / static_cast<double>(z_count);
  double fraction = static_cast<double>(extreme) / static_cast<double>(z_count);
  bool pass = mean >= -0.1 && mean <= 0.1 && fraction < 0.01 && worst_seed_fraction < 0.01 &&
              signature_first == 20;
  return {pass, fmt::format("mean z {:.4f}, |z| > 3: {:.3f}% (worst seed {:.3f}%), signatures "
                            "first in {}/20 seeds",
                            mean, 100.0 * fraction, 100.0 * worst_seed_fraction, signature_first)};
}

// ---- 5: entropy -----------------------------------------------------------

// Proportions p_k proportional to exp(-beta k) with entropy `target`.
std::vector<double> proportions_with_entropy(double target, int g) {
  double lo = 0.0, hi = 20.0;
  std::vector<double> p(static_cast<std::size_t>(g));
  for (int it = 0; it < 200; ++it) {
    double beta = 0.5 * (lo + hi), z = 0.0;
    for (int k = 0; k < g; ++k) z += p[k] = std::exp(-beta * k);
    for (auto& v : p) v /= z;
    if (entropy(p) > target) lo = beta; else hi = beta;
  }
  return p;
}

Outcome criterion_entropy() {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  double worst = 0.0;
  for (int t = 0; t < 1000; ++t) {
    std::size_t n = 1 + static_cast<std::size_t>(rng() % 12);
    std::vector<double> counts(n);
    for (auto& c : counts) c = unit(rng) < 0.2 ? 0.0 : unit(rng) * 100.0;
    counts[0] += 1.0;
    double h = entropy_of_counts(counts);
    std::shuffle(counts.begin(), counts.end(), rng);
    worst = std::max(worst, std::abs(entropy_of_counts(counts) - h));
  }
  std::vector<double> uniform(7, 1.0 / 7.0);
  double uniform_err = std::abs(entropy(uniform) - std::log(7.0));

  // Corporate portfolios of 1000 patents whose area mix targets entropies in
  // [1.26, 1.77]; the value is read back through the trajectory code.
  std::vector<CreditRow> ledger;
  AreaLabels labels;
  std::size_t next_app = 0;
  for (int e = 0; e < 20; ++e) {
    double target = 1.26 + (1.77 - 1.26) * (e + 0.5) / 20.0;
    auto p = proportions_with_entropy(target, 7);
    for (int k = 0; k < 7; ++k) {
      auto patents = static_cast<std::size_t>(std::llround(p[k] * 1000.0));
      for (std::size_t i = 0; i < patents; ++i) {
        CreditRow row;
        row.application_id = fmt::format("E{:07d}", next_app++);
        row.year = 2004 + static_cast<int>(i % 14);
        row.region = "CN";
        row.category = Category::kCorporation;
        row.credits = {{fmt::format("CORP{:02d}", e), 1.0}};
        labels[row.application_id] = k;
        ledger.push_back(std::move(row));
      }
    }
  }
  double lo = 1e9, hi = -1e9;
  for (const auto& t : trajectories(ledger, labels, 7)) {
    double s = t.points.back().entropy;
    lo = std::min(lo, s);
    hi = std::max(hi, s);
  }
  bool pass = worst <= 1e-12 && uniform_err <= 1e-12 && lo >= 1.26 && hi <= 1.77;
  return {pass, fmt::format("permutation max diff {:.3g}, |H(uniform 7) - ln 7| = {:.3g}, "
                            "fixture entropies in [{:.4f}, {:.4f}]",
                            worst, uniform_err, lo, hi)};
}

// ---- 6: Otsu vs brute force -----------------------------------------------

// Between-class variance w0 * w1 * (mu0 - mu1)^2 with bin index as the value,
// scaled by N^2 to (s0 * n1 - s1 * n0)^2 / (n0 * n1) and compared exactly.
double otsu_brute_force(const std::vector<std::uint64_t>& h, double lo, double hi) {
  __extension__ typedef __int128 wide;
  const std::size_t bins = h.size();
  wide best_num = -1, best_den = 1;
  std::vector<std::size_t> tied;
  for (std::size_t k = 0; k + 1 < bins; ++k) {
    wide n0 = 0, s0 = 0, n1 = 0, s1 = 0;
    for (std::size_t i = 0; i < bins; ++i) {
      wide c = static_cast<wide>(h[i]);
      if (i <= k) {
        n0 += c;
        s0 += c * static_cast<wide>(i);
      } else {
        n1 += c;
        s1 += c * static_cast<wide>(i);
      }
    }
    if (n0 == 0 || n1 == 0) continue;
    wide diff = s0 * n1 - s1 * n0;
    wide num = diff * diff, den = n0 * n1;
    if (best_num < 0 || num * best_den > best_num * den) {
      best_num = num;
      best_den = den;
      tied = {k};
    } else if (num * best_den == best_num * den) {
      tied.push_back(k);
    }
  }
  const double width = (hi - lo) / static_cast<double>(bins);
  return lo + static_cast<double>(tied[(tied.size() - 1) / 2] + 1) * width;
}

Outcome criterion_otsu() {
  std::mt19937_64 rng(6);
  std::size_t mismatched = 0;
  for (int t = 0; t < 1000; ++t) {
    std::size_t bins = 2 + static_cast<std::size_t>(rng() % 99);
    std::vector<std::uint64_t> h(bins);
    std::size_t nonempty = 0;
    for (auto& c : h) {
      c = rng() % 3 == 0 ? 0 : rng() % 1000;
      nonempty += c > 0;
    }
    if (nonempty < 2) {
      h.front() += 1;
      h.back() += 1;
    }
    if (otsu_threshold(h, 0.0, 100.0) != otsu_brute_force(h, 0.0, 100.0)) ++mismatched;
  }
  return {mismatched == 0, fmt::format("1000 histograms, {} mismatches", mismatched)};
}

// ---- 7: entity resolution -------------------------------------------------

// Share of names whose entity is the modal entity of their identity and
// whose identity is the modal identity of that entity.
double resolution_accuracy(const std::vector<PlantedName>& names, const IdentityRegistry& reg) {
  std::map<int, std::map<std::string, int>> by_identity;
  std::map<std::string, std::map<int, int>> by_entity;
  for (const auto& n : names) {
    auto e = *reg.entity_of(n.name);
    ++by_identity[n.identity][e];
    ++by_entity[e][n.identity];
  }
  auto modal = [](const auto& m) {
    auto best = m.begin();
    for (auto it = m.begin(); it != m.end(); ++it) {
      if (it->second > best->second) best = it;
    }
    return best->first;
  };
  std::size_t ok = 0;
  for (const auto& n : names) {
    auto e = *reg.entity_of(n.name);
    if (modal(by_identity[n.identity]) == e && modal(by_entity[e]) == n.identity) ++ok;
  }
  return static_cast<double>(ok) / static_cast<double>(names.size());
}

Outcome criterion_entities() {
  double worst = 1.0;
  bool refines = true;
  std::string thresholds;
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    auto names = planted_names(NameVariantSpec{}, seed);
    auto records = records_from_names(names);
    auto strict = build_registry(records, 99.0);
    auto loose = build_registry(records, 90.0);
    worst = std::min(worst, resolution_accuracy(names, strict.registry));
    std::map<std::string, std::string> image;
    for (const auto& [name, id] : strict.registry.name_list()) {
      auto coarse = *loose.registry.entity_of(name);
      auto [it, fresh] = image.emplace(id, coarse);
      if (!fresh && it->second != coarse) refines = false;
    }
    thresholds += fmt::format("{}{:.1f}/{:.1f}", seed == 1 ? "" : ", ", strict.threshold,
                              loose.threshold);
  }
  return {worst >= 0.95 && refines,
          fmt::format("min accuracy {:.2f}% over 3 seeds, p0 = 99 refines p0 = 90: {}, edge "
                      "thresholds (99/90) {}",
                      100.0 * worst, refines, thresholds)};
}

// ---- 8: credit conservation -----------------------------------------------

Outcome criterion_credits() {
  constexpr std::size_t kPatents = 100000, kEntities = 2000;
  IdentityRegistry registry;
  std::vector<std::string> ids;
  for (std::size_t e = 0; e < kEntities; ++e) {
    ids.push_back(fmt::format("C{:04d}#0", e));
    registry.assign(fmt::format("ENTITY {} CO LTD", e), ids.back(), fmt::format("C{:04d}", e));
  }
  registry.assign("PLANTED MATERIALS INC", "PLNT-C#0", "PLNT-C");
  std::mt19937_64 rng(8);
  std::vector<CreditRow> ledger;
  ledger.reserve(kPatents + 112);
  for (std::size_t i = 0; i < kPatents; ++i) {
    PatentRecord p;
    p.application_id = fmt::format("R{:07d}", i);
    p.year = 2004 + static_cast<int>(i % 14);
    std::vector<std::string> owners;
    std::size_t k = 1 + rng() % 3;
    for (std::size_t j = 0; j < k; ++j) owners.push_back(ids[rng() % kEntities]);
    ledger.push_back(allocate_credits(p, owners, registry));
  }
  for (int i = 0; i < 112; ++i) {
    PatentRecord p;
    p.application_id = fmt::format("P{:07d}", i);
    std::vector<std::string> owners = {"PLNT-C#0"};
    if (i == 111) owners.push_back(ids[0]);
    ledger.push_back(allocate_credits(p, owners, registry));
  }
  auto totals = entity_totals(ledger);
  double sum = 0.0;
  for (const auto& [id, credit] : totals) sum += credit;
  double expected = static_cast<double>(kPatents + 112);
  double planted = totals["PLNT-C#0"];
  return {std::abs(sum - expected) <= 1e-6 && std::abs(planted - 111.5) <= 1e-9,
          fmt::format("sum of credits {:.6f} for {} patents, planted entity {:.6f}", sum,
                      kPatents + 112, planted)};
}

// ---- 9: transaction fixtures ----------------------------------------------

Outcome criterion_transactions() {
  FixtureCategory corp;
  corp.patents = 15650;
  corp.changed = 2865;
  corp.transfers = {{Category::kCorporation, 3119}, {Category::kUniversity, 518},
                    {Category::kOthers, 171}};
  corp.license_histogram = {{1, 430}, {2, 20}, {3, 3}};
  FixtureCategory univ;
  univ.patents = 3807;
  univ.changed = 663;
  univ.transfers = {{Category::kCorporation, 361}, {Category::kUniversity, 288},
                    {Category::kOthers, 144}};
  univ.license_histogram = {{1, 512}, {2, 78}, {3, 21}, {4, 7}, {6, 1}};
  std::vector<FixtureLicensee> licensees = {
      {"US DEPARTMENT OF ENERGY", 281, 130},
      {"NATIONAL SCIENCE FOUNDATION", 24, 367},
      {"NATIONAL INSTITUTES OF HEALTH", 8, 91},
      {"ADVANCED GREEN TECHNOLOGIES LLC", 94, 0},
      {"NAVY", 10, 72},
      {"NASA", 3, 64},
      {"AIR FORCE", 25, 15},
      {"BLACK DIAMOND STRUCTURES LLC", 23, 0},
      {"ARMY", 4, 15},
      {"DARPA", 2, 6},
      {"MANOMECH INC", 2, 1},
      {"UNITED STATES PATENT AND TRADEMARK OFFICE", 1, 1},
      {"UNIV PENNSYLVANIA", 0, 2},
      {"LOCKHEED MARTIN CORPORATION", 1, 0},
      {"SUNEDISON SEMICONDUCTOR TECHNOLOGY PTE LTD", 1, 0},
      {"INTELLECTUAL DISCOVERY CO LTD", 0, 1},
  };
  auto fx = build_transaction_fixture(corp, univ, licensees);
  auto re = reassignment_stats(fx.events, fx.ledger);
  auto li = licensing_stats(fx.events, fx.ledger, fx.registry);
  const auto& rc = re.by_origin.at("corporation");
  const auto& ru = re.by_origin.at("university");
  struct Check {
    const char* what;
    double got;
    double want;
  };
  std::vector<Check> checks = {
      {"corporate changed %", round1(rc.changed_pct), 18.3},
      {"university unchanged %", round1(ru.unchanged_pct), 82.6},
      {"corp->corp %", round1(rc.pair_pct.at("corporation")), 81.9},
      {"corp->univ %", round1(rc.pair_pct.at("university")), 13.6},
      {"univ->corp %", round1(ru.pair_pct.at("corporation")), 45.5},
      {"univ->univ %", round1(ru.pair_pct.at("university")), 36.3},
      {"corporate licensed %", round1(li.by_origin.at("corporation").licensed_pct), 2.9},
      {"university licensed %", round1(li.by_origin.at("university").licensed_pct), 16.3},
      {"license instances", static_cast<double>(li.total_instances), 1244.0},
  };
  std::string detail;
  bool pass = true;
  for (const auto& c : checks) {
    bool ok = c.got == c.want;
    pass = pass && ok;
    detail += fmt::format("{}{} {}{}", detail.empty() ? "" : ", ", c.what, c.got, ok ? "" : " (want " + fmt::format("{}", c.want) + ")");
  }
  return {pass, detail};
}

// ---- 10: degree-distribution regression -----------------------------------

Outcome criterion_degrees() {
  constexpr std::size_t kRows = 200000, kCols = 128, kMaxDegree = 100;
  std::vector<double> weights;
  for (std::size_t d = 1; d <= kMaxDegree; ++d) weights.push_back(1.0 / static_cast<double>(d));
  std::discrete_distribution<std::size_t> degree(weights.begin(), weights.end());
  std::mt19937_64 rng(10);
  std::vector<std::pair<Index, Index>> entries;
  std::vector<Index> cols(kCols);
  std::iota(cols.begin(), cols.end(), 0);
  for (std::size_t i = 0; i < kRows; ++i) {
    std::size_t d = degree(rng) + 1;
    // Partial Fisher-Yates: the first d entries become a random subset.
    for (std::size_t j = 0; j < d; ++j) {
      std::swap(cols[j], cols[j + rng() % (kCols - j)]);
      entries.emplace_back(static_cast<Index>(i), cols[j]);
    }
  }
  auto m = SparseBinaryMatrix::from_entries(kRows, kCols, std::move(entries));
  auto dist = degree_distribution(m, Axis::kRows);
  double slope = dist.slope.value_or(0.0);
  return {std::abs(slope + 1.0) <= 0.1,
          fmt::format("fitted exponent {:.4f} from {} rows", slope, kRows)};
}

// ---- 11: pipeline determinism ---------------------------------------------

Outcome criterion_determinism() {
  auto config = PipelineConfig::load(fs::path(PATLAS_DATA_DIR) / "patlas.toml");
  auto base = fs::temp_directory_path() / fmt::format("patlas-acceptance-{}", ::getpid());
  fs::remove_all(base);
  auto a = run_pipeline(config, base / "a");
  auto b = run_pipeline(config, base / "b");
  std::size_t csvs = 0, differing = 0;
  for (const auto& entry : fs::recursive_directory_iterator(base / "a")) {
    if (!entry.is_regular_file()) continue;
    auto rel = fs::relative(entry.path(), base / "a");
    auto other = base / "b" / rel;
    bool same = fs::exists(other) && read_file(entry.path(), "acceptance") == read_file(other, "acceptance");
    if (entry.path().extension() == ".csv") ++csvs;
    if (!same) ++differing;
  }
  fs::remove_all(base);
  bool manifests = a.artifacts.size() == b.artifacts.size();
  for (std::size_t i = 0; manifests && i < a.artifacts.size(); ++i) {
    manifests = a.artifacts[i].sha256 == b.artifacts[i].sha256;
  }
  return {differing == 0 && manifests && csvs > 0,
          fmt::format("{} artifacts ({} CSV), {} differing", a.artifacts.size(), csvs, differing)};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double budget_s;  // 0: no runtime bound
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "modularity matches exhaustive search", 1.0, criterion_exhaustive},
      {2, "planted co-cluster recovery", 10.0, criterion_planted},
      {3, "modularity trivial cases", 0.0, criterion_trivial},
      {4, "z-score null model", 0.0, criterion_zscore},
      {5, "entropy properties", 0.0, criterion_entropy},
      {6, "Otsu equals brute force", 0.0, criterion_otsu},
      {7, "entity resolution", 0.0, criterion_entities},
      {8, "credit conservation", 0.0, criterion_credits},
      {9, "transaction fixture statistics", 1.0, criterion_transactions},
      {10, "degree exponent regression", 0.0, criterion_degrees},
      {11, "pipeline determinism", 60.0, criterion_determinism},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    double elapsed = seconds_since(t0);
    bool in_time = c.budget_s <= 0.0 || elapsed < c.budget_s;
    bool pass = out.pass && in_time;
    if (!pass) ++failed;
    std::string budget = c.budget_s > 0.0 ? fmt::format(" < {:.0f} s", c.budget_s) : "";
    std::cout << fmt::format("{} [{:2d}] {}: {} ({:.3f} s{})", pass ? "PASS" : "FAIL", c.id, c.name,
                             out.detail, elapsed, budget)
              << std::endl;
  }
  std::cout << fmt::format("{}/{} criteria passed", criteria.size() - failed, criteria.size())
            << std::endl;
  return failed == 0 ? 0 : 1;
}
