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

#include "patlas/pipeline.h"

#include <algorithm>
#include <iostream>
#include <map>
#include <set>

#include <fmt/format.h>

#include "json.hpp"
#include "patlas/corpus_io.h"
#include "patlas/csv.h"
#include "patlas/error.h"
#include "patlas/ingest.h"
#include "patlas/report.h"
#include "patlas/topics.h"
#include "patlas/transactions.h"

namespace patlas {
namespace {

using nlohmann::json;
using nlohmann::ordered_json;

ordered_json meta(const PipelineConfig& config) {
  ordered_json m;
  m["tool"] = "patlas";
  m["version"] = std::string(tool_version());
  m["config_hash"] = config.hash();
  return m;
}

std::string header(const PipelineConfig& config,
                   std::vector<std::pair<std::string, std::string>> extra = {}) {
  return csv_meta_header(config.hash(), extra);
}

std::string f(double v) { return format_double(v); }

std::string q(const std::string& s) { return csv_quote(s); }

void write_json(const fs::path& path, const ordered_json& j, std::string_view stage) {
  write_file(path, j.dump(1) + "\n", stage);
}

ordered_json read_json(const fs::path& path, std::string_view stage) {
  std::string text = read_file(path, stage);
  try {
    return ordered_json::parse(text);
  } catch (const std::exception& e) {
    throw Error(std::string(stage), "malformed JSON in '" + path.string() + "': " + e.what());
  }
}

// Drops leading '#' metadata lines.
std::string_view strip_meta(std::string_view text) {
  while (!text.empty() && text.front() == '#') {
    auto nl = text.find('\n');
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
  }
  return text;
}

CategoryLexicon lexicon_of(const PipelineConfig& config) {
  return config.lexicon.empty() ? CategoryLexicon::builtin() : CategoryLexicon::load(config.lexicon);
}

std::vector<PatentRecord> load_corpus(const fs::path& path, std::string_view stage) {
  try {
    return read_corpus(path);
  } catch (const Error& e) {
    throw Error(std::string(stage), e.what());
  }
}

}  // namespace

void ingest_stage(const PipelineConfig& config, const fs::path& corpus_out) {
  if (config.input.empty()) throw ConfigError("ingest", "no input file given");
  if (!fs::exists(config.input)) {
    throw Error("ingest", "input '" + config.input.string() + "' does not exist");
  }
  auto records = parse_records(config.input, parse_record_format(config.format));
  auto apps = merge_applications(std::move(records));
  write_corpus(corpus_out, apps);
}

void cluster_stage(const PipelineConfig& config, const fs::path& corpus, const fs::path& clusters_out,
                   const fs::path& degrees_out) {
  auto apps = load_corpus(corpus, "cluster");
  auto m = filter_and_build_matrix(apps);
  FitOptions opt{config.g, config.seed, config.max_iter, config.restarts};
  auto c = fit(m, opt);
  std::map<std::string_view, int> year;
  for (const auto& p : apps) year[p.application_id] = p.year;

  ordered_json j;
  j["meta"] = meta(config);
  j["g"] = c.g;
  j["modularity"] = c.modularity;
  j["rows"] = ordered_json::array();
  for (std::size_t i = 0; i < m.n_rows(); ++i) {
    const auto& id = m.row_labels()[i];
    j["rows"].push_back({{"application_id", id}, {"year", year[id]}, {"area", c.row_assignment[i]}});
  }
  j["columns"] = ordered_json::array();
  for (std::size_t k = 0; k < m.n_cols(); ++k) {
    j["columns"].push_back({{"code", m.col_labels()[k]}, {"area", c.col_assignment[k]}});
  }
  write_json(clusters_out, j, "cluster");

  if (!degrees_out.empty()) {
    std::string out;
    std::vector<std::pair<std::string, std::string>> extra;
    auto rows = degree_distribution(m, Axis::kRows);
    auto cols = degree_distribution(m, Axis::kCols);
    if (rows.slope) extra.emplace_back("row_slope", f(*rows.slope));
    if (cols.slope) extra.emplace_back("col_slope", f(*cols.slope));
    out = header(config, extra) + "axis,degree,count\n";
    for (auto [d, n] : rows.points) out += fmt::format("rows,{},{}\n", d, n);
    for (auto [d, n] : cols.points) out += fmt::format("cols,{},{}\n", d, n);
    write_file(degrees_out, out, "cluster");
  }
}

void curve_stage(const PipelineConfig& config, const fs::path& corpus, int g_min, int g_max,
                 const fs::path& out) {
  auto apps = load_corpus(corpus, "cluster");
  auto m = filter_and_build_matrix(apps);
  auto curve = modularity_curve(m, g_min, g_max, config.seed, config.restarts, config.max_iter);
  std::string text = header(config) + "g,modularity,gain\n";
  for (std::size_t i = 0; i < curve.size(); ++i) {
    double gain = i == 0 ? 0.0 : curve[i].modularity - curve[i - 1].modularity;
    text += fmt::format("{},{},{}\n", curve[i].g, f(curve[i].modularity), i == 0 ? "" : f(gain));
  }
  write_file(out, text, "cluster");
}

void sensitivity_stage(const PipelineConfig& config, const fs::path& corpus,
                       const SensitivityOptions& options, const fs::path& out) {
  auto apps = load_corpus(corpus, "cluster");
  auto m = filter_and_build_matrix(apps);
  auto result = sensitivity_subsample(m, options);
  ordered_json j;
  j["meta"] = meta(config);
  j["axis"] = options.axis == Axis::kRows ? "rows" : "cols";
  j["fraction"] = options.fraction;
  j["g"] = options.g;
  j["full_modularity"] = result.full.modularity;
  j["trials"] = ordered_json::array();
  for (const auto& t : result.trials) {
    ordered_json tj;
    tj["kept"] = t.kept.size();
    tj["modularity"] = t.clustering.modularity;
    tj["curve"] = ordered_json::array();
    for (const auto& p : t.curve) tj["curve"].push_back({{"g", p.g}, {"modularity", p.modularity}});
    tj["overlap"] = t.overlap.values;
    tj["matching"] = best_matching(t.overlap);
    j["trials"].push_back(std::move(tj));
  }
  write_json(out, j, "cluster");
}

ClusterFile read_clusters(const fs::path& path) {
  auto j = read_json(path, "cluster");
  ClusterFile c;
  try {
    c.g = j.at("g").get<int>();
    c.modularity = j.at("modularity").get<double>();
    for (const auto& r : j.at("rows")) {
      c.labels[r.at("application_id").get<std::string>()] = r.at("area").get<int>();
    }
  } catch (const json::exception& e) {
    throw Error("cluster", "bad clusters file '" + path.string() + "': " + e.what());
  }
  return c;
}

void keywords_stage(const PipelineConfig& config, const fs::path& corpus, const fs::path& clusters,
                    const fs::path& out) {
  auto apps = load_corpus(corpus, "keywords");
  auto c = read_clusters(clusters);
  std::vector<PatentRecord> docs;
  std::vector<int> labels;
  for (auto& p : apps) {
    auto it = c.labels.find(p.application_id);
    if (it == c.labels.end()) continue;
    labels.push_back(it->second);
    docs.push_back(std::move(p));
  }
  StopwordSet custom;
  if (!config.stopwords.empty()) custom = load_stopwords(config.stopwords);
  const StopwordSet& stop = config.stopwords.empty() ? default_stopwords() : custom;
  auto tc = TokenizedCorpus::build(docs, stop);
  std::string text = header(config) + "area,rank,word,in_cluster,mu,sigma,z\n";
  for (int k = 0; k < c.g; ++k) {
    auto top = top_keywords(k, tc, labels, config.keywords);
    for (std::size_t r = 0; r < top.size(); ++r) {
      const auto& s = top[r];
      text += fmt::format("{},{},{},{},{},{},{}\n", k, r + 1, q(s.word), s.in_cluster, f(s.mu),
                          f(s.sigma), f(s.z));
    }
  }
  write_file(out, text, "keywords");
}

void resolve_stage(const PipelineConfig& config, const fs::path& corpus, const fs::path& registry_out,
                   const fs::path& scores_out) {
  auto apps = load_corpus(corpus, "resolve");
  auto lexicon = lexicon_of(config);
  auto build = build_registry(apps, config.p0, lexicon);
  auto scores = original_match_scores(apps);
  auto hist = histogram(scores);
  double match_threshold = build.threshold;
  std::string source = "edge_threshold";
  try {
    match_threshold = otsu_threshold(hist);
    source = "otsu";
  } catch (const Error&) {
    std::clog << "patlas: warning: match scores are unimodal; using the edge threshold\n";
  }
  auto entities = match_original_names(apps, build.registry, match_threshold, lexicon);
  std::vector<CreditRow> rows;
  for (std::size_t i = 0; i < apps.size(); ++i) {
    if (entities[i].empty()) {
      std::clog << "patlas: warning: " << apps[i].application_id << " has no assignee; not credited\n";
      continue;
    }
    rows.push_back(allocate_credits(apps[i], entities[i], build.registry));
  }
  assign_entity_regions(rows, build.registry);

  ordered_json j;
  j["meta"] = meta(config);
  j["p0"] = config.p0;
  j["edge_threshold"] = build.threshold;
  j["match_threshold"] = match_threshold;
  j["match_threshold_source"] = source;
  j["entities"] = ordered_json::array();
  for (const auto& [id, e] : build.registry.entities()) {
    j["entities"].push_back({{"id", e.id},
                             {"code", e.code},
                             {"category", std::string(category_name(e.category))},
                             {"region", e.region},
                             {"names", e.names}});
  }
  j["patents"] = ordered_json::array();
  for (const auto& r : rows) {
    std::vector<std::string> ids;
    for (const auto& [id, c] : r.credits) ids.push_back(id);
    j["patents"].push_back({{"application_id", r.application_id},
                            {"year", r.year},
                            {"region", r.region},
                            {"category", std::string(category_name(r.category))},
                            {"entities", ids}});
  }
  write_json(registry_out, j, "resolve");

  if (!scores_out.empty()) {
    std::string text = header(config, {{"match_threshold", f(match_threshold)},
                                       {"source", source}}) +
                       "bin_lo,bin_hi,count\n";
    for (std::size_t b = 0; b < hist.size(); ++b) {
      text += fmt::format("{},{},{}\n", b, b + 1, hist[b]);
    }
    write_file(scores_out, text, "resolve");
  }
}

RegistryFile read_registry(const fs::path& path) {
  auto j = read_json(path, "resolve");
  RegistryFile r;
  try {
    r.p0 = j.at("p0").get<double>();
    r.edge_threshold = j.at("edge_threshold").get<double>();
    r.match_threshold = j.at("match_threshold").get<double>();
    for (const auto& e : j.at("entities")) {
      const auto id = e.at("id").get<std::string>();
      const auto code = e.at("code").get<std::string>();
      for (const auto& n : e.at("names")) r.registry.assign(n.get<std::string>(), id, code);
      if (Entity* ent = r.registry.find(id)) {
        ent->category = parse_category(e.at("category").get<std::string>());
        ent->region = e.at("region").get<std::string>();
      }
    }
    for (const auto& p : j.at("patents")) {
      CreditRow row;
      row.application_id = p.at("application_id").get<std::string>();
      row.year = p.at("year").get<int>();
      row.region = p.at("region").get<std::string>();
      row.category = parse_category(p.at("category").get<std::string>());
      const auto& ids = p.at("entities");
      if (ids.empty()) throw Error("credits", row.application_id + " lists no entities");
      for (const auto& id : ids) {
        row.credits.emplace_back(id.get<std::string>(), 1.0 / static_cast<double>(ids.size()));
      }
      r.patents.push_back(std::move(row));
    }
  } catch (const json::exception& e) {
    throw Error("resolve", "bad registry file '" + path.string() + "': " + e.what());
  }
  return r;
}

void credits_stage(const PipelineConfig& config, const fs::path& registry, const fs::path& out) {
  auto reg = read_registry(registry);
  std::string text = header(config) + "application_id,year,region,category,entity_id,credit\n";
  for (const auto& row : reg.patents) {
    for (const auto& [id, c] : row.credits) {
      text += fmt::format("{},{},{},{},{},{}\n", q(row.application_id), row.year, q(row.region),
                          category_name(row.category), q(id), f(c));
    }
  }
  write_file(out, text, "credits");
}

std::vector<CreditRow> read_credits(const fs::path& path) {
  std::string text = read_file(path, "portfolio");
  CsvReader reader(strip_meta(text), "portfolio");
  std::vector<std::string> fields;
  std::size_t line = 0;
  std::vector<CreditRow> out;
  bool first = true;
  while (reader.next(&fields, &line)) {
    if (first) {
      first = false;
      if (fields.size() != 6 || fields[0] != "application_id") {
        throw ParseError("portfolio", line, "unexpected credits header");
      }
      continue;
    }
    if (fields.size() != 6) throw ParseError("portfolio", line, "expected 6 fields");
    double credit = 0.0;
    int year = 0;
    try {
      year = std::stoi(fields[1]);
      credit = std::stod(fields[5]);
    } catch (const std::exception&) {
      throw ParseError("portfolio", line, "invalid year or credit");
    }
    if (out.empty() || out.back().application_id != fields[0]) {
      CreditRow row;
      row.application_id = fields[0];
      row.year = year;
      row.region = fields[2];
      row.category = parse_category(fields[3]);
      out.push_back(std::move(row));
    }
    out.back().credits.emplace_back(fields[4], credit);
  }
  return out;
}

std::vector<fs::path> portfolio_stage(const PipelineConfig& config, const fs::path& credits,
                                      const fs::path& clusters, const fs::path& registry,
                                      const fs::path& out_dir) {
  auto ledger = read_credits(credits);
  auto c = read_clusters(clusters);
  std::optional<RegistryFile> reg;
  if (!registry.empty()) reg = read_registry(registry);
  std::vector<fs::path> written;
  auto emit = [&](const std::string& name, const std::string& text) {
    fs::path p = out_dir / name;
    write_file(p, text, "portfolio");
    written.push_back(p);
  };
  const std::vector<std::pair<std::string, std::string>> log_meta = {
      {"entropy_log", "natural"}, {"axis_log", "log10"}, {"epsilon", f(config.epsilon)}};

  // Proportions.
  for (GroupBy gb : {GroupBy::kNone, GroupBy::kRegion, GroupBy::kCategory}) {
    std::string text = header(config) + "group,year,area,count,proportion\n";
    for (const auto& row : proportions_timeseries(ledger, c.labels, c.g, gb)) {
      for (int k = 0; k < c.g; ++k) {
        text += fmt::format("{},{},{},{},{}\n", q(row.group), row.year, k, f(row.counts[k]),
                            f(row.proportions[k]));
      }
    }
    emit(fmt::format("proportions_{}.csv", group_by_name(gb)), text);
  }

  // Rankings.
  auto rank_text = [&](const std::vector<RankingYear>& years) {
    std::string text = header(config) + "year,rank,region,count\n";
    for (const auto& y : years) {
      for (const auto& r : y.regions) {
        text += fmt::format("{},{},{},{}\n", y.year, r.rank, q(r.region), f(r.count));
      }
    }
    return text;
  };
  auto all_years = region_rankings(ledger, c.labels, std::nullopt, config.top_n);
  emit("rankings_all.csv", rank_text(all_years));
  emit("rankings_all.svg", svg_bump_chart(all_years, "Region ranking by applications"));
  for (int k = 0; k < c.g; ++k) {
    auto years = region_rankings(ledger, c.labels, k, config.top_n);
    emit(fmt::format("rankings_{}.csv", k), rank_text(years));
    emit(fmt::format("rankings_{}.svg", k),
         svg_bump_chart(years, fmt::format("Region ranking, area {}", k)));
  }
  {
    std::string text = header(config) + "rank,region,count\n";
    for (const auto& r : region_totals(ledger)) {
      text += fmt::format("{},{},{}\n", r.rank, q(r.region), f(r.count));
    }
    emit("region_totals.csv", text);
  }

  // Trajectories and groups.
  auto traj = trajectories(ledger, c.labels, c.g);
  int last_year = 0;
  for (const auto& t : traj) last_year = std::max(last_year, t.points.back().year);
  auto final_credit = credit_as_of(traj, last_year);
  std::map<std::string, std::string> quartile;
  if (final_credit.size() >= 4) {
    for (const auto& [id, g] : quartile_groups(final_credit)) quartile[id] = quartile_name(g);
  } else {
    std::clog << "patlas: warning: fewer than 4 entities; quartile groups skipped\n";
    for (const auto& [id, cr] : final_credit) quartile[id] = "all";
  }
  {
    std::string text = header(config, log_meta) +
                       "entity_id,year,relative_year,credit,entropy,quartile\n";
    for (const auto& t : traj) {
      for (const auto& p : t.points) {
        text += fmt::format("{},{},{},{},{},{}\n", q(t.entity_id), p.year,
                            p.year - config.base_year, f(p.credit), f(p.entropy),
                            quartile.count(t.entity_id) ? quartile[t.entity_id] : "");
      }
    }
    emit("entropy_points.csv", text);
  }

  // Vector fields: every axis pairing, for all entities and per quartile.
  {
    std::string text = header(config, log_meta) +
                       "x_axis,y_axis,group,ix,iy,x,y,dx,dy,count,density\n";
    std::set<std::string> groups{"all"};
    for (const auto& [id, g] : quartile) groups.insert(g);
    VectorField svg_field;
    for (XAxis x : {XAxis::kLogCredit, XAxis::kRelativeYear}) {
      for (YAxis y : {YAxis::kEntropy, YAxis::kLogEntropy}) {
        for (const auto& group : groups) {
          std::vector<Trajectory> subset;
          for (const auto& t : traj) {
            if (group == "all" || quartile[t.entity_id] == group) subset.push_back(t);
          }
          FieldOptions opt{x, y, config.bins, config.base_year, config.epsilon};
          auto field = vector_field(subset, opt);
          if (x == XAxis::kLogCredit && y == YAxis::kEntropy && group == "all") svg_field = field;
          for (const auto& b : field.cells) {
            text += fmt::format("{},{},{},{},{},{},{},{},{},{},{}\n",
                                x == XAxis::kLogCredit ? "log_credit" : "relative_year",
                                y == YAxis::kEntropy ? "entropy" : "log_entropy", group, b.ix, b.iy,
                                f(b.x), f(b.y), f(b.dx), f(b.dy), b.count, density_name(b.density));
          }
        }
      }
    }
    emit("vector_field.csv", text);
    emit("vector_field.svg", svg_vector_field(svg_field, "Yearly displacement, log10 credit vs entropy"));
  }

  // Heat map of final (credit, entropy) points.
  if (!traj.empty()) {
    std::vector<HeatPoint> pts;
    for (const auto& t : traj) {
      const auto& p = t.points.back();
      if (p.credit > 0.0) pts.push_back({p.credit, p.entropy});
    }
    auto map = heatmap(pts, config.heatmap_bins, config.epsilon);
    std::string text = header(config, log_meta) + "ix,iy,x_lo,y_lo,count,density\n";
    const double wx = (map.x_hi - map.x_lo) / static_cast<double>(map.bins);
    const double wy = (map.y_hi - map.y_lo) / static_cast<double>(map.bins);
    for (std::size_t iy = 0; iy < map.bins; ++iy) {
      for (std::size_t ix = 0; ix < map.bins; ++ix) {
        std::size_t n = map.at(ix, iy);
        if (n == 0) continue;
        text += fmt::format("{},{},{},{},{},{}\n", ix, iy, f(map.x_lo + wx * static_cast<double>(ix)),
                            f(map.y_lo + wy * static_cast<double>(iy)), n,
                            density_name(map.classes[iy * map.bins + ix]));
      }
    }
    emit("heatmap.csv", text);
    emit("heatmap.svg", svg_heatmap(map, "Entities by accumulated credit and entropy"));
  }

  // Average log-entropy curves per quartile, and per quartile and category
  // when entity categories are known.
  {
    auto curves = avg_log_entropy_curves(traj, quartile, config.epsilon);
    if (reg) {
      std::map<std::string, std::string> by_cat;
      for (const auto& [id, g] : quartile) {
        const Entity* e = reg->registry.find(id);
        by_cat[id] = g + "/" + std::string(category_name(e ? e->category : Category::kOthers));
      }
      for (auto& [k, v] : avg_log_entropy_curves(traj, by_cat, config.epsilon)) curves[k] = v;
    }
    std::string text = header(config, log_meta) + "group,year,relative_year,mean_log_entropy\n";
    for (const auto& [group, years] : curves) {
      for (const auto& [year, v] : years) {
        text += fmt::format("{},{},{},{}\n", q(group), year, year - config.base_year, f(v));
      }
    }
    emit("avg_log_entropy.csv", text);
  }
  return written;
}

void transactions_stage(const PipelineConfig& config, const fs::path& corpus,
                        const fs::path& registry, const fs::path& out_csv,
                        const fs::path& stats_json) {
  auto apps = load_corpus(corpus, "transactions");
  auto reg = read_registry(registry);
  auto events = collect_events(apps);
  AliasFamilies families;
  if (!config.aliases.empty()) families = AliasFamilies::load(config.aliases, reg.registry);
  resolve_events(events, reg.registry, reg.match_threshold, families);

  std::string text = header(config) +
                     "application_id,kind,year,assignor,assignor_entity,from_category,assignee,"
                     "assignee_entity,to_category,internal,reasons\n";
  for (const auto& e : events) {
    text += fmt::format("{},{},{},{},{},{},{},{},{},{},{}\n", q(e.application_id), kind_name(e.kind),
                        e.year, q(e.assignor()), q(e.assignor_entity), category_name(e.from_category),
                        q(e.assignee()), q(e.assignee_entity), category_name(e.to_category),
                        e.internal ? 1 : 0, q(e.reasons()));
  }
  write_file(out_csv, text, "transactions");

  auto transfers_json = [](const ReassignmentStats& s) {
    ordered_json j = ordered_json::object();
    for (const auto& [cat, c] : s.by_origin) {
      ordered_json pairs = ordered_json::object();
      for (const auto& [to, n] : c.pairs) {
        pairs[to] = {{"count", n}, {"pct", round1(c.pair_pct.at(to))}};
      }
      j[cat] = {{"total", c.total},
                {"unchanged", c.unchanged},
                {"unchanged_pct", round1(c.unchanged_pct)},
                {"changed", c.changed},
                {"changed_pct", round1(c.changed_pct)},
                {"transactions", c.transactions},
                {"internal", c.internal},
                {"pairs", pairs}};
    }
    return j;
  };
  auto lic = licensing_stats(events, reg.patents, reg.registry, config.top_k);
  ordered_json j;
  j["meta"] = meta(config);
  j["reassignment"] = transfers_json(reassignment_stats(events, reg.patents, true));
  j["reassignment_excluding_internal"] = transfers_json(reassignment_stats(events, reg.patents, false));
  ordered_json lj = ordered_json::object();
  for (const auto& [cat, c] : lic.by_origin) {
    ordered_json hist = ordered_json::object();
    for (auto [times, n] : c.histogram) hist[std::to_string(times)] = n;
    ordered_json top = ordered_json::array();
    for (const auto& l : c.top_licensors) {
      top.push_back({{"entity_id", l.entity_id}, {"name", l.name}, {"credit", l.credit}});
    }
    lj[cat] = {{"total", c.total},         {"histogram", hist},
               {"licensed", c.licensed},   {"licensed_pct", round1(c.licensed_pct)},
               {"instances", c.instances}, {"top_licensors", top}};
  }
  j["licensing"] = std::move(lj);
  j["total_license_instances"] = lic.total_instances;
  j["licensees"] = ordered_json::array();
  for (const auto& l : lic.licensees) {
    j["licensees"].push_back({{"entity_id", l.entity_id},
                              {"name", l.name},
                              {"corporation", l.from_corporation},
                              {"university", l.from_university}});
  }
  write_json(stats_json, j, "transactions");
}

Manifest run_pipeline(const PipelineConfig& config, const fs::path& out_dir) {
  config.validate();
  std::error_code ec;
  fs::create_directories(out_dir, ec);
  if (ec) throw Error("report", "cannot create '" + out_dir.string() + "': " + ec.message());

  const fs::path corpus = out_dir / "corpus.bin";
  const fs::path clusters = out_dir / "clusters.json";
  const fs::path registry = out_dir / "registry.json";
  const fs::path credits = out_dir / "credits.csv";

  ingest_stage(config, corpus);
  cluster_stage(config, corpus, clusters, out_dir / "degrees.csv");
  keywords_stage(config, corpus, clusters, out_dir / "keywords.csv");
  resolve_stage(config, corpus, registry, out_dir / "match_scores.csv");
  credits_stage(config, registry, credits);
  portfolio_stage(config, credits, clusters, registry, out_dir);
  transactions_stage(config, corpus, registry, out_dir / "transactions.csv", out_dir / "stats.json");

  Manifest manifest;
  manifest.config_hash = config.hash();
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(out_dir)) {
    if (entry.is_regular_file() && entry.path().filename() != "manifest.json") {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());
  for (const auto& p : files) {
    manifest.artifacts.push_back({p.filename().string(), sha256_file(p), fs::file_size(p)});
  }
  ordered_json j;
  j["meta"] = meta(config);
  j["config"] = config.canonical();
  j["artifacts"] = ordered_json::array();
  for (const auto& a : manifest.artifacts) {
    j["artifacts"].push_back({{"path", a.path}, {"sha256", a.sha256}, {"bytes", a.bytes}});
  }
  write_json(out_dir / "manifest.json", j, "report");
  return manifest;
}

}  // namespace patlas
