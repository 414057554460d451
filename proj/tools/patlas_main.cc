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

// patlas: batch command line for the patent portfolio pipeline.

#include <cstdlib>
#include <exception>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "patlas/config.h"
#include "patlas/error.h"
#include "patlas/pipeline.h"
#include "patlas/report.h"
#include "patlas/synthetic.h"

namespace {

using patlas::PipelineConfig;

std::string config_keys_help() {
  std::string out = "Config keys (flat `key = value` file, '#' comments):\n";
  for (const auto& [key, doc] : PipelineConfig::documentation()) {
    out += "  " + key + std::string(key.size() < 14 ? 14 - key.size() : 1, ' ') + doc + "\n";
  }
  out += "Environment: PATLAS_THREADS caps worker threads.\n";
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"patlas: patent portfolio analytics"};
  app.set_version_flag("--version", std::string(patlas::tool_version()));
  app.require_subcommand(1);
  app.footer(config_keys_help());

  PipelineConfig cfg;
  std::string out, corpus, clusters, registry, credits, out_dir, config_path, truth;

  auto* ingest = app.add_subcommand("ingest", "Parse raw records and merge applications");
  ingest->add_option("--input", cfg.input, "Raw CSV or JSONL records")->required();
  ingest->add_option("--format", cfg.format, "jsonl or csv")->capture_default_str();
  ingest->add_option("--out", out, "Output corpus (binary)")->required();

  auto* cluster = app.add_subcommand("cluster", "Co-cluster applications and IPC subclasses");
  cluster->add_option("--corpus", corpus)->required();
  cluster->add_option("--g", cfg.g, "Number of areas")->capture_default_str();
  cluster->add_option("--seed", cfg.seed)->capture_default_str();
  cluster->add_option("--restarts", cfg.restarts)->capture_default_str();
  cluster->add_option("--max-iter", cfg.max_iter)->capture_default_str();
  cluster->add_option("--out", out, "clusters.json")->required();
  std::string degrees;
  cluster->add_option("--degrees", degrees, "Optional degree distribution CSV");

  int g_min = 2, g_max = 12;
  auto* curve = app.add_subcommand("cluster-curve", "Modularity as a function of g");
  curve->add_option("--corpus", corpus)->required();
  curve->add_option("--g-min", g_min)->capture_default_str();
  curve->add_option("--g-max", g_max)->capture_default_str();
  curve->add_option("--seed", cfg.seed)->capture_default_str();
  curve->add_option("--restarts", cfg.restarts)->capture_default_str();
  curve->add_option("--out", out)->required();

  patlas::SensitivityOptions sens;
  std::string axis = "rows";
  auto* sensitivity = app.add_subcommand("cluster-sensitivity", "Subsampling sensitivity analysis");
  sensitivity->add_option("--corpus", corpus)->required();
  sensitivity->add_option("--axis", axis, "rows or cols")
      ->check(CLI::IsMember({"rows", "cols"}))
      ->capture_default_str();
  sensitivity->add_option("--fraction", sens.fraction)->capture_default_str();
  sensitivity->add_option("--trials", sens.trials)->capture_default_str();
  sensitivity->add_option("--g", sens.g)->capture_default_str();
  sensitivity->add_option("--g-min", sens.g_min)->capture_default_str();
  sensitivity->add_option("--g-max", sens.g_max)->capture_default_str();
  sensitivity->add_option("--seed", sens.seed)->capture_default_str();
  sensitivity->add_option("--restarts", sens.restarts)->capture_default_str();
  sensitivity->add_option("--out", out)->required();

  auto* keywords = app.add_subcommand("keywords", "Top z-score keywords per area");
  keywords->add_option("--corpus", corpus)->required();
  keywords->add_option("--clusters", clusters)->required();
  keywords->add_option("--k", cfg.keywords)->capture_default_str();
  keywords->add_option("--stopwords", cfg.stopwords, "Stopword file replacing the built-in list");
  keywords->add_option("--out", out)->required();

  std::string scores;
  auto* resolve = app.add_subcommand("resolve", "Disambiguate assignee names");
  resolve->add_option("--corpus", corpus)->required();
  resolve->add_option("--p0", cfg.p0, "Edge percentile in [85, 99]")->capture_default_str();
  resolve->add_option("--lexicon", cfg.lexicon, "Category keyword file");
  resolve->add_option("--out", out, "registry.json")->required();
  resolve->add_option("--scores", scores, "Optional match-score histogram CSV");

  auto* credit = app.add_subcommand("credits", "Fractional patent credits per entity");
  credit->add_option("--registry", registry)->required();
  credit->add_option("--out", out, "credits.csv")->required();

  auto* portfolio = app.add_subcommand("portfolio", "Portfolio entropy, rankings and charts");
  portfolio->add_option("--credits", credits)->required();
  portfolio->add_option("--clusters", clusters)->required();
  portfolio->add_option("--registry", registry, "Optional, adds entity categories");
  portfolio->add_option("--out-dir", out_dir)->required();
  portfolio->add_option("--bins", cfg.bins)->capture_default_str();
  portfolio->add_option("--heatmap-bins", cfg.heatmap_bins)->capture_default_str();
  portfolio->add_option("--base-year", cfg.base_year)->capture_default_str();
  portfolio->add_option("--epsilon", cfg.epsilon)->capture_default_str();
  portfolio->add_option("--top-n", cfg.top_n)->capture_default_str();

  std::string stats;
  auto* transactions = app.add_subcommand("transactions", "Reassignment and licensing statistics");
  transactions->add_option("--corpus", corpus)->required();
  transactions->add_option("--registry", registry)->required();
  transactions->add_option("--aliases", cfg.aliases, "Entity family file");
  transactions->add_option("--top-k", cfg.top_k)->capture_default_str();
  transactions->add_option("--out", out, "transactions.csv")->required();
  transactions->add_option("--stats", stats, "stats.json")->required();

  auto* run = app.add_subcommand("run", "Run the whole pipeline from a config file");
  run->add_option("--config", config_path, "Flat key = value config file")->required();
  run->add_option("--out-dir", out_dir)->required();
  run->footer(config_keys_help());

  patlas::SyntheticSpec spec;
  auto* generate = app.add_subcommand("generate", "Write a synthetic corpus with planted structure");
  generate->add_option("--out", out, "Corpus JSONL")->required();
  generate->add_option("--truth", truth, "Ground-truth sidecar JSON")->required();
  generate->add_option("--seed", cfg.seed)->capture_default_str();
  generate->add_option("--applications", spec.applications)->capture_default_str();
  generate->add_option("--blocks", spec.blocks)->capture_default_str();
  generate->add_option("--identities", spec.identities)->capture_default_str();
  generate->add_option("--us-share", spec.us_share)->capture_default_str();
  generate->add_option("--reassignment-rate", spec.reassignment_rate)->capture_default_str();
  generate->add_option("--license-rate", spec.license_rate)->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*ingest) {
      patlas::ingest_stage(cfg, out);
    } else if (*cluster) {
      patlas::cluster_stage(cfg, corpus, out, degrees);
    } else if (*curve) {
      patlas::curve_stage(cfg, corpus, g_min, g_max, out);
    } else if (*sensitivity) {
      sens.axis = axis == "rows" ? patlas::Axis::kRows : patlas::Axis::kCols;
      patlas::sensitivity_stage(cfg, corpus, sens, out);
    } else if (*keywords) {
      patlas::keywords_stage(cfg, corpus, clusters, out);
    } else if (*resolve) {
      patlas::resolve_stage(cfg, corpus, out, scores);
    } else if (*credit) {
      patlas::credits_stage(cfg, registry, out);
    } else if (*portfolio) {
      patlas::portfolio_stage(cfg, credits, clusters, registry, out_dir);
    } else if (*transactions) {
      patlas::transactions_stage(cfg, corpus, registry, out, stats);
    } else if (*run) {
      auto loaded = PipelineConfig::load(config_path);
      auto manifest = patlas::run_pipeline(loaded, out_dir);
      std::cout << "patlas: wrote " << manifest.artifacts.size() << " artifacts to " << out_dir
                << " (config " << manifest.config_hash.substr(0, 12) << ")\n";
    } else if (*generate) {
      auto corpus_data = patlas::generate_corpus(spec, cfg.seed);
      patlas::write_corpus_jsonl(out, corpus_data.records);
      patlas::write_file(truth, patlas::truth_to_json(corpus_data.truth, spec, cfg.seed), "generate");
    }
  } catch (const patlas::Error& e) {
    std::cerr << "patlas: error in stage '" << e.stage() << "': " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "patlas: internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
