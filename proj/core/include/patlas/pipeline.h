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

// File-level pipeline stages and the end-to-end run.
//
// Each stage reads the artifacts of earlier stages from disk and writes its
// own, so the CLI subcommands and `run` share one code path. Every CSV
// starts with a "# patlas <version> config=<hash>" header and every JSON
// artifact carries the same data in a "meta" object.

#ifndef PATLAS_PIPELINE_H_
#define PATLAS_PIPELINE_H_

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "patlas/coclus.h"
#include "patlas/config.h"
#include "patlas/entity.h"
#include "patlas/portfolio.h"

namespace patlas {

namespace fs = std::filesystem;

// Raw records -> merged applications in the binary corpus format.
void ingest_stage(const PipelineConfig& config, const fs::path& corpus_out);

// Co-clustering at config.g -> clusters.json; degree distributions go to
// `degrees_out` when it is not empty.
void cluster_stage(const PipelineConfig& config, const fs::path& corpus, const fs::path& clusters_out,
                   const fs::path& degrees_out = {});

// Modularity for each g in [g_min, g_max] -> CSV.
void curve_stage(const PipelineConfig& config, const fs::path& corpus, int g_min, int g_max,
                 const fs::path& out);

// Subsampling sensitivity of the clustering -> JSON.
void sensitivity_stage(const PipelineConfig& config, const fs::path& corpus,
                       const SensitivityOptions& options, const fs::path& out);

// Top z-score keywords per area -> CSV.
void keywords_stage(const PipelineConfig& config, const fs::path& corpus, const fs::path& clusters,
                    const fs::path& out);

// Registry, thresholds and per-application entities -> registry.json; the
// Otsu histogram of match scores goes to `scores_out` when not empty.
void resolve_stage(const PipelineConfig& config, const fs::path& corpus, const fs::path& registry_out,
                   const fs::path& scores_out = {});

// One row per (application, entity) credit share -> credits.csv.
void credits_stage(const PipelineConfig& config, const fs::path& registry, const fs::path& out);

// Portfolio tables and charts into `out_dir`; returns the written files.
std::vector<fs::path> portfolio_stage(const PipelineConfig& config, const fs::path& credits,
                                      const fs::path& clusters, const fs::path& registry,
                                      const fs::path& out_dir);

// Parsed events -> CSV; aggregate statistics -> JSON.
void transactions_stage(const PipelineConfig& config, const fs::path& corpus,
                        const fs::path& registry, const fs::path& out_csv,
                        const fs::path& stats_json);

struct Artifact {
  std::string path;  // relative to the output directory
  std::string sha256;
  std::uintmax_t bytes = 0;
};

struct Manifest {
  std::string config_hash;
  std::vector<Artifact> artifacts;  // sorted by path
};

// ingest -> cluster -> keywords -> resolve -> credits -> portfolio ->
// transactions, then manifest.json. Stage failures propagate as Error.
Manifest run_pipeline(const PipelineConfig& config, const fs::path& out_dir);

// Artifact readers, exposed for tests and for chaining subcommands.
struct ClusterFile {
  int g = 0;
  double modularity = 0.0;
  AreaLabels labels;
};
ClusterFile read_clusters(const fs::path& path);
std::vector<CreditRow> read_credits(const fs::path& path);

struct RegistryFile {
  IdentityRegistry registry;
  double p0 = 99.0;
  double edge_threshold = 100.0;
  double match_threshold = 100.0;
  std::vector<CreditRow> patents;  // per application: entities with even shares
};
RegistryFile read_registry(const fs::path& path);

}  // namespace patlas

#endif  // PATLAS_PIPELINE_H_
