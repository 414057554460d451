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

// Report artifacts: checksums, metadata headers, and minimal SVG charts.

#ifndef PATLAS_REPORT_H_
#define PATLAS_REPORT_H_

#include <filesystem>
#include <span>
#include <string>
#include <string_view>

#include "patlas/portfolio.h"

namespace patlas {

std::string sha256_hex(std::string_view bytes);
std::string sha256_file(const std::filesystem::path& path);

std::string_view tool_version();

// "# patlas <version> config=<hash>\n" plus one "# key = value" line per
// extra entry.
std::string csv_meta_header(std::string_view config_hash,
                            std::span<const std::pair<std::string, std::string>> extra = {});

// Writes atomically enough for our purposes: truncate, write, check.
void write_file(const std::filesystem::path& path, std::string_view content,
                std::string_view stage);
std::string read_file(const std::filesystem::path& path, std::string_view stage);

// Shortest round-trip decimal form of a double.
std::string format_double(double v);

// Fill colors of the three density classes.
std::string_view density_color(Density d);

std::string svg_bump_chart(std::span<const RankingYear> years, std::string_view title);
std::string svg_heatmap(const Heatmap2D& map, std::string_view title);
std::string svg_vector_field(const VectorField& field, std::string_view title);

}  // namespace patlas

#endif  // PATLAS_REPORT_H_
