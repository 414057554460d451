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

#include "patlas/report.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <memory>
#include <set>
#include <sstream>

#include <fmt/format.h>
#include <openssl/evp.h>

#include "patlas/error.h"

namespace patlas {
namespace {

std::string escape_xml(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string svg_open(int w, int h, std::string_view title) {
  return fmt::format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{0}\" height=\"{1}\" "
      "viewBox=\"0 0 {0} {1}\" font-family=\"sans-serif\" font-size=\"11\">\n"
      "<rect width=\"{0}\" height=\"{1}\" fill=\"white\"/>\n"
      "<text x=\"{2}\" y=\"18\" text-anchor=\"middle\" font-size=\"14\">{3}</text>\n",
      w, h, w / 2, escape_xml(title));
}

// Fixed palette for series lines; cycles when there are more series.
constexpr const char* kPalette[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
                                    "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};

}  // namespace

std::string sha256_hex(std::string_view bytes) {
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(), EVP_MD_CTX_free);
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1 ||
      EVP_DigestUpdate(ctx.get(), bytes.data(), bytes.size()) != 1 ||
      EVP_DigestFinal_ex(ctx.get(), digest, &len) != 1) {
    throw Error("report", "sha256 failed");
  }
  std::string out;
  for (unsigned int i = 0; i < len; ++i) out += fmt::format("{:02x}", digest[i]);
  return out;
}

std::string sha256_file(const std::filesystem::path& path) {
  return sha256_hex(read_file(path, "report"));
}

std::string_view tool_version() { return PATLAS_VERSION; }

std::string csv_meta_header(std::string_view config_hash,
                            std::span<const std::pair<std::string, std::string>> extra) {
  std::string out = fmt::format("# patlas {} config={}\n", tool_version(), config_hash);
  for (const auto& [k, v] : extra) out += fmt::format("# {} = {}\n", k, v);
  return out;
}

void write_file(const std::filesystem::path& path, std::string_view content,
                std::string_view stage) {
  if (path.has_parent_path()) {
    std::error_code ec;
    std::filesystem::create_directories(path.parent_path(), ec);
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(std::string(stage), "cannot write '" + path.string() + "'");
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw Error(std::string(stage), "write failed for '" + path.string() + "'");
}

std::string read_file(const std::filesystem::path& path, std::string_view stage) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(std::string(stage), "cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string format_double(double v) { return fmt::format("{}", v); }

std::string_view density_color(Density d) {
  switch (d) {
    case Density::kLow: return "#2b6cd6";
    case Density::kIntermediate: return "#2ca02c";
    case Density::kHigh: return "#d62728";
  }
  return "#2b6cd6";
}

std::string svg_bump_chart(std::span<const RankingYear> years, std::string_view title) {
  const int left = 60, right = 140, top = 40, bottom = 40, step_x = 60, step_y = 28;
  std::size_t max_rank = 1;
  std::set<std::string> regions;
  for (const auto& y : years) {
    max_rank = std::max(max_rank, y.regions.size());
    for (const auto& r : y.regions) regions.insert(r.region);
  }
  const int w = left + right + step_x * static_cast<int>(std::max<std::size_t>(years.size(), 1));
  const int h = top + bottom + step_y * static_cast<int>(max_rank);
  std::string out = svg_open(w, h, title);
  auto px = [&](std::size_t i) { return left + step_x * static_cast<int>(i) + step_x / 2; };
  auto py = [&](int rank) { return top + step_y * (rank - 1) + step_y / 2; };
  for (std::size_t r = 1; r <= max_rank; ++r) {
    out += fmt::format("<text x=\"{}\" y=\"{}\" text-anchor=\"end\">{}</text>\n", left - 8,
                       py(static_cast<int>(r)) + 4, r);
  }
  for (std::size_t i = 0; i < years.size(); ++i) {
    out += fmt::format("<text x=\"{}\" y=\"{}\" text-anchor=\"middle\">{}</text>\n", px(i), h - 15,
                       years[i].year);
  }
  std::size_t color = 0;
  for (const auto& region : regions) {
    const char* stroke = kPalette[color++ % std::size(kPalette)];
    std::string points;
    std::size_t last_i = 0;
    int last_rank = 0;
    auto flush = [&]() {
      if (!points.empty()) {
        out += fmt::format(
            "<polyline fill=\"none\" stroke=\"{}\" stroke-width=\"2\" points=\"{}\"/>\n", stroke,
            points);
      }
      points.clear();
    };
    for (std::size_t i = 0; i < years.size(); ++i) {
      auto it = std::find_if(years[i].regions.begin(), years[i].regions.end(),
                             [&](const RankedRegion& r) { return r.region == region; });
      if (it == years[i].regions.end()) {
        flush();
        continue;
      }
      points += fmt::format("{},{} ", px(i), py(it->rank));
      out += fmt::format("<circle cx=\"{}\" cy=\"{}\" r=\"4\" fill=\"{}\"/>\n", px(i),
                         py(it->rank), stroke);
      last_i = i;
      last_rank = it->rank;
    }
    flush();
    if (last_rank > 0) {
      out += fmt::format("<text x=\"{}\" y=\"{}\" fill=\"{}\">{}</text>\n", px(last_i) + 8,
                         py(last_rank) + 4, stroke, escape_xml(region));
    }
  }
  out += "</svg>\n";
  return out;
}

std::string svg_heatmap(const Heatmap2D& map, std::string_view title) {
  const int left = 60, top = 40, size = 500, bottom = 50;
  const int w = left + size + 30, h = top + size + bottom;
  std::string out = svg_open(w, h, title);
  const double cell = static_cast<double>(size) / static_cast<double>(std::max<std::size_t>(map.bins, 1));
  out += fmt::format("<rect x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" fill=\"none\" "
                     "stroke=\"black\"/>\n",
                     left, top, size, size);
  for (std::size_t iy = 0; iy < map.bins; ++iy) {
    for (std::size_t ix = 0; ix < map.bins; ++ix) {
      std::size_t k = iy * map.bins + ix;
      if (map.counts[k] == 0) continue;
      double x = left + cell * static_cast<double>(ix);
      double y = top + size - cell * static_cast<double>(iy + 1);
      out += fmt::format(
          "<rect x=\"{:.2f}\" y=\"{:.2f}\" width=\"{:.2f}\" height=\"{:.2f}\" fill=\"{}\"/>\n", x, y,
          cell, cell, density_color(map.classes[k]));
    }
  }
  out += fmt::format("<text x=\"{}\" y=\"{}\" text-anchor=\"middle\">log10 credit [{:.2f}, {:.2f}]</text>\n",
                     left + size / 2, h - 15, map.x_lo, map.x_hi);
  out += fmt::format(
      "<text x=\"15\" y=\"{}\" transform=\"rotate(-90 15 {})\" text-anchor=\"middle\">"
      "log10(entropy + {}) [{:.2f}, {:.2f}]</text>\n",
      top + size / 2, top + size / 2, map.epsilon, map.y_lo, map.y_hi);
  out += "</svg>\n";
  return out;
}

std::string svg_vector_field(const VectorField& field, std::string_view title) {
  const int left = 60, top = 40, size = 500, bottom = 50;
  const int w = left + size + 30, h = top + size + bottom;
  std::string out = svg_open(w, h, title);
  out += fmt::format("<rect x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" fill=\"none\" "
                     "stroke=\"black\"/>\n",
                     left, top, size, size);
  const double sx = size / (field.x_hi - field.x_lo);
  const double sy = size / (field.y_hi - field.y_lo);
  for (const auto& c : field.cells) {
    double x0 = left + (c.x - field.x_lo) * sx;
    double y0 = top + size - (c.y - field.y_lo) * sy;
    double x1 = x0 + c.dx * sx;
    double y1 = y0 - c.dy * sy;
    out += fmt::format(
        "<line x1=\"{:.2f}\" y1=\"{:.2f}\" x2=\"{:.2f}\" y2=\"{:.2f}\" stroke=\"{}\" "
        "stroke-width=\"1.5\"/><circle cx=\"{:.2f}\" cy=\"{:.2f}\" r=\"1.5\" fill=\"{}\"/>\n",
        x0, y0, x1, y1, density_color(c.density), x0, y0, density_color(c.density));
  }
  out += fmt::format("<text x=\"{}\" y=\"{}\" text-anchor=\"middle\">x [{:.2f}, {:.2f}]</text>\n",
                     left + size / 2, h - 15, field.x_lo, field.x_hi);
  out += fmt::format(
      "<text x=\"15\" y=\"{}\" transform=\"rotate(-90 15 {})\" text-anchor=\"middle\">"
      "y [{:.2f}, {:.2f}]</text>\n",
      top + size / 2, top + size / 2, field.y_lo, field.y_hi);
  out += "</svg>\n";
  return out;
}

}  // namespace patlas
