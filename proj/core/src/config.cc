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

#include "patlas/config.h"

#include <charconv>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include <fmt/format.h>

#include "patlas/error.h"
#include "patlas/report.h"
#include "patlas/text.h"

namespace patlas {
namespace {

constexpr const char* kStage = "config";

template <typename T>
T parse_number(std::string_view key, std::string_view v, std::size_t line) {
  T out{};
  auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || ptr != v.data() + v.size()) {
    throw ParseError(kStage, line, "invalid number for '" + std::string(key) + "': " +
                                       std::string(v));
  }
  return out;
}

std::string unquote(std::string_view v) {
  if (v.size() >= 2 && v.front() == '"' && v.back() == '"') v = v.substr(1, v.size() - 2);
  return std::string(v);
}

std::filesystem::path resolve(const std::filesystem::path& base, const std::string& v) {
  if (v.empty()) return {};
  std::filesystem::path p(v);
  if (p.is_relative() && !base.empty()) p = base / p;
  return p.lexically_normal();
}

}  // namespace

const std::vector<std::pair<std::string, std::string>>& PipelineConfig::documentation() {
  static const std::vector<std::pair<std::string, std::string>> docs = {
      {"input", "raw record file (CSV or JSONL); required"},
      {"format", "input format: jsonl or csv (default jsonl)"},
      {"g", "number of technology areas, >= 1 (default 7)"},
      {"restarts", "random restarts of the co-clustering, >= 1 (default 10)"},
      {"seed", "base random seed (default 42)"},
      {"max_iter", "sweep limit per restart, >= 1 (default 100)"},
      {"p0", "edge-weight percentile for name graphs, in [85, 99] (default 99)"},
      {"stopwords", "stopword file replacing the built-in list (optional)"},
      {"aliases", "entity family file for internal transfers (optional)"},
      {"lexicon", "category keyword file replacing the built-in lexicon (optional)"},
      {"keywords", "keywords reported per area, >= 1 (default 25)"},
      {"base_year", "year zero of the relative-year axis (default 2004)"},
      {"bins", "bins per axis of the vector fields, >= 1 (default 20)"},
      {"heatmap_bins", "bins per axis of the heat map, >= 1 (default 50)"},
      {"epsilon", "offset added to entropy on log axes, > 0 (default 0.001)"},
      {"top_n", "regions listed per ranking year, >= 1 (default 10)"},
      {"top_k", "licensors listed per category, >= 1 (default 10)"},
  };
  return docs;
}

PipelineConfig PipelineConfig::parse(std::string_view text, const std::filesystem::path& base_dir) {
  PipelineConfig c;
  std::map<std::string, std::function<void(const std::string&, std::size_t)>> setters = {
      {"input", [&](const std::string& v, std::size_t) { c.input = resolve(base_dir, v); }},
      {"format", [&](const std::string& v, std::size_t) { c.format = v; }},
      {"g", [&](const std::string& v, std::size_t l) { c.g = parse_number<int>("g", v, l); }},
      {"restarts",
       [&](const std::string& v, std::size_t l) { c.restarts = parse_number<int>("restarts", v, l); }},
      {"seed",
       [&](const std::string& v, std::size_t l) { c.seed = parse_number<std::uint64_t>("seed", v, l); }},
      {"max_iter",
       [&](const std::string& v, std::size_t l) { c.max_iter = parse_number<int>("max_iter", v, l); }},
      {"p0", [&](const std::string& v, std::size_t l) { c.p0 = parse_number<double>("p0", v, l); }},
      {"stopwords", [&](const std::string& v, std::size_t) { c.stopwords = resolve(base_dir, v); }},
      {"aliases", [&](const std::string& v, std::size_t) { c.aliases = resolve(base_dir, v); }},
      {"lexicon", [&](const std::string& v, std::size_t) { c.lexicon = resolve(base_dir, v); }},
      {"keywords", [&](const std::string& v,
                       std::size_t l) { c.keywords = parse_number<std::size_t>("keywords", v, l); }},
      {"base_year",
       [&](const std::string& v, std::size_t l) { c.base_year = parse_number<int>("base_year", v, l); }},
      {"bins",
       [&](const std::string& v, std::size_t l) { c.bins = parse_number<std::size_t>("bins", v, l); }},
      {"heatmap_bins", [&](const std::string& v, std::size_t l) {
         c.heatmap_bins = parse_number<std::size_t>("heatmap_bins", v, l);
       }},
      {"epsilon",
       [&](const std::string& v, std::size_t l) { c.epsilon = parse_number<double>("epsilon", v, l); }},
      {"top_n",
       [&](const std::string& v, std::size_t l) { c.top_n = parse_number<std::size_t>("top_n", v, l); }},
      {"top_k",
       [&](const std::string& v, std::size_t l) { c.top_k = parse_number<std::size_t>("top_k", v, l); }},
  };
  std::size_t n = 0;
  for (const auto& raw : split(text, '\n')) {
    ++n;
    std::string_view line = raw;
    // Strip comments outside quotes.
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
      if (line[i] == '"') quoted = !quoted;
      if (line[i] == '#' && !quoted) {
        line = line.substr(0, i);
        break;
      }
    }
    line = trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string_view::npos) throw ParseError(kStage, n, "expected 'key = value'");
    std::string key(trim(line.substr(0, eq)));
    std::string value = unquote(trim(line.substr(eq + 1)));
    auto it = setters.find(key);
    if (it == setters.end()) throw ParseError(kStage, n, "unknown key '" + key + "'");
    it->second(value, n);
  }
  return c;
}

PipelineConfig PipelineConfig::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(kStage, "cannot open config '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  auto c = parse(buf.str(), path.parent_path());
  c.validate();
  return c;
}

void PipelineConfig::validate() const {
  auto fail = [](const std::string& m) { throw ConfigError(kStage, m); };
  if (input.empty()) fail("'input' is required");
  if (format != "jsonl" && format != "csv") fail("'format' must be jsonl or csv");
  if (g < 1) fail("'g' must be >= 1");
  if (restarts < 1) fail("'restarts' must be >= 1");
  if (max_iter < 1) fail("'max_iter' must be >= 1");
  if (!(p0 >= 85.0 && p0 <= 99.0)) fail("'p0' must lie in [85, 99]");
  if (keywords < 1) fail("'keywords' must be >= 1");
  if (bins < 1) fail("'bins' must be >= 1");
  if (heatmap_bins < 1) fail("'heatmap_bins' must be >= 1");
  if (!(epsilon > 0.0)) fail("'epsilon' must be positive");
  if (top_n < 1) fail("'top_n' must be >= 1");
  if (top_k < 1) fail("'top_k' must be >= 1");
}

std::string PipelineConfig::canonical() const {
  // Paths contribute their file names only, so the hash does not depend on
  // where the checkout lives.
  std::string out;
  auto line = [&](std::string_view k, const std::string& v) {
    out += fmt::format("{} = {}\n", k, v);
  };
  line("input", input.filename().generic_string());
  line("format", format);
  line("g", std::to_string(g));
  line("restarts", std::to_string(restarts));
  line("seed", std::to_string(seed));
  line("max_iter", std::to_string(max_iter));
  line("p0", format_double(p0));
  line("stopwords", stopwords.filename().generic_string());
  line("aliases", aliases.filename().generic_string());
  line("lexicon", lexicon.filename().generic_string());
  line("keywords", std::to_string(keywords));
  line("base_year", std::to_string(base_year));
  line("bins", std::to_string(bins));
  line("heatmap_bins", std::to_string(heatmap_bins));
  line("epsilon", format_double(epsilon));
  line("top_n", std::to_string(top_n));
  line("top_k", std::to_string(top_k));
  return out;
}

std::string PipelineConfig::hash() const { return sha256_hex(canonical()); }

}  // namespace patlas
