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

#include "patlas/similarity.h"

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdint>
#include <vector>

#include "patlas/error.h"
#include "patlas/text.h"

namespace patlas {
namespace {

// Pattern bitmasks for Myers/Hyyro bit-vector edit distance.
class PatternMask {
 public:
  explicit PatternMask(std::string_view p) : m_(p.size()) {
    peq_.fill(0);
    for (std::size_t i = 0; i < p.size(); ++i) {
      peq_[static_cast<unsigned char>(p[i])] |= std::uint64_t{1} << i;
    }
  }

  // Global edit distance between the pattern and `t`; pattern length <= 64.
  std::size_t distance(std::string_view t) const {
    if (m_ == 0) return t.size();
    const std::uint64_t mask = m_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << m_) - 1;
    const std::uint64_t last = std::uint64_t{1} << (m_ - 1);
    std::uint64_t pv = mask, mv = 0;
    std::size_t score = m_;
    for (char ch : t) {
      const std::uint64_t eq = peq_[static_cast<unsigned char>(ch)];
      const std::uint64_t xv = eq | mv;
      const std::uint64_t xh = (((eq & pv) + pv) ^ pv) | eq;
      std::uint64_t ph = mv | ~(xh | pv);
      std::uint64_t mh = pv & xh;
      if (ph & last) {
        ++score;
      } else if (mh & last) {
        --score;
      }
      // Row 0 of the DP grows by one per text character.
      ph = (ph << 1) | 1;
      mh <<= 1;
      pv = (mh | ~(xv | ph)) & mask;
      mv = ph & xv;
    }
    return score;
  }

 private:
  std::size_t m_;
  std::array<std::uint64_t, 256> peq_;
};

std::size_t levenshtein_dp(std::string_view a, std::string_view b) {
  std::vector<std::size_t> prev(b.size() + 1), cur(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j) prev[j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    cur[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      std::size_t sub = prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
      cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, sub});
    }
    std::swap(prev, cur);
  }
  return prev[b.size()];
}

double ratio_from_distance(std::size_t d, std::size_t len) {
  if (len == 0) return 100.0;
  return 100.0 * (1.0 - static_cast<double>(d) / static_cast<double>(len));
}

}  // namespace

std::string normalize_name(std::string_view name) {
  std::string out;
  out.reserve(name.size());
  bool space = false;
  for (char c : trim(name)) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      space = true;
      continue;
    }
    if (space && !out.empty()) out.push_back(' ');
    space = false;
    out.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
  }
  return out;
}

std::size_t levenshtein(std::string_view a, std::string_view b) {
  if (a.size() > b.size()) std::swap(a, b);
  if (a.size() <= 64) return PatternMask(a).distance(b);
  return levenshtein_dp(a, b);
}

double normal_ratio(std::string_view a, std::string_view b) {
  return ratio_from_distance(levenshtein(a, b), std::max(a.size(), b.size()));
}

double partial_ratio(std::string_view a, std::string_view b) {
  if (a.size() > b.size()) std::swap(a, b);
  if (a.size() == b.size()) return normal_ratio(a, b);
  if (a.empty()) return 0.0;
  const std::size_t m = a.size();
  std::size_t best = m;
  if (m <= 64) {
    PatternMask pattern(a);
    for (std::size_t i = 0; i + m <= b.size() && best > 0; ++i) {
      best = std::min(best, pattern.distance(b.substr(i, m)));
    }
  } else {
    for (std::size_t i = 0; i + m <= b.size() && best > 0; ++i) {
      best = std::min(best, levenshtein_dp(a, b.substr(i, m)));
    }
  }
  return ratio_from_distance(best, m);
}

std::string token_sort(std::string_view s) {
  std::vector<std::string> tokens;
  std::string cur;
  for (char c : s) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      if (!cur.empty()) tokens.push_back(std::move(cur));
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) tokens.push_back(std::move(cur));
  std::sort(tokens.begin(), tokens.end());
  return join(tokens, " ");
}

double partial_token_sort_ratio(std::string_view a, std::string_view b) {
  return partial_ratio(token_sort(a), token_sort(b));
}

double similarity(std::string_view a, std::string_view b) {
  std::string na = normalize_name(a), nb = normalize_name(b);
  if (na.empty() || nb.empty()) {
    throw ConfigError("resolve", "similarity of an empty name");
  }
  return std::max({normal_ratio(na, nb), partial_ratio(na, nb),
                   partial_token_sort_ratio(na, nb)});
}

}  // namespace patlas
