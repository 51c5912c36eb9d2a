// Copyright 2026 The kchlint Authors
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

#ifndef KCHLINT_TESTS_ORACLES_LEVENSHTEIN_ORACLE_H_
#define KCHLINT_TESTS_ORACLES_LEVENSHTEIN_ORACLE_H_

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <string_view>
#include <vector>

namespace oracle {

// Textbook full-matrix Wagner-Fischer, kept independent of the library's
// two-row implementation.
inline std::size_t levenshtein(std::string_view a, std::string_view b) {
  std::vector<std::vector<std::size_t>> d(a.size() + 1,
                                          std::vector<std::size_t>(b.size() + 1));
  for (std::size_t i = 0; i <= a.size(); ++i) d[i][0] = i;
  for (std::size_t j = 0; j <= b.size(); ++j) d[0][j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    for (std::size_t j = 1; j <= b.size(); ++j) {
      std::size_t sub = d[i - 1][j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
      d[i][j] = std::min({d[i - 1][j] + 1, d[i][j - 1] + 1, sub});
    }
  }
  return d[a.size()][b.size()];
}

// Exhaustive nearest-candidate search: smallest distance, then smallest
// name, among candidates accepted by `admissible(name, distance)`.
template <typename Range, typename Pred>
std::optional<std::pair<std::string, std::size_t>> nearest(std::string_view name,
                                                           const Range& candidates,
                                                           Pred admissible) {
  std::optional<std::pair<std::string, std::size_t>> best;
  for (const auto& c : candidates) {
    std::size_t d = levenshtein(name, c);
    if (!admissible(name, d)) continue;
    if (!best || d < best->second || (d == best->second && c < best->first)) {
      best = std::pair<std::string, std::size_t>(c, d);
    }
  }
  return best;
}

}  // namespace oracle

#endif  // KCHLINT_TESTS_ORACLES_LEVENSHTEIN_ORACLE_H_
