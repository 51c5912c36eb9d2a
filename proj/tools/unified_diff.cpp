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

#include "unified_diff.h"

#include <algorithm>
#include <vector>

namespace kchlint::tools {

namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t nl = text.find('\n', start);
    if (nl == std::string_view::npos) nl = text.size();
    lines.push_back(text.substr(start, nl - start));
    start = nl + 1;
  }
  return lines;
}

enum class Op { kKeep, kDelete, kInsert };

struct Line {
  Op op;
  std::size_t a;  // index into before (kKeep, kDelete)
  std::size_t b;  // index into after (kKeep, kInsert)
};

// LCS table walk; snippets are small enough for the quadratic table.
std::vector<Line> diff_lines(const std::vector<std::string_view>& a,
                             const std::vector<std::string_view>& b) {
  const std::size_t n = a.size();
  const std::size_t m = b.size();
  std::vector<std::vector<std::uint32_t>> lcs(n + 1, std::vector<std::uint32_t>(m + 1, 0));
  for (std::size_t i = n; i-- > 0;) {
    for (std::size_t j = m; j-- > 0;) {
      lcs[i][j] = a[i] == b[j] ? lcs[i + 1][j + 1] + 1
                               : std::max(lcs[i + 1][j], lcs[i][j + 1]);
    }
  }
  std::vector<Line> out;
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < n || j < m) {
    if (i < n && j < m && a[i] == b[j]) {
      out.push_back({Op::kKeep, i++, j++});
    } else if (j < m && (i == n || lcs[i][j + 1] >= lcs[i + 1][j])) {
      out.push_back({Op::kInsert, i, j++});
    } else {
      out.push_back({Op::kDelete, i++, j});
    }
  }
  // Deletions first within a change block, as diff(1) prints them.
  for (std::size_t k = 0; k < out.size();) {
    std::size_t end = k;
    while (end < out.size() && out[end].op != Op::kKeep) ++end;
    std::stable_partition(out.begin() + static_cast<std::ptrdiff_t>(k),
                          out.begin() + static_cast<std::ptrdiff_t>(end),
                          [](const Line& l) { return l.op == Op::kDelete; });
    k = end == k ? k + 1 : end;
  }
  std::size_t ai = 0;
  std::size_t bi = 0;
  for (Line& l : out) {
    l.a = ai;
    l.b = bi;
    if (l.op != Op::kInsert) ++ai;
    if (l.op != Op::kDelete) ++bi;
  }
  return out;
}

std::string range(std::size_t start, std::size_t count) {
  // 1-based start; an empty range names the line before it.
  std::size_t first = count == 0 ? start : start + 1;
  return std::to_string(first) + "," + std::to_string(count);
}

}  // namespace

std::string unified_diff(std::string_view before, std::string_view after,
                         std::string_view before_name, std::string_view after_name,
                         int context) {
  if (before == after) return {};
  auto a = split_lines(before);
  auto b = split_lines(after);
  std::vector<Line> lines = diff_lines(a, b);
  std::string out;
  out += "--- ";
  out += before_name;
  out += "\n+++ ";
  out += after_name;
  out += "\n";
  const auto ctx = static_cast<std::size_t>(std::max(context, 0));
  std::size_t k = 0;
  while (k < lines.size()) {
    while (k < lines.size() && lines[k].op == Op::kKeep) ++k;
    if (k == lines.size()) break;
    std::size_t start = k >= ctx ? k - ctx : 0;
    std::size_t end = k;
    // Extend the hunk while the next change is within 2*ctx kept lines.
    while (true) {
      while (end < lines.size() && lines[end].op != Op::kKeep) ++end;
      std::size_t keep = end;
      while (keep < lines.size() && lines[keep].op == Op::kKeep) ++keep;
      if (keep < lines.size() && keep - end <= 2 * ctx) {
        end = keep;
        continue;
      }
      end = std::min(end + ctx, keep);
      break;
    }
    std::size_t a_start = lines[start].a;
    std::size_t b_start = lines[start].b;
    std::size_t a_count = 0;
    std::size_t b_count = 0;
    std::string body;
    for (std::size_t i = start; i < end; ++i) {
      const Line& l = lines[i];
      switch (l.op) {
        case Op::kKeep:
          body += " ";
          body += a[l.a];
          ++a_count;
          ++b_count;
          break;
        case Op::kDelete:
          body += "-";
          body += a[l.a];
          ++a_count;
          break;
        case Op::kInsert:
          body += "+";
          body += b[l.b];
          ++b_count;
          break;
      }
      body += "\n";
    }
    out += "@@ -" + range(a_start, a_count) + " +" + range(b_start, b_count) + " @@\n";
    out += body;
    k = end;
  }
  return out;
}

}  // namespace kchlint::tools
