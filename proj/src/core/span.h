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

#ifndef KCHLINT_CORE_SPAN_H_
#define KCHLINT_CORE_SPAN_H_

#include <cstddef>
#include <string>

namespace kchlint {

// A region of the analyzed source. `line` is 1-based, `col` is a 0-based
// byte column; [begin, end) are byte offsets into the source.
struct Span {
  int line = 0;
  int col = 0;
  std::size_t begin = 0;
  std::size_t end = 0;

  bool contains(const Span& other) const {
    return begin <= other.begin && other.end <= end;
  }
  bool overlaps(const Span& other) const {
    return begin < other.end && other.begin < end;
  }
  friend bool operator==(const Span&, const Span&) = default;
};

inline std::string to_string(const Span& span) {
  return std::to_string(span.line) + ":" + std::to_string(span.col + 1);
}

}  // namespace kchlint

#endif  // KCHLINT_CORE_SPAN_H_
