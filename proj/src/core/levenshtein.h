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

#ifndef KCHLINT_CORE_LEVENSHTEIN_H_
#define KCHLINT_CORE_LEVENSHTEIN_H_

#include <cstddef>
#include <string_view>

namespace kchlint {

// Unit-cost insert/delete/substitute edit distance over bytes.
std::size_t levenshtein(std::string_view a, std::string_view b);

// Acceptance bound for API suggestions: distance <= 2 and
// distance <= ceil(len(name) / 3).
bool within_suggestion_threshold(std::string_view name, std::size_t distance);

// Identifier renames use only the relative bound ceil(len(name) / 3); the
// candidate set is limited to names already defined in scope.
bool within_identifier_threshold(std::string_view name, std::size_t distance);

}  // namespace kchlint

#endif  // KCHLINT_CORE_LEVENSHTEIN_H_
