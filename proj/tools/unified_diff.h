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

#ifndef KCHLINT_TOOLS_UNIFIED_DIFF_H_
#define KCHLINT_TOOLS_UNIFIED_DIFF_H_

#include <string>
#include <string_view>

namespace kchlint::tools {

// Unified diff of two texts with `context` lines around each change; empty
// when the texts are equal.
std::string unified_diff(std::string_view before, std::string_view after,
                         std::string_view before_name, std::string_view after_name,
                         int context = 3);

}  // namespace kchlint::tools

#endif  // KCHLINT_TOOLS_UNIFIED_DIFF_H_
