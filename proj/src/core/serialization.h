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

#ifndef KCHLINT_CORE_SERIALIZATION_H_
#define KCHLINT_CORE_SERIALIZATION_H_

#include "json.hpp"

#include "core/correction.h"
#include "core/evalharness.h"
#include "core/knowledge_base.h"
#include "core/validation.h"

// Stable JSON shapes shared by the C API and the tests. Field order is fixed;
// columns are 1-based.
namespace kchlint {

nlohmann::ordered_json to_json(const Diagnostic& d);
nlohmann::ordered_json to_json(const std::vector<Diagnostic>& diagnostics);
nlohmann::ordered_json to_json(const FixResult& result);
nlohmann::ordered_json to_json(const Ratio& r);
nlohmann::ordered_json to_json(const EvalReport& report, bool include_outcomes);
nlohmann::ordered_json library_to_json(const LibraryEntry& lib);

}  // namespace kchlint

#endif  // KCHLINT_CORE_SERIALIZATION_H_
