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

#ifndef KCHLINT_CORE_CORRECTION_H_
#define KCHLINT_CORE_CORRECTION_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "core/ast.h"
#include "core/knowledge_base.h"
#include "core/validation.h"

namespace kchlint {

enum class EditKind {
  kReplaceAttrName,
  kReplaceName,
  kQualifyCall,   // Name callee -> <alias>.<name>
  kInsertImport,  // synthetic top-of-module position
};
std::string_view to_string(EditKind kind);

struct FixEdit {
  EditKind kind = EditKind::kReplaceName;
  NodeId target = 0;
  Span span;
  std::string replacement;
  std::string module_path;  // kInsertImport
  std::string alias;        // kQualifyCall, kInsertImport
  std::size_t diagnostic = 0;  // index into the planned diagnostics
  friend bool operator==(const FixEdit&, const FixEdit&) = default;
};

struct FixOptions {
  // Intent-synonym findings are detect-only unless this is set.
  bool fix_intent = false;
};

struct FixPlan {
  std::vector<FixEdit> edits;
  std::vector<std::size_t> applied;  // diagnostic indices
  std::vector<std::size_t> unfixed;
};

// Turns suggestions into edits in source order. A fix whose span overlaps an
// earlier accepted fix is not applied; its diagnostic lands in `unfixed`.
FixPlan plan_fixes(const Module& module, const std::vector<Diagnostic>& diagnostics,
                   const FixOptions& options = {});

Module apply_fixes(const Module& module, const std::vector<FixEdit>& edits);

struct FixResult {
  std::string fixed_source;
  std::vector<Diagnostic> applied;
  std::vector<Diagnostic> unfixed;
  std::vector<FixEdit> edits;
  // Set when the input is outside the supported grammar; fixed_source is then
  // the input unchanged.
  std::optional<std::string> parse_failure;
};

FixResult fix(std::string_view source, const KnowledgeBase& kb,
              const FixOptions& options = {});

}  // namespace kchlint

#endif  // KCHLINT_CORE_CORRECTION_H_
