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

#ifndef KCHLINT_CORE_VALIDATION_H_
#define KCHLINT_CORE_VALIDATION_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "core/ast.h"
#include "core/extraction.h"
#include "core/knowledge_base.h"

namespace kchlint {

enum class Category {
  kUnknownApi,
  kBareCriticalCall,
  kSemanticArgumentShape,
  kSemanticIntent,
  kIdentifierConflict,
};
std::string_view to_string(Category category);

enum class FixKind {
  kRenameCallee,
  kRewriteCalleeForContext,
  kInsertImportAndQualify,
  kRenameIdentifier,
};
std::string_view to_string(FixKind kind);

enum class Confidence { kExactRule, kEditDistance };
std::string_view to_string(Confidence confidence);

struct RequiredImport {
  std::string module_path;
  std::string alias;  // equal to module_path for `import json`
  friend bool operator==(const RequiredImport&, const RequiredImport&) = default;
};

struct SuggestedFix {
  FixKind kind = FixKind::kRenameCallee;
  // New callee/identifier name, or the qualified path for bare calls.
  std::string replacement;
  std::optional<RequiredImport> required_import;
  friend bool operator==(const SuggestedFix&, const SuggestedFix&) = default;
};

struct Diagnostic {
  Category category = Category::kUnknownApi;
  Span span;
  std::string subject;  // callee or identifier text as written
  std::string evidence;
  std::optional<SuggestedFix> suggestion;
  Confidence confidence = Confidence::kExactRule;
  // Node the suggestion edits (Attribute or Name); 0 when the fix only adds
  // an import.
  NodeId target = 0;
  friend bool operator==(const Diagnostic&, const Diagnostic&) = default;
};

// "UnknownApi 'read_exel' is not a callable of pandas 2.3.3 [suggestion: ...]"
std::string describe(const Diagnostic& d);

struct ValidationOptions {
  bool unknown_api = true;
  bool bare_call = true;
  bool argument_shape = true;
  bool intent = true;
  bool identifiers = true;
};

// Runs every enabled rule; results are sorted by source position.
std::vector<Diagnostic> validate(const Module& module, const KnowledgeBase& kb,
                                 const ValidationOptions& options = {});

std::optional<Diagnostic> check_unknown_api(const CallSite& site,
                                            const KnowledgeBase& kb);
std::optional<Diagnostic> check_bare_call(const CallSite& site,
                                          const AliasMap& aliases,
                                          const ScopeTable& scopes,
                                          const KnowledgeBase& kb);
// A KB library's canonical alias used as a call receiver without any import.
std::optional<Diagnostic> check_unimported_alias(const CallSite& site,
                                                 const ScopeTable& scopes,
                                                 const KnowledgeBase& kb);
std::optional<Diagnostic> check_argument_shape(const CallSite& site,
                                               const KnowledgeBase& kb);
std::optional<Diagnostic> check_intent_synonym(const CallSite& site,
                                               const KnowledgeBase& kb);
std::vector<Diagnostic> check_identifiers(const ScopeTable& scopes,
                                          const KnowledgeBase& kb);

}  // namespace kchlint

#endif  // KCHLINT_CORE_VALIDATION_H_
