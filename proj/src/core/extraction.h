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

#ifndef KCHLINT_CORE_EXTRACTION_H_
#define KCHLINT_CORE_EXTRACTION_H_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "core/ast.h"

namespace kchlint {

struct AliasEntry {
  std::string alias;
  std::string target;  // fully qualified dotted path
  NodeId origin = 0;   // the Import/ImportFrom statement
  Span span;
};

// Local names bound by import statements. A later import of the same alias
// replaces the earlier entry.
class AliasMap {
 public:
  void bind(AliasEntry entry);
  const AliasEntry* find(std::string_view alias) const;
  // Most recently bound alias whose target is `module_path`.
  std::optional<std::string> alias_for(std::string_view module_path) const;

  const std::map<std::string, AliasEntry, std::less<>>& entries() const {
    return entries_;
  }
  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }

 private:
  std::map<std::string, AliasEntry, std::less<>> entries_;
  std::vector<std::string> order_;
};

AliasMap extract_imports(const Module& module);

enum class CalleeKind { kQualified, kBare, kMethodOnValue };
std::string_view to_string(CalleeKind kind);

enum class LiteralKind { kString, kNumber, kOther };

struct ArgFeature {
  int position = -1;    // -1 for keyword arguments
  std::string keyword;  // empty for positional arguments
  LiteralKind literal_kind = LiteralKind::kOther;
  std::optional<std::string> string_value;
  std::optional<std::string> file_extension;  // lowercased, with the dot
};

ArgFeature make_arg_feature(const Expr& arg, int position,
                            std::string keyword = {});
std::optional<std::string> file_extension(std::string_view value);

// The qualified call a receiver variable was assigned from, e.g.
// `df = pd.read_csv(...)` gives {pandas, read_csv} for receiver `df`.
struct ReceiverOrigin {
  std::string base_path;
  std::string func_name;
  friend bool operator==(const ReceiverOrigin&, const ReceiverOrigin&) = default;
};

struct CallSite {
  CalleeKind callee_kind = CalleeKind::kBare;
  // Resolved module path for qualified calls, receiver text for
  // method-on-value calls, empty for bare calls.
  std::string base_path;
  std::string func_name;
  std::optional<ReceiverOrigin> receiver_origin;
  std::vector<ArgFeature> args;
  Span span;
  Span callee_span;  // the final name token of the callee
  NodeId call_id = 0;
  NodeId callee_id = 0;  // Name or Attribute node holding func_name
  bool callee_is_name = false;
  int scope = 0;
  std::string enclosing_statement_text;
  std::vector<std::string> statement_comments;
  std::vector<std::string> assigned_names;
  // The call is the whole value of its assignment/expression/return.
  bool is_statement_value = false;
};

enum class DefinitionKind {
  kAssignment,
  kParameter,
  kFunction,
  kImport,
  kLoopTarget,
  kWithTarget,
};

struct Definition {
  std::string name;
  Span span;
  DefinitionKind kind = DefinitionKind::kAssignment;
  // For `name = <call>` with a dotted callee: the callee path as written.
  std::optional<std::string> value_callee_path;
};

struct NameUse {
  std::string name;
  Span span;
  NodeId id = 0;
  bool is_callee = false;
};

struct Scope {
  std::string name;  // "<module>" or the function name
  int parent = -1;
  std::map<std::string, std::vector<Definition>, std::less<>> defined;
  std::vector<NameUse> uses;
};

class ScopeTable {
 public:
  std::vector<Scope>& scopes() { return scopes_; }
  const std::vector<Scope>& scopes() const { return scopes_; }

  // Definitions of `name` in the nearest enclosing scope that has any.
  const std::vector<Definition>* lookup(int scope, std::string_view name) const;
  bool is_defined(int scope, std::string_view name) const {
    return lookup(scope, name) != nullptr;
  }
  // Names visible from `scope` through the lexical chain, sorted.
  std::vector<std::string> visible_names(int scope) const;

 private:
  std::vector<Scope> scopes_;
};

ScopeTable extract_scopes(const Module& module);

std::vector<CallSite> extract_call_sites(const Module& module,
                                         const AliasMap& aliases);
std::vector<CallSite> extract_call_sites(const Module& module,
                                         const AliasMap& aliases,
                                         const ScopeTable& scopes);

// Builtins that are never reported as bare calls or undefined identifiers.
bool is_builtin_name(std::string_view name);

}  // namespace kchlint

#endif  // KCHLINT_CORE_EXTRACTION_H_
