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

#ifndef KCHLINT_CORE_KNOWLEDGE_BASE_H_
#define KCHLINT_CORE_KNOWLEDGE_BASE_H_

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace kchlint {

// One library's catalog of valid names. `version` is whatever the library
// reports; hand-written manifests may say "unknown".
struct LibraryEntry {
  std::string module_path;
  std::string version;
  std::optional<std::string> canonical_alias;
  std::unordered_set<std::string> callables;
  std::map<std::string, std::unordered_set<std::string>> object_methods;
  // callable name -> type it returns (read_csv -> DataFrame)
  std::map<std::string, std::string> constructors;

  bool has_callable(std::string_view name) const {
    return callables.count(std::string(name)) != 0;
  }
  friend bool operator==(const LibraryEntry&, const LibraryEntry&) = default;
};

struct ExtensionRule {
  std::string ext;
  std::string library;
  std::string callable;
  friend bool operator==(const ExtensionRule&, const ExtensionRule&) = default;
};

struct IntentSynonym {
  std::string word;
  std::string library;
  std::string callable;
  friend bool operator==(const IntentSynonym&, const IntentSynonym&) = default;
};

struct Preference {
  std::string intent;
  std::string library;
  std::string callable;
  friend bool operator==(const Preference&, const Preference&) = default;
};

struct SemanticRules {
  std::vector<ExtensionRule> extension_map;
  std::vector<std::string> reader_family;
  std::vector<IntentSynonym> intent_synonyms;
  std::vector<Preference> preferences;
  friend bool operator==(const SemanticRules&, const SemanticRules&) = default;
};

class ManifestError : public std::runtime_error {
 public:
  ManifestError(std::string path, std::string reason)
      : std::runtime_error((path.empty() ? std::string("/") : path) + ": " +
                           reason),
        path_(std::move(path)),
        reason_(std::move(reason)) {}

  // JSON-pointer style location inside the manifest document.
  const std::string& path() const { return path_; }
  const std::string& reason() const { return reason_; }

 private:
  std::string path_;
  std::string reason_;
};

// A semantic rule or constructor names a callable the manifest lacks.
class DanglingRule : public ManifestError {
 public:
  using ManifestError::ManifestError;
};

class UnknownLibrary : public std::runtime_error {
 public:
  explicit UnknownLibrary(const std::string& module_path)
      : std::runtime_error("unknown library '" + module_path + "'") {}
};

struct SymbolMatch {
  std::string candidate;
  std::size_t distance = 0;
  friend bool operator==(const SymbolMatch&, const SymbolMatch&) = default;
};

class KnowledgeBase {
 public:
  std::map<std::string, LibraryEntry, std::less<>> libraries;
  SemanticRules semantic;

  const LibraryEntry* library(std::string_view module_path) const;
  // Total number of callable entries across libraries.
  std::size_t callable_count() const;

  // Throws UnknownLibrary when module_path has no entry. With `object_type`
  // the name is looked up among that type's methods instead.
  bool lookup_callable(std::string_view module_path, std::string_view name,
                       const std::optional<std::string>& object_type = {}) const;

  // Closest candidate within the suggestion threshold; ties go to the
  // lexicographically smallest candidate. Throws UnknownLibrary.
  std::optional<SymbolMatch> nearest_symbol(
      std::string_view module_path, std::string_view name,
      const std::optional<std::string>& object_type = {}) const;

  std::optional<std::string> extension_callable(std::string_view ext,
                                                std::string_view library) const;
  bool in_reader_family(std::string_view callable) const;
  // Libraries listing `name` among their callables, sorted by module path.
  std::vector<std::string> libraries_with_callable(std::string_view name) const;
  // Type produced by `callable` of `module_path`, if recorded.
  std::optional<std::string> constructed_type(std::string_view module_path,
                                              std::string_view callable) const;
  bool is_canonical_alias(std::string_view name) const;

  friend bool operator==(const KnowledgeBase&, const KnowledgeBase&) = default;
};

// Parses and validates a manifest document. Throws ManifestError or
// DanglingRule.
KnowledgeBase load_manifest(std::string_view bytes);

// Canonical manifest text (sorted names, fixed field order).
std::string serialize_manifest(const KnowledgeBase& kb);

// Per-library union; `b` wins on version, alias, constructor and semantic
// rule conflicts.
KnowledgeBase merge(const KnowledgeBase& a, const KnowledgeBase& b);

// The manifests compiled into the library.
const KnowledgeBase& bundled_knowledge_base();
std::string_view bundled_manifest_text();

}  // namespace kchlint

#endif  // KCHLINT_CORE_KNOWLEDGE_BASE_H_
