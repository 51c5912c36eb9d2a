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

#include "core/validation.h"

#include <algorithm>
#include <cctype>
#include <set>

#include "core/levenshtein.h"

namespace kchlint {

namespace {

struct ResolvedTarget {
  const LibraryEntry* library = nullptr;
  std::optional<std::string> object_type;
};

// The KB library (and tracked receiver type) a call site refers to.
std::optional<ResolvedTarget> resolve_target(const CallSite& site,
                                             const KnowledgeBase& kb) {
  if (site.callee_kind == CalleeKind::kQualified) {
    const LibraryEntry* lib = kb.library(site.base_path);
    if (lib == nullptr) return std::nullopt;
    return ResolvedTarget{lib, std::nullopt};
  }
  if (site.callee_kind == CalleeKind::kMethodOnValue && site.receiver_origin &&
      !site.func_name.empty()) {
    const auto& origin = *site.receiver_origin;
    const LibraryEntry* lib = kb.library(origin.base_path);
    if (lib == nullptr) return std::nullopt;
    auto type = kb.constructed_type(origin.base_path, origin.func_name);
    if (!type || lib->object_methods.count(*type) == 0) return std::nullopt;
    return ResolvedTarget{lib, type};
  }
  return std::nullopt;
}

std::string owner_text(const ResolvedTarget& t) {
  if (t.object_type) return t.library->module_path + "." + *t.object_type;
  return t.library->module_path + " " + t.library->version;
}

const ArgFeature* first_positional_string(const CallSite& site) {
  for (const ArgFeature& a : site.args) {
    if (a.position >= 0 && a.literal_kind == LiteralKind::kString) return &a;
  }
  return nullptr;
}

// Lowercased alphanumeric words; '_' separates words.
std::vector<std::string> words_of(std::string_view text) {
  std::vector<std::string> words;
  std::string current;
  for (char c : text) {
    auto uc = static_cast<unsigned char>(c);
    if (std::isalnum(uc)) {
      current.push_back(static_cast<char>(std::tolower(uc)));
    } else if (!current.empty()) {
      words.push_back(std::move(current));
      current.clear();
    }
  }
  if (!current.empty()) words.push_back(std::move(current));
  return words;
}

bool is_library_name(const KnowledgeBase& kb, std::string_view name) {
  if (kb.is_canonical_alias(name)) return true;
  return std::any_of(kb.libraries.begin(), kb.libraries.end(),
                     [&](const auto& kv) {
                       const std::string& path = kv.first;
                       return std::string_view(path).substr(0, path.find('.')) ==
                              name;
                     });
}

}  // namespace

std::string_view to_string(Category category) {
  switch (category) {
    case Category::kUnknownApi: return "UnknownApi";
    case Category::kBareCriticalCall: return "BareCriticalCall";
    case Category::kSemanticArgumentShape: return "SemanticArgumentShape";
    case Category::kSemanticIntent: return "SemanticIntent";
    case Category::kIdentifierConflict: return "IdentifierConflict";
  }
  return "?";
}

std::string_view to_string(FixKind kind) {
  switch (kind) {
    case FixKind::kRenameCallee: return "rename-callee";
    case FixKind::kRewriteCalleeForContext: return "rewrite-callee-for-context";
    case FixKind::kInsertImportAndQualify: return "insert-import-and-qualify";
    case FixKind::kRenameIdentifier: return "rename-identifier";
  }
  return "?";
}

std::string_view to_string(Confidence confidence) {
  return confidence == Confidence::kExactRule ? "exact-rule" : "edit-distance";
}

std::string describe(const Diagnostic& d) {
  std::string out = std::string(to_string(d.category)) + " " + d.evidence;
  if (d.suggestion) {
    out += " [suggestion: ";
    if (d.suggestion->required_import) {
      const RequiredImport& imp = *d.suggestion->required_import;
      out += "import " + imp.module_path;
      if (imp.alias != imp.module_path) out += " as " + imp.alias;
      out += "; ";
    }
    out += d.suggestion->replacement + "]";
  }
  return out;
}

std::optional<Diagnostic> check_unknown_api(const CallSite& site,
                                            const KnowledgeBase& kb) {
  auto target = resolve_target(site, kb);
  if (!target) return std::nullopt;
  const std::string& module = target->library->module_path;
  if (kb.lookup_callable(module, site.func_name, target->object_type)) {
    return std::nullopt;
  }
  Diagnostic d;
  d.category = Category::kUnknownApi;
  d.span = site.callee_span;
  d.subject = site.func_name;
  d.evidence = "'" + site.func_name + "' is not a " +
               (target->object_type ? "method" : "callable") + " of " +
               owner_text(*target);
  d.confidence = Confidence::kEditDistance;
  d.target = site.callee_id;
  auto match = kb.nearest_symbol(module, site.func_name, target->object_type);
  if (!match || site.callee_is_name) return d;

  SuggestedFix fix{FixKind::kRenameCallee, match->candidate, std::nullopt};
  // Argument-shape context outranks the nearest spelling for readers.
  if (!target->object_type && kb.in_reader_family(match->candidate)) {
    if (const ArgFeature* arg = first_positional_string(site);
        arg != nullptr && arg->file_extension) {
      auto mapped = kb.extension_callable(*arg->file_extension, module);
      if (mapped && *mapped != match->candidate) {
        fix = SuggestedFix{FixKind::kRewriteCalleeForContext, *mapped,
                           std::nullopt};
        d.evidence += "; '" + *arg->file_extension + "' argument implies " +
                      *mapped;
      }
    }
  }
  d.suggestion = std::move(fix);
  return d;
}

std::optional<Diagnostic> check_bare_call(const CallSite& site,
                                          const AliasMap& aliases,
                                          const ScopeTable& scopes,
                                          const KnowledgeBase& kb) {
  if (site.callee_kind != CalleeKind::kBare) return std::nullopt;
  const std::string& name = site.func_name;
  if (scopes.is_defined(site.scope, name) || is_builtin_name(name)) {
    return std::nullopt;
  }
  std::vector<std::string> libs = kb.libraries_with_callable(name);
  if (libs.empty()) return std::nullopt;
  Diagnostic d;
  d.category = Category::kBareCriticalCall;
  d.span = site.callee_span;
  d.subject = name;
  d.confidence = Confidence::kExactRule;
  d.target = site.callee_id;
  if (libs.size() > 1) {
    std::string list;
    for (const std::string& l : libs) list += (list.empty() ? "" : ", ") + l;
    d.evidence = "'" + name + "' is called without a module qualifier and is "
                 "ambiguous between " + list;
    return d;
  }
  const std::string& module = libs.front();
  d.evidence = "'" + name + "' is called without its module qualifier (" +
               module + ")";
  SuggestedFix fix;
  fix.kind = FixKind::kInsertImportAndQualify;
  if (auto existing = aliases.alias_for(module)) {
    fix.replacement = *existing + "." + name;
  } else {
    const LibraryEntry* lib = kb.library(module);
    std::string alias = lib->canonical_alias.value_or(module);
    fix.replacement = alias + "." + name;
    fix.required_import = RequiredImport{module, alias};
  }
  d.suggestion = std::move(fix);
  return d;
}

std::optional<Diagnostic> check_unimported_alias(const CallSite& site,
                                                 const ScopeTable& scopes,
                                                 const KnowledgeBase& kb) {
  if (site.callee_kind != CalleeKind::kMethodOnValue) return std::nullopt;
  const std::string& alias = site.base_path;
  if (scopes.is_defined(site.scope, alias)) return std::nullopt;
  for (const auto& [module, lib] : kb.libraries) {
    if (!lib.canonical_alias || *lib.canonical_alias != alias) continue;
    Diagnostic d;
    d.category = Category::kBareCriticalCall;
    d.span = site.callee_span;
    d.subject = alias + "." + site.func_name;
    d.evidence = "module alias '" + alias + "' (" + module +
                 ") is used without an import";
    d.confidence = Confidence::kExactRule;
    if (lib.has_callable(site.func_name)) {
      d.suggestion = SuggestedFix{FixKind::kInsertImportAndQualify,
                                  alias + "." + site.func_name,
                                  RequiredImport{module, alias}};
    }
    return d;
  }
  return std::nullopt;
}

std::optional<Diagnostic> check_argument_shape(const CallSite& site,
                                               const KnowledgeBase& kb) {
  auto target = resolve_target(site, kb);
  if (!target || target->object_type) return std::nullopt;
  const LibraryEntry& lib = *target->library;
  if (!lib.has_callable(site.func_name) || !kb.in_reader_family(site.func_name)) {
    return std::nullopt;
  }
  const ArgFeature* arg = first_positional_string(site);
  if (arg == nullptr || !arg->file_extension) return std::nullopt;
  auto mapped = kb.extension_callable(*arg->file_extension, lib.module_path);
  if (!mapped || *mapped == site.func_name) return std::nullopt;
  Diagnostic d;
  d.category = Category::kSemanticArgumentShape;
  d.span = site.callee_span;
  d.subject = site.func_name;
  d.evidence = "'" + *arg->file_extension + "' argument implies " + *mapped +
               ", not " + site.func_name;
  d.confidence = Confidence::kExactRule;
  d.target = site.callee_id;
  if (!site.callee_is_name) {
    d.suggestion =
        SuggestedFix{FixKind::kRewriteCalleeForContext, *mapped, std::nullopt};
  }
  return d;
}

std::optional<Diagnostic> check_intent_synonym(const CallSite& site,
                                               const KnowledgeBase& kb) {
  auto target = resolve_target(site, kb);
  if (!target || target->object_type || !site.is_statement_value) {
    return std::nullopt;
  }
  const LibraryEntry& lib = *target->library;
  if (!lib.has_callable(site.func_name)) return std::nullopt;

  std::set<std::string> words;
  for (const std::string& c : site.statement_comments) {
    for (std::string& w : words_of(c)) words.insert(std::move(w));
  }
  for (const std::string& n : site.assigned_names) {
    for (std::string& w : words_of(n)) words.insert(std::move(w));
  }
  const IntentSynonym* hit = nullptr;
  for (const IntentSynonym& syn : kb.semantic.intent_synonyms) {
    if (syn.library != lib.module_path) continue;
    std::string word;
    for (char c : syn.word) {
      word.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    }
    if (words.count(word) == 0) continue;
    if (syn.callable == site.func_name) return std::nullopt;
    if (hit == nullptr) hit = &syn;
  }
  if (hit == nullptr) return std::nullopt;
  Diagnostic d;
  d.category = Category::kSemanticIntent;
  d.span = site.callee_span;
  d.subject = site.func_name;
  d.evidence = "intent '" + hit->word + "' suggests " + hit->callable +
               ", not " + site.func_name;
  d.confidence = Confidence::kEditDistance;
  d.target = site.callee_id;
  if (!site.callee_is_name) {
    d.suggestion = SuggestedFix{FixKind::kRewriteCalleeForContext,
                                hit->callable, std::nullopt};
  }
  return d;
}

std::vector<Diagnostic> check_identifiers(const ScopeTable& scopes,
                                          const KnowledgeBase& kb) {
  std::vector<Diagnostic> out;
  const auto& all = scopes.scopes();
  for (std::size_t i = 0; i < all.size(); ++i) {
    int scope = static_cast<int>(i);
    for (const NameUse& use : all[i].uses) {
      if (scopes.is_defined(scope, use.name) || is_builtin_name(use.name) ||
          is_library_name(kb, use.name)) {
        continue;
      }
      // Undefined callees that name a KB callable belong to the bare-call
      // rule.
      if (use.is_callee && !kb.libraries_with_callable(use.name).empty()) {
        continue;
      }
      Diagnostic d;
      d.category = Category::kIdentifierConflict;
      d.span = use.span;
      d.subject = use.name;
      d.evidence = "'" + use.name + "' is not defined";
      d.confidence = Confidence::kEditDistance;
      d.target = use.id;
      std::optional<SymbolMatch> best;
      for (const std::string& candidate : scopes.visible_names(scope)) {
        std::size_t dist = levenshtein(use.name, candidate);
        if (!within_identifier_threshold(use.name, dist)) continue;
        if (!best || dist < best->distance) best = SymbolMatch{candidate, dist};
      }
      if (best) {
        d.evidence += "; did you mean '" + best->candidate + "'?";
        d.suggestion = SuggestedFix{FixKind::kRenameIdentifier,
                                    best->candidate, std::nullopt};
      }
      out.push_back(std::move(d));
    }
  }
  return out;
}

std::vector<Diagnostic> validate(const Module& module, const KnowledgeBase& kb,
                                 const ValidationOptions& options) {
  AliasMap aliases = extract_imports(module);
  ScopeTable scopes = extract_scopes(module);
  std::vector<CallSite> sites = extract_call_sites(module, aliases, scopes);
  std::vector<Diagnostic> out;
  auto push = [&out](std::optional<Diagnostic> d) {
    if (!d) return false;
    out.push_back(std::move(*d));
    return true;
  };
  for (const CallSite& site : sites) {
    if (site.callee_kind == CalleeKind::kBare) {
      if (options.bare_call) push(check_bare_call(site, aliases, scopes, kb));
      continue;
    }
    if (options.bare_call && push(check_unimported_alias(site, scopes, kb))) {
      continue;
    }
    // Unknown names are never also shape or intent findings: those rules
    // only look at known callables.
    auto target = resolve_target(site, kb);
    if (!target) continue;
    bool known = kb.lookup_callable(target->library->module_path,
                                    site.func_name, target->object_type);
    if (!known) {
      if (options.unknown_api) push(check_unknown_api(site, kb));
      continue;
    }
    if (options.argument_shape) push(check_argument_shape(site, kb));
    if (options.intent) push(check_intent_synonym(site, kb));
  }
  if (options.identifiers) {
    for (Diagnostic& d : check_identifiers(scopes, kb)) out.push_back(std::move(d));
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const Diagnostic& a, const Diagnostic& b) {
                     if (a.span.begin != b.span.begin) {
                       return a.span.begin < b.span.begin;
                     }
                     return a.category < b.category;
                   });
  return out;
}

}  // namespace kchlint
