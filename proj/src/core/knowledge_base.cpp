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

#include "core/knowledge_base.h"

#include <algorithm>
#include <set>

#include "core/levenshtein.h"
#include "json.hpp"

namespace kchlint {

namespace embedded {
extern const std::string_view kBundledManifest;
}  // namespace embedded

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

bool is_identifier(std::string_view s) {
  if (s.empty()) return false;
  auto start = [](unsigned char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_' ||
           c >= 0x80;
  };
  if (!start(static_cast<unsigned char>(s.front()))) return false;
  return std::all_of(s.begin(), s.end(), [&](char c) {
    auto uc = static_cast<unsigned char>(c);
    return start(uc) || (uc >= '0' && uc <= '9');
  });
}

bool is_dotted_identifier(std::string_view s) {
  std::size_t start = 0;
  while (true) {
    std::size_t dot = s.find('.', start);
    if (!is_identifier(s.substr(start, dot - start))) return false;
    if (dot == std::string_view::npos) return true;
    start = dot + 1;
  }
}

std::string escape_pointer(const std::string& key) {
  std::string out;
  for (char c : key) {
    if (c == '~') {
      out += "~0";
    } else if (c == '/') {
      out += "~1";
    } else {
      out += c;
    }
  }
  return out;
}

class ManifestReader {
 public:
  KnowledgeBase read(const json& doc) {
    require_object(doc, "");
    check_keys(doc, "", {"schema_version", "libraries", "semantic"});
    if (!doc.contains("schema_version")) {
      throw ManifestError("/schema_version", "missing required field");
    }
    const json& version = doc["schema_version"];
    if (!version.is_number_integer() || version.get<long long>() != 1) {
      throw ManifestError("/schema_version", "unsupported schema version");
    }
    if (!doc.contains("libraries")) {
      throw ManifestError("/libraries", "missing required field");
    }
    KnowledgeBase kb;
    const json& libs = doc["libraries"];
    require_object(libs, "/libraries");
    for (const auto& [path, entry] : libs.items()) {
      std::string where = "/libraries/" + escape_pointer(path);
      if (!is_dotted_identifier(path)) {
        throw ManifestError(where, "invalid module path '" + path + "'");
      }
      kb.libraries.emplace(path, read_library(path, entry, where));
    }
    if (doc.contains("semantic")) {
      kb.semantic = read_semantic(doc["semantic"], "/semantic");
    }
    check_references(kb);
    return kb;
  }

 private:
  static void require_object(const json& j, const std::string& where) {
    if (!j.is_object()) throw ManifestError(where, "expected an object");
  }

  static void check_keys(const json& j, const std::string& where,
                         std::initializer_list<std::string_view> allowed) {
    for (const auto& [key, value] : j.items()) {
      if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
        throw ManifestError(where + "/" + escape_pointer(key),
                            "unknown field '" + key + "'");
      }
    }
  }

  static std::string string_field(const json& j, const std::string& where,
                                  const char* key) {
    if (!j.contains(key)) {
      throw ManifestError(where + "/" + key, "missing required field");
    }
    const json& v = j[key];
    if (!v.is_string()) throw ManifestError(where + "/" + key, "expected a string");
    return v.get<std::string>();
  }

  static std::vector<std::string> name_list(const json& j,
                                            const std::string& where) {
    if (!j.is_array()) throw ManifestError(where, "expected an array");
    std::vector<std::string> out;
    for (std::size_t i = 0; i < j.size(); ++i) {
      std::string item_where = where + "/" + std::to_string(i);
      if (!j[i].is_string()) throw ManifestError(item_where, "expected a string");
      std::string name = j[i].get<std::string>();
      if (!is_identifier(name)) {
        throw ManifestError(item_where, "invalid identifier '" + name + "'");
      }
      out.push_back(std::move(name));
    }
    return out;
  }

  LibraryEntry read_library(const std::string& path, const json& j,
                            const std::string& where) {
    require_object(j, where);
    check_keys(j, where, {"version", "canonical_alias", "callables",
                          "object_methods", "constructors"});
    LibraryEntry lib;
    lib.module_path = path;
    lib.version = string_field(j, where, "version");
    if (lib.version.empty()) {
      throw ManifestError(where + "/version", "version must not be empty");
    }
    if (j.contains("canonical_alias")) {
      std::string alias = string_field(j, where, "canonical_alias");
      if (!is_identifier(alias)) {
        throw ManifestError(where + "/canonical_alias",
                            "invalid identifier '" + alias + "'");
      }
      lib.canonical_alias = alias;
    }
    if (!j.contains("callables")) {
      throw ManifestError(where + "/callables", "missing required field");
    }
    for (std::string& name : name_list(j["callables"], where + "/callables")) {
      lib.callables.insert(std::move(name));
    }
    if (j.contains("object_methods")) {
      const json& methods = j["object_methods"];
      std::string mwhere = where + "/object_methods";
      require_object(methods, mwhere);
      for (const auto& [type, names] : methods.items()) {
        std::string twhere = mwhere + "/" + escape_pointer(type);
        if (!is_identifier(type)) {
          throw ManifestError(twhere, "invalid type name '" + type + "'");
        }
        auto& set = lib.object_methods[type];
        for (std::string& name : name_list(names, twhere)) set.insert(std::move(name));
      }
    }
    if (j.contains("constructors")) {
      const json& ctors = j["constructors"];
      std::string cwhere = where + "/constructors";
      require_object(ctors, cwhere);
      for (const auto& [callable, type] : ctors.items()) {
        std::string item_where = cwhere + "/" + escape_pointer(callable);
        if (!type.is_string() || !is_identifier(type.get<std::string>())) {
          throw ManifestError(item_where, "expected a type name");
        }
        if (!lib.has_callable(callable)) {
          throw DanglingRule(item_where, "constructor '" + callable +
                                             "' is not a callable of " + path);
        }
        lib.constructors.emplace(callable, type.get<std::string>());
      }
    }
    return lib;
  }

  template <typename Rule>
  std::vector<Rule> read_rules(const json& j, const std::string& where,
                               const char* first_key) {
    if (!j.is_array()) throw ManifestError(where, "expected an array");
    std::vector<Rule> rules;
    for (std::size_t i = 0; i < j.size(); ++i) {
      std::string item_where = where + "/" + std::to_string(i);
      require_object(j[i], item_where);
      check_keys(j[i], item_where, {first_key, "library", "callable"});
      Rule rule{string_field(j[i], item_where, first_key),
                string_field(j[i], item_where, "library"),
                string_field(j[i], item_where, "callable")};
      rule_paths_.emplace_back(item_where, rule.library, rule.callable);
      rules.push_back(std::move(rule));
    }
    return rules;
  }

  SemanticRules read_semantic(const json& j, const std::string& where) {
    require_object(j, where);
    check_keys(j, where, {"extension_map", "reader_family", "intent_synonyms",
                          "preferences"});
    SemanticRules rules;
    if (j.contains("extension_map")) {
      rules.extension_map = read_rules<ExtensionRule>(
          j["extension_map"], where + "/extension_map", "ext");
      for (std::size_t i = 0; i < rules.extension_map.size(); ++i) {
        const std::string& ext = rules.extension_map[i].ext;
        if (ext.size() < 2 || ext.front() != '.') {
          throw ManifestError(
              where + "/extension_map/" + std::to_string(i) + "/ext",
              "extension must start with '.'");
        }
      }
    }
    if (j.contains("reader_family")) {
      std::string rwhere = where + "/reader_family";
      auto names = name_list(j["reader_family"], rwhere);
      for (std::size_t i = 0; i < names.size(); ++i) {
        reader_paths_.emplace_back(rwhere + "/" + std::to_string(i), names[i]);
        if (std::find(rules.reader_family.begin(), rules.reader_family.end(),
                      names[i]) == rules.reader_family.end()) {
          rules.reader_family.push_back(names[i]);
        }
      }
    }
    if (j.contains("intent_synonyms")) {
      rules.intent_synonyms = read_rules<IntentSynonym>(
          j["intent_synonyms"], where + "/intent_synonyms", "word");
    }
    if (j.contains("preferences")) {
      rules.preferences = read_rules<Preference>(j["preferences"],
                                                 where + "/preferences", "intent");
    }
    return rules;
  }

  void check_references(const KnowledgeBase& kb) const {
    for (const auto& [where, library, callable] : rule_paths_) {
      const LibraryEntry* lib = kb.library(library);
      if (lib == nullptr) {
        throw DanglingRule(where, "rule references unknown library '" +
                                      library + "'");
      }
      if (!lib->has_callable(callable)) {
        throw DanglingRule(where, "rule references missing callable '" +
                                      library + "." + callable + "'");
      }
    }
    for (const auto& [where, callable] : reader_paths_) {
      if (kb.libraries_with_callable(callable).empty()) {
        throw DanglingRule(where, "reader '" + callable +
                                      "' is not a callable of any library");
      }
    }
  }

  std::vector<std::tuple<std::string, std::string, std::string>> rule_paths_;
  std::vector<std::pair<std::string, std::string>> reader_paths_;
};

std::vector<std::string> sorted(const std::unordered_set<std::string>& set) {
  std::vector<std::string> out(set.begin(), set.end());
  std::sort(out.begin(), out.end());
  return out;
}

template <typename Rule, typename Key>
void merge_rules(std::vector<Rule>& into, const std::vector<Rule>& from,
                 Key key) {
  for (const Rule& rule : from) {
    auto it = std::find_if(into.begin(), into.end(),
                           [&](const Rule& r) { return key(r) == key(rule); });
    if (it != into.end()) {
      *it = rule;
    } else {
      into.push_back(rule);
    }
  }
}

}  // namespace

const LibraryEntry* KnowledgeBase::library(std::string_view module_path) const {
  auto it = libraries.find(module_path);
  return it == libraries.end() ? nullptr : &it->second;
}

std::size_t KnowledgeBase::callable_count() const {
  std::size_t m = 0;
  for (const auto& [path, lib] : libraries) m += lib.callables.size();
  return m;
}

bool KnowledgeBase::lookup_callable(
    std::string_view module_path, std::string_view name,
    const std::optional<std::string>& object_type) const {
  const LibraryEntry* lib = library(module_path);
  if (lib == nullptr) throw UnknownLibrary(std::string(module_path));
  if (!object_type) return lib->has_callable(name);
  auto it = lib->object_methods.find(*object_type);
  return it != lib->object_methods.end() &&
         it->second.count(std::string(name)) != 0;
}

std::optional<SymbolMatch> KnowledgeBase::nearest_symbol(
    std::string_view module_path, std::string_view name,
    const std::optional<std::string>& object_type) const {
  const LibraryEntry* lib = library(module_path);
  if (lib == nullptr) throw UnknownLibrary(std::string(module_path));
  const std::unordered_set<std::string>* candidates = &lib->callables;
  if (object_type) {
    auto it = lib->object_methods.find(*object_type);
    if (it == lib->object_methods.end()) return std::nullopt;
    candidates = &it->second;
  }
  std::optional<SymbolMatch> best;
  for (const std::string& candidate : *candidates) {
    // Lengths alone bound the distance from below.
    std::size_t gap = candidate.size() > name.size()
                          ? candidate.size() - name.size()
                          : name.size() - candidate.size();
    if (gap > 2) continue;
    std::size_t d = levenshtein(name, candidate);
    if (!within_suggestion_threshold(name, d)) continue;
    if (!best || d < best->distance ||
        (d == best->distance && candidate < best->candidate)) {
      best = SymbolMatch{candidate, d};
    }
  }
  return best;
}

std::optional<std::string> KnowledgeBase::extension_callable(
    std::string_view ext, std::string_view library) const {
  for (const ExtensionRule& rule : semantic.extension_map) {
    if (rule.ext == ext && rule.library == library) return rule.callable;
  }
  return std::nullopt;
}

bool KnowledgeBase::in_reader_family(std::string_view callable) const {
  return std::find(semantic.reader_family.begin(), semantic.reader_family.end(),
                   callable) != semantic.reader_family.end();
}

std::vector<std::string> KnowledgeBase::libraries_with_callable(
    std::string_view name) const {
  std::vector<std::string> out;
  for (const auto& [path, lib] : libraries) {
    if (lib.has_callable(name)) out.push_back(path);
  }
  return out;
}

std::optional<std::string> KnowledgeBase::constructed_type(
    std::string_view module_path, std::string_view callable) const {
  const LibraryEntry* lib = library(module_path);
  if (lib == nullptr) return std::nullopt;
  auto it = lib->constructors.find(std::string(callable));
  if (it == lib->constructors.end()) return std::nullopt;
  return it->second;
}

bool KnowledgeBase::is_canonical_alias(std::string_view name) const {
  return std::any_of(libraries.begin(), libraries.end(), [&](const auto& kv) {
    return kv.second.canonical_alias && *kv.second.canonical_alias == name;
  });
}

KnowledgeBase load_manifest(std::string_view bytes) {
  json doc;
  try {
    doc = json::parse(bytes);
  } catch (const json::parse_error& e) {
    throw ManifestError("", std::string("malformed document: ") + e.what());
  }
  return ManifestReader().read(doc);
}

std::string serialize_manifest(const KnowledgeBase& kb) {
  ordered_json doc;
  doc["schema_version"] = 1;
  ordered_json libs = ordered_json::object();
  for (const auto& [path, lib] : kb.libraries) {
    ordered_json entry;
    entry["version"] = lib.version;
    if (lib.canonical_alias) entry["canonical_alias"] = *lib.canonical_alias;
    entry["callables"] = sorted(lib.callables);
    ordered_json methods = ordered_json::object();
    for (const auto& [type, names] : lib.object_methods) {
      methods[type] = sorted(names);
    }
    entry["object_methods"] = std::move(methods);
    ordered_json ctors = ordered_json::object();
    for (const auto& [callable, type] : lib.constructors) ctors[callable] = type;
    entry["constructors"] = std::move(ctors);
    libs[path] = std::move(entry);
  }
  doc["libraries"] = std::move(libs);
  ordered_json semantic;
  auto rules = [](const auto& list, const char* first_key, auto first) {
    ordered_json out = ordered_json::array();
    for (const auto& r : list) {
      ordered_json item;
      item[first_key] = first(r);
      item["library"] = r.library;
      item["callable"] = r.callable;
      out.push_back(std::move(item));
    }
    return out;
  };
  semantic["extension_map"] = rules(kb.semantic.extension_map, "ext",
                                    [](const ExtensionRule& r) { return r.ext; });
  semantic["reader_family"] = kb.semantic.reader_family;
  semantic["intent_synonyms"] = rules(
      kb.semantic.intent_synonyms, "word",
      [](const IntentSynonym& r) { return r.word; });
  semantic["preferences"] = rules(kb.semantic.preferences, "intent",
                                  [](const Preference& r) { return r.intent; });
  doc["semantic"] = std::move(semantic);
  return doc.dump(1) + "\n";
}

KnowledgeBase merge(const KnowledgeBase& a, const KnowledgeBase& b) {
  KnowledgeBase out = a;
  for (const auto& [path, lib] : b.libraries) {
    auto it = out.libraries.find(path);
    if (it == out.libraries.end()) {
      out.libraries.emplace(path, lib);
      continue;
    }
    LibraryEntry& into = it->second;
    into.version = lib.version;
    if (lib.canonical_alias) into.canonical_alias = lib.canonical_alias;
    into.callables.insert(lib.callables.begin(), lib.callables.end());
    for (const auto& [type, names] : lib.object_methods) {
      into.object_methods[type].insert(names.begin(), names.end());
    }
    for (const auto& [callable, type] : lib.constructors) {
      into.constructors[callable] = type;
    }
  }
  merge_rules(out.semantic.extension_map, b.semantic.extension_map,
              [](const ExtensionRule& r) { return std::pair(r.ext, r.library); });
  merge_rules(out.semantic.intent_synonyms, b.semantic.intent_synonyms,
              [](const IntentSynonym& r) { return r.word; });
  merge_rules(out.semantic.preferences, b.semantic.preferences,
              [](const Preference& r) { return r.intent; });
  for (const std::string& reader : b.semantic.reader_family) {
    if (!out.in_reader_family(reader)) out.semantic.reader_family.push_back(reader);
  }
  return out;
}

std::string_view bundled_manifest_text() { return embedded::kBundledManifest; }

const KnowledgeBase& bundled_knowledge_base() {
  static const KnowledgeBase kb = load_manifest(embedded::kBundledManifest);
  return kb;
}

}  // namespace kchlint
