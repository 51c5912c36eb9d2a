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

#include "core/evalharness.h"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <random>
#include <set>
#include <sstream>
#include <unordered_map>

#include "json.hpp"

#include "core/extraction.h"
#include "core/token.h"
#include "core/validation.h"

namespace kchlint {

namespace {

using nlohmann::json;

constexpr std::string_view kTypeNames[] = {
    "mistyped-api", "missing-import", "contextual-mismatch", "identifier-conflict"};

bool safe_id(std::string_view id) {
  if (id.empty() || id.front() == '.') return false;
  return std::all_of(id.begin(), id.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_' ||
           c == '-' || c == '.';
  });
}

bool safe_relative(const std::filesystem::path& p) {
  if (p.empty() || p.is_absolute()) return false;
  return std::none_of(p.begin(), p.end(),
                      [](const std::filesystem::path& part) { return part == ".."; });
}

std::optional<std::string> read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << text;
  if (!out) throw DatasetError("", "cannot write " + path.string());
}

std::optional<Module> try_parse(std::string_view source, std::string* error) {
  try {
    return parse(source);
  } catch (const LexError& e) {
    if (error != nullptr) *error = e.what();
  } catch (const SyntaxError& e) {
    if (error != nullptr) *error = e.what();
  }
  return std::nullopt;
}

Ratio ratio(double num, double den) {
  if (den == 0.0) return Ratio{1.0, true};
  return Ratio{num / den, false};
}

// ---- mutation helpers ----

class Rng {
 public:
  Rng(const Sample& sample, HallucType kind, std::uint64_t seed) {
    std::uint64_t h = 1469598103934665603ULL;  // FNV-1a
    for (char c : sample.id) {
      h ^= static_cast<unsigned char>(c);
      h *= 1099511628211ULL;
    }
    h ^= static_cast<std::uint64_t>(kind) + 0x9e3779b97f4a7c15ULL;
    engine_.seed(h ^ seed);
  }
  // Modulo rather than a distribution so sequences match across standard
  // libraries.
  std::size_t pick(std::size_t n) { return static_cast<std::size_t>(engine_() % n); }

 private:
  std::mt19937_64 engine_;
};

bool valid_identifier(std::string_view s) {
  if (s.empty()) return false;
  auto head = static_cast<unsigned char>(s.front());
  if (std::isalpha(head) == 0 && s.front() != '_') return false;
  for (char c : s) {
    if (std::isalnum(static_cast<unsigned char>(c)) == 0 && c != '_') return false;
  }
  return !is_python_keyword(s);
}

// All distinct single swap/drop/duplicate edits of `name`, sorted.
std::vector<std::string> single_edits(const std::string& name) {
  std::set<std::string> out;
  for (std::size_t i = 0; i + 1 < name.size(); ++i) {
    if (name[i] == name[i + 1]) continue;
    std::string s = name;
    std::swap(s[i], s[i + 1]);
    out.insert(s);
  }
  for (std::size_t i = 0; i < name.size() && name.size() > 1; ++i) {
    out.insert(name.substr(0, i) + name.substr(i + 1));
  }
  for (std::size_t i = 0; i < name.size(); ++i) {
    out.insert(name.substr(0, i + 1) + name.substr(i));
  }
  out.erase(name);
  return {out.begin(), out.end()};
}

Expr* find_expr(Module& module, NodeId id) {
  Expr* found = nullptr;
  for_each_expr(module, [&](Expr& e) {
    if (e.id == id) found = &e;
  });
  return found;
}

const Expr* find_expr(const Module& module, NodeId id) {
  const Expr* found = nullptr;
  for_each_expr(module, [&](const Expr& e, const Stmt&) {
    if (e.id == id) found = &e;
  });
  return found;
}

struct Mutation {
  Module module;
  std::string library;
};

bool kb_qualified_site(const CallSite& site, const KnowledgeBase& kb) {
  if (site.callee_kind != CalleeKind::kQualified || site.callee_is_name) return false;
  const LibraryEntry* lib = kb.library(site.base_path);
  return lib != nullptr && lib->has_callable(site.func_name);
}

std::optional<Mutation> mutate_mistyped(const Module& module, Rng& rng,
                                        const KnowledgeBase& kb) {
  AliasMap aliases = extract_imports(module);
  struct Point {
    const CallSite* site;
    std::vector<std::string> edits;
  };
  std::vector<CallSite> sites = extract_call_sites(module, aliases);
  std::vector<Point> points;
  for (const CallSite& site : sites) {
    if (!kb_qualified_site(site, kb)) continue;
    const LibraryEntry* lib = kb.library(site.base_path);
    Point p{&site, {}};
    for (std::string& e : single_edits(site.func_name)) {
      if (valid_identifier(e) && !lib->has_callable(e)) p.edits.push_back(std::move(e));
    }
    if (!p.edits.empty()) points.push_back(std::move(p));
  }
  if (points.empty()) return std::nullopt;
  const Point& p = points[rng.pick(points.size())];
  const std::string& typo = p.edits[rng.pick(p.edits.size())];
  Mutation m{module, p.site->base_path};
  find_expr(m.module, p.site->callee_id)->as<Attribute>()->attr = typo;
  return m;
}

std::optional<Mutation> mutate_missing_import(const Module& module, Rng& rng,
                                              const KnowledgeBase& kb) {
  (void)rng;  // at most one eligible import: the last of the leading block
  auto first_code = std::find_if(module.body.begin(), module.body.end(),
                                 [](const Stmt& s) { return !s.is_import(); });
  std::size_t k = static_cast<std::size_t>(first_code - module.body.begin());
  if (k == 0) return std::nullopt;
  const Stmt& stmt = module.body[k - 1];
  const auto* imp = stmt.as<Import>();
  if (imp == nullptr || imp->names.size() != 1 || !stmt.comments.empty()) {
    return std::nullopt;
  }
  const ImportName& name = imp->names.front();
  const LibraryEntry* lib = kb.library(name.path);
  if (lib == nullptr) return std::nullopt;
  std::string canonical = lib->canonical_alias.value_or(name.path);
  std::string bound = name.alias.empty() ? name.path : name.alias;
  if (bound != canonical || name.alias == name.path) return std::nullopt;
  if (bound.find('.') != std::string::npos) return std::nullopt;

  AliasMap aliases = extract_imports(module);
  for (const auto& [alias, entry] : aliases.entries()) {
    if (entry.target == name.path && alias != bound) return std::nullopt;
  }
  ScopeTable scopes = extract_scopes(module);
  std::size_t alias_defs = 0;
  std::vector<NodeId> alias_uses;
  for (const Scope& scope : scopes.scopes()) {
    if (auto it = scope.defined.find(bound); it != scope.defined.end()) {
      alias_defs += it->second.size();
    }
    for (const NameUse& use : scope.uses) {
      if (use.name == bound) alias_uses.push_back(use.id);
    }
  }
  if (alias_defs != 1 || alias_uses.size() != 1) return std::nullopt;

  std::vector<CallSite> sites = extract_call_sites(module, aliases, scopes);
  const CallSite* site = nullptr;
  for (const CallSite& s : sites) {
    if (s.callee_kind != CalleeKind::kQualified || s.callee_is_name ||
        s.base_path != name.path) {
      continue;
    }
    const Expr* callee = find_expr(module, s.callee_id);
    const auto* attr = callee != nullptr ? callee->as<Attribute>() : nullptr;
    if (attr != nullptr && attr->value->id == alias_uses.front()) site = &s;
  }
  if (site == nullptr) return std::nullopt;
  const std::string& func = site->func_name;
  if (!lib->has_callable(func) || is_builtin_name(func) ||
      kb.libraries_with_callable(func).size() != 1) {
    return std::nullopt;
  }
  for (const Scope& scope : scopes.scopes()) {
    if (scope.defined.count(func) != 0) return std::nullopt;
    for (const NameUse& use : scope.uses) {
      if (use.name == func) return std::nullopt;
    }
  }

  Mutation m{module, name.path};
  m.module.body.erase(m.module.body.begin() + static_cast<std::ptrdiff_t>(k - 1));
  Expr* callee = find_expr(m.module, site->callee_id);
  Span span = callee->span;
  callee->node = Name{func};
  callee->span = span;
  return m;
}

std::optional<Mutation> mutate_contextual(const Module& module, Rng& rng,
                                          const KnowledgeBase& kb) {
  AliasMap aliases = extract_imports(module);
  std::vector<CallSite> sites = extract_call_sites(module, aliases);
  struct Point {
    const CallSite* site;
    std::vector<std::string> readers;
  };
  std::vector<Point> points;
  for (const CallSite& site : sites) {
    if (!kb_qualified_site(site, kb) || !kb.in_reader_family(site.func_name)) continue;
    auto first = std::find_if(site.args.begin(), site.args.end(),
                              [](const ArgFeature& a) { return a.position == 0; });
    if (first == site.args.end() || !first->file_extension) continue;
    auto mapped = kb.extension_callable(*first->file_extension, site.base_path);
    if (!mapped || *mapped != site.func_name) continue;
    const LibraryEntry* lib = kb.library(site.base_path);
    Point p{&site, {}};
    for (const std::string& r : kb.semantic.reader_family) {
      if (r != site.func_name && lib->has_callable(r)) p.readers.push_back(r);
    }
    if (!p.readers.empty()) points.push_back(std::move(p));
  }
  if (points.empty()) return std::nullopt;
  const Point& p = points[rng.pick(points.size())];
  Mutation m{module, p.site->base_path};
  find_expr(m.module, p.site->callee_id)->as<Attribute>()->attr =
      p.readers[rng.pick(p.readers.size())];
  return m;
}

std::optional<Mutation> mutate_identifier(const Module& module, Rng& rng,
                                          const KnowledgeBase& kb) {
  ScopeTable scopes = extract_scopes(module);
  std::set<std::string> all_defined;
  for (const Scope& scope : scopes.scopes()) {
    for (const auto& [name, defs] : scope.defined) all_defined.insert(name);
  }
  auto reserved = [&](const std::string& n) {
    return all_defined.count(n) != 0 || is_builtin_name(n) ||
           kb.library(n) != nullptr || kb.is_canonical_alias(n) ||
           !kb.libraries_with_callable(n).empty();
  };
  struct Point {
    NodeId id;
    std::vector<std::string> edits;
  };
  std::vector<Point> points;
  for (std::size_t i = 0; i < scopes.scopes().size(); ++i) {
    int scope = static_cast<int>(i);
    for (const NameUse& use : scopes.scopes()[i].uses) {
      const auto* defs = scopes.lookup(scope, use.name);
      if (defs == nullptr || use.name.size() < 3) continue;
      bool user_defined = std::none_of(defs->begin(), defs->end(), [](const Definition& d) {
        return d.kind == DefinitionKind::kImport;
      });
      if (!user_defined) continue;
      Point p{use.id, {}};
      for (std::string& e : single_edits(use.name)) {
        if (valid_identifier(e) && !reserved(e)) p.edits.push_back(std::move(e));
      }
      if (!p.edits.empty()) points.push_back(std::move(p));
    }
  }
  if (points.empty()) return std::nullopt;
  const Point& p = points[rng.pick(points.size())];
  Mutation m{module, {}};
  find_expr(m.module, p.id)->as<Name>()->id = p.edits[rng.pick(p.edits.size())];
  return m;
}

}  // namespace

std::string_view to_string(Label label) {
  return label == Label::kClean ? "clean" : "hallucinated";
}

std::string_view to_string(HallucType type) {
  return kTypeNames[static_cast<std::size_t>(type)];
}

std::optional<HallucType> parse_halluc_type(std::string_view text) {
  for (std::size_t i = 0; i < std::size(kTypeNames); ++i) {
    if (kTypeNames[i] == text) return static_cast<HallucType>(i);
  }
  return std::nullopt;
}

std::vector<Sample> load_dataset(const std::filesystem::path& directory) {
  auto index_text = read_file(directory / "index.json");
  if (!index_text) {
    throw DatasetError("", "cannot read " + (directory / "index.json").string());
  }
  json index;
  try {
    index = json::parse(*index_text);
  } catch (const json::parse_error& e) {
    throw DatasetError("", std::string("index.json is not valid JSON: ") + e.what());
  }
  if (!index.is_object() || !index.contains("samples") || !index["samples"].is_array()) {
    throw DatasetError("", "index.json must be an object with a 'samples' array");
  }
  static const std::set<std::string> kKeys = {"id",      "label", "halluc_type",
                                              "library", "code",  "expected"};
  std::vector<Sample> out;
  std::set<std::string> seen;
  for (const json& entry : index["samples"]) {
    if (!entry.is_object() || !entry.contains("id") || !entry["id"].is_string()) {
      throw DatasetError("", "every sample needs a string 'id'");
    }
    Sample s;
    s.id = entry["id"].get<std::string>();
    auto fail = [&](const std::string& reason) { throw DatasetError(s.id, reason); };
    if (!safe_id(s.id)) fail("id may only contain letters, digits, '_', '-' and '.'");
    if (!seen.insert(s.id).second) fail("duplicate id");
    for (const auto& [key, value] : entry.items()) {
      if (kKeys.count(key) == 0) fail("unknown key '" + key + "'");
    }
    auto string_field = [&](const char* key) -> std::optional<std::string> {
      if (!entry.contains(key) || entry[key].is_null()) return std::nullopt;
      if (!entry[key].is_string()) fail(std::string("'") + key + "' must be a string");
      return entry[key].get<std::string>();
    };
    auto label = string_field("label");
    if (!label) fail("missing 'label'");
    if (*label == "clean") {
      s.label = Label::kClean;
    } else if (*label == "hallucinated") {
      s.label = Label::kHallucinated;
    } else {
      fail("label must be 'clean' or 'hallucinated'");
    }
    if (auto type = string_field("halluc_type")) {
      s.halluc_type = parse_halluc_type(*type);
      if (!s.halluc_type) fail("unknown halluc_type '" + *type + "'");
    }
    if (s.label == Label::kHallucinated && !s.halluc_type) {
      fail("hallucinated sample without halluc_type");
    }
    if (s.label == Label::kClean && s.halluc_type) fail("clean sample with halluc_type");
    s.library = string_field("library");

    auto load_rel = [&](const std::string& rel) {
      std::filesystem::path p(rel);
      if (!safe_relative(p)) fail("path '" + rel + "' must be relative to the dataset");
      auto text = read_file(directory / p);
      if (!text) fail("cannot read " + (directory / p).string());
      return *text;
    };
    auto code = string_field("code");
    if (!code) fail("missing 'code'");
    s.code = load_rel(*code);
    if (auto expected = string_field("expected")) {
      s.expected_fixed_code = load_rel(*expected);
      std::string error;
      if (!try_parse(*s.expected_fixed_code, &error)) {
        fail("expected fix does not parse: " + error);
      }
    }
    out.push_back(std::move(s));
  }
  return out;
}

void write_dataset(const std::filesystem::path& directory,
                   const std::vector<Sample>& samples) {
  std::error_code ec;
  std::filesystem::create_directories(directory / "samples", ec);
  bool any_expected = std::any_of(samples.begin(), samples.end(), [](const Sample& s) {
    return s.expected_fixed_code.has_value();
  });
  if (any_expected) std::filesystem::create_directories(directory / "expected", ec);
  if (ec) throw DatasetError("", "cannot create " + directory.string());

  nlohmann::ordered_json list = nlohmann::ordered_json::array();
  for (const Sample& s : samples) {
    if (!safe_id(s.id)) throw DatasetError(s.id, "id is not filename-safe");
    nlohmann::ordered_json entry;
    entry["id"] = s.id;
    entry["label"] = to_string(s.label);
    if (s.halluc_type) entry["halluc_type"] = to_string(*s.halluc_type);
    if (s.library) entry["library"] = *s.library;
    entry["code"] = "samples/" + s.id + ".py";
    write_file(directory / "samples" / (s.id + ".py"), s.code);
    if (s.expected_fixed_code) {
      entry["expected"] = "expected/" + s.id + ".py";
      write_file(directory / "expected" / (s.id + ".py"), *s.expected_fixed_code);
    }
    list.push_back(std::move(entry));
  }
  nlohmann::ordered_json index;
  index["samples"] = std::move(list);
  write_file(directory / "index.json", index.dump(2) + "\n");
}

Metrics compute_metrics(std::size_t tp, std::size_t fp, std::size_t fn,
                        std::size_t tn) {
  Metrics m;
  auto d = [](std::size_t v) { return static_cast<double>(v); };
  m.precision = ratio(d(tp), d(tp + fp));
  m.recall = ratio(d(tp), d(tp + fn));
  double sum = m.precision.value + m.recall.value;
  m.f1 = sum == 0.0 ? Ratio{0.0, false}
                    : Ratio{2.0 * m.precision.value * m.recall.value / sum,
                            m.precision.undefined || m.recall.undefined};
  m.accuracy = ratio(d(tp + tn), d(tp + fp + fn + tn));
  return m;
}

Ratio GroupStats::detection_rate() const {
  return ratio(static_cast<double>(tp), static_cast<double>(tp + fn));
}

Ratio GroupStats::fix_accuracy() const {
  return ratio(static_cast<double>(fix_correct), static_cast<double>(tp));
}

EvalReport evaluate(const std::vector<Sample>& samples, const KnowledgeBase& kb,
                    const EvalOptions& options) {
  auto start = std::chrono::steady_clock::now();
  EvalReport report;
  for (const Sample& sample : samples) {
    SampleOutcome outcome;
    outcome.id = sample.id;
    std::string error;
    std::optional<Module> module = try_parse(sample.code, &error);
    std::vector<Diagnostic> diagnostics;
    if (module) {
      diagnostics = validate(*module, kb);
    } else {
      outcome.parse_failure = error;
    }
    outcome.diagnostics = diagnostics.size();
    outcome.detected = !diagnostics.empty();
    bool hallucinated = sample.label == Label::kHallucinated;
    if (hallucinated && outcome.detected) {
      outcome.fix_attempted = true;
      if (sample.expected_fixed_code) {
        FixPlan plan = plan_fixes(*module, diagnostics, options.fix);
        Module fixed = apply_fixes(*module, plan.edits);
        std::optional<Module> expected = try_parse(*sample.expected_fixed_code, nullptr);
        outcome.fix_correct = expected && fixed == *expected;
      }
    }

    GroupStats& by_type =
        report.by_type[hallucinated && sample.halluc_type
                           ? std::string(to_string(*sample.halluc_type))
                           : std::string("clean")];
    GroupStats& by_lib = report.by_library[sample.library.value_or("-")];
    for (GroupStats* g : {&by_type, &by_lib}) {
      ++g->samples;
      if (hallucinated) {
        ++(outcome.detected ? g->tp : g->fn);
      } else {
        ++(outcome.detected ? g->fp : g->tn);
      }
      if (outcome.fix_correct) ++g->fix_correct;
    }
    if (hallucinated) {
      ++(outcome.detected ? report.tp : report.fn);
    } else {
      ++(outcome.detected ? report.fp : report.tn);
    }
    if (outcome.fix_attempted) ++report.fix_attempted;
    if (outcome.fix_correct) ++report.fix_correct;
    report.outcomes.push_back(std::move(outcome));
  }
  report.metrics = compute_metrics(report.tp, report.fp, report.fn, report.tn);
  report.fix_accuracy =
      ratio(static_cast<double>(report.fix_correct), static_cast<double>(report.tp));
  report.wall_time_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

Sample mutate(const Sample& clean, HallucType kind, std::uint64_t seed,
              const KnowledgeBase& kb) {
  std::optional<Module> module = try_parse(clean.code, nullptr);
  if (!module || clean.label != Label::kClean) throw NoMutationPoint(kind);
  Rng rng(clean, kind, seed);
  std::optional<Mutation> m;
  switch (kind) {
    case HallucType::kMistypedApi: m = mutate_mistyped(*module, rng, kb); break;
    case HallucType::kMissingImport: m = mutate_missing_import(*module, rng, kb); break;
    case HallucType::kContextualMismatch: m = mutate_contextual(*module, rng, kb); break;
    case HallucType::kIdentifierConflict: m = mutate_identifier(*module, rng, kb); break;
  }
  if (!m) throw NoMutationPoint(kind);
  Sample out;
  out.id = clean.id + "." + std::string(to_string(kind)) + "." + std::to_string(seed);
  out.code = unparse(m->module);
  out.label = Label::kHallucinated;
  out.halluc_type = kind;
  out.library = m->library.empty() ? clean.library : std::optional(m->library);
  out.expected_fixed_code = unparse(*module);
  return out;
}

std::vector<Sample> synthesize(const std::vector<Sample>& clean, HallucType kind,
                               std::size_t count, std::uint64_t seed,
                               const KnowledgeBase& kb) {
  std::vector<Sample> out;
  if (clean.empty()) return out;
  std::vector<bool> barren(clean.size(), false);
  std::size_t barren_count = 0;
  for (std::uint64_t k = 0; out.size() < count && barren_count < clean.size(); ++k) {
    std::size_t i = static_cast<std::size_t>(k % clean.size());
    if (barren[i]) continue;
    try {
      out.push_back(mutate(clean[i], kind, seed + k, kb));
    } catch (const NoMutationPoint&) {
      barren[i] = true;
      ++barren_count;
    }
  }
  return out;
}

}  // namespace kchlint
