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

#include "core/serialization.h"

#include <algorithm>

namespace kchlint {

using nlohmann::ordered_json;

namespace {

ordered_json sorted_array(const std::unordered_set<std::string>& set) {
  std::vector<std::string> v(set.begin(), set.end());
  std::sort(v.begin(), v.end());
  return ordered_json(v);
}

ordered_json group_json(const GroupStats& g) {
  ordered_json j;
  j["samples"] = g.samples;
  j["tp"] = g.tp;
  j["fp"] = g.fp;
  j["fn"] = g.fn;
  j["tn"] = g.tn;
  j["detection_rate"] = to_json(g.detection_rate());
  j["fix_correct"] = g.fix_correct;
  j["fix_accuracy"] = to_json(g.fix_accuracy());
  return j;
}

}  // namespace

ordered_json to_json(const Diagnostic& d) {
  ordered_json j;
  j["category"] = to_string(d.category);
  j["line"] = d.span.line;
  j["col"] = d.span.col + 1;
  j["begin"] = d.span.begin;
  j["end"] = d.span.end;
  j["subject"] = d.subject;
  j["evidence"] = d.evidence;
  j["confidence"] = to_string(d.confidence);
  if (d.suggestion) {
    ordered_json s;
    s["kind"] = to_string(d.suggestion->kind);
    s["replacement"] = d.suggestion->replacement;
    if (d.suggestion->required_import) {
      s["required_import"] = {{"module", d.suggestion->required_import->module_path},
                              {"alias", d.suggestion->required_import->alias}};
    } else {
      s["required_import"] = nullptr;
    }
    j["suggestion"] = std::move(s);
  } else {
    j["suggestion"] = nullptr;
  }
  j["message"] = describe(d);
  return j;
}

ordered_json to_json(const std::vector<Diagnostic>& diagnostics) {
  ordered_json j = ordered_json::array();
  for (const Diagnostic& d : diagnostics) j.push_back(to_json(d));
  return j;
}

ordered_json to_json(const FixResult& result) {
  ordered_json j;
  j["fixed_source"] = result.fixed_source;
  j["edits"] = result.edits.size();
  j["applied"] = to_json(result.applied);
  j["unfixed"] = to_json(result.unfixed);
  if (result.parse_failure) {
    j["parse_failure"] = *result.parse_failure;
  } else {
    j["parse_failure"] = nullptr;
  }
  return j;
}

ordered_json to_json(const Ratio& r) {
  ordered_json j;
  j["value"] = r.value;
  j["undefined"] = r.undefined;
  return j;
}

ordered_json to_json(const EvalReport& report, bool include_outcomes) {
  ordered_json j;
  j["samples"] = report.outcomes.size();
  j["tp"] = report.tp;
  j["fp"] = report.fp;
  j["fn"] = report.fn;
  j["tn"] = report.tn;
  j["precision"] = to_json(report.metrics.precision);
  j["recall"] = to_json(report.metrics.recall);
  j["f1"] = to_json(report.metrics.f1);
  j["accuracy"] = to_json(report.metrics.accuracy);
  j["fix_attempted"] = report.fix_attempted;
  j["fix_correct"] = report.fix_correct;
  j["fix_accuracy"] = to_json(report.fix_accuracy);
  ordered_json by_type = ordered_json::object();
  for (const auto& [k, g] : report.by_type) by_type[k] = group_json(g);
  j["by_type"] = std::move(by_type);
  ordered_json by_library = ordered_json::object();
  for (const auto& [k, g] : report.by_library) by_library[k] = group_json(g);
  j["by_library"] = std::move(by_library);
  ordered_json failures = ordered_json::array();
  for (const SampleOutcome& o : report.outcomes) {
    if (o.parse_failure) failures.push_back({{"id", o.id}, {"reason", *o.parse_failure}});
  }
  j["parse_failures"] = std::move(failures);
  if (include_outcomes) {
    ordered_json outcomes = ordered_json::array();
    for (const SampleOutcome& o : report.outcomes) {
      ordered_json e;
      e["id"] = o.id;
      e["detected"] = o.detected;
      e["diagnostics"] = o.diagnostics;
      e["fix_attempted"] = o.fix_attempted;
      e["fix_correct"] = o.fix_correct;
      outcomes.push_back(std::move(e));
    }
    j["outcomes"] = std::move(outcomes);
  }
  j["wall_time_seconds"] = report.wall_time_seconds;
  return j;
}

ordered_json library_to_json(const LibraryEntry& lib) {
  ordered_json j;
  j["module_path"] = lib.module_path;
  j["version"] = lib.version;
  if (lib.canonical_alias) {
    j["canonical_alias"] = *lib.canonical_alias;
  } else {
    j["canonical_alias"] = nullptr;
  }
  j["callables"] = sorted_array(lib.callables);
  ordered_json methods = ordered_json::object();
  for (const auto& [type, names] : lib.object_methods) methods[type] = sorted_array(names);
  j["object_methods"] = std::move(methods);
  ordered_json ctors = ordered_json::object();
  for (const auto& [callable, type] : lib.constructors) ctors[callable] = type;
  j["constructors"] = std::move(ctors);
  return j;
}

}  // namespace kchlint
