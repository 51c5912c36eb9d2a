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

#include <doctest.h>

#include "core/knowledge_base.h"
#include "oracles/levenshtein_oracle.h"
#include "core/levenshtein.h"

using namespace kchlint;

namespace {

const char* kSmall = R"({
  "schema_version": 1,
  "libraries": {
    "numpy": {"version": "2.0", "canonical_alias": "np",
              "callables": ["mean", "sum", "array"],
              "object_methods": {"ndarray": ["reshape"]},
              "constructors": {"array": "ndarray"}}
  },
  "semantic": {
    "extension_map": [],
    "reader_family": [],
    "intent_synonyms": [{"word": "average", "library": "numpy", "callable": "mean"}],
    "preferences": []
  }
})";

std::string with_semantic(const std::string& rules) {
  return std::string(R"({"schema_version": 1, "libraries": {"numpy": {"version": "1",
      "callables": ["mean"]}}, "semantic": )") + rules + "}";
}

void expect_manifest_error(const std::string& text, const std::string& path) {
  try {
    load_manifest(text);
    FAIL("expected ManifestError for " << text);
  } catch (const ManifestError& e) {
    CHECK(e.path() == path);
  }
}

}  // namespace

TEST_CASE("bundled manifest contents") {
  const KnowledgeBase& kb = bundled_knowledge_base();
  for (const char* lib : {"numpy", "pandas", "requests", "matplotlib.pyplot", "json"}) {
    REQUIRE_MESSAGE(kb.library(lib) != nullptr, lib);
    CHECK_FALSE(kb.library(lib)->version.empty());
  }
  const LibraryEntry& pd = *kb.library("pandas");
  for (const char* c : {"read_csv", "read_excel", "read_json", "DataFrame", "concat", "merge"}) {
    CHECK_MESSAGE(pd.has_callable(c), c);
  }
  REQUIRE(pd.object_methods.count("DataFrame") == 1);
  REQUIRE(pd.object_methods.count("Series") == 1);
  for (const char* m : {"head", "describe", "groupby", "to_csv"}) {
    CHECK_MESSAGE(pd.object_methods.at("DataFrame").count(m) == 1, m);
  }
  CHECK(pd.canonical_alias == "pd");
  CHECK(kb.library("numpy")->canonical_alias == "np");
  CHECK(kb.library("matplotlib.pyplot")->canonical_alias == "plt");
  CHECK(kb.library("requests")->canonical_alias == "requests");
  CHECK(kb.library("json")->canonical_alias == "json");
  for (const char* c : {"load", "loads", "dump", "dumps"}) {
    CHECK(kb.library("json")->has_callable(c));
  }
}

TEST_CASE("load_manifest: callable count") {
  KnowledgeBase kb = load_manifest(kSmall);
  CHECK(kb.callable_count() == 3);
  KnowledgeBase empty = load_manifest(R"({"schema_version": 1, "libraries": {}})");
  CHECK(empty.callable_count() == 0);
  CHECK(empty.libraries.empty());
}

TEST_CASE("load_manifest: schema violations carry a document path") {
  expect_manifest_error("[]", "");
  expect_manifest_error("{not json", "");
  expect_manifest_error(R"({"schema_version": 2, "libraries": {}})", "/schema_version");
  expect_manifest_error(R"({"schema_version": 1, "libraries": {}, "extra": 1})", "/extra");
  expect_manifest_error(R"({"schema_version": 1, "libraries": {"x": {"callables": []}}})",
                        "/libraries/x/version");
  expect_manifest_error(
      R"({"schema_version": 1, "libraries": {"x": {"version": "1", "callables": [3]}}})",
      "/libraries/x/callables/0");
  expect_manifest_error(
      R"({"schema_version": 1, "libraries": {"x": {"version": "1", "callables": [],
          "canonical_alias": "not an id"}}})",
      "/libraries/x/canonical_alias");
  expect_manifest_error(with_semantic(R"({"extension_map": [{"ext": "csv",
      "library": "numpy", "callable": "mean"}]})"),
                        "/semantic/extension_map/0/ext");
}

TEST_CASE("load_manifest: dangling semantic rule") {
  CHECK_THROWS_AS(load_manifest(with_semantic(
                      R"({"intent_synonyms": [{"word": "average", "library": "numpy",
                          "callable": "meen"}]})")),
                  DanglingRule);
  CHECK_THROWS_AS(load_manifest(with_semantic(
                      R"({"extension_map": [{"ext": ".csv", "library": "pandas",
                          "callable": "read_csv"}]})")),
                  DanglingRule);
}

TEST_CASE("lookup_callable") {
  const KnowledgeBase& kb = bundled_knowledge_base();
  CHECK(kb.lookup_callable("pandas", "read_csv"));
  CHECK_FALSE(kb.lookup_callable("pandas", "read_exel"));
  CHECK(kb.lookup_callable("json", "loads"));
  CHECK(kb.lookup_callable("pandas", "head", std::string("DataFrame")));
  CHECK_FALSE(kb.lookup_callable("pandas", "read_csv", std::string("DataFrame")));
  CHECK_THROWS_AS(kb.lookup_callable("scipy", "stats"), UnknownLibrary);
}

TEST_CASE("nearest_symbol: examples") {
  const KnowledgeBase& kb = bundled_knowledge_base();
  CHECK(kb.nearest_symbol("pandas", "read_exel") == SymbolMatch{"read_excel", 1});
  CHECK(kb.nearest_symbol("numpy", "arrya") == SymbolMatch{"array", 2});
  CHECK(kb.nearest_symbol("matplotlib.pyplot", "plotx") == SymbolMatch{"plot", 1});
  CHECK_FALSE(kb.nearest_symbol("pandas", "zzqq").has_value());
  CHECK(kb.nearest_symbol("pandas", "hed", std::string("DataFrame")) ==
        SymbolMatch{"head", 1});
  CHECK_THROWS_AS(kb.nearest_symbol("scipy", "x"), UnknownLibrary);
}

TEST_CASE("nearest_symbol: identity recall") {
  const KnowledgeBase& kb = bundled_knowledge_base();
  for (const auto& [path, lib] : kb.libraries) {
    for (const std::string& c : lib.callables) {
      REQUIRE(kb.nearest_symbol(path, c) == SymbolMatch{c, 0});
    }
  }
}

TEST_CASE("nearest_symbol agrees with exhaustive search") {
  const KnowledgeBase& kb = bundled_knowledge_base();
  const LibraryEntry& np = *kb.library("numpy");
  for (const char* probe : {"arrya", "meen", "zeors", "linspce", "sqrtt", "dott", "x",
                            "reshap", "clipp", "stdd", "onse"}) {
    auto expected = oracle::nearest(probe, np.callables, [](std::string_view n, std::size_t d) {
      return within_suggestion_threshold(n, d);
    });
    auto got = kb.nearest_symbol("numpy", probe);
    REQUIRE_MESSAGE(got.has_value() == expected.has_value(), probe);
    if (got) {
      CHECK_MESSAGE(got->candidate == expected->first, probe);
      CHECK(got->distance == expected->second);
    }
  }
}

TEST_CASE("semantic queries") {
  const KnowledgeBase& kb = bundled_knowledge_base();
  CHECK(kb.extension_callable(".csv", "pandas") == "read_csv");
  CHECK(kb.extension_callable(".xlsx", "pandas") == "read_excel");
  CHECK(kb.extension_callable(".json", "pandas") == "read_json");
  CHECK(kb.extension_callable(".json", "json") == "load");
  CHECK_FALSE(kb.extension_callable(".csv", "numpy").has_value());
  CHECK(kb.in_reader_family("read_excel"));
  CHECK_FALSE(kb.in_reader_family("head"));
  CHECK(kb.libraries_with_callable("read_csv") == std::vector<std::string>{"pandas"});
  CHECK(kb.constructed_type("pandas", "read_csv") == "DataFrame");
  CHECK(kb.is_canonical_alias("np"));
  CHECK_FALSE(kb.is_canonical_alias("numpy"));
}

TEST_CASE("serialize round-trip") {
  const KnowledgeBase& kb = bundled_knowledge_base();
  std::string text = serialize_manifest(kb);
  KnowledgeBase again = load_manifest(text);
  CHECK(again == kb);
  CHECK(serialize_manifest(again) == text);
  KnowledgeBase small = load_manifest(kSmall);
  CHECK(load_manifest(serialize_manifest(small)) == small);
}

TEST_CASE("merge") {
  const KnowledgeBase& kb = bundled_knowledge_base();
  KnowledgeBase empty;
  CHECK(merge(kb, empty) == kb);
  CHECK(merge(empty, kb) == kb);
  CHECK(merge(kb, kb) == kb);

  KnowledgeBase a = load_manifest(R"({"schema_version": 1, "libraries": {
      "lib": {"version": "2.0", "callables": ["f", "g"]}}})");
  KnowledgeBase b = load_manifest(R"({"schema_version": 1, "libraries": {
      "lib": {"version": "2.1", "callables": ["g", "h"]},
      "other": {"version": "1", "callables": ["k"]}}})");
  KnowledgeBase m = merge(a, b);
  CHECK(m.library("lib")->version == "2.1");
  CHECK(m.library("lib")->callables == std::unordered_set<std::string>{"f", "g", "h"});
  CHECK(m.library("other") != nullptr);
  CHECK(merge(merge(a, b), b) == merge(a, merge(b, b)));
}
