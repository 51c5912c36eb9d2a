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

#include <set>

#include <doctest.h>

#include "core/evalharness.h"
#include "support.h"

using namespace kchlint;
using test_support::write_file;

namespace {

const KnowledgeBase& kb() { return bundled_knowledge_base(); }

Sample clean_sample(std::string id, std::string code) {
  Sample s;
  s.id = std::move(id);
  s.code = std::move(code);
  return s;
}

// Count of differing positions between two statement lists of equal length.
std::size_t changed_statements(const Module& a, const Module& b) {
  std::size_t n = 0;
  for (std::size_t i = 0; i < a.body.size(); ++i) n += !(a.body[i] == b.body[i]);
  return n;
}

}  // namespace

TEST_CASE("load_dataset: valid index") {
  auto dir = test_support::scratch_dir("dataset-valid");
  write_file(dir / "index.json", R"({"samples": [
    {"id": "a", "label": "clean", "library": "numpy", "code": "samples/a.py"},
    {"id": "b", "label": "hallucinated", "halluc_type": "mistyped-api",
     "code": "samples/b.py", "expected": "expected/b.py"},
    {"id": "c", "label": "clean", "halluc_type": null, "code": "samples/c.py"}]})");
  write_file(dir / "samples/a.py", "x = 1\n");
  write_file(dir / "samples/b.py", "import numpy as np\nnp.arrya([1])\n");
  write_file(dir / "expected/b.py", "import numpy as np\nnp.array([1])\n");
  write_file(dir / "samples/c.py", "y = 2\n");
  auto samples = load_dataset(dir);
  REQUIRE(samples.size() == 3);
  CHECK(samples[0].id == "a");
  CHECK(samples[0].library == "numpy");
  CHECK(samples[1].label == Label::kHallucinated);
  CHECK(samples[1].halluc_type == HallucType::kMistypedApi);
  CHECK(samples[1].expected_fixed_code == "import numpy as np\nnp.array([1])\n");
  CHECK(samples[2].code == "y = 2\n");
}

TEST_CASE("load_dataset: empty index") {
  auto dir = test_support::scratch_dir("dataset-empty");
  write_file(dir / "index.json", R"({"samples": []})");
  CHECK(load_dataset(dir).empty());
}

TEST_CASE("load_dataset: invariant violations name the sample") {
  auto dir = test_support::scratch_dir("dataset-bad");
  write_file(dir / "samples/x.py", "x = 1\n");
  auto expect_error = [&](const std::string& index, const std::string& id) {
    write_file(dir / "index.json", index);
    try {
      load_dataset(dir);
      FAIL("expected DatasetError: " << index);
    } catch (const DatasetError& e) {
      CHECK(e.id() == id);
    }
  };
  expect_error(R"({"samples": [{"id": "x", "label": "hallucinated", "code": "samples/x.py"}]})",
               "x");
  expect_error(R"({"samples": [{"id": "x", "label": "odd", "code": "samples/x.py"}]})", "x");
  expect_error(R"({"samples": [{"id": "x", "label": "clean", "code": "samples/none.py"}]})",
               "x");
  expect_error(R"({"samples": [{"id": "x", "label": "clean", "code": "../x.py"}]})", "x");
  expect_error(R"({"samples": [{"id": "x", "label": "clean", "code": "samples/x.py",
                                "color": 1}]})",
               "x");
  write_file(dir / "expected/x.py", "def f(:\n");
  expect_error(R"({"samples": [{"id": "x", "label": "hallucinated", "halluc_type":
      "mistyped-api", "code": "samples/x.py", "expected": "expected/x.py"}]})",
               "x");
  expect_error(R"({"samples": [{"id": "x", "label": "clean", "code": "samples/x.py"},
                               {"id": "x", "label": "clean", "code": "samples/x.py"}]})",
               "x");
  expect_error(R"({"items": []})", "");
  CHECK_THROWS_AS(load_dataset(dir / "missing"), DatasetError);
}

TEST_CASE("write_dataset round-trips") {
  auto dir = test_support::scratch_dir("dataset-write");
  auto clean = load_dataset(test_support::clean_corpus());
  auto mutated = synthesize(clean, HallucType::kMistypedApi, 5, 3, kb());
  std::vector<Sample> all(clean.begin(), clean.begin() + 3);
  all.insert(all.end(), mutated.begin(), mutated.end());
  write_dataset(dir, all);
  auto back = load_dataset(dir);
  REQUIRE(back.size() == all.size());
  for (std::size_t i = 0; i < all.size(); ++i) {
    CHECK(back[i].id == all[i].id);
    CHECK(back[i].code == all[i].code);
    CHECK(back[i].label == all[i].label);
    CHECK(back[i].halluc_type == all[i].halluc_type);
    CHECK(back[i].library == all[i].library);
    CHECK(back[i].expected_fixed_code == all[i].expected_fixed_code);
  }
}

TEST_CASE("metrics: direct formulas") {
  Metrics reference = compute_metrics(141, 0, 20, 39);
  CHECK(reference.precision.value == doctest::Approx(1.000).epsilon(0.001));
  CHECK(reference.recall.value == doctest::Approx(0.876).epsilon(0.001));
  CHECK(reference.f1.value == doctest::Approx(0.934).epsilon(0.001));
  CHECK(reference.accuracy.value == doctest::Approx(0.900).epsilon(0.001));

  struct Case {
    std::size_t tp, fp, fn, tn;
  };
  for (Case c : {Case{5, 1, 2, 3}, Case{1, 1, 1, 1}, Case{10, 0, 0, 0}, Case{3, 7, 11, 2}}) {
    Metrics m = compute_metrics(c.tp, c.fp, c.fn, c.tn);
    double p = double(c.tp) / double(c.tp + c.fp);
    double r = double(c.tp) / double(c.tp + c.fn);
    CHECK(m.precision.value == doctest::Approx(p));
    CHECK(m.recall.value == doctest::Approx(r));
    CHECK(m.f1.value == doctest::Approx(2 * p * r / (p + r)));
    CHECK(m.accuracy.value ==
          doctest::Approx(double(c.tp + c.tn) / double(c.tp + c.fp + c.fn + c.tn)));
  }
  Metrics zero = compute_metrics(0, 3, 4, 0);
  CHECK(zero.precision.value == 0.0);
  CHECK(zero.f1.value == 0.0);
}

TEST_CASE("evaluate: all clean corpus") {
  auto samples = load_dataset(test_support::clean_corpus());
  EvalReport r = evaluate(samples, kb());
  CHECK(r.fp == 0);
  CHECK(r.tn == samples.size());
  CHECK(r.metrics.precision.value == 1.0);
  CHECK(r.metrics.precision.undefined);
  CHECK(r.metrics.recall.undefined);
  CHECK(r.by_type.at("clean").samples == samples.size());
  CHECK(r.wall_time_seconds >= 0.0);
}

TEST_CASE("evaluate: one hallucinated sample fixed to expected") {
  Sample s;
  s.id = "one";
  s.code = "import pandas as pd\npd.read_exel('data.csv')\n";
  s.label = Label::kHallucinated;
  s.halluc_type = HallucType::kMistypedApi;
  s.library = "pandas";
  s.expected_fixed_code = "import pandas as pd\npd.read_csv('data.csv')";
  EvalReport r = evaluate({s}, kb());
  CHECK(r.tp == 1);
  CHECK(r.metrics.precision.value == 1.0);
  CHECK_FALSE(r.metrics.precision.undefined);
  CHECK(r.metrics.recall.value == 1.0);
  CHECK(r.fix_accuracy.value == 1.0);
  CHECK(r.fix_correct == 1);
  CHECK(r.by_library.at("pandas").tp == 1);
  CHECK(r.by_type.at("mistyped-api").fix_correct == 1);
}

TEST_CASE("evaluate: parse failures count as not detected") {
  Sample s;
  s.id = "broken";
  s.code = "def f(:\n";
  s.label = Label::kHallucinated;
  s.halluc_type = HallucType::kMistypedApi;
  EvalReport r = evaluate({s}, kb());
  CHECK(r.fn == 1);
  REQUIRE(r.outcomes.size() == 1);
  CHECK(r.outcomes[0].parse_failure.has_value());
}

TEST_CASE("evaluate: aggregation is order independent") {
  auto clean = load_dataset(test_support::clean_corpus());
  auto mixed = synthesize(clean, HallucType::kMistypedApi, 20, 5, kb());
  mixed.insert(mixed.end(), clean.begin(), clean.begin() + 10);
  EvalReport a = evaluate(mixed, kb());
  std::reverse(mixed.begin(), mixed.end());
  EvalReport b = evaluate(mixed, kb());
  CHECK(a.tp == b.tp);
  CHECK(a.fp == b.fp);
  CHECK(a.fn == b.fn);
  CHECK(a.tn == b.tn);
  CHECK(a.fix_correct == b.fix_correct);
  CHECK(a.by_type.size() == b.by_type.size());
}

TEST_CASE("mutate: examples") {
  Sample csv = clean_sample("csv", "import pandas as pd\ndf = pd.read_csv('f.csv')\n");
  Sample m = mutate(csv, HallucType::kContextualMismatch, 1, kb());
  CHECK(m.label == Label::kHallucinated);
  CHECK(m.halluc_type == HallucType::kContextualMismatch);
  CHECK(m.expected_fixed_code == "import pandas as pd\ndf = pd.read_csv('f.csv')\n");
  CHECK((m.code == "import pandas as pd\ndf = pd.read_excel('f.csv')\n" ||
         m.code == "import pandas as pd\ndf = pd.read_json('f.csv')\n"));

  Sample mi = mutate(csv, HallucType::kMissingImport, 1, kb());
  CHECK(mi.code == "df = read_csv('f.csv')\n");
  CHECK(mi.library == "pandas");

  Sample plain = clean_sample("plain", "import numpy as np\nx = np.mean([1])\n");
  CHECK_THROWS_AS(mutate(plain, HallucType::kContextualMismatch, 1, kb()), NoMutationPoint);
  CHECK_THROWS_AS(mutate(clean_sample("none", "x = 1\n"), HallucType::kMistypedApi, 1, kb()),
                  NoMutationPoint);
}

TEST_CASE("mutate: deterministic in (sample, kind, seed)") {
  auto clean = load_dataset(test_support::clean_corpus());
  for (std::uint64_t seed : {1u, 2u, 99u}) {
    Sample a = mutate(clean[0], HallucType::kMistypedApi, seed, kb());
    Sample b = mutate(clean[0], HallucType::kMistypedApi, seed, kb());
    CHECK(a.code == b.code);
    CHECK(a.id == b.id);
  }
  std::set<std::string> variants;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    variants.insert(mutate(clean[0], HallucType::kMistypedApi, seed, kb()).code);
  }
  CHECK(variants.size() > 1);
}

TEST_CASE("mutation soundness: exactly one changed site") {
  auto clean = load_dataset(test_support::clean_corpus());
  for (HallucType kind : {HallucType::kMistypedApi, HallucType::kContextualMismatch,
                          HallucType::kIdentifierConflict}) {
    for (const Sample& m : synthesize(clean, kind, 40, 11, kb())) {
      Module orig = parse(*m.expected_fixed_code);
      Module mut = parse(m.code);
      REQUIRE(orig.body.size() == mut.body.size());
      CHECK_MESSAGE(changed_statements(orig, mut) == 1, m.id);
      std::size_t names = 0;
      std::vector<std::string> a;
      std::vector<std::string> b;
      for_each_expr(orig, [&](const Expr& e, const Stmt&) {
        if (auto* n = e.as<Name>()) a.push_back(n->id);
        if (auto* t = e.as<Attribute>()) a.push_back(t->attr);
      });
      for_each_expr(mut, [&](const Expr& e, const Stmt&) {
        if (auto* n = e.as<Name>()) b.push_back(n->id);
        if (auto* t = e.as<Attribute>()) b.push_back(t->attr);
      });
      REQUIRE(a.size() == b.size());
      for (std::size_t i = 0; i < a.size(); ++i) names += a[i] != b[i];
      CHECK_MESSAGE(names == 1, m.id);
    }
  }
  for (const Sample& m : synthesize(clean, HallucType::kMissingImport, 40, 11, kb())) {
    Module orig = parse(*m.expected_fixed_code);
    Module mut = parse(m.code);
    REQUIRE(orig.body.size() == mut.body.size() + 1);
    std::size_t removed = 0;
    while (removed < mut.body.size() && orig.body[removed] == mut.body[removed]) ++removed;
    CHECK(orig.body[removed].is_import());
    orig.body.erase(orig.body.begin() + static_cast<std::ptrdiff_t>(removed));
    CHECK_MESSAGE(changed_statements(orig, mut) == 1, m.id);
  }
}

TEST_CASE("synthesize: skips samples without mutation points") {
  std::vector<Sample> pool = {clean_sample("bare", "x = 1\n"),
                              clean_sample("ok", "import pandas as pd\npd.read_csv('a.csv')\n")};
  auto out = synthesize(pool, HallucType::kContextualMismatch, 4, 0, kb());
  CHECK(out.size() == 4);
  for (const Sample& s : out) CHECK(s.id.rfind("ok.", 0) == 0);
  CHECK(synthesize({pool[0]}, HallucType::kContextualMismatch, 4, 0, kb()).empty());
}

TEST_CASE("type names") {
  for (HallucType t : {HallucType::kMistypedApi, HallucType::kMissingImport,
                       HallucType::kContextualMismatch, HallucType::kIdentifierConflict}) {
    CHECK(parse_halluc_type(to_string(t)) == t);
  }
  CHECK_FALSE(parse_halluc_type("typo").has_value());
}
