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

// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria.
#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "core/correction.h"
#include "core/evalharness.h"
#include "core/levenshtein.h"
#include "core/validation.h"
#include "oracles/levenshtein_oracle.h"
#include "support.h"

using namespace kchlint;

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t) {
  return std::chrono::duration<double>(Clock::now() - t).count();
}

int g_failures = 0;

void report(bool ok, const std::string& name, const std::string& detail) {
  std::printf("%s  %s: %s\n", ok ? "PASS" : "FAIL", name.c_str(), detail.c_str());
  if (!ok) ++g_failures;
}

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

const KnowledgeBase& kb() { return bundled_knowledge_base(); }

std::string canonical(const std::string& code) { return unparse(parse(code)); }

// Detected, and fix reproduces the expected canonical code exactly.
struct Outcome {
  bool detected = false;
  bool recovered = false;
};

Outcome run_sample(const Sample& s) {
  Outcome o;
  o.detected = !validate(parse(s.code), kb()).empty();
  FixResult r = fix(s.code, kb());
  o.recovered = !r.parse_failure && s.expected_fixed_code &&
                r.fixed_source == canonical(*s.expected_fixed_code) &&
                parse(r.fixed_source) == parse(*s.expected_fixed_code);
  return o;
}

// (typo, original) callee names of a mistyped-api mutation.
std::pair<std::string, std::string> mistyped_pair(const Sample& s) {
  std::vector<std::string> a;
  std::vector<std::string> b;
  for_each_expr(parse(s.code), [&](const Expr& e, const Stmt&) {
    if (const auto* attr = e.as<Attribute>()) a.push_back(attr->attr);
  });
  for_each_expr(parse(*s.expected_fixed_code), [&](const Expr& e, const Stmt&) {
    if (const auto* attr = e.as<Attribute>()) b.push_back(attr->attr);
  });
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    if (a[i] != b[i]) return {a[i], b[i]};
  }
  return {};
}

std::string random_string(std::mt19937_64& rng) {
  static const std::string alphabet = "abcdefghijklmnopqrstuvwxyz_0123456789";
  std::size_t len = rng() % 16;
  std::string s;
  for (std::size_t i = 0; i < len; ++i) s += alphabet[rng() % alphabet.size()];
  return s;
}

}  // namespace

int main() {
  std::vector<Sample> clean = load_dataset(test_support::clean_corpus());
  std::vector<Sample> mutation_corpus;

  // Zero false positives on the clean corpus.
  {
    std::set<std::string> libs;
    for (const Sample& s : clean) {
      if (s.library) libs.insert(*s.library);
    }
    auto t = Clock::now();
    std::size_t diagnostics = 0;
    for (const Sample& s : clean) diagnostics += validate(parse(s.code), kb()).size();
    double secs = since(t);
    bool ok = clean.size() >= 40 && libs.size() >= 5 && diagnostics == 0 && secs < 1.0;
    report(ok, "zero-false-positives",
           std::to_string(clean.size()) + " clean snippets, " + std::to_string(libs.size()) +
               " libraries, " + std::to_string(diagnostics) + " diagnostics, " +
               fmt("%.3f s", secs));
  }

  // Missing-import mutations.
  {
    auto t = Clock::now();
    auto samples = synthesize(clean, HallucType::kMissingImport, 50, 1001, kb());
    std::size_t detected = 0;
    std::size_t recovered = 0;
    for (const Sample& s : samples) {
      Outcome o = run_sample(s);
      detected += o.detected;
      recovered += o.recovered;
    }
    double secs = since(t);
    bool ok = samples.size() == 50 && detected == 50 && recovered == 50 && secs < 2.0;
    report(ok, "mutation-recall-missing-import",
           std::to_string(samples.size()) + " mutations, detected " + std::to_string(detected) +
               ", recovered " + std::to_string(recovered) + ", " + fmt("%.3f s", secs));
    mutation_corpus.insert(mutation_corpus.end(), samples.begin(), samples.end());
  }

  // Mistyped-api mutations.
  {
    auto t = Clock::now();
    auto samples = synthesize(clean, HallucType::kMistypedApi, 100, 2002, kb());
    std::size_t detected = 0;
    std::size_t passing = 0;
    std::size_t passing_recovered = 0;
    std::size_t recovered = 0;
    // Misses where another callable is at least as close as the original.
    std::size_t ambiguous = 0;
    for (const Sample& s : samples) {
      Outcome o = run_sample(s);
      detected += o.detected;
      recovered += o.recovered;
      auto [typo, original] = mistyped_pair(s);
      std::size_t distance = levenshtein(typo, original);
      if (!within_suggestion_threshold(typo, distance)) continue;
      ++passing;
      passing_recovered += o.recovered;
      if (o.recovered) continue;
      for (const Diagnostic& d : validate(parse(s.code), kb())) {
        if (d.subject == typo && d.suggestion && d.suggestion->replacement != original &&
            levenshtein(typo, d.suggestion->replacement) <= distance) {
          ++ambiguous;
          break;
        }
      }
    }
    double secs = since(t);
    double recovery = passing == 0 ? 0.0 : double(passing_recovered) / double(passing);
    bool ok = samples.size() == 100 && detected == 100 && recovery >= 0.90 &&
              passing_recovered + ambiguous == passing && secs < 2.0;
    report(ok, "mutation-recall-mistyped-api",
           std::to_string(samples.size()) + " mutations, detected " + std::to_string(detected) +
               ", within threshold " + std::to_string(passing) + "/" +
               std::to_string(samples.size()) + ", recovered " +
               std::to_string(passing_recovered) + "/" + std::to_string(passing) + " (" +
               fmt("%.1f%%", 100.0 * recovery) + "), misses with an equally close or closer candidate " +
               std::to_string(ambiguous) + "/" + std::to_string(passing - passing_recovered) +
               ", all recovered " +
               std::to_string(recovered) + ", " + fmt("%.3f s", secs));
    mutation_corpus.insert(mutation_corpus.end(), samples.begin(), samples.end());
  }

  // Contextual-mismatch mutations.
  {
    auto t = Clock::now();
    auto samples = synthesize(clean, HallucType::kContextualMismatch, 30, 3003, kb());
    std::size_t detected = 0;
    std::size_t recovered = 0;
    for (const Sample& s : samples) {
      Outcome o = run_sample(s);
      detected += o.detected;
      recovered += o.recovered;
    }
    double secs = since(t);
    bool ok = samples.size() == 30 && detected == 30 && recovered == 30 && secs < 1.0;
    report(ok, "mutation-recall-contextual-mismatch",
           std::to_string(samples.size()) + " mutations, detected " + std::to_string(detected) +
               ", recovered " + std::to_string(recovered) + ", " + fmt("%.3f s", secs));
    mutation_corpus.insert(mutation_corpus.end(), samples.begin(), samples.end());
  }
  {
    auto samples = synthesize(clean, HallucType::kIdentifierConflict, 50, 4004, kb());
    mutation_corpus.insert(mutation_corpus.end(), samples.begin(), samples.end());
  }

  // Worked examples.
  {
    std::vector<std::string> failures;
    FixResult a = fix("import pandas as pd\npd.read_exel('data.csv')", kb());
    if (a.fixed_source != "import pandas as pd\npd.read_csv('data.csv')\n") {
      failures.push_back("read_exel");
    }
    FixResult b = fix("df = read_csv('data.csv')", kb());
    auto bd = validate(parse("df = read_csv('data.csv')"), kb());
    if (b.fixed_source != "import pandas as pd\ndf = pd.read_csv('data.csv')\n" ||
        bd.size() != 1 || bd[0].category != Category::kBareCriticalCall) {
      failures.push_back("bare read_csv");
    }
    FixResult c = fix("import numpy as np\nx = np.arrya([1, 2])", kb());
    if (c.fixed_source != "import numpy as np\nx = np.array([1, 2])\n") {
      failures.push_back("arrya");
    }
    auto d = validate(parse("max_len_str = 10\nprint(max_len_len_str)"), kb());
    if (d.size() != 1 || d[0].category != Category::kIdentifierConflict ||
        !d[0].suggestion || d[0].suggestion->replacement != "max_len_str") {
      failures.push_back("max_len_len_str");
    }
    std::string detail = failures.empty() ? "read_exel->read_csv, bare read_csv, "
                                            "arrya->array, max_len_len_str->max_len_str"
                                          : "";
    for (const std::string& f : failures) detail += f + " ";
    report(failures.empty(), "worked-examples", detail);
  }

  // Levenshtein against the brute-force oracle.
  {
    std::mt19937_64 rng(20260101);
    int mismatches = 0;
    for (int i = 0; i < 1000; ++i) {
      std::string a = random_string(rng);
      std::string b = random_string(rng);
      mismatches += levenshtein(a, b) != oracle::levenshtein(a, b);
    }
    report(mismatches == 0, "levenshtein-oracle",
           "1000 random pairs, " + std::to_string(mismatches) + " mismatches");
  }

  // Idempotence and convergence over the mutation corpus.
  {
    std::size_t second_pass_edits = 0;
    std::size_t reparse_failures = 0;
    std::size_t lingering = 0;
    for (const Sample& s : mutation_corpus) {
      FixResult once = fix(s.code, kb());
      FixResult twice = fix(once.fixed_source, kb());
      second_pass_edits += twice.edits.size();
      try {
        Module fixed = parse(once.fixed_source);
        auto after = validate(fixed, kb());
        for (const Diagnostic& a : once.applied) {
          for (const Diagnostic& d : after) {
            lingering += d.category == a.category && d.subject == a.subject;
          }
        }
      } catch (const std::exception&) {
        ++reparse_failures;
      }
    }
    bool ok = second_pass_edits == 0 && reparse_failures == 0 && lingering == 0;
    report(ok, "idempotence-convergence",
           std::to_string(mutation_corpus.size()) + " mutated snippets, second-pass edits " +
               std::to_string(second_pass_edits) + ", reparse failures " +
               std::to_string(reparse_failures) + ", lingering findings " +
               std::to_string(lingering));
  }

  // Round-trip.
  {
    std::size_t failures = 0;
    std::size_t total = 0;
    auto check = [&](const std::string& code) {
      ++total;
      Module m = parse(code);
      failures += !(parse(unparse(m)) == m);
    };
    for (const Sample& s : clean) check(s.code);
    for (const Sample& s : mutation_corpus) check(s.code);
    report(failures == 0, "round-trip",
           std::to_string(total) + " snippets, " + std::to_string(failures) + " failures");
  }

  // Metric arithmetic.
  {
    Metrics m = compute_metrics(141, 0, 20, 39);
    auto near = [](double a, double b) { return std::fabs(a - b) <= 0.001; };
    bool ok = near(m.precision.value, 1.000) && near(m.recall.value, 0.876) &&
              near(m.f1.value, 0.934) && near(m.accuracy.value, 0.900);
    report(ok, "metric-arithmetic",
           "precision " + fmt("%.3f", m.precision.value) + ", recall " +
               fmt("%.3f", m.recall.value) + ", f1 " + fmt("%.3f", m.f1.value) +
               ", accuracy " + fmt("%.3f", m.accuracy.value));
  }

  // Performance: the CLI checking 200 synthetic snippets in one invocation.
  {
    auto dir = test_support::scratch_dir("acceptance-perf");
    std::vector<Sample> pool = mutation_corpus;
    pool.insert(pool.end(), clean.begin(), clean.end());
    std::string args;
    for (std::size_t i = 0; i < 200; ++i) {
      auto path = dir / ("s" + std::to_string(i) + ".py");
      test_support::write_file(path, pool[i % pool.size()].code);
      args += " '" + path.string() + "'";
    }
    std::string cmd = "'" + std::string(KCHLINT_CLI_PATH) + "' check" + args + " >/dev/null";
    auto t = Clock::now();
    int status = std::system(cmd.c_str());
    double secs = since(t);
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    bool ok = code == 1 && secs < 1.0;
    report(ok, "performance",
           "200 snippets via `kchlint check`, exit " + std::to_string(code) + ", " +
               fmt("%.3f s", secs));
  }

  return g_failures;
}
