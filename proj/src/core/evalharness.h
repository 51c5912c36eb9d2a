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

#ifndef KCHLINT_CORE_EVALHARNESS_H_
#define KCHLINT_CORE_EVALHARNESS_H_

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "core/correction.h"
#include "core/knowledge_base.h"

namespace kchlint {

enum class Label { kClean, kHallucinated };
std::string_view to_string(Label label);

enum class HallucType {
  kMistypedApi,
  kMissingImport,
  kContextualMismatch,
  kIdentifierConflict,
};
std::string_view to_string(HallucType type);
std::optional<HallucType> parse_halluc_type(std::string_view text);

struct Sample {
  std::string id;
  std::string code;
  Label label = Label::kClean;
  std::optional<HallucType> halluc_type;
  std::optional<std::string> library;
  std::optional<std::string> expected_fixed_code;
};

class DatasetError : public std::runtime_error {
 public:
  DatasetError(std::string id, std::string reason)
      : std::runtime_error((id.empty() ? std::string("index") : "sample '" + id + "'") +
                           ": " + reason),
        id_(std::move(id)),
        reason_(std::move(reason)) {}
  const std::string& id() const { return id_; }
  const std::string& reason() const { return reason_; }

 private:
  std::string id_;
  std::string reason_;
};

// Reads `index.json` plus the code files it references.
std::vector<Sample> load_dataset(const std::filesystem::path& directory);
void write_dataset(const std::filesystem::path& directory,
                   const std::vector<Sample>& samples);

struct Ratio {
  double value = 0.0;
  // Denominator was zero; `value` holds the reporting convention (1.0).
  bool undefined = false;
};

struct Metrics {
  Ratio precision;
  Ratio recall;
  Ratio f1;
  Ratio accuracy;
};

Metrics compute_metrics(std::size_t tp, std::size_t fp, std::size_t fn,
                        std::size_t tn);

struct GroupStats {
  std::size_t samples = 0;
  std::size_t tp = 0;
  std::size_t fp = 0;
  std::size_t fn = 0;
  std::size_t tn = 0;
  std::size_t fix_correct = 0;
  Ratio detection_rate() const;
  Ratio fix_accuracy() const;
};

struct SampleOutcome {
  std::string id;
  bool detected = false;
  std::size_t diagnostics = 0;
  bool fix_attempted = false;
  bool fix_correct = false;
  std::optional<std::string> parse_failure;
};

struct EvalReport {
  std::size_t tp = 0;
  std::size_t fp = 0;
  std::size_t fn = 0;
  std::size_t tn = 0;
  Metrics metrics;
  std::size_t fix_attempted = 0;
  std::size_t fix_correct = 0;
  Ratio fix_accuracy;
  std::map<std::string, GroupStats> by_type;     // "clean" for clean samples
  std::map<std::string, GroupStats> by_library;  // "-" when unlabeled
  std::vector<SampleOutcome> outcomes;           // input order
  double wall_time_seconds = 0.0;
};

struct EvalOptions {
  FixOptions fix;
};

EvalReport evaluate(const std::vector<Sample>& samples, const KnowledgeBase& kb,
                    const EvalOptions& options = {});

class NoMutationPoint : public std::runtime_error {
 public:
  explicit NoMutationPoint(HallucType kind)
      : std::runtime_error("no mutation point for " + std::string(to_string(kind))),
        kind_(kind) {}
  HallucType kind() const { return kind_; }

 private:
  HallucType kind_;
};

// Injects one hallucination of `kind` into a clean sample. The result's
// expected_fixed_code is the canonical form of the original.
Sample mutate(const Sample& clean, HallucType kind, std::uint64_t seed,
              const KnowledgeBase& kb);

// Up to `count` mutations drawn round-robin from `clean`, skipping samples
// without a mutation point.
std::vector<Sample> synthesize(const std::vector<Sample>& clean, HallucType kind,
                               std::size_t count, std::uint64_t seed,
                               const KnowledgeBase& kb);

}  // namespace kchlint

#endif  // KCHLINT_CORE_EVALHARNESS_H_
