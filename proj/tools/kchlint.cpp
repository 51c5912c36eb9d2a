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

// Command-line front end. Talks to the analyzer only through the C API.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "kchlint/kchlint.h"
#include "unified_diff.h"

namespace fs = std::filesystem;
using nlohmann::ordered_json;

namespace {

constexpr int kExitClean = 0;
constexpr int kExitFindings = 1;
constexpr int kExitError = 2;

struct KbDeleter {
  void operator()(kchlint_kb* kb) const { kchlint_kb_free(kb); }
};
using KbPtr = std::unique_ptr<kchlint_kb, KbDeleter>;

struct BufferDeleter {
  void operator()(kchlint_buffer* b) const { kchlint_buffer_free(b); }
};
using BufferPtr = std::unique_ptr<kchlint_buffer, BufferDeleter>;

class CliError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string last_error(kchlint_status status) {
  std::string msg = kchlint_last_error();
  return msg.empty() ? kchlint_status_name(status) : msg;
}

std::string take(kchlint_buffer* raw) {
  BufferPtr buffer(raw);
  return std::string(kchlint_buffer_data(buffer.get()), kchlint_buffer_size(buffer.get()));
}

std::optional<std::string> read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) return std::nullopt;
  return ss.str();
}

// Temp file next to the target, then rename, so readers never see a partial
// write.
bool write_atomically(const fs::path& path, const std::string& text) {
  fs::path tmp = path;
  tmp += ".kchlint-tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out << text;
    if (!out.flush()) return false;
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) {
    fs::remove(tmp, ec);
    return false;
  }
  return true;
}

struct Options {
  std::vector<std::string> kb_paths;
  bool no_bundled = false;
  std::string format = "text";
  bool timing = false;
};

std::vector<std::string> env_manifests() {
  const char* env = std::getenv("KCHLINT_KB_PATH");
  std::vector<std::string> out;
  if (env == nullptr) return out;
  std::stringstream ss(env);
  std::string entry;
  while (std::getline(ss, entry, ':')) {
    if (entry.empty()) continue;
    std::error_code ec;
    if (fs::is_directory(entry, ec)) {
      std::vector<std::string> found;
      for (const auto& f : fs::directory_iterator(entry, ec)) {
        if (f.path().extension() == ".json") found.push_back(f.path().string());
      }
      std::sort(found.begin(), found.end());
      out.insert(out.end(), found.begin(), found.end());
    } else {
      out.push_back(entry);
    }
  }
  return out;
}

KbPtr load_manifest_file(const std::string& path) {
  auto text = read_file(path);
  if (!text) throw CliError("cannot read manifest " + path);
  kchlint_kb* raw = nullptr;
  kchlint_status st = kchlint_kb_load(text->data(), text->size(), &raw);
  if (st != KCHLINT_OK) throw CliError(path + ": " + last_error(st));
  return KbPtr(raw);
}

KbPtr merged(KbPtr a, const kchlint_kb* b) {
  kchlint_kb* raw = nullptr;
  kchlint_status st = kchlint_kb_merge(a.get(), b, &raw);
  if (st != KCHLINT_OK) throw CliError(last_error(st));
  return KbPtr(raw);
}

// Bundled manifest (unless disabled), then --kb paths or KCHLINT_KB_PATH,
// merged left to right.
KbPtr resolve_kb(const Options& opts) {
  kchlint_kb* raw = nullptr;
  kchlint_status st = opts.no_bundled ? kchlint_kb_empty(&raw) : kchlint_kb_bundled(&raw);
  if (st != KCHLINT_OK) throw CliError(last_error(st));
  KbPtr kb(raw);
  std::vector<std::string> paths = opts.kb_paths.empty() ? env_manifests() : opts.kb_paths;
  for (const std::string& p : paths) kb = merged(std::move(kb), load_manifest_file(p).get());
  return kb;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void print_timing(const Options& opts, double seconds) {
  if (opts.timing) std::fprintf(stderr, "time: %.3f ms\n", seconds * 1000.0);
}

std::string diagnostic_line(const std::string& file, const ordered_json& d) {
  return file + ":" + std::to_string(d["line"].get<int>()) + ":" +
         std::to_string(d["col"].get<int>()) + ": " + d["message"].get<std::string>();
}

// ---- check ----

int cmd_check(const Options& opts, const std::vector<std::string>& inputs) {
  auto start = std::chrono::steady_clock::now();
  KbPtr kb = resolve_kb(opts);
  int code = kExitClean;
  ordered_json all = ordered_json::array();
  for (const std::string& file : inputs) {
    auto source = read_file(file);
    if (!source) {
      std::cerr << "kchlint: cannot read " << file << "\n";
      code = kExitError;
      continue;
    }
    kchlint_buffer* raw = nullptr;
    kchlint_status st = kchlint_check(kb.get(), source->data(), source->size(), &raw);
    if (st != KCHLINT_OK) {
      std::cerr << file << ":" << last_error(st) << "\n";
      code = kExitError;
      continue;
    }
    ordered_json diags = ordered_json::parse(take(raw));
    if (!diags.empty() && code == kExitClean) code = kExitFindings;
    for (ordered_json& d : diags) {
      if (opts.format == "json") {
        ordered_json rec;
        rec["file"] = file;
        for (auto& [k, v] : d.items()) rec[k] = v;
        all.push_back(std::move(rec));
      } else {
        std::cout << diagnostic_line(file, d) << "\n";
      }
    }
  }
  if (opts.format == "json") std::cout << all.dump(2) << "\n";
  print_timing(opts, seconds_since(start));
  return code;
}

// ---- fix ----

enum class FixMode { kStdout, kDiff, kInPlace };

int cmd_fix(const Options& opts, const std::vector<std::string>& inputs, FixMode mode,
            bool fix_intent) {
  auto start = std::chrono::steady_clock::now();
  KbPtr kb = resolve_kb(opts);
  int code = kExitClean;
  ordered_json all = ordered_json::array();
  for (const std::string& file : inputs) {
    auto source = read_file(file);
    if (!source) {
      std::cerr << "kchlint: cannot read " << file << "\n";
      code = kExitError;
      continue;
    }
    kchlint_buffer* raw = nullptr;
    kchlint_status st = kchlint_fix(kb.get(), source->data(), source->size(),
                                    fix_intent ? KCHLINT_FIX_INTENT : 0u, &raw);
    if (st != KCHLINT_OK) {
      std::cerr << file << ": " << last_error(st) << "\n";
      code = kExitError;
      continue;
    }
    ordered_json result = ordered_json::parse(take(raw));
    if (!result["parse_failure"].is_null()) {
      std::cerr << file << ":" << result["parse_failure"].get<std::string>() << "\n";
      code = kExitError;
      continue;
    }
    std::size_t applied = result["applied"].size();
    std::size_t unfixed = result["unfixed"].size();
    bool changed = result["edits"].get<std::size_t>() > 0;
    // Zero edits leave the input byte-for-byte as it was.
    std::string fixed = changed ? result["fixed_source"].get<std::string>() : *source;
    if ((applied > 0 || unfixed > 0) && code == kExitClean) code = kExitFindings;

    if (mode == FixMode::kInPlace && changed && !write_atomically(file, fixed)) {
      std::cerr << "kchlint: cannot write " << file << "\n";
      code = kExitError;
      continue;
    }
    if (opts.format == "json") {
      ordered_json rec;
      rec["file"] = file;
      rec["changed"] = changed;
      if (mode == FixMode::kStdout) rec["fixed_source"] = fixed;
      if (mode == FixMode::kDiff) {
        rec["diff"] = kchlint::tools::unified_diff(*source, fixed, "a/" + file, "b/" + file);
      }
      rec["applied"] = result["applied"];
      rec["unfixed"] = result["unfixed"];
      all.push_back(std::move(rec));
    } else {
      if (mode == FixMode::kStdout) std::cout << fixed;
      if (mode == FixMode::kDiff) {
        std::cout << kchlint::tools::unified_diff(*source, fixed, "a/" + file, "b/" + file);
      }
      for (const ordered_json& d : result["unfixed"]) {
        std::cerr << diagnostic_line(file, d) << " (not fixed)\n";
      }
      std::cerr << file << ": applied=" << applied << " unfixed=" << unfixed << "\n";
    }
  }
  if (opts.format == "json") std::cout << all.dump(2) << "\n";
  print_timing(opts, seconds_since(start));
  return code;
}

// ---- eval ----

std::string fmt3(const ordered_json& ratio) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", ratio["value"].get<double>());
  std::string out = buf;
  if (ratio["undefined"].get<bool>()) out += "*";
  return out;
}

void print_group_table(const char* title, const ordered_json& groups) {
  std::printf("\n%-22s %7s %5s %5s %5s %5s %9s %7s %8s\n", title, "samples", "tp", "fn",
              "fp", "tn", "detected", "fixed", "fix_acc");
  for (const auto& [key, g] : groups.items()) {
    std::printf("%-22s %7zu %5zu %5zu %5zu %5zu %9s %7zu %8s\n", key.c_str(),
                g["samples"].get<std::size_t>(), g["tp"].get<std::size_t>(),
                g["fn"].get<std::size_t>(), g["fp"].get<std::size_t>(),
                g["tn"].get<std::size_t>(), fmt3(g["detection_rate"]).c_str(),
                g["fix_correct"].get<std::size_t>(), fmt3(g["fix_accuracy"]).c_str());
  }
}

int cmd_eval(const Options& opts, const std::string& dir, bool fix_intent, bool outcomes) {
  KbPtr kb = resolve_kb(opts);
  unsigned flags = (fix_intent ? KCHLINT_EVAL_FIX_INTENT : 0u) |
                   (outcomes ? KCHLINT_EVAL_OUTCOMES : 0u);
  kchlint_buffer* raw = nullptr;
  kchlint_status st = kchlint_eval(kb.get(), dir.c_str(), flags, &raw);
  if (st != KCHLINT_OK) throw CliError(last_error(st));
  ordered_json r = ordered_json::parse(take(raw));
  double wall = r["wall_time_seconds"].get<double>();
  if (!opts.timing) r.erase("wall_time_seconds");
  if (opts.format == "json") {
    std::cout << r.dump(2) << "\n";
    return kExitClean;
  }
  std::printf("samples %zu  tp %zu  fp %zu  fn %zu  tn %zu\n", r["samples"].get<std::size_t>(),
              r["tp"].get<std::size_t>(), r["fp"].get<std::size_t>(),
              r["fn"].get<std::size_t>(), r["tn"].get<std::size_t>());
  std::printf("precision %s  recall %s  f1 %s  accuracy %s\n", fmt3(r["precision"]).c_str(),
              fmt3(r["recall"]).c_str(), fmt3(r["f1"]).c_str(), fmt3(r["accuracy"]).c_str());
  std::printf("fix accuracy %s (%zu correct of %zu detected)\n",
              fmt3(r["fix_accuracy"]).c_str(), r["fix_correct"].get<std::size_t>(),
              r["tp"].get<std::size_t>());
  print_group_table("type", r["by_type"]);
  print_group_table("library", r["by_library"]);
  if (!r["parse_failures"].empty()) {
    std::printf("\nparse failures:\n");
    for (const auto& f : r["parse_failures"]) {
      std::printf("  %s: %s\n", f["id"].get<std::string>().c_str(),
                  f["reason"].get<std::string>().c_str());
    }
  }
  if (outcomes) {
    std::printf("\n%-40s %8s %6s %6s\n", "sample", "detected", "diags", "fixed");
    for (const auto& o : r["outcomes"]) {
      std::printf("%-40s %8s %6zu %6s\n", o["id"].get<std::string>().c_str(),
                  o["detected"].get<bool>() ? "yes" : "no", o["diagnostics"].get<std::size_t>(),
                  o["fix_correct"].get<bool>() ? "yes" : "no");
    }
  }
  std::printf("\n* denominator is zero; reported as 1.0\n");
  if (opts.timing) std::printf("wall time %.3f s\n", wall);
  return kExitClean;
}

int cmd_synth(const Options& opts, const std::string& clean_dir, const std::string& out_dir,
              const std::string& kind, std::size_t count, std::uint64_t seed) {
  KbPtr kb = resolve_kb(opts);
  std::size_t written = 0;
  kchlint_status st = kchlint_synthesize(kb.get(), clean_dir.c_str(), out_dir.c_str(),
                                         kind.c_str(), count, seed, &written);
  if (st != KCHLINT_OK) throw CliError(last_error(st));
  std::cerr << "wrote " << written << " " << kind << " samples to " << out_dir << "\n";
  return kExitClean;
}

// ---- kb ----

int cmd_kb_validate(const std::vector<std::string>& manifests) {
  int code = kExitClean;
  for (const std::string& path : manifests) {
    try {
      load_manifest_file(path);
      std::cout << path << ": ok\n";
    } catch (const CliError& e) {
      std::cerr << e.what() << "\n";
      code = kExitError;
    }
  }
  return code;
}

int cmd_kb_merge(const std::vector<std::string>& manifests, const std::string& output) {
  kchlint_kb* raw = nullptr;
  kchlint_kb_empty(&raw);
  KbPtr kb(raw);
  for (const std::string& path : manifests) {
    kb = merged(std::move(kb), load_manifest_file(path).get());
  }
  kchlint_buffer* buf = nullptr;
  kchlint_status st = kchlint_kb_serialize(kb.get(), &buf);
  if (st != KCHLINT_OK) throw CliError(last_error(st));
  std::string text = take(buf);
  if (output.empty() || output == "-") {
    std::cout << text;
  } else if (!write_atomically(output, text)) {
    throw CliError("cannot write " + output);
  }
  return kExitClean;
}

int cmd_kb_show(const Options& opts, const std::string& library) {
  KbPtr kb = resolve_kb(opts);
  kchlint_buffer* buf = nullptr;
  if (library.empty()) {
    kchlint_status st = kchlint_kb_libraries(kb.get(), &buf);
    if (st != KCHLINT_OK) throw CliError(last_error(st));
    ordered_json libs = ordered_json::parse(take(buf));
    if (opts.format == "json") {
      std::cout << libs.dump(2) << "\n";
    } else {
      for (const auto& l : libs) std::cout << l.get<std::string>() << "\n";
    }
    return kExitClean;
  }
  kchlint_status st = kchlint_kb_describe(kb.get(), library.c_str(), &buf);
  if (st != KCHLINT_OK) throw CliError(last_error(st));
  ordered_json lib = ordered_json::parse(take(buf));
  if (opts.format == "json") {
    std::cout << lib.dump(2) << "\n";
    return kExitClean;
  }
  std::cout << lib["module_path"].get<std::string>() << " "
            << lib["version"].get<std::string>();
  if (!lib["canonical_alias"].is_null()) {
    std::cout << " (alias " << lib["canonical_alias"].get<std::string>() << ")";
  }
  std::cout << "\ncallables (" << lib["callables"].size() << "):\n";
  for (const auto& c : lib["callables"]) std::cout << "  " << c.get<std::string>() << "\n";
  for (const auto& [type, methods] : lib["object_methods"].items()) {
    std::cout << type << " methods (" << methods.size() << "):\n";
    for (const auto& m : methods) std::cout << "  " << m.get<std::string>() << "\n";
  }
  return kExitClean;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Detects and repairs knowledge-conflicting hallucinations in Python code"};
  app.set_version_flag("--version", std::string(kchlint_version()));
  app.require_subcommand(1, 1);

  Options opts;
  app.add_option("--kb", opts.kb_paths,
                 "Manifest layered over the bundled knowledge base (repeatable)");
  app.add_flag("--no-bundled", opts.no_bundled, "Do not start from the bundled manifests");
  app.add_option("--format", opts.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--timing", opts.timing, "Report wall time");

  std::vector<std::string> inputs;
  auto* check = app.add_subcommand("check", "Report hallucination diagnostics");
  check->add_option("inputs", inputs, "Python files")->required()->check(CLI::ExistingFile);

  std::vector<std::string> fix_inputs;
  bool to_stdout = false, diff = false, in_place = false, fix_intent = false;
  auto* fix = app.add_subcommand("fix", "Apply suggested repairs");
  fix->add_option("inputs", fix_inputs, "Python files")->required()->check(CLI::ExistingFile);
  auto* f_stdout = fix->add_flag("--stdout", to_stdout, "Print fixed source (default)");
  auto* f_diff = fix->add_flag("--diff", diff, "Print a unified diff");
  auto* f_inplace = fix->add_flag("--in-place", in_place, "Rewrite files");
  f_stdout->excludes(f_diff)->excludes(f_inplace);
  f_diff->excludes(f_inplace);
  fix->add_flag("--fix-intent", fix_intent, "Also apply intent-synonym rewrites");

  std::string dataset;
  bool eval_fix_intent = false, outcomes = false;
  auto* eval = app.add_subcommand("eval", "Evaluate detection and repair on a labeled dataset");
  eval->add_option("dataset", dataset, "Dataset directory")->required();
  eval->add_flag("--fix-intent", eval_fix_intent, "Apply intent-synonym rewrites");
  eval->add_flag("--outcomes", outcomes, "Include per-sample outcomes");

  std::string clean_dir, out_dir, kind;
  std::size_t count = 50;
  std::uint64_t seed = 1;
  auto* synth = app.add_subcommand("synth", "Write a mutation dataset from clean samples");
  synth->add_option("clean", clean_dir, "Clean dataset directory")->required();
  synth->add_option("out", out_dir, "Output dataset directory")->required();
  synth->add_option("--kind", kind, "Hallucination type")
      ->required()
      ->check(CLI::IsMember(
          {"mistyped-api", "missing-import", "contextual-mismatch", "identifier-conflict"}));
  synth->add_option("--count", count, "Number of samples");
  synth->add_option("--seed", seed, "Base seed");

  auto* kb = app.add_subcommand("kb", "Inspect and combine manifests");
  kb->require_subcommand(1, 1);
  std::vector<std::string> manifests;
  auto* kb_validate = kb->add_subcommand("validate", "Check manifest files");
  kb_validate->add_option("manifests", manifests, "Manifest files")->required();
  std::vector<std::string> merge_inputs;
  std::string merge_output;
  auto* kb_merge = kb->add_subcommand("merge", "Merge manifests left to right");
  kb_merge->add_option("manifests", merge_inputs, "Manifest files")->required()->expected(2, -1);
  kb_merge->add_option("-o,--output", merge_output, "Output path (default stdout)");
  std::string library;
  auto* kb_show = kb->add_subcommand("show", "List libraries, or one library's callables");
  kb_show->add_option("library", library, "Module path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitError;
  }

  try {
    if (*check) return cmd_check(opts, inputs);
    if (*fix) {
      FixMode mode = diff ? FixMode::kDiff : in_place ? FixMode::kInPlace : FixMode::kStdout;
      return cmd_fix(opts, fix_inputs, mode, fix_intent);
    }
    if (*eval) return cmd_eval(opts, dataset, eval_fix_intent, outcomes);
    if (*synth) return cmd_synth(opts, clean_dir, out_dir, kind, count, seed);
    if (*kb_validate) return cmd_kb_validate(manifests);
    if (*kb_merge) return cmd_kb_merge(merge_inputs, merge_output);
    if (*kb_show) return cmd_kb_show(opts, library);
  } catch (const CliError& e) {
    std::cerr << "kchlint: " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "kchlint: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
