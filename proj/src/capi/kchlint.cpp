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

#include "kchlint/kchlint.h"

#include <exception>
#include <string>

#include "core/correction.h"
#include "core/evalharness.h"
#include "core/knowledge_base.h"
#include "core/levenshtein.h"
#include "core/serialization.h"
#include "core/token.h"
#include "core/validation.h"

struct kchlint_kb {
  kchlint::KnowledgeBase kb;
};

struct kchlint_buffer {
  std::string data;
};

namespace {

thread_local std::string g_last_error;

kchlint_status fail(kchlint_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

kchlint_status emit(std::string text, kchlint_buffer** out) {
  *out = new kchlint_buffer{std::move(text)};
  return KCHLINT_OK;
}

// Maps exceptions escaping the core to status codes.
template <typename Fn>
kchlint_status guarded(Fn&& fn) {
  g_last_error.clear();
  try {
    return fn();
  } catch (const kchlint::DanglingRule& e) {
    return fail(KCHLINT_E_DANGLING_RULE, e.what());
  } catch (const kchlint::ManifestError& e) {
    return fail(KCHLINT_E_MANIFEST, e.what());
  } catch (const kchlint::UnknownLibrary& e) {
    return fail(KCHLINT_E_UNKNOWN_LIBRARY, e.what());
  } catch (const kchlint::LexError& e) {
    return fail(KCHLINT_E_PARSE, e.what());
  } catch (const kchlint::SyntaxError& e) {
    return fail(KCHLINT_E_PARSE, e.what());
  } catch (const kchlint::DatasetError& e) {
    return fail(KCHLINT_E_DATASET, e.what());
  } catch (const kchlint::NoMutationPoint& e) {
    return fail(KCHLINT_E_NO_MUTATION_POINT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(KCHLINT_E_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(KCHLINT_E_INTERNAL, e.what());
  }
}

std::string_view view(const char* data, size_t size) {
  return data == nullptr ? std::string_view() : std::string_view(data, size);
}

}  // namespace

extern "C" {

const char* kchlint_version(void) { return KCHLINT_VERSION; }

const char* kchlint_status_name(kchlint_status status) {
  switch (status) {
    case KCHLINT_OK: return "ok";
    case KCHLINT_E_INVALID_ARGUMENT: return "invalid-argument";
    case KCHLINT_E_PARSE: return "parse-error";
    case KCHLINT_E_MANIFEST: return "manifest-error";
    case KCHLINT_E_DANGLING_RULE: return "dangling-rule";
    case KCHLINT_E_UNKNOWN_LIBRARY: return "unknown-library";
    case KCHLINT_E_DATASET: return "dataset-error";
    case KCHLINT_E_IO: return "io-error";
    case KCHLINT_E_NO_MUTATION_POINT: return "no-mutation-point";
    case KCHLINT_E_INTERNAL: return "internal-error";
  }
  return "unknown-status";
}

const char* kchlint_last_error(void) { return g_last_error.c_str(); }

const char* kchlint_buffer_data(const kchlint_buffer* buffer) {
  return buffer == nullptr ? "" : buffer->data.c_str();
}

size_t kchlint_buffer_size(const kchlint_buffer* buffer) {
  return buffer == nullptr ? 0 : buffer->data.size();
}

void kchlint_buffer_free(kchlint_buffer* buffer) { delete buffer; }

kchlint_status kchlint_kb_bundled(kchlint_kb** out) {
  if (out == nullptr) return fail(KCHLINT_E_INVALID_ARGUMENT, "out is NULL");
  return guarded([&] {
    *out = new kchlint_kb{kchlint::bundled_knowledge_base()};
    return KCHLINT_OK;
  });
}

kchlint_status kchlint_kb_empty(kchlint_kb** out) {
  if (out == nullptr) return fail(KCHLINT_E_INVALID_ARGUMENT, "out is NULL");
  return guarded([&] {
    *out = new kchlint_kb{};
    return KCHLINT_OK;
  });
}

kchlint_status kchlint_kb_load(const char* bytes, size_t size, kchlint_kb** out) {
  if (out == nullptr || (bytes == nullptr && size != 0)) {
    return fail(KCHLINT_E_INVALID_ARGUMENT, "NULL argument");
  }
  return guarded([&] {
    *out = new kchlint_kb{kchlint::load_manifest(view(bytes, size))};
    return KCHLINT_OK;
  });
}

kchlint_status kchlint_kb_merge(const kchlint_kb* a, const kchlint_kb* b,
                                kchlint_kb** out) {
  if (a == nullptr || b == nullptr || out == nullptr) {
    return fail(KCHLINT_E_INVALID_ARGUMENT, "NULL argument");
  }
  return guarded([&] {
    *out = new kchlint_kb{kchlint::merge(a->kb, b->kb)};
    return KCHLINT_OK;
  });
}

kchlint_status kchlint_kb_serialize(const kchlint_kb* kb, kchlint_buffer** out) {
  if (kb == nullptr || out == nullptr) {
    return fail(KCHLINT_E_INVALID_ARGUMENT, "NULL argument");
  }
  return guarded([&] { return emit(kchlint::serialize_manifest(kb->kb), out); });
}

kchlint_status kchlint_kb_libraries(const kchlint_kb* kb, kchlint_buffer** out) {
  if (kb == nullptr || out == nullptr) {
    return fail(KCHLINT_E_INVALID_ARGUMENT, "NULL argument");
  }
  return guarded([&] {
    nlohmann::ordered_json j = nlohmann::ordered_json::array();
    for (const auto& [path, lib] : kb->kb.libraries) j.push_back(path);
    return emit(j.dump(), out);
  });
}

kchlint_status kchlint_kb_describe(const kchlint_kb* kb, const char* module_path,
                                   kchlint_buffer** out) {
  if (kb == nullptr || module_path == nullptr || out == nullptr) {
    return fail(KCHLINT_E_INVALID_ARGUMENT, "NULL argument");
  }
  return guarded([&] {
    const kchlint::LibraryEntry* lib = kb->kb.library(module_path);
    if (lib == nullptr) throw kchlint::UnknownLibrary(module_path);
    return emit(kchlint::library_to_json(*lib).dump(), out);
  });
}

kchlint_status kchlint_kb_lookup(const kchlint_kb* kb, const char* module_path,
                                 const char* name, const char* object_type,
                                 int* found) {
  if (kb == nullptr || module_path == nullptr || name == nullptr || found == nullptr) {
    return fail(KCHLINT_E_INVALID_ARGUMENT, "NULL argument");
  }
  return guarded([&] {
    std::optional<std::string> type;
    if (object_type != nullptr) type = object_type;
    *found = kb->kb.lookup_callable(module_path, name, type) ? 1 : 0;
    return KCHLINT_OK;
  });
}

void kchlint_kb_free(kchlint_kb* kb) { delete kb; }

kchlint_status kchlint_check(const kchlint_kb* kb, const char* source, size_t size,
                             kchlint_buffer** out) {
  if (kb == nullptr || out == nullptr || (source == nullptr && size != 0)) {
    return fail(KCHLINT_E_INVALID_ARGUMENT, "NULL argument");
  }
  return guarded([&] {
    kchlint::Module module = kchlint::parse(view(source, size));
    return emit(kchlint::to_json(kchlint::validate(module, kb->kb)).dump(), out);
  });
}

kchlint_status kchlint_fix(const kchlint_kb* kb, const char* source, size_t size,
                           unsigned flags, kchlint_buffer** out) {
  if (kb == nullptr || out == nullptr || (source == nullptr && size != 0)) {
    return fail(KCHLINT_E_INVALID_ARGUMENT, "NULL argument");
  }
  return guarded([&] {
    kchlint::FixOptions options;
    options.fix_intent = (flags & KCHLINT_FIX_INTENT) != 0;
    kchlint::FixResult result = kchlint::fix(view(source, size), kb->kb, options);
    return emit(kchlint::to_json(result).dump(), out);
  });
}

kchlint_status kchlint_format(const char* source, size_t size, kchlint_buffer** out) {
  if (out == nullptr || (source == nullptr && size != 0)) {
    return fail(KCHLINT_E_INVALID_ARGUMENT, "NULL argument");
  }
  return guarded([&] { return emit(kchlint::unparse(kchlint::parse(view(source, size))), out); });
}

kchlint_status kchlint_eval(const kchlint_kb* kb, const char* dataset_dir,
                            unsigned flags, kchlint_buffer** out) {
  if (kb == nullptr || dataset_dir == nullptr || out == nullptr) {
    return fail(KCHLINT_E_INVALID_ARGUMENT, "NULL argument");
  }
  return guarded([&] {
    auto samples = kchlint::load_dataset(dataset_dir);
    kchlint::EvalOptions options;
    options.fix.fix_intent = (flags & KCHLINT_EVAL_FIX_INTENT) != 0;
    kchlint::EvalReport report = kchlint::evaluate(samples, kb->kb, options);
    return emit(kchlint::to_json(report, (flags & KCHLINT_EVAL_OUTCOMES) != 0).dump(),
                out);
  });
}

kchlint_status kchlint_synthesize(const kchlint_kb* kb, const char* clean_dir,
                                  const char* out_dir, const char* kind, size_t count,
                                  uint64_t seed, size_t* written) {
  if (kb == nullptr || clean_dir == nullptr || out_dir == nullptr || kind == nullptr) {
    return fail(KCHLINT_E_INVALID_ARGUMENT, "NULL argument");
  }
  auto type = kchlint::parse_halluc_type(kind);
  if (!type) {
    return fail(KCHLINT_E_INVALID_ARGUMENT,
                std::string("unknown hallucination type '") + kind + "'");
  }
  return guarded([&] {
    std::vector<kchlint::Sample> clean;
    for (kchlint::Sample& s : kchlint::load_dataset(clean_dir)) {
      if (s.label == kchlint::Label::kClean) clean.push_back(std::move(s));
    }
    auto samples = kchlint::synthesize(clean, *type, count, seed, kb->kb);
    kchlint::write_dataset(out_dir, samples);
    if (written != nullptr) *written = samples.size();
    return KCHLINT_OK;
  });
}

size_t kchlint_levenshtein(const char* a, size_t a_size, const char* b, size_t b_size) {
  return kchlint::levenshtein(view(a, a_size), view(b, b_size));
}

}  // extern "C"
