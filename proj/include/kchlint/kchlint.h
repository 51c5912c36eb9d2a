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

#ifndef KCHLINT_KCHLINT_H_
#define KCHLINT_KCHLINT_H_

/* C interface to the kchlint analyzer. All results that carry data are
 * returned as JSON text in a kchlint_buffer owned by the caller. On a
 * non-OK status, kchlint_last_error() describes the failure for the
 * calling thread. */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(KCHLINT_BUILDING)
#define KCHLINT_API __declspec(dllexport)
#else
#define KCHLINT_API __declspec(dllimport)
#endif
#else
#define KCHLINT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct kchlint_kb kchlint_kb;
typedef struct kchlint_buffer kchlint_buffer;

typedef enum kchlint_status {
  KCHLINT_OK = 0,
  KCHLINT_E_INVALID_ARGUMENT = 1,
  KCHLINT_E_PARSE = 2,
  KCHLINT_E_MANIFEST = 3,
  KCHLINT_E_DANGLING_RULE = 4,
  KCHLINT_E_UNKNOWN_LIBRARY = 5,
  KCHLINT_E_DATASET = 6,
  KCHLINT_E_IO = 7,
  KCHLINT_E_NO_MUTATION_POINT = 8,
  KCHLINT_E_INTERNAL = 9
} kchlint_status;

/* kchlint_fix flags */
#define KCHLINT_FIX_INTENT 1u
/* kchlint_eval flags */
#define KCHLINT_EVAL_FIX_INTENT 1u
#define KCHLINT_EVAL_OUTCOMES 2u

KCHLINT_API const char* kchlint_version(void);
KCHLINT_API const char* kchlint_status_name(kchlint_status status);
/* Message for the last failed call on this thread; "" if none. */
KCHLINT_API const char* kchlint_last_error(void);

/* Buffers: data is NUL-terminated; size excludes the terminator. */
KCHLINT_API const char* kchlint_buffer_data(const kchlint_buffer* buffer);
KCHLINT_API size_t kchlint_buffer_size(const kchlint_buffer* buffer);
KCHLINT_API void kchlint_buffer_free(kchlint_buffer* buffer);

/* Knowledge bases */
KCHLINT_API kchlint_status kchlint_kb_bundled(kchlint_kb** out);
KCHLINT_API kchlint_status kchlint_kb_empty(kchlint_kb** out);
KCHLINT_API kchlint_status kchlint_kb_load(const char* bytes, size_t size,
                                           kchlint_kb** out);
/* Right-hand side wins conflicts. */
KCHLINT_API kchlint_status kchlint_kb_merge(const kchlint_kb* a,
                                            const kchlint_kb* b,
                                            kchlint_kb** out);
KCHLINT_API kchlint_status kchlint_kb_serialize(const kchlint_kb* kb,
                                                kchlint_buffer** out);
/* JSON array of module paths. */
KCHLINT_API kchlint_status kchlint_kb_libraries(const kchlint_kb* kb,
                                                kchlint_buffer** out);
/* JSON object describing one library. */
KCHLINT_API kchlint_status kchlint_kb_describe(const kchlint_kb* kb,
                                               const char* module_path,
                                               kchlint_buffer** out);
/* object_type may be NULL. */
KCHLINT_API kchlint_status kchlint_kb_lookup(const kchlint_kb* kb,
                                             const char* module_path,
                                             const char* name,
                                             const char* object_type,
                                             int* found);
KCHLINT_API void kchlint_kb_free(kchlint_kb* kb);

/* Analysis. kchlint_check yields a JSON array of diagnostics; kchlint_fix a
 * JSON object with fixed_source, applied and unfixed. Sources outside the
 * supported grammar give KCHLINT_E_PARSE from check; fix reports them in
 * the result's parse_failure field instead. */
KCHLINT_API kchlint_status kchlint_check(const kchlint_kb* kb, const char* source,
                                         size_t size, kchlint_buffer** out);
KCHLINT_API kchlint_status kchlint_fix(const kchlint_kb* kb, const char* source,
                                       size_t size, unsigned flags,
                                       kchlint_buffer** out);
/* Canonical rendering of a source. */
KCHLINT_API kchlint_status kchlint_format(const char* source, size_t size,
                                          kchlint_buffer** out);

/* Evaluation over a dataset directory (index.json + code files). */
KCHLINT_API kchlint_status kchlint_eval(const kchlint_kb* kb, const char* dataset_dir,
                                        unsigned flags, kchlint_buffer** out);
/* Writes a dataset of up to `count` mutations of `kind` (e.g.
 * "mistyped-api") drawn from the clean samples in clean_dir. */
KCHLINT_API kchlint_status kchlint_synthesize(const kchlint_kb* kb,
                                              const char* clean_dir,
                                              const char* out_dir,
                                              const char* kind, size_t count,
                                              uint64_t seed, size_t* written);

KCHLINT_API size_t kchlint_levenshtein(const char* a, size_t a_size,
                                       const char* b, size_t b_size);

#ifdef __cplusplus
}
#endif

#endif /* KCHLINT_KCHLINT_H_ */
