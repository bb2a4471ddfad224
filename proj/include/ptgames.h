/*
 * Copyright 2026 The ptgames authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * ptgames - verification laboratory for two-party pseudo-telepathy games.
 *
 * C API of the shared library. All functions return PTG_OK on success or an
 * error code; ptg_last_error() describes the most recent failure on the
 * calling thread. Objects are opaque handles released with the matching
 * *_free function. Strings returned through char** are heap-allocated and
 * released with ptg_string_free.
 */
#ifndef PTGAMES_H
#define PTGAMES_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define PTG_API __declspec(dllexport)
#else
#define PTG_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ptg_status {
    PTG_OK = 0,
    PTG_ERR_INVALID_ARGUMENT = 1,
    PTG_ERR_PARSE = 2,
    PTG_ERR_DIMENSION = 3,
    PTG_ERR_ARITY = 4,
    PTG_ERR_ORTHOGONALITY = 5,
    PTG_ERR_DUPLICATE_VECTOR = 6,
    PTG_ERR_DUPLICATE_MEMBER = 7,
    PTG_ERR_DANGLING_INDEX = 8,
    PTG_ERR_NOT_SATISFIED = 9,
    PTG_ERR_INTERNAL = 10
} ptg_status;

typedef struct ptg_ks_set ptg_ks_set;   /* a Kochen-Specker vector set */
typedef struct ptg_report ptg_report;   /* a verification report */

/* Library version string, e.g. "0.1.0". */
PTG_API const char* ptg_version(void);

/* Message for the last failure on this thread; empty string if none. */
PTG_API const char* ptg_last_error(void);

PTG_API void ptg_string_free(char* s);

/* ---- KS sets ---------------------------------------------------------- */

/* The built-in 18-vector, 9-basis set in dimension 4. */
PTG_API ptg_status ptg_ks_set_builtin(ptg_ks_set** out);

/* Parse and validate a KS-set JSON document:
 *   {"name": ..., "dimension": d, "vectors": [[...], ...],
 *    "bases": [[0-based indices], ...]}
 * Each defect (parse, dimension, arity, orthogonality, duplicate, dangling
 * index) yields its own status code and a positioned diagnostic. */
PTG_API ptg_status ptg_ks_set_parse(const char* json_text, ptg_ks_set** out);

PTG_API ptg_status ptg_ks_set_to_json(const ptg_ks_set* set, char** json_out);

/* New set with bases reordered; order[i] is the 0-based index of the i-th
 * basis of the result and must be a permutation of 0..basis_count-1. */
PTG_API ptg_status ptg_ks_set_permute(const ptg_ks_set* set, const int* order,
                                      size_t count, ptg_ks_set** out);

PTG_API ptg_status ptg_ks_set_dimension(const ptg_ks_set* set, int* out);
PTG_API ptg_status ptg_ks_set_vector_count(const ptg_ks_set* set, int* out);
PTG_API ptg_status ptg_ks_set_basis_count(const ptg_ks_set* set, int* out);

PTG_API void ptg_ks_set_free(ptg_ks_set* set);

/* ---- KS colourability analysis ---------------------------------------- */

/* JSON document with the colouring count (exhaustive when use_backtracking
 * is 0, basis-indexed backtracking otherwise), the parity obstruction, the
 * maximal colourable basis prefix, the contextual-repair candidates, and the
 * single-box sufficient-condition result. */
PTG_API ptg_status ptg_ks_colour_analysis(const ptg_ks_set* set, int use_backtracking,
                                          char** json_out);

/* ---- KS game verification --------------------------------------------- */

/* Verify the impossible-colouring game over the set with either the built-in
 * 4-dimensional strategy tables (use_builtin_quad != 0; requires the
 * built-in set) or a freshly synthesized quad. The report covers every
 * promise-satisfying input pair and both box branches. */
PTG_API ptg_status ptg_ks_verify(const ptg_ks_set* set, int use_builtin_quad,
                                 ptg_report** out);

/* ---- Magic-square game ------------------------------------------------- */

/* Single NL-box strategy, all n^2 input pairs x 2 branches; odd n >= 3. */
PTG_API ptg_status ptg_magic_verify_nlbox(int n, ptg_report** out);

/* 2-ebit quantum strategy; n = 3 or odd n >= 5. Every outcome above the
 * support threshold is a case. */
PTG_API ptg_status ptg_magic_verify_quantum(int n, ptg_report** out);

/* JSON document with the parity contradiction verdict and, for n = 3, the
 * exhaustive grid and deterministic-strategy enumerations. */
PTG_API ptg_status ptg_magic_impossibility(int n, char** json_out);

/* ---- NL-box diagnostics ------------------------------------------------ */

/* CHSH value of the PR box as an exact rational (4/1). */
PTG_API ptg_status ptg_box_chsh_pr(int64_t* num, int64_t* den);

/* Maximum CHSH value over the 16 local deterministic boxes (2/1). */
PTG_API ptg_status ptg_box_chsh_local_max(int64_t* num, int64_t* den);

/* 1 if the PR box passes the no-signalling check. */
PTG_API ptg_status ptg_box_no_signalling_pr(int* passes);

/* ---- Seeded simulation ------------------------------------------------- */

/* Round-after-round statistics as a JSON document; deterministic for a given
 * (seed, rounds). game: "ks" (set may be NULL for the built-in set and its
 * built-in quad; a supplied set is played with a synthesized quad; strategy
 * must be "nlbox") or "magic" (set ignored; strategy "nlbox" or "quantum"). */
PTG_API ptg_status ptg_simulate(const char* game, int n, const ptg_ks_set* set,
                                const char* strategy, long long rounds, uint64_t seed,
                                char** json_out);

/* ---- Reports ----------------------------------------------------------- */

PTG_API ptg_status ptg_report_cases_total(const ptg_report* report, long long* out);
PTG_API ptg_status ptg_report_cases_won(const ptg_report* report, long long* out);

/* Stable-key-order JSON document:
 *   {game, parameters, cases_total, cases_won,
 *    failures: [{inputs, branch, outputs, violated}], tool_version} */
PTG_API ptg_status ptg_report_to_json(const ptg_report* report, char** json_out);

PTG_API void ptg_report_free(ptg_report* report);

#ifdef __cplusplus
}
#endif

#endif
