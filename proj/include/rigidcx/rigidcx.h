/* Copyright 2026 The rigidcx Authors
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

/* C interface to librigidcx.
 *
 * Objects are opaque handles released with the matching *_free function.
 * Every fallible call returns an rcx_status; on failure the message is
 * available from rcx_last_error() on the same thread until the next call.
 * Strings returned through char** are heap-allocated and must be released
 * with rcx_free_string(). */

#ifndef RIGIDCX_RIGIDCX_H_
#define RIGIDCX_RIGIDCX_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define RCX_API __declspec(dllexport)
#elif defined(__GNUC__)
#define RCX_API __attribute__((visibility("default")))
#else
#define RCX_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rcx_status {
  RCX_OK = 0,
  RCX_INVALID_ARGUMENT = 1,
  RCX_BUDGET_EXCEEDED = 2,
  RCX_FIELD_MISMATCH = 3,
  RCX_SINGULAR_MATRIX = 4,
  RCX_ZERO_DIVISOR = 5,
  RCX_PARSE = 6,
  RCX_UNKNOWN_VERTEX = 7,
  RCX_UNKNOWN_SIMPLEX = 8,
  RCX_PARTIAL_ASSIGNMENT = 9,
  RCX_NON_SIMPLE_GRAPH = 10,
  RCX_CAP_EXCEEDED = 11,
  RCX_NOT_POWER_OF_FIVE = 12,
  RCX_BOUND_EXCEEDED = 13,
  RCX_NO_FLIP = 14,
  RCX_INTERNAL = 99
} rcx_status;

typedef struct rcx_field rcx_field;
typedef struct rcx_ball rcx_ball;
typedef struct rcx_complex rcx_complex;
typedef struct rcx_autset rcx_autset;

RCX_API const char* rcx_version(void);
RCX_API const char* rcx_status_name(rcx_status status);
RCX_API const char* rcx_last_error(void);
RCX_API void rcx_free_string(char* s);

/* Binary fields F_2[t]/(modulus); elements are coefficient bit masks. */
RCX_API rcx_status rcx_field_new(uint32_t modulus, rcx_field** out);
RCX_API void rcx_field_free(rcx_field* field);
RCX_API uint32_t rcx_field_size(const rcx_field* field);
RCX_API rcx_status rcx_field_add(const rcx_field* field, uint32_t a, uint32_t b, uint32_t* out);
RCX_API rcx_status rcx_field_mul(const rcx_field* field, uint32_t a, uint32_t b, uint32_t* out);
RCX_API rcx_status rcx_field_inv(const rcx_field* field, uint32_t a, uint32_t* out);
RCX_API rcx_status rcx_field_pow(const rcx_field* field, uint32_t a, uint64_t e, uint32_t* out);
RCX_API rcx_status rcx_field_format(const rcx_field* field, uint32_t a, char** out);
RCX_API rcx_status rcx_field_parse(const rcx_field* field, const char* text, uint32_t* out);

/* Radius-r ball of the Cayley graph of the seven PGL_3(F_16) generators. */
RCX_API rcx_status rcx_lsv_ball_new(int radius, uint64_t vertex_budget, rcx_ball** out);
RCX_API void rcx_ball_free(rcx_ball* ball);
RCX_API size_t rcx_ball_vertex_count(const rcx_ball* ball);
RCX_API size_t rcx_ball_edge_count(const rcx_ball* ball);
/* Number of vertices at exactly `distance`; 0 beyond the radius. */
RCX_API size_t rcx_ball_sphere_size(const rcx_ball* ball, int distance);
RCX_API rcx_status rcx_ball_to_json(const rcx_ball* ball, char** out);
/* Clique complex of the ball graph, vertex ids = ball positions. */
RCX_API rcx_status rcx_ball_clique_complex(const rcx_ball* ball, int max_dim, rcx_complex** out);

RCX_API rcx_status rcx_complex_from_json(const char* json, rcx_complex** out);
RCX_API void rcx_complex_free(rcx_complex* complex);
RCX_API int rcx_complex_dimension(const rcx_complex* complex);
RCX_API size_t rcx_complex_simplex_count(const rcx_complex* complex, int dim);
RCX_API rcx_status rcx_complex_to_json(const rcx_complex* complex, char** out);
RCX_API rcx_status rcx_complex_link(const rcx_complex* complex, int64_t vertex,
                                    rcx_complex** out);
/* Copy with top-dimensional simplices colored uniformly at random from
 * {0..colors-1} by a seeded generator. */
RCX_API rcx_status rcx_complex_random_colors(const rcx_complex* complex, int colors,
                                             uint64_t seed, rcx_complex** out);

/* Automorphisms fixing every vertex in `fixed` (may be NULL when
 * fixed_count is 0). */
RCX_API rcx_status rcx_automorphisms(const rcx_complex* complex, const int64_t* fixed,
                                    size_t fixed_count, int respect_colors,
                                    rcx_autset** out);
RCX_API void rcx_autset_free(rcx_autset* set);
/* Group order in decimal. */
RCX_API rcx_status rcx_autset_order(const rcx_autset* set, char** out);
RCX_API double rcx_autset_log2_order(const rcx_autset* set);
RCX_API rcx_status rcx_autset_to_json(const rcx_autset* set, char** out);
/* 1 if the two complexes are isomorphic, 0 if not. */
RCX_API rcx_status rcx_isomorphic(const rcx_complex* a, const rcx_complex* b,
                                  int respect_colors, int* out);

/* Rank-one tree: color-preserving automorphisms of the radius-r ball that
 * fix the radius-s ball, in decimal. */
RCX_API rcx_status rcx_tree_color_count(int r, int s, char** out);
/* 1 if reduced words up to `max_length` give distinct classes. */
RCX_API rcx_status rcx_free_group_check(int max_length, int* out);

typedef struct rcx_run_config {
  const char* mode;
  int radius;
  int fix_radius;
  int colors;
  uint64_t seed;
  int seeds;
  uint64_t vertex_budget;
  uint64_t permutation_cap;
  int hop_depth;
} rcx_run_config;

/* Defaults matching the command-line tool. */
RCX_API void rcx_run_config_init(rcx_run_config* config);

/* Report-producing runs. `report` receives the JSON document, `dot` a
 * Graphviz export (possibly empty), `all_pass` 1 iff every check passed.
 * `dot` may be NULL. */
RCX_API rcx_status rcx_run_lsv(const rcx_run_config* config, char** report, char** dot,
                               int* all_pass);
RCX_API rcx_status rcx_run_tree(const rcx_run_config* config, char** report, char** dot,
                                int* all_pass);
RCX_API rcx_status rcx_run_rigidity(const rcx_run_config* config, char** report,
                                    char** dot, int* all_pass);

#ifdef __cplusplus
}  /* extern "C" */
#endif

#endif  /* RIGIDCX_RIGIDCX_H_ */
