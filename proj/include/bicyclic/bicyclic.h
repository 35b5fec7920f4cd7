// Copyright 2026 The bicyclic Authors. All Rights Reserved.
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

/* C interface to the bicyclic library. Every fallible call returns a
 * bc_status; on failure bc_last_error() and bc_last_error_json() describe the
 * error for the calling thread. Strings returned through char** are owned by
 * the caller and released with bc_string_free. */
#ifndef BICYCLIC_BICYCLIC_H_
#define BICYCLIC_BICYCLIC_H_

#include <stddef.h>
#include <stdint.h>

#if defined(BICYCLIC_BUILDING_LIBRARY)
#define BC_API __attribute__((visibility("default")))
#else
#define BC_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum bc_status {
  BC_OK = 0,
  BC_ERR_PARSE = 1,
  BC_ERR_INVALID_ARGUMENT = 2,
  BC_ERR_INCOMPATIBLE_DELTA = 3,
  BC_ERR_SHAPE_MISMATCH = 4,
  BC_ERR_NOT_NONSPLIT = 5,
  BC_ERR_STABILIZATION_FAILURE = 6,
  BC_ERR_ZERO_ELEMENT = 7,
  BC_ERR_WINDOW_MISMATCH = 8,
  BC_ERR_NULL_ARGUMENT = 9,
  BC_ERR_INTERNAL = 10
} bc_status;

typedef enum bc_verdict { BC_PASS = 0, BC_DISCREPANCY = 1, BC_FAIL = 2 } bc_verdict;

typedef struct bc_element bc_element;
typedef struct bc_ext_spec bc_ext_spec;
typedef struct bc_report bc_report;

typedef struct bc_verify_config {
  unsigned max_degree;
  unsigned slack_cap;
  uint32_t seed;
} bc_verify_config;

BC_API const char* bc_version(void);
BC_API const char* bc_status_name(bc_status status);
BC_API const char* bc_last_error(void);
/* {"error": name, "message": ..., plus "position" or "basis_index"/"residual"}. */
BC_API const char* bc_last_error_json(void);
BC_API void bc_string_free(char* s);

/* Elements of R = k<x, y>/(yx - 1). */
BC_API bc_status bc_element_parse(const char* text, bc_element** out);
BC_API bc_status bc_element_from_json(const char* json, bc_element** out);
BC_API void bc_element_free(bc_element* a);
BC_API bc_status bc_element_to_string(const bc_element* a, char** out);
BC_API bc_status bc_element_to_json(const bc_element* a, char** out);
BC_API bc_status bc_element_add(const bc_element* a, const bc_element* b, bc_element** out);
BC_API bc_status bc_element_mul(const bc_element* a, const bc_element* b, bc_element** out);
BC_API bc_status bc_element_involution(const bc_element* a, bc_element** out);
BC_API bc_status bc_element_equal(const bc_element* a, const bc_element* b, int* out);
/* n x n truncation of the shift representation, one row per line. */
BC_API bc_status bc_element_matrix(const bc_element* a, size_t n, char** out);
BC_API bc_status bc_element_laurent(const bc_element* a, char** out);

/* Extensions 0 -> U -> E -> V -> 0 of simple modules, from spec JSON. */
BC_API bc_status bc_ext_spec_from_json(const char* json, bc_ext_spec** out);
BC_API void bc_ext_spec_free(bc_ext_spec* s);
BC_API bc_status bc_ext_spec_to_json(const bc_ext_spec* s, char** out);
/* BC_ERR_INCOMPATIBLE_DELTA when the compatibility relation fails. */
BC_API bc_status bc_ext_validate(const bc_ext_spec* s);
BC_API bc_status bc_ext_split(const bc_ext_spec* s, char** json_out);
BC_API bc_status bc_ext_iso(const bc_ext_spec* a, const bc_ext_spec* b, char** json_out);
BC_API bc_status bc_ext_equiv(const bc_ext_spec* a, const bc_ext_spec* b, char** json_out);
BC_API bc_status bc_ext_classify(const bc_ext_spec* s, char** json_out);

/* Verification suite. */
BC_API void bc_verify_config_default(bc_verify_config* config);
BC_API bc_status bc_verify_run(const bc_verify_config* config, bc_report** out);
BC_API void bc_report_free(bc_report* r);
BC_API size_t bc_report_count(const bc_report* r, bc_verdict verdict);
BC_API bc_status bc_report_json(const bc_report* r, char** out);
BC_API bc_status bc_report_text(const bc_report* r, char** out);
BC_API bc_status bc_report_dot(const bc_report* r, char** out);

#ifdef __cplusplus
}
#endif

#endif /* BICYCLIC_BICYCLIC_H_ */
