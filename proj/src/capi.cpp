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

#include "bicyclic/bicyclic.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "bicyclic/report.hpp"
#include "bicyclic/serialize.hpp"

struct bc_element {
  bicyclic::Element value;
};

struct bc_ext_spec {
  bicyclic::ExtSpec value;
};

struct bc_report {
  bicyclic::ClaimReport value;
};

namespace {

thread_local std::string g_error;
thread_local std::string g_error_json = "null";

bc_status status_of(bicyclic::ErrorCode code) {
  using bicyclic::ErrorCode;
  switch (code) {
    case ErrorCode::kParse: return BC_ERR_PARSE;
    case ErrorCode::kInvalidArgument: return BC_ERR_INVALID_ARGUMENT;
    case ErrorCode::kIncompatibleDelta: return BC_ERR_INCOMPATIBLE_DELTA;
    case ErrorCode::kShapeMismatch: return BC_ERR_SHAPE_MISMATCH;
    case ErrorCode::kNotNonsplit: return BC_ERR_NOT_NONSPLIT;
    case ErrorCode::kStabilizationFailure: return BC_ERR_STABILIZATION_FAILURE;
    case ErrorCode::kZeroElement: return BC_ERR_ZERO_ELEMENT;
    case ErrorCode::kWindowMismatch: return BC_ERR_WINDOW_MISMATCH;
  }
  return BC_ERR_INTERNAL;
}

bc_status fail(bc_status status, const std::string& message, bicyclic::Json json) {
  g_error = message;
  g_error_json = json.dump();
  return status;
}

template <class F>
bc_status guarded(F&& body) {
  try {
    g_error.clear();
    g_error_json = "null";
    return body();
  } catch (const bicyclic::Error& e) {
    return fail(status_of(e.code()), e.what(), bicyclic::error_to_json(e));
  } catch (const std::bad_alloc&) {
    return fail(BC_ERR_INTERNAL, "out of memory", {{"error", "internal"}, {"message", "out of memory"}});
  } catch (const std::exception& e) {
    return fail(BC_ERR_INTERNAL, e.what(), {{"error", "internal"}, {"message", e.what()}});
  }
}

bc_status null_argument() {
  return fail(BC_ERR_NULL_ARGUMENT, "null argument", {{"error", "null_argument"}, {"message", "null argument"}});
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

bc_status emit(const std::string& s, char** out) {
  *out = copy_string(s);
  return BC_OK;
}

bicyclic::Json parse_json(const char* text) {
  try {
    return bicyclic::Json::parse(text);
  } catch (const bicyclic::Json::parse_error& e) {
    throw bicyclic::ParseError(e.byte, e.what());
  }
}

}  // namespace

extern "C" {

const char* bc_version(void) { return "0.1.0"; }

const char* bc_status_name(bc_status status) {
  switch (status) {
    case BC_OK: return "ok";
    case BC_ERR_PARSE: return "parse";
    case BC_ERR_INVALID_ARGUMENT: return "invalid_argument";
    case BC_ERR_INCOMPATIBLE_DELTA: return "incompatible_delta";
    case BC_ERR_SHAPE_MISMATCH: return "shape_mismatch";
    case BC_ERR_NOT_NONSPLIT: return "not_nonsplit";
    case BC_ERR_STABILIZATION_FAILURE: return "stabilization_failure";
    case BC_ERR_ZERO_ELEMENT: return "zero_element";
    case BC_ERR_WINDOW_MISMATCH: return "window_mismatch";
    case BC_ERR_NULL_ARGUMENT: return "null_argument";
    case BC_ERR_INTERNAL: return "internal";
  }
  return "unknown";
}

const char* bc_last_error(void) { return g_error.c_str(); }
const char* bc_last_error_json(void) { return g_error_json.c_str(); }
void bc_string_free(char* s) { std::free(s); }

bc_status bc_element_parse(const char* text, bc_element** out) {
  if (!text || !out) return null_argument();
  return guarded([&] {
    *out = new bc_element{bicyclic::parse_element(text)};
    return BC_OK;
  });
}

bc_status bc_element_from_json(const char* json, bc_element** out) {
  if (!json || !out) return null_argument();
  return guarded([&] {
    *out = new bc_element{bicyclic::element_from_json(parse_json(json))};
    return BC_OK;
  });
}

void bc_element_free(bc_element* a) { delete a; }

bc_status bc_element_to_string(const bc_element* a, char** out) {
  if (!a || !out) return null_argument();
  return guarded([&] { return emit(bicyclic::to_string(a->value), out); });
}

bc_status bc_element_to_json(const bc_element* a, char** out) {
  if (!a || !out) return null_argument();
  return guarded([&] { return emit(bicyclic::element_to_json(a->value).dump(), out); });
}

bc_status bc_element_add(const bc_element* a, const bc_element* b, bc_element** out) {
  if (!a || !b || !out) return null_argument();
  return guarded([&] {
    *out = new bc_element{a->value + b->value};
    return BC_OK;
  });
}

bc_status bc_element_mul(const bc_element* a, const bc_element* b, bc_element** out) {
  if (!a || !b || !out) return null_argument();
  return guarded([&] {
    *out = new bc_element{a->value * b->value};
    return BC_OK;
  });
}

bc_status bc_element_involution(const bc_element* a, bc_element** out) {
  if (!a || !out) return null_argument();
  return guarded([&] {
    *out = new bc_element{bicyclic::involution(a->value)};
    return BC_OK;
  });
}

bc_status bc_element_equal(const bc_element* a, const bc_element* b, int* out) {
  if (!a || !b || !out) return null_argument();
  *out = a->value == b->value ? 1 : 0;
  return BC_OK;
}

bc_status bc_element_matrix(const bc_element* a, size_t n, char** out) {
  if (!a || !out) return null_argument();
  return guarded([&] { return emit(bicyclic::to_string(bicyclic::to_matrix(a->value, n)), out); });
}

bc_status bc_element_laurent(const bc_element* a, char** out) {
  if (!a || !out) return null_argument();
  return guarded([&] { return emit(bicyclic::to_string(bicyclic::laurent_image(a->value)), out); });
}

bc_status bc_ext_spec_from_json(const char* json, bc_ext_spec** out) {
  if (!json || !out) return null_argument();
  return guarded([&] {
    *out = new bc_ext_spec{bicyclic::spec_from_json(parse_json(json))};
    return BC_OK;
  });
}

void bc_ext_spec_free(bc_ext_spec* s) { delete s; }

bc_status bc_ext_spec_to_json(const bc_ext_spec* s, char** out) {
  if (!s || !out) return null_argument();
  return guarded([&] { return emit(bicyclic::spec_to_json(s->value).dump(), out); });
}

bc_status bc_ext_validate(const bc_ext_spec* s) {
  if (!s) return null_argument();
  return guarded([&] {
    bicyclic::validate_delta(s->value);
    return BC_OK;
  });
}

bc_status bc_ext_split(const bc_ext_spec* s, char** json_out) {
  if (!s || !json_out) return null_argument();
  return guarded([&] {
    return emit(bicyclic::split_to_json(s->value, bicyclic::split_test(s->value)).dump(), json_out);
  });
}

bc_status bc_ext_iso(const bc_ext_spec* a, const bc_ext_spec* b, char** json_out) {
  if (!a || !b || !json_out) return null_argument();
  return guarded([&] {
    return emit(bicyclic::iso_to_json(a->value, b->value, bicyclic::iso_test(a->value, b->value)).dump(), json_out);
  });
}

bc_status bc_ext_equiv(const bc_ext_spec* a, const bc_ext_spec* b, char** json_out) {
  if (!a || !b || !json_out) return null_argument();
  return guarded([&] {
    const auto f = bicyclic::find_equivalence(a->value, b->value);
    bicyclic::Json j = {{"equivalent", f.has_value()}};
    if (f) {
      j["map"] = bicyclic::intertwiner_to_json(*f);
      j["replayed"] = bicyclic::replay_intertwiner(a->value, b->value, *f);
    }
    return emit(j.dump(), json_out);
  });
}

bc_status bc_ext_classify(const bc_ext_spec* s, char** json_out) {
  if (!s || !json_out) return null_argument();
  return guarded([&] {
    return emit(bicyclic::classification_to_json(s->value, bicyclic::classify(s->value)).dump(), json_out);
  });
}

void bc_verify_config_default(bc_verify_config* config) {
  if (!config) return;
  const bicyclic::RunConfig d;
  config->max_degree = d.max_degree;
  config->slack_cap = d.slack_cap;
  config->seed = d.seed;
}

bc_status bc_verify_run(const bc_verify_config* config, bc_report** out) {
  if (!config || !out) return null_argument();
  return guarded([&] {
    bicyclic::RunConfig c;
    c.max_degree = config->max_degree;
    c.slack_cap = config->slack_cap;
    c.seed = config->seed;
    *out = new bc_report{bicyclic::run_report(c)};
    return BC_OK;
  });
}

void bc_report_free(bc_report* r) { delete r; }

size_t bc_report_count(const bc_report* r, bc_verdict verdict) {
  if (!r) return 0;
  switch (verdict) {
    case BC_PASS: return r->value.count(bicyclic::Verdict::kPass);
    case BC_DISCREPANCY: return r->value.count(bicyclic::Verdict::kDiscrepancy);
    case BC_FAIL: return r->value.count(bicyclic::Verdict::kFail);
  }
  return 0;
}

bc_status bc_report_json(const bc_report* r, char** out) {
  if (!r || !out) return null_argument();
  return guarded([&] { return emit(bicyclic::report_to_json(r->value).dump(2) + "\n", out); });
}

bc_status bc_report_text(const bc_report* r, char** out) {
  if (!r || !out) return null_argument();
  return guarded([&] { return emit(bicyclic::report_to_text(r->value), out); });
}

bc_status bc_report_dot(const bc_report* r, char** out) {
  if (!r || !out) return null_argument();
  return guarded([&] { return emit(bicyclic::graph_to_dot(r->value.graph), out); });
}

}  // extern "C"
