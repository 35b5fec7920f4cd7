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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>
#include <memory>
#include <string>

#include "bicyclic/bicyclic.h"

using nlohmann::json;

namespace {

struct ElementDeleter {
  void operator()(bc_element* a) const { bc_element_free(a); }
};
struct SpecDeleter {
  void operator()(bc_ext_spec* s) const { bc_ext_spec_free(s); }
};
struct ReportDeleter {
  void operator()(bc_report* r) const { bc_report_free(r); }
};
using ElementPtr = std::unique_ptr<bc_element, ElementDeleter>;
using SpecPtr = std::unique_ptr<bc_ext_spec, SpecDeleter>;
using ReportPtr = std::unique_ptr<bc_report, ReportDeleter>;

std::string take(char* s) {
  REQUIRE(s != nullptr);
  std::string out(s);
  bc_string_free(s);
  return out;
}

ElementPtr parse(const char* text) {
  bc_element* a = nullptr;
  REQUIRE(bc_element_parse(text, &a) == BC_OK);
  return ElementPtr(a);
}

SpecPtr spec(const char* text) {
  bc_ext_spec* s = nullptr;
  REQUIRE(bc_ext_spec_from_json(text, &s) == BC_OK);
  return SpecPtr(s);
}

std::string to_string(const bc_element* a) {
  char* s = nullptr;
  REQUIRE(bc_element_to_string(a, &s) == BC_OK);
  return take(s);
}

constexpr const char* kCaseII =
    R"({"U":{"type":"inf"},"V":{"type":"fin","lambda":"1"},"delta_x":{"coords":{"0":"1"}}})";
constexpr const char* kCaseIIShifted =
    R"({"U":{"type":"inf"},"V":{"type":"fin","lambda":"1"},"delta_x":{"coords":{"1":"1"}}})";

}  // namespace

TEST_CASE("status names and version") {
  CHECK(std::string(bc_version()).size() > 0);
  CHECK(std::string(bc_status_name(BC_OK)) == "ok");
  CHECK(std::string(bc_status_name(BC_ERR_INCOMPATIBLE_DELTA)) == "incompatible_delta");
}

TEST_CASE("element arithmetic") {
  auto x = parse("x"), y = parse("y");
  bc_element* p = nullptr;
  REQUIRE(bc_element_mul(y.get(), x.get(), &p) == BC_OK);
  ElementPtr yx(p);
  CHECK(to_string(yx.get()) == "1");

  REQUIRE(bc_element_mul(x.get(), y.get(), &p) == BC_OK);
  ElementPtr xy(p);
  REQUIRE(bc_element_add(xy.get(), yx.get(), &p) == BC_OK);
  CHECK(to_string(ElementPtr(p).get()) == "1 + x*y");

  REQUIRE(bc_element_involution(parse("x^2*y").get(), &p) == BC_OK);
  int equal = 0;
  REQUIRE(bc_element_equal(ElementPtr(p).get(), parse("x*y^2").get(), &equal) == BC_OK);
  CHECK(equal == 1);

  char* s = nullptr;
  REQUIRE(bc_element_laurent(parse("x^2*y").get(), &s) == BC_OK);
  CHECK(take(s) == "t");
  REQUIRE(bc_element_matrix(parse("1 - x*y").get(), 2, &s) == BC_OK);
  CHECK(take(s) == "1 0\n0 0\n");
  REQUIRE(bc_element_to_json(parse("2*x").get(), &s) == BC_OK);
  CHECK(json::parse(take(s)) == json::parse(R"([{"i":1,"j":0,"c":"2"}])"));

  REQUIRE(bc_element_from_json(R"("y*x^2")", &p) == BC_OK);
  CHECK(to_string(ElementPtr(p).get()) == "x");
}

TEST_CASE("errors") {
  bc_element* a = nullptr;
  CHECK(bc_element_parse("x + * y", &a) == BC_ERR_PARSE);
  CHECK(a == nullptr);
  const json err = json::parse(bc_last_error_json());
  CHECK(err["error"] == "ParseError");
  CHECK(err["position"] == 4);
  CHECK(std::string(bc_last_error()).find("position 4") != std::string::npos);

  CHECK(bc_element_parse(nullptr, &a) == BC_ERR_NULL_ARGUMENT);
  CHECK(bc_element_parse("x", nullptr) == BC_ERR_NULL_ARGUMENT);
  char* s = nullptr;
  CHECK(bc_element_matrix(parse("x").get(), 0, &s) == BC_ERR_INVALID_ARGUMENT);

  bc_ext_spec* sp = nullptr;
  CHECK(bc_ext_spec_from_json("{not json", &sp) == BC_ERR_PARSE);
  CHECK(bc_ext_spec_from_json(R"({"U":{"type":"inf"}})", &sp) == BC_ERR_PARSE);
}

TEST_CASE("extensions") {
  auto a = spec(kCaseII), b = spec(kCaseIIShifted);
  CHECK(bc_ext_validate(a.get()) == BC_OK);

  char* out = nullptr;
  REQUIRE(bc_ext_split(a.get(), &out) == BC_OK);
  const json split = json::parse(take(out));
  CHECK(split["verdict"] == "nonsplit");
  CHECK(split["replayed"] == true);

  REQUIRE(bc_ext_iso(a.get(), b.get(), &out) == BC_OK);
  const json iso = json::parse(take(out));
  CHECK(iso["isomorphic"] == true);
  CHECK(iso["map"]["w"] == json::parse(R"({"coords":{"0":"1"}})"));

  REQUIRE(bc_ext_classify(b.get(), &out) == BC_OK);
  CHECK(json::parse(take(out))["comparison"] == "AGREES");

  REQUIRE(bc_ext_equiv(a.get(), a.get(), &out) == BC_OK);
  CHECK(json::parse(take(out))["equivalent"] == true);

  auto bad = spec(R"({"U":{"type":"inf"},"V":{"type":"fin","lambda":"1"},
                      "delta_x":{"coords":{"1":"1"}},"delta_y":{"coords":{}}})");
  CHECK(bc_ext_validate(bad.get()) == BC_ERR_INCOMPATIBLE_DELTA);
  const json err = json::parse(bc_last_error_json());
  CHECK(err["basis_index"] == 0);
  CHECK(err["residual"] == json::parse(R"({"coords":{"0":"1"}})"));
  CHECK(bc_ext_split(bad.get(), &out) == BC_ERR_INCOMPATIBLE_DELTA);

  auto fin = spec(R"({"U":{"type":"fin","lambda":"1"},"V":{"type":"fin","lambda":"1"},"delta_x":{"d":"1"}})");
  CHECK(bc_ext_iso(a.get(), fin.get(), &out) == BC_ERR_SHAPE_MISMATCH);
}

TEST_CASE("verify") {
  bc_verify_config config;
  bc_verify_config_default(&config);
  CHECK(config.max_degree == 6);
  config.max_degree = 3;
  config.slack_cap = 4;
  bc_report* r = nullptr;
  REQUIRE(bc_verify_run(&config, &r) == BC_OK);
  ReportPtr report(r);
  CHECK(bc_report_count(r, BC_FAIL) == 0);
  CHECK(bc_report_count(r, BC_DISCREPANCY) > 0);

  char* out = nullptr;
  REQUIRE(bc_report_json(r, &out) == BC_OK);
  const json j = json::parse(take(out));
  CHECK(j["summary"]["FAIL"] == 0);
  REQUIRE(bc_report_dot(r, &out) == BC_OK);
  CHECK(take(out).rfind("digraph links {", 0) == 0);
  REQUIRE(bc_report_text(r, &out) == BC_OK);
  CHECK(take(out).find("DISCREPANCY") != std::string::npos);

  config.slack_cap = 1;
  bc_report* none = nullptr;
  CHECK(bc_verify_run(&config, &none) == BC_ERR_INVALID_ARGUMENT);
  CHECK(none == nullptr);
}
