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

#include <doctest.h>

#include "bicyclic/links.hpp"
#include "bicyclic/serialize.hpp"

using namespace bicyclic;

TEST_SUITE("serialize") {

TEST_CASE("elements") {
  const Element a = parse_element("3/2 - x*y^2 + x^4");
  const Json j = element_to_json(a);
  CHECK(j.is_array());
  CHECK(j[0]["c"] == "3/2");
  CHECK(element_from_json(j) == a);
  CHECK(element_from_json(Json("y*x")) == Element(1));
  CHECK_THROWS_AS(element_from_json(Json(42)), Error);
}

TEST_CASE("descriptors and vectors") {
  CHECK(desc_to_json(SimpleDesc::inf()) == Json{{"type", "inf"}});
  CHECK(desc_from_json(Json::parse(R"({"type":"fin","lambda":"-1/2"})")) == SimpleDesc::fin(Scalar(-1, 2)));
  CHECK_THROWS_AS(desc_from_json(Json::parse(R"({"type":"fin","lambda":"0"})")), Error);

  ModVector v(Shape::kInf, {{0, 1}, {4, Scalar(-2, 3)}});
  CHECK(vector_to_json(v) == Json::parse(R"({"coords":{"0":"1","4":"-2/3"}})"));
  CHECK(vector_from_json(vector_to_json(v), Shape::kInf) == v);
  CHECK(vector_to_json(ModVector::fin(5)) == Json::parse(R"({"d":"5"})"));
}

TEST_CASE("specs") {
  const Json j = Json::parse(R"({
    "U": {"type": "inf"},
    "V": {"type": "fin", "lambda": "1"},
    "delta_x": {"coords": {"1": "1"}}
  })");
  const ExtSpec s = spec_from_json(j);
  CHECK(s.delta.dy(ModVector::fin(1)) == ModVector(Shape::kInf, {{0, -1}}));
  CHECK(spec_from_json(spec_to_json(s)) == s);

  SUBCASE("incompatible delta_y") {
    Json bad = j;
    bad["delta_y"] = Json::parse(R"({"coords": {"0": "1"}})");
    const ExtSpec given = spec_from_json(bad);
    try {
      validate_delta(given);
      FAIL("expected IncompatibleDelta");
    } catch (const IncompatibleDelta& e) {
      const Json err = error_to_json(e);
      CHECK(err["error"] == "IncompatibleDelta");
      CHECK(err["basis_index"] == 0);
    }
  }
  SUBCASE("malformed input") {
    try {
      spec_from_json(Json::parse(R"({"U": {"type": "inf"}})"));
      FAIL("expected a parse error");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::kParse);
    }
  }
}

TEST_CASE("results") {
  const ExtSpec s = spec_from_json(Json::parse(
      R"({"U":{"type":"inf"},"V":{"type":"fin","lambda":"1"},"delta_x":{"coords":{"0":"1"}}})"));
  const Json split = split_to_json(s, split_test(s));
  CHECK(split["verdict"] == "nonsplit");
  CHECK(split["certificate"]["kind"] == "inconsistent_section_system");
  CHECK(split["replayed"] == true);

  const Json c = classification_to_json(s, classify(s));
  CHECK(c["case"] == "ii");
  CHECK(c["comparison"] == "AGREES");

  const Json iso = iso_to_json(s, s, iso_test(s, s));
  CHECK(iso["isomorphic"] == true);
  CHECK(iso["replayed"] == true);
}

TEST_CASE("link graph output") {
  const LinkGraph g = link_graph({Scalar(-1)}, 4, 6);
  const Json j = graph_to_json(g);
  CHECK(j["vertices"] == Json::parse(R"j(["(0)","F","P(-1)"])j"));
  REQUIRE(j["edges"].size() == 1);
  CHECK(j["edges"][0]["from"] == "P(-1)");
  CHECK(j["edges"][0]["certificate"]["quotient"][0] == "1 + y");

  const std::string dot = graph_to_dot(g);
  CHECK(dot.rfind("digraph links {", 0) == 0);
  CHECK(dot.find("\"P(-1)\" -> \"P(-1)\" [label=\"dim 1\"];") != std::string::npos);
}

}  // TEST_SUITE
