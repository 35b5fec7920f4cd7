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

#include "bicyclic/algebra.hpp"
#include "bicyclic/error.hpp"

using namespace bicyclic;

namespace {

Element E(const char* text) { return parse_element(text); }

}  // namespace

TEST_SUITE("algebra") {

TEST_CASE("monomial product") {
  CHECK(Monomial{0, 1} * Monomial{1, 0} == Monomial{0, 0});
  CHECK(Monomial{1, 0} * Monomial{0, 1} == Monomial{1, 1});
  CHECK(Monomial{2, 3} * Monomial{1, 2} == Monomial{2, 4});
  CHECK(Monomial{0, 1} * Monomial{3, 0} == Monomial{2, 0});
}

TEST_CASE("defining relations") {
  const Element x = Element::x(), y = Element::y();
  const Element f = 1 - x * y;
  CHECK(y * x == Element(1));
  CHECK((y * f).is_zero());
  CHECK((f * x).is_zero());
  CHECK((x * y) * (x * y) == x * y);
  CHECK(Element(1) * E("2*x^2*y - y") == E("2*x^2*y - y"));
  CHECK(x * y - y * x == E("x*y - 1"));
}

TEST_CASE("parse and print") {
  CHECK(to_string(E("1 - x*y")) == "1 - x*y");
  CHECK(to_string(E("y*x")) == "1");
  CHECK(to_string(E("x*y - x*y")) == "0");
  CHECK(to_string(E("-2/3 * x^2 * y + y^3")) == "y^3 - 2/3*x^2*y");
  CHECK(E("(x + y)^2") == E("x^2 + x*y + 1 + y^2"));
  CHECK(E("y^2*x^3") == E("x"));

  SUBCASE("errors carry a position") {
    try {
      parse_element("x + * y");
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.code() == ErrorCode::kParse);
      CHECK(e.position() == 4);
    }
    CHECK_THROWS_AS(parse_element("x^"), ParseError);
    CHECK_THROWS_AS(parse_element("(x"), ParseError);
    CHECK_THROWS_AS(parse_element("1/0"), ParseError);
    CHECK_THROWS_AS(parse_element("z"), ParseError);
  }
}

TEST_CASE("degree") {
  CHECK(Element().degree() == -1);
  CHECK(Element(3).degree() == 0);
  CHECK(E("x^2*y + y").degree() == 3);
}

TEST_CASE("involution") {
  CHECK(involution(Element::x()) == Element::y());
  CHECK(involution(E("x^2*y")) == E("x*y^2"));
  CHECK(involution(Element(1)) == Element(1));
  const Element a = E("x^2 - 3*x*y^2"), b = E("y + 1/2*x^3*y");
  CHECK(involution(involution(a)) == a);
  CHECK(involution(a * b) == involution(b) * involution(a));
}

TEST_CASE("matrix units") {
  CHECK(matrix_unit(0, 0) == E("1 - x*y"));
  CHECK(matrix_unit(2, 1) == E("x^2*y - x^3*y^2"));
  CHECK(matrix_unit(0, 1) * matrix_unit(1, 0) == matrix_unit(0, 0));
  CHECK((matrix_unit(0, 1) * matrix_unit(2, 0)).is_zero());
  CHECK(matrix_unit(0, 0) * matrix_unit(0, 0) == matrix_unit(0, 0));
  CHECK((Element::y() * matrix_unit(0, 3)).is_zero());
}

TEST_CASE("truncated representation") {
  const TruncMatrix mx = to_matrix(Element::x(), 3);
  for (std::size_t r = 0; r < 3; ++r) {
    for (std::size_t c = 0; c < 3; ++c) CHECK(mx(r, c) == (r == c + 1 ? 1 : 0));
  }
  CHECK(to_matrix(Element(1), 5) == TruncMatrix::identity(5));

  const TruncMatrix m00 = to_matrix(matrix_unit(0, 0), 4);
  TruncMatrix expected(4);
  expected(0, 0) = 1;
  CHECK(m00 == expected);

  CHECK_THROWS_AS(to_matrix(Element::x(), 0), Error);

  SUBCASE("border contract") {
    const Element a = E("x^2*y + 2*y"), b = E("x - y^2");
    const std::size_t n = 10;
    const std::size_t d = static_cast<std::size_t>(a.degree() + b.degree());
    CHECK((to_matrix(a * b, n).block(n - d) == (to_matrix(a, n) * to_matrix(b, n)).block(n - d)));
  }
}

TEST_CASE("laurent image") {
  CHECK(laurent_image(E("1 - x*y")).is_zero());
  CHECK(laurent_image(E("x^2*y")) == LaurentPoly::monomial(1));
  CHECK(laurent_image(Element(1)) == LaurentPoly::monomial(0));
  CHECK(laurent_image(matrix_unit(3, 1)).is_zero());
  const Element a = E("x - 2*y^2"), b = E("x^2*y + 3");
  CHECK(laurent_image(a * b) == laurent_image(a) * laurent_image(b));
}

TEST_CASE("differential operator action") {
  const Polynomial x3 = Polynomial::monomial(3);
  CHECK(diffop_action(Element::y(), x3) == Polynomial::monomial(2));
  CHECK(diffop_action(Element::y(), Polynomial::monomial(0)).is_zero());
  CHECK(diffop_action(Element::x(), Polynomial::monomial(2)) == x3);
  CHECK(diffop_action(E("1 - x*y"), Polynomial::monomial(0)) == Polynomial::monomial(0));
  CHECK(diffop_action(E("1 - x*y"), x3).is_zero());
}

TEST_CASE("center") {
  for (unsigned D : {0u, 4u}) {
    const auto basis = center_slice(D);
    REQUIRE(basis.size() == 1);
    CHECK(basis[0] == Element(1));
  }
}

}  // TEST_SUITE
