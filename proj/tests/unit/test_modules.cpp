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

#include "bicyclic/error.hpp"
#include "bicyclic/modules.hpp"

using namespace bicyclic;

namespace {

ModVector b(std::size_t n) { return ModVector::basis(Shape::kInf, n); }

}  // namespace

TEST_SUITE("modules") {

TEST_CASE("simple actions") {
  const auto k2 = SimpleDesc::fin(2);
  const auto shift = SimpleDesc::inf();
  CHECK(act(k2, Element::x(), ModVector::fin(1)) == ModVector::fin(2));
  CHECK(act(k2, Element::y(), ModVector::fin(1)) == ModVector::fin(Scalar(1, 2)));
  CHECK(act(shift, Element::y(), b(0)).is_zero());
  CHECK(act(shift, Element::x(), b(2)) == b(3));
  const Element f = matrix_unit(0, 0);
  CHECK(act(shift, f, b(0)) == b(0));
  for (std::size_t n = 1; n < 5; ++n) CHECK(act(shift, f, b(n)).is_zero());

  CHECK_THROWS_AS(SimpleDesc::fin(0), Error);
  CHECK_THROWS_AS(shift.lambda(), Error);
  CHECK_THROWS_AS(check_membership(k2, b(1)), Error);
}

TEST_CASE("module maps") {
  const auto shift = SimpleDesc::inf();
  const SimpleModule target{shift};

  auto id = is_module_map<SimpleModule>(shift, target, [](std::size_t n) { return b(n); },
                                        ModVector(Shape::kInf), 8);
  CHECK(id.ok());

  auto scaled = is_module_map<SimpleModule>(
      shift, target, [](std::size_t n) { return power(Scalar(2), static_cast<long>(n)) * b(n); },
      ModVector(Shape::kInf), 8);
  REQUIRE_FALSE(scaled.ok());
  CHECK(scaled.counterexample->generator == "x");
  CHECK(scaled.counterexample->generator_index == 0);

  auto column = is_module_map<RegularModule>(
      shift, RegularModule{}, [](std::size_t n) { return matrix_unit(static_cast<unsigned>(n), 0); },
      Element(), 8);
  CHECK(column.ok());
}

TEST_CASE("column decomposition") {
  CHECK(column_intertwiner_check(0, 4).verdict == Verdict::kPass);
  CHECK(column_intertwiner_check(3, 4).verdict == Verdict::kPass);
}

TEST_CASE("cyclic generator") {
  ModVector v(Shape::kInf, {{0, 1}, {3, Scalar(2)}});
  const Element r = cyclic_generator_witness(v);
  CHECK(act(SimpleDesc::inf(), r, v) == b(0));
}

TEST_CASE("linear maps") {
  LinMap m(SimpleDesc::fin(1), SimpleDesc::inf(), {{0, b(2)}});
  CHECK(m(ModVector::fin(3)) == 3 * b(2));
  CHECK(m.extent() == 3);
  CHECK_THROWS_AS(LinMap(SimpleDesc::fin(1), SimpleDesc::inf(), {{1, b(0)}}), Error);
}

}  // TEST_SUITE
