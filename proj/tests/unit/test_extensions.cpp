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

#include "bicyclic/extensions.hpp"

using namespace bicyclic;

namespace {

ModVector e(std::size_t n, const Scalar& c = 1) {
  ModVector v(Shape::kInf);
  v.add(n, c);
  return v;
}

// U = shift module, V = k_lambda, delta(x)(d) = v.
ExtSpec inf_fin(const Scalar& lambda, const ModVector& v) {
  const auto U = SimpleDesc::inf(), V = SimpleDesc::fin(lambda);
  return make_spec(U, V, LinMap(V, U, {{0, v}}));
}

ExtSpec fin_fin(const Scalar& mu, const Scalar& lambda, const Scalar& c) {
  const auto U = SimpleDesc::fin(mu), V = SimpleDesc::fin(lambda);
  LinMap dx(V, U);
  if (c != 0) dx.set_column(0, ModVector::fin(c));
  return make_spec(U, V, dx);
}

}  // namespace

TEST_SUITE("extensions") {

TEST_CASE("compatibility") {
  const auto U = SimpleDesc::inf(), V = SimpleDesc::fin(1);
  ExtSpec zero{U, V, {LinMap(V, U), LinMap(V, U)}};
  CHECK_NOTHROW(validate_delta(zero));

  ExtSpec ok{U, V, {LinMap(V, U, {{0, e(0)}}), LinMap(V, U)}};
  CHECK_NOTHROW(validate_delta(ok));

  ExtSpec bad{U, V, {LinMap(V, U, {{0, e(1)}}), LinMap(V, U)}};
  try {
    validate_delta(bad);
    FAIL("expected IncompatibleDelta");
  } catch (const IncompatibleDelta& err) {
    CHECK(err.code() == ErrorCode::kIncompatibleDelta);
    CHECK(err.basis_index() == 0);
    CHECK(err.residual() == e(0));
  }
}

TEST_CASE("delta completion") {
  const Scalar lambda(3);
  const auto U = SimpleDesc::inf(), V = SimpleDesc::fin(lambda);
  CHECK(complete_delta(U, V, LinMap(V, U, {{0, e(1)}})).dy(ModVector::fin(1)) == e(0, -1 / lambda));
  CHECK(complete_delta(U, V, LinMap(V, U, {{0, e(0)}})).dy.is_zero());

  const auto W = SimpleDesc::inf();
  const DeltaMap z = complete_delta(U, W, LinMap(W, U), e(0, 0));
  CHECK(z.dx.is_zero());
  CHECK(z.dy.is_zero());

  const auto A = SimpleDesc::fin(2), B = SimpleDesc::fin(5);
  const DeltaMap ff = complete_delta(A, B, LinMap(B, A, {{0, ModVector::fin(7)}}));
  CHECK(ff.dy(ModVector::fin(1)) == ModVector::fin(Scalar(-7, 10)));
}

TEST_CASE("block action") {
  const ExtSpec s = inf_fin(1, e(0));
  const ExtVector d{ModVector(Shape::kInf), ModVector::fin(1)};
  const ExtVector xd = ext_act(s, Element::x(), d);
  CHECK(xd.u == e(0));
  CHECK(xd.v == ModVector::fin(1));

  const ExtSpec z = fin_fin(2, 3, 0);
  const ExtVector v{ModVector::fin(1), ModVector::fin(1)};
  const ExtVector xv = ext_act(z, Element::x(), v);
  CHECK(xv.u == ModVector::fin(2));
  CHECK(xv.v == ModVector::fin(3));
}

TEST_CASE("split test") {
  SUBCASE("V = shift module always splits") {
    const auto U = SimpleDesc::fin(2), V = SimpleDesc::inf();
    const ExtSpec s = make_spec(U, V, LinMap(V, U, {{0, ModVector::fin(1)}, {3, ModVector::fin(-2)}}),
                                ModVector::fin(4));
    const SplitResult r = split_test(s);
    REQUIRE(r.is_split());
    const auto& cert = std::get<SplitCertificate>(r.outcome);
    REQUIRE(cert.witness.has_value());
    CHECK(ext_act(s, Element::y(), *cert.witness).is_zero());
    CHECK(replay_split_certificate(s, r));
  }
  SUBCASE("delta(x) = e_0 is nonsplit") {
    const ExtSpec s = inf_fin(1, e(0));
    const SplitResult r = split_test(s);
    REQUIRE_FALSE(r.is_split());
    const auto& cert = std::get<NonsplitCertificate>(r.outcome);
    CHECK(cert.residue != 0);
    CHECK(certifies_inconsistency(cert.system, cert.multipliers));
    CHECK(replay_split_certificate(s, r));
  }
  SUBCASE("delta(x) = e_1 - e_0 splits with w = -e_0") {
    const ExtSpec s = inf_fin(1, e(1) - e(0));
    const SplitResult r = split_test(s);
    REQUIRE(r.is_split());
    CHECK(*std::get<SplitCertificate>(r.outcome).correction == e(0, -1));
    CHECK(replay_split_certificate(s, r));
  }
  SUBCASE("distinct eigenvalues split") {
    const SplitResult r = split_test(fin_fin(1, 2, 1));
    CHECK(r.is_split());
    CHECK(replay_split_certificate(fin_fin(1, 2, 1), r));
  }
  SUBCASE("Jordan block is nonsplit") {
    const SplitResult r = split_test(fin_fin(1, 1, 1));
    CHECK_FALSE(r.is_split());
    CHECK(replay_split_certificate(fin_fin(1, 1, 1), r));
  }
  SUBCASE("invalid specs are rejected") {
    const auto U = SimpleDesc::inf(), V = SimpleDesc::fin(1);
    ExtSpec bad{U, V, {LinMap(V, U, {{0, e(1)}}), LinMap(V, U)}};
    CHECK_THROWS_AS(split_test(bad), IncompatibleDelta);
  }
}

TEST_CASE("isomorphism test") {
  const ExtSpec a = inf_fin(1, e(0));
  SUBCASE("proportional deltas") {
    const IsoResult r = iso_test(a, inf_fin(1, e(0, 2)));
    REQUIRE(r.is_iso());
    CHECK(replay_intertwiner(a, inf_fin(1, e(0, 2)), *r.map));
  }
  SUBCASE("lambda must match") {
    CHECK_FALSE(iso_test(a, inf_fin(2, e(0))).is_iso());
  }
  SUBCASE("e_0 against e_1") {
    const ExtSpec b = inf_fin(1, e(1));
    const IsoResult r = iso_test(a, b);
    REQUIRE(r.is_iso());
    CHECK(r.map->a == 1);
    CHECK(r.map->b == 1);
    CHECK(r.map->w == e(0));
    CHECK(replay_intertwiner(a, b, *r.map));
  }
  SUBCASE("identical specs") {
    const IsoResult r = iso_test(a, a);
    REQUIRE(r.is_iso());
    CHECK(r.map->a == 1);
    CHECK(r.map->b == 1);
    CHECK(r.map->w.is_zero());
  }
  SUBCASE("mixed shapes") {
    CHECK_THROWS_AS(iso_test(a, fin_fin(1, 1, 1)), Error);
  }
}

TEST_CASE("equivalence") {
  CHECK(equivalence_test(fin_fin(1, 1, 1), fin_fin(1, 1, 5)));
  CHECK_FALSE(equivalence_test(fin_fin(1, 1, 1), fin_fin(2, 2, 1)));
  CHECK(equivalence_test(fin_fin(3, 3, 2), fin_fin(3, 3, 2)));
  // Iso as modules but the submodule is not preserved.
  CHECK(iso_test(fin_fin(1, 2, 0), fin_fin(2, 1, 0)).is_iso());
  CHECK_FALSE(equivalence_test(fin_fin(1, 2, 0), fin_fin(2, 1, 0)));
}

TEST_CASE("intertwiner algebra") {
  const ExtSpec s = inf_fin(1, e(0));
  Intertwiner f{2, 3, e(1), 0};
  Intertwiner g{Scalar(1, 2), 1, e(0), 0};
  const Intertwiner h = compose(f, g, s);
  const ExtVector d{ModVector(Shape::kInf), ModVector::fin(1)};
  CHECK(apply(h, d) == apply(f, apply(g, d)));
  CHECK(is_bijective(f, s));
  CHECK_FALSE(is_bijective(Intertwiner{0, 1, {}, 0}, s));
}

TEST_CASE("classification") {
  SUBCASE("case i") {
    const auto U = SimpleDesc::fin(1), V = SimpleDesc::inf();
    const Classification c = classify(make_spec(U, V, LinMap(V, U, {{1, ModVector::fin(1)}})));
    CHECK(c.case_label == "i");
    CHECK(c.oracle.is_split());
    CHECK(c.comparison == Comparison::kAgrees);
  }
  SUBCASE("case ii nonsplit") {
    const Classification c = classify(inf_fin(1, e(0)));
    CHECK(c.case_label == "ii");
    CHECK(c.claim == "nonsplit");
    CHECK_FALSE(c.oracle.is_split());
    CHECK(c.comparison == Comparison::kAgrees);
  }
  SUBCASE("case ii coboundary") {
    const Classification c = classify(inf_fin(1, e(1) - e(0)));
    CHECK(c.oracle.is_split());
    CHECK(c.comparison == Comparison::kDiscrepancy);
    CHECK(std::string(comparison_name(c.comparison)) == "DISCREPANCY");
    CHECK(c.canonical.delta.dx.is_zero());
  }
  SUBCASE("case iii") {
    const Classification c = classify(fin_fin(1, 1, 0));
    CHECK(c.case_label == "iii");
    CHECK(c.oracle.is_split());
    CHECK(c.comparison == Comparison::kAgrees);
    CHECK(classify(fin_fin(1, 1, 4)).claim == "nonsplit");
    CHECK(classify(fin_fin(1, 2, 4)).claim == "split");
  }
}

}  // TEST_SUITE
