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

#include "bicyclic/report.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <sstream>

#include "bicyclic/sample.hpp"

namespace bicyclic {

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::kPass: return "PASS";
    case Verdict::kDiscrepancy: return "DISCREPANCY";
    case Verdict::kFail: return "FAIL";
  }
  return "?";
}

std::size_t ClaimReport::count(Verdict v) const {
  return static_cast<std::size_t>(
      std::count_if(entries.begin(), entries.end(), [v](const ClaimEntry& e) { return e.verdict == v; }));
}

namespace {

const Element kX = Element::x();
const Element kY = Element::y();

Element f_gen() { return 1 - kX * kY; }

ClaimEntry make(std::string id, std::string statement, std::string scope = "exact") {
  ClaimEntry e;
  e.id = std::move(id);
  e.statement = std::move(statement);
  e.scope = std::move(scope);
  return e;
}

Verdict pass_if(bool ok) { return ok ? Verdict::kPass : Verdict::kFail; }

ModVector e_n(std::size_t n) { return ModVector::basis(Shape::kInf, n); }

ExtSpec case_ii(const Scalar& lambda, const ModVector& dx_image) {
  const SimpleDesc V = SimpleDesc::fin(lambda);
  LinMap dx(V, SimpleDesc::inf());
  dx.set_column(0, dx_image);
  return make_spec(SimpleDesc::inf(), V, dx);
}

ExtSpec case_iii(const Scalar& mu, const Scalar& lambda, const Scalar& delta) {
  const SimpleDesc U = SimpleDesc::fin(mu);
  const SimpleDesc V = SimpleDesc::fin(lambda);
  LinMap dx(V, U);
  dx.set_column(0, ModVector::fin(delta));
  return make_spec(U, V, dx);
}

const ModVector kD = ModVector::basis(Shape::kFin, 0);

// ---- algebra --------------------------------------------------------------

ClaimEntry alg_relations() {
  ClaimEntry e = make("alg.relations", "y*x = 1, y*(1 - x*y) = 0, (1 - x*y)*x = 0, x*y != 1");
  const Element f = f_gen();
  e.certificate = {{"y*x", to_string(kY * kX)},
                   {"y*(1 - x*y)", to_string(kY * f)},
                   {"(1 - x*y)*x", to_string(f * kX)},
                   {"x*y", to_string(kX * kY)}};
  e.verdict = pass_if(kY * kX == Element(1) && (kY * f).is_zero() && (f * kX).is_zero() &&
                      !(kX * kY == Element(1)));
  return e;
}

ClaimEntry alg_zero_divisors() {
  ClaimEntry e = make("alg.zero_divisors", "y and 1 - x*y are nonzero with y*(1 - x*y) = 0");
  const Element f = f_gen();
  e.certificate = {{"left", to_string(kY)}, {"right", to_string(f)}, {"product", to_string(kY * f)}};
  e.verdict = pass_if(!kY.is_zero() && !f.is_zero() && (kY * f).is_zero());
  return e;
}

ClaimEntry alg_associativity(Sampler& rng) {
  ClaimEntry e = make("alg.associativity", "(a*b)*c = a*(b*c)");
  std::vector<Element> mons;
  for (std::uint32_t i = 0; i <= 4; ++i) {
    for (std::uint32_t j = 0; j <= 4; ++j) mons.push_back(Element::monomial({i, j}));
  }
  std::size_t checked = 0;
  Json bad;
  for (const auto& a : mons) {
    for (const auto& b : mons) {
      for (const auto& c : mons) {
        ++checked;
        if (bad.is_null() && !((a * b) * c == a * (b * c))) {
          bad = {to_string(a), to_string(b), to_string(c)};
        }
      }
    }
  }
  const std::size_t random_triples = 200;
  for (std::size_t k = 0; k < random_triples; ++k) {
    const Element a = rng.element(4), b = rng.element(4), c = rng.element(4);
    if (bad.is_null() && !((a * b) * c == a * (b * c))) bad = {to_string(a), to_string(b), to_string(c)};
  }
  e.certificate = {{"monomial_triples", checked}, {"random_triples", random_triples}};
  if (!bad.is_null()) e.certificate["counterexample"] = bad;
  e.verdict = pass_if(bad.is_null());
  return e;
}

ClaimEntry alg_matrix_units() {
  ClaimEntry e = make("alg.matrix_units", "M_ij*M_kl = [j = k] M_il, M_ij = x^i*(1 - x*y)*y^j");
  std::size_t checked = 0;
  Json bad;
  const unsigned n = 5;
  for (unsigned i = 0; i <= n; ++i) {
    for (unsigned j = 0; j <= n; ++j) {
      for (unsigned k = 0; k <= n; ++k) {
        for (unsigned l = 0; l <= n; ++l) {
          ++checked;
          const Element lhs = matrix_unit(i, j) * matrix_unit(k, l);
          const Element rhs = j == k ? matrix_unit(i, l) : Element();
          if (bad.is_null() && !(lhs == rhs)) bad = {i, j, k, l};
        }
      }
    }
  }
  const bool shape_ok = matrix_unit(2, 3) == Element::monomial({2, 0}) * f_gen() * Element::monomial({0, 3});
  e.certificate = {{"max_index", n}, {"products", checked}, {"definition_matches", shape_ok}};
  if (!bad.is_null()) e.certificate["counterexample"] = bad;
  e.verdict = pass_if(bad.is_null() && shape_ok);
  return e;
}

ClaimEntry alg_border() {
  ClaimEntry e = make("alg.representation_border",
                      "top-left (n-d) blocks of rho_n(a*b) and rho_n(a)*rho_n(b) agree, d = deg a + deg b");
  const std::size_t n = 16;
  std::vector<Element> mons;
  std::vector<TruncMatrix> mats;
  for (std::uint32_t i = 0; i <= 4; ++i) {
    for (std::uint32_t j = 0; j <= 4; ++j) {
      mons.push_back(Element::monomial({i, j}));
      mats.push_back(to_matrix(mons.back(), n));
    }
  }
  std::size_t checked = 0;
  Json bad;
  for (std::size_t p = 0; p < mons.size(); ++p) {
    for (std::size_t q = 0; q < mons.size(); ++q) {
      const std::size_t d = static_cast<std::size_t>(mons[p].degree() + mons[q].degree());
      if (d >= n) continue;
      ++checked;
      const TruncMatrix prod = mats[p] * mats[q];
      if (!(to_matrix(mons[p] * mons[q], n).block(n - d) == prod.block(n - d)) && bad.is_null()) {
        bad = {to_string(mons[p]), to_string(mons[q])};
      }
    }
  }
  e.certificate = {{"n", n}, {"pairs", checked}};
  if (!bad.is_null()) e.certificate["counterexample"] = bad;
  e.verdict = pass_if(bad.is_null());
  return e;
}

ClaimEntry alg_diffop() {
  ClaimEntry e = make("alg.diffop", "y acts on k[x] as H^-1 d/dx with H(f) = d/dx(x f); x^n <-> b_n");
  std::size_t checked = 0;
  Json bad;
  for (const auto& m : monomials_up_to(6)) {
    const Element a = Element::monomial(m);
    for (unsigned n = 0; n <= 10; ++n) {
      ++checked;
      const Polynomial p = diffop_action(a, Polynomial::monomial(n));
      const ModVector v = act(SimpleDesc::inf(), a, e_n(n));
      std::vector<Scalar> coeffs(v.support_end());
      for (const auto& [k, c] : v.coords()) coeffs[k] = c;
      if (!(p == Polynomial(coeffs)) && bad.is_null()) bad = {to_string(a), n};
    }
  }
  e.certificate = {{"pairs", checked}};
  if (!bad.is_null()) e.certificate["counterexample"] = bad;
  e.verdict = pass_if(bad.is_null());
  return e;
}

ClaimEntry alg_center(const RunConfig& c) {
  ClaimEntry e = make("alg.center", "Z(R) = k", "window-verified");
  const auto basis = center_slice(c.max_degree);
  Json b = Json::array();
  for (const auto& z : basis) b.push_back(to_string(z));
  e.certificate = {{"D", c.max_degree}, {"basis", b}};
  e.verdict = pass_if(basis.size() == 1 && basis[0] == Element(1));
  return e;
}

ClaimEntry alg_involution(Sampler& rng) {
  ClaimEntry e = make("alg.involution", "eta(x) = y, eta(y) = x, eta(a*b) = eta(b)*eta(a), eta^2 = id");
  bool ok = involution(kX) == kY && involution(kY) == kX;
  const std::size_t pairs = 100;
  Json bad;
  for (std::size_t k = 0; k < pairs; ++k) {
    const Element a = rng.element(5), b = rng.element(5);
    if (!(involution(a * b) == involution(b) * involution(a)) || !(involution(involution(a)) == a)) {
      ok = false;
      if (bad.is_null()) bad = {to_string(a), to_string(b)};
    }
  }
  e.certificate = {{"random_pairs", pairs}};
  if (!bad.is_null()) e.certificate["counterexample"] = bad;
  e.verdict = pass_if(ok);
  return e;
}

ClaimEntry alg_laurent_kernel(const RunConfig& c) {
  ClaimEntry e = make("alg.laurent_kernel", "<1 - x*y> = span{M_ij} = ker(x -> t, y -> t^-1)", "window-verified");
  const unsigned D = c.max_degree;
  const DegreeSlice ideal = stable_ideal_slice({{f_gen()}}, D, c.slack_cap);
  std::vector<Element> units;
  for (unsigned i = 0; i + 2 <= D; ++i) {
    for (unsigned j = 0; i + j + 2 <= D; ++j) units.push_back(matrix_unit(i, j));
  }
  const DegreeSlice span = make_slice(D, units);
  const WindowIndex idx(D);
  std::map<long, SparseVec> rows;
  for (const auto& m : monomials_up_to(D)) {
    rows[static_cast<long>(m.i) - static_cast<long>(m.j)].emplace(idx.position(m), Scalar(1));
  }
  std::vector<SparseVec> eqs;
  for (auto& [exp, row] : rows) eqs.push_back(std::move(row));
  std::vector<Element> ker;
  for (const auto& v : kernel(eqs, idx.size())) ker.push_back(idx.element(v));
  const DegreeSlice kernel_slice = make_slice(D, ker);
  e.certificate = {{"D", D},
                   {"ideal_dim", ideal.dim()},
                   {"matrix_unit_dim", span.dim()},
                   {"kernel_dim", kernel_slice.dim()},
                   {"stable_slack", ideal.slack}};
  e.verdict = pass_if(ideal == span && span == kernel_slice && span.dim() == D * (D - 1) / 2);
  return e;
}

// ---- modules --------------------------------------------------------------

ClaimEntry mod_shift_simple(Sampler& rng) {
  ClaimEntry e = make("mod.shift_simple", "every nonzero v in k[x] has r with r*v = b_0, so k[x] is simple");
  const std::size_t samples = 30;
  bool ok = true;
  Json example;
  for (std::size_t k = 0; k < samples; ++k) {
    ModVector v(Shape::kInf);
    while (v.is_zero()) v = rng.vector(Shape::kInf, 6);
    const Element r = cyclic_generator_witness(v);
    if (!(act(SimpleDesc::inf(), r, v) == e_n(0))) ok = false;
    if (example.is_null()) example = {{"v", to_string(v)}, {"r", to_string(r)}};
  }
  // b_0 generates: x^n b_0 = b_n.
  for (std::uint32_t n = 0; n < 8; ++n) {
    if (!(act(SimpleDesc::inf(), Element::monomial({n, 0}), e_n(0)) == e_n(n))) ok = false;
  }
  e.certificate = {{"samples", samples}, {"example", example}};
  e.verdict = pass_if(ok);
  return e;
}

ClaimEntry mod_fin_simples() {
  ClaimEntry e = make("mod.fin_simples", "k_lambda is a module and k_lambda = k_mu iff lambda = mu");
  const std::vector<Scalar> lambdas = {Scalar(1), Scalar(2), Scalar(-1), Scalar(1, 2)};
  bool ok = true;
  std::size_t checked = 0;
  for (const auto& l : lambdas) {
    const SimpleDesc V = SimpleDesc::fin(l);
    if (!(act(V, kY * kX, kD) == kD) || !(act(V, kX * kY, kD) == kD)) ok = false;
    for (const auto& m : lambdas) {
      ++checked;
      const bool map_ok =
          is_module_map(V, SimpleModule{SimpleDesc::fin(m)},
                        std::function<ModVector(std::size_t)>([](std::size_t) { return kD; }),
                        ModVector(Shape::kFin), 1)
              .ok();
      if (map_ok != (l == m)) ok = false;
    }
  }
  e.certificate = {{"pairs", checked}};
  e.verdict = pass_if(ok);
  return e;
}

// ---- ideals ---------------------------------------------------------------

ClaimEntry ideal_classification(const RunConfig& c) {
  ClaimEntry e = make("ideal.classification", "proper ideals: 0, <1 - x*y>, <1 - x*y, f(x)> with f not a monomial");
  using K = IdealClass::Kind;
  const Polynomial t_minus_1({Scalar(-1), Scalar(1)});
  const Polynomial t2_plus_1({Scalar(1), Scalar(0), Scalar(1)});
  struct Case {
    std::vector<std::string> gens;
    IdealClass expected;
  };
  const std::vector<Case> cases = {
      {{"1 - x*y"}, {K::kF, {}}},
      {{"1 - x*y", "x - 1"}, {K::kPair, t_minus_1}},
      {{"1 - x*y", "x"}, {K::kWholeRing, {}}},
      {{"x - 1"}, {K::kPair, t_minus_1}},
      {{"y - 1"}, {K::kPair, t_minus_1}},
      {{"x^2 - 3*x + 2", "x - 1"}, {K::kPair, t_minus_1}},
      {{"x - 1", "x - 2"}, {K::kWholeRing, {}}},
      {{"x*y"}, {K::kWholeRing, {}}},
      {{"x^2*y - x^3*y^2"}, {K::kF, {}}},
      {{"x^2 + 1"}, {K::kPair, t2_plus_1}},
  };
  bool ok = true;
  Json rows = Json::array();
  for (const auto& cs : cases) {
    IdealGens g;
    for (const auto& s : cs.gens) g.gens.push_back(parse_element(s));
    const IdealClass got = ideal_classify(g);
    ok = ok && got == cs.expected;
    rows.push_back({{"gens", cs.gens}, {"class", to_string(got)}});
  }
  // Different generator sets of the same class give the same window.
  const unsigned D = c.max_degree;
  const DegreeSlice a = stable_ideal_slice({{parse_element("1 - x*y"), parse_element("x - 1")}}, D, c.slack_cap);
  const DegreeSlice b = stable_ideal_slice({{parse_element("x - 1")}}, D, c.slack_cap);
  const DegreeSlice d = stable_ideal_slice({{parse_element("y - 1")}}, D, c.slack_cap);
  const bool slices_agree = a == b && b == d;
  e.certificate = {{"cases", rows}, {"slices_agree", slices_agree}, {"D", D}};
  e.verdict = pass_if(ok && slices_agree);
  return e;
}

ClaimEntry ideal_essential(Sampler& rng) {
  ClaimEntry e = make("ideal.essential", "F is essential: M_0p*r*M_q0 = rho(r)_pq M_00 != 0 for r != 0");
  const std::size_t samples = 100;
  bool ok = true;
  Json examples = Json::array();
  std::vector<Element> inputs = {kX, Element(1), f_gen()};
  for (std::size_t k = 0; k < samples; ++k) inputs.push_back(rng.nonzero_element(5));
  for (std::size_t k = 0; k < inputs.size(); ++k) {
    const EssentialWitness w = essential_check(inputs[k]);
    const bool good = w.entry != 0 && w.sandwich == w.entry * matrix_unit(0, 0) &&
                      laurent_image(w.sandwich).is_zero();
    ok = ok && good;
    if (k < 3) {
      examples.push_back({{"r", to_string(inputs[k])}, {"p", w.p}, {"q", w.q}, {"sandwich", to_string(w.sandwich)}});
    }
  }
  e.certificate = {{"random_samples", samples}, {"examples", examples}};
  e.verdict = pass_if(ok);
  return e;
}

ClaimEntry ideal_annihilators(const RunConfig& c) {
  ClaimEntry e = make("ideal.annihilators", "ann k[x] = (0), ann k_lambda = <1 - x*y, x - lambda>", "window-verified");
  const unsigned D = c.max_degree;
  bool ok = annihilator(SimpleDesc::inf(), D).dim() == 0;
  Json rows = Json::array();
  for (const Scalar& l : {Scalar(1), Scalar(2), Scalar(-1), Scalar(1, 2)}) {
    const DegreeSlice ann = annihilator(SimpleDesc::fin(l), D);
    const DegreeSlice prime = prime_slice(PrimeId::p(l), D, c.slack_cap);
    const bool row_ok = ann == prime && ann.contains(kX - Element(l)) && ann.dim() == WindowIndex(D).size() - 1;
    ok = ok && row_ok;
    rows.push_back({{"lambda", to_string(l)}, {"dim", ann.dim()}, {"equals_prime_slice", ann == prime}});
  }
  e.certificate = {{"D", D}, {"shift_annihilator_dim", 0}, {"fin", rows}};
  e.verdict = pass_if(ok);
  return e;
}

ClaimEntry ideal_stabilization(const RunConfig& c) {
  ClaimEntry e = make("ideal.slack_stabilization", "ideal windows grow with slack and settle by slack 4", "window-verified");
  const unsigned D = c.max_degree;
  const PrimeId F = PrimeId::f();
  const PrimeId P1 = PrimeId::p(1), P2 = PrimeId::p(2);
  struct Item {
    std::string name;
    std::function<DegreeSlice(unsigned)> at;
  };
  std::vector<Item> items;
  auto ideal = [&](const PrimeId& p) {
    items.push_back({to_string(p), [p, D](unsigned s) { return ideal_slice(p.gens(), D, s); }});
  };
  auto product = [&](const PrimeId& p, const PrimeId& q) {
    items.push_back({to_string(p) + "*" + to_string(q),
                     [p, q, D](unsigned s) { return product_slice(p.gens(), q.gens(), D, s); }});
  };
  ideal(F);
  for (const Scalar& l : {Scalar(1), Scalar(2), Scalar(-1), Scalar(1, 2)}) ideal(PrimeId::p(l));
  product(F, F);
  product(F, P1);
  product(P1, F);
  product(P1, P2);
  product(P1, P1);
  bool ok = true;
  Json rows = Json::array();
  for (const auto& item : items) {
    std::vector<DegreeSlice> slices;
    Json dims = Json::array();
    for (unsigned s = 0; s <= c.slack_cap; ++s) {
      slices.push_back(item.at(s));
      dims.push_back(slices.back().dim());
    }
    bool monotone = true;
    for (unsigned s = 0; s < c.slack_cap; ++s) {
      const SliceOrder o = slice_compare(slices[s], slices[s + 1]);
      monotone = monotone && (o == SliceOrder::kEqual || o == SliceOrder::kLess);
    }
    int stable = -1;
    for (unsigned s = 0; s + 2 <= c.slack_cap; ++s) {
      if (slices[s] == slices[s + 2]) {
        stable = static_cast<int>(s);
        break;
      }
    }
    ok = ok && monotone && stable >= 0 && stable <= 4;
    rows.push_back({{"ideal", item.name}, {"dims_by_slack", dims}, {"monotone", monotone}, {"stable_slack", stable}});
  }
  e.certificate = {{"D", D}, {"slack_cap", c.slack_cap}, {"ideals", rows}};
  e.verdict = pass_if(ok);
  return e;
}

// ---- extensions -----------------------------------------------------------

ClaimEntry ext_case_i(Sampler& rng) {
  ClaimEntry e = make("ext.case_i_split", "0 -> U -> E -> k[x] -> 0 always splits; a = b_0 - x*delta(y)(b_0) has y*a = 0");
  const std::size_t samples = 50;
  bool ok = true;
  Json example;
  for (std::size_t k = 0; k < samples; ++k) {
    const ExtSpec spec = rng.spec(k % 2 == 0 ? Shape::kInf : Shape::kFin, Shape::kInf);
    const Classification cl = classify(spec);
    const auto* cert = std::get_if<SplitCertificate>(&cl.oracle.outcome);
    const bool good = cert && cert->witness && ext_act(spec, kY, *cert->witness).is_zero() &&
                      replay_split_certificate(spec, cl.oracle) && cl.comparison == Comparison::kAgrees;
    ok = ok && good;
    if (example.is_null() && !spec.delta.dx.is_zero()) example = split_to_json(spec, cl.oracle);
  }
  e.certificate = {{"samples", samples}, {"example", example}};
  e.verdict = pass_if(ok);
  return e;
}

ClaimEntry ext_relation_sign() {
  ClaimEntry e = make("ext.relation_sign",
                      "U = k[x], V = k_lambda: delta(y)_i = lambda^-1 delta(x)_(i+1) for i >= 1");
  const Scalar lambda = 2;
  const SimpleDesc U = SimpleDesc::inf(), V = SimpleDesc::fin(lambda);
  LinMap dx(V, U);
  dx.set_column(0, e_n(2));
  LinMap dy_stated(V, U);
  dy_stated.set_column(0, Scalar(1 / lambda) * e_n(1));
  const ExtSpec stated{U, V, {dx, dy_stated}};
  const ExtSpec derived = make_spec(U, V, dx);
  const auto defect = find_delta_defect(stated);
  const bool derived_ok = !find_delta_defect(derived) && derived.delta.dy(kD) == Scalar(-1 / lambda) * e_n(1);
  const ExtVector d{ModVector(Shape::kInf), kD};
  const ExtVector back = ext_act(stated, kY, ext_act(stated, kX, d));
  e.certificate = {{"lambda", to_string(lambda)},
                   {"delta_x", vector_to_json(dx(kD))},
                   {"stated_delta_y", vector_to_json(dy_stated(kD))},
                   {"stated_y_x_on_d", ext_vector_to_json(back)},
                   {"derived_delta_y", vector_to_json(derived.delta.dy(kD))},
                   {"derived_rule", "delta(y)_i = -lambda^-1 delta(x)_(i+1) for all i >= 0"},
                   {"derived_valid", derived_ok}};
  if (defect) e.certificate["stated_residual"] = vector_to_json(defect->residual);
  if (!derived_ok) {
    e.verdict = Verdict::kFail;
  } else {
    e.verdict = defect ? Verdict::kDiscrepancy : Verdict::kPass;
  }
  return e;
}

ClaimEntry ext_coboundary_probe() {
  ClaimEntry e = make("ext.coboundary_probe", "U = k[x], V = k_lambda: E nonsplit iff delta != 0");
  const Scalar lambda = 1;
  // delta(r) = alpha(r) phi - phi beta(r) with phi(d) = e_0.
  const ModVector probe = e_n(1) - lambda * e_n(0);
  const ExtSpec spec = case_ii(lambda, probe);
  const ModVector phi = e_n(0);
  const bool is_coboundary =
      spec.delta.dx(kD) == act(spec.U, kX, phi) - lambda * phi &&
      spec.delta.dy(kD) == act(spec.U, kY, phi) - Scalar(1 / lambda) * phi;
  const Classification cl = classify(spec);
  const ExtSpec control = case_ii(lambda, e_n(0));
  const SplitResult control_result = split_test(control);
  const bool replayed = replay_split_certificate(spec, cl.oracle) && replay_split_certificate(control, control_result);
  e.certificate = {{"spec", spec_to_json(spec)},
                   {"phi", vector_to_json(phi)},
                   {"is_coboundary", is_coboundary},
                   {"claim", cl.claim},
                   {"oracle", split_to_json(spec, cl.oracle)},
                   {"comparison", comparison_name(cl.comparison)},
                   {"control_spec", spec_to_json(control)},
                   {"control_oracle", split_to_json(control, control_result)}};
  if (!replayed || !is_coboundary) {
    e.verdict = Verdict::kFail;
  } else {
    e.verdict = cl.comparison == Comparison::kAgrees ? Verdict::kPass : Verdict::kDiscrepancy;
  }
  return e;
}

ClaimEntry ext_case_ii_grid() {
  ClaimEntry e = make("ext.case_ii_grid", "U = k[x], V = k_lambda: nonsplit iff delta != 0 (grid)");
  std::size_t total = 0, disagreements = 0, nonsplit = 0;
  bool formula_ok = true;
  Json first;
  for (const Scalar& lambda : {Scalar(1), Scalar(2), Scalar(-1)}) {
    for (int c0 = -1; c0 <= 1; ++c0) {
      for (int c1 = -1; c1 <= 1; ++c1) {
        for (int c2 = -1; c2 <= 1; ++c2) {
          ModVector v(Shape::kInf);
          v.add(0, c0);
          v.add(1, c1);
          v.add(2, c2);
          const ExtSpec spec = case_ii(lambda, v);
          const Classification cl = classify(spec);
          ++total;
          const Scalar p = Scalar(c0 + c1 * lambda + c2 * lambda * lambda);
          formula_ok = formula_ok && cl.oracle.is_split() == (p == 0) && replay_split_certificate(spec, cl.oracle);
          if (!cl.oracle.is_split()) ++nonsplit;
          if (cl.comparison == Comparison::kDiscrepancy) {
            ++disagreements;
            if (first.is_null()) first = {{"spec", spec_to_json(spec)}, {"oracle", split_to_json(spec, cl.oracle)}};
          }
        }
      }
    }
  }
  e.certificate = {{"specs", total},
                   {"nonsplit", nonsplit},
                   {"disagreements", disagreements},
                   {"oracle_rule", "split iff sum_i delta(x)_i lambda^i = 0"},
                   {"oracle_rule_holds", formula_ok}};
  if (!first.is_null()) e.certificate["first_disagreement"] = first;
  if (!formula_ok) {
    e.verdict = Verdict::kFail;
  } else {
    e.verdict = disagreements == 0 ? Verdict::kPass : Verdict::kDiscrepancy;
  }
  return e;
}

ClaimEntry ext_iso_criterion() {
  ClaimEntry e = make("ext.iso_criterion",
                      "nonsplit E_delta = E_delta' (U = k[x]) iff lambda = lambda' and delta'(x) = c*delta(x)");
  const ExtSpec A = case_ii(1, e_n(0));
  const ExtSpec B = case_ii(1, e_n(1));
  const IsoResult r = iso_test(A, B);
  const bool replayed = r.map && replay_intertwiner(A, B, *r.map);
  // All nonsplit extensions with the same lambda fall into one class.
  std::vector<ExtSpec> nonsplit = {A, B, case_ii(1, Scalar(3) * e_n(0) + e_n(2)),
                                   case_ii(1, e_n(1) + e_n(3)), case_ii(1, Scalar(-1) * e_n(4))};
  bool one_class = true;
  for (const auto& s : nonsplit) {
    const IsoResult q = iso_test(A, s);
    one_class = one_class && !split_test(s).is_split() && q.map && replay_intertwiner(A, s, *q.map);
  }
  e.certificate = {{"A", spec_to_json(A)},
                   {"B", spec_to_json(B)},
                   {"proportional", false},
                   {"iso", iso_to_json(A, B, r)},
                   {"equivalent", equivalence_test(A, B)},
                   {"nonsplit_lambda_1_single_class", one_class}};
  if (r.map && !replayed) {
    e.verdict = Verdict::kFail;
  } else {
    e.verdict = r.map ? Verdict::kDiscrepancy : Verdict::kPass;
  }
  return e;
}

ClaimEntry ext_split_replay(Sampler& rng) {
  ClaimEntry e = make("ext.split_replay", "every split and nonsplit certificate replays");
  const std::array<std::pair<Shape, Shape>, 4> shapes = {{{Shape::kInf, Shape::kInf},
                                                           {Shape::kFin, Shape::kInf},
                                                           {Shape::kInf, Shape::kFin},
                                                           {Shape::kFin, Shape::kFin}}};
  std::size_t split = 0, nonsplit = 0;
  bool ok = true;
  for (std::size_t k = 0; k < 80; ++k) {
    const auto [u, v] = shapes[k % 4];
    ExtSpec spec = rng.spec(u, v);
    // Force lambda = mu half of the time so both outcomes occur.
    if (u == Shape::kFin && v == Shape::kFin && k % 8 == 3) {
      spec = case_iii(spec.U.lambda(), spec.U.lambda(), spec.delta.dx(kD).coeff(0));
    }
    if (u == Shape::kInf && v == Shape::kFin && k % 8 == 2) {
      spec = case_ii(spec.V.lambda(), spec.delta.dx(kD) + e_n(5));
    }
    const SplitResult r = split_test(spec);
    (r.is_split() ? split : nonsplit)++;
    ok = ok && replay_split_certificate(spec, r);
  }
  e.certificate = {{"specs", split + nonsplit}, {"split", split}, {"nonsplit", nonsplit}};
  e.verdict = pass_if(ok && split > 0 && nonsplit > 0);
  return e;
}

ClaimEntry ext_iso_relation() {
  ClaimEntry e = make("ext.iso_relation", "iso_test is reflexive, symmetric and transitive; composites replay");
  std::vector<ExtSpec> pool;
  const std::vector<ModVector> images = {ModVector(Shape::kInf), e_n(0), e_n(1), Scalar(2) * e_n(0),
                                         e_n(1) - e_n(0), e_n(1) - Scalar(2) * e_n(0), e_n(0) + e_n(2)};
  for (const Scalar& l : {Scalar(1), Scalar(2)}) {
    for (const auto& v : images) pool.push_back(case_ii(l, v));
  }
  for (const Scalar& l : {Scalar(1), Scalar(2)}) {
    for (const Scalar& mu : {Scalar(1), Scalar(2)}) {
      if (mu == l) {
        pool.push_back(case_iii(mu, l, 0));
        pool.push_back(case_iii(mu, l, 3));
      } else {
        pool.push_back(case_iii(mu, l, 1));
      }
    }
  }
  const std::size_t n = pool.size();
  std::vector<std::vector<std::optional<Intertwiner>>> iso(n, std::vector<std::optional<Intertwiner>>(n));
  bool ok = true;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (pool[a].U.shape() != pool[b].U.shape()) continue;  // different dimensions
      iso[a][b] = iso_test(pool[a], pool[b]).map;
      if (iso[a][b] && !replay_intertwiner(pool[a], pool[b], *iso[a][b], 6)) ok = false;
    }
  }
  bool reflexive = true, symmetric = true, transitive = true;
  std::size_t composites = 0;
  for (std::size_t a = 0; a < n; ++a) {
    reflexive = reflexive && iso[a][a].has_value();
    for (std::size_t b = 0; b < n; ++b) {
      symmetric = symmetric && iso[a][b].has_value() == iso[b][a].has_value();
      if (!iso[a][b]) continue;
      for (std::size_t c = 0; c < n; ++c) {
        if (!iso[b][c]) continue;
        transitive = transitive && iso[a][c].has_value();
        // f_ab: E_b -> E_a and f_bc: E_c -> E_b compose to E_c -> E_a.
        const Intertwiner g = compose(*iso[a][b], *iso[b][c], pool[b]);
        ++composites;
        if (!replay_intertwiner(pool[a], pool[c], g, 4)) ok = false;
      }
    }
  }
  std::vector<int> cls(n, -1);
  int classes = 0;
  for (std::size_t a = 0; a < n; ++a) {
    if (cls[a] >= 0) continue;
    for (std::size_t b = a; b < n; ++b) {
      if (iso[a][b]) cls[b] = classes;
    }
    ++classes;
  }
  e.certificate = {{"pool", n},
                   {"reflexive", reflexive},
                   {"symmetric", symmetric},
                   {"transitive", transitive},
                   {"composites_replayed", composites},
                   {"classes", classes},
                   {"class_of", cls}};
  e.verdict = pass_if(ok && reflexive && symmetric && transitive);
  return e;
}

ClaimEntry ext_fin_fin_grid() {
  ClaimEntry e = make("ext.fin_fin_grid",
                      "U = k_lambda, V = k_lambda': nonsplit only if delta != 0 and lambda = lambda'; nonsplit ones "
                      "equivalent iff same U");
  const std::vector<Scalar> lambdas = {Scalar(1), Scalar(2), Scalar(-1), Scalar(1, 2)};
  bool ok = true;
  std::size_t cells = 0;
  std::vector<ExtSpec> nonsplit;
  for (const auto& mu : lambdas) {
    for (const auto& l : lambdas) {
      for (const int d : {0, 1, 5}) {
        const ExtSpec spec = case_iii(mu, l, d);
        const SplitResult r = split_test(spec);
        ++cells;
        ok = ok && r.is_split() == (mu != l || d == 0) && replay_split_certificate(spec, r);
        if (!r.is_split()) nonsplit.push_back(spec);
      }
    }
  }
  std::size_t pairs = 0;
  for (const auto& A : nonsplit) {
    for (const auto& B : nonsplit) {
      ++pairs;
      const auto f = find_equivalence(A, B);
      const bool same = A.U == B.U;
      ok = ok && f.has_value() == same;
      if (f) ok = ok && replay_intertwiner(A, B, *f) && f->c == 0;
    }
  }
  e.certificate = {{"cells", cells}, {"nonsplit", nonsplit.size()}, {"pairs", pairs}};
  e.verdict = pass_if(ok);
  return e;
}

// ---- links ----------------------------------------------------------------

ClaimEntry link_graph_entry(const RunConfig& c, LinkGraph& graph) {
  ClaimEntry e = make("link.graph", "graph of links: a self-loop at each P_lambda, nothing else", "window-verified");
  const std::vector<Scalar> lambdas = {Scalar(1), Scalar(2), Scalar(-1), Scalar(1, 2)};
  graph = link_graph(lambdas, c.max_degree, c.slack_cap);
  std::vector<Scalar> reversed(lambdas.rbegin(), lambdas.rend());
  const LinkGraph again = link_graph(reversed, c.max_degree, c.slack_cap);
  const bool permutation_invariant = graph_to_json(graph) == graph_to_json(again);
  bool self_loops_only = graph.edges.size() == lambdas.size();
  bool replayed = true;
  for (const auto& edge : graph.edges) {
    self_loops_only = self_loops_only && edge.P == edge.Q && edge.P.kind() == PrimeId::Kind::kP;
    replayed = replayed && replay_link(edge, c.slack_cap);
  }
  e.certificate = {{"graph", graph_to_json(graph)},
                   {"permutation_invariant", permutation_invariant},
                   {"edges_replayed", replayed}};
  if (!permutation_invariant || !replayed) {
    e.verdict = Verdict::kFail;
  } else {
    e.verdict = self_loops_only ? Verdict::kPass : Verdict::kDiscrepancy;
  }
  return e;
}

ClaimEntry link_cliques(const LinkGraph& graph) {
  ClaimEntry e = make("link.cliques_countable", "every clique is countable (here: a single prime)", "window-verified");
  // Union-find over the undirected link relation.
  std::vector<std::size_t> parent(graph.vertices.size());
  for (std::size_t k = 0; k < parent.size(); ++k) parent[k] = k;
  auto index = [&](const PrimeId& p) {
    return static_cast<std::size_t>(std::find(graph.vertices.begin(), graph.vertices.end(), p) - graph.vertices.begin());
  };
  std::function<std::size_t(std::size_t)> root = [&](std::size_t k) {
    return parent[k] == k ? k : parent[k] = root(parent[k]);
  };
  for (const auto& edge : graph.edges) parent[root(index(edge.P))] = root(index(edge.Q));
  std::map<std::size_t, std::vector<std::string>> cliques;
  for (std::size_t k = 0; k < parent.size(); ++k) cliques[root(k)].push_back(to_string(graph.vertices[k]));
  Json list = Json::array();
  bool singletons = !graph.vertices.empty();
  for (const auto& [r, members] : cliques) {
    list.push_back(members);
    singletons = singletons && members.size() == 1;
  }
  e.certificate = {{"cliques", list}};
  e.verdict = pass_if(singletons);
  return e;
}

ClaimEntry link_p_mod_p2(const RunConfig& c) {
  ClaimEntry e = make("link.p_mod_p2", "P_lambda/P_lambda^2 = (x - lambda)/(x - lambda)^2 is one-dimensional",
                      "window-verified");
  bool ok = true;
  Json rows = Json::array();
  for (const Scalar& l : {Scalar(1), Scalar(2)}) {
    const PrimeId P = PrimeId::p(l);
    const LinkResult r = link_test(P, P, c.max_degree, c.slack_cap);
    const DegreeSlice sq = prime_product_slice(P, P, c.max_degree, c.slack_cap);
    const Element g = kX - Element(l);
    const bool row = r.quotient.size() == 1 && !sq.contains(g) && sq.contains(g * g) &&
                     prime_slice(P, c.max_degree, c.slack_cap).contains(g);
    ok = ok && row;
    rows.push_back({{"lambda", to_string(l)}, {"quotient_dim", r.quotient.size()}, {"link", link_to_json(r)}});
  }
  e.certificate = {{"primes", rows}};
  e.verdict = pass_if(ok);
  return e;
}

ClaimEntry link_jategaonkar_ii(const RunConfig& c) {
  return jategaonkar_entry("link.jategaonkar_case_ii", case_ii(1, e_n(0)), c.max_degree, c.slack_cap);
}

ClaimEntry link_jategaonkar_iii(const RunConfig& c) {
  return jategaonkar_entry("link.jategaonkar_case_iii", case_iii(1, 1, 1), c.max_degree, c.slack_cap);
}

}  // namespace

ClaimReport run_report(const RunConfig& config) {
  if (config.max_degree < 1) throw Error(ErrorCode::kInvalidArgument, "max_degree must be >= 1");
  if (config.slack_cap < 2) throw Error(ErrorCode::kInvalidArgument, "slack_cap must be >= 2");
  ClaimReport report;
  report.config = config;
  // One generator per randomized entry, so entries do not perturb each other.
  auto rng = [&config](std::uint32_t salt) { return Sampler(config.seed + salt); };

  std::vector<std::pair<std::string, std::function<ClaimEntry()>>> checks = {
      {"alg.relations", [] { return alg_relations(); }},
      {"alg.zero_divisors", [] { return alg_zero_divisors(); }},
      {"alg.associativity", [&] { Sampler s = rng(1); return alg_associativity(s); }},
      {"alg.matrix_units", [] { return alg_matrix_units(); }},
      {"alg.representation_border", [] { return alg_border(); }},
      {"alg.diffop", [] { return alg_diffop(); }},
      {"alg.center", [&] { return alg_center(config); }},
      {"alg.involution", [&] { Sampler s = rng(2); return alg_involution(s); }},
      {"alg.laurent_kernel", [&] { return alg_laurent_kernel(config); }},
      {"mod.column_decomposition", [&] { return column_intertwiner_check(3, config.max_degree); }},
      {"mod.shift_simple", [&] { Sampler s = rng(3); return mod_shift_simple(s); }},
      {"mod.fin_simples", [] { return mod_fin_simples(); }},
      {"ideal.classification", [&] { return ideal_classification(config); }},
      {"ideal.essential", [&] { Sampler s = rng(4); return ideal_essential(s); }},
      {"ideal.lann_chain", [] { return lann_chain_check(4, 8); }},
      {"ideal.annihilators", [&] { return ideal_annihilators(config); }},
      {"ideal.slack_stabilization", [&] { return ideal_stabilization(config); }},
      {"ext.case_i_split", [&] { Sampler s = rng(5); return ext_case_i(s); }},
      {"ext.relation_sign", [] { return ext_relation_sign(); }},
      {"ext.coboundary_probe", [] { return ext_coboundary_probe(); }},
      {"ext.case_ii_grid", [] { return ext_case_ii_grid(); }},
      {"ext.iso_criterion", [] { return ext_iso_criterion(); }},
      {"ext.split_replay", [&] { Sampler s = rng(6); return ext_split_replay(s); }},
      {"ext.iso_relation", [] { return ext_iso_relation(); }},
      {"ext.fin_fin_grid", [] { return ext_fin_fin_grid(); }},
      {"link.graph", [&] { return link_graph_entry(config, report.graph); }},
      {"link.p_mod_p2", [&] { return link_p_mod_p2(config); }},
      {"link.jategaonkar_case_ii", [&] { return link_jategaonkar_ii(config); }},
      {"link.jategaonkar_case_iii", [&] { return link_jategaonkar_iii(config); }},
  };
  const std::vector<std::pair<Scalar, Scalar>> pairs = {{1, 2}, {-1, Scalar(1, 2)}, {2, -1}};
  for (const auto& [l, l2] : pairs) {
    checks.push_back({"ideal.prime_identities(" + to_string(l) + "," + to_string(l2) + ")",
                      [&config, l, l2] { return prime_identities_check(l, l2, config.max_degree, config.slack_cap); }});
  }

  for (const auto& [id, run] : checks) {
    try {
      report.entries.push_back(run());
    } catch (const std::exception& ex) {
      ClaimEntry failed = make(id, "computation raised an error");
      failed.certificate = {{"error", ex.what()}};
      if (const auto* err = dynamic_cast<const Error*>(&ex)) failed.certificate = error_to_json(*err);
      report.entries.push_back(std::move(failed));
    }
  }
  // The clique count reads the graph built by link.graph.
  report.entries.push_back(link_cliques(report.graph));
  std::sort(report.entries.begin(), report.entries.end(),
            [](const ClaimEntry& a, const ClaimEntry& b) { return a.id < b.id; });
  return report;
}

Json report_to_json(const ClaimReport& r) {
  Json entries = Json::array();
  for (const auto& e : r.entries) entries.push_back(entry_to_json(e));
  return {{"config", {{"max_degree", r.config.max_degree}, {"slack_cap", r.config.slack_cap}, {"seed", r.config.seed}}},
          {"summary",
           {{"PASS", r.count(Verdict::kPass)},
            {"DISCREPANCY", r.count(Verdict::kDiscrepancy)},
            {"FAIL", r.count(Verdict::kFail)},
            {"total", r.entries.size()}}},
          {"entries", entries},
          {"link_graph", graph_to_json(r.graph)}};
}

std::string report_to_text(const ClaimReport& r) {
  std::ostringstream os;
  os << "verification report (max_degree " << r.config.max_degree << ", slack_cap " << r.config.slack_cap
     << ", seed " << r.config.seed << ")\n";
  os << "PASS " << r.count(Verdict::kPass) << "  DISCREPANCY " << r.count(Verdict::kDiscrepancy) << "  FAIL "
     << r.count(Verdict::kFail) << "  total " << r.entries.size() << "\n";
  for (const Verdict v : {Verdict::kFail, Verdict::kDiscrepancy}) {
    if (r.count(v) == 0) continue;
    os << "\n" << verdict_name(v) << ":\n";
    for (const auto& e : r.entries) {
      if (e.verdict == v) os << "  " << e.id << "\n    " << e.statement << "\n";
    }
  }
  os << "\nall entries:\n";
  for (const auto& e : r.entries) {
    os << "  [" << verdict_name(e.verdict) << "] " << e.id << " (" << e.scope << ")\n";
  }
  return os.str();
}

}  // namespace bicyclic
