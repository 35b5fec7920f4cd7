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

#include "bicyclic/links.hpp"

#include <algorithm>

#include "bicyclic/error.hpp"
#include "bicyclic/serialize.hpp"

namespace bicyclic {

namespace {

bool is_p(const PrimeId& p) { return p.kind() == PrimeId::Kind::kP; }

}  // namespace

LinkResult link_test(const PrimeId& P, const PrimeId& Q, unsigned D, unsigned cap) {
  LinkResult out;
  out.P = P;
  out.Q = Q;
  out.D = D;
  const DegreeSlice meet = intersect(prime_slice(P, D, cap), prime_slice(Q, D, cap));
  const DegreeSlice prod = prime_product_slice(P, Q, D, cap);
  out.intersection_dim = meet.dim();
  out.product_dim = prod.dim();

  const WindowIndex idx(D);
  Echelon e;
  for (const auto& b : prod.basis) e.insert(idx.coords(b));
  for (const auto& b : meet.basis) {
    SparseVec r = e.reduce(idx.coords(b));
    if (r.empty() || !e.insert(r)) continue;
    const Scalar lead = r.begin()->second;
    for (auto& [k, c] : r) c /= lead;
    out.quotient.push_back(idx.element(r));
  }
  if (out.quotient.empty()) return out;

  if (is_p(P) && is_p(Q)) {
    out.torsionfree = true;
  } else {
    const DegreeSlice wide = prime_product_slice(P, Q, D + 1, cap);
    out.torsionfree = true;
    for (const auto& q : out.quotient) {
      for (const Element& g : {Element::x(), Element::y()}) {
        if (wide.contains(g * q) || wide.contains(q * g)) out.torsionfree = false;
      }
    }
  }
  out.linked = out.torsionfree;
  return out;
}

LinkGraph link_graph(const std::vector<Scalar>& lambdas, unsigned D, unsigned cap) {
  std::vector<Scalar> sorted = lambdas;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw Error(ErrorCode::kInvalidArgument, "link_graph needs distinct lambdas");
  }
  LinkGraph g;
  g.vertices = {PrimeId::zero(), PrimeId::f()};
  for (const auto& l : sorted) g.vertices.push_back(PrimeId::p(l));
  for (const auto& p : g.vertices) {
    for (const auto& q : g.vertices) {
      LinkResult r = link_test(p, q, D, cap);
      if (r.linked) g.edges.push_back(std::move(r));
    }
  }
  return g;
}

bool replay_link(const LinkResult& edge, unsigned cap) {
  return edge.linked && link_test(edge.P, edge.Q, edge.D, cap) == edge;
}

JategaonkarResult jategaonkar_check(const ExtSpec& spec, unsigned D, unsigned cap) {
  if (split_test(spec).is_split()) {
    throw Error(ErrorCode::kNotNonsplit, "the Main Lemma alternatives concern nonsplit extensions");
  }
  JategaonkarResult out;
  out.P = annihilator_prime(spec.V);
  out.Q = annihilator_prime(spec.U);
  const DegreeSlice sP = prime_slice(out.P, D, cap);
  const DegreeSlice sQ = prime_slice(out.Q, D, cap);
  out.annihilators_match = annihilator(spec.V, D) == sP && annihilator(spec.U, D) == sQ;
  out.order = slice_compare(sP, sQ);

  out.p_kills_e = true;
  for (const auto& g : out.P.gens().gens) {
    for (const auto& v : ext_basis(spec, D + 1)) {
      if (!ext_act(spec, g, v).is_zero()) out.p_kills_e = false;
    }
  }
  out.alt_i = out.order == SliceOrder::kLess && out.p_kills_e;
  out.link = link_test(out.P, out.Q, D, cap);
  out.alt_ii = out.link.linked;
  return out;
}

ClaimEntry jategaonkar_entry(const std::string& id, const ExtSpec& spec, unsigned D, unsigned cap) {
  ClaimEntry entry;
  entry.id = id;
  entry.statement = "nonsplit 0 -> U -> E -> V -> 0 with P = ann V, Q = ann U: neither (P < Q and PE = 0) nor P ~> Q";
  entry.scope = "window-verified";
  const JategaonkarResult r = jategaonkar_check(spec, D, cap);
  entry.certificate = {{"spec", spec_to_json(spec)},
                       {"P", to_string(r.P)},
                       {"Q", to_string(r.Q)},
                       {"annihilators_match", r.annihilators_match},
                       {"order_P_Q", slice_order_name(r.order)},
                       {"P_kills_E", r.p_kills_e},
                       {"alternative_i", r.alt_i},
                       {"alternative_ii", r.alt_ii},
                       {"link", link_to_json(r.link)}};
  if (!r.annihilators_match) {
    entry.verdict = Verdict::kFail;
  } else {
    entry.verdict = (r.alt_i || r.alt_ii) ? Verdict::kDiscrepancy : Verdict::kPass;
  }
  return entry;
}

}  // namespace bicyclic
