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

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "bicyclic/claims.hpp"
#include "bicyclic/extensions.hpp"
#include "bicyclic/ideals.hpp"

namespace bicyclic {

// Window computation of (P∩Q)/PQ for a candidate link P ~> Q.
struct LinkResult {
  PrimeId P = PrimeId::zero();
  PrimeId Q = PrimeId::zero();
  unsigned D = 0;
  std::size_t intersection_dim = 0;
  std::size_t product_dim = 0;
  // Representatives of a basis of the window quotient.
  std::vector<Element> quotient;
  bool torsionfree = false;
  bool linked = false;

  friend bool operator==(const LinkResult&, const LinkResult&) = default;
};

// A nonzero window quotient is a nonzero element of (P∩Q)/PQ. Over R/P(lambda)
// = k that is already torsionfree; over R/F and R/(0) the representatives are
// multiplied by x and y on both sides and must stay outside PQ. A zero window
// quotient only says no link is visible up to degree D.
LinkResult link_test(const PrimeId& P, const PrimeId& Q, unsigned D, unsigned cap);

struct LinkGraph {
  std::vector<PrimeId> vertices;
  // Positive link tests, in vertex order.
  std::vector<LinkResult> edges;
};

// Vertices (0), F and P(lambda) for the given lambdas (sorted); every ordered
// pair is tested. Throws Error(kInvalidArgument) for repeated lambdas.
LinkGraph link_graph(const std::vector<Scalar>& lambdas, unsigned D, unsigned cap);
bool replay_link(const LinkResult& edge, unsigned cap);

struct JategaonkarResult {
  PrimeId P = PrimeId::zero();  // annihilator of V
  PrimeId Q = PrimeId::zero();  // annihilator of U
  // The annihilator slices computed from the actions match the prime slices.
  bool annihilators_match = false;
  SliceOrder order = SliceOrder::kEqual;
  bool p_kills_e = false;
  // (i): P < Q and P E = 0.
  bool alt_i = false;
  // (ii): P ~> Q.
  LinkResult link;
  bool alt_ii = false;
};

// Throws Error(kNotNonsplit) when the extension splits.
JategaonkarResult jategaonkar_check(const ExtSpec& spec, unsigned D, unsigned cap);
// PASS when neither alternative holds, DISCREPANCY when one does.
ClaimEntry jategaonkar_entry(const std::string& id, const ExtSpec& spec, unsigned D, unsigned cap);

}  // namespace bicyclic
