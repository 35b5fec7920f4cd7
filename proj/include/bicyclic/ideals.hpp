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
#include <optional>
#include <string>
#include <vector>

#include "bicyclic/algebra.hpp"
#include "bicyclic/claims.hpp"
#include "bicyclic/linalg.hpp"
#include "bicyclic/modules.hpp"
#include "bicyclic/polynomial.hpp"

namespace bicyclic {

// Generators of a two-sided ideal.
struct IdealGens {
  std::vector<Element> gens;
};

// Coordinates on the monomials of degree <= W. Higher degrees get smaller
// column indices, so in echelon form the rows whose pivot has degree <= D
// span exactly the part of the subspace inside the degree-D window.
class WindowIndex {
 public:
  explicit WindowIndex(unsigned max_degree);
  unsigned max_degree() const noexcept { return max_degree_; }
  std::size_t size() const noexcept { return size_; }
  std::size_t position(Monomial m) const;
  Monomial monomial(std::size_t position) const;
  SparseVec coords(const Element& a) const;
  Element element(const SparseVec& v) const;

 private:
  std::size_t offset(unsigned degree) const;
  unsigned max_degree_;
  std::size_t size_;
};

// Canonical basis of the degree <= D part of a subspace of R.
struct DegreeSlice {
  unsigned D = 0;
  // Slack at which the slice was taken (0 when no slack was involved).
  unsigned slack = 0;
  std::vector<Element> basis;

  std::size_t dim() const noexcept { return basis.size(); }
  bool contains(const Element& a) const;
  // Equality ignores the slack.
  friend bool operator==(const DegreeSlice& a, const DegreeSlice& b) {
    return a.D == b.D && a.basis == b.basis;
  }
};

// Echelon basis of the span of `elements` (all of degree <= D).
DegreeSlice make_slice(unsigned D, std::vector<Element> elements, unsigned slack = 0);

// Span of the generators of degree <= D + s, closed under left and right
// multiplication by x and y while the degree stays <= D + s, then cut to
// degree <= D. Nondecreasing in s.
DegreeSlice ideal_slice(const IdealGens& gens, unsigned D, unsigned s);
// Product IJ, generated by g m h (g in I, h in J, monomial m, deg m <= D + s).
DegreeSlice product_slice(const IdealGens& I, const IdealGens& J, unsigned D, unsigned s);

// Smallest slack s <= cap - 2 with slice(s) == slice(s + 2); throws
// Error(kStabilizationFailure) otherwise.
DegreeSlice stable_ideal_slice(const IdealGens& gens, unsigned D, unsigned cap);
DegreeSlice stable_product_slice(const IdealGens& I, const IdealGens& J, unsigned D, unsigned cap);

enum class SliceOrder { kEqual, kLess, kGreater, kIncomparable };
const char* slice_order_name(SliceOrder o);
// Throws Error(kWindowMismatch) if the windows differ.
SliceOrder slice_compare(const DegreeSlice& a, const DegreeSlice& b);
DegreeSlice intersect(const DegreeSlice& a, const DegreeSlice& b);
// Some basis element of `a` outside `b`, if any.
std::optional<Element> separating_element(const DegreeSlice& a, const DegreeSlice& b);

struct IdealClass {
  enum class Kind { kZero, kWholeRing, kF, kPair };
  Kind kind = Kind::kZero;
  // Monic with nonzero constant term, degree >= 1 (kPair only).
  Polynomial f;

  friend bool operator==(const IdealClass&, const IdealClass&) = default;
};
std::string to_string(const IdealClass& c);

// Every nonzero ideal contains F and is the preimage of its Laurent image, so
// the generated ideal is determined by the gcd of the generators' images.
IdealClass ideal_classify(const IdealGens& gens);

// {r : deg r <= D, r acts as zero on the module}.
DegreeSlice annihilator(const SimpleDesc& desc, unsigned D);
// {r : deg r <= D, r s = 0}.
DegreeSlice left_annihilator(const Element& s, unsigned D);

// lann(x^n) for n = 0..n_max must increase strictly.
ClaimEntry lann_chain_check(unsigned n_max, unsigned D);

struct EssentialWitness {
  std::size_t p = 0;
  std::size_t q = 0;
  Scalar entry;
  // M_(0,p) r M_(q,0) = entry * M_(0,0).
  Element sandwich;
};
// Throws Error(kZeroElement) for r = 0.
EssentialWitness essential_check(const Element& r);

class PrimeId {
 public:
  enum class Kind { kZero, kF, kP };
  static PrimeId zero() { return PrimeId(Kind::kZero, 0); }
  static PrimeId f() { return PrimeId(Kind::kF, 0); }
  // Throws Error(kInvalidArgument) for lambda = 0.
  static PrimeId p(const Scalar& lambda);

  Kind kind() const noexcept { return kind_; }
  // Throws Error(kShapeMismatch) unless kind() == kP.
  const Scalar& lambda() const;
  // (0) has no generators; F = <1 - xy>; P(lambda) = <1 - xy, x - lambda>.
  IdealGens gens() const;

  friend bool operator==(const PrimeId&, const PrimeId&) = default;
  friend bool operator<(const PrimeId& a, const PrimeId& b);

 private:
  PrimeId(Kind kind, const Scalar& lambda) : kind_(kind), lambda_(lambda) {}
  Kind kind_;
  Scalar lambda_;
};
std::string to_string(const PrimeId& p);

// Stabilized window slice of a prime (the zero slice for (0)).
DegreeSlice prime_slice(const PrimeId& p, unsigned D, unsigned cap);
// Stabilized slice of PQ.
DegreeSlice prime_product_slice(const PrimeId& p, const PrimeId& q, unsigned D, unsigned cap);
// Prime annihilator of a simple module: P(lambda) for k_lambda, (0) for k[x].
PrimeId annihilator_prime(const SimpleDesc& desc);

// The displayed chain F = F^2 = F∩P = FP = PF = P∩P' = PP' (P = P(lambda),
// P' = P(lambda')), each adjacent equality tested on stabilized slices.
// Throws Error(kInvalidArgument) for lambda == lambda'.
struct ChainLink {
  std::string lhs;
  std::string rhs;
  bool equal = false;
  // Basis element of one side missing from the other.
  std::optional<Element> separator;
};
struct PrimeIdentities {
  std::vector<std::string> names;
  std::vector<DegreeSlice> slices;
  std::vector<ChainLink> links;
  bool all_equal() const;
};
PrimeIdentities prime_identities(const Scalar& lambda, const Scalar& lambda2, unsigned D, unsigned cap);
ClaimEntry prime_identities_check(const Scalar& lambda, const Scalar& lambda2, unsigned D, unsigned cap);

}  // namespace bicyclic
