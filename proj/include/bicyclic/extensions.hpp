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
#include <variant>
#include <vector>

#include "bicyclic/error.hpp"
#include "bicyclic/linalg.hpp"
#include "bicyclic/modules.hpp"

namespace bicyclic {

// Off-diagonal data of the block action
//   rho(r) = [ alpha(r)  delta(r) ]
//            [    0      beta(r)  ]
// on E = U (+) V. Only delta(x) and delta(y) are stored; delta(1) = 0 and the
// twisted derivation law determines the rest.
struct DeltaMap {
  LinMap dx;
  LinMap dy;

  friend bool operator==(const DeltaMap&, const DeltaMap&) = default;
};

struct ExtSpec {
  SimpleDesc U;
  SimpleDesc V;
  DeltaMap delta;

  friend bool operator==(const ExtSpec&, const ExtSpec&) = default;
};

struct ExtVector {
  ModVector u;
  ModVector v;

  ExtVector& operator+=(const ExtVector& other);
  ExtVector& operator*=(const Scalar& c);
  friend ExtVector operator+(ExtVector a, const ExtVector& b) { return a += b; }
  friend ExtVector operator*(const Scalar& c, ExtVector a) { return a *= c; }
  friend bool operator==(const ExtVector&, const ExtVector&) = default;
  bool is_zero() const noexcept { return u.is_zero() && v.is_zero(); }
};

ExtVector ext_zero(const ExtSpec& spec);
std::string to_string(const ExtVector& v);

class IncompatibleDelta : public Error {
 public:
  IncompatibleDelta(std::size_t basis_index, ModVector residual);
  std::size_t basis_index() const noexcept { return basis_index_; }
  const ModVector& residual() const noexcept { return residual_; }

 private:
  std::size_t basis_index_;
  ModVector residual_;
};

struct DeltaDefect {
  std::size_t basis_index;
  ModVector residual;
};

// First basis vector v of V where alpha(y) delta(x) v + delta(y) beta(x) v != 0.
// Beyond the extent of the stored columns both sides vanish, so the scan is
// exhaustive. Throws Error(kShapeMismatch) if the maps do not go V -> U.
std::optional<DeltaDefect> find_delta_defect(const ExtSpec& spec);

// Throws IncompatibleDelta on the first defect.
void validate_delta(const ExtSpec& spec);

// The delta(y) forced by rho(y) rho(x) = id:
//   V = k_lambda:  delta(y)(d) = -lambda^-1 alpha(y) delta(x)(d)
//   V = k[x]:      delta(y)(b_(n+1)) = -alpha(y) delta(x)(b_n), and
//                  delta(y)(b_0) = free_part (zero if absent).
DeltaMap complete_delta(const SimpleDesc& U, const SimpleDesc& V, const LinMap& dx,
                        const std::optional<ModVector>& free_part = std::nullopt);

ExtSpec make_spec(const SimpleDesc& U, const SimpleDesc& V, const LinMap& dx,
                  const std::optional<ModVector>& free_part = std::nullopt);

ExtVector ext_act(const ExtSpec& spec, const Element& a, const ExtVector& v);

struct ExtModule {
  using vector_type = ExtVector;
  ExtSpec spec;
  ExtVector act(const Element& a, const ExtVector& v) const { return ext_act(spec, a, v); }
};

// e_0..e_(count-1) (or e_0) of U followed by b_0..b_(count-1) (or d) of V.
std::vector<ExtVector> ext_basis(const ExtSpec& spec, std::size_t count);

struct SplitCertificate {
  // V = k[x]: a = b_0 - x delta(y)(b_0); the section is b_n -> x^n a.
  std::optional<ExtVector> witness;
  // V = k_lambda: the section is d -> (w, d).
  std::optional<ModVector> correction;
};

struct NonsplitCertificate {
  // Last coefficient of the section recursion; must vanish for a
  // finite-support section to exist.
  Scalar residue;
  // Section equations (lambda - alpha(x)) w = delta(x)(d) and
  // (lambda^-1 - alpha(y)) w = delta(y)(d) over the admissible support of w.
  LinearSystem system;
  std::vector<Scalar> multipliers;
};

struct SplitResult {
  std::variant<SplitCertificate, NonsplitCertificate> outcome;
  bool is_split() const noexcept { return std::holds_alternative<SplitCertificate>(outcome); }
};

// Exact decision. Throws IncompatibleDelta for invalid specs.
SplitResult split_test(const ExtSpec& spec);

// Section equations for V = k_lambda. Unknowns are the coordinates of w on
// e_0..e_m, where m + 1 bounds the support of delta (any finite-support
// solution lives there).
LinearSystem section_system(const ExtSpec& spec);

// Rebuilds the section from a Split certificate and checks it with
// is_module_map on `bound` generators plus the projection identity; for
// Nonsplit rebuilds the section system, compares it with the stored one and
// re-eliminates it.
bool replay_split_certificate(const ExtSpec& spec, const SplitResult& result, std::size_t bound = 12);

// f: E_B -> E_A with
//   f(e_i) = a e_i  (+ c d when U is one-dimensional),
//   f(d)   = w + b d.
struct Intertwiner {
  Scalar a = 1;
  Scalar b = 1;
  ModVector w;
  Scalar c = 0;

  friend bool operator==(const Intertwiner&, const Intertwiner&) = default;
};

ExtVector apply(const Intertwiner& f, const ExtVector& v);
bool is_bijective(const Intertwiner& f, const ExtSpec& source);
// (f o g) where g: E_C -> E_B and f: E_B -> E_A.
Intertwiner compose(const Intertwiner& f, const Intertwiner& g, const ExtSpec& middle);

struct IsoResult {
  std::optional<Intertwiner> map;
  std::string reason;
  bool is_iso() const noexcept { return map.has_value(); }
};

// Searches an R-module isomorphism E_B -> E_A by exact linear solving.
// Supported shapes: both (k[x], k_lambda) or both (k_mu, k_lambda); anything
// else throws Error(kShapeMismatch). Invalid specs throw IncompatibleDelta.
IsoResult iso_test(const ExtSpec& A, const ExtSpec& B);

// Intertwining on `bound` generators of E_B plus bijectivity.
bool replay_intertwiner(const ExtSpec& A, const ExtSpec& B, const Intertwiner& f, std::size_t bound = 12);

// Equivalence of short exact sequences: an isomorphism that maps U onto U'.
bool equivalence_test(const ExtSpec& A, const ExtSpec& B);
// The intertwiner behind a positive equivalence_test.
std::optional<Intertwiner> find_equivalence(const ExtSpec& A, const ExtSpec& B);

enum class Comparison { kAgrees, kDiscrepancy };
const char* comparison_name(Comparison c);

struct Classification {
  // "i": V = k[x]; "ii": U = k[x], V = k_lambda; "iii": both one-dimensional.
  std::string case_label;
  // What the classification asserts for this spec: "split" or "nonsplit".
  std::string claim;
  SplitResult oracle;
  Comparison comparison = Comparison::kAgrees;
  // Representative of the isomorphism class of E (delta = 0 when split).
  ExtSpec canonical;
};

Classification classify(const ExtSpec& spec);

// Case-label helper shared with the reporting code.
std::string case_label(const ExtSpec& spec);

}  // namespace bicyclic
