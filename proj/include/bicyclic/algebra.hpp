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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "bicyclic/polynomial.hpp"
#include "bicyclic/scalar.hpp"

namespace bicyclic {

// Basis element x^i y^j of R = k<x, y>/(yx - 1).
struct Monomial {
  std::uint32_t i = 0;
  std::uint32_t j = 0;

  unsigned degree() const noexcept { return i + j; }
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

// (x^a y^b)(x^c y^d) = x^(a+c-t) y^(b+d-t) with t = min(b, c).
Monomial operator*(Monomial lhs, Monomial rhs) noexcept;

// All monomials of degree <= max_degree, sorted by (i, j).
std::vector<Monomial> monomials_up_to(unsigned max_degree);

// Finite linear combination of monomials. Zero coefficients are never stored.
class Element {
 public:
  using Terms = std::map<Monomial, Scalar>;

  Element() = default;
  Element(const Scalar& constant);  // NOLINT: scalars embed as multiples of 1
  Element(int constant) : Element(Scalar(constant)) {}  // NOLINT

  static Element monomial(Monomial m, const Scalar& coeff = 1);
  static Element x() { return monomial({1, 0}); }
  static Element y() { return monomial({0, 1}); }

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  // Max i + j over the support; -1 for zero.
  int degree() const noexcept;
  Scalar coeff(Monomial m) const;

  void add_term(Monomial m, const Scalar& coeff);

  Element& operator+=(const Element& other);
  Element& operator-=(const Element& other);
  Element& operator*=(const Scalar& factor);
  Element operator-() const;

  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(const Element& a, const Element& b);
  friend Element operator*(const Scalar& c, Element a) { return a *= c; }
  friend bool operator==(const Element&, const Element&) = default;

 private:
  Terms terms_;
};

Element mul(const Element& a, const Element& b);
Element power(const Element& a, unsigned exponent);

// Anti-automorphism x <-> y: x^i y^j -> x^j y^i, extended linearly.
Element involution(const Element& a);

// M_ij = x^i (1 - xy) y^j = x^i y^j - x^(i+1) y^(j+1).
Element matrix_unit(unsigned i, unsigned j);

// n x n truncation of an operator on span{e_0, e_1, ...}; entry(r, c) is the
// e_r coefficient of the image of e_c.
class TruncMatrix {
 public:
  explicit TruncMatrix(std::size_t n);
  static TruncMatrix identity(std::size_t n);

  std::size_t dim() const noexcept { return n_; }
  const Scalar& operator()(std::size_t row, std::size_t col) const {
    return entries_[row * n_ + col];
  }
  Scalar& operator()(std::size_t row, std::size_t col) {
    return entries_[row * n_ + col];
  }

  // Top-left k x k block.
  TruncMatrix block(std::size_t k) const;
  bool is_zero() const;

  friend TruncMatrix operator*(const TruncMatrix& a, const TruncMatrix& b);
  friend TruncMatrix operator+(const TruncMatrix& a, const TruncMatrix& b);
  friend bool operator==(const TruncMatrix&, const TruncMatrix&) = default;

 private:
  std::size_t n_;
  std::vector<Scalar> entries_;
};

// Jacobson representation x e_n = e_(n+1), y e_n = e_(n-1), y e_0 = 0,
// truncated to span{e_0, ..., e_(n-1)}. Throws Error(kInvalidArgument) for
// n = 0.
TruncMatrix to_matrix(const Element& a, std::size_t n);

// Algebra map R -> k[t, t^-1], x -> t, y -> t^-1. Its kernel is <1 - xy>.
LaurentPoly laurent_image(const Element& a);

// Action on k[x] through R -> End(k[x]): x multiplies, y acts as H^-1 d/dx
// where H(f) = d/dx (x f).
Polynomial diffop_action(const Element& a, const Polynomial& p);

// Basis of {a : deg a <= max_degree, ax = xa, ay = ya}.
std::vector<Element> center_slice(unsigned max_degree);

// Canonical text form, e.g. "1 - x*y" or "y^3 - 2/3*x^2*y".
std::string to_string(const Element& a);

// Parses sums of products of rationals, x, y, powers and parentheses,
// reducing with yx = 1. Throws ParseError with the offending position.
Element parse_element(std::string_view text);

std::string to_string(const TruncMatrix& m);

}  // namespace bicyclic
