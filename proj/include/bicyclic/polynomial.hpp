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
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "bicyclic/scalar.hpp"

namespace bicyclic {

// Dense univariate polynomial over Scalar; coeffs()[n] is the coefficient of
// t^n. Trailing zeros are never stored, so the zero polynomial is empty.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Scalar> coeffs);

  static Polynomial monomial(unsigned exponent, const Scalar& coeff = 1);

  const std::vector<Scalar>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  Scalar coeff(unsigned exponent) const;
  const Scalar& leading() const;

  Scalar evaluate(const Scalar& point) const;
  Polynomial derivative() const;
  Polynomial monic() const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Scalar& factor);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Scalar& c, Polynomial a) { return a *= c; }
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void trim();
  std::vector<Scalar> coeffs_;
};

// Quotient and remainder; throws Error(kInvalidArgument) on division by zero.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);

// Monic gcd; gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

std::string to_string(const Polynomial& p, char variable = 'x');

// Element of k[t, t^-1], stored sparsely by integer exponent.
class LaurentPoly {
 public:
  using Terms = std::map<long, Scalar>;

  LaurentPoly() = default;
  static LaurentPoly monomial(long exponent, const Scalar& coeff = 1);

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  Scalar coeff(long exponent) const;
  void add_term(long exponent, const Scalar& coeff);

  Scalar evaluate(const Scalar& point) const;

  // Strips the unit t^k so the result is a polynomial with nonzero constant
  // term (zero stays zero).
  Polynomial unit_normalized() const;

  LaurentPoly& operator+=(const LaurentPoly& other);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

 private:
  Terms terms_;
};

std::string to_string(const LaurentPoly& p);

}  // namespace bicyclic
