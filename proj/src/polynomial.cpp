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

#include "bicyclic/polynomial.hpp"

#include <sstream>

#include "bicyclic/error.hpp"

namespace bicyclic {

Polynomial::Polynomial(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::monomial(unsigned exponent, const Scalar& coeff) {
  std::vector<Scalar> c(exponent + 1);
  c[exponent] = coeff;
  return Polynomial(std::move(c));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Scalar Polynomial::coeff(unsigned exponent) const {
  return exponent < coeffs_.size() ? coeffs_[exponent] : Scalar(0);
}

const Scalar& Polynomial::leading() const {
  if (coeffs_.empty()) throw Error(ErrorCode::kZeroElement, "leading coefficient of zero polynomial");
  return coeffs_.back();
}

Scalar Polynomial::evaluate(const Scalar& point) const {
  Scalar acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * point + *it;
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Scalar> d(coeffs_.size() - 1);
  for (std::size_t n = 1; n < coeffs_.size(); ++n) d[n - 1] = coeffs_[n] * static_cast<unsigned long>(n);
  return Polynomial(std::move(d));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return {};
  Polynomial p = *this;
  Scalar inv = 1 / leading();
  return p *= inv;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t n = 0; n < other.coeffs_.size(); ++n) coeffs_[n] += other.coeffs_[n];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t n = 0; n < other.coeffs_.size(); ++n) coeffs_[n] -= other.coeffs_[n];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Scalar& factor) {
  for (auto& c : coeffs_) c *= factor;
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Scalar> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t p = 0; p < a.coeffs_.size(); ++p) {
    for (std::size_t q = 0; q < b.coeffs_.size(); ++q) c[p + q] += a.coeffs_[p] * b.coeffs_[q];
  }
  return Polynomial(std::move(c));
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw Error(ErrorCode::kInvalidArgument, "polynomial division by zero");
  Polynomial quotient;
  Polynomial rem = a;
  const Scalar lead_inv = 1 / b.leading();
  while (!rem.is_zero() && rem.degree() >= b.degree()) {
    unsigned shift = static_cast<unsigned>(rem.degree() - b.degree());
    Polynomial term = Polynomial::monomial(shift, rem.leading() * lead_inv);
    quotient += term;
    rem -= term * b;
  }
  return {quotient, rem};
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial u = a;
  Polynomial v = b;
  while (!v.is_zero()) {
    Polynomial r = divmod(u, v).second;
    u = std::move(v);
    v = std::move(r);
  }
  return u.monic();
}

namespace {

// Shared term printer: coefficient followed by an optional power of var.
void write_term(std::ostream& os, bool first, const Scalar& c, const std::string& power_text) {
  Scalar mag = abs(c);
  if (first) {
    if (c < 0) os << '-';
  } else {
    os << (c < 0 ? " - " : " + ");
  }
  if (power_text.empty()) {
    os << to_string(mag);
  } else if (mag == 1) {
    os << power_text;
  } else {
    os << to_string(mag) << '*' << power_text;
  }
}

}  // namespace

std::string to_string(const Polynomial& p, char variable) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t n = 0; n < p.coeffs().size(); ++n) {
    const Scalar& c = p.coeffs()[n];
    if (c == 0) continue;
    std::string power_text;
    if (n == 1) power_text = std::string(1, variable);
    if (n > 1) power_text = std::string(1, variable) + "^" + std::to_string(n);
    write_term(os, first, c, power_text);
    first = false;
  }
  return os.str();
}

LaurentPoly LaurentPoly::monomial(long exponent, const Scalar& coeff) {
  LaurentPoly p;
  p.add_term(exponent, coeff);
  return p;
}

Scalar LaurentPoly::coeff(long exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Scalar(0) : it->second;
}

void LaurentPoly::add_term(long exponent, const Scalar& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

Scalar LaurentPoly::evaluate(const Scalar& point) const {
  Scalar acc = 0;
  for (const auto& [e, c] : terms_) acc += c * power(point, e);
  return acc;
}

Polynomial LaurentPoly::unit_normalized() const {
  if (terms_.empty()) return {};
  const long low = terms_.begin()->first;
  std::vector<Scalar> c(static_cast<std::size_t>(terms_.rbegin()->first - low + 1));
  for (const auto& [e, v] : terms_) c[static_cast<std::size_t>(e - low)] = v;
  return Polynomial(std::move(c));
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  for (const auto& [e1, c1] : a.terms_) {
    for (const auto& [e2, c2] : b.terms_) r.add_term(e1 + e2, c1 * c2);
  }
  return r;
}

std::string to_string(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    std::string power_text;
    if (e == 1) power_text = "t";
    if (e != 0 && e != 1) power_text = "t^" + std::to_string(e);
    write_term(os, first, c, power_text);
    first = false;
  }
  return os.str();
}

}  // namespace bicyclic
