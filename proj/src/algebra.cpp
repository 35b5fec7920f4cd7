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

#include "bicyclic/algebra.hpp"

#include <algorithm>
#include <sstream>

#include "bicyclic/error.hpp"
#include "bicyclic/linalg.hpp"

namespace bicyclic {

Monomial operator*(Monomial lhs, Monomial rhs) noexcept {
  // y^b x^c collapses to x^(c-t) y^(b-t), t = min(b, c).
  const std::uint32_t t = std::min(lhs.j, rhs.i);
  return {lhs.i + rhs.i - t, lhs.j + rhs.j - t};
}

std::vector<Monomial> monomials_up_to(unsigned max_degree) {
  std::vector<Monomial> out;
  for (std::uint32_t i = 0; i <= max_degree; ++i) {
    for (std::uint32_t j = 0; i + j <= max_degree; ++j) out.push_back({i, j});
  }
  return out;
}

Element::Element(const Scalar& constant) { add_term({0, 0}, constant); }

Element Element::monomial(Monomial m, const Scalar& coeff) {
  Element e;
  e.add_term(m, coeff);
  return e;
}

int Element::degree() const noexcept {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m.degree()));
  return d;
}

Scalar Element::coeff(Monomial m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar(0) : it->second;
}

void Element::add_term(Monomial m, const Scalar& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

Element& Element::operator+=(const Element& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Element& Element::operator-=(const Element& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, Scalar(-c));
  return *this;
}

Element& Element::operator*=(const Scalar& factor) {
  if (factor == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= factor;
  return *this;
}

Element Element::operator-() const {
  Element e = *this;
  return e *= Scalar(-1);
}

Element operator*(const Element& a, const Element& b) {
  Element out;
  for (const auto& [m1, c1] : a.terms_) {
    for (const auto& [m2, c2] : b.terms_) out.add_term(m1 * m2, c1 * c2);
  }
  return out;
}

Element mul(const Element& a, const Element& b) { return a * b; }

Element power(const Element& a, unsigned exponent) {
  Element result = 1;
  for (unsigned k = 0; k < exponent; ++k) result = result * a;
  return result;
}

Element involution(const Element& a) {
  Element out;
  for (const auto& [m, c] : a.terms()) out.add_term({m.j, m.i}, c);
  return out;
}

Element matrix_unit(unsigned i, unsigned j) {
  Element e = Element::monomial({i, j});
  e.add_term({i + 1, j + 1}, Scalar(-1));
  return e;
}

TruncMatrix::TruncMatrix(std::size_t n) : n_(n), entries_(n * n) {}

TruncMatrix TruncMatrix::identity(std::size_t n) {
  TruncMatrix m(n);
  for (std::size_t k = 0; k < n; ++k) m(k, k) = 1;
  return m;
}

TruncMatrix TruncMatrix::block(std::size_t k) const {
  k = std::min(k, n_);
  TruncMatrix b(k);
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t c = 0; c < k; ++c) b(r, c) = (*this)(r, c);
  }
  return b;
}

bool TruncMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Scalar& s) { return s == 0; });
}

TruncMatrix operator*(const TruncMatrix& a, const TruncMatrix& b) {
  if (a.n_ != b.n_) throw Error(ErrorCode::kInvalidArgument, "matrix dimension mismatch");
  const std::size_t n = a.n_;
  TruncMatrix out(n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t k = 0; k < n; ++k) {
      const Scalar& lhs = a(r, k);
      if (lhs == 0) continue;
      for (std::size_t c = 0; c < n; ++c) {
        if (b(k, c) != 0) out(r, c) += lhs * b(k, c);
      }
    }
  }
  return out;
}

TruncMatrix operator+(const TruncMatrix& a, const TruncMatrix& b) {
  if (a.n_ != b.n_) throw Error(ErrorCode::kInvalidArgument, "matrix dimension mismatch");
  TruncMatrix out = a;
  for (std::size_t k = 0; k < out.entries_.size(); ++k) out.entries_[k] += b.entries_[k];
  return out;
}

TruncMatrix to_matrix(const Element& a, std::size_t n) {
  if (n == 0) throw Error(ErrorCode::kInvalidArgument, "truncation dimension must be >= 1");
  TruncMatrix m(n);
  for (const auto& [mono, c] : a.terms()) {
    // x^i y^j e_col = e_(col - j + i) for col >= j, else 0.
    for (std::size_t col = mono.j; col < n; ++col) {
      const std::size_t row = col - mono.j + mono.i;
      if (row < n) m(row, col) += c;
    }
  }
  return m;
}

LaurentPoly laurent_image(const Element& a) {
  LaurentPoly p;
  for (const auto& [m, c] : a.terms()) {
    p.add_term(static_cast<long>(m.i) - static_cast<long>(m.j), c);
  }
  return p;
}

namespace {

// H(x^n) = (n + 1) x^n, so H^-1 divides the x^n coefficient by n + 1.
Polynomial apply_h_inverse(const Polynomial& p) {
  std::vector<Scalar> c = p.coeffs();
  for (std::size_t n = 0; n < c.size(); ++n) c[n] /= static_cast<unsigned long>(n + 1);
  return Polynomial(std::move(c));
}

Polynomial shift_up(const Polynomial& p, unsigned by) {
  return Polynomial::monomial(by) * p;
}

}  // namespace

Polynomial diffop_action(const Element& a, const Polynomial& p) {
  Polynomial out;
  for (const auto& [m, c] : a.terms()) {
    Polynomial q = p;
    for (std::uint32_t k = 0; k < m.j; ++k) q = apply_h_inverse(q.derivative());
    out += c * shift_up(q, m.i);
  }
  return out;
}

std::vector<Element> center_slice(unsigned max_degree) {
  const auto unknowns = monomials_up_to(max_degree);
  // One equation per (generator, output monomial) pair.
  std::map<std::pair<int, Monomial>, SparseVec> equations;
  const Element gens[2] = {Element::x(), Element::y()};
  for (std::size_t col = 0; col < unknowns.size(); ++col) {
    const Element m = Element::monomial(unknowns[col]);
    for (int g = 0; g < 2; ++g) {
      const Element commutator = m * gens[g] - gens[g] * m;
      for (const auto& [out_mono, c] : commutator.terms()) {
        equations[{g, out_mono}][col] = c;
      }
    }
  }
  std::vector<SparseVec> rows;
  rows.reserve(equations.size());
  for (auto& [key, row] : equations) rows.push_back(std::move(row));

  std::vector<Element> basis;
  for (const auto& v : kernel(rows, unknowns.size())) {
    Element e;
    for (const auto& [col, c] : v) e.add_term(unknowns[col], c);
    basis.push_back(std::move(e));
  }
  return basis;
}

namespace {

std::string monomial_text(Monomial m) {
  std::string s;
  if (m.i > 0) s += m.i == 1 ? "x" : "x^" + std::to_string(m.i);
  if (m.j > 0) {
    if (!s.empty()) s += '*';
    s += m.j == 1 ? "y" : "y^" + std::to_string(m.j);
  }
  return s;
}

}  // namespace

std::string to_string(const Element& a) {
  if (a.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : a.terms()) {
    Scalar mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    const std::string mono = monomial_text(m);
    if (mono.empty()) {
      os << to_string(mag);
    } else if (mag == 1) {
      os << mono;
    } else {
      os << to_string(mag) << '*' << mono;
    }
    first = false;
  }
  return os.str();
}

std::string to_string(const TruncMatrix& m) {
  std::vector<std::string> cells(m.dim() * m.dim());
  std::size_t width = 1;
  for (std::size_t r = 0; r < m.dim(); ++r) {
    for (std::size_t c = 0; c < m.dim(); ++c) {
      cells[r * m.dim() + c] = to_string(m(r, c));
      width = std::max(width, cells[r * m.dim() + c].size());
    }
  }
  std::ostringstream os;
  for (std::size_t r = 0; r < m.dim(); ++r) {
    for (std::size_t c = 0; c < m.dim(); ++c) {
      const std::string& cell = cells[r * m.dim() + c];
      if (c > 0) os << ' ';
      os << std::string(width - cell.size(), ' ') << cell;
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace bicyclic
