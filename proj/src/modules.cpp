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

#include "bicyclic/modules.hpp"

#include <algorithm>
#include <sstream>

#include "bicyclic/error.hpp"
#include "bicyclic/linalg.hpp"

namespace bicyclic {

SimpleDesc SimpleDesc::fin(const Scalar& lambda) {
  if (lambda == 0) throw Error(ErrorCode::kInvalidArgument, "k_lambda requires lambda != 0");
  return SimpleDesc(Shape::kFin, lambda);
}

const Scalar& SimpleDesc::lambda() const {
  if (!is_fin()) throw Error(ErrorCode::kShapeMismatch, "the shift module has no lambda");
  return lambda_;
}

std::string to_string(const SimpleDesc& desc) {
  return desc.is_fin() ? "k_" + to_string(desc.lambda()) : "k[x]";
}

ModVector::ModVector(Shape shape, Coords coords) : shape_(shape) {
  for (const auto& [n, c] : coords) add(n, c);
}

ModVector ModVector::basis(Shape shape, std::size_t n) {
  ModVector v(shape);
  v.add(n, 1);
  return v;
}

ModVector ModVector::fin(const Scalar& d) {
  ModVector v(Shape::kFin);
  v.add(0, d);
  return v;
}

Scalar ModVector::coeff(std::size_t n) const {
  auto it = coords_.find(n);
  return it == coords_.end() ? Scalar(0) : it->second;
}

std::size_t ModVector::support_end() const noexcept {
  return coords_.empty() ? 0 : coords_.rbegin()->first + 1;
}

void ModVector::add(std::size_t n, const Scalar& c) {
  if (shape_ == Shape::kFin && n != 0) {
    throw Error(ErrorCode::kShapeMismatch, "a k_lambda vector only has coordinate 0");
  }
  if (c == 0) return;
  auto [it, inserted] = coords_.try_emplace(n, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) coords_.erase(it);
  }
}

ModVector& ModVector::operator+=(const ModVector& other) {
  if (other.shape_ != shape_ && !other.is_zero()) {
    throw Error(ErrorCode::kShapeMismatch, "adding vectors of different module shapes");
  }
  for (const auto& [n, c] : other.coords_) add(n, c);
  return *this;
}

ModVector& ModVector::operator-=(const ModVector& other) {
  if (other.shape_ != shape_ && !other.is_zero()) {
    throw Error(ErrorCode::kShapeMismatch, "subtracting vectors of different module shapes");
  }
  for (const auto& [n, c] : other.coords_) add(n, Scalar(-c));
  return *this;
}

ModVector& ModVector::operator*=(const Scalar& c) {
  if (c == 0) {
    coords_.clear();
    return *this;
  }
  for (auto& [n, v] : coords_) v *= c;
  return *this;
}

std::string to_string(const ModVector& v) {
  if (v.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [n, c] : v.coords()) {
    if (!first) os << (c < 0 ? " - " : " + ");
    if (first && c < 0) os << '-';
    Scalar mag = abs(c);
    if (mag != 1) os << to_string(mag) << '*';
    if (v.shape() == Shape::kFin) {
      os << 'd';
    } else {
      os << "b_" << n;
    }
    first = false;
  }
  return os.str();
}

void check_membership(const SimpleDesc& desc, const ModVector& v) {
  if (desc.shape() != v.shape()) {
    throw Error(ErrorCode::kShapeMismatch,
                "vector " + to_string(v) + " does not belong to " + to_string(desc));
  }
}

ModVector act(const SimpleDesc& desc, const Element& a, const ModVector& v) {
  check_membership(desc, v);
  ModVector out(desc.shape());
  if (desc.is_fin()) {
    // x^i y^j scales by lambda^(i - j).
    Scalar factor = 0;
    for (const auto& [m, c] : a.terms()) {
      factor += c * power(desc.lambda(), static_cast<long>(m.i) - static_cast<long>(m.j));
    }
    out.add(0, factor * v.coeff(0));
    return out;
  }
  for (const auto& [m, c] : a.terms()) {
    for (const auto& [n, coord] : v.coords()) {
      if (n >= m.j) out.add(n - m.j + m.i, c * coord);
    }
  }
  return out;
}

LinMap::LinMap(SimpleDesc source, SimpleDesc target, std::map<std::size_t, ModVector> columns)
    : source_(source), target_(target) {
  for (auto& [n, image] : columns) set_column(n, std::move(image));
}

ModVector LinMap::column(std::size_t n) const {
  auto it = columns_.find(n);
  return it == columns_.end() ? ModVector(target_.shape()) : it->second;
}

void LinMap::set_column(std::size_t n, ModVector image) {
  if (source_.is_fin() && n != 0) {
    throw Error(ErrorCode::kShapeMismatch, "a map out of k_lambda has a single column");
  }
  check_membership(target_, image);
  if (image.is_zero()) {
    columns_.erase(n);
  } else {
    columns_[n] = std::move(image);
  }
}

ModVector LinMap::operator()(const ModVector& v) const {
  check_membership(source_, v);
  ModVector out(target_.shape());
  for (const auto& [n, c] : v.coords()) {
    auto it = columns_.find(n);
    if (it != columns_.end()) out += c * it->second;
  }
  return out;
}

std::size_t LinMap::extent() const noexcept {
  std::size_t e = 0;
  for (const auto& [n, image] : columns_) e = std::max({e, n + 1, image.support_end()});
  return e;
}

std::vector<ModVector> simple_basis(const SimpleDesc& desc, std::size_t count) {
  if (desc.is_fin()) return {ModVector::basis(Shape::kFin, 0)};
  std::vector<ModVector> out;
  out.reserve(count);
  for (std::size_t n = 0; n < count; ++n) out.push_back(ModVector::basis(Shape::kInf, n));
  return out;
}

Element cyclic_generator_witness(const ModVector& v) {
  if (v.shape() != Shape::kInf) throw Error(ErrorCode::kShapeMismatch, "expected a shift-module vector");
  if (v.is_zero()) throw Error(ErrorCode::kZeroElement, "the zero vector generates the zero submodule");
  const auto& [top, c] = *v.coords().rbegin();
  // y^top kills every b_k with k < top and sends b_top to b_0.
  return Element::monomial({0, static_cast<std::uint32_t>(top)}, Scalar(1 / c));
}

ClaimEntry column_intertwiner_check(unsigned max_column, unsigned max_degree) {
  ClaimEntry entry;
  entry.id = "mod.column_decomposition";
  entry.statement = "F = sum_c (sum_i k*M_ic) with b_i -> M_ic an isomorphism k[x] -> column c";
  entry.scope = "window-verified";
  const auto monomials = monomials_up_to(max_degree);
  const std::size_t basis_count = max_degree + 2;
  const SimpleDesc shift = SimpleDesc::inf();
  std::size_t checks = 0;
  Echelon independence;
  const auto window = monomials_up_to(2 * basis_count + max_column + 2);
  auto coordinates = [&](const Element& e) {
    SparseVec v;
    for (const auto& [m, c] : e.terms()) {
      auto it = std::lower_bound(window.begin(), window.end(), m);
      v[static_cast<std::size_t>(it - window.begin())] = c;
    }
    return v;
  };

  for (unsigned col = 0; col <= max_column; ++col) {
    auto image = [col](std::size_t n) { return matrix_unit(static_cast<unsigned>(n), col); };
    for (std::size_t n = 0; n < basis_count; ++n) {
      const ModVector b = ModVector::basis(Shape::kInf, n);
      for (const Monomial& m : monomials) {
        const Element r = Element::monomial(m);
        const ModVector moved = act(shift, r, b);
        Element lhs;
        for (const auto& [k, c] : moved.coords()) lhs += c * image(k);
        const Element rhs = r * image(n);
        ++checks;
        if (lhs != rhs) {
          entry.verdict = Verdict::kFail;
          entry.certificate = {{"column", col},
                               {"basis_index", n},
                               {"monomial", to_string(r)},
                               {"lhs", to_string(lhs)},
                               {"rhs", to_string(rhs)}};
          return entry;
        }
      }
      if (!independence.insert(coordinates(image(n)))) {
        entry.verdict = Verdict::kFail;
        entry.certificate = {{"column", col}, {"dependent_image", to_string(image(n))}};
        return entry;
      }
    }
    if (!(Element::y() * matrix_unit(0, col)).is_zero()) {
      entry.verdict = Verdict::kFail;
      entry.certificate = {{"column", col}, {"reason", "y*M_0c != 0"}};
      return entry;
    }
  }
  entry.verdict = Verdict::kPass;
  entry.certificate = {{"columns", max_column + 1},
                       {"basis_vectors_per_column", basis_count},
                       {"monomial_degree_bound", max_degree},
                       {"intertwining_checks", checks},
                       {"independent_images", independence.rank()}};
  return entry;
}

}  // namespace bicyclic
