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
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bicyclic/algebra.hpp"
#include "bicyclic/claims.hpp"
#include "bicyclic/scalar.hpp"

namespace bicyclic {

enum class Shape { kFin, kInf };

// A simple module: k_lambda (x acts by lambda, y by 1/lambda) or the shift
// module with basis b_0, b_1, ... (x b_n = b_(n+1), y b_n = b_(n-1), y b_0 = 0).
class SimpleDesc {
 public:
  // Throws Error(kInvalidArgument) for lambda = 0.
  static SimpleDesc fin(const Scalar& lambda);
  static SimpleDesc inf() { return SimpleDesc(Shape::kInf, 0); }

  Shape shape() const noexcept { return shape_; }
  bool is_fin() const noexcept { return shape_ == Shape::kFin; }
  bool is_inf() const noexcept { return shape_ == Shape::kInf; }
  // Throws Error(kShapeMismatch) for the shift module.
  const Scalar& lambda() const;

  friend bool operator==(const SimpleDesc&, const SimpleDesc&) = default;

 private:
  SimpleDesc(Shape shape, const Scalar& lambda) : shape_(shape), lambda_(lambda) {}
  Shape shape_;
  Scalar lambda_;
};

std::string to_string(const SimpleDesc& desc);

// Finite-support coordinate vector. A k_lambda vector only uses index 0
// (the basis vector d).
class ModVector {
 public:
  using Coords = std::map<std::size_t, Scalar>;

  ModVector() = default;
  explicit ModVector(Shape shape) : shape_(shape) {}
  ModVector(Shape shape, Coords coords);

  static ModVector basis(Shape shape, std::size_t n);
  static ModVector fin(const Scalar& d);

  Shape shape() const noexcept { return shape_; }
  const Coords& coords() const noexcept { return coords_; }
  bool is_zero() const noexcept { return coords_.empty(); }
  Scalar coeff(std::size_t n) const;
  // One past the largest index in the support; 0 for the zero vector.
  std::size_t support_end() const noexcept;

  void add(std::size_t n, const Scalar& c);

  ModVector& operator+=(const ModVector& other);
  ModVector& operator-=(const ModVector& other);
  ModVector& operator*=(const Scalar& c);
  friend ModVector operator+(ModVector a, const ModVector& b) { return a += b; }
  friend ModVector operator-(ModVector a, const ModVector& b) { return a -= b; }
  friend ModVector operator*(const Scalar& c, ModVector a) { return a *= c; }
  friend bool operator==(const ModVector&, const ModVector&) = default;

 private:
  Shape shape_ = Shape::kInf;
  Coords coords_;
};

std::string to_string(const ModVector& v);

// Throws Error(kShapeMismatch) if v does not belong to desc.
void check_membership(const SimpleDesc& desc, const ModVector& v);

ModVector act(const SimpleDesc& desc, const Element& a, const ModVector& v);

// k-linear map between simple modules with finitely many nonzero columns.
class LinMap {
 public:
  LinMap(SimpleDesc source, SimpleDesc target) : source_(source), target_(target) {}
  // Throws Error(kShapeMismatch) if a column index or image is not compatible
  // with source/target.
  LinMap(SimpleDesc source, SimpleDesc target, std::map<std::size_t, ModVector> columns);

  const SimpleDesc& source() const noexcept { return source_; }
  const SimpleDesc& target() const noexcept { return target_; }
  const std::map<std::size_t, ModVector>& columns() const noexcept { return columns_; }
  bool is_zero() const noexcept { return columns_.empty(); }

  ModVector column(std::size_t n) const;
  void set_column(std::size_t n, ModVector image);
  ModVector operator()(const ModVector& v) const;

  // One past the largest column index or row index anywhere in the map.
  std::size_t extent() const noexcept;

  friend bool operator==(const LinMap&, const LinMap&) = default;

 private:
  SimpleDesc source_;
  SimpleDesc target_;
  std::map<std::size_t, ModVector> columns_;
};

// Module views used by the intertwiner checks.
struct SimpleModule {
  using vector_type = ModVector;
  SimpleDesc desc;
  ModVector act(const Element& a, const ModVector& v) const { return bicyclic::act(desc, a, v); }
};

// R as a left module over itself.
struct RegularModule {
  using vector_type = Element;
  Element act(const Element& a, const Element& v) const { return a * v; }
};

template <class Vec>
struct MapCounterexample {
  std::string generator;
  std::size_t generator_index = 0;
  Vec lhs;
  Vec rhs;
};

template <class Vec>
struct MapCheck {
  std::optional<MapCounterexample<Vec>> counterexample;
  std::size_t checks = 0;
  bool ok() const noexcept { return !counterexample.has_value(); }
};

// Checks f(g v) == g f(v) for g in {x, y} and every v in `generators`. That
// suffices for R-linearity on their span because R is generated by x and y.
// f must be k-linear on the whole source module.
template <class Src, class Dst, class F>
MapCheck<typename Dst::vector_type> is_module_map(
    const Src& src, const Dst& dst, F&& f,
    std::span<const typename Src::vector_type> generators) {
  MapCheck<typename Dst::vector_type> result;
  const std::pair<const char*, Element> gens[2] = {{"x", Element::x()}, {"y", Element::y()}};
  for (std::size_t k = 0; k < generators.size(); ++k) {
    for (const auto& [name, g] : gens) {
      auto lhs = f(src.act(g, generators[k]));
      auto rhs = dst.act(g, f(generators[k]));
      ++result.checks;
      if (!(lhs == rhs)) {
        result.counterexample = MapCounterexample<typename Dst::vector_type>{
            name, k, std::move(lhs), std::move(rhs)};
        return result;
      }
    }
  }
  return result;
}

// Basis vectors of a simple module: b_0..b_(count-1), or just d for k_lambda.
std::vector<ModVector> simple_basis(const SimpleDesc& desc, std::size_t count);

// Linear extension of n -> images(n) to arbitrary vectors of the source.
template <class Vec>
std::function<Vec(const ModVector&)> linear_extension(std::function<Vec(std::size_t)> images,
                                                      Vec zero) {
  return [images = std::move(images), zero = std::move(zero)](const ModVector& v) {
    Vec out = zero;
    for (const auto& [n, c] : v.coords()) out += c * images(n);
    return out;
  };
}

// Convenience form for maps out of a simple module given on basis vectors:
// checks the generators with index < bound (just d for k_lambda). `images`
// must be defined up to index bound.
template <class Dst>
MapCheck<typename Dst::vector_type> is_module_map(
    const SimpleDesc& src, const Dst& dst,
    std::function<typename Dst::vector_type(std::size_t)> images,
    typename Dst::vector_type zero, std::size_t bound) {
  const auto gens = simple_basis(src, bound);
  auto f = linear_extension<typename Dst::vector_type>(std::move(images), std::move(zero));
  return is_module_map(SimpleModule{src}, dst, f,
                       std::span<const ModVector>(gens.data(), gens.size()));
}

// Element r with r v = b_0 for a nonzero vector of the shift module: if the
// top coordinate of v is c at index n, then r = c^-1 y^n.
Element cyclic_generator_witness(const ModVector& v);

// b_i -> M_(i,c) is an isomorphism from the shift module onto column c of F,
// for every c <= max_column, checked on all monomials of degree <= max_degree
// acting on b_0..b_(max_degree + 1). Also checks the columns are independent.
ClaimEntry column_intertwiner_check(unsigned max_column, unsigned max_degree);

}  // namespace bicyclic
