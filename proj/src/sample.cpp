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

#include "bicyclic/sample.hpp"

namespace bicyclic {

int Sampler::integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }

Scalar Sampler::scalar(int range) {
  Scalar c(integer(-range, range), integer(1, 3));
  c.canonicalize();
  return c;
}

Scalar Sampler::nonzero_scalar(int range) {
  for (;;) {
    Scalar c = scalar(range);
    if (c != 0) return c;
  }
}

Element Sampler::element(unsigned max_degree, unsigned max_terms) {
  Element a;
  const int terms = integer(1, static_cast<int>(max_terms));
  for (int t = 0; t < terms; ++t) {
    const auto d = static_cast<std::uint32_t>(integer(0, static_cast<int>(max_degree)));
    const auto i = static_cast<std::uint32_t>(integer(0, static_cast<int>(d)));
    a.add_term({i, d - i}, scalar());
  }
  return a;
}

Element Sampler::nonzero_element(unsigned max_degree, unsigned max_terms) {
  for (;;) {
    Element a = element(max_degree, max_terms);
    if (!a.is_zero()) return a;
  }
}

ModVector Sampler::vector(Shape shape, std::size_t count) {
  if (shape == Shape::kFin) return ModVector::fin(scalar());
  ModVector v(Shape::kInf);
  for (std::size_t n = 0; n < count; ++n) {
    if (coin()) v.add(n, scalar());
  }
  return v;
}

SimpleDesc Sampler::desc(Shape shape) {
  return shape == Shape::kFin ? SimpleDesc::fin(nonzero_scalar()) : SimpleDesc::inf();
}

ExtSpec Sampler::spec(Shape u, Shape v) {
  const SimpleDesc U = desc(u);
  const SimpleDesc V = desc(v);
  LinMap dx(V, U);
  if (v == Shape::kFin) {
    dx.set_column(0, vector(u));
    return make_spec(U, V, dx);
  }
  for (std::size_t n = 0; n < 4; ++n) {
    if (coin()) dx.set_column(n, vector(u));
  }
  return make_spec(U, V, dx, vector(u));
}

}  // namespace bicyclic
