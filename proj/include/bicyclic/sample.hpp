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

#include <cstdint>
#include <random>

#include "bicyclic/algebra.hpp"
#include "bicyclic/extensions.hpp"
#include "bicyclic/modules.hpp"

namespace bicyclic {

// Seeded generators for the randomized checks. Output depends only on the
// seed and the call sequence.
class Sampler {
 public:
  explicit Sampler(std::uint32_t seed) : engine_(seed) {}

  std::mt19937& engine() noexcept { return engine_; }
  int integer(int lo, int hi);
  bool coin() { return integer(0, 1) == 1; }
  // p/q with |p| <= range and 1 <= q <= 3.
  Scalar scalar(int range = 3);
  Scalar nonzero_scalar(int range = 3);
  // Up to max_terms random monomials of degree <= max_degree (may be zero).
  Element element(unsigned max_degree, unsigned max_terms = 4);
  Element nonzero_element(unsigned max_degree, unsigned max_terms = 4);
  // Random vector supported on indices < count (index 0 only for k_lambda).
  ModVector vector(Shape shape, std::size_t count = 4);
  SimpleDesc desc(Shape shape);
  // Valid spec: random delta(x) (and free part when V = k[x]), completed.
  ExtSpec spec(Shape u, Shape v);

 private:
  std::mt19937 engine_;
};

}  // namespace bicyclic
