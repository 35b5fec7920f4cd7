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
#include <map>
#include <vector>

#include "bicyclic/scalar.hpp"

namespace bicyclic {

// Sparse vector keyed by column index; zeros are never stored.
using SparseVec = std::map<std::size_t, Scalar>;

// y += a * x
void axpy(SparseVec& y, const Scalar& a, const SparseVec& x);

// Incrementally maintained reduced row echelon form. Pivots are the smallest
// column index of each row, so callers choose elimination priority through
// their column numbering.
class Echelon {
 public:
  // Returns true if v was independent of the current rows (and was added).
  bool insert(SparseVec v);
  SparseVec reduce(SparseVec v) const;
  bool contains(const SparseVec& v) const { return reduce(v).empty(); }
  std::size_t rank() const noexcept { return rows_.size(); }

  // Canonical basis: rows with leading coefficient 1, sorted by pivot.
  std::vector<SparseVec> rows() const;

 private:
  std::map<std::size_t, SparseVec> rows_;
};

// Basis of {c : row . c = 0 for every row}, c ranging over num_unknowns
// coordinates. One vector per free column, in increasing column order.
std::vector<SparseVec> kernel(const std::vector<SparseVec>& equations, std::size_t num_unknowns);

struct LinearSystem {
  std::size_t num_unknowns = 0;
  std::vector<SparseVec> rows;
  std::vector<Scalar> rhs;

  void add_equation(SparseVec row, const Scalar& value);
};

struct SolveOutcome {
  bool consistent = false;
  // Particular solution with free unknowns set to zero (consistent case).
  std::vector<Scalar> solution;
  // Row multipliers y with y^T A = 0 and y^T b != 0 (inconsistent case).
  std::vector<Scalar> certificate;
};

// Gaussian elimination that tracks row provenance, so an inconsistent system
// comes back with a checkable Farkas-style certificate.
SolveOutcome solve(const LinearSystem& system);

bool satisfies(const LinearSystem& system, const std::vector<Scalar>& solution);
bool certifies_inconsistency(const LinearSystem& system, const std::vector<Scalar>& multipliers);

}  // namespace bicyclic
