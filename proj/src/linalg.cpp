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

#include "bicyclic/linalg.hpp"

#include "bicyclic/error.hpp"

namespace bicyclic {

void axpy(SparseVec& y, const Scalar& a, const SparseVec& x) {
  if (a == 0) return;
  for (const auto& [col, value] : x) {
    auto [it, inserted] = y.try_emplace(col, a * value);
    if (!inserted) {
      it->second += a * value;
      if (it->second == 0) y.erase(it);
    }
  }
}

SparseVec Echelon::reduce(SparseVec v) const {
  std::erase_if(v, [](const auto& entry) { return entry.second == 0; });
  // Rows are fully reduced, so eliminating one pivot never reintroduces
  // another and the order of elimination does not matter.
  for (const auto& [pivot, row] : rows_) {
    auto it = v.find(pivot);
    if (it == v.end()) continue;
    Scalar factor = -it->second;
    axpy(v, factor, row);
  }
  return v;
}

bool Echelon::insert(SparseVec v) {
  v = reduce(std::move(v));
  if (v.empty()) return false;
  const std::size_t pivot = v.begin()->first;
  const Scalar inv = 1 / v.begin()->second;
  for (auto& [col, value] : v) value *= inv;
  for (auto& [p, row] : rows_) {
    auto it = row.find(pivot);
    if (it == row.end()) continue;
    Scalar factor = -it->second;
    axpy(row, factor, v);
  }
  rows_.emplace(pivot, std::move(v));
  return true;
}

std::vector<SparseVec> Echelon::rows() const {
  std::vector<SparseVec> out;
  out.reserve(rows_.size());
  for (const auto& [pivot, row] : rows_) out.push_back(row);
  return out;
}

std::vector<SparseVec> kernel(const std::vector<SparseVec>& equations, std::size_t num_unknowns) {
  Echelon ech;
  for (const auto& eq : equations) ech.insert(eq);
  const auto rows = ech.rows();
  std::map<std::size_t, const SparseVec*> by_pivot;
  for (const auto& row : rows) by_pivot.emplace(row.begin()->first, &row);

  std::vector<SparseVec> basis;
  for (std::size_t free = 0; free < num_unknowns; ++free) {
    if (by_pivot.count(free)) continue;
    SparseVec v{{free, Scalar(1)}};
    for (const auto& [pivot, row] : by_pivot) {
      auto it = row->find(free);
      if (it != row->end()) v[pivot] = -it->second;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

void LinearSystem::add_equation(SparseVec row, const Scalar& value) {
  for (const auto& [col, coeff] : row) {
    if (col >= num_unknowns) throw Error(ErrorCode::kInvalidArgument, "equation column out of range");
  }
  std::erase_if(row, [](const auto& entry) { return entry.second == 0; });
  rows.push_back(std::move(row));
  rhs.push_back(value);
}

namespace {

struct AugmentedRow {
  SparseVec coeffs;
  Scalar rhs;
  SparseVec provenance;
};

}  // namespace

SolveOutcome solve(const LinearSystem& system) {
  std::map<std::size_t, AugmentedRow> pivots;
  for (std::size_t k = 0; k < system.rows.size(); ++k) {
    AugmentedRow r{system.rows[k], system.rhs[k], SparseVec{{k, Scalar(1)}}};
    while (!r.coeffs.empty()) {
      const std::size_t lead = r.coeffs.begin()->first;
      auto it = pivots.find(lead);
      if (it == pivots.end()) break;
      const Scalar factor = -r.coeffs.begin()->second;
      axpy(r.coeffs, factor, it->second.coeffs);
      r.rhs += factor * it->second.rhs;
      axpy(r.provenance, factor, it->second.provenance);
    }
    if (r.coeffs.empty()) {
      if (r.rhs != 0) {
        SolveOutcome out;
        out.certificate.assign(system.rows.size(), Scalar(0));
        for (const auto& [idx, value] : r.provenance) out.certificate[idx] = value;
        return out;
      }
      continue;
    }
    const Scalar inv = 1 / r.coeffs.begin()->second;
    for (auto& [col, value] : r.coeffs) value *= inv;
    r.rhs *= inv;
    for (auto& [idx, value] : r.provenance) value *= inv;
    pivots.emplace(r.coeffs.begin()->first, std::move(r));
  }

  SolveOutcome out;
  out.consistent = true;
  out.solution.assign(system.num_unknowns, Scalar(0));
  for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
    const auto& [pivot, row] = *it;
    Scalar value = row.rhs;
    for (const auto& [col, coeff] : row.coeffs) {
      if (col != pivot) value -= coeff * out.solution[col];
    }
    out.solution[pivot] = value;
  }
  return out;
}

bool satisfies(const LinearSystem& system, const std::vector<Scalar>& solution) {
  if (solution.size() != system.num_unknowns) return false;
  for (std::size_t k = 0; k < system.rows.size(); ++k) {
    Scalar lhs = 0;
    for (const auto& [col, coeff] : system.rows[k]) lhs += coeff * solution[col];
    if (lhs != system.rhs[k]) return false;
  }
  return true;
}

bool certifies_inconsistency(const LinearSystem& system, const std::vector<Scalar>& multipliers) {
  if (multipliers.size() != system.rows.size()) return false;
  SparseVec combined;
  Scalar rhs = 0;
  for (std::size_t k = 0; k < system.rows.size(); ++k) {
    axpy(combined, multipliers[k], system.rows[k]);
    rhs += multipliers[k] * system.rhs[k];
  }
  return combined.empty() && rhs != 0;
}

}  // namespace bicyclic
