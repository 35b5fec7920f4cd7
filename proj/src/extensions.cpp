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

#include "bicyclic/extensions.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace bicyclic {

namespace {

const ModVector kD = ModVector::basis(Shape::kFin, 0);

ExtVector apply_x(const ExtSpec& s, const ExtVector& v) {
  return {act(s.U, Element::x(), v.u) + s.delta.dx(v.v), act(s.V, Element::x(), v.v)};
}

ExtVector apply_y(const ExtSpec& s, const ExtVector& v) {
  return {act(s.U, Element::y(), v.u) + s.delta.dy(v.v), act(s.V, Element::y(), v.v)};
}

void check_maps(const ExtSpec& spec) {
  for (const LinMap* m : {&spec.delta.dx, &spec.delta.dy}) {
    if (!(m->source() == spec.V) || !(m->target() == spec.U)) {
      throw Error(ErrorCode::kShapeMismatch, "delta must map " + to_string(spec.V) + " into " +
                                                 to_string(spec.U));
    }
  }
}

}  // namespace

ExtVector& ExtVector::operator+=(const ExtVector& other) {
  u += other.u;
  v += other.v;
  return *this;
}

ExtVector& ExtVector::operator*=(const Scalar& c) {
  u *= c;
  v *= c;
  return *this;
}

ExtVector ext_zero(const ExtSpec& spec) {
  return {ModVector(spec.U.shape()), ModVector(spec.V.shape())};
}

std::string to_string(const ExtVector& v) {
  return "(" + to_string(v.u) + ") + (" + to_string(v.v) + ")";
}

IncompatibleDelta::IncompatibleDelta(std::size_t basis_index, ModVector residual)
    : Error(ErrorCode::kIncompatibleDelta,
            "alpha(y)delta(x) + delta(y)beta(x) != 0 at basis vector " +
                std::to_string(basis_index) + " (residual " + to_string(residual) + ")"),
      basis_index_(basis_index),
      residual_(std::move(residual)) {}

std::optional<DeltaDefect> find_delta_defect(const ExtSpec& spec) {
  check_maps(spec);
  const DeltaMap& d = spec.delta;
  if (spec.V.is_fin()) {
    ModVector r = act(spec.U, Element::y(), d.dx(kD)) + spec.V.lambda() * d.dy(kD);
    if (!r.is_zero()) return DeltaDefect{0, std::move(r)};
    return std::nullopt;
  }
  const std::size_t end = std::max(d.dx.extent(), d.dy.extent()) + 1;
  for (std::size_t n = 0; n <= end; ++n) {
    ModVector r = act(spec.U, Element::y(), d.dx.column(n)) + d.dy.column(n + 1);
    if (!r.is_zero()) return DeltaDefect{n, std::move(r)};
  }
  return std::nullopt;
}

void validate_delta(const ExtSpec& spec) {
  if (auto defect = find_delta_defect(spec)) {
    throw IncompatibleDelta(defect->basis_index, std::move(defect->residual));
  }
}

DeltaMap complete_delta(const SimpleDesc& U, const SimpleDesc& V, const LinMap& dx,
                        const std::optional<ModVector>& free_part) {
  if (!(dx.source() == V) || !(dx.target() == U)) {
    throw Error(ErrorCode::kShapeMismatch, "delta(x) must map " + to_string(V) + " into " + to_string(U));
  }
  LinMap dy(V, U);
  if (V.is_fin()) {
    if (free_part && !free_part->is_zero()) {
      throw Error(ErrorCode::kInvalidArgument, "delta(y) has no free part when V is one-dimensional");
    }
    dy.set_column(0, Scalar(-1 / V.lambda()) * act(U, Element::y(), dx.column(0)));
    return {dx, dy};
  }
  if (free_part) dy.set_column(0, *free_part);
  for (const auto& [n, image] : dx.columns()) {
    dy.set_column(n + 1, Scalar(-1) * act(U, Element::y(), image));
  }
  return {dx, dy};
}

ExtSpec make_spec(const SimpleDesc& U, const SimpleDesc& V, const LinMap& dx,
                  const std::optional<ModVector>& free_part) {
  return ExtSpec{U, V, complete_delta(U, V, dx, free_part)};
}

ExtVector ext_act(const ExtSpec& spec, const Element& a, const ExtVector& v) {
  check_membership(spec.U, v.u);
  check_membership(spec.V, v.v);
  ExtVector out = ext_zero(spec);
  for (const auto& [m, c] : a.terms()) {
    ExtVector w = v;
    for (std::uint32_t k = 0; k < m.j; ++k) w = apply_y(spec, w);
    for (std::uint32_t k = 0; k < m.i; ++k) w = apply_x(spec, w);
    out += c * w;
  }
  return out;
}

std::vector<ExtVector> ext_basis(const ExtSpec& spec, std::size_t count) {
  std::vector<ExtVector> out;
  for (const auto& e : simple_basis(spec.U, count)) out.push_back({e, ModVector(spec.V.shape())});
  for (const auto& b : simple_basis(spec.V, count)) out.push_back({ModVector(spec.U.shape()), b});
  return out;
}

LinearSystem section_system(const ExtSpec& spec) {
  if (!spec.V.is_fin()) {
    throw Error(ErrorCode::kInvalidArgument, "section equations are only needed for one-dimensional V");
  }
  const Scalar lambda = spec.V.lambda();
  const Scalar lambda_inv = 1 / lambda;
  const ModVector g = spec.delta.dx(kD);
  const ModVector h = spec.delta.dy(kD);
  LinearSystem sys;
  if (spec.U.is_fin()) {
    const Scalar mu = spec.U.lambda();
    sys.num_unknowns = 1;
    sys.add_equation({{0, Scalar(lambda - mu)}}, g.coeff(0));
    sys.add_equation({{0, Scalar(lambda_inv - 1 / mu)}}, h.coeff(0));
    return sys;
  }
  const std::size_t m = std::max(g.support_end(), h.support_end());
  sys.num_unknowns = m;
  auto entry = [&](SparseVec& row, std::size_t k, const Scalar& c) {
    if (k < m && c != 0) axpy(row, c, SparseVec{{k, Scalar(1)}});
  };
  // Component i of (lambda - alpha(x)) w: lambda w_i - w_(i-1).
  for (std::size_t i = 0; i <= m; ++i) {
    SparseVec row;
    entry(row, i, lambda);
    if (i > 0) entry(row, i - 1, Scalar(-1));
    sys.add_equation(std::move(row), g.coeff(i));
  }
  // Component i of (lambda^-1 - alpha(y)) w: lambda^-1 w_i - w_(i+1).
  for (std::size_t i = 0; i <= m; ++i) {
    SparseVec row;
    entry(row, i, lambda_inv);
    entry(row, i + 1, Scalar(-1));
    sys.add_equation(std::move(row), h.coeff(i));
  }
  return sys;
}

namespace {

SplitResult nonsplit_with_certificate(const ExtSpec& spec, const Scalar& residue) {
  LinearSystem sys = section_system(spec);
  SolveOutcome out = solve(sys);
  if (out.consistent) {
    throw std::logic_error("split oracle disagreement: recursion found no section, elimination did");
  }
  return {NonsplitCertificate{residue, std::move(sys), std::move(out.certificate)}};
}

}  // namespace

SplitResult split_test(const ExtSpec& spec) {
  validate_delta(spec);
  if (spec.V.is_inf()) {
    const ModVector b0 = ModVector::basis(Shape::kInf, 0);
    ExtVector a{Scalar(-1) * act(spec.U, Element::x(), spec.delta.dy(b0)), b0};
    if (!ext_act(spec, Element::y(), a).is_zero()) {
      throw std::logic_error("split witness is not killed by y");
    }
    return {SplitCertificate{std::move(a), std::nullopt}};
  }

  const Scalar lambda = spec.V.lambda();
  const ModVector g = spec.delta.dx(kD);
  if (spec.U.is_fin()) {
    const Scalar mu = spec.U.lambda();
    if (lambda != mu) {
      return {SplitCertificate{std::nullopt, Scalar(1 / (lambda - mu)) * ModVector(g)}};
    }
    if (g.is_zero()) return {SplitCertificate{std::nullopt, ModVector(Shape::kFin)}};
    return nonsplit_with_certificate(spec, g.coeff(0));
  }

  // (lambda - alpha(x)) w = g is triangular: w_i = (w_(i-1) + g_i) / lambda.
  // Past the support of g the recursion is w_i = w_(i-1) / lambda, so w has
  // finite support iff the last coefficient inside the support vanishes.
  const std::size_t m = g.support_end();
  ModVector w(Shape::kInf);
  Scalar prev = 0;
  for (std::size_t i = 0; i < m; ++i) {
    Scalar wi = (prev + g.coeff(i)) / lambda;
    w.add(i, wi);
    prev = wi;
  }
  if (prev != 0) return nonsplit_with_certificate(spec, prev);
  return {SplitCertificate{std::nullopt, std::move(w)}};
}

namespace {

bool same_system(const LinearSystem& a, const LinearSystem& b) {
  return a.num_unknowns == b.num_unknowns && a.rows == b.rows && a.rhs == b.rhs;
}

}  // namespace

bool replay_split_certificate(const ExtSpec& spec, const SplitResult& result, std::size_t bound) {
  if (find_delta_defect(spec)) return false;
  const ExtModule target{spec};
  const ExtVector zero = ext_zero(spec);

  if (const auto* split = std::get_if<SplitCertificate>(&result.outcome)) {
    std::function<ExtVector(std::size_t)> images;
    if (spec.V.is_inf()) {
      if (!split->witness) return false;
      const ExtVector a = *split->witness;
      if (!ext_act(spec, Element::y(), a).is_zero()) return false;
      images = [spec, a](std::size_t n) {
        return ext_act(spec, Element::monomial({static_cast<std::uint32_t>(n), 0}), a);
      };
    } else {
      if (!split->correction) return false;
      const ExtVector s{*split->correction, kD};
      images = [s](std::size_t) { return s; };
    }
    if (!is_module_map(spec.V, target, images, zero, bound).ok()) return false;
    for (const auto& b : simple_basis(spec.V, bound)) {
      const std::size_t n = b.coords().begin()->first;
      if (!(images(n).v == b)) return false;
    }
    return true;
  }

  const auto& cert = std::get<NonsplitCertificate>(result.outcome);
  if (cert.residue == 0) return false;
  const LinearSystem rebuilt = section_system(spec);
  if (!same_system(rebuilt, cert.system)) return false;
  if (!certifies_inconsistency(rebuilt, cert.multipliers)) return false;
  return !solve(rebuilt).consistent;
}

ExtVector apply(const Intertwiner& f, const ExtVector& v) {
  const Scalar dv = v.v.coeff(0);
  ModVector u = f.a * ModVector(v.u);
  if (dv != 0) u += dv * ModVector(f.w);
  Scalar d = f.b * dv;
  if (f.c != 0) d += f.c * v.u.coeff(0);
  return {std::move(u), ModVector::fin(d)};
}

bool is_bijective(const Intertwiner& f, const ExtSpec& source) {
  if (source.U.is_fin()) return f.a * f.b - f.c * f.w.coeff(0) != 0;
  return f.a != 0 && f.b != 0 && f.c == 0;
}

Intertwiner compose(const Intertwiner& f, const Intertwiner& g, const ExtSpec& middle) {
  const ExtVector e0{ModVector::basis(middle.U.shape(), 0), ModVector(Shape::kFin)};
  const ExtVector d{ModVector(middle.U.shape()), kD};
  const ExtVector fe = apply(f, apply(g, e0));
  const ExtVector fd = apply(f, apply(g, d));
  Intertwiner out;
  out.a = fe.u.coeff(0);
  out.c = fe.v.coeff(0);
  out.w = fd.u;
  out.b = fd.v.coeff(0);
  return out;
}

namespace {

void check_iso_shapes(const ExtSpec& A, const ExtSpec& B) {
  const bool a_ok = A.V.is_fin();
  const bool b_ok = B.V.is_fin();
  if (!a_ok || !b_ok || A.U.shape() != B.U.shape()) {
    throw Error(ErrorCode::kShapeMismatch,
                "isomorphism search needs two (k[x], k_lambda) or two (k_mu, k_lambda) extensions");
  }
}

// Intertwining equations for f(d) = w + b d with f = a * id on U = k[x].
// Unknowns: w_0..w_(m-1), plus b at index m when b is not fixed.
LinearSystem inf_fin_system(const ExtSpec& A, const ExtSpec& B, const std::optional<Scalar>& fixed_b) {
  const Scalar a = 1;
  const Scalar lamA = A.V.lambda();
  const Scalar lamB = B.V.lambda();
  const ModVector gA = A.delta.dx(kD), hA = A.delta.dy(kD);
  const ModVector gB = B.delta.dx(kD), hB = B.delta.dy(kD);
  const std::size_t m = std::max({gA.support_end(), hA.support_end(), gB.support_end(), hB.support_end()}) + 1;

  LinearSystem sys;
  sys.num_unknowns = fixed_b ? m : m + 1;
  const std::size_t b_col = m;
  auto put = [&](SparseVec& row, std::size_t k, const Scalar& c) {
    if (k < m && c != 0) axpy(row, c, SparseVec{{k, Scalar(1)}});
  };
  // Adds "b * coeff" either as an unknown column or to the right-hand side.
  auto put_b = [&](SparseVec& row, Scalar& rhs, const Scalar& coeff) {
    if (coeff == 0) return;
    if (fixed_b) {
      rhs -= coeff * *fixed_b;
    } else {
      axpy(row, coeff, SparseVec{{b_col, Scalar(1)}});
    }
  };

  // x on d, U-part: w_(i-1) - lamB w_i + b gA_i - a gB_i = 0.
  for (std::size_t i = 0; i <= m; ++i) {
    SparseVec row;
    Scalar rhs = a * gB.coeff(i);
    if (i > 0) put(row, i - 1, 1);
    put(row, i, Scalar(-lamB));
    put_b(row, rhs, gA.coeff(i));
    sys.add_equation(std::move(row), rhs);
  }
  // y on d, U-part: w_(i+1) - lamB^-1 w_i + b hA_i - a hB_i = 0.
  for (std::size_t i = 0; i <= m; ++i) {
    SparseVec row;
    Scalar rhs = a * hB.coeff(i);
    put(row, i + 1, 1);
    put(row, i, Scalar(-1 / lamB));
    put_b(row, rhs, hA.coeff(i));
    sys.add_equation(std::move(row), rhs);
  }
  // d-parts: (lamA - lamB) b = 0 and (lamA^-1 - lamB^-1) b = 0.
  for (const Scalar& coeff : {Scalar(lamA - lamB), Scalar(1 / lamA - 1 / lamB)}) {
    SparseVec row;
    Scalar rhs = 0;
    put_b(row, rhs, coeff);
    sys.add_equation(std::move(row), rhs);
  }
  return sys;
}

IsoResult iso_inf_fin(const ExtSpec& A, const ExtSpec& B) {
  auto assemble = [](const std::vector<Scalar>& sol, std::size_t m, const Scalar& b) {
    Intertwiner f;
    f.a = 1;
    f.b = b;
    f.w = ModVector(Shape::kInf);
    for (std::size_t k = 0; k < m; ++k) f.w.add(k, sol[k]);
    return f;
  };
  LinearSystem fixed = inf_fin_system(A, B, Scalar(1));
  SolveOutcome out = solve(fixed);
  if (out.consistent) return {assemble(out.solution, fixed.num_unknowns, 1), ""};

  LinearSystem free = inf_fin_system(A, B, std::nullopt);
  out = solve(free);
  const std::size_t m = free.num_unknowns - 1;
  if (A.V.lambda() != B.V.lambda()) return {std::nullopt, "lambda mismatch forces b = 0"};
  if (!out.consistent) return {std::nullopt, "no intertwiner restricts to a nonzero multiple of the identity on U"};
  // b = 1 failed, so b is a pivot and its value is forced.
  if (out.solution[m] == 0) return {std::nullopt, "every intertwiner has b = 0"};
  return {assemble(out.solution, m, out.solution[m]), ""};
}

// Fin/Fin: f = [[a, w], [c, b]] acting on columns (u, v) in the basis (e, d).
IsoResult iso_fin_fin(const ExtSpec& A, const ExtSpec& B, bool triangular) {
  enum { kA = 0, kW = 1, kC = 2, kB = 3 };
  std::vector<SparseVec> equations;
  auto add = [&](std::initializer_list<std::pair<int, Scalar>> terms) {
    SparseVec row;
    for (const auto& [col, c] : terms) {
      if (c != 0) axpy(row, c, SparseVec{{static_cast<std::size_t>(col), Scalar(1)}});
    }
    if (!row.empty()) equations.push_back(std::move(row));
  };
  struct Block {
    Scalar p, q, r;
  };
  auto blocks = [](const ExtSpec& s) {
    const Scalar mu = s.U.lambda();
    const Scalar lam = s.V.lambda();
    return std::array<Block, 2>{Block{mu, s.delta.dx(kD).coeff(0), lam},
                                Block{Scalar(1 / mu), s.delta.dy(kD).coeff(0), Scalar(1 / lam)}};
  };
  const auto bx = blocks(A);
  const auto bz = blocks(B);
  for (int g = 0; g < 2; ++g) {
    const Block& X = bx[g];
    const Block& Z = bz[g];
    // X F - F Z = 0 entrywise.
    add({{kA, Scalar(X.p - Z.p)}, {kC, X.q}});
    add({{kA, Scalar(-Z.q)}, {kW, Scalar(X.p - Z.r)}, {kB, X.q}});
    add({{kC, Scalar(X.r - Z.p)}});
    add({{kC, Scalar(-Z.q)}, {kB, Scalar(X.r - Z.r)}});
  }
  if (triangular) add({{kC, Scalar(1)}});

  const auto basis = kernel(equations, 4);
  auto to_map = [](const SparseVec& v) {
    Intertwiner f;
    auto get = [&](int k) {
      auto it = v.find(static_cast<std::size_t>(k));
      return it == v.end() ? Scalar(0) : it->second;
    };
    f.a = get(kA);
    f.b = get(kB);
    f.c = get(kC);
    f.w = ModVector::fin(get(kW));
    return f;
  };
  const SparseVec identity{{kA, Scalar(1)}, {kB, Scalar(1)}};
  Echelon span;
  for (const auto& v : basis) span.insert(v);
  if (span.contains(identity)) return {to_map(identity), ""};

  // det = a b - c w is a quadratic form on the kernel; a nonzero quadratic
  // cannot vanish on all of {0, 1, 2}^dim, so this search is a decision.
  const std::size_t dim = basis.size();
  std::vector<int> digits(dim, 0);
  std::size_t total = 1;
  for (std::size_t k = 0; k < dim; ++k) total *= 3;
  for (std::size_t code = 0; code < total; ++code) {
    std::size_t rest = code;
    SparseVec point;
    for (std::size_t k = 0; k < dim; ++k) {
      const int coeff = static_cast<int>(rest % 3);
      rest /= 3;
      axpy(point, Scalar(coeff), basis[k]);
    }
    Intertwiner f = to_map(point);
    if (f.a * f.b - f.c * f.w.coeff(0) != 0) return {f, ""};
  }
  return {std::nullopt, triangular ? "no invertible intertwiner preserves U"
                                   : "no invertible intertwiner"};
}

}  // namespace

IsoResult iso_test(const ExtSpec& A, const ExtSpec& B) {
  validate_delta(A);
  validate_delta(B);
  check_iso_shapes(A, B);
  if (A.U.is_inf()) return iso_inf_fin(A, B);
  return iso_fin_fin(A, B, false);
}

bool replay_intertwiner(const ExtSpec& A, const ExtSpec& B, const Intertwiner& f, std::size_t bound) {
  if (!is_bijective(f, B)) return false;
  if (f.w.shape() != B.U.shape() && !f.w.is_zero()) return false;
  const auto gens = ext_basis(B, bound);
  auto map = [&f](const ExtVector& v) { return apply(f, v); };
  return is_module_map(ExtModule{B}, ExtModule{A}, map,
                       std::span<const ExtVector>(gens.data(), gens.size()))
      .ok();
}

std::optional<Intertwiner> find_equivalence(const ExtSpec& A, const ExtSpec& B) {
  validate_delta(A);
  validate_delta(B);
  check_iso_shapes(A, B);
  if (A.U.is_fin()) return iso_fin_fin(A, B, true).map;
  IsoResult iso = iso_inf_fin(A, B);
  if (!iso.map) return std::nullopt;
  // The forced form f(e_i) = a e_i already maps U onto U'; check it anyway.
  const std::size_t bound = 8;
  for (const auto& e : simple_basis(B.U, bound)) {
    const ExtVector image = apply(*iso.map, ExtVector{e, ModVector(Shape::kFin)});
    if (!image.v.is_zero() || image.u.is_zero()) return std::nullopt;
  }
  return iso.map;
}

bool equivalence_test(const ExtSpec& A, const ExtSpec& B) { return find_equivalence(A, B).has_value(); }

const char* comparison_name(Comparison c) {
  return c == Comparison::kAgrees ? "AGREES" : "DISCREPANCY";
}

std::string case_label(const ExtSpec& spec) {
  if (spec.V.is_inf()) return "i";
  if (spec.U.is_inf()) return "ii";
  return "iii";
}

Classification classify(const ExtSpec& spec) {
  validate_delta(spec);
  Classification out{case_label(spec), "split", split_test(spec), Comparison::kAgrees, spec};
  const bool delta_nonzero = !spec.delta.dx.is_zero() || !spec.delta.dy.is_zero();
  if (out.case_label == "ii" && delta_nonzero) out.claim = "nonsplit";
  if (out.case_label == "iii" && delta_nonzero && spec.U.lambda() == spec.V.lambda()) {
    out.claim = "nonsplit";
  }
  const bool oracle_split = out.oracle.is_split();
  if ((out.claim == "split") != oracle_split) out.comparison = Comparison::kDiscrepancy;

  LinMap dx(spec.V, spec.U);
  if (!oracle_split) {
    dx.set_column(0, ModVector::basis(spec.U.shape(), 0));
  }
  out.canonical = make_spec(spec.U, spec.V, dx);
  return out;
}

}  // namespace bicyclic
