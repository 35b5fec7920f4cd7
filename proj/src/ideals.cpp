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

#include "bicyclic/ideals.hpp"

#include <deque>
#include <functional>
#include <stdexcept>

#include "bicyclic/error.hpp"

namespace bicyclic {

WindowIndex::WindowIndex(unsigned max_degree)
    : max_degree_(max_degree),
      size_(static_cast<std::size_t>(max_degree + 1) * (max_degree + 2) / 2) {}

std::size_t WindowIndex::offset(unsigned degree) const {
  std::size_t total = 0;
  for (unsigned e = degree + 1; e <= max_degree_; ++e) total += e + 1;
  return total;
}

std::size_t WindowIndex::position(Monomial m) const {
  if (m.degree() > max_degree_) {
    throw Error(ErrorCode::kWindowMismatch, "monomial outside the degree window");
  }
  return offset(m.degree()) + m.j;
}

Monomial WindowIndex::monomial(std::size_t position) const {
  for (unsigned d = max_degree_ + 1; d-- > 0;) {
    if (position <= d) return {d - static_cast<std::uint32_t>(position), static_cast<std::uint32_t>(position)};
    position -= d + 1;
  }
  throw Error(ErrorCode::kWindowMismatch, "coordinate outside the degree window");
}

SparseVec WindowIndex::coords(const Element& a) const {
  SparseVec v;
  for (const auto& [m, c] : a.terms()) v.emplace(position(m), c);
  return v;
}

Element WindowIndex::element(const SparseVec& v) const {
  Element a;
  for (const auto& [k, c] : v) a.add_term(monomial(k), c);
  return a;
}

namespace {

Echelon echelon_of(const DegreeSlice& s, const WindowIndex& idx) {
  Echelon e;
  for (const auto& b : s.basis) e.insert(idx.coords(b));
  return e;
}

void check_window(const DegreeSlice& a, const DegreeSlice& b) {
  if (a.D != b.D) {
    throw Error(ErrorCode::kWindowMismatch, "slices over windows " + std::to_string(a.D) + " and " +
                                                std::to_string(b.D));
  }
}

DegreeSlice from_kernel(unsigned D, const std::vector<SparseVec>& equations) {
  const WindowIndex idx(D);
  std::vector<Element> elems;
  for (const auto& v : kernel(equations, idx.size())) elems.push_back(idx.element(v));
  return make_slice(D, std::move(elems));
}

// Two-sided closure inside the window W, cut down to degree <= D.
DegreeSlice closure(const std::vector<Element>& seeds, unsigned D, unsigned W, unsigned slack) {
  const WindowIndex idx(W);
  Echelon e;
  std::deque<Element> work;
  auto offer = [&](const Element& a) {
    if (a.is_zero() || a.degree() > static_cast<int>(W)) return;
    if (e.insert(idx.coords(a))) work.push_back(a);
  };
  for (const auto& g : seeds) offer(g);
  const Element x = Element::x();
  const Element y = Element::y();
  while (!work.empty()) {
    const Element a = std::move(work.front());
    work.pop_front();
    offer(x * a);
    offer(a * x);
    offer(y * a);
    offer(a * y);
  }
  std::vector<Element> low;
  for (const auto& row : e.rows()) {
    if (idx.monomial(row.begin()->first).degree() <= D) low.push_back(idx.element(row));
  }
  return make_slice(D, std::move(low), slack);
}

DegreeSlice stabilize(const std::function<DegreeSlice(unsigned)>& at, unsigned D, unsigned cap,
                      const std::string& what) {
  std::vector<DegreeSlice> cache;
  auto get = [&](unsigned s) -> const DegreeSlice& {
    while (cache.size() <= s) cache.push_back(at(static_cast<unsigned>(cache.size())));
    return cache[s];
  };
  for (unsigned s = 0; s + 2 <= cap; ++s) {
    if (get(s) == get(s + 2)) return get(s);
  }
  throw Error(ErrorCode::kStabilizationFailure,
              what + " did not stabilize at D = " + std::to_string(D) + " with slack cap " + std::to_string(cap));
}

}  // namespace

bool DegreeSlice::contains(const Element& a) const {
  if (a.degree() > static_cast<int>(D)) return false;
  const WindowIndex idx(D);
  return echelon_of(*this, idx).contains(idx.coords(a));
}

DegreeSlice make_slice(unsigned D, std::vector<Element> elements, unsigned slack) {
  const WindowIndex idx(D);
  Echelon e;
  for (const auto& a : elements) e.insert(idx.coords(a));
  DegreeSlice out;
  out.D = D;
  out.slack = slack;
  for (const auto& row : e.rows()) out.basis.push_back(idx.element(row));
  return out;
}

DegreeSlice ideal_slice(const IdealGens& gens, unsigned D, unsigned s) {
  return closure(gens.gens, D, D + s, s);
}

DegreeSlice product_slice(const IdealGens& I, const IdealGens& J, unsigned D, unsigned s) {
  const unsigned W = D + s;
  const auto monomials = monomials_up_to(W);
  std::vector<Element> seeds;
  for (const auto& g : I.gens) {
    for (const auto& m : monomials) {
      const Element gm = g * Element::monomial(m);
      for (const auto& h : J.gens) {
        Element p = gm * h;
        if (!p.is_zero() && p.degree() <= static_cast<int>(W)) seeds.push_back(std::move(p));
      }
    }
  }
  return closure(seeds, D, W, s);
}

DegreeSlice stable_ideal_slice(const IdealGens& gens, unsigned D, unsigned cap) {
  return stabilize([&](unsigned s) { return ideal_slice(gens, D, s); }, D, cap, "ideal slice");
}

DegreeSlice stable_product_slice(const IdealGens& I, const IdealGens& J, unsigned D, unsigned cap) {
  return stabilize([&](unsigned s) { return product_slice(I, J, D, s); }, D, cap, "product slice");
}

const char* slice_order_name(SliceOrder o) {
  switch (o) {
    case SliceOrder::kEqual: return "equal";
    case SliceOrder::kLess: return "less";
    case SliceOrder::kGreater: return "greater";
    case SliceOrder::kIncomparable: return "incomparable";
  }
  return "?";
}

SliceOrder slice_compare(const DegreeSlice& a, const DegreeSlice& b) {
  check_window(a, b);
  const bool a_in_b = !separating_element(a, b);
  const bool b_in_a = !separating_element(b, a);
  if (a_in_b && b_in_a) return SliceOrder::kEqual;
  if (a_in_b) return SliceOrder::kLess;
  if (b_in_a) return SliceOrder::kGreater;
  return SliceOrder::kIncomparable;
}

std::optional<Element> separating_element(const DegreeSlice& a, const DegreeSlice& b) {
  check_window(a, b);
  const WindowIndex idx(a.D);
  const Echelon eb = echelon_of(b, idx);
  for (const auto& v : a.basis) {
    if (!eb.contains(idx.coords(v))) return v;
  }
  return std::nullopt;
}

DegreeSlice intersect(const DegreeSlice& a, const DegreeSlice& b) {
  check_window(a, b);
  const WindowIndex idx(a.D);
  const std::size_t na = a.dim();
  // sum_k u_k a_k - sum_l u_(na+l) b_l = 0, coordinate by coordinate.
  std::map<std::size_t, SparseVec> by_coord;
  for (std::size_t k = 0; k < na; ++k) {
    for (const auto& [c, v] : idx.coords(a.basis[k])) by_coord[c].emplace(k, v);
  }
  for (std::size_t l = 0; l < b.dim(); ++l) {
    for (const auto& [c, v] : idx.coords(b.basis[l])) by_coord[c].emplace(na + l, Scalar(-v));
  }
  std::vector<SparseVec> equations;
  for (auto& [c, row] : by_coord) equations.push_back(std::move(row));
  std::vector<Element> elems;
  for (const auto& u : kernel(equations, na + b.dim())) {
    Element e;
    for (const auto& [k, c] : u) {
      if (k < na) e += c * a.basis[k];
    }
    elems.push_back(std::move(e));
  }
  return make_slice(a.D, std::move(elems), std::max(a.slack, b.slack));
}

std::string to_string(const IdealClass& c) {
  switch (c.kind) {
    case IdealClass::Kind::kZero: return "0";
    case IdealClass::Kind::kWholeRing: return "R";
    case IdealClass::Kind::kF: return "<1 - x*y>";
    case IdealClass::Kind::kPair: return "<1 - x*y, " + to_string(c.f) + ">";
  }
  return "?";
}

IdealClass ideal_classify(const IdealGens& gens) {
  bool nonzero = false;
  Polynomial g;
  for (const auto& a : gens.gens) {
    if (a.is_zero()) continue;
    nonzero = true;
    g = gcd(g, laurent_image(a).unit_normalized());
  }
  IdealClass out;
  if (!nonzero) return out;
  if (g.is_zero()) {
    out.kind = IdealClass::Kind::kF;
  } else if (g.degree() == 0) {
    out.kind = IdealClass::Kind::kWholeRing;
  } else {
    out.kind = IdealClass::Kind::kPair;
    out.f = g.monic();
  }
  return out;
}

DegreeSlice annihilator(const SimpleDesc& desc, unsigned D) {
  const WindowIndex idx(D);
  std::vector<SparseVec> equations;
  if (desc.is_fin()) {
    SparseVec row;
    for (const auto& m : monomials_up_to(D)) {
      row.emplace(idx.position(m), power(desc.lambda(), static_cast<long>(m.i) - static_cast<long>(m.j)));
    }
    equations.push_back(std::move(row));
  } else {
    // Coefficient of b_k in r b_n, for n = 0..D.
    std::map<std::pair<std::size_t, std::size_t>, SparseVec> rows;
    for (std::size_t n = 0; n <= D; ++n) {
      for (const auto& m : monomials_up_to(D)) {
        if (m.j > n) continue;
        rows[{n, n - m.j + m.i}].emplace(idx.position(m), Scalar(1));
      }
    }
    for (auto& [key, row] : rows) equations.push_back(std::move(row));
  }
  return from_kernel(D, equations);
}

DegreeSlice left_annihilator(const Element& s, unsigned D) {
  const WindowIndex idx(D);
  std::map<Monomial, SparseVec> rows;
  for (const auto& m : monomials_up_to(D)) {
    const Element ms = Element::monomial(m) * s;
    for (const auto& [out, c] : ms.terms()) rows[out].emplace(idx.position(m), c);
  }
  std::vector<SparseVec> equations;
  for (auto& [key, row] : rows) equations.push_back(std::move(row));
  return from_kernel(D, equations);
}

ClaimEntry lann_chain_check(unsigned n_max, unsigned D) {
  ClaimEntry entry;
  entry.id = "ideal.lann_chain";
  entry.statement = "lann(x) < lann(x^2) < ... strictly, and (1 - x*y)*x = 0";
  entry.scope = "window-verified";
  std::vector<DegreeSlice> chain;
  for (unsigned n = 0; n <= n_max; ++n) {
    chain.push_back(left_annihilator(power(Element::x(), n), D));
  }
  bool ok = chain[0].dim() == 0 && chain.size() > 1 && chain[1].contains(1 - Element::x() * Element::y());
  nlohmann::json dims = nlohmann::json::array();
  nlohmann::json steps = nlohmann::json::array();
  for (unsigned n = 0; n <= n_max; ++n) dims.push_back(chain[n].dim());
  for (unsigned n = 0; n < n_max; ++n) {
    const SliceOrder order = slice_compare(chain[n], chain[n + 1]);
    const auto witness = separating_element(chain[n + 1], chain[n]);
    bool step_ok = order == SliceOrder::kLess && witness.has_value();
    nlohmann::json step = {{"n", n + 1}, {"order", slice_order_name(order)}};
    if (witness) {
      const Element xn = power(Element::x(), n);
      step_ok = step_ok && (*witness * Element::x() * xn).is_zero() && !(*witness * xn).is_zero();
      step["new_element"] = to_string(*witness);
    }
    ok = ok && step_ok;
    steps.push_back(std::move(step));
  }
  entry.verdict = ok ? Verdict::kPass : Verdict::kFail;
  entry.certificate = {{"D", D}, {"dims", dims}, {"steps", steps}};
  return entry;
}

EssentialWitness essential_check(const Element& r) {
  if (r.is_zero()) throw Error(ErrorCode::kZeroElement, "essential_check needs a nonzero element");
  const std::size_t n = static_cast<std::size_t>(r.degree()) + 2;
  const TruncMatrix m = to_matrix(r, n);
  for (std::size_t q = 0; q < n; ++q) {
    for (std::size_t p = 0; p < n; ++p) {
      if (m(p, q) == 0) continue;
      EssentialWitness w{p, q, m(p, q),
                         matrix_unit(0, static_cast<unsigned>(p)) * r * matrix_unit(static_cast<unsigned>(q), 0)};
      if (!(w.sandwich == w.entry * matrix_unit(0, 0))) {
        throw std::logic_error("sandwich identity failed for " + to_string(r));
      }
      return w;
    }
  }
  throw std::logic_error("nonzero element with zero truncated matrix: " + to_string(r));
}

PrimeId PrimeId::p(const Scalar& lambda) {
  if (lambda == 0) throw Error(ErrorCode::kInvalidArgument, "P(lambda) needs lambda != 0");
  return PrimeId(Kind::kP, lambda);
}

const Scalar& PrimeId::lambda() const {
  if (kind_ != Kind::kP) throw Error(ErrorCode::kShapeMismatch, "only P(lambda) carries a lambda");
  return lambda_;
}

IdealGens PrimeId::gens() const {
  const Element f = 1 - Element::x() * Element::y();
  switch (kind_) {
    case Kind::kZero: return {};
    case Kind::kF: return {{f}};
    case Kind::kP: return {{f, Element::x() - Element(lambda_)}};
  }
  return {};
}

bool operator<(const PrimeId& a, const PrimeId& b) {
  if (a.kind_ != b.kind_) return a.kind_ < b.kind_;
  return a.lambda_ < b.lambda_;
}

std::string to_string(const PrimeId& p) {
  switch (p.kind()) {
    case PrimeId::Kind::kZero: return "(0)";
    case PrimeId::Kind::kF: return "F";
    case PrimeId::Kind::kP: return "P(" + to_string(p.lambda()) + ")";
  }
  return "?";
}

DegreeSlice prime_slice(const PrimeId& p, unsigned D, unsigned cap) {
  if (p.kind() == PrimeId::Kind::kZero) return make_slice(D, {});
  return stable_ideal_slice(p.gens(), D, cap);
}

DegreeSlice prime_product_slice(const PrimeId& p, const PrimeId& q, unsigned D, unsigned cap) {
  if (p.kind() == PrimeId::Kind::kZero || q.kind() == PrimeId::Kind::kZero) return make_slice(D, {});
  return stable_product_slice(p.gens(), q.gens(), D, cap);
}

PrimeId annihilator_prime(const SimpleDesc& desc) {
  return desc.is_fin() ? PrimeId::p(desc.lambda()) : PrimeId::zero();
}

bool PrimeIdentities::all_equal() const {
  for (const auto& l : links) {
    if (!l.equal) return false;
  }
  return true;
}

PrimeIdentities prime_identities(const Scalar& lambda, const Scalar& lambda2, unsigned D, unsigned cap) {
  if (lambda == lambda2) throw Error(ErrorCode::kInvalidArgument, "the identities need lambda != lambda'");
  const PrimeId F = PrimeId::f();
  const PrimeId P = PrimeId::p(lambda);
  const PrimeId P2 = PrimeId::p(lambda2);
  const std::string p = to_string(P);
  const std::string p2 = to_string(P2);

  const DegreeSlice sF = prime_slice(F, D, cap);
  const DegreeSlice sP = prime_slice(P, D, cap);
  const DegreeSlice sP2 = prime_slice(P2, D, cap);

  PrimeIdentities out;
  out.names = {"F", "F^2", "F∩" + p, "F" + p, p + "F", p + "∩" + p2, p + p2};
  out.slices = {sF,
                prime_product_slice(F, F, D, cap),
                intersect(sF, sP),
                prime_product_slice(F, P, D, cap),
                prime_product_slice(P, F, D, cap),
                intersect(sP, sP2),
                prime_product_slice(P, P2, D, cap)};
  for (std::size_t k = 0; k + 1 < out.slices.size(); ++k) {
    ChainLink link{out.names[k], out.names[k + 1], out.slices[k] == out.slices[k + 1], std::nullopt};
    if (!link.equal) {
      // Prefer the product of the two generators when it separates.
      const Element candidate = (Element::x() - Element(lambda)) * (Element::x() - Element(lambda2));
      if (out.slices[k].contains(candidate) != out.slices[k + 1].contains(candidate)) link.separator = candidate;
    }
    if (!link.equal && !link.separator) {
      link.separator = separating_element(out.slices[k], out.slices[k + 1]);
      if (!link.separator) link.separator = separating_element(out.slices[k + 1], out.slices[k]);
    }
    out.links.push_back(std::move(link));
  }
  return out;
}

ClaimEntry prime_identities_check(const Scalar& lambda, const Scalar& lambda2, unsigned D, unsigned cap) {
  ClaimEntry entry;
  entry.id = "ideal.prime_identities(" + to_string(lambda) + "," + to_string(lambda2) + ")";
  entry.statement = "F = F^2 = F∩P_λ = FP_λ = P_λF = P_λ∩P_λ' = P_λP_λ'";
  entry.scope = "window-verified";
  const PrimeIdentities chain = prime_identities(lambda, lambda2, D, cap);
  nlohmann::json links = nlohmann::json::array();
  for (std::size_t k = 0; k < chain.links.size(); ++k) {
    const ChainLink& l = chain.links[k];
    nlohmann::json j = {{"lhs", l.lhs},
                        {"rhs", l.rhs},
                        {"lhs_dim", chain.slices[k].dim()},
                        {"rhs_dim", chain.slices[k + 1].dim()},
                        {"equal", l.equal}};
    if (l.separator) {
      j["separator"] = to_string(*l.separator);
      j["separator_laurent_image"] = to_string(laurent_image(*l.separator));
      j["separator_in_lhs"] = chain.slices[k].contains(*l.separator);
      j["separator_in_rhs"] = chain.slices[k + 1].contains(*l.separator);
    }
    links.push_back(std::move(j));
  }
  // The chain splits into F = F^2 = F∩P = FP = PF and P∩P' = PP'.
  bool f_part = true;
  for (std::size_t k = 0; k < 4; ++k) f_part = f_part && chain.links[k].equal;
  entry.verdict = chain.all_equal() ? Verdict::kPass : Verdict::kDiscrepancy;
  entry.certificate = {{"D", D},
                       {"links", links},
                       {"F_chain_holds", f_part},
                       {"P_intersection_equals_product", chain.links[5].equal}};
  return entry;
}

}  // namespace bicyclic
