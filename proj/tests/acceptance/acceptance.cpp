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

// Acceptance criteria 1-10. Prints one PASS/FAIL line per criterion; with a
// criterion number as argument only that one runs. Exit code 0 iff every
// selected criterion passes.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "bicyclic/links.hpp"
#include "bicyclic/sample.hpp"
#include "bicyclic/serialize.hpp"

#ifndef BICYCLIC_CLI_PATH
#error "BICYCLIC_CLI_PATH must name the CLI executable"
#endif

using namespace bicyclic;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

std::vector<Element> monomials(unsigned max_exponent) {
  std::vector<Element> out;
  for (unsigned i = 0; i <= max_exponent; ++i) {
    for (unsigned j = 0; j <= max_exponent; ++j) out.push_back(Element::monomial({i, j}));
  }
  return out;
}

ModVector e(std::size_t n, const Scalar& c = 1) {
  ModVector v(Shape::kInf);
  v.add(n, c);
  return v;
}

ExtSpec inf_fin(const Scalar& lambda, const ModVector& dx) {
  const auto U = SimpleDesc::inf(), V = SimpleDesc::fin(lambda);
  return make_spec(U, V, LinMap(V, U, {{0, dx}}));
}

ExtSpec fin_fin(const Scalar& mu, const Scalar& lambda, const Scalar& c) {
  const auto U = SimpleDesc::fin(mu), V = SimpleDesc::fin(lambda);
  LinMap dx(V, U);
  if (c != 0) dx.set_column(0, ModVector::fin(c));
  return make_spec(U, V, dx);
}

const std::vector<Scalar>& grid_lambdas() {
  static const std::vector<Scalar> v = {1, 2, -1, Scalar(1, 2)};
  return v;
}

std::string trim_separator(std::string s) {
  while (s.size() >= 2 && s.compare(s.size() - 2, 2, "; ") == 0) s.resize(s.size() - 2);
  return s;
}

Outcome monomial_arithmetic() {
  Outcome o;
  const Element x = Element::x(), y = Element::y(), f = 1 - x * y;
  o.require(mul(y, x) == Element(1), "y*x != 1");
  o.require(mul(y, f).is_zero(), "y*(1 - x*y) != 0");
  o.require(mul(f, x).is_zero(), "(1 - x*y)*x != 0");
  const auto ms = monomials(4);
  std::size_t cases = 0;
  for (const auto& a : ms) {
    for (const auto& b : ms) {
      const Element ab = mul(a, b);
      for (const auto& c : ms) {
        ++cases;
        if (mul(ab, c) != mul(a, mul(b, c))) {
          o.require(false, "associativity fails at " + to_string(a) + ", " + to_string(b) + ", " + to_string(c));
          return o;
        }
      }
    }
  }
  o.detail = std::to_string(cases) + " monomial triples associative";
  return o;
}

Outcome matrix_units() {
  Outcome o;
  std::size_t cases = 0;
  for (unsigned i = 0; i <= 5; ++i) {
    for (unsigned j = 0; j <= 5; ++j) {
      for (unsigned k = 0; k <= 5; ++k) {
        for (unsigned l = 0; l <= 5; ++l) {
          ++cases;
          const Element expected = j == k ? matrix_unit(i, l) : Element();
          o.require(mul(matrix_unit(i, j), matrix_unit(k, l)) == expected,
                    "M_" + std::to_string(i) + std::to_string(j) + "*M_" + std::to_string(k) +
                        std::to_string(l));
        }
      }
    }
  }
  if (o.ok) o.detail = std::to_string(cases) + " products";
  return o;
}

Outcome representation() {
  Outcome o;
  const std::size_t n = 16;
  const auto ms = monomials(4);
  std::size_t pairs = 0;
  for (const auto& a : ms) {
    const TruncMatrix ma = to_matrix(a, n);
    for (const auto& b : ms) {
      ++pairs;
      const auto d = static_cast<std::size_t>(a.degree() + b.degree());
      const std::size_t k = d >= n ? 0 : n - d;
      o.require(to_matrix(mul(a, b), n).block(k) == (ma * to_matrix(b, n)).block(k),
                "border contract fails for " + to_string(a) + ", " + to_string(b));
    }
  }
  std::size_t actions = 0;
  for (const auto& m : monomials_up_to(6)) {
    const Element a = Element::monomial(m);
    for (unsigned p = 0; p <= 10; ++p) {
      ++actions;
      const ModVector image = act(SimpleDesc::inf(), a, e(p));
      Polynomial expected;
      for (const auto& [idx, c] : image.coords()) expected += Polynomial::monomial(static_cast<unsigned>(idx), c);
      o.require(diffop_action(a, Polynomial::monomial(p)) == expected,
                "diffop disagrees with the shift action for " + to_string(a) + " on x^" + std::to_string(p));
    }
  }
  if (o.ok) o.detail = std::to_string(pairs) + " border pairs at n = 16, " + std::to_string(actions) + " diffop actions";
  return o;
}

Outcome case_i_witnesses() {
  Outcome o;
  Sampler s(41);
  std::size_t count = 0;
  for (Shape u : {Shape::kFin, Shape::kInf}) {
    for (int k = 0; k < 25; ++k) {
      const ExtSpec spec = s.spec(u, Shape::kInf);
      const SplitResult r = split_test(spec);
      ++count;
      o.require(r.is_split(), "nonsplit result for V = k[x]: " + spec_to_json(spec).dump());
      if (!r.is_split()) continue;
      const auto& cert = std::get<SplitCertificate>(r.outcome);
      o.require(cert.witness.has_value(), "split without a cyclic witness");
      if (!cert.witness) continue;
      o.require(ext_act(spec, Element::y(), *cert.witness).is_zero(), "y*a != 0");
      o.require(replay_split_certificate(spec, r), "section check fails: " + spec_to_json(spec).dump());
    }
  }
  if (o.ok) o.detail = std::to_string(count) + " specs split with y*a = 0";
  return o;
}

Outcome fin_fin_grid() {
  Outcome o;
  std::size_t specs = 0;
  for (const Scalar& mu : grid_lambdas()) {
    for (const Scalar& lambda : grid_lambdas()) {
      for (int c : {0, 1, 5}) {
        ++specs;
        const ExtSpec spec = fin_fin(mu, lambda, c);
        const SplitResult r = split_test(spec);
        const bool expect_split = mu != lambda || c == 0;
        o.require(r.is_split() == expect_split, "wrong split verdict for " + spec_to_json(spec).dump());
        o.require(replay_split_certificate(spec, r), "certificate does not replay");
      }
    }
  }
  std::vector<ExtSpec> nonsplit;
  for (const Scalar& lambda : grid_lambdas()) {
    for (int c : {1, 5}) nonsplit.push_back(fin_fin(lambda, lambda, c));
  }
  std::size_t pairs = 0;
  for (const auto& a : nonsplit) {
    for (const auto& b : nonsplit) {
      ++pairs;
      const bool same = a.V.lambda() == b.V.lambda();
      o.require(equivalence_test(a, b) == same, "equivalence mismatch for " + spec_to_json(a).dump() + " vs " +
                                                    spec_to_json(b).dump());
      if (same) {
        const auto f = find_equivalence(a, b);
        o.require(f.has_value() && replay_intertwiner(a, b, *f), "equivalence does not replay");
      }
    }
  }
  if (o.ok) o.detail = std::to_string(specs) + " specs, " + std::to_string(pairs) + " nonsplit pairs";
  return o;
}

Outcome oracle_consistency() {
  Outcome o;
  Sampler s(43);
  std::size_t replays = 0;
  for (Shape u : {Shape::kFin, Shape::kInf}) {
    for (Shape v : {Shape::kFin, Shape::kInf}) {
      for (int k = 0; k < 15; ++k) {
        const ExtSpec spec = s.spec(u, v);
        const SplitResult r = split_test(spec);
        ++replays;
        o.require(replay_split_certificate(spec, r), "certificate does not replay: " + spec_to_json(spec).dump());
      }
    }
  }

  // Pool: 14 extensions of k_lambda by k[x], 6 of k_lambda by k_mu.
  std::vector<ExtSpec> pool;
  for (const Scalar& lambda : {Scalar(1), Scalar(2)}) {
    for (const ModVector& dx : {ModVector(Shape::kInf), e(0), e(0, 2), e(1), e(1) - lambda * e(0),
                                e(2) + e(0), e(0) + e(1) + e(2)}) {
      pool.push_back(inf_fin(lambda, dx));
    }
  }
  pool.push_back(fin_fin(1, 1, 0));
  pool.push_back(fin_fin(1, 1, 1));
  pool.push_back(fin_fin(1, 1, 5));
  pool.push_back(fin_fin(1, 2, 1));
  pool.push_back(fin_fin(2, 1, 0));
  pool.push_back(fin_fin(2, 2, 3));

  const std::size_t n = pool.size();
  std::vector<std::vector<bool>> iso(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      // Extensions of different shapes have different dimensions.
      if (pool[i].U.shape() != pool[j].U.shape()) continue;
      const IsoResult r = iso_test(pool[i], pool[j]);
      iso[i][j] = r.is_iso();
      if (r.map) o.require(replay_intertwiner(pool[i], pool[j], *r.map), "intertwiner does not replay");
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    o.require(iso[i][i], "iso_test is not reflexive");
    for (std::size_t j = 0; j < n; ++j) {
      o.require(iso[i][j] == iso[j][i], "iso_test is not symmetric");
      for (std::size_t k = 0; k < n; ++k) {
        if (iso[i][j] && iso[j][k]) o.require(iso[i][k], "iso_test is not transitive");
      }
    }
  }

  // Coboundary probe: delta(x) = (alpha(x) - lambda)(e_0) = e_1 - lambda e_0.
  const Scalar lambda = 1;
  const ExtSpec probe = inf_fin(lambda, e(1) - lambda * e(0));
  const SplitResult decided = split_test(probe);
  const bool claim_nonsplit = true;  // delta != 0
  const Comparison cmp = decided.is_split() == !claim_nonsplit ? Comparison::kAgrees : Comparison::kDiscrepancy;
  o.require(replay_split_certificate(probe, decided), "probe certificate does not replay");
  const Json cert = split_to_json(probe, decided);
  o.require(cert["replayed"] == true, "probe certificate not marked replayed");

  std::ostringstream os;
  os << replays << " certificates replay; iso is an equivalence relation on " << n
     << " specs; coboundary probe: oracle " << cert["verdict"].get<std::string>() << ", claim nonsplit -> "
     << comparison_name(cmp) << " (certificate " << cert["certificate"].dump() << ")";
  if (o.ok) o.detail = os.str();
  return o;
}

Outcome prime_chain() {
  Outcome o;
  const unsigned D = 6, cap = 6;
  const std::pair<Scalar, Scalar> pairs[] = {{1, 2}, {-1, Scalar(1, 2)}, {2, -1}};
  std::ostringstream failures;
  for (const auto& [l1, l2] : pairs) {
    const PrimeIdentities ids = prime_identities(l1, l2, D, cap);
    for (const auto& link : ids.links) {
      if (link.equal) continue;
      o.ok = false;
      failures << "[lambda = " << to_string(l1) << ", lambda' = " << to_string(l2) << "] " << link.lhs
               << " != " << link.rhs;
      if (link.separator) failures << " (separator " << to_string(*link.separator) << ")";
      failures << "; ";
    }
  }

  const LinkGraph g = link_graph(grid_lambdas(), D, cap);
  bool figure = g.edges.size() == grid_lambdas().size();
  for (const auto& edge : g.edges) {
    figure = figure && edge.P == edge.Q && edge.P.kind() == PrimeId::Kind::kP && replay_link(edge, cap);
  }
  if (!figure) {
    o.ok = false;
    failures << "link graph differs from self-loops at each P(lambda): " << graph_to_json(g).dump() << "; ";
  }
  o.detail = o.ok ? "all chain equalities hold and the link graph has self-loops at P(lambda) only"
                  : trim_separator(failures.str() + (figure ? "link graph: self-loops at P(lambda) only" : ""));
  return o;
}

Outcome jategaonkar() {
  Outcome o;
  const unsigned D = 6, cap = 6;
  const std::pair<const char*, ExtSpec> cases[] = {{"case ii", inf_fin(1, e(0))}, {"case iii", fin_fin(1, 1, 1)}};
  std::ostringstream os;
  for (const auto& [name, spec] : cases) {
    const JategaonkarResult r = jategaonkar_check(spec, D, cap);
    os << name << ": P = " << to_string(r.P) << ", Q = " << to_string(r.Q) << ", order "
       << slice_order_name(r.order) << ", alt(i) " << (r.alt_i ? "holds" : "fails") << ", alt(ii) "
       << (r.alt_ii ? "holds" : "fails");
    if (r.alt_ii) {
      os << " (dim (P∩Q)/PQ = " << r.link.quotient.size() << ", representative "
         << to_string(r.link.quotient.front()) << ")";
    }
    os << "; ";
    o.ok = o.ok && r.annihilators_match && !r.alt_i && !r.alt_ii;
  }
  o.detail = trim_separator(os.str());
  return o;
}

Outcome non_noetherian() {
  Outcome o;
  std::vector<DegreeSlice> chain;
  for (unsigned n = 1; n <= 4; ++n) chain.push_back(left_annihilator(power(Element::x(), n), 8));
  std::ostringstream dims;
  for (std::size_t k = 0; k < chain.size(); ++k) {
    dims << (k ? ", " : "") << chain[k].dim();
    if (k > 0) o.require(slice_compare(chain[k - 1], chain[k]) == SliceOrder::kLess, "lann chain does not ascend");
  }

  Sampler s(47);
  for (int k = 0; k < 100; ++k) {
    const Element r = s.nonzero_element(5);
    const EssentialWitness w = essential_check(r);
    const Element sandwich = matrix_unit(0, static_cast<unsigned>(w.p)) * r * matrix_unit(static_cast<unsigned>(w.q), 0);
    o.require(w.entry != 0 && sandwich == w.sandwich && sandwich == w.entry * matrix_unit(0, 0),
              "essential witness fails for " + to_string(r));
  }
  if (o.ok) o.detail = "lann(x^n) dims at D = 8: " + dims.str() + "; 100 essential witnesses";
  return o;
}

struct Run {
  int status = -1;
  std::string out;
};

Run run_cli(const std::string& args) {
  Run r;
  const std::string cmd = std::string("\"") + BICYCLIC_CLI_PATH + "\" " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int st = pclose(pipe);
  r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

Outcome end_to_end() {
  Outcome o;
  const Run a = run_cli("verify");
  const Run b = run_cli("verify");
  o.require(a.status == 0, "verify exit code " + std::to_string(a.status));
  o.require(b.status == 0, "verify exit code " + std::to_string(b.status));
  o.require(!a.out.empty() && a.out == b.out, "reports differ between runs");
  if (o.ok) {
    const Json j = Json::parse(a.out);
    o.detail = "two runs, exit 0, byte-identical reports (" + std::to_string(a.out.size()) + " bytes, " +
               j["summary"].dump() + ")";
  }
  return o;
}

struct Criterion {
  int number;
  double limit_seconds;
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria = {
      {1, 5, monomial_arithmetic}, {2, 2, matrix_units},        {3, 5, representation},
      {4, 5, case_i_witnesses},    {5, 2, fin_fin_grid},        {6, 5, oracle_consistency},
      {7, 30, prime_chain},        {8, 10, jategaonkar},        {9, 10, non_noetherian},
      {10, 60, end_to_end},
  };
  int only = 0;
  if (argc > 1) {
    only = std::atoi(argv[1]);
    if (only < 1 || only > 10) {
      std::cerr << "usage: " << argv[0] << " [criterion 1-10]\n";
      return 2;
    }
  }

  bool all = true;
  for (const auto& c : criteria) {
    if (only && c.number != only) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds >= c.limit_seconds) {
      o.ok = false;
      o.detail += " [time limit exceeded]";
    }
    char timing[64];
    std::snprintf(timing, sizeof timing, " [%.2f s, limit %.0f s]", seconds, c.limit_seconds);
    std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << c.number << ": " << o.detail << timing << "\n";
    all = all && o.ok;
  }
  return all ? 0 : 1;
}
