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

#include "bicyclic/serialize.hpp"

#include <sstream>

#include "bicyclic/links.hpp"

namespace bicyclic {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::kParse, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

std::size_t index_from_key(const std::string& key) {
  if (key.empty() || key.find_first_not_of("0123456789") != std::string::npos) {
    bad("basis index \"" + key + "\" is not a natural number");
  }
  return static_cast<std::size_t>(std::stoull(key));
}

Json row_to_json(const SparseVec& row) {
  Json out = Json::object();
  for (const auto& [k, c] : row) out[std::to_string(k)] = to_string(c);
  return out;
}

Json scalars_to_json(const std::vector<Scalar>& v) {
  Json out = Json::array();
  for (const auto& c : v) out.push_back(to_string(c));
  return out;
}

}  // namespace

Json scalar_to_json(const Scalar& c) { return to_string(c); }

Scalar scalar_from_json(const Json& j) {
  if (j.is_string()) return parse_scalar(j.get<std::string>());
  if (j.is_number_integer()) return Scalar(j.get<long>());
  bad("expected a rational as a string \"p/q\" or an integer");
}

Json element_to_json(const Element& a) {
  Json out = Json::array();
  for (const auto& [m, c] : a.terms()) out.push_back({{"i", m.i}, {"j", m.j}, {"c", to_string(c)}});
  return out;
}

Element element_from_json(const Json& j) {
  if (j.is_string()) return parse_element(j.get<std::string>());
  if (!j.is_array()) bad("element must be a string or an array of terms");
  Element a;
  for (const auto& t : j) {
    const Json& i = field(t, "i");
    const Json& jj = field(t, "j");
    if (!i.is_number_unsigned() || !jj.is_number_unsigned()) bad("exponents must be natural numbers");
    a.add_term({i.get<std::uint32_t>(), jj.get<std::uint32_t>()}, scalar_from_json(field(t, "c")));
  }
  return a;
}

Json desc_to_json(const SimpleDesc& d) {
  if (d.is_inf()) return {{"type", "inf"}};
  return {{"type", "fin"}, {"lambda", to_string(d.lambda())}};
}

SimpleDesc desc_from_json(const Json& j) {
  const Json& type = field(j, "type");
  if (type == "inf") return SimpleDesc::inf();
  if (type == "fin") return SimpleDesc::fin(scalar_from_json(field(j, "lambda")));
  bad("module type must be \"fin\" or \"inf\"");
}

Json vector_to_json(const ModVector& v) {
  if (v.shape() == Shape::kFin) return {{"d", to_string(v.coeff(0))}};
  Json coords = Json::object();
  for (const auto& [n, c] : v.coords()) coords[std::to_string(n)] = to_string(c);
  return {{"coords", coords}};
}

ModVector vector_from_json(const Json& j, Shape shape) {
  if (shape == Shape::kFin) {
    if (j.is_object() && j.contains("coords")) bad("a k_lambda vector is written {\"d\": c}");
    return ModVector::fin(scalar_from_json(field(j, "d")));
  }
  if (j.is_object() && j.contains("d")) bad("a k[x] vector is written {\"coords\": {...}}");
  const Json& coords = field(j, "coords");
  if (!coords.is_object()) bad("\"coords\" must be an object");
  ModVector v(Shape::kInf);
  for (const auto& [key, c] : coords.items()) v.add(index_from_key(key), scalar_from_json(c));
  return v;
}

Json linmap_to_json(const LinMap& m) {
  Json cols = Json::object();
  for (const auto& [n, image] : m.columns()) cols[std::to_string(n)] = vector_to_json(image);
  return {{"columns", cols}};
}

LinMap linmap_from_json(const Json& j, const SimpleDesc& source, const SimpleDesc& target) {
  LinMap m(source, target);
  if (source.is_fin() && !(j.is_object() && j.contains("columns"))) {
    m.set_column(0, vector_from_json(j, target.shape()));
    return m;
  }
  const Json& cols = field(j, "columns");
  if (!cols.is_object()) bad("\"columns\" must be an object");
  for (const auto& [key, image] : cols.items()) {
    m.set_column(index_from_key(key), vector_from_json(image, target.shape()));
  }
  return m;
}

Json spec_to_json(const ExtSpec& spec) {
  return {{"U", desc_to_json(spec.U)},
          {"V", desc_to_json(spec.V)},
          {"delta_x", linmap_to_json(spec.delta.dx)},
          {"delta_y", linmap_to_json(spec.delta.dy)}};
}

ExtSpec spec_from_json(const Json& j) {
  try {
    const SimpleDesc U = desc_from_json(field(j, "U"));
    const SimpleDesc V = desc_from_json(field(j, "V"));
    const LinMap dx = linmap_from_json(field(j, "delta_x"), V, U);
    if (j.contains("delta_y")) {
      if (j.contains("free_part")) bad("give either delta_y or free_part, not both");
      return ExtSpec{U, V, DeltaMap{dx, linmap_from_json(j.at("delta_y"), V, U)}};
    }
    std::optional<ModVector> free_part;
    if (j.contains("free_part")) free_part = vector_from_json(j.at("free_part"), U.shape());
    return make_spec(U, V, dx, free_part);
  } catch (const nlohmann::json::exception& e) {
    bad(e.what());
  }
}

Json ext_vector_to_json(const ExtVector& v) {
  return {{"u", vector_to_json(v.u)}, {"v", vector_to_json(v.v)}};
}

Json split_to_json(const ExtSpec& spec, const SplitResult& r) {
  Json cert;
  if (const auto* s = std::get_if<SplitCertificate>(&r.outcome)) {
    if (s->witness) {
      cert = {{"kind", "cyclic_witness"}, {"witness", ext_vector_to_json(*s->witness)}};
    } else {
      cert = {{"kind", "section"}, {"correction", vector_to_json(*s->correction)}};
    }
  } else {
    const auto& n = std::get<NonsplitCertificate>(r.outcome);
    Json rows = Json::array();
    for (const auto& row : n.system.rows) rows.push_back(row_to_json(row));
    cert = {{"kind", "inconsistent_section_system"},
            {"residue", to_string(n.residue)},
            {"num_unknowns", n.system.num_unknowns},
            {"rows", rows},
            {"rhs", scalars_to_json(n.system.rhs)},
            {"multipliers", scalars_to_json(n.multipliers)}};
  }
  return {{"verdict", r.is_split() ? "split" : "nonsplit"},
          {"certificate", cert},
          {"replayed", replay_split_certificate(spec, r)}};
}

Json intertwiner_to_json(const Intertwiner& f) {
  return {{"a", to_string(f.a)}, {"b", to_string(f.b)}, {"c", to_string(f.c)}, {"w", vector_to_json(f.w)}};
}

Json iso_to_json(const ExtSpec& A, const ExtSpec& B, const IsoResult& r) {
  Json out = {{"isomorphic", r.is_iso()}};
  if (r.map) {
    out["map"] = intertwiner_to_json(*r.map);
    out["replayed"] = replay_intertwiner(A, B, *r.map);
  } else {
    out["reason"] = r.reason;
  }
  return out;
}

Json classification_to_json(const ExtSpec& spec, const Classification& c) {
  const Json split = split_to_json(spec, c.oracle);
  const char* verdict = c.oracle.is_split() ? "split" : "nonsplit";
  return {{"case", c.case_label},
          {"claim", c.claim},
          {"oracle", verdict},
          {"oracle_verdict", verdict},
          {"comparison", comparison_name(c.comparison)},
          {"certificate", split.at("certificate")},
          {"replayed", split.at("replayed")},
          {"canonical", spec_to_json(c.canonical)}};
}

Json error_to_json(const Error& e) {
  Json out = {{"error", error_code_name(e.code())}, {"message", e.what()}};
  if (const auto* d = dynamic_cast<const IncompatibleDelta*>(&e)) {
    out["basis_index"] = d->basis_index();
    out["residual"] = vector_to_json(d->residual());
  }
  if (const auto* p = dynamic_cast<const ParseError*>(&e)) out["position"] = p->position();
  return out;
}

Json slice_to_json(const DegreeSlice& s) {
  Json basis = Json::array();
  for (const auto& b : s.basis) basis.push_back(to_string(b));
  return {{"D", s.D}, {"slack", s.slack}, {"dim", s.dim()}, {"basis", basis}};
}

Json link_to_json(const LinkResult& r) {
  Json quotient = Json::array();
  for (const auto& q : r.quotient) quotient.push_back(to_string(q));
  return {{"P", to_string(r.P)},
          {"Q", to_string(r.Q)},
          {"D", r.D},
          {"intersection_dim", r.intersection_dim},
          {"product_dim", r.product_dim},
          {"quotient", quotient},
          {"torsionfree", r.torsionfree},
          {"linked", r.linked}};
}

Json graph_to_json(const LinkGraph& g) {
  Json vertices = Json::array();
  for (const auto& v : g.vertices) vertices.push_back(to_string(v));
  Json edges = Json::array();
  for (const auto& e : g.edges) {
    edges.push_back({{"from", to_string(e.P)}, {"to", to_string(e.Q)}, {"certificate", link_to_json(e)}});
  }
  return {{"vertices", vertices}, {"edges", edges}};
}

std::string graph_to_dot(const LinkGraph& g) {
  std::ostringstream os;
  os << "digraph links {\n";
  for (const auto& v : g.vertices) os << "  \"" << to_string(v) << "\";\n";
  for (const auto& e : g.edges) {
    os << "  \"" << to_string(e.P) << "\" -> \"" << to_string(e.Q) << "\" [label=\"dim "
       << e.quotient.size() << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

Json entry_to_json(const ClaimEntry& e) {
  return {{"id", e.id},
          {"statement", e.statement},
          {"verdict", verdict_name(e.verdict)},
          {"scope", e.scope},
          {"certificate", e.certificate}};
}

}  // namespace bicyclic
