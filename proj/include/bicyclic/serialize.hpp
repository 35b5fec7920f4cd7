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

#include <string>

#include <json.hpp>

#include "bicyclic/algebra.hpp"
#include "bicyclic/claims.hpp"
#include "bicyclic/error.hpp"
#include "bicyclic/extensions.hpp"
#include "bicyclic/ideals.hpp"
#include "bicyclic/modules.hpp"

namespace bicyclic {

struct LinkResult;
struct LinkGraph;

// Malformed JSON input throws Error(kParse).
using Json = nlohmann::json;

Json scalar_to_json(const Scalar& c);
Scalar scalar_from_json(const Json& j);

// [{"i":i,"j":j,"c":"p/q"}, ...] sorted by (i, j).
Json element_to_json(const Element& a);
// Accepts the array form or a string in the text form.
Element element_from_json(const Json& j);

Json desc_to_json(const SimpleDesc& d);
SimpleDesc desc_from_json(const Json& j);

// {"d":"p/q"} or {"coords":{"n":"p/q",...}}.
Json vector_to_json(const ModVector& v);
ModVector vector_from_json(const Json& j, Shape shape);

// {"columns":{"n":vector,...}}; a bare vector is accepted for V = k_lambda.
Json linmap_to_json(const LinMap& m);
LinMap linmap_from_json(const Json& j, const SimpleDesc& source, const SimpleDesc& target);

// {"U","V","delta_x","delta_y"?,"free_part"?}; a missing delta_y is completed.
Json spec_to_json(const ExtSpec& spec);
ExtSpec spec_from_json(const Json& j);

Json ext_vector_to_json(const ExtVector& v);
Json split_to_json(const ExtSpec& spec, const SplitResult& r);
Json intertwiner_to_json(const Intertwiner& f);
Json iso_to_json(const ExtSpec& A, const ExtSpec& B, const IsoResult& r);
Json classification_to_json(const ExtSpec& spec, const Classification& c);
Json error_to_json(const Error& e);

Json slice_to_json(const DegreeSlice& s);
Json link_to_json(const LinkResult& r);
Json graph_to_json(const LinkGraph& g);
std::string graph_to_dot(const LinkGraph& g);

Json entry_to_json(const ClaimEntry& e);

}  // namespace bicyclic
