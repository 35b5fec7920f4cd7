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
#include <cstdint>
#include <string>
#include <vector>

#include "bicyclic/claims.hpp"
#include "bicyclic/links.hpp"
#include "bicyclic/serialize.hpp"

namespace bicyclic {

struct RunConfig {
  unsigned max_degree = 6;
  unsigned slack_cap = 6;
  std::uint32_t seed = 20260417;
};

struct ClaimReport {
  RunConfig config;
  // Sorted by id.
  std::vector<ClaimEntry> entries;
  LinkGraph graph;

  std::size_t count(Verdict v) const;
};

// Runs every check. An entry whose computation throws becomes a FAIL entry
// carrying the error. Throws Error(kInvalidArgument) for max_degree < 1 or
// slack_cap < 2.
ClaimReport run_report(const RunConfig& config);

Json report_to_json(const ClaimReport& r);
std::string report_to_text(const ClaimReport& r);

}  // namespace bicyclic
