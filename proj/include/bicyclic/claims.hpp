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
#include <vector>

#include <json.hpp>

namespace bicyclic {

// PASS: the computation confirms the claim. DISCREPANCY: the computation
// contradicts the claim as stated. FAIL: the library broke one of its own
// contracts (a certificate did not replay, a window did not stabilize, ...).
enum class Verdict { kPass, kDiscrepancy, kFail };

const char* verdict_name(Verdict v);

struct ClaimEntry {
  std::string id;
  std::string statement;
  Verdict verdict = Verdict::kFail;
  // "window-verified" when the check is exact only on a finite degree window.
  std::string scope = "exact";
  nlohmann::json certificate = nlohmann::json::object();
};

}  // namespace bicyclic
