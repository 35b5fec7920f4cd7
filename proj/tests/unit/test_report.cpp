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

#include <doctest.h>

#include <algorithm>
#include <set>

#include "bicyclic/report.hpp"

using namespace bicyclic;

TEST_SUITE("report") {

TEST_CASE("small run") {
  RunConfig config;
  config.max_degree = 3;
  config.slack_cap = 4;
  const ClaimReport r = run_report(config);

  CHECK(r.count(Verdict::kFail) == 0);
  CHECK(r.count(Verdict::kPass) + r.count(Verdict::kDiscrepancy) == r.entries.size());
  CHECK(std::is_sorted(r.entries.begin(), r.entries.end(),
                       [](const ClaimEntry& a, const ClaimEntry& b) { return a.id < b.id; }));
  std::set<std::string> ids;
  for (const auto& e : r.entries) ids.insert(e.id);
  CHECK(ids.size() == r.entries.size());
  CHECK(ids.count("ext.coboundary_probe"));
  CHECK(ids.count("link.jategaonkar_case_iii"));

  const Json j = report_to_json(r);
  CHECK(j["config"]["max_degree"] == 3);
  CHECK(j["entries"].size() == r.entries.size());
  CHECK(j.contains("link_graph"));

  const std::string text = report_to_text(r);
  CHECK(text.find("DISCREPANCY") != std::string::npos);
}

TEST_CASE("determinism") {
  RunConfig config;
  config.max_degree = 2;
  config.slack_cap = 4;
  CHECK(report_to_json(run_report(config)).dump() == report_to_json(run_report(config)).dump());
}

TEST_CASE("config validation") {
  RunConfig config;
  config.max_degree = 0;
  CHECK_THROWS_AS(run_report(config), Error);
  config.max_degree = 3;
  config.slack_cap = 1;
  CHECK_THROWS_AS(run_report(config), Error);
}

}  // TEST_SUITE
