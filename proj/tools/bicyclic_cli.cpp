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

// Command-line front end. Talks to the library only through bicyclic.h.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "bicyclic/bicyclic.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct Freer {
  void operator()(bc_element* a) const { bc_element_free(a); }
  void operator()(bc_ext_spec* s) const { bc_ext_spec_free(s); }
  void operator()(bc_report* r) const { bc_report_free(r); }
  void operator()(char* s) const { bc_string_free(s); }
};
using ElementPtr = std::unique_ptr<bc_element, Freer>;
using SpecPtr = std::unique_ptr<bc_ext_spec, Freer>;
using ReportPtr = std::unique_ptr<bc_report, Freer>;
using StringPtr = std::unique_ptr<char, Freer>;

// Carries the exit code out of a failed library call.
struct Exit {
  int code;
};

int exit_code_for(bc_status s) {
  return s == BC_ERR_PARSE || s == BC_ERR_NULL_ARGUMENT ? kExitUsage : kExitFail;
}

void check(bc_status s) {
  if (s == BC_OK) return;
  std::cerr << "bicyclic: " << bc_last_error() << "\n";
  throw Exit{exit_code_for(s)};
}

// Ext commands report errors as JSON on stdout.
void check_json(bc_status s) {
  if (s == BC_OK) return;
  std::cout << bc_last_error_json() << "\n";
  throw Exit{exit_code_for(s)};
}

ElementPtr element(const std::string& text) {
  bc_element* out = nullptr;
  check(bc_element_parse(text.c_str(), &out));
  return ElementPtr(out);
}

std::string take(char* s) {
  StringPtr owned(s);
  return owned.get();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "bicyclic: cannot read " << path << "\n";
    throw Exit{kExitUsage};
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

SpecPtr spec(const std::string& path) {
  bc_ext_spec* out = nullptr;
  check_json(bc_ext_spec_from_json(read_file(path).c_str(), &out));
  return SpecPtr(out);
}

void write_output(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) {
    std::cerr << "bicyclic: cannot write " << path << "\n";
    throw Exit{kExitUsage};
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations in k<x, y>/(yx - 1)"};
  app.require_subcommand(1);

  std::string a_text, b_text;
  std::size_t dim = 4;

  auto* nf = app.add_subcommand("nf", "print the normal form of an element");
  nf->add_option("element", a_text, "element, e.g. \"x*y - 2*y*x\"")->required();
  auto* mul = app.add_subcommand("mul", "multiply two elements");
  mul->add_option("a", a_text)->required();
  mul->add_option("b", b_text)->required();
  auto* eta = app.add_subcommand("eta", "apply the involution x <-> y");
  eta->add_option("element", a_text)->required();
  auto* rep = app.add_subcommand("rep", "truncated shift representation");
  rep->add_option("--dim", dim, "matrix size")->check(CLI::PositiveNumber);
  rep->add_option("element", a_text)->required();
  auto* laurent = app.add_subcommand("laurent", "image under x -> t, y -> t^-1");
  laurent->add_option("element", a_text)->required();

  std::string spec_a, spec_b;
  auto* ext = app.add_subcommand("ext", "extensions of simple modules");
  ext->require_subcommand(1);
  auto* validate = ext->add_subcommand("validate", "check the compatibility of delta");
  validate->add_option("spec", spec_a)->required();
  auto* split = ext->add_subcommand("split", "decide splitting, with certificate");
  split->add_option("spec", spec_a)->required();
  auto* iso = ext->add_subcommand("iso", "search an isomorphism E_B -> E_A");
  iso->add_option("a", spec_a)->required();
  iso->add_option("b", spec_b)->required();
  auto* equiv = ext->add_subcommand("equiv", "search an equivalence of short exact sequences");
  equiv->add_option("a", spec_a)->required();
  equiv->add_option("b", spec_b)->required();
  auto* classify = ext->add_subcommand("classify", "case, stated claim and oracle verdict");
  classify->add_option("spec", spec_a)->required();

  bc_verify_config config;
  bc_verify_config_default(&config);
  std::string format = "json";
  std::string out_path;
  auto* verify = app.add_subcommand("verify", "run the full verification suite");
  verify->add_option("--max-degree", config.max_degree, "degree window")->check(CLI::PositiveNumber);
  verify->add_option("--slack-cap", config.slack_cap, "largest slack tried when stabilizing ideal windows")
      ->check(CLI::Range(2u, 64u));
  verify->add_option("--seed", config.seed, "seed for the randomized checks");
  verify->add_option("--format", format, "json, text or dot")->check(CLI::IsMember({"json", "text", "dot"}));
  verify->add_option("--out", out_path, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*nf) {
      std::cout << take([&] { char* s = nullptr; check(bc_element_to_string(element(a_text).get(), &s)); return s; }())
                << "\n";
    } else if (*mul) {
      bc_element* prod = nullptr;
      check(bc_element_mul(element(a_text).get(), element(b_text).get(), &prod));
      ElementPtr owned(prod);
      char* s = nullptr;
      check(bc_element_to_string(owned.get(), &s));
      std::cout << take(s) << "\n";
    } else if (*eta) {
      bc_element* img = nullptr;
      check(bc_element_involution(element(a_text).get(), &img));
      ElementPtr owned(img);
      char* s = nullptr;
      check(bc_element_to_string(owned.get(), &s));
      std::cout << take(s) << "\n";
    } else if (*rep) {
      char* s = nullptr;
      check(bc_element_matrix(element(a_text).get(), dim, &s));
      std::cout << take(s);
    } else if (*laurent) {
      char* s = nullptr;
      check(bc_element_laurent(element(a_text).get(), &s));
      std::cout << take(s) << "\n";
    } else if (*ext) {
      char* s = nullptr;
      if (*validate) {
        check_json(bc_ext_validate(spec(spec_a).get()));
        std::cout << "{\"valid\":true}\n";
        return kExitOk;
      }
      if (*split) check_json(bc_ext_split(spec(spec_a).get(), &s));
      if (*iso) check_json(bc_ext_iso(spec(spec_a).get(), spec(spec_b).get(), &s));
      if (*equiv) check_json(bc_ext_equiv(spec(spec_a).get(), spec(spec_b).get(), &s));
      if (*classify) check_json(bc_ext_classify(spec(spec_a).get(), &s));
      std::cout << take(s) << "\n";
    } else if (*verify) {
      bc_report* raw = nullptr;
      check(bc_verify_run(&config, &raw));
      ReportPtr report(raw);
      char* s = nullptr;
      if (format == "json") {
        check(bc_report_json(report.get(), &s));
        write_output(take(s), out_path);
      } else if (format == "text") {
        check(bc_report_text(report.get(), &s));
        write_output(take(s), out_path);
      } else {
        check(bc_report_dot(report.get(), &s));
        write_output(take(s), out_path);
        check(bc_report_text(report.get(), &s));
        (out_path.empty() ? std::cerr : std::cout) << take(s);
      }
      return bc_report_count(report.get(), BC_FAIL) == 0 ? kExitOk : kExitFail;
    }
  } catch (const Exit& e) {
    return e.code;
  }
  return kExitOk;
}
