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

#include "bicyclic/scalar.hpp"

#include <cctype>

#include "bicyclic/error.hpp"

namespace bicyclic {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParse: return "ParseError";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kIncompatibleDelta: return "IncompatibleDelta";
    case ErrorCode::kShapeMismatch: return "ShapeMismatch";
    case ErrorCode::kNotNonsplit: return "NotNonsplit";
    case ErrorCode::kStabilizationFailure: return "StabilizationFailure";
    case ErrorCode::kZeroElement: return "ZeroElement";
    case ErrorCode::kWindowMismatch: return "WindowMismatch";
  }
  return "Unknown";
}

namespace {

bool is_integer_literal(std::string_view s) {
  std::size_t k = 0;
  if (k < s.size() && (s[k] == '-' || s[k] == '+')) ++k;
  if (k == s.size()) return false;
  for (; k < s.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(s[k]))) return false;
  }
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

mpz_class to_mpz(std::string_view s) {
  std::string digits(s.front() == '+' ? s.substr(1) : s);
  return mpz_class(digits, 10);
}

}  // namespace

Scalar parse_scalar(std::string_view text) {
  std::string_view s = trim(text);
  auto slash = s.find('/');
  std::string_view num = trim(s.substr(0, slash));
  if (!is_integer_literal(num)) {
    throw ParseError(0, "malformed rational '" + std::string(text) + "'");
  }
  Scalar value;
  if (slash == std::string_view::npos) {
    value = Scalar(to_mpz(num));
  } else {
    std::string_view den = trim(s.substr(slash + 1));
    if (!is_integer_literal(den)) {
      throw ParseError(slash + 1, "malformed denominator in '" + std::string(text) + "'");
    }
    mpz_class d = to_mpz(den);
    if (d == 0) throw ParseError(slash + 1, "zero denominator");
    value = Scalar(to_mpz(num), d);
    value.canonicalize();
  }
  return value;
}

std::string to_string(const Scalar& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Scalar power(const Scalar& value, long exponent) {
  if (exponent < 0) {
    if (value == 0) throw Error(ErrorCode::kInvalidArgument, "zero to a negative power");
    Scalar inv = 1 / value;
    return power(inv, -exponent);
  }
  Scalar result = 1;
  Scalar base = value;
  for (unsigned long e = static_cast<unsigned long>(exponent); e != 0; e >>= 1) {
    if (e & 1u) result *= base;
    base *= base;
  }
  return result;
}

}  // namespace bicyclic
