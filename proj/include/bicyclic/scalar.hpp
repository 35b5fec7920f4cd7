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

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace bicyclic {

// Exact rationals. mpq_class keeps values canonical (reduced, positive
// denominator) after every arithmetic operation.
using Scalar = mpq_class;

// Accepts "p", "-p", "p/q"; surrounding whitespace is ignored.
// Throws ParseError on malformed input or a zero denominator.
Scalar parse_scalar(std::string_view text);

// "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const Scalar& value);

// value^exponent; negative exponents require value != 0.
Scalar power(const Scalar& value, long exponent);

}  // namespace bicyclic
