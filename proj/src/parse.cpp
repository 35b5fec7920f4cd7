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

#include <cctype>
#include <string>

#include "bicyclic/algebra.hpp"
#include "bicyclic/error.hpp"

namespace bicyclic {

namespace {

// expr   := ['+'|'-'] term (('+'|'-') term)*
// term   := factor ('*' factor)*
// factor := '-' factor | primary ['^' integer]
// primary:= integer ['/' integer] | 'x' | 'y' | '(' expr ')'
class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Element parse() {
    Element e = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(pos_, message); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::string digits() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    return std::string(text_.substr(start, pos_ - start));
  }

  Element expr() {
    Element acc;
    bool negate = false;
    if (accept('-')) {
      negate = true;
    } else {
      accept('+');
    }
    Element t = term();
    acc += negate ? -t : t;
    while (true) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Element term() {
    Element acc = factor();
    while (accept('*')) acc = acc * factor();
    return acc;
  }

  Element factor() {
    if (accept('-')) return -factor();
    Element base = primary();
    if (accept('^')) {
      const std::size_t at = pos_;
      const std::string e = digits();
      if (e.size() > 6) throw ParseError(at, "exponent too large");
      base = power(base, static_cast<unsigned>(std::stoul(e)));
    }
    return base;
  }

  Element primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == 'x' || c == 'y') {
      ++pos_;
      return c == 'x' ? Element::x() : Element::y();
    }
    if (c == '(') {
      ++pos_;
      Element inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mpz_class num(digits(), 10);
      if (accept('/')) {
        const std::size_t at = pos_;
        mpz_class den(digits(), 10);
        if (den == 0) throw ParseError(at, "zero denominator");
        Scalar q(num, den);
        q.canonicalize();
        return Element(q);
      }
      return Element(Scalar(num));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Element parse_element(std::string_view text) { return Parser(text).parse(); }

}  // namespace bicyclic
