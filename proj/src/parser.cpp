/*
   Copyright 2026 The polyrep authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "polyrep/parser.hpp"

#include <cctype>
#include <climits>
#include <vector>

#include "polyrep/errors.hpp"

namespace polyrep {

namespace {

// expr := term ('+' term)* ; term := factor ('*' factor)* ;
// factor := atom | '(' expr ')'
class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  ExprPtr run() {
    ExprPtr e = expr();
    skip();
    if (i_ < s_.size()) fail("unexpected '" + std::string(1, s_[i_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what, i_ + 1);
  }

  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }

  bool peek(char c) {
    skip();
    return i_ < s_.size() && s_[i_] == c;
  }

  void expect(char c) {
    skip();
    if (i_ >= s_.size()) fail(std::string("expected '") + c + "', got end of input");
    if (s_[i_] != c) fail(std::string("expected '") + c + "'");
    ++i_;
  }

  int number() {
    skip();
    if (i_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[i_])))
      fail(i_ >= s_.size() ? "expected a number, got end of input" : "expected a number");
    long long v = 0;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
      v = v * 10 + (s_[i_++] - '0');
      if (v > INT_MAX) fail("number too large");
    }
    return int(v);
  }

  std::string ident() {
    skip();
    std::size_t j = i_;
    while (j < s_.size() && std::isalpha(static_cast<unsigned char>(s_[j]))) ++j;
    std::string id(s_.substr(i_, j - i_));
    return id;
  }

  ExprPtr expr() {
    ExprPtr e = term();
    while (peek('+')) {
      ++i_;
      e = make_binary(Expr::Kind::Sum, e, term());
    }
    return e;
  }

  ExprPtr term() {
    ExprPtr e = factor();
    while (peek('*')) {
      ++i_;
      e = make_binary(Expr::Kind::Tensor, e, factor());
    }
    return e;
  }

  Partition partition() {
    std::vector<int> parts{number()};
    while (peek(',')) {
      ++i_;
      parts.push_back(number());
    }
    std::size_t at = i_;
    for (std::size_t k = 1; k < parts.size(); ++k)
      if (parts[k] > parts[k - 1]) {
        i_ = at;
        fail("parts must be weakly decreasing");
      }
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    return Partition(parts);
  }

  ExprPtr factor() {
    using K = Expr::Kind;
    skip();
    if (i_ >= s_.size()) fail("expected a functor, got end of input");
    if (s_[i_] == '(') {
      ++i_;
      ExprPtr e = expr();
      expect(')');
      return e;
    }
    const std::size_t start = i_;
    std::string id = ident();
    if (id.empty()) fail("expected a functor");
    i_ += id.size();
    struct Basic {
      const char* name;
      K kind;
    };
    static const Basic basics[] = {{"Sym", K::Sym}, {"Wedge", K::Wedge}, {"Div", K::Div},
                                   {"Pow", K::Pow}, {"Q", K::Trunc}};
    for (auto& b : basics)
      if (id == b.name) {
        expect('[');
        int a = number();
        expect(']');
        return make_basic(b.kind, a);
      }
    static const Basic parts[] = {{"L", K::Simple}, {"W", K::Weyl}, {"C", K::Costandard}};
    for (auto& b : parts)
      if (id == b.name) {
        expect('[');
        Partition l = partition();
        expect(']');
        return make_partition(b.kind, std::move(l));
      }
    if (id == "Nat") return make_basic(K::Nat, 1);
    if (id == "T" || id == "Lsum") {
      expect('(');
      int d = number();
      expect(',');
      int r = number();
      expect(')');
      return make_detect(id == "T" ? K::TSum : K::LSum, d, r);
    }
    if (id == "Dual") {
      expect('(');
      ExprPtr e = expr();
      expect(')');
      return make_dual(e);
    }
    if (id == "Tw") {
      expect('(');
      ExprPtr e = expr();
      expect(',');
      int r = number();
      expect(')');
      return make_twist(e, r);
    }
    i_ = start;
    fail("unknown functor '" + id + "'");
  }

  std::string_view s_;
  std::size_t i_ = 0;
};

}  // namespace

ExprPtr parse_expr(std::string_view text) { return Parser(text).run(); }

}  // namespace polyrep
