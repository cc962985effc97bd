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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "polyrep/errors.hpp"
#include "polyrep/functor_expr.hpp"
#include "polyrep/modkit.hpp"
#include "polyrep/parser.hpp"

using namespace polyrep;

namespace {

std::size_t error_column(const std::string& text) {
  try {
    parse_expr(text);
  } catch (const ParseError& e) {
    return e.column();
  }
  return 0;
}

}  // namespace

TEST_CASE("degrees") {
  auto e = parse_expr("Tw(Wedge[2],1) * Nat");
  CHECK(degree(*e, 2) == 5);
  CHECK(degree(*e, 3) == 7);
  CHECK(degree(*parse_expr("T(4,1)"), 2) == 4);
  CHECK(degree(*parse_expr("Dual(Sym[3])"), 5) == 3);
  CHECK_THROWS_AS(degree(*parse_expr("Sym[2] + Nat"), 2), DegreeMismatch);
  CHECK(degrees(*parse_expr("Sym[2] + Nat"), 2).size() == 2);
}

TEST_CASE("node kinds") {
  auto e = parse_expr("L[2,1]");
  CHECK(e->kind == Expr::Kind::Simple);
  CHECK(e->lambda == Partition{2, 1});
  CHECK(parse_expr("C[3,1]")->kind == Expr::Kind::Costandard);
  CHECK(parse_expr("Lsum(4,2)")->kind == Expr::Kind::LSum);
  // * binds tighter than +
  auto s = parse_expr("Nat * Nat + Pow[2]");
  CHECK(s->kind == Expr::Kind::Sum);
  CHECK(s->args[0]->kind == Expr::Kind::Tensor);
}

TEST_CASE("parse errors") {
  CHECK(error_column("Sym[") == 5);
  CHECK(error_column("Sym[2") == 6);
  CHECK(error_column("Foo") == 1);
  CHECK(error_column("Nat *") == 6);
  CHECK(error_column("Tw(Nat)") == 7);
  CHECK(error_column("L[2,3]") > 0);
}

TEST_CASE("print and parse round trip") {
  for (auto text : {"Sym[3]", "Wedge[2]", "Div[4]", "Pow[2]", "Nat", "L[2,1]", "W[3,1]",
                    "C[2,2]", "Q[3]", "T(4,1)", "Lsum(4,2)", "Dual(Sym[2])",
                    "Tw(Wedge[2],1) * Nat", "Sym[2] + Wedge[2]",
                    "(Sym[2] + Wedge[2]) * Nat", "Tw(Tw(Nat,1),1)"}) {
    auto e = parse_expr(text);
    auto printed = to_string(*e);
    CHECK(to_string(*parse_expr(printed)) == printed);
  }
  CHECK(to_string(*parse_expr("  Sym[ 2 ]*Nat ")) == to_string(*parse_expr("Sym[2] * Nat")));
}

TEST_CASE("built modules") {
  RepContext c(2, 5);
  auto m = build(*parse_expr("Tw(Wedge[2],1) * Nat"), c);
  CHECK(m->degree() == 5);
  CHECK(m->dim() == 50);
  RepContext c4(2, 4);
  // distributivity
  auto a = build(*parse_expr("(Sym[2] + Wedge[2]) * Nat"), RepContext(2, 3));
  auto b = build(*parse_expr("Sym[2] * Nat + Wedge[2] * Nat"), RepContext(2, 3));
  CHECK(iso_test(a, b) == IsoResult::Isomorphic);
  auto d = build(*parse_expr("Dual(Sym[2])"), c4);
  CHECK(iso_test(d, build(*parse_expr("Div[2]"), c4)) == IsoResult::Isomorphic);
  auto l = build(*parse_expr("L[2]"), c4);
  CHECK(iso_test(l, build(*parse_expr("Tw(Nat,1)"), c4)) == IsoResult::Isomorphic);
  auto comps = build_components(*parse_expr("Sym[2] + Nat"), c4);
  CHECK(comps.size() == 2);
  CHECK(comps.at(1)->dim() == 4);
}
