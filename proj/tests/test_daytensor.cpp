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

#include "polyrep/daytensor.hpp"
#include "polyrep/errors.hpp"
#include "polyrep/functor_expr.hpp"
#include "polyrep/parser.hpp"

using namespace polyrep;

namespace {

PolyRepPtr make(const char* text, const RepContext& c) { return build(*parse_expr(text), c); }

bool iso(const PolyRep& a, PolyRepPtr b) { return iso_test(share(a), b) == IsoResult::Isomorphic; }

}  // namespace

TEST_CASE("Gamma presentations and evaluation") {
  RepContext c(3, 3);
  for (auto text : {"Sym[3]", "L[2,1]", "Wedge[2] * Nat"}) {
    auto m = make(text, c);
    auto gp = gamma_presentation(m);
    CHECK(gp.consistent());
    auto up = evaluate_at(*m, 5);
    CHECK(up.coords() == 5);
    CHECK(check_invariants(up).ok());
    CHECK(iso(evaluate_at(up, 3), m));
  }
  auto s3 = make("Sym[3]", c);
  CHECK(iso(evaluate_at(*s3, 5), make("Sym[3]", RepContext(3, 5))));
  CHECK(evaluate_at(*s3, 2).dim() == 4);
}

TEST_CASE("closed formulas") {
  RepContext c3(3, 3), c2(2, 2);
  auto w3 = make("Wedge[3]", c3), s3 = make("Sym[3]", c3);
  CHECK(iso(internal_with_Q(*w3), w3));
  CHECK(iso(internal_with_wedge(*w3), s3));
  CHECK(internal_with_tensorpower(*make("Wedge[2]", c2)).dim() == 4);
  CHECK(internal_with_tensorpower(*make("Tw(Nat,1)", c2)).dim() == 0);
  auto p3 = make("Pow[3]", c3);
  CHECK(internal_with_tensorpower(*p3).dim() == 27 * 6);
  CHECK_THROWS_AS(internal_with_wedge(*make("Wedge[2]", c2)), OddCharRequired);
  CHECK_THROWS_AS(internal_with_Q(*make("Div[2]", c2)), HeadNotRestricted);
}

TEST_CASE("general evaluator") {
  RepContext c3(3, 3), c2(2, 2);
  auto q3 = make("Q[3]", c3), w3 = make("Wedge[3]", c3), s3 = make("Sym[3]", c3);
  CHECK(iso(internal_general(*q3, *w3), w3));
  CHECK(iso(internal_general(*w3, *w3), s3));
  CHECK(iso(internal_general(*make("Div[3]", c3), *s3), s3));
  CHECK(internal_general(*make("L[1,1]", c2), *make("L[2]", c2)).dim() == 0);
  CHECK(internal_general(*make("L[1,1]", c2), *make("L[1,1]", c2)).dim() > 0);
  CHECK(internal_general(*make("Nat", c2), *make("Sym[2]", c2)).dim() == 0);
  auto a = internal_oriented(*make("Wedge[2]", c2), *make("Sym[2]", c2));
  auto b = internal_oriented(*make("Sym[2]", c2), *make("Wedge[2]", c2));
  CHECK(iso(a, share(b)));
  CHECK(check_invariants(a).ok());
  // internal hom against the dual of the internal tensor product
  auto h = internal_hom(*s3, *make("Div[3]", c3));
  CHECK(iso(h, share(dual(internal_general(*s3, *s3)))));
}

TEST_CASE("internal Steinberg theorem") {
  CHECK(verify_stein_internal(Partition{2}, Partition{2}, RepContext(2, 2)).status() ==
        Status::Verified);
  CHECK(verify_stein_internal(Partition{1, 1}, Partition{2}, RepContext(2, 2)).status() ==
        Status::Verified);
  CHECK(verify_stein_internal(Partition{2, 1}, Partition{2, 1}, RepContext(3, 3)).status() ==
        Status::Verified);
}

TEST_CASE("budget") {
  const auto saved = max_intern_degree();
  set_max_intern_degree(2);
  RepContext c3(3, 3);
  CHECK_THROWS_AS(internal_general(*make("Sym[3]", c3), *make("Sym[3]", c3)), BudgetExceeded);
  set_max_intern_degree(saved);
}
