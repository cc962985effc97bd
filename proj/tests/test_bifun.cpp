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

#include "polyrep/bifun.hpp"
#include "polyrep/errors.hpp"
#include "polyrep/functor_expr.hpp"
#include "polyrep/homology.hpp"
#include "polyrep/parser.hpp"

using namespace polyrep;

namespace {

PolyRepPtr make(const char* text, const RepContext& c) {
  PolyRep m = *build(*parse_expr(text), c);
  m.set_label(text);
  return share(std::move(m));
}

bool iso(const PolyRep& a, const PolyRep& b) {
  return iso_test(share(a), share(b)) == IsoResult::Isomorphic;
}

}  // namespace

TEST_CASE("exterior tensor products") {
  RepContext c3(2, 3);
  auto b = boxtimes(*make("Wedge[2]", c3), *make("Nat", c3));
  CHECK(b.dim() == 9);
  CHECK(b.d == 2);
  CHECK(b.e == 1);
  CHECK(check_invariants(*b.rep).ok());
  auto s = boxtimes(*make("L[1,1]", c3), *make("L[1]", c3));
  CHECK(is_simple(s.rep));
  auto k = boxtimes(*make("Sym[2]", c3), constant_rep(c3));
  CHECK(k.dim() == 6);
  CHECK(k.e == 0);
}

TEST_CASE("phi and delta") {
  RepContext c2(2, 2);
  auto nat = make("Nat", c2), s2 = make("Sym[2]", c2), w2 = make("Wedge[2]", c2);
  CHECK(iso(phi(boxtimes(*nat, *nat), 1), tensor(*nat, twist(*nat, 1))));
  CHECK(iso(delta(boxtimes(*w2, *s2)), tensor(*w2, *s2)));
  auto p = phi(boxtimes(*w2, *nat), 1);
  CHECK(p.degree() == 4);
  CHECK(p.dim() == 2);
  CHECK(iso(p, tensor(*w2, twist(*nat, 1))));
}

TEST_CASE("sum-diagonal") {
  RepContext c4(2, 4);
  auto parts = boxplus(*make("Sym[2]", c4), 2, 2);
  REQUIRE(parts.size() == 3);
  CHECK(parts[0].dim() == 3);
  CHECK(parts[1].dim() == 4);
  CHECK(parts[2].dim() == 3);
  std::size_t total = 0;
  for (auto& b : parts) total += b.dim();
  CHECK(total == 10);
  RepContext c2(2, 2);
  CHECK(iso(*parts[1].rep, *boxtimes(*make("Nat", c2), *make("Nat", c2)).rep));
  // hom_bi(F # G, H_boxplus) = hom(F (x) G, H)
  auto h = boxplus(*make("Pow[2]", c4), 2, 2);
  auto nat = make("Nat", c2);
  CHECK(hom_bi(boxtimes(*nat, *nat), h[1]) ==
        hom_dim(tensor(*nat, *nat), *make("Pow[2]", c2)));
}

TEST_CASE("submodule lattices and diagrams") {
  RepContext c2(2, 2);
  auto s2 = make("Sym[2]", c2);
  auto lat = submodule_lattice(s2);
  CHECK(lat.size() == 3);  // 0, the squares, everything
  auto d = module_diagram(s2);
  CHECK(d.multiplicity_free);
  CHECK(d.vertices.size() == 2);
  CHECK(d.edges.size() == 1);
  CHECK(diagram_edges(d, 2) == "L(1,1) -> L(2)\n");
  auto t = make("Pow[2]", RepContext(2, 3));
  CHECK_FALSE(module_diagram(t).multiplicity_free);
}

TEST_CASE("Steinberg-type products") {
  RepContext c2(2, 2);
  auto nat = make("Nat", c2), s2 = make("Sym[2]", c2), g2 = make("Div[2]", c2);
  CHECK(verify_steinberg_type(nat, s2, 1).status() == Status::Verified);
  CHECK(verify_steinberg_type(nat, g2, 1).status() == Status::Verified);
  CHECK_THROWS_AS(verify_steinberg_type(s2, nat, 1), NotRestricted);
  CHECK_THROWS_AS(verify_steinberg_type(make("Wedge[2]", c2), s2, 1), BudgetExceeded);
  auto lat = verify_steinberg_lattice(make("Wedge[2]", c2), s2, 1);
  CHECK(lat.instances.size() == 2);
  CHECK(lat.status() == Status::Verified);
}

TEST_CASE("bicomodule statements") {
  RepContext c2(2, 2);
  auto rep = verify_appendixA({{make("Div[2]", c2), make("Sym[2]", c2)},
                               {make("Nat", c2), make("Sym[2]", c2)}});
  CHECK(rep.status() == Status::Verified);
  CHECK(rep.instances.size() >= 12);
  auto b = boxtimes(*make("Div[2]", c2), *make("Sym[2]", c2));
  auto e = ext_bi(b, b, 1);
  CHECK(e[0] == 1);
}
