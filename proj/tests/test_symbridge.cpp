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
#include "polyrep/symbridge.hpp"

using namespace polyrep;

namespace {

bool iso(const SymRep& a, const SymRep& b) { return sym_iso_test(a, b) == IsoResult::Isomorphic; }

}  // namespace

TEST_CASE("Coxeter relations are enforced") {
  FieldSpec f(3);
  auto id = ExactMatrix::identity(f, 2);
  auto swap = ExactMatrix::from_ints(f, {{0, 1}, {1, 0}});
  CHECK_NOTHROW(SymRep(f, 2, 2, {swap}));
  auto bad = ExactMatrix::from_ints(f, {{1, 1}, {0, 1}});
  CHECK_THROWS(SymRep(f, 2, 2, {bad}));
  // s1 = s2 = swap breaks the braid relation unless they commute trivially
  auto diag = ExactMatrix::from_ints(f, {{1, 0}, {0, 2}});
  CHECK_THROWS(SymRep(f, 3, 2, {swap, diag}));
  CHECK_NOTHROW(SymRep(f, 3, 2, {id, id}));
}

TEST_CASE("Schur functor on basic functors") {
  for (unsigned p : {2u, 3u}) {
    FieldSpec f(p);
    for (int d = 1; d <= 4; ++d) {
      RepContext c(p, d);
      auto t = schur_functor(tensor_power(d, c));
      CHECK(iso(t, regular_module(f, d)));
      CHECK(iso(schur_functor(symmetric_power(d, c)), trivial_module(f, d)));
      CHECK(iso(schur_functor(exterior_power(d, c)), sign_module(f, d)));
    }
  }
  CHECK_THROWS_AS(schur_functor(symmetric_power(3, RepContext(2, 2))), ContextTooSmall);
}

TEST_CASE("sign twist and Kronecker products") {
  FieldSpec f3(3), f2(2);
  CHECK(iso(sign_twist(sign_module(f3, 3)), trivial_module(f3, 3)));
  auto reg = regular_module(f2, 3);
  CHECK(sign_twist(reg).gens() == reg.gens());
  auto v = sym_direct_sum(trivial_module(f3, 3), sign_module(f3, 3));
  CHECK(iso(kronecker(regular_module(f3, 3), v),
            sym_direct_sum(regular_module(f3, 3), regular_module(f3, 3))));
}

TEST_CASE("hom and ext over the symmetric group") {
  FieldSpec f2(2), f3(3);
  CHECK(sym_hom(trivial_module(f2, 3), trivial_module(f2, 3)) == 1);
  CHECK(sym_ext(trivial_module(f2, 2), trivial_module(f2, 2), 1) == 1);
  // H^*(C_2, F_2) and H^*(S_3, F_3)
  CHECK(sym_ext_dims(trivial_module(f2, 2), trivial_module(f2, 2), 4) ==
        std::vector<std::size_t>{1, 1, 1, 1, 1});
  CHECK(sym_ext_dims(trivial_module(f3, 3), trivial_module(f3, 3), 4) ==
        std::vector<std::size_t>{1, 0, 0, 1, 1});
  RepContext c(2, 2);
  auto g = schur_functor(divided_power(2, c));
  auto q = schur_functor(*truncated_symmetric(2, c));
  CHECK(sym_hom(g, q) == 1);
  for (auto& b : sym_hom_basis(regular_module(f3, 3), trivial_module(f3, 3)))
    CHECK(b.rows() == 1);
}

TEST_CASE("simplicity and Mullineux") {
  FieldSpec f2(2), f3(3);
  CHECK(sym_is_simple(trivial_module(f3, 3)));
  CHECK_FALSE(sym_is_simple(regular_module(f3, 3)));
  CHECK(mullineux(Partition{2, 1}, f3) == Partition{1, 1, 1});
  CHECK(mullineux(Partition{1, 1, 1}, f3) == Partition{2, 1});
  CHECK(mullineux(Partition{2, 1, 1}, f3) == Partition{3, 1});
  for (auto& mu : enumerate_partitions(4, 4))
    if (is_pr_restricted(mu, 2, 1)) CHECK(mullineux(mu, f2) == mu);
  CHECK_THROWS(mullineux(Partition{3}, f3));
}

TEST_CASE("Schur functor connectedness") {
  RepContext c(2, 4);
  auto s4 = build(*parse_expr("Sym[4]"), c), g4 = build(*parse_expr("Div[4]"), c);
  auto kn = verify_kn(s4, g4, 3);
  CHECK(kn.status() == Status::Verified);
  CHECK(kn.instances.size() == 4);
  CHECK(verify_kn_boundary(2).status() == Status::Verified);
  CHECK(verify_kn_boundary(3).status() == Status::Verified);
}

TEST_CASE("SYMREP round trip") {
  FieldSpec f3(3);
  auto v = schur_functor(*simple_module(Partition{2, 1, 1}, RepContext(3, 4)));
  auto text = serialize(v);
  auto back = deserialize_symrep(text);
  CHECK(back.gens() == v.gens());
  CHECK(serialize(back) == text);
  CHECK_THROWS_AS(deserialize_symrep(text.substr(0, text.size() - 4)), FormatError);
  CHECK(to_json(v)["dim"] == v.dim());
}
