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
#include "polyrep/modkit.hpp"
#include "polyrep/polyrep.hpp"
#include "polyrep/symbridge.hpp"

using namespace polyrep;

namespace {

std::size_t weight_dim(const PolyRep& m, std::vector<int> mu) { return weight_space(m, mu).size(); }

bool iso(const PolyRep& a, const PolyRep& b) {
  return iso_test(share(a), share(b)) == IsoResult::Isomorphic;
}

}  // namespace

TEST_CASE("basic functors") {
  RepContext c2(2, 2), c3(2, 3);
  CHECK(symmetric_power(2, c2).dim() == 3);
  CHECK(exterior_power(2, c2).dim() == 1);
  auto d0 = divided_power(0, c3);
  CHECK(d0.dim() == 1);
  CHECK(d0.degree() == 0);
  auto t = tensor(exterior_power(2, c3), natural_rep(c3));
  CHECK(t.dim() == 9);
  CHECK(t.degree() == 3);
  CHECK(tensor_power(3, c3).dim() == 27);
  CHECK(divided_power(3, RepContext(3, 3)).dim() == 10);
}

TEST_CASE("comodule laws") {
  for (unsigned p : {2u, 3u}) {
    RepContext ctx(p, 3);
    for (int d = 0; d <= 3; ++d)
      for (auto k : {BasicKind::Sym, BasicKind::Wedge, BasicKind::Div, BasicKind::TensorPower}) {
        auto m = build_basic(k, d, ctx);
        auto r = check_invariants(m);
        CHECK(r.ok());
        CHECK(r.coassociativity_full);
      }
    auto s = gamma_module({2, 1}, ctx);
    CHECK(check_invariants(s).ok());
  }
}

TEST_CASE("tensor, sum and unit") {
  RepContext c(2, 2);
  auto s2 = symmetric_power(2, c);
  CHECK(tensor(s2, constant_rep(c)) == s2);
  CHECK(iso(gamma_module({1, 1}, c), tensor_power(2, c)));
  auto sum = direct_sum(s2, exterior_power(2, c));
  CHECK(sum.dim() == 4);
  CHECK(check_invariants(sum).ok());
}

TEST_CASE("twist") {
  RepContext c(2, 2);
  auto i1 = twist(natural_rep(c), 1);
  CHECK(i1.dim() == 2);
  CHECK(i1.degree() == 2);
  CHECK(check_invariants(i1).ok());
  auto s2 = symmetric_power(2, c);
  CHECK(twist(s2, 0) == s2);
  CHECK(twist(twist(s2, 1), 1) == twist(s2, 2));
  CHECK(twist(dual(s2), 1) == dual(twist(s2, 1)));
}

TEST_CASE("duality") {
  for (unsigned p : {2u, 3u}) {
    RepContext c(p, 3);
    for (int d = 1; d <= 3; ++d) {
      auto s = symmetric_power(d, c);
      CHECK(dual(dual(s)) == s);
      CHECK(iso(dual(s), divided_power(d, c)));
      CHECK(iso(dual(exterior_power(d, c)), exterior_power(d, c)));
    }
  }
}

TEST_CASE("weight spaces") {
  RepContext c(2, 2);
  auto s2 = symmetric_power(2, c);
  CHECK(weight_dim(s2, {2, 0}) == 1);
  CHECK(weight_dim(s2, {1, 1}) == 1);
  CHECK(weight_dim(s2, {0, 2}) == 1);
  CHECK(weight_dim(exterior_power(2, c), {1, 1}) == 1);
  RepContext c4(3, 4);
  CHECK(weight_dim(tensor_power(4, c4), {1, 1, 1, 1}) == 24);
  CHECK_THROWS_AS(weight_space(s2, {1, 0}), BadWeight);
  CHECK_THROWS_AS(weight_space(s2, {1, 1, 0}), BadWeight);
}

TEST_CASE("coinvariants and invariants of symmetric group modules") {
  for (unsigned p : {2u, 3u}) {
    FieldSpec f(p);
    for (int d = 2; d <= 3; ++d) {
      RepContext c(p, d);
      CHECK(iso(coinvariants_sd(trivial_module(f, d), c), symmetric_power(d, c)));
      CHECK(iso(invariants_sd(trivial_module(f, d), c), divided_power(d, c)));
      CHECK(iso(coinvariants_sd(regular_module(f, d), c), tensor_power(d, c)));
      if (p == 3) {
        CHECK(iso(coinvariants_sd(sign_module(f, d), c), exterior_power(d, c)));
        CHECK(iso(invariants_sd(sign_module(f, d), c), exterior_power(d, c)));
      }
      auto v = schur_functor(*simple_module(Partition{2, 1}, RepContext(p, 3)));
      if (d == 3) {
        CHECK(sym_iso_test(schur_functor(invariants_sd(v, c)), v) == IsoResult::Isomorphic);
        CHECK(sym_iso_test(schur_functor(coinvariants_sd(v, c)), v) == IsoResult::Isomorphic);
      }
    }
  }
}

TEST_CASE("serialization") {
  RepContext c(2, 3);
  auto s3 = symmetric_power(3, c);
  auto text = serialize(s3);
  auto back = deserialize(text);
  CHECK(back == s3);
  CHECK(serialize(back) == text);
  CHECK_THROWS_AS(deserialize(text.substr(0, text.size() / 2)), FormatError);
  CHECK_THROWS_AS(deserialize(text, 3u), ContextMismatch);
}
