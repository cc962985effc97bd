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

#include <filesystem>

#include "polyrep/errors.hpp"
#include "polyrep/functor_expr.hpp"
#include "polyrep/homology.hpp"
#include "polyrep/modkit.hpp"
#include "polyrep/parser.hpp"

using namespace polyrep;

namespace {

PolyRepPtr make(const char* text, const RepContext& c) { return build(*parse_expr(text), c); }

}  // namespace

TEST_CASE("resolutions of projectives and constants") {
  RepContext c(2, 3);
  auto g = gamma_rep(c.field, Layout::single(3), weight_from({2, 1, 0}));
  Resolution r(g);
  r.extend(3);
  CHECK(r.finished());
  CHECK(r.stage(0).summands.size() == 1);
  CHECK(r.term_dim(1) == 0);
  Resolution k(share(constant_rep(RepContext(2, 1))));
  k.extend(2);
  CHECK(k.term_dim(0) == 1);
  CHECK(k.verify_exactness(-1));
}

TEST_CASE("resolution of Wedge[2] at p=2") {
  RepContext c(2, 2);
  Resolution r(share(exterior_power(2, c)));
  r.extend(3);
  auto p0 = projective_of(r.stage(0));
  CHECK(p0.dim(Layout::single(2)) == 4);  // Gamma^(1,1) = Pow[2]
  CHECK(r.term_dim(0) == 4);
  for (int k = -1; k < 2; ++k) CHECK(r.verify_exactness(k));
}

TEST_CASE("exactness on a sample") {
  for (unsigned p : {2u, 3u}) {
    RepContext c(p, 3);
    for (auto text : {"Sym[3]", "Wedge[3]", "L[2,1]", "W[2,1]", "C[2,1]", "Sym[2] * Nat"}) {
      auto res = resolution_of(make(text, c));
      for (int k = -1; k < 3; ++k) CHECK(res->verify_exactness(k));
    }
  }
}

TEST_CASE("ext groups") {
  RepContext c(2, 2);
  auto i1 = share(twist(natural_rep(c), 1));
  auto w2 = share(exterior_power(2, c));
  auto e = ext_dims(i1, w2, 2);
  CHECK(e[0] == 0);
  CHECK(e[1] == 1);
  for (unsigned p : {2u, 3u})
    for (int d = 1; d <= 4; ++d) {
      RepContext cd(p, d);
      for (auto& [lam, l] : simples_of_degree(d, cd)) {
        auto x = ext_dims(l, l, 1);
        CHECK(x[0] == 1);
        CHECK(x[1] == 0);
      }
    }
  RepContext c3(3, 3);
  auto s3 = make("Sym[3]", c3), g3 = make("Div[3]", c3);
  CHECK(ext_dims(s3, g3, 0)[0] == hom_dim(*s3, *g3));
}

TEST_CASE("covers agree") {
  // the all-weights cover grows fast; degree 3 keeps it small
  for (unsigned p : {2u, 3u}) {
    RepContext c(p, 3);
    for (auto text : {"Sym[3]", "Wedge[2] * Nat", "W[2,1]"}) {
      auto m = make(text, c);
      auto t = make("C[2,1]", c);
      Resolution a(m, CoverStrategy::Greedy), b(m, CoverStrategy::AllWeights);
      CHECK(ext_dims(a, *t, 2) == ext_dims(b, *t, 2));
    }
  }
}

TEST_CASE("invariants") {
  RepContext c(2, 4);
  CHECK(invariant_i(make("Wedge[4]", c), 1) == InvariantValue::finite(1));
  CHECK(invariant_i(make("Div[4]", c), 2) == InvariantValue::finite(6));
  CHECK(invariant_i(make("Sym[3]", RepContext(2, 3)), 2) == InvariantValue::infinite());
  CHECK(invariant_i(make("Wedge[4]", c), 1, std::nullopt, DetectTarget::L) ==
        InvariantValue::finite(1));
  CHECK(invariant_i(make("Div[4]", c), 2, 3) == InvariantValue::at_least(4));
  CHECK(default_cap(2, 1, 4) == 6);
  CHECK(min(InvariantValue::finite(2), InvariantValue::infinite()) == InvariantValue::finite(2));
  auto ds = detection_summands(4, 1, DetectTarget::T, c);
  CHECK(ds.size() == 3);
}

TEST_CASE("twisted Kunneth checks") {
  RepContext c(2, 4);
  auto w2 = make("Wedge[2]", c), nat = make("Nat", c);
  auto cup = verify_cup_deg01(w2, w2, nat, nat, 1);
  CHECK(cup.status() == Status::Verified);
  auto k = constant_rep(c);
  auto s2 = make("Sym[2]", c);
  auto triv = verify_cup_deg01(s2, w2, share(k), share(k), 1);
  CHECK(triv.status() == Status::Verified);
  CHECK(verify_connectedness(w2, w2, nat, nat, 1, 2).status() == Status::Verified);
}

TEST_CASE("degree-4 lemmas") {
  RepContext c(2, 4);
  CHECK(verify_lmses(c).status() == Status::Verified);
  CHECK_THROWS_AS(verify_lmses(RepContext(3, 4)), InvalidArgument);
  auto a = verify_shift_ptitlm(Partition{2, 2}, {2, 1}, c);
  CHECK(a.status() == Status::Verified);
  CHECK(verify_shift_ptitlm(Partition{3, 1}, {4}, c).status() == Status::Verified);
}

TEST_CASE("resolution cache") {
  auto dir = std::filesystem::temp_directory_path() / "polyrep-test-cache";
  std::filesystem::remove_all(dir);
  set_cache_dir(dir);
  RepContext c(3, 3);
  auto m = make("W[2,1]", c);
  std::vector<std::size_t> first;
  {
    Resolution r(m);
    r.extend(3);
    first = ext_dims(r, *make("C[2,1]", c), 2);
    CHECK_FALSE(r.loaded_from_cache());
  }
  Resolution again(m);
  CHECK(again.loaded_from_cache());
  CHECK(ext_dims(again, *make("C[2,1]", c), 2) == first);
  set_cache_dir(std::nullopt);
  std::filesystem::remove_all(dir);
}
