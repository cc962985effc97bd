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

#include <random>

#include "polyrep/field.hpp"

using namespace polyrep;

TEST_CASE("field arithmetic") {
  FieldSpec f(5);
  CHECK(f.add(3, 4) == 2);
  CHECK(f.sub(1, 3) == 3);
  CHECK(f.mul(4, 4) == 1);
  for (Scalar a = 1; a < 5; ++a) CHECK(f.mul(a, f.inv(a)) == 1);
  CHECK(f.from_int(-7) == 3);
  CHECK_THROWS(FieldSpec(4));
  CHECK_THROWS(FieldSpec(1));
  CHECK(is_prime(251));
  CHECK_FALSE(is_prime(91));
}

TEST_CASE("rref and rank") {
  FieldSpec f2(2), f3(3);
  auto dup = ExactMatrix::from_ints(f2, {{1, 1}, {1, 1}});
  auto r = rref(dup);
  CHECK(r.rank() == 1);
  CHECK(r.pivots == std::vector<std::size_t>{0});

  auto id = ExactMatrix::identity(f3, 3);
  auto ri = rref(id);
  CHECK(ri.form == id);
  CHECK(ri.pivots == std::vector<std::size_t>{0, 1, 2});

  ExactMatrix z(f2, 2, 5);
  CHECK(rref(z).pivots.empty());
  CHECK(rank(z) == 0);
}

TEST_CASE("kernels") {
  FieldSpec f2(2);
  CHECK(kernel_basis(ExactMatrix::identity(f2, 4)).empty());
  CHECK(kernel_basis(ExactMatrix(f2, 1, 3)).size() == 3);
  auto k = kernel_basis(ExactMatrix::from_ints(f2, {{1, 1}}));
  REQUIRE(k.size() == 1);
  CHECK(k[0] == Vec{1, 1});
}

TEST_CASE("solve") {
  FieldSpec f2(2), f7(7);
  auto id = ExactMatrix::identity(f7, 3);
  Vec b{3, 0, 6};
  auto s = solve(id, b);
  REQUIRE(s.consistent());
  CHECK(*s.solution == b);

  auto a = ExactMatrix::from_ints(f2, {{1, 1}});
  auto t = solve(a, Vec{1});
  REQUIRE(t.consistent());
  CHECK(*t.solution == Vec{1, 0});
  REQUIRE(t.kernel.size() == 1);
  CHECK(t.kernel[0] == Vec{1, 1});

  CHECK_FALSE(solve(ExactMatrix(f2, 2, 2), Vec{1, 0}).consistent());
}

TEST_CASE("rank against random products") {
  // rank(AB) <= min(rank A, rank B), and invertible factors preserve rank
  std::mt19937 rng(7);
  for (unsigned p : {2u, 3u, 5u}) {
    FieldSpec f(p);
    for (int trial = 0; trial < 20; ++trial) {
      ExactMatrix a(f, 6, 4), b(f, 4, 5);
      for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 4; ++j) a.set(i, j, Scalar(rng() % p));
      for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 5; ++j) b.set(i, j, Scalar(rng() % p));
      auto ab = a * b;
      CHECK(rank(ab) <= std::min(rank(a), rank(b)));
      CHECK(rank(a.transpose()) == rank(a));
      CHECK(kernel_basis(a).size() + rank(a) == a.cols());
      for (auto& v : kernel_basis(a)) {
        auto w = a.apply(v);
        CHECK(std::all_of(w.begin(), w.end(), [](Scalar x) { return x == 0; }));
      }
    }
  }
}

TEST_CASE("subspaces") {
  FieldSpec f2(2);
  auto u = Subspace::span(f2, 2, {{1, 0}});
  auto v = Subspace::span(f2, 2, {{0, 1}});
  CHECK(subspace_intersection(u, v).dim() == 0);
  CHECK(subspace_sum(u, v).dim() == 2);
  CHECK(subspace_intersection(u, u) == u);
  auto full = Subspace::full(f2, 2);
  CHECK(subspace_sum(u, full) == full);
  CHECK(subspace_contains(full, u));
  CHECK_FALSE(subspace_contains(u, v));
  auto w = Subspace::span(f2, 3, {{1, 1, 0}, {0, 1, 1}});
  CHECK(w.contains(Vec{1, 0, 1}));
  CHECK_FALSE(w.contains(Vec{1, 0, 0}));
}
