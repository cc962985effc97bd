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
#include "polyrep/partitions.hpp"

using namespace polyrep;

TEST_CASE("partition normal form") {
  Partition a(std::vector<int>{3, 1, 0, 0});
  CHECK(a.length() == 2);
  CHECK(a.weight() == 4);
  CHECK(a.to_string() == "3,1");
  CHECK(Partition().to_string() == "0");
  CHECK_THROWS(Partition(std::vector<int>{1, 2}));
  CHECK(parse_partition("2,1,1") == Partition{2, 1, 1});
}

TEST_CASE("restricted partitions and bounded tuples") {
  CHECK(is_pr_restricted(Partition{2, 1}, 2, 1));
  CHECK_FALSE(is_pr_restricted(Partition{3, 1}, 2, 1));
  CHECK(is_pr_restricted(Partition{}, 3, 2));
  CHECK(is_pr_restricted(Partition{3, 1}, 2, 2));
  CHECK(is_pr_bounded({1, 0, 1}, 2, 1));
  CHECK_FALSE(is_pr_bounded({2, 1}, 2, 1));
  CHECK(is_pr_bounded({0, 0}, 2, 0));
  CHECK_FALSE(is_pr_bounded({1}, 2, 0));
}

TEST_CASE("p-adic decomposition") {
  auto d = p_adic_decomposition(Partition{3, 1}, 2);
  REQUIRE(d.size() == 2);
  CHECK(d[0] == Partition{1, 1});
  CHECK(d[1] == Partition{1});
  auto e = p_adic_decomposition(Partition{2, 1}, 2);
  REQUIRE(e.size() == 1);
  CHECK(e[0] == Partition{2, 1});
  auto g = p_adic_decomposition(Partition{4, 2}, 2);
  REQUIRE(g.size() == 2);
  CHECK(g[0].empty());
  CHECK(g[1] == Partition{2, 1});
  // reassembly
  for (unsigned p : {2u, 3u})
    for (int n = 1; n <= 7; ++n)
      for (auto& lam : enumerate_partitions(n, n)) {
        Partition acc;
        int q = 1;
        for (auto& l : p_adic_decomposition(lam, p)) {
          CHECK(is_pr_restricted(l, p, 1));
          acc = add(acc, scale(l, q));
          q *= int(p);
        }
        CHECK(acc == lam);
      }
}

TEST_CASE("conjugate") {
  CHECK(conjugate(Partition{3, 1}) == Partition{2, 1, 1});
  CHECK(conjugate(Partition{1, 1, 1}) == Partition{3});
  CHECK(conjugate(Partition{}) == Partition{});
  for (auto& lam : enumerate_partitions(6, 6)) CHECK(conjugate(conjugate(lam)) == lam);
}

TEST_CASE("T index tuples") {
  auto t = enumerate_T_index(4, 2, 1);
  CHECK(t.size() == 3);
  CHECK(std::find(t.begin(), t.end(), Tuple{2, 1}) != t.end());
  CHECK(std::find(t.begin(), t.end(), Tuple{0, 2}) != t.end());
  CHECK(std::find(t.begin(), t.end(), Tuple{0, 0, 1}) != t.end());
  CHECK(enumerate_T_index(4, 2, 2) == std::vector<Tuple>{{0, 0, 1}});
  CHECK(enumerate_T_index(1, 2, 1).empty());
}

TEST_CASE("partition enumeration") {
  CHECK(enumerate_partitions(3, 3) ==
        std::vector<Partition>{Partition{3}, Partition{2, 1}, Partition{1, 1, 1}});
  CHECK(enumerate_partitions(0, 2) == std::vector<Partition>{Partition{}});
  CHECK(enumerate_partitions(4, 2) ==
        std::vector<Partition>{Partition{4}, Partition{3, 1}, Partition{2, 2}});
  // partition numbers
  const std::size_t counts[] = {1, 1, 2, 3, 5, 7, 11, 15, 22};
  for (int n = 0; n <= 8; ++n) CHECK(enumerate_partitions(n, n).size() == counts[n]);
  CHECK(dominates(Partition{3, 1}, Partition{2, 2}));
  CHECK_FALSE(dominates(Partition{2, 2}, Partition{3, 1}));
}
