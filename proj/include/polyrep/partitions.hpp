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

#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace polyrep {

// Weakly decreasing positive parts; trailing zeros are dropped on
// construction.
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts);
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const noexcept { return parts_; }
  int weight() const noexcept;
  std::size_t length() const noexcept { return parts_.size(); }
  bool empty() const noexcept { return parts_.empty(); }
  int operator[](std::size_t i) const noexcept {
    return i < parts_.size() ? parts_[i] : 0;
  }
  // "2,1,1"; the zero partition prints as "0".
  std::string to_string() const;

  auto operator<=>(const Partition&) const = default;

 private:
  std::vector<int> parts_;
};

// A composition: position matters, zeros allowed.
using Tuple = std::vector<int>;

long long ipow(long long base, unsigned e);

bool is_pr_restricted(const Partition& lambda, unsigned p, unsigned r);
bool is_pr_bounded(const Tuple& t, unsigned p, unsigned r);

// Levels [l0, l1, ...] with lambda = sum p^i l_i, each level p-restricted.
// Trailing empty levels are omitted.
std::vector<Partition> p_adic_decomposition(const Partition& lambda, unsigned p);

Partition conjugate(const Partition& lambda);
Partition add(const Partition& a, const Partition& b);
Partition scale(const Partition& a, int k);

// Tuples (d0, ..., dk), trailing zeros trimmed, with sum p^i d_i = d and
// sum_{i<r} p^i d_i < d. Returned in descending lexicographic order.
std::vector<Tuple> enumerate_T_index(int d, unsigned p, unsigned r);

// Descending lexicographic order.
std::vector<Partition> enumerate_partitions(int d, int max_parts);

bool dominates(const Partition& a, const Partition& b);

Partition parse_partition(std::string_view text);
std::string tuple_to_string(const Tuple& t);

}  // namespace polyrep
