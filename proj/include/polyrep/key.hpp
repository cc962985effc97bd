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

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace polyrep {

inline constexpr int kMaxCoords = 16;
inline constexpr int kMaxKeyDegree = 16;

// Torus weight: composition over the coordinates (first n entries used).
using Weight = std::array<std::uint8_t, kMaxCoords>;

struct WeightHash {
  std::size_t operator()(const Weight& w) const noexcept;
};

Weight weight_from(const std::vector<int>& v);
std::vector<int> weight_vector(const Weight& w, int n);
int weight_total(const Weight& w);
std::string weight_to_string(const Weight& w, int n);

// Exponent matrix of an n x n monomial, stored as the sorted multiset of
// its flat positions a*n+b. Requires n <= 16 and degree <= 16.
//
// Ordering is lexicographic on the dense row-major exponent vector, which
// is the reverse of lexicographic order on the sorted position lists.
class ExponentKey {
 public:
  ExponentKey() = default;

  static ExponentKey from_positions(std::vector<int> positions);
  static ExponentKey from_dense(const std::vector<int>& exponents, int n);
  static ExponentKey diagonal(const Weight& mu, int n);

  int degree() const noexcept { return deg_; }
  const std::uint8_t* begin() const noexcept { return pos_.data(); }
  const std::uint8_t* end() const noexcept { return pos_.data() + deg_; }
  int position(int i) const noexcept { return pos_[std::size_t(i)]; }

  std::vector<int> dense(int n) const;
  Weight rowsum(int n) const;
  Weight colsum(int n) const;
  bool is_diagonal(int n) const;
  ExponentKey transpose(int n) const;
  // each position repeated `times` times (substitution x -> x^times)
  ExponentKey repeated(int times) const;
  // positions mapped through a table; result re-sorted
  ExponentKey remapped(const std::vector<int>& table) const;
  std::string to_string(int n) const;

  friend ExponentKey operator+(const ExponentKey& a, const ExponentKey& b);
  friend bool operator==(const ExponentKey& a, const ExponentKey& b) noexcept {
    return a.deg_ == b.deg_ && a.pos_ == b.pos_;
  }
  friend bool operator!=(const ExponentKey& a, const ExponentKey& b) noexcept {
    return !(a == b);
  }
  friend bool operator<(const ExponentKey& a, const ExponentKey& b) noexcept {
    if (a.deg_ != b.deg_) return a.deg_ < b.deg_;
    for (int i = 0; i < a.deg_; ++i)
      if (a.pos_[std::size_t(i)] != b.pos_[std::size_t(i)])
        return a.pos_[std::size_t(i)] > b.pos_[std::size_t(i)];
    return false;
  }

 private:
  std::array<std::uint8_t, kMaxKeyDegree> pos_{};
  std::uint8_t deg_ = 0;
};

struct KeyHash {
  std::size_t operator()(const ExponentKey& k) const noexcept;
};

}  // namespace polyrep
