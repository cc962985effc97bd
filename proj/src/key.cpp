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

#include "polyrep/key.hpp"

#include <algorithm>

#include "polyrep/errors.hpp"

namespace polyrep {

std::size_t WeightHash::operator()(const Weight& w) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (auto x : w) h = (h ^ x) * 1099511628211ull;
  return h;
}

Weight weight_from(const std::vector<int>& v) {
  if (v.size() > std::size_t(kMaxCoords)) throw InvalidArgument("weight too long");
  Weight w{};
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] < 0 || v[i] > 255) throw BadWeight("weight entry out of range");
    w[i] = std::uint8_t(v[i]);
  }
  return w;
}

std::vector<int> weight_vector(const Weight& w, int n) {
  return std::vector<int>(w.begin(), w.begin() + n);
}

int weight_total(const Weight& w) {
  int s = 0;
  for (auto x : w) s += x;
  return s;
}

std::string weight_to_string(const Weight& w, int n) {
  std::string s = "(";
  for (int i = 0; i < n; ++i) {
    if (i) s += ',';
    s += std::to_string(w[i]);
  }
  return s + ")";
}

ExponentKey ExponentKey::from_positions(std::vector<int> positions) {
  if (positions.size() > std::size_t(kMaxKeyDegree))
    throw BudgetExceeded("exponent key degree above 16");
  std::sort(positions.begin(), positions.end());
  ExponentKey k;
  k.deg_ = std::uint8_t(positions.size());
  for (std::size_t i = 0; i < positions.size(); ++i) {
    if (positions[i] < 0 || positions[i] >= kMaxCoords * kMaxCoords)
      throw InvalidArgument("exponent key position out of range");
    k.pos_[i] = std::uint8_t(positions[i]);
  }
  return k;
}

ExponentKey ExponentKey::from_dense(const std::vector<int>& e, int n) {
  if (int(e.size()) != n * n) throw FormatError("exponent matrix size");
  std::vector<int> pos;
  for (int i = 0; i < n * n; ++i) {
    if (e[i] < 0) throw FormatError("negative exponent");
    for (int c = 0; c < e[i]; ++c) pos.push_back(i);
  }
  return from_positions(std::move(pos));
}

ExponentKey ExponentKey::diagonal(const Weight& mu, int n) {
  std::vector<int> pos;
  for (int i = 0; i < n; ++i)
    for (int c = 0; c < mu[i]; ++c) pos.push_back(i * n + i);
  return from_positions(std::move(pos));
}

std::vector<int> ExponentKey::dense(int n) const {
  std::vector<int> e(std::size_t(n * n), 0);
  for (int i = 0; i < deg_; ++i) ++e[pos_[i]];
  return e;
}

Weight ExponentKey::rowsum(int n) const {
  Weight w{};
  for (int i = 0; i < deg_; ++i) ++w[std::size_t(pos_[i] / n)];
  return w;
}

Weight ExponentKey::colsum(int n) const {
  Weight w{};
  for (int i = 0; i < deg_; ++i) ++w[std::size_t(pos_[i] % n)];
  return w;
}

bool ExponentKey::is_diagonal(int n) const {
  for (int i = 0; i < deg_; ++i) {
    int q = pos_[i];
    if (q / n != q % n) return false;
  }
  return true;
}

ExponentKey ExponentKey::transpose(int n) const {
  std::vector<int> pos(deg_);
  for (int i = 0; i < deg_; ++i) {
    int q = pos_[i];
    pos[i] = (q % n) * n + q / n;
  }
  return from_positions(std::move(pos));
}

ExponentKey ExponentKey::repeated(int times) const {
  std::vector<int> pos;
  for (int i = 0; i < deg_; ++i)
    for (int t = 0; t < times; ++t) pos.push_back(pos_[i]);
  return from_positions(std::move(pos));
}

ExponentKey ExponentKey::remapped(const std::vector<int>& table) const {
  std::vector<int> pos(deg_);
  for (int i = 0; i < deg_; ++i) pos[i] = table[pos_[i]];
  return from_positions(std::move(pos));
}

std::string ExponentKey::to_string(int n) const {
  std::string s;
  auto e = dense(n);
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(e[i]);
  }
  return s;
}

ExponentKey operator+(const ExponentKey& a, const ExponentKey& b) {
  if (a.deg_ + b.deg_ > kMaxKeyDegree)
    throw BudgetExceeded("exponent key degree above 16");
  ExponentKey k;
  k.deg_ = std::uint8_t(a.deg_ + b.deg_);
  std::merge(a.begin(), a.end(), b.begin(), b.end(), k.pos_.begin());
  return k;
}

std::size_t KeyHash::operator()(const ExponentKey& k) const noexcept {
  std::size_t h = 1469598103934665603ull ^ std::size_t(k.degree());
  for (auto x : k) h = (h ^ x) * 1099511628211ull;
  return h;
}

}  // namespace polyrep
