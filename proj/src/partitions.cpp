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

#include "polyrep/partitions.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <string>

#include "polyrep/errors.hpp"

namespace polyrep {

Partition::Partition(std::initializer_list<int> parts)
    : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw InvalidArgument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw InvalidArgument("partition parts must be weakly decreasing");
  }
}

int Partition::weight() const noexcept {
  return std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::string Partition::to_string() const {
  if (parts_.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s;
}

long long ipow(long long base, unsigned e) {
  long long r = 1;
  while (e--) r *= base;
  return r;
}

bool is_pr_restricted(const Partition& lambda, unsigned p, unsigned r) {
  const long long q = ipow(p, r);
  const auto& v = lambda.parts();
  for (std::size_t i = 0; i < v.size(); ++i) {
    long long next = i + 1 < v.size() ? v[i + 1] : 0;
    if (v[i] - next >= q) return false;
  }
  return true;
}

bool is_pr_bounded(const Tuple& t, unsigned p, unsigned r) {
  const long long q = ipow(p, r);
  return std::all_of(t.begin(), t.end(), [q](int x) { return x < q; });
}

std::vector<Partition> p_adic_decomposition(const Partition& lambda,
                                            unsigned p) {
  std::vector<Partition> levels;
  std::vector<int> cur = lambda.parts();
  while (!cur.empty()) {
    const std::size_t n = cur.size();
    // level from the differences mod p
    std::vector<int> diff(n), low(n, 0), high(n, 0);
    for (std::size_t i = 0; i < n; ++i)
      diff[i] = cur[i] - (i + 1 < n ? cur[i + 1] : 0);
    int acc = 0, acch = 0;
    for (std::size_t i = n; i-- > 0;) {
      acc += diff[i] % int(p);
      acch += diff[i] / int(p);
      low[i] = acc;
      high[i] = acch;
    }
    levels.emplace_back(low);
    cur = Partition(high).parts();
  }
  // recomposition check
  std::vector<int> sum(lambda.length(), 0);
  long long q = 1;
  for (const auto& l : levels) {
    if (!is_pr_restricted(l, p, 1))
      throw AssertFailure("p-adic level not restricted");
    for (std::size_t i = 0; i < l.length(); ++i) {
      if (i >= sum.size()) throw AssertFailure("p-adic level too long");
      sum[i] += int(q * l[i]);
    }
    q *= p;
  }
  if (sum != lambda.parts()) throw AssertFailure("p-adic recomposition failed");
  while (!levels.empty() && levels.back().empty()) levels.pop_back();
  return levels;
}

Partition conjugate(const Partition& lambda) {
  std::vector<int> out;
  if (lambda.empty()) return Partition();
  for (int j = 0; j < lambda[0]; ++j) {
    int c = 0;
    for (int x : lambda.parts())
      if (x > j) ++c;
    out.push_back(c);
  }
  return Partition(out);
}

Partition add(const Partition& a, const Partition& b) {
  std::vector<int> v(std::max(a.length(), b.length()), 0);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a[i] + b[i];
  return Partition(v);
}

Partition scale(const Partition& a, int k) {
  std::vector<int> v = a.parts();
  for (int& x : v) x *= k;
  return Partition(v);
}

namespace {

void t_index_rec(int remaining, unsigned p, std::size_t level, int max_level,
                 Tuple& cur, std::vector<Tuple>& out) {
  if (int(level) > max_level) {
    if (remaining == 0) out.push_back(cur);
    return;
  }
  const long long w = ipow(p, unsigned(level));
  for (int x = int(remaining / w); x >= 0; --x) {
    cur[level] = x;
    t_index_rec(int(remaining - x * w), p, level + 1, max_level, cur, out);
  }
  cur[level] = 0;
}

}  // namespace

std::vector<Tuple> enumerate_T_index(int d, unsigned p, unsigned r) {
  std::vector<Tuple> all, out;
  if (d < 0) return out;
  int max_level = 0;
  while (ipow(p, unsigned(max_level + 1)) <= d) ++max_level;
  Tuple cur(std::size_t(max_level) + 1, 0);
  t_index_rec(d, p, 0, max_level, cur, all);
  for (Tuple t : all) {
    long long low = 0;
    for (std::size_t i = 0; i < t.size() && i < r; ++i)
      low += ipow(p, unsigned(i)) * t[i];
    if (low >= d) continue;
    while (!t.empty() && t.back() == 0) t.pop_back();
    out.push_back(t);
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

void partitions_rec(int remaining, int max_part, int parts_left,
                    std::vector<int>& cur, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  if (parts_left == 0) return;
  for (int x = std::min(remaining, max_part); x >= 1; --x) {
    cur.push_back(x);
    partitions_rec(remaining - x, x, parts_left - 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int d, int max_parts) {
  std::vector<Partition> out;
  std::vector<int> cur;
  if (d < 0) return out;
  partitions_rec(d, d, max_parts, cur, out);
  return out;
}

bool dominates(const Partition& a, const Partition& b) {
  if (a.weight() != b.weight()) return false;
  int sa = 0, sb = 0;
  std::size_t n = std::max(a.length(), b.length());
  for (std::size_t i = 0; i < n; ++i) {
    sa += a[i];
    sb += b[i];
    if (sa < sb) return false;
  }
  return true;
}

Partition parse_partition(std::string_view text) {
  std::vector<int> parts;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
  };
  skip();
  if (i == text.size()) return Partition();
  while (true) {
    skip();
    if (i == text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
      throw ParseError("expected a nonnegative integer", i + 1);
    int v = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
      v = v * 10 + (text[i++] - '0');
    parts.push_back(v);
    skip();
    if (i == text.size()) break;
    if (text[i] != ',') throw ParseError("expected ','", i + 1);
    ++i;
  }
  for (std::size_t k = 1; k < parts.size(); ++k)
    if (parts[k] > parts[k - 1])
      throw ParseError("parts must be weakly decreasing", 1);
  return Partition(parts);
}

std::string tuple_to_string(const Tuple& t) {
  std::string s = "(";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(t[i]);
  }
  return s + ")";
}

}  // namespace polyrep
