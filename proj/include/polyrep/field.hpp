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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "polyrep/errors.hpp"

namespace polyrep {

using Scalar = std::uint8_t;
using Vec = std::vector<Scalar>;

// Prime field F_p with p < 256. Elements are residues in [0, p).
class FieldSpec {
 public:
  explicit FieldSpec(unsigned p = 2);

  unsigned p() const noexcept { return p_; }

  Scalar add(Scalar a, Scalar b) const noexcept {
    unsigned s = unsigned(a) + b;
    return Scalar(s >= p_ ? s - p_ : s);
  }
  Scalar sub(Scalar a, Scalar b) const noexcept {
    return Scalar(a >= b ? a - b : a + p_ - b);
  }
  Scalar neg(Scalar a) const noexcept { return Scalar(a == 0 ? 0 : p_ - a); }
  Scalar mul(Scalar a, Scalar b) const noexcept {
    return Scalar((unsigned(a) * b) % p_);
  }
  Scalar inv(Scalar a) const;
  Scalar from_int(long long v) const noexcept {
    long long r = v % static_cast<long long>(p_);
    return Scalar(r < 0 ? r + p_ : r);
  }

  // dst += c * src, elementwise
  void axpy(Scalar* dst, const Scalar* src, Scalar c, std::size_t len) const;

  friend bool operator==(const FieldSpec& a, const FieldSpec& b) noexcept {
    return a.p_ == b.p_;
  }

 private:
  unsigned p_;
  const Scalar* inv_;
};

bool is_prime(unsigned p);

// Dense matrix over F_p. Zero entries are implicit in the sense of the
// public entry iteration; storage is dense row-major.
class ExactMatrix {
 public:
  struct Entry {
    std::size_t row, col;
    Scalar value;
  };

  ExactMatrix() : field_(2) {}
  ExactMatrix(FieldSpec f, std::size_t rows, std::size_t cols);

  static ExactMatrix identity(FieldSpec f, std::size_t n);
  static ExactMatrix from_rows(FieldSpec f, const std::vector<Vec>& rows,
                               std::size_t cols);
  static ExactMatrix from_columns(FieldSpec f, const std::vector<Vec>& cols,
                                  std::size_t rows);
  // Nested initializer rows; values reduced mod p.
  static ExactMatrix from_ints(FieldSpec f,
                               const std::vector<std::vector<long long>>& rows);

  const FieldSpec& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Scalar at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, Scalar v) { data_[r * cols_ + c] = v; }
  void add_to(std::size_t r, std::size_t c, Scalar v) {
    Scalar& x = data_[r * cols_ + c];
    x = field_.add(x, v);
  }
  const Scalar* row(std::size_t r) const { return data_.data() + r * cols_; }
  Scalar* row(std::size_t r) { return data_.data() + r * cols_; }

  Vec row_vec(std::size_t r) const;
  Vec column(std::size_t c) const;
  std::vector<Entry> entries() const;
  std::size_t nonzeros() const;
  bool is_zero() const;

  ExactMatrix transpose() const;
  ExactMatrix operator*(const ExactMatrix& o) const;
  ExactMatrix operator+(const ExactMatrix& o) const;
  ExactMatrix scaled(Scalar c) const;
  Vec apply(const Vec& v) const;
  ExactMatrix submatrix(const std::vector<std::size_t>& rows,
                        const std::vector<std::size_t>& cols) const;

  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ &&
           a.data_ == b.data_;
  }

 private:
  FieldSpec field_;
  std::size_t rows_ = 0, cols_ = 0;
  Vec data_;
};

struct RrefResult {
  ExactMatrix form;
  std::vector<std::size_t> pivots;
  std::size_t rank() const noexcept { return pivots.size(); }
};

RrefResult rref(const ExactMatrix& m);
std::size_t rank(const ExactMatrix& m);
std::vector<Vec> kernel_basis(const ExactMatrix& m);
bool is_invertible(const ExactMatrix& m);

struct SolveResult {
  std::optional<Vec> solution;
  std::vector<Vec> kernel;
  bool consistent() const noexcept { return solution.has_value(); }
};

SolveResult solve(const ExactMatrix& a, const Vec& b);

// Subspace of F_p^ambient kept as a fully reduced echelon basis.
class Subspace {
 public:
  Subspace() : field_(2) {}
  Subspace(FieldSpec f, std::size_t ambient) : field_(f), ambient_(ambient) {}

  static Subspace span(FieldSpec f, std::size_t ambient,
                       const std::vector<Vec>& gens);
  static Subspace full(FieldSpec f, std::size_t ambient);

  const FieldSpec& field() const noexcept { return field_; }
  std::size_t ambient() const noexcept { return ambient_; }
  std::size_t dim() const noexcept { return basis_.size(); }
  const std::vector<Vec>& basis() const noexcept { return basis_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  Vec reduce(Vec v) const;
  bool contains(const Vec& v) const;
  // Returns true when v was not already in the span.
  bool insert(const Vec& v);
  // Coordinates of v (assumed in the span) with respect to basis().
  Vec coordinates(const Vec& v) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  FieldSpec field_;
  std::size_t ambient_ = 0;
  std::vector<Vec> basis_;
  std::vector<std::size_t> pivots_;
};

Subspace subspace_sum(const Subspace& a, const Subspace& b);
Subspace subspace_intersection(const Subspace& a, const Subspace& b);
bool subspace_contains(const Subspace& outer, const Subspace& inner);

}  // namespace polyrep
