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

#include "polyrep/field.hpp"

#include <algorithm>
#include <array>
#include <mutex>

namespace polyrep {

bool is_prime(unsigned p) {
  if (p < 2) return false;
  for (unsigned q = 2; q * q <= p; ++q)
    if (p % q == 0) return false;
  return true;
}

namespace {

const Scalar* inverse_table(unsigned p) {
  static std::array<std::array<Scalar, 256>, 256> tables{};
  static std::array<std::once_flag, 256> flags;
  std::call_once(flags[p], [p] {
    auto& t = tables[p];
    for (unsigned a = 1; a < p; ++a)
      for (unsigned b = 1; b < p; ++b)
        if ((a * b) % p == 1) t[a] = Scalar(b);
  });
  return tables[p].data();
}

}  // namespace

FieldSpec::FieldSpec(unsigned p) : p_(p) {
  if (!is_prime(p)) throw InvalidArgument("field characteristic must be prime");
  if (p > 251) throw InvalidArgument("characteristic must be below 256");
  inv_ = inverse_table(p);
}

Scalar FieldSpec::inv(Scalar a) const {
  if (a == 0 || a >= p_) throw InvalidArgument("inverse of zero");
  return inv_[a];
}

void FieldSpec::axpy(Scalar* dst, const Scalar* src, Scalar c,
                     std::size_t len) const {
  if (c == 0) return;
  if (p_ == 2) {
    for (std::size_t i = 0; i < len; ++i) dst[i] ^= src[i];
    return;
  }
  std::array<Scalar, 256> t;
  for (unsigned x = 0; x < p_; ++x) t[x] = Scalar((x * c) % p_);
  const unsigned p = p_;
  for (std::size_t i = 0; i < len; ++i) {
    unsigned s = unsigned(dst[i]) + t[src[i]];
    dst[i] = Scalar(s >= p ? s - p : s);
  }
}

// ---------------------------------------------------------------- matrix

ExactMatrix::ExactMatrix(FieldSpec f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

ExactMatrix ExactMatrix::identity(FieldSpec f, std::size_t n) {
  ExactMatrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

ExactMatrix ExactMatrix::from_rows(FieldSpec f, const std::vector<Vec>& rows,
                                   std::size_t cols) {
  ExactMatrix m(f, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DimensionMismatch("row length");
    std::copy(rows[r].begin(), rows[r].end(), m.row(r));
  }
  return m;
}

ExactMatrix ExactMatrix::from_columns(FieldSpec f, const std::vector<Vec>& cols,
                                      std::size_t rows) {
  ExactMatrix m(f, rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != rows) throw DimensionMismatch("column length");
    for (std::size_t r = 0; r < rows; ++r) m.set(r, c, cols[c][r]);
  }
  return m;
}

ExactMatrix ExactMatrix::from_ints(
    FieldSpec f, const std::vector<std::vector<long long>>& rows) {
  std::size_t cols = rows.empty() ? 0 : rows[0].size();
  ExactMatrix m(f, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DimensionMismatch("ragged rows");
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, f.from_int(rows[r][c]));
  }
  return m;
}

Vec ExactMatrix::row_vec(std::size_t r) const {
  return Vec(row(r), row(r) + cols_);
}

Vec ExactMatrix::column(std::size_t c) const {
  Vec v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = at(r, c);
  return v;
}

std::vector<ExactMatrix::Entry> ExactMatrix::entries() const {
  std::vector<Entry> out;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (Scalar v = at(r, c)) out.push_back({r, c, v});
  return out;
}

std::size_t ExactMatrix::nonzeros() const {
  return std::size_t(std::count_if(data_.begin(), data_.end(),
                                   [](Scalar v) { return v != 0; }));
}

bool ExactMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(),
                     [](Scalar v) { return v == 0; });
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.set(c, r, at(r, c));
  return t;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& o) const {
  if (cols_ != o.rows_) throw DimensionMismatch("matrix product");
  if (!(field_ == o.field_)) throw ContextMismatch("field mismatch");
  ExactMatrix out(field_, rows_, o.cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols_; ++k)
      if (Scalar a = at(r, k)) field_.axpy(out.row(r), o.row(k), a, o.cols_);
  return out;
}

ExactMatrix ExactMatrix::operator+(const ExactMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("sum");
  ExactMatrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i)
    out.data_[i] = field_.add(data_[i], o.data_[i]);
  return out;
}

ExactMatrix ExactMatrix::scaled(Scalar c) const {
  ExactMatrix out = *this;
  for (auto& x : out.data_) x = field_.mul(x, c);
  return out;
}

Vec ExactMatrix::apply(const Vec& v) const {
  if (v.size() != cols_) throw DimensionMismatch("matrix-vector product");
  Vec out(rows_, 0);
  for (std::size_t r = 0; r < rows_; ++r) {
    unsigned acc = 0;
    const Scalar* rr = row(r);
    for (std::size_t c = 0; c < cols_; ++c) acc += unsigned(rr[c]) * v[c];
    out[r] = Scalar(acc % field_.p());
  }
  return out;
}

ExactMatrix ExactMatrix::submatrix(const std::vector<std::size_t>& rs,
                                   const std::vector<std::size_t>& cs) const {
  ExactMatrix out(field_, rs.size(), cs.size());
  for (std::size_t i = 0; i < rs.size(); ++i)
    for (std::size_t j = 0; j < cs.size(); ++j) out.set(i, j, at(rs[i], cs[j]));
  return out;
}

// ---------------------------------------------------------------- rref

namespace {

RrefResult rref_gf2(const ExactMatrix& m) {
  const std::size_t R = m.rows(), C = m.cols(), W = (C + 63) / 64;
  std::vector<std::uint64_t> a(R * W, 0);
  for (std::size_t r = 0; r < R; ++r) {
    const Scalar* src = m.row(r);
    std::uint64_t* dst = a.data() + r * W;
    for (std::size_t c = 0; c < C; ++c)
      if (src[c]) dst[c >> 6] |= std::uint64_t(1) << (c & 63);
  }
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < C && rank < R; ++c) {
    const std::size_t w = c >> 6;
    const std::uint64_t bit = std::uint64_t(1) << (c & 63);
    std::size_t piv = R;
    for (std::size_t r = rank; r < R; ++r)
      if (a[r * W + w] & bit) {
        piv = r;
        break;
      }
    if (piv == R) continue;
    if (piv != rank)
      std::swap_ranges(a.begin() + piv * W, a.begin() + (piv + 1) * W,
                       a.begin() + rank * W);
    const std::uint64_t* pr = a.data() + rank * W;
    for (std::size_t r = 0; r < R; ++r) {
      if (r == rank) continue;
      std::uint64_t* rr = a.data() + r * W;
      if (rr[w] & bit)
        for (std::size_t k = w; k < W; ++k) rr[k] ^= pr[k];
    }
    pivots.push_back(c);
    ++rank;
  }
  ExactMatrix out(m.field(), R, C);
  for (std::size_t r = 0; r < rank; ++r) {
    const std::uint64_t* src = a.data() + r * W;
    Scalar* dst = out.row(r);
    for (std::size_t c = 0; c < C; ++c) dst[c] = (src[c >> 6] >> (c & 63)) & 1;
  }
  return {std::move(out), std::move(pivots)};
}

RrefResult rref_generic(const ExactMatrix& m) {
  const FieldSpec& f = m.field();
  ExactMatrix a = m;
  const std::size_t R = a.rows(), C = a.cols();
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < C && rank < R; ++c) {
    std::size_t piv = R;
    for (std::size_t r = rank; r < R; ++r)
      if (a.at(r, c)) {
        piv = r;
        break;
      }
    if (piv == R) continue;
    if (piv != rank) std::swap_ranges(a.row(piv), a.row(piv) + C, a.row(rank));
    Scalar* pr = a.row(rank);
    Scalar s = f.inv(pr[c]);
    for (std::size_t k = c; k < C; ++k) pr[k] = f.mul(pr[k], s);
    for (std::size_t r = 0; r < R; ++r) {
      if (r == rank) continue;
      Scalar x = a.at(r, c);
      if (x) f.axpy(a.row(r) + c, pr + c, f.neg(x), C - c);
    }
    pivots.push_back(c);
    ++rank;
  }
  return {std::move(a), std::move(pivots)};
}

}  // namespace

RrefResult rref(const ExactMatrix& m) {
  return m.field().p() == 2 ? rref_gf2(m) : rref_generic(m);
}

std::size_t rank(const ExactMatrix& m) {
  if (m.rows() > m.cols() * 2 && m.cols() > 0) return rref(m.transpose()).rank();
  return rref(m).rank();
}

bool is_invertible(const ExactMatrix& m) {
  return m.rows() == m.cols() && rank(m) == m.rows();
}

std::vector<Vec> kernel_basis(const ExactMatrix& m) {
  const FieldSpec& f = m.field();
  RrefResult rr = rref(m);
  const std::size_t C = m.cols();
  std::vector<char> is_pivot(C, 0);
  for (auto c : rr.pivots) is_pivot[c] = 1;
  std::vector<Vec> out;
  for (std::size_t fc = 0; fc < C; ++fc) {
    if (is_pivot[fc]) continue;
    Vec v(C, 0);
    v[fc] = 1;
    for (std::size_t i = 0; i < rr.pivots.size(); ++i)
      v[rr.pivots[i]] = f.neg(rr.form.at(i, fc));
    out.push_back(std::move(v));
  }
  return out;
}

SolveResult solve(const ExactMatrix& a, const Vec& b) {
  if (b.size() != a.rows()) throw DimensionMismatch("solve: rhs length");
  const FieldSpec& f = a.field();
  const std::size_t C = a.cols();
  ExactMatrix aug(f, a.rows(), C + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    std::copy(a.row(r), a.row(r) + C, aug.row(r));
    aug.set(r, C, b[r]);
  }
  RrefResult rr = rref(aug);
  SolveResult out;
  if (!rr.pivots.empty() && rr.pivots.back() == C) {
    out.kernel = kernel_basis(a);
    return out;
  }
  Vec x(C, 0);
  for (std::size_t i = 0; i < rr.pivots.size(); ++i)
    x[rr.pivots[i]] = rr.form.at(i, C);
  out.solution = std::move(x);
  out.kernel = kernel_basis(a);
  return out;
}

// ---------------------------------------------------------------- subspace

Subspace Subspace::span(FieldSpec f, std::size_t ambient,
                        const std::vector<Vec>& gens) {
  Subspace s(f, ambient);
  if (gens.empty()) return s;
  RrefResult rr = rref(ExactMatrix::from_rows(f, gens, ambient));
  for (std::size_t i = 0; i < rr.rank(); ++i) {
    s.basis_.push_back(rr.form.row_vec(i));
    s.pivots_.push_back(rr.pivots[i]);
  }
  return s;
}

Subspace Subspace::full(FieldSpec f, std::size_t ambient) {
  Subspace s(f, ambient);
  for (std::size_t i = 0; i < ambient; ++i) {
    Vec v(ambient, 0);
    v[i] = 1;
    s.basis_.push_back(std::move(v));
    s.pivots_.push_back(i);
  }
  return s;
}

Vec Subspace::reduce(Vec v) const {
  if (v.size() != ambient_) throw DimensionMismatch("subspace ambient");
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    Scalar x = v[pivots_[i]];
    if (x) field_.axpy(v.data(), basis_[i].data(), field_.neg(x), ambient_);
  }
  return v;
}

bool Subspace::contains(const Vec& v) const {
  Vec r = reduce(v);
  return std::all_of(r.begin(), r.end(), [](Scalar x) { return x == 0; });
}

bool Subspace::insert(const Vec& v0) {
  Vec v = reduce(v0);
  std::size_t q = 0;
  while (q < ambient_ && v[q] == 0) ++q;
  if (q == ambient_) return false;
  Scalar s = field_.inv(v[q]);
  for (auto& x : v) x = field_.mul(x, s);
  for (auto& b : basis_)
    if (Scalar x = b[q]) field_.axpy(b.data(), v.data(), field_.neg(x), ambient_);
  auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), q);
  auto idx = pos - pivots_.begin();
  pivots_.insert(pos, q);
  basis_.insert(basis_.begin() + idx, std::move(v));
  return true;
}

Vec Subspace::coordinates(const Vec& v) const {
  Vec c(basis_.size());
  for (std::size_t i = 0; i < basis_.size(); ++i) c[i] = v[pivots_[i]];
  return c;
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient()) throw DimensionMismatch("subspace sum");
  std::vector<Vec> gens = a.basis();
  gens.insert(gens.end(), b.basis().begin(), b.basis().end());
  return Subspace::span(a.field(), a.ambient(), gens);
}

Subspace subspace_intersection(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient())
    throw DimensionMismatch("subspace intersection");
  const FieldSpec& f = a.field();
  const std::size_t n = a.ambient(), da = a.dim(), db = b.dim();
  if (da == 0 || db == 0) return Subspace(f, n);
  ExactMatrix m(f, n, da + db);
  for (std::size_t j = 0; j < da; ++j)
    for (std::size_t r = 0; r < n; ++r) m.set(r, j, a.basis()[j][r]);
  for (std::size_t j = 0; j < db; ++j)
    for (std::size_t r = 0; r < n; ++r) m.set(r, da + j, b.basis()[j][r]);
  std::vector<Vec> gens;
  for (const Vec& k : kernel_basis(m)) {
    Vec v(n, 0);
    for (std::size_t j = 0; j < da; ++j)
      if (k[j]) f.axpy(v.data(), a.basis()[j].data(), k[j], n);
    gens.push_back(std::move(v));
  }
  return Subspace::span(f, n, gens);
}

bool subspace_contains(const Subspace& outer, const Subspace& inner) {
  for (const Vec& v : inner.basis())
    if (!outer.contains(v)) return false;
  return true;
}

}  // namespace polyrep
