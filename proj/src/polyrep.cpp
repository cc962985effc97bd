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

#include "polyrep/polyrep.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "polyrep/errors.hpp"
#include "polyrep/partitions.hpp"

namespace polyrep {

RepContext::RepContext(FieldSpec f, int n_) : field(f), n(n_) {
  if (n < 1) throw InvalidArgument("evaluation dimension must be at least 1");
  if (n > kMaxCoords) throw BudgetExceeded("evaluation dimension above 16");
}

int Layout::coords() const noexcept {
  return std::accumulate(blocks.begin(), blocks.end(), 0);
}

int Layout::block_of(int coord) const noexcept {
  int start = 0;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (coord < start + blocks[b]) return int(b);
    start += blocks[b];
  }
  return -1;
}

int Layout::block_start(int b) const noexcept {
  int start = 0;
  for (int i = 0; i < b; ++i) start += blocks[i];
  return start;
}

// ---------------------------------------------------------------- PolyRep

PolyRep::PolyRep() : field_(2), layout_(Layout::single(1)) { index(); }

PolyRep::PolyRep(FieldSpec f, Layout layout, int degree,
                 std::vector<Weight> weights, std::vector<CoeffEntry> entries,
                 std::string label)
    : field_(f),
      layout_(std::move(layout)),
      coords_(layout_.coords()),
      degree_(degree),
      weights_(std::move(weights)),
      entries_(std::move(entries)),
      label_(std::move(label)) {
  if (coords_ < 1 || coords_ > kMaxCoords)
    throw BudgetExceeded("coordinate count must lie in 1..16");
  if (degree_ < 0 || degree_ > kMaxKeyDegree)
    throw BudgetExceeded("degree must lie in 0..16");
  const std::size_t d = weights_.size();
  for (const Weight& w : weights_) {
    for (int i = coords_; i < kMaxCoords; ++i)
      if (w[i]) throw AssertFailure("weight outside coordinates");
    if (weight_total(w) != degree_) throw AssertFailure("weight total != degree");
  }
  std::sort(entries_.begin(), entries_.end(),
            [](const CoeffEntry& a, const CoeffEntry& b) {
              if (a.key != b.key) return a.key < b.key;
              if (a.row != b.row) return a.row < b.row;
              return a.col < b.col;
            });
  std::size_t out = 0;
  for (std::size_t i = 0; i < entries_.size();) {
    CoeffEntry e = entries_[i];
    std::size_t j = i + 1;
    while (j < entries_.size() && entries_[j].key == e.key &&
           entries_[j].row == e.row && entries_[j].col == e.col) {
      e.value = field_.add(e.value, entries_[j].value);
      ++j;
    }
    if (e.value % field_.p()) {
      e.value = Scalar(e.value % field_.p());
      entries_[out++] = e;
    }
    i = j;
  }
  entries_.resize(out);

  std::vector<int> diag_count(d, 0);
  for (const CoeffEntry& e : entries_) {
    if (e.row >= d || e.col >= d) throw AssertFailure("entry index out of range");
    if (e.key.degree() != degree_) throw AssertFailure("entry key degree");
    for (int q : e.key)
      if (layout_.block_of(q / coords_) != layout_.block_of(q % coords_))
        throw AssertFailure("key not block diagonal");
    if (e.key.rowsum(coords_) != weights_[e.row] ||
        e.key.colsum(coords_) != weights_[e.col])
      throw AssertFailure("entry weights inconsistent with key");
    if (e.key.is_diagonal(coords_)) {
      if (e.row != e.col || e.value != 1)
        throw AssertFailure("diagonal key is not a weight projector");
      ++diag_count[e.row];
    }
  }
  for (std::size_t b = 0; b < d; ++b)
    if (diag_count[b] != 1) throw AssertFailure("counit law fails");
  index();
}

void PolyRep::index() {
  const std::size_t d = weights_.size();
  col_ptr_.assign(d + 1, 0);
  for (const auto& e : entries_) ++col_ptr_[e.col + 1];
  for (std::size_t c = 0; c < d; ++c) col_ptr_[c + 1] += col_ptr_[c];
  col_idx_.assign(entries_.size(), 0);
  std::vector<std::uint32_t> fill(col_ptr_.begin(), col_ptr_.end() - 1);
  for (std::size_t i = 0; i < entries_.size(); ++i)
    col_idx_[fill[entries_[i].col]++] = std::uint32_t(i);

  blocks_.clear();
  std::vector<std::uint32_t> order(d);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::uint32_t a, std::uint32_t b) {
                     return weights_[a] < weights_[b];
                   });
  basis_block_.assign(d, 0);
  basis_local_.assign(d, 0);
  for (std::uint32_t b : order) {
    if (blocks_.empty() || blocks_.back().weight != weights_[b])
      blocks_.push_back({weights_[b], {}});
    basis_block_[b] = std::uint32_t(blocks_.size() - 1);
    basis_local_[b] = std::uint32_t(blocks_.back().basis.size());
    blocks_.back().basis.push_back(b);
  }
}

bool PolyRep::same_entries(const PolyRep& o) const {
  if (entries_.size() != o.entries_.size()) return false;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    const auto &a = entries_[i], &b = o.entries_[i];
    if (a.key != b.key || a.row != b.row || a.col != b.col || a.value != b.value)
      return false;
  }
  return true;
}

RepContext PolyRep::ctx() const {
  if (layout_.blocks.size() != 1)
    throw ContextMismatch("module lives on a block layout");
  return RepContext(field_, coords_);
}

std::pair<std::size_t, std::size_t> PolyRep::key_range(
    const ExponentKey& k) const {
  auto lo = std::lower_bound(
      entries_.begin(), entries_.end(), k,
      [](const CoeffEntry& e, const ExponentKey& key) { return e.key < key; });
  auto hi = std::upper_bound(
      lo, entries_.end(), k,
      [](const ExponentKey& key, const CoeffEntry& e) { return key < e.key; });
  return {std::size_t(lo - entries_.begin()), std::size_t(hi - entries_.begin())};
}

ExactMatrix PolyRep::coeff(const ExponentKey& k) const {
  ExactMatrix m(field_, dim(), dim());
  auto [lo, hi] = key_range(k);
  for (std::size_t i = lo; i < hi; ++i)
    m.set(entries_[i].row, entries_[i].col, entries_[i].value);
  return m;
}

std::vector<ExponentKey> PolyRep::keys() const {
  std::vector<ExponentKey> out;
  for (const auto& e : entries_)
    if (out.empty() || out.back() != e.key) out.push_back(e.key);
  return out;
}

int PolyRep::find_weight(const Weight& w) const {
  auto it = std::lower_bound(
      blocks_.begin(), blocks_.end(), w,
      [](const WeightBlock& b, const Weight& x) { return b.weight < x; });
  if (it == blocks_.end() || it->weight != w) return -1;
  return int(it - blocks_.begin());
}

std::vector<int> PolyRep::block_degrees() const {
  std::vector<int> out(layout_.blocks.size(), 0);
  if (weights_.empty()) {
    if (out.size() == 1) out[0] = degree_;
    return out;
  }
  for (int c = 0; c < coords_; ++c)
    out[std::size_t(layout_.block_of(c))] += weights_[0][c];
  return out;
}

// ---------------------------------------------------------------- builders

namespace {

long long factorial(int n) {
  long long r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

// Nondecreasing sequences of length a over [0, n), in lexicographic order,
// returned as exponent vectors.
std::vector<Weight> multisets(int a, int n) {
  std::vector<Weight> out;
  std::vector<int> seq(std::size_t(a), 0);
  std::function<void(int, int)> rec = [&](int pos, int start) {
    if (pos == a) {
      Weight w{};
      for (int x : seq) ++w[x];
      out.push_back(w);
      return;
    }
    for (int x = start; x < n; ++x) {
      seq[pos] = x;
      rec(pos + 1, x);
    }
  };
  rec(0, 0);
  return out;
}

std::vector<Weight> subsets(int a, int n) {
  std::vector<Weight> out;
  std::vector<int> seq(std::size_t(a), 0);
  std::function<void(int, int)> rec = [&](int pos, int start) {
    if (pos == a) {
      Weight w{};
      for (int x : seq) w[x] = 1;
      out.push_back(w);
      return;
    }
    for (int x = start; x < n; ++x) {
      seq[pos] = x;
      rec(pos + 1, x + 1);
    }
  };
  rec(0, 0);
  return out;
}

using WeightIndex = std::unordered_map<Weight, std::uint32_t, WeightHash>;

WeightIndex index_of(const std::vector<Weight>& ws) {
  WeightIndex m;
  for (std::size_t i = 0; i < ws.size(); ++i) m[ws[i]] = std::uint32_t(i);
  return m;
}

// Calls f(positions, E as dense n x n) for every exponent matrix with the
// given column sums.
template <class F>
void for_each_with_colsum(const Weight& alpha, int n, F&& f) {
  std::vector<int> E(std::size_t(n * n), 0);
  std::vector<int> pos;
  std::function<void(int, int, int)> rec = [&](int col, int row, int left) {
    if (col == n) {
      f(E);
      return;
    }
    if (row == n - 1) {
      E[row * n + col] = left;
      int nl = col + 1 < n ? alpha[col + 1] : 0;
      rec(col + 1, 0, nl);
      E[row * n + col] = 0;
      return;
    }
    for (int x = left; x >= 0; --x) {
      E[row * n + col] = x;
      rec(col, row + 1, left - x);
    }
    E[row * n + col] = 0;
  };
  rec(0, 0, alpha[0]);
}

PolyRep build_sym_or_div(int a, const RepContext& ctx, bool divided) {
  const int n = ctx.n;
  const FieldSpec& f = ctx.field;
  std::vector<Weight> basis = multisets(a, n);
  WeightIndex idx = index_of(basis);
  std::vector<CoeffEntry> entries;
  for (std::size_t c = 0; c < basis.size(); ++c) {
    const Weight& alpha = basis[c];
    for_each_with_colsum(alpha, n, [&](const std::vector<int>& E) {
      Weight beta{};
      long long denom = 1;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          int x = E[i * n + j];
          beta[i] = std::uint8_t(beta[i] + x);
          denom *= factorial(x);
        }
      long long num = 1;
      for (int i = 0; i < n; ++i)
        num *= factorial(divided ? beta[i] : alpha[i]);
      Scalar v = f.from_int(num / denom);
      if (!v) return;
      entries.push_back(
          {ExponentKey::from_dense(E, n), idx.at(beta), std::uint32_t(c), v});
    });
  }
  return PolyRep(f, Layout::single(n), a, basis, std::move(entries),
                 (divided ? "Div[" : "Sym[") + std::to_string(a) + "]");
}

PolyRep build_wedge(int a, const RepContext& ctx) {
  const int n = ctx.n;
  const FieldSpec& f = ctx.field;
  std::vector<Weight> basis = subsets(a, n);
  WeightIndex idx = index_of(basis);
  std::vector<CoeffEntry> entries;
  std::vector<int> rows(std::size_t(a), 0);
  for (std::size_t c = 0; c < basis.size(); ++c) {
    std::vector<int> cols;
    for (int j = 0; j < n; ++j)
      if (basis[c][j]) cols.push_back(j);
    std::vector<char> used(std::size_t(n), 0);
    std::function<void(int)> rec = [&](int t) {
      if (t == a) {
        int inv = 0;
        for (int x = 0; x < a; ++x)
          for (int y = x + 1; y < a; ++y)
            if (rows[x] > rows[y]) ++inv;
        Weight beta{};
        std::vector<int> pos;
        for (int x = 0; x < a; ++x) {
          beta[std::size_t(rows[x])] = 1;
          pos.push_back(rows[x] * n + cols[x]);
        }
        entries.push_back({ExponentKey::from_positions(pos), idx.at(beta),
                           std::uint32_t(c), f.from_int(inv % 2 ? -1 : 1)});
        return;
      }
      for (int r = 0; r < n; ++r) {
        if (used[r]) continue;
        used[r] = 1;
        rows[t] = r;
        rec(t + 1);
        used[r] = 0;
      }
    };
    rec(0);
  }
  return PolyRep(f, Layout::single(n), a, basis, std::move(entries),
                 "Wedge[" + std::to_string(a) + "]");
}

PolyRep build_tensor_power(int a, const RepContext& ctx) {
  const int n = ctx.n;
  const FieldSpec& f = ctx.field;
  std::size_t dim = 1;
  for (int i = 0; i < a; ++i) dim *= std::size_t(n);
  auto word = [&](std::size_t idx) {
    std::vector<int> w(a);
    for (int i = a - 1; i >= 0; --i) {
      w[i] = int(idx % std::size_t(n));
      idx /= std::size_t(n);
    }
    return w;
  };
  std::vector<Weight> weights(dim);
  std::vector<std::vector<int>> words(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    words[i] = word(i);
    Weight w{};
    for (int x : words[i]) ++w[x];
    weights[i] = w;
  }
  std::vector<CoeffEntry> entries;
  entries.reserve(dim * dim);
  std::vector<int> pos(a);
  for (std::size_t c = 0; c < dim; ++c)
    for (std::size_t r = 0; r < dim; ++r) {
      for (int t = 0; t < a; ++t)
        pos[t] = words[r][t] * n + words[c][t];
      entries.push_back({ExponentKey::from_positions(pos), std::uint32_t(r),
                         std::uint32_t(c), 1});
    }
  return PolyRep(f, Layout::single(n), a, weights, std::move(entries),
                 "Pow[" + std::to_string(a) + "]");
}

}  // namespace

PolyRep constant_rep(FieldSpec f, const Layout& layout, std::size_t dim) {
  std::vector<Weight> w(dim, Weight{});
  std::vector<CoeffEntry> e;
  for (std::size_t i = 0; i < dim; ++i)
    e.push_back({ExponentKey(), std::uint32_t(i), std::uint32_t(i), 1});
  return PolyRep(f, layout, 0, w, std::move(e), "k");
}

PolyRep constant_rep(const RepContext& ctx, std::size_t dim) {
  return constant_rep(ctx.field, Layout::single(ctx.n), dim);
}

PolyRep build_basic(BasicKind kind, int a, const RepContext& ctx) {
  if (a < 0) throw InvalidArgument("negative degree");
  switch (kind) {
    case BasicKind::Sym: return build_sym_or_div(a, ctx, false);
    case BasicKind::Div: return build_sym_or_div(a, ctx, true);
    case BasicKind::Wedge: return build_wedge(a, ctx);
    case BasicKind::TensorPower: return build_tensor_power(a, ctx);
    case BasicKind::Nat: {
      PolyRep m = build_tensor_power(1, ctx);
      m.set_label("Nat");
      return m;
    }
  }
  throw InvalidArgument("unknown basic kind");
}

PolyRep symmetric_power(int a, const RepContext& ctx) {
  return build_basic(BasicKind::Sym, a, ctx);
}
PolyRep divided_power(int a, const RepContext& ctx) {
  return build_basic(BasicKind::Div, a, ctx);
}
PolyRep exterior_power(int a, const RepContext& ctx) {
  return build_basic(BasicKind::Wedge, a, ctx);
}
PolyRep tensor_power(int a, const RepContext& ctx) {
  return build_basic(BasicKind::TensorPower, a, ctx);
}
PolyRep natural_rep(const RepContext& ctx) {
  return build_basic(BasicKind::Nat, 1, ctx);
}

ExactMatrix divided_power_inclusion(int a, const RepContext& ctx) {
  const int n = ctx.n;
  std::vector<Weight> basis = multisets(a, n);
  WeightIndex idx = index_of(basis);
  std::size_t dim = 1;
  for (int i = 0; i < a; ++i) dim *= std::size_t(n);
  ExactMatrix m(ctx.field, dim, basis.size());
  for (std::size_t w = 0; w < dim; ++w) {
    Weight counts{};
    std::size_t x = w;
    for (int i = 0; i < a; ++i) {
      ++counts[x % std::size_t(n)];
      x /= std::size_t(n);
    }
    m.set(w, idx.at(counts), 1);
  }
  return m;
}

namespace {

PolyRep tuple_product(const std::vector<int>& tuple, const RepContext& ctx,
                      BasicKind kind, const char* name) {
  PolyRep out = constant_rep(ctx);
  for (int a : tuple) out = tensor(out, build_basic(kind, a, ctx));
  std::string label = std::string(name) + "^(";
  for (std::size_t i = 0; i < tuple.size(); ++i)
    label += (i ? "," : "") + std::to_string(tuple[i]);
  out.set_label(label + ")");
  return out;
}

}  // namespace

PolyRep gamma_module(const std::vector<int>& tuple, const RepContext& ctx) {
  return tuple_product(tuple, ctx, BasicKind::Div, "Gamma");
}
PolyRep sym_module(const std::vector<int>& tuple, const RepContext& ctx) {
  return tuple_product(tuple, ctx, BasicKind::Sym, "S");
}
PolyRep wedge_module(const std::vector<int>& tuple, const RepContext& ctx) {
  return tuple_product(tuple, ctx, BasicKind::Wedge, "Lambda");
}

std::size_t tensor_size_estimate(const PolyRep& m, const PolyRep& n) {
  return m.entries().size() * n.entries().size();
}

PolyRep tensor(const PolyRep& m, const PolyRep& n) {
  if (!(m.field() == n.field()) || !(m.layout() == n.layout()))
    throw ContextMismatch("tensor: different contexts");
  if (m.degree() + n.degree() > kMaxKeyDegree)
    throw BudgetExceeded("tensor: degree above 16");
  const std::uint32_t dn = std::uint32_t(n.dim());
  std::vector<Weight> w(m.dim() * n.dim());
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < n.dim(); ++j) {
      Weight x{};
      for (int c = 0; c < kMaxCoords; ++c)
        x[c] =
            std::uint8_t(m.weights()[i][c] + n.weights()[j][c]);
      w[i * dn + j] = x;
    }
  std::vector<CoeffEntry> e;
  e.reserve(m.entries().size() * n.entries().size());
  const FieldSpec& f = m.field();
  for (const auto& a : m.entries())
    for (const auto& b : n.entries())
      e.push_back({a.key + b.key, a.row * dn + b.row, a.col * dn + b.col,
                   f.mul(a.value, b.value)});
  std::string label;
  if (!m.label().empty() && !n.label().empty())
    label = "(" + m.label() + " * " + n.label() + ")";
  return PolyRep(f, m.layout(), m.degree() + n.degree(), std::move(w),
                 std::move(e), label);
}

PolyRep direct_sum(const PolyRep& m, const PolyRep& n) {
  if (!(m.field() == n.field()) || !(m.layout() == n.layout()))
    throw ContextMismatch("direct sum: different contexts");
  if (m.dim() && n.dim() && m.degree() != n.degree())
    throw DegreeMismatch("direct sum of different degrees");
  int deg = m.dim() ? m.degree() : n.degree();
  std::vector<Weight> w = m.weights();
  w.insert(w.end(), n.weights().begin(), n.weights().end());
  std::vector<CoeffEntry> e = m.entries();
  const std::uint32_t off = std::uint32_t(m.dim());
  for (auto x : n.entries()) {
    x.row += off;
    x.col += off;
    e.push_back(x);
  }
  std::string label;
  if (!m.label().empty() && !n.label().empty())
    label = "(" + m.label() + " + " + n.label() + ")";
  return PolyRep(m.field(), m.layout(), deg, std::move(w), std::move(e), label);
}

PolyRep twist(const PolyRep& m, int r) {
  if (r < 0) throw InvalidArgument("negative twist");
  if (r == 0) return m;
  const int q = int(ipow(m.field().p(), unsigned(r)));
  if (m.degree() * q > kMaxKeyDegree) throw BudgetExceeded("twist: degree above 16");
  std::vector<Weight> w = m.weights();
  for (auto& x : w)
    for (auto& c : x) c = std::uint8_t(c * q);
  std::vector<CoeffEntry> e = m.entries();
  for (auto& x : e) x.key = x.key.repeated(q);
  std::string label;
  if (!m.label().empty())
    label = "Tw(" + m.label() + "," + std::to_string(r) + ")";
  return PolyRep(m.field(), m.layout(), m.degree() * q, std::move(w),
                 std::move(e), label);
}

PolyRep outer_tensor(const PolyRep& m, const PolyRep& n) {
  if (!(m.field() == n.field())) throw ContextMismatch("outer tensor: fields differ");
  Layout L = m.layout();
  L.blocks.insert(L.blocks.end(), n.layout().blocks.begin(), n.layout().blocks.end());
  const int C = L.coords(), a = m.coords(), b = n.coords();
  if (C > kMaxCoords) throw BudgetExceeded("outer tensor: more than 16 coordinates");
  std::vector<int> ta(std::size_t(a * a)), tb(std::size_t(b * b));
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < a; ++j) ta[std::size_t(i * a + j)] = i * C + j;
  for (int i = 0; i < b; ++i)
    for (int j = 0; j < b; ++j) tb[std::size_t(i * b + j)] = (a + i) * C + a + j;
  auto lift = [&](const PolyRep& x, const std::vector<int>& table, int shift) {
    std::vector<Weight> w = x.weights();
    for (auto& v : w) {
      Weight y{};
      for (int c = 0; c < x.coords(); ++c) y[std::size_t(c + shift)] = v[std::size_t(c)];
      v = y;
    }
    std::vector<CoeffEntry> e = x.entries();
    for (auto& t : e) t.key = t.key.remapped(table);
    return PolyRep(x.field(), L, x.degree(), std::move(w), std::move(e));
  };
  PolyRep out = tensor(lift(m, ta, 0), lift(n, tb, a));
  if (!m.label().empty() && !n.label().empty())
    out.set_label("(" + m.label() + " # " + n.label() + ")");
  return out;
}

PolyRep dual(const PolyRep& m) {
  std::vector<CoeffEntry> e = m.entries();
  const int n = m.coords();
  for (auto& x : e) {
    x.key = x.key.transpose(n);
    std::swap(x.row, x.col);
  }
  std::string label;
  if (!m.label().empty()) label = "Dual(" + m.label() + ")";
  return PolyRep(m.field(), m.layout(), m.degree(), m.weights(), std::move(e),
                 label);
}

std::vector<Vec> weight_space(const PolyRep& m, const std::vector<int>& mu) {
  if (int(mu.size()) != m.coords()) throw BadWeight("weight has wrong length");
  int total = 0;
  for (int x : mu) {
    if (x < 0) throw BadWeight("negative weight entry");
    total += x;
  }
  if (total != m.degree()) throw BadWeight("weight does not sum to the degree");
  std::vector<Vec> out;
  int b = m.find_weight(weight_from(mu));
  if (b < 0) return out;
  for (auto i : m.weight_blocks()[b].basis) {
    Vec v(m.dim(), 0);
    v[i] = 1;
    out.push_back(std::move(v));
  }
  return out;
}

PolyRep coordinate_submodule(const PolyRep& m,
                             const std::vector<std::uint32_t>& basis) {
  std::vector<std::int64_t> pos(m.dim(), -1);
  for (std::size_t i = 0; i < basis.size(); ++i) pos[basis[i]] = std::int64_t(i);
  std::vector<Weight> w;
  for (auto b : basis) w.push_back(m.weights()[b]);
  std::vector<CoeffEntry> e;
  for (const auto& x : m.entries()) {
    if (pos[x.col] < 0) continue;
    if (pos[x.row] < 0) throw NotStable("coordinate subspace is not stable");
    e.push_back({x.key, std::uint32_t(pos[x.row]), std::uint32_t(pos[x.col]),
                 x.value});
  }
  return PolyRep(m.field(), m.layout(), m.degree(), std::move(w), std::move(e));
}

// ---------------------------------------------------------------- checks

namespace {

struct Term {
  ExponentKey g, h;
  std::uint32_t row;
  Scalar value;
};

void normalize_terms(std::vector<Term>& t, const FieldSpec& f) {
  std::sort(t.begin(), t.end(), [](const Term& a, const Term& b) {
    if (a.g != b.g) return a.g < b.g;
    if (a.h != b.h) return a.h < b.h;
    return a.row < b.row;
  });
  std::size_t out = 0;
  for (std::size_t i = 0; i < t.size();) {
    Term x = t[i];
    std::size_t j = i + 1;
    while (j < t.size() && t[j].g == x.g && t[j].h == x.h && t[j].row == x.row)
      x.value = f.add(x.value, t[j++].value);
    if (x.value) t[out++] = x;
    i = j;
  }
  t.resize(out);
}

std::size_t column_cost(const PolyRep& m, std::size_t c,
                        const std::vector<std::size_t>& branch) {
  std::size_t cost = 0;
  for (auto i : m.column(c)) {
    std::size_t t = 1;
    for (int q : m.entries()[i].key) t *= branch[std::size_t(q % m.coords())];
    cost += t;
  }
  return cost;
}

bool coassociative_column(const PolyRep& m, std::size_t b) {
  const int n = m.coords();
  const FieldSpec& f = m.field();
  const Layout& L = m.layout();
  std::vector<Term> lhs, rhs;
  for (auto idx : m.column(b)) {
    const CoeffEntry& e = m.entries()[idx];
    const int d = e.key.degree();
    // (gh)_{ij} = sum_k g_ik h_kj with k in the block of i
    std::vector<int> lo(d), hi(d), k(d);
    for (int t = 0; t < d; ++t) {
      int i = e.key.position(t) / n;
      int blk = L.block_of(i);
      lo[t] = L.block_start(blk);
      hi[t] = lo[t] + L.blocks[blk];
      k[t] = lo[t];
    }
    std::vector<int> gp(d), hp(d);
    while (true) {
      for (int t = 0; t < d; ++t) {
        int q = e.key.position(t);
        gp[t] = (q / n) * n + k[t];
        hp[t] = k[t] * n + (q % n);
      }
      lhs.push_back({ExponentKey::from_positions(gp),
                     ExponentKey::from_positions(hp), e.row, e.value});
      int t = 0;
      while (t < d && ++k[t] == hi[t]) {
        k[t] = lo[t];
        ++t;
      }
      if (t == d) break;
    }
  }
  for (auto i2 : m.column(b)) {
    const CoeffEntry& e2 = m.entries()[i2];
    for (auto i1 : m.column(e2.row)) {
      const CoeffEntry& e1 = m.entries()[i1];
      rhs.push_back({e1.key, e2.key, e1.row, f.mul(e1.value, e2.value)});
    }
  }
  normalize_terms(lhs, f);
  normalize_terms(rhs, f);
  if (lhs.size() != rhs.size()) return false;
  for (std::size_t i = 0; i < lhs.size(); ++i)
    if (lhs[i].g != rhs[i].g || lhs[i].h != rhs[i].h ||
        lhs[i].row != rhs[i].row || lhs[i].value != rhs[i].value)
      return false;
  return true;
}

}  // namespace

InvariantCheck check_invariants(const PolyRep& m, std::size_t budget) {
  InvariantCheck out;
  const int n = m.coords();
  // Counit and projector laws: the constructor enforces one diagonal entry
  // per basis vector; recheck from the tensor itself.
  std::vector<int> diag(m.dim(), 0);
  for (const auto& e : m.entries()) {
    if (e.key.rowsum(n) != m.weights()[e.row] ||
        e.key.colsum(n) != m.weights()[e.col])
      out.weights = false;
    if (e.key.is_diagonal(n)) {
      if (e.row != e.col || e.value != 1 ||
          e.key != ExponentKey::diagonal(m.weights()[e.row], n))
        out.counit = false;
      else
        ++diag[e.row];
    }
  }
  for (int c : diag)
    if (c != 1) out.counit = false;

  std::vector<std::size_t> branch(n);
  for (int j = 0; j < n; ++j)
    branch[j] =
        std::size_t(m.layout().blocks[std::size_t(m.layout().block_of(j))]);
  std::size_t total = 0;
  std::vector<std::size_t> cost(m.dim());
  for (std::size_t c = 0; c < m.dim(); ++c) total += (cost[c] = column_cost(m, c, branch));
  std::vector<std::size_t> cols;
  if (total <= budget) {
    cols.resize(m.dim());
    std::iota(cols.begin(), cols.end(), 0);
  } else {
    out.coassociativity_full = false;
    // the cheapest column of each weight, while the budget lasts
    std::size_t spent = 0;
    for (const auto& blk : m.weight_blocks()) {
      std::size_t c = *std::min_element(
          blk.basis.begin(), blk.basis.end(),
          [&](std::uint32_t a, std::uint32_t b) { return cost[a] < cost[b]; });
      if (spent + cost[c] > budget) continue;
      cols.push_back(c);
      spent += cost[c];
    }
  }
  for (std::size_t c : cols) {
    ++out.columns_checked;
    if (!coassociative_column(m, c)) {
      out.coassociative = false;
      out.detail = "coassociativity fails in column " + std::to_string(c);
      break;
    }
  }
  return out;
}

// ---------------------------------------------------------------- io

std::string serialize(const PolyRep& m) {
  std::ostringstream os;
  const int n = m.coords();
  os << "POLYREP v1 p=" << m.field().p() << " n=" << n << " d=" << m.degree()
     << " dim=" << m.dim() << "\n";
  for (const auto& e : m.entries())
    os << "E=" << e.key.to_string(n) << " r=" << e.row << " c=" << e.col
       << " v=" << unsigned(e.value) << "\n";
  return os.str();
}

namespace {

long long parse_field(std::string_view tok, std::string_view name) {
  if (tok.substr(0, name.size()) != name || tok.size() == name.size())
    throw FormatError("expected " + std::string(name));
  long long v = 0;
  for (char ch : tok.substr(name.size())) {
    if (ch < '0' || ch > '9') throw FormatError("bad integer in " + std::string(name));
    v = v * 10 + (ch - '0');
    if (v > (1ll << 40)) throw FormatError("integer too large");
  }
  return v;
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace

PolyRep deserialize(std::string_view text, std::optional<unsigned> expected_p) {
  std::vector<std::string_view> lines;
  std::size_t i = 0;
  while (i < text.size()) {
    std::size_t j = text.find('\n', i);
    if (j == std::string_view::npos) j = text.size();
    if (j > i) lines.push_back(text.substr(i, j - i));
    i = j + 1;
  }
  if (lines.empty()) throw FormatError("empty stream");
  auto head = split_ws(lines[0]);
  if (head.size() != 6 || head[0] != "POLYREP" || head[1] != "v1")
    throw FormatError("bad header");
  const long long p = parse_field(head[2], "p=");
  const long long n = parse_field(head[3], "n=");
  const long long d = parse_field(head[4], "d=");
  const long long dim = parse_field(head[5], "dim=");
  if (expected_p && *expected_p != p)
    throw ContextMismatch("serialized module has a different characteristic");
  if (n < 1 || n > kMaxCoords || d > kMaxKeyDegree) throw FormatError("bad header values");
  if (!is_prime(unsigned(p)) || p > 251) throw FormatError("bad characteristic");
  FieldSpec f{unsigned(p)};
  std::vector<CoeffEntry> entries;
  std::vector<Weight> weights(dim);
  std::vector<char> seen(std::size_t(dim), 0);
  for (std::size_t li = 1; li < lines.size(); ++li) {
    auto tok = split_ws(lines[li]);
    if (tok.size() != 4 || tok[0].substr(0, 2) != "E=")
      throw FormatError("bad entry line " + std::to_string(li + 1));
    std::vector<int> ex;
    std::string_view body = tok[0].substr(2);
    std::size_t k = 0;
    while (k <= body.size()) {
      std::size_t c = body.find(',', k);
      if (c == std::string_view::npos) c = body.size();
      std::string_view num = body.substr(k, c - k);
      if (num.empty()) throw FormatError("bad exponent list");
      int v = 0;
      for (char ch : num) {
        if (ch < '0' || ch > '9') throw FormatError("bad exponent");
        v = v * 10 + (ch - '0');
        if (v > kMaxKeyDegree) throw FormatError("exponent too large");
      }
      ex.push_back(v);
      k = c + 1;
    }
    if (ex.size() != std::size_t(n * n)) throw FormatError("exponent list length");
    CoeffEntry e;
    e.key = ExponentKey::from_dense(ex, int(n));
    long long r = parse_field(tok[1], "r="), c = parse_field(tok[2], "c="),
              v = parse_field(tok[3], "v=");
    if (r >= dim || c >= dim || v == 0 || v >= p) throw FormatError("bad entry values");
    e.row = std::uint32_t(r);
    e.col = std::uint32_t(c);
    e.value = Scalar(v);
    if (e.key.is_diagonal(int(n)) && r == c) {
      weights[r] = e.key.rowsum(int(n));
      seen[r] = 1;
    }
    entries.push_back(e);
  }
  for (char s : seen)
    if (!s) throw FormatError("truncated stream: missing weight projector");
  try {
    return PolyRep(f, Layout::single(int(n)), int(d), std::move(weights),
                   std::move(entries));
  } catch (const AssertFailure& e) {
    throw FormatError(std::string("inconsistent module: ") + e.what());
  }
}

}  // namespace polyrep
