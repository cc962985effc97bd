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

#include "polyrep/gamma.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <optional>

#include "polyrep/errors.hpp"

namespace polyrep {

bool is_dominant(const Weight& w, const Layout& layout) {
  int c = 0;
  for (int b : layout.blocks) {
    for (int i = 1; i < b; ++i)
      if (w[c + i] > w[c + i - 1]) return false;
    c += b;
  }
  return true;
}

bool weight_greater(const Weight& a, const Weight& b) { return b < a; }

const WeightBlock* GammaShape::block(const Weight& mu) const {
  auto it = std::lower_bound(
      blocks.begin(), blocks.end(), mu,
      [](const WeightBlock& b, const Weight& w) { return b.weight < w; });
  if (it == blocks.end() || it->weight != mu) return nullptr;
  return &*it;
}

namespace {

// nondecreasing sequences of length a over [0, n), lexicographic
void sequences(int a, int n, std::vector<std::vector<int>>& out) {
  std::vector<int> seq(a, 0);
  std::function<void(int, int)> rec = [&](int pos, int start) {
    if (pos == a) {
      out.push_back(seq);
      return;
    }
    for (int x = start; x < n; ++x) {
      seq[pos] = x;
      rec(pos + 1, x);
    }
  };
  rec(0, 0);
}

std::shared_ptr<const GammaShape> build_shape(const Layout& layout,
                                              const Weight& lambda) {
  auto s = std::make_shared<GammaShape>();
  s->layout = layout;
  s->lambda = lambda;
  const int C = layout.coords();
  std::vector<std::vector<std::vector<int>>> choices(C);
  for (int j = 0; j < C; ++j) {
    int b = layout.block_of(j);
    int start = layout.block_start(b);
    std::vector<std::vector<int>> seqs;
    sequences(lambda[j], layout.blocks[b], seqs);
    for (auto& q : seqs) {
      std::vector<int> pos;
      for (int r : q) pos.push_back((start + r) * C + j);
      choices[j].push_back(std::move(pos));
    }
  }
  std::vector<int> pos;
  std::function<void(int)> rec = [&](int j) {
    if (j == C) {
      s->keys.push_back(ExponentKey::from_positions(pos));
      return;
    }
    for (auto& c : choices[j]) {
      pos.insert(pos.end(), c.begin(), c.end());
      rec(j + 1);
      pos.resize(pos.size() - c.size());
    }
  };
  rec(0);
  std::map<Weight, std::vector<std::uint32_t>> by;
  const ExponentKey gen = ExponentKey::diagonal(lambda, C);
  for (std::size_t i = 0; i < s->keys.size(); ++i) {
    by[s->keys[i].rowsum(C)].push_back(std::uint32_t(i));
    if (s->keys[i] == gen) s->generator = std::uint32_t(i);
  }
  for (auto& [w, v] : by) s->blocks.push_back({w, std::move(v)});
  return s;
}

struct ShapeKey {
  std::vector<int> blocks;
  Weight lambda;
  unsigned p;
  auto operator<=>(const ShapeKey&) const = default;
};

std::mutex g_gamma_mu;

}  // namespace

std::shared_ptr<const GammaShape> gamma_shape(const Layout& layout,
                                              const Weight& lambda) {
  static std::map<ShapeKey, std::shared_ptr<const GammaShape>> cache;
  ShapeKey k{layout.blocks, lambda, 0};
  std::lock_guard<std::mutex> lock(g_gamma_mu);
  auto& slot = cache[k];
  if (!slot) slot = build_shape(layout, lambda);
  return slot;
}

PolyRepPtr gamma_rep(FieldSpec f, const Layout& layout, const Weight& lambda) {
  static std::map<ShapeKey, PolyRepPtr> cache;
  ShapeKey k{layout.blocks, lambda, f.p()};
  {
    std::lock_guard<std::mutex> lock(g_gamma_mu);
    auto it = cache.find(k);
    if (it != cache.end()) return it->second;
  }
  std::optional<PolyRep> acc;
  int c = 0;
  for (int b : layout.blocks) {
    std::vector<int> t(lambda.begin() + c, lambda.begin() + c + b);
    PolyRep g = gamma_module(t, RepContext(f, b));
    acc = acc ? outer_tensor(*acc, g) : std::move(g);
    c += b;
  }
  auto shape = gamma_shape(layout, lambda);
  if (acc->dim() != shape->keys.size())
    throw AssertFailure("gamma module and key basis disagree");
  for (std::uint32_t e : acc->column(shape->generator)) {
    const CoeffEntry& x = acc->entries()[e];
    if (x.value != 1 || !(shape->keys[x.row] == x.key))
      throw AssertFailure("gamma generator column is not the key basis");
  }
  auto ptr = std::make_shared<const PolyRep>(std::move(*acc));
  std::lock_guard<std::mutex> lock(g_gamma_mu);
  cache.emplace(k, ptr);
  return ptr;
}

// ---------------------------------------------------------------- columns

GammaColumns::GammaColumns(FieldSpec f, std::shared_ptr<const GammaShape> shape)
    : field_(f), shape_(std::move(shape)) {
  for (std::size_t i = 0; i < shape_->keys.size(); ++i)
    index_.emplace(shape_->keys[i], std::uint32_t(i));
}

const std::vector<GammaColumns::Entry>& GammaColumns::column(
    std::uint32_t b) const {
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = cols_.find(b);
    if (it != cols_.end()) return it->second;
  }
  auto col = build(b);
  std::lock_guard<std::mutex> lock(mu_);
  return cols_.emplace(b, std::move(col)).first->second;
}

// Gamma^lambda is the tensor product over coordinates j of Gamma^{lambda_j}
// on the block of j. Factor j sends the multiset alpha (column j of the
// basis key) through every matrix E with column sums alpha to the multiset
// of its row sums beta, with coefficient prod_i beta_i! / prod E_ic!.
std::vector<GammaColumns::Entry> GammaColumns::build(std::uint32_t b) const {
  const Layout& L = shape_->layout;
  const int C = L.coords();
  const unsigned p = field_.p();
  std::vector<int> dense = shape_->keys[b].dense(C);
  struct Cell {
    int col, block_start, block_size, count;
  };
  // one cell per nonzero (c, j): alpha_j[c] = count
  std::vector<std::vector<Cell>> factors;
  for (int j = 0; j < C; ++j) {
    std::vector<Cell> cells;
    int blk = L.block_of(j);
    for (int c = 0; c < C; ++c)
      if (int x = dense[c * C + j])
        cells.push_back({c, L.block_start(blk), L.blocks[blk], x});
    if (!cells.empty()) factors.push_back(std::move(cells));
  }
  std::vector<int> jcol;
  for (int j = 0; j < C; ++j) {
    bool any = false;
    for (int c = 0; c < C; ++c) any = any || dense[c * C + j];
    if (any) jcol.push_back(j);
  }
  auto fact = [](int n) {
    long long r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
  };
  std::vector<Entry> out;
  std::vector<int> keypos, rowpos;
  std::vector<int> beta(std::size_t(C), 0);
  std::function<void(std::size_t, std::size_t, int, int, long long, Scalar)> rec;
  // fi: factor, ci: cell, row: next row to try, left: units of the cell
  // still to place, den: running prod E! of the factor, acc: value so far
  rec = [&](std::size_t fi, std::size_t ci, int row, int left, long long den,
            Scalar acc) {
    if (fi == factors.size()) {
      ExponentKey rk = ExponentKey::from_positions(rowpos);
      out.push_back({ExponentKey::from_positions(keypos), index_.at(rk), acc});
      return;
    }
    const auto& cells = factors[fi];
    if (ci == cells.size()) {
      long long num = 1;
      for (int i = 0; i < C; ++i) num *= fact(beta[i]);
      Scalar v = field_.mul(acc, field_.from_int((num / den) % p));
      if (!v) return;
      std::vector<int> save = beta;
      std::fill(beta.begin(), beta.end(), 0);
      rec(fi + 1, 0, 0, fi + 1 < factors.size() ? factors[fi + 1][0].count : 0, 1, v);
      beta = save;
      return;
    }
    const Cell& cell = cells[ci];
    if (row == cell.block_size - 1 || left == 0) {
      // the remainder goes to this row
      const int i = cell.block_start + row;
      for (int t = 0; t < left; ++t) {
        keypos.push_back(i * C + cell.col);
        rowpos.push_back(i * C + jcol[fi]);
      }
      beta[i] += left;
      const int nc = ci + 1 < cells.size() ? cells[ci + 1].count : 0;
      rec(fi, ci + 1, 0, nc, den * fact(left), acc);
      beta[i] -= left;
      keypos.resize(keypos.size() - left);
      rowpos.resize(rowpos.size() - left);
      return;
    }
    const int i = cell.block_start + row;
    for (int x = left; x >= 0; --x) {
      for (int t = 0; t < x; ++t) {
        keypos.push_back(i * C + cell.col);
        rowpos.push_back(i * C + jcol[fi]);
      }
      beta[i] += x;
      rec(fi, ci, row + 1, left - x, den * fact(x), acc);
      beta[i] -= x;
      keypos.resize(keypos.size() - x);
      rowpos.resize(rowpos.size() - x);
    }
  };
  if (factors.empty()) {
    out.push_back({ExponentKey(), b, 1});
    return out;
  }
  rec(0, 0, 0, factors[0][0].count, 1, 1);
  std::sort(out.begin(), out.end(), [](const Entry& x, const Entry& y) {
    if (x.key == y.key) return x.row < y.row;
    return x.key < y.key;
  });
  std::vector<Entry> merged;
  for (auto& e : out) {
    if (!merged.empty() && merged.back().key == e.key && merged.back().row == e.row)
      merged.back().value = field_.add(merged.back().value, e.value);
    else
      merged.push_back(e);
  }
  std::erase_if(merged, [](const Entry& e) { return e.value == 0; });
  return merged;
}

std::shared_ptr<const GammaColumns> gamma_columns(FieldSpec f,
                                                  const Layout& layout,
                                                  const Weight& lambda) {
  static std::map<ShapeKey, std::shared_ptr<const GammaColumns>> cache;
  auto shape = gamma_shape(layout, lambda);
  ShapeKey k{layout.blocks, lambda, f.p()};
  std::lock_guard<std::mutex> lock(g_gamma_mu);
  auto& slot = cache[k];
  if (!slot) slot = std::make_shared<const GammaColumns>(f, shape);
  return slot;
}

// ---------------------------------------------------------------- SumView

void SumView::add_weights(const std::vector<Weight>& ws) {
  const std::uint32_t off = std::uint32_t(dim_);
  for (std::size_t b = 0; b < ws.size(); ++b) {
    auto& blk = blocks_[ws[b]];
    local_.push_back(std::uint32_t(blk.size()));
    blk.push_back(off + std::uint32_t(b));
    weights_.push_back(ws[b]);
  }
  offsets_.push_back(off);
  dim_ += ws.size();
}

void SumView::add(PolyRepPtr part) {
  field_ = part->field();
  coords_ = part->coords();
  add_weights(part->weights());
  parts_.push_back({std::move(part), nullptr});
}

void SumView::add(std::shared_ptr<const GammaColumns> part) {
  field_ = part->field();
  coords_ = part->shape().layout.coords();
  std::vector<Weight> ws;
  ws.reserve(part->shape().keys.size());
  for (auto& k : part->shape().keys) ws.push_back(k.rowsum(coords_));
  add_weights(ws);
  parts_.push_back({nullptr, std::move(part)});
}

std::pair<std::uint32_t, std::uint32_t> SumView::locate(std::uint32_t g) const {
  auto it = std::upper_bound(offsets_.begin(), offsets_.end(), g);
  std::uint32_t p = std::uint32_t(it - offsets_.begin()) - 1;
  return {p, g - offsets_[p]};
}

const Weight& SumView::weight(std::uint32_t g) const { return weights_[g]; }

const std::vector<std::uint32_t>& SumView::block(const Weight& mu) const {
  static const std::vector<std::uint32_t> empty;
  auto it = blocks_.find(mu);
  return it == blocks_.end() ? empty : it->second;
}

std::uint32_t SumView::local_in_block(std::uint32_t g) const {
  return local_[g];
}

std::vector<Weight> SumView::weight_list() const {
  std::vector<Weight> out;
  for (auto& [w, v] : blocks_) out.push_back(w);
  return out;
}

// ---------------------------------------------------------------- orbits

long Orbit::find(const ExponentKey& k) const {
  auto it = std::lower_bound(keys.begin(), keys.end(), k);
  if (it == keys.end() || !(*it == k)) return -1;
  return long(it - keys.begin());
}

Orbit make_orbit(const SumView& view, const SparseVec& v) {
  struct T {
    ExponentKey key;
    std::uint32_t row;
    Scalar val;
  };
  std::vector<T> ts;
  const FieldSpec& f = view.field();
  for (auto [g, c] : v)
    view.for_column(g, [&](const ExponentKey& k, std::uint32_t row, Scalar x) {
      ts.push_back({k, row, f.mul(c, x)});
    });
  std::sort(ts.begin(), ts.end(), [](const T& a, const T& b) {
    if (a.key == b.key) return a.row < b.row;
    return a.key < b.key;
  });
  Orbit o;
  if (ts.empty()) {
    o.start.push_back(0);
    return o;
  }
  std::size_t i = 0;
  while (i < ts.size()) {
    std::size_t j = i;
    const std::size_t before = o.data.size();
    while (j < ts.size() && ts[j].key == ts[i].key) {
      std::size_t k = j;
      Scalar s = 0;
      while (k < ts.size() && ts[k].key == ts[i].key && ts[k].row == ts[j].row)
        s = f.add(s, ts[k++].val);
      if (s) o.data.push_back({ts[j].row, s});
      j = k;
    }
    if (o.data.size() > before) {
      o.keys.push_back(ts[i].key);
      o.start.push_back(std::uint32_t(before));
    }
    i = j;
  }
  o.start.push_back(std::uint32_t(o.data.size()));
  return o;
}

SparseVec to_sparse(const Vec& local, const std::vector<std::uint32_t>& block) {
  SparseVec s;
  for (std::size_t i = 0; i < local.size(); ++i)
    if (local[i]) s.push_back({block[i], local[i]});
  return s;
}

Vec to_dense(const SparseVec& v, std::size_t dim) {
  Vec d(dim, 0);
  for (auto [i, x] : v) d[i] = x;
  return d;
}

// ---------------------------------------------------------------- covers

namespace {

// Adds the images of orbit o at the listed weights to the subspaces.
void absorb(const SumView& view, const Orbit& o, int coords,
            std::map<Weight, Subspace>& spaces) {
  for (std::size_t k = 0; k < o.keys.size(); ++k) {
    auto it = spaces.find(o.keys[k].rowsum(coords));
    if (it == spaces.end()) continue;
    Vec v(it->second.ambient(), 0);
    for (std::uint32_t t = o.start[k]; t < o.start[k + 1]; ++t)
      v[view.local_in_block(o.data[t].first)] = o.data[t].second;
    it->second.insert(v);
  }
}

}  // namespace

Generators choose_generators(
    const SumView& view,
    const std::map<Weight, std::vector<Vec>>& dominant_spaces,
    CoverStrategy strategy) {
  Generators out;
  if (view.parts() == 0) return out;
  const FieldSpec f = view.field();
  const int C = view.coords();
  std::vector<Weight> order;
  for (auto& [w, v] : dominant_spaces)
    if (!v.empty()) order.push_back(w);
  std::sort(order.begin(), order.end(), weight_greater);

  if (strategy == CoverStrategy::AllWeights) {
    for (auto& w : order)
      for (auto& v : dominant_spaces.at(w)) {
        out.weights.push_back(w);
        out.vectors.push_back(to_sparse(v, view.block(w)));
      }
    return out;
  }

  // highest first
  std::vector<std::pair<Weight, Vec>> cand;
  {
    std::map<Weight, Subspace> g;
    for (auto& w : order) g.emplace(w, Subspace(f, view.block(w).size()));
    for (auto& w : order) {
      for (auto& v : dominant_spaces.at(w)) {
        if (g.at(w).contains(v)) continue;
        cand.push_back({w, v});
        absorb(view, make_orbit(view, to_sparse(v, view.block(w))), C, g);
      }
      g.erase(w);
    }
  }
  // prune from the lowest up
  std::map<Weight, Subspace> g;
  for (auto& [w, v] : cand)
    if (!g.count(w)) g.emplace(w, Subspace(f, view.block(w).size()));
  std::vector<std::size_t> kept;
  for (std::size_t i = cand.size(); i-- > 0;) {
    auto& [w, v] = cand[i];
    if (g.at(w).contains(v)) continue;
    kept.push_back(i);
    SparseVec s = to_sparse(v, view.block(w));
    absorb(view, make_orbit(view, s), C, g);
  }
  std::reverse(kept.begin(), kept.end());
  for (std::size_t i : kept) {
    out.weights.push_back(cand[i].first);
    out.vectors.push_back(to_sparse(cand[i].second, view.block(cand[i].first)));
  }
  return out;
}

// ---------------------------------------------------------------- stages

void Stage::finalize(const Layout& layout) {
  offsets.clear();
  dim = 0;
  for (auto& w : summands) {
    offsets.push_back(std::uint32_t(dim));
    dim += gamma_shape(layout, w)->keys.size();
  }
}

std::vector<Stage::Slot> Stage::slots(const Layout& layout,
                                      const Weight& mu) const {
  std::vector<Slot> out;
  for (std::size_t a = 0; a < summands.size(); ++a) {
    const WeightBlock* b = gamma_shape(layout, summands[a])->block(mu);
    if (!b) continue;
    for (std::uint32_t i : b->basis) out.push_back({std::uint32_t(a), i});
  }
  return out;
}

std::vector<Weight> Stage::weight_list(const Layout& layout) const {
  std::vector<Weight> out;
  for (auto& w : summands)
    for (auto& b : gamma_shape(layout, w)->blocks) out.push_back(b.weight);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::map<Weight, ExactMatrix> stage_map_blocks(const SumView& codomain,
                                               const Stage& stage,
                                               const Layout& layout,
                                               const std::vector<Weight>& mus) {
  const FieldSpec f = codomain.field();
  std::map<Weight, ExactMatrix> out;
  std::map<Weight, std::size_t> col;
  for (auto& mu : mus) {
    std::size_t cols = 0;
    for (auto& w : stage.summands)
      if (auto* b = gamma_shape(layout, w)->block(mu)) cols += b->basis.size();
    out.emplace(mu, ExactMatrix(f, codomain.block(mu).size(), cols));
    col[mu] = 0;
  }
  for (std::size_t a = 0; a < stage.summands.size(); ++a) {
    auto shape = gamma_shape(layout, stage.summands[a]);
    bool any = false;
    for (auto& mu : mus) any = any || shape->block(mu);
    if (!any) continue;
    Orbit o = make_orbit(codomain, stage.images[a]);
    for (auto& mu : mus) {
      const WeightBlock* b = shape->block(mu);
      if (!b) continue;
      ExactMatrix& m = out.at(mu);
      std::size_t& c = col[mu];
      for (std::uint32_t i : b->basis) {
        long k = o.find(shape->keys[i]);
        if (k >= 0)
          for (std::uint32_t t = o.start[k]; t < o.start[k + 1]; ++t)
            m.set(codomain.local_in_block(o.data[t].first), c, o.data[t].second);
        ++c;
      }
    }
  }
  return out;
}

ExactMatrix stage_map_block(const SumView& codomain, const Stage& stage,
                            const Layout& layout, const Weight& mu) {
  return std::move(stage_map_blocks(codomain, stage, layout, {mu}).at(mu));
}

SumView stage_view(FieldSpec f, const Layout& layout, const Stage& stage) {
  SumView v;
  for (auto& w : stage.summands) v.add(gamma_columns(f, layout, w));
  return v;
}

// ---------------------------------------------------------------- hom

namespace {

// entries of column u of n with key E
std::pair<const std::uint32_t*, const std::uint32_t*> column_key(
    const PolyRep& n, std::uint32_t u, const ExponentKey& k) {
  auto col = n.column(u);
  auto lo = std::lower_bound(col.begin(), col.end(), k,
                             [&](std::uint32_t e, const ExponentKey& x) {
                               return n.entries()[e].key < x;
                             });
  auto hi = lo;
  while (hi != col.end() && n.entries()[*hi].key == k) ++hi;
  return {col.data() + (lo - col.begin()), col.data() + (hi - col.begin())};
}

ExactMatrix inverse(const ExactMatrix& a) {
  const std::size_t m = a.rows();
  ExactMatrix aug(a.field(), m, 2 * m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) aug.set(i, j, a.at(i, j));
    aug.set(i, m + i, 1);
  }
  RrefResult r = rref(aug);
  if (r.rank() < m || (m && r.pivots[m - 1] >= m))
    throw AssertFailure("cover block is not invertible");
  ExactMatrix inv(a.field(), m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) inv.set(i, j, r.form.at(i, m + j));
  return inv;
}

}  // namespace

ExactMatrix evaluation_matrix(
    const PolyRep& n, const Layout& layout, const Stage& src,
    const std::vector<std::pair<Weight, SparseVec>>& vecs,
    std::vector<std::uint32_t>* cols_out) {
  const FieldSpec& f = n.field();
  std::vector<std::uint32_t> cols;
  std::vector<const WeightBlock*> nb;
  std::uint32_t u = 0;
  for (auto& w : src.summands) {
    cols.push_back(u);
    int b = n.find_weight(w);
    nb.push_back(b < 0 ? nullptr : &n.weight_blocks()[b]);
    u += b < 0 ? 0 : std::uint32_t(n.weight_blocks()[b].basis.size());
  }
  std::size_t rows = 0;
  std::vector<std::size_t> row0;
  for (auto& [mu, v] : vecs) {
    row0.push_back(rows);
    int b = n.find_weight(mu);
    rows += b < 0 ? 0 : n.weight_blocks()[b].basis.size();
  }
  ExactMatrix out(f, rows, u);
  for (std::size_t w = 0; w < vecs.size(); ++w) {
    if (n.find_weight(vecs[w].first) < 0) continue;
    for (auto [g, c] : vecs[w].second) {
      std::size_t a =
          std::size_t(std::upper_bound(src.offsets.begin(), src.offsets.end(), g) -
                      src.offsets.begin()) - 1;
      if (!nb[a]) continue;
      const ExponentKey& k =
          gamma_shape(layout, src.summands[a])->keys[g - src.offsets[a]];
      for (std::size_t s = 0; s < nb[a]->basis.size(); ++s) {
        auto [lo, hi] = column_key(n, nb[a]->basis[s], k);
        for (auto it = lo; it != hi; ++it) {
          const CoeffEntry& e = n.entries()[*it];
          out.add_to(row0[w] + n.local_index(e.row), cols[a] + s,
                     f.mul(c, e.value));
        }
      }
    }
  }
  if (cols_out) *cols_out = std::move(cols);
  return out;
}

Presentation::Presentation(PolyRepPtr m, CoverStrategy strategy)
    : m_(std::move(m)) {
  const Layout& L = m_->layout();
  SumView view;
  view.add(m_);
  std::map<Weight, std::vector<Vec>> spaces;
  for (auto& b : m_->weight_blocks()) {
    if (!is_dominant(b.weight, L)) continue;
    auto& v = spaces[b.weight];
    for (std::size_t i = 0; i < b.basis.size(); ++i) {
      Vec e(b.basis.size(), 0);
      e[i] = 1;
      v.push_back(std::move(e));
    }
  }
  Generators g = choose_generators(view, spaces, strategy);
  stage_.summands = std::move(g.weights);
  stage_.images = std::move(g.vectors);
  stage_.finalize(L);
  std::vector<Weight> dom;
  for (auto& w : stage_.weight_list(L))
    if (is_dominant(w, L)) dom.push_back(w);
  auto eps = stage_map_blocks(view, stage_, L, dom);
  for (auto& [w, e] : eps) {
    std::vector<Vec> k = kernel_basis(e);
    if (rank(e) != e.rows()) throw CoverFailure("generators do not span");
    if (!k.empty()) relations_[w] = std::move(k);
  }
}

std::vector<std::pair<Weight, SparseVec>> Presentation::relation_vectors()
    const {
  const Layout& L = m_->layout();
  std::vector<std::pair<Weight, SparseVec>> out;
  for (auto& [w, ks] : relations_) {
    auto slots = stage_.slots(L, w);
    std::vector<std::uint32_t> glob;
    for (auto& s : slots) glob.push_back(stage_.offsets[s.summand] + s.index);
    for (auto& k : ks) out.push_back({w, to_sparse(k, glob)});
  }
  return out;
}

std::size_t Presentation::hom_dim(const PolyRep& n) const {
  if (!(n.field() == m_->field()) || !(n.layout() == m_->layout()))
    throw ContextMismatch("hom: different contexts");
  if (n.degree() != m_->degree() || n.dim() == 0 || m_->dim() == 0) return 0;
  ExactMatrix c =
      evaluation_matrix(n, m_->layout(), stage_, relation_vectors());
  return c.cols() - rank(c);
}

std::vector<std::vector<SparseVec>> Presentation::hom_images(
    const PolyRep& n) const {
  if (!(n.field() == m_->field()) || !(n.layout() == m_->layout()))
    throw ContextMismatch("hom: different contexts");
  std::vector<std::vector<SparseVec>> out;
  if (n.degree() != m_->degree() || n.dim() == 0 || m_->dim() == 0) return out;
  std::vector<std::uint32_t> cols;
  ExactMatrix c =
      evaluation_matrix(n, m_->layout(), stage_, relation_vectors(), &cols);
  for (const Vec& y : kernel_basis(c)) {
    std::vector<SparseVec> imgs;
    for (std::size_t a = 0; a < stage_.summands.size(); ++a) {
      SparseVec s;
      int b = n.find_weight(stage_.summands[a]);
      if (b >= 0) {
        const auto& basis = n.weight_blocks()[b].basis;
        for (std::size_t i = 0; i < basis.size(); ++i)
          if (Scalar x = y[cols[a] + i]) s.push_back({basis[i], x});
      }
      imgs.push_back(std::move(s));
    }
    out.push_back(std::move(imgs));
  }
  return out;
}

std::vector<ExactMatrix> Presentation::hom_basis(const PolyRep& n) const {
  if (!(n.field() == m_->field()) || !(n.layout() == m_->layout()))
    throw ContextMismatch("hom: different contexts");
  std::vector<ExactMatrix> out;
  if (n.degree() != m_->degree() || n.dim() == 0 || m_->dim() == 0) return out;
  const Layout& L = m_->layout();
  const FieldSpec& f = n.field();
  std::vector<std::uint32_t> cols;
  ExactMatrix c = evaluation_matrix(n, L, stage_, relation_vectors(), &cols);
  std::vector<Vec> ys = kernel_basis(c);
  if (ys.empty()) return out;
  for (std::size_t i = 0; i < ys.size(); ++i)
    out.emplace_back(f, n.dim(), m_->dim());

  SumView view;
  view.add(m_);
  std::vector<Weight> ws;
  for (auto& b : m_->weight_blocks())
    if (n.find_weight(b.weight) >= 0) ws.push_back(b.weight);
  auto eps = stage_map_blocks(view, stage_, L, ws);
  for (auto& mu : ws) {
    const ExactMatrix& e = eps.at(mu);
    const WeightBlock& mb = m_->weight_blocks()[m_->find_weight(mu)];
    const WeightBlock& nbk = n.weight_blocks()[n.find_weight(mu)];
    RrefResult r = rref(e);
    if (r.rank() != e.rows()) throw CoverFailure("generators do not span");
    auto slots = stage_.slots(L, mu);
    ExactMatrix sub(f, e.rows(), e.rows());
    for (std::size_t i = 0; i < e.rows(); ++i)
      for (std::size_t j = 0; j < e.rows(); ++j)
        sub.set(i, j, e.at(i, r.pivots[j]));
    ExactMatrix inv = inverse(sub);
    for (std::size_t h = 0; h < ys.size(); ++h) {
      // images of the chosen slots in n
      ExactMatrix phi(f, nbk.basis.size(), e.rows());
      for (std::size_t j = 0; j < e.rows(); ++j) {
        auto sl = slots[r.pivots[j]];
        const Weight& lam = stage_.summands[sl.summand];
        const int ybi = n.find_weight(lam);
        if (ybi < 0) continue;
        const WeightBlock& yb = n.weight_blocks()[ybi];
        const ExponentKey& k = gamma_shape(L, lam)->keys[sl.index];
        for (std::size_t s = 0; s < yb.basis.size(); ++s) {
          Scalar y = ys[h][cols[sl.summand] + s];
          if (!y) continue;
          auto [lo, hi] = column_key(n, yb.basis[s], k);
          for (auto it = lo; it != hi; ++it) {
            const CoeffEntry& x = n.entries()[*it];
            phi.add_to(n.local_index(x.row), j, f.mul(y, x.value));
          }
        }
      }
      ExactMatrix blk = phi * inv;
      for (std::size_t i = 0; i < blk.rows(); ++i)
        for (std::size_t j = 0; j < blk.cols(); ++j)
          if (Scalar v = blk.at(i, j)) out[h].set(nbk.basis[i], mb.basis[j], v);
    }
  }
  return out;
}

}  // namespace polyrep
