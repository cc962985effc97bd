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

#include "polyrep/modkit.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <numeric>
#include <random>

#include "polyrep/errors.hpp"

namespace polyrep {

namespace {

// non-owning pointer for temporaries that outlive the call
PolyRepPtr borrow(const PolyRep& m) { return PolyRepPtr(PolyRepPtr{}, &m); }

void same_context(const PolyRep& a, const PolyRep& b, const char* what) {
  if (!(a.field() == b.field()) || !(a.layout() == b.layout()))
    throw ContextMismatch(std::string(what) + ": different contexts");
}

std::vector<Weight> dominant_weights(const PolyRep& m) {
  std::vector<Weight> out;
  for (auto& b : m.weight_blocks())
    if (is_dominant(b.weight, m.layout())) out.push_back(b.weight);
  return out;
}

bool is_elementary(const ExponentKey& k, int n) {
  int off = -1;
  for (auto q : k) {
    if (q / n == q % n) continue;
    if (off >= 0 && off != q) return false;
    off = q;
  }
  return true;
}

}  // namespace

// ---------------------------------------------------------------- hom

HomSpace hom(PolyRepPtr m, PolyRepPtr n) {
  same_context(*m, *n, "hom");
  HomSpace h{m, n, {}};
  if (m->degree() != n->degree()) return h;
  Presentation p(m);
  h.basis = p.hom_basis(*n);
  return h;
}

HomSpace hom(const PolyRep& m, const PolyRep& n) {
  return hom(share(m), share(n));
}

std::size_t hom_dim(const PolyRep& m, const PolyRep& n) {
  same_context(m, n, "hom");
  if (m.degree() != n.degree()) return 0;
  return Presentation(borrow(m)).hom_dim(n);
}

bool is_intertwiner(const ExactMatrix& phi, const PolyRep& m,
                    const PolyRep& n) {
  if (phi.rows() != n.dim() || phi.cols() != m.dim()) return false;
  const FieldSpec& f = m.field();
  const int C = m.coords();
  std::vector<ExponentKey> keys = m.keys();
  for (auto& k : n.keys()) keys.push_back(k);
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  for (const auto& k : keys) {
    int ma = m.find_weight(k.colsum(C));
    if (ma < 0) continue;
    const auto& src = m.weight_blocks()[ma].basis;
    // phi(coeff_M[E] x) versus coeff_N[E] phi(x), x in M_alpha
    std::vector<Vec> lhs(src.size(), Vec(n.dim(), 0)), rhs = lhs;
    std::vector<int> pos(m.dim(), -1);
    for (std::size_t i = 0; i < src.size(); ++i) pos[src[i]] = int(i);
    auto [lo, hi] = m.key_range(k);
    for (std::size_t e = lo; e < hi; ++e) {
      const CoeffEntry& x = m.entries()[e];
      if (pos[x.col] < 0) continue;
      for (std::size_t r = 0; r < n.dim(); ++r)
        if (Scalar v = phi.at(r, x.row))
          lhs[pos[x.col]][r] = f.add(lhs[pos[x.col]][r], f.mul(v, x.value));
    }
    auto [nlo, nhi] = n.key_range(k);
    for (std::size_t e = nlo; e < nhi; ++e) {
      const CoeffEntry& x = n.entries()[e];
      for (std::size_t i = 0; i < src.size(); ++i)
        if (Scalar v = phi.at(x.col, src[i]))
          rhs[i][x.row] = f.add(rhs[i][x.row], f.mul(v, x.value));
    }
    if (lhs != rhs) return false;
  }
  return true;
}

// ---------------------------------------------------------------- submodules

Submodule::Submodule(PolyRepPtr ambient) : amb_(std::move(ambient)) {
  for (auto& b : amb_->weight_blocks())
    blocks_.emplace_back(amb_->field(), b.basis.size());
}

Submodule Submodule::whole(PolyRepPtr ambient) {
  Submodule u(std::move(ambient));
  for (auto& b : u.blocks_) b = Subspace::full(b.field(), b.ambient());
  return u;
}

Submodule Submodule::generated(PolyRepPtr ambient, const std::vector<Vec>& vs) {
  std::vector<SparseVec> s;
  for (auto& v : vs) {
    SparseVec x;
    for (std::size_t i = 0; i < v.size(); ++i)
      if (v[i]) x.push_back({std::uint32_t(i), v[i]});
    s.push_back(std::move(x));
  }
  return generated(std::move(ambient), s);
}

Submodule Submodule::generated(PolyRepPtr ambient,
                               const std::vector<SparseVec>& vs) {
  Submodule u(ambient);
  SumView view;
  view.add(ambient);
  const PolyRep& m = *ambient;
  const int C = m.coords();
  for (const auto& v : vs) {
    if (v.empty() || u.contains(to_dense(v, m.dim()))) continue;
    Orbit o = make_orbit(view, v);
    for (std::size_t k = 0; k < o.keys.size(); ++k) {
      int b = m.find_weight(o.keys[k].rowsum(C));
      Vec x(m.weight_blocks()[b].basis.size(), 0);
      for (std::uint32_t t = o.start[k]; t < o.start[k + 1]; ++t)
        x[m.local_index(o.data[t].first)] = o.data[t].second;
      u.blocks_[b].insert(x);
    }
  }
  return u;
}

std::size_t Submodule::dim() const noexcept {
  std::size_t d = 0;
  for (auto& b : blocks_) d += b.dim();
  return d;
}

std::vector<Vec> Submodule::basis() const {
  std::vector<Vec> out;
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    const auto& idx = amb_->weight_blocks()[b].basis;
    for (const Vec& v : blocks_[b].basis()) {
      Vec g(amb_->dim(), 0);
      for (std::size_t i = 0; i < v.size(); ++i) g[idx[i]] = v[i];
      out.push_back(std::move(g));
    }
  }
  return out;
}

bool Submodule::contains(const Vec& v) const {
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    const auto& idx = amb_->weight_blocks()[b].basis;
    Vec x(idx.size());
    bool any = false;
    for (std::size_t i = 0; i < idx.size(); ++i) any |= (x[i] = v[idx[i]]) != 0;
    if (any && !blocks_[b].contains(x)) return false;
  }
  return true;
}

bool Submodule::contains(const Submodule& o) const {
  if (o.blocks_.size() != blocks_.size()) return false;
  for (std::size_t b = 0; b < blocks_.size(); ++b)
    if (!subspace_contains(blocks_[b], o.blocks_[b])) return false;
  return true;
}

bool Submodule::stable(bool all_keys) const {
  SumView view;
  view.add(amb_);
  const int C = amb_->coords();
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    const auto& idx = amb_->weight_blocks()[b].basis;
    for (const Vec& v : blocks_[b].basis()) {
      Orbit o = make_orbit(view, to_sparse(v, idx));
      for (std::size_t k = 0; k < o.keys.size(); ++k) {
        if (!all_keys && !is_elementary(o.keys[k], C)) continue;
        int tb = amb_->find_weight(o.keys[k].rowsum(C));
        Vec x(blocks_[tb].ambient(), 0);
        for (std::uint32_t t = o.start[k]; t < o.start[k + 1]; ++t)
          x[amb_->local_index(o.data[t].first)] = o.data[t].second;
        if (!blocks_[tb].contains(x)) return false;
      }
    }
  }
  return true;
}

Submodule operator+(const Submodule& a, const Submodule& b) {
  if (a.blocks() != b.blocks()) throw DimensionMismatch("submodule sum");
  Submodule u(a.ambient_ptr());
  for (std::size_t i = 0; i < a.blocks(); ++i)
    u.block(i) = subspace_sum(a.block(i), b.block(i));
  return u;
}

Submodule intersect(const Submodule& a, const Submodule& b) {
  if (a.blocks() != b.blocks()) throw DimensionMismatch("submodule meet");
  Submodule u(a.ambient_ptr());
  for (std::size_t i = 0; i < a.blocks(); ++i)
    u.block(i) = subspace_intersection(a.block(i), b.block(i));
  return u;
}

Submodule image(const ExactMatrix& phi, const PolyRep& source,
                PolyRepPtr target) {
  Submodule u(target);
  for (auto& sb : source.weight_blocks()) {
    int tb = target->find_weight(sb.weight);
    if (tb < 0) continue;
    const auto& rows = target->weight_blocks()[tb].basis;
    for (std::uint32_t c : sb.basis) {
      Vec x(rows.size());
      for (std::size_t i = 0; i < rows.size(); ++i) x[i] = phi.at(rows[i], c);
      u.block(tb).insert(x);
    }
  }
  return u;
}

Submodule kernel(const ExactMatrix& phi, PolyRepPtr source,
                 const PolyRep& target) {
  Submodule u(source);
  for (std::size_t b = 0; b < source->weight_blocks().size(); ++b) {
    const auto& sb = source->weight_blocks()[b];
    int tb = target.find_weight(sb.weight);
    if (tb < 0) {
      u.block(b) = Subspace::full(source->field(), sb.basis.size());
      continue;
    }
    const auto& rows = target.weight_blocks()[tb].basis;
    ExactMatrix m(source->field(), rows.size(), sb.basis.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < sb.basis.size(); ++j)
        m.set(i, j, phi.at(rows[i], sb.basis[j]));
    u.block(b) = Subspace::span(source->field(), sb.basis.size(), kernel_basis(m));
  }
  return u;
}

namespace {

// position of each local coordinate among the pivots, or -1
std::vector<std::vector<int>> pivot_positions(const Submodule& u) {
  std::vector<std::vector<int>> pos;
  for (std::size_t b = 0; b < u.blocks(); ++b) {
    std::vector<int> p(u.block(b).ambient(), -1);
    const auto& piv = u.block(b).pivots();
    for (std::size_t i = 0; i < piv.size(); ++i) p[piv[i]] = int(i);
    pos.push_back(std::move(p));
  }
  return pos;
}

}  // namespace

PolyRep restrict_to(const Submodule& u, bool check) {
  const PolyRep& m = u.ambient();
  const int C = m.coords();
  const FieldSpec& f = m.field();
  auto piv = pivot_positions(u);
  std::vector<std::uint32_t> start(u.blocks() + 1, 0);
  for (std::size_t b = 0; b < u.blocks(); ++b)
    start[b + 1] = start[b] + std::uint32_t(u.block(b).dim());
  std::vector<Weight> weights;
  for (std::size_t b = 0; b < u.blocks(); ++b)
    weights.insert(weights.end(), u.block(b).dim(), m.weight_blocks()[b].weight);
  SumView view;
  view.add(u.ambient_ptr());
  std::vector<CoeffEntry> entries;
  for (std::size_t b = 0; b < u.blocks(); ++b) {
    const auto& idx = m.weight_blocks()[b].basis;
    const auto& basis = u.block(b).basis();
    for (std::size_t j = 0; j < basis.size(); ++j) {
      Orbit o = make_orbit(view, to_sparse(basis[j], idx));
      for (std::size_t k = 0; k < o.keys.size(); ++k) {
        int tb = m.find_weight(o.keys[k].rowsum(C));
        if (check) {
          Vec x(u.block(tb).ambient(), 0);
          for (std::uint32_t t = o.start[k]; t < o.start[k + 1]; ++t)
            x[m.local_index(o.data[t].first)] = o.data[t].second;
          if (!u.block(tb).contains(x))
            throw NotStable("subspace is not closed under the action");
        }
        for (std::uint32_t t = o.start[k]; t < o.start[k + 1]; ++t) {
          int i = piv[tb][m.local_index(o.data[t].first)];
          if (i >= 0)
            entries.push_back({o.keys[k], start[tb] + std::uint32_t(i),
                               start[b] + std::uint32_t(j), o.data[t].second});
        }
      }
    }
  }
  (void)f;
  return PolyRep(m.field(), m.layout(), m.degree(), std::move(weights),
                 std::move(entries));
}

namespace {

struct QuotientIndex {
  std::vector<std::vector<std::uint32_t>> comp;  // complement coords per block
  std::vector<std::vector<int>> qid;             // local -> new index, or -1
  std::vector<Weight> weights;
};

QuotientIndex quotient_index(const Submodule& u) {
  const PolyRep& m = u.ambient();
  QuotientIndex q;
  auto piv = pivot_positions(u);
  std::uint32_t next = 0;
  for (std::size_t b = 0; b < u.blocks(); ++b) {
    std::vector<std::uint32_t> c;
    std::vector<int> id(piv[b].size(), -1);
    for (std::size_t l = 0; l < piv[b].size(); ++l)
      if (piv[b][l] < 0) {
        c.push_back(std::uint32_t(l));
        id[l] = int(next++);
        q.weights.push_back(m.weight_blocks()[b].weight);
      }
    q.comp.push_back(std::move(c));
    q.qid.push_back(std::move(id));
  }
  return q;
}

}  // namespace

PolyRep quotient(const Submodule& u) {
  const PolyRep& m = u.ambient();
  const FieldSpec& f = m.field();
  QuotientIndex q = quotient_index(u);
  auto piv = pivot_positions(u);
  std::vector<CoeffEntry> entries;
  for (std::size_t b = 0; b < u.blocks(); ++b) {
    const auto& idx = m.weight_blocks()[b].basis;
    for (std::uint32_t c : q.comp[b]) {
      const std::uint32_t j = std::uint32_t(q.qid[b][c]);
      for (std::uint32_t e : m.column(idx[c])) {
        const CoeffEntry& x = m.entries()[e];
        const std::uint32_t tb = m.block_of_basis(x.row);
        const std::uint32_t l = m.local_index(x.row);
        if (q.qid[tb][l] >= 0) {
          entries.push_back({x.key, std::uint32_t(q.qid[tb][l]), j, x.value});
          continue;
        }
        const Vec& ui = u.block(tb).basis()[std::size_t(piv[tb][l])];
        for (std::uint32_t c2 : q.comp[tb])
          if (ui[c2])
            entries.push_back({x.key, std::uint32_t(q.qid[tb][c2]), j,
                               f.neg(f.mul(x.value, ui[c2]))});
      }
    }
  }
  return PolyRep(m.field(), m.layout(), m.degree(), std::move(q.weights),
                 std::move(entries));
}

ExactMatrix quotient_map(const Submodule& u) {
  const PolyRep& m = u.ambient();
  const FieldSpec& f = m.field();
  QuotientIndex q = quotient_index(u);
  ExactMatrix out(f, q.weights.size(), m.dim());
  for (std::size_t b = 0; b < u.blocks(); ++b) {
    const auto& idx = m.weight_blocks()[b].basis;
    const auto& piv = u.block(b).pivots();
    for (std::uint32_t c : q.comp[b]) {
      const std::size_t r = std::size_t(q.qid[b][c]);
      out.set(r, idx[c], 1);
      for (std::size_t i = 0; i < piv.size(); ++i)
        if (Scalar x = u.block(b).basis()[i][c]) out.set(r, idx[piv[i]], f.neg(x));
    }
  }
  return out;
}

ExactMatrix inclusion_map(const Submodule& u) {
  return ExactMatrix::from_columns(u.ambient().field(), u.basis(),
                                   u.ambient().dim());
}

Submodule preimage(const Submodule& u, const Submodule& w) {
  const PolyRep& m = u.ambient();
  const PolyRep& qm = w.ambient();
  QuotientIndex q = quotient_index(u);
  if (q.weights.size() != qm.dim()) throw DimensionMismatch("preimage");
  Submodule out = u;
  for (std::size_t b = 0; b < u.blocks(); ++b) {
    if (q.comp[b].empty()) continue;
    int qb = qm.find_weight(m.weight_blocks()[b].weight);
    for (const Vec& v : w.block(std::size_t(qb)).basis()) {
      Vec x(u.block(b).ambient(), 0);
      for (std::size_t k = 0; k < v.size(); ++k) x[q.comp[b][k]] = v[k];
      out.block(b).insert(x);
    }
  }
  return out;
}

// ---------------------------------------------------------------- simples

std::string simple_label(const Weight& w, const Layout& layout) {
  std::string s;
  int c = 0;
  for (std::size_t b = 0; b < layout.blocks.size(); ++b) {
    if (b) s += "|";
    std::vector<int> parts(w.begin() + c, w.begin() + c + layout.blocks[b]);
    s += Partition(parts).to_string();
    c += layout.blocks[b];
  }
  return s;
}

Weight weight_of(const Partition& lambda, int n) {
  if (int(lambda.length()) > n)
    throw ContextTooSmall("partition " + lambda.to_string() + " has more than " +
                          std::to_string(n) + " parts");
  return weight_from(lambda.parts());
}

void require_large_context(const PolyRep& m) {
  auto deg = m.block_degrees();
  for (std::size_t b = 0; b < deg.size(); ++b)
    if (m.layout().blocks[b] < deg[b])
      throw ContextTooSmall("need n >= " + std::to_string(deg[b]) +
                            ", have n = " + std::to_string(m.layout().blocks[b]));
}

namespace {

struct SimpleData {
  PolyRepPtr weyl, costandard, simple;
  std::shared_ptr<const Presentation> pres;
};

struct SimpleKey {
  unsigned p;
  std::vector<int> blocks;
  Weight w;
  auto operator<=>(const SimpleKey&) const = default;
};

std::recursive_mutex g_simple_mu;
std::map<SimpleKey, SimpleData>& simple_cache() {
  static std::map<SimpleKey, SimpleData> c;
  return c;
}

std::size_t nnz_product(const std::vector<int>& parts, BasicKind kind,
                        const RepContext& ctx) {
  std::size_t n = 1;
  for (int a : parts) {
    std::size_t e = build_basic(kind, a, ctx).entries().size();
    if (e && n > std::size_t(1) << 40 / e) return std::size_t(1) << 40;
    n *= e;
  }
  return n;
}

std::string plabel(const Partition& l) { return "(" + l.to_string() + ")"; }

// Generated by the image of the highest weight vector e_1^...^e_{l'_j}.
PolyRep build_weyl(const Partition& lambda, const RepContext& ctx) {
  Partition conj = conjugate(lambda);
  auto amb = share(wedge_module(conj.parts(), ctx));
  if (!(amb->weights()[0] == weight_from(lambda.parts())))
    throw AssertFailure("wedge basis does not start at the highest weight");
  Vec v(amb->dim(), 0);
  v[0] = 1;
  PolyRep out = restrict_to(Submodule::generated(amb, std::vector<Vec>{v}), false);
  out.set_label("W" + plabel(lambda));
  return out;
}

// Generated by the image of e_1 x ... x e_d: column antisymmetrization of
// the row-filled tableau followed by row multiplication.
PolyRep build_costandard(const Partition& lambda, const RepContext& ctx) {
  const int d = lambda.weight();
  auto amb = share(sym_module(lambda.parts(), ctx));
  const FieldSpec& f = ctx.field;
  std::vector<std::map<Weight, std::size_t>> index;
  std::vector<std::size_t> dims;
  for (int a : lambda.parts()) {
    PolyRep s = symmetric_power(a, ctx);
    std::map<Weight, std::size_t> m;
    for (std::size_t i = 0; i < s.dim(); ++i) m[s.weights()[i]] = i;
    dims.push_back(s.dim());
    index.push_back(std::move(m));
  }
  // tableau positions, row-major
  std::vector<int> row_of(d), col_of(d);
  {
    int t = 0;
    for (std::size_t i = 0; i < lambda.length(); ++i)
      for (int j = 0; j < lambda[i]; ++j, ++t) {
        row_of[t] = int(i);
        col_of[t] = j;
      }
  }
  std::vector<std::vector<int>> cols(static_cast<std::size_t>(lambda[0]));
  for (int t = 0; t < d; ++t) cols[col_of[t]].push_back(t);
  Vec u(amb->dim(), 0);
  std::vector<int> letter(d);
  std::function<void(std::size_t, int)> rec = [&](std::size_t j, int sign) {
    if (j == cols.size()) {
      std::vector<Weight> rows(lambda.length(), Weight{});
      for (int t = 0; t < d; ++t) ++rows[row_of[t]][letter[t]];
      std::size_t idx = 0;
      for (std::size_t i = 0; i < rows.size(); ++i)
        idx = idx * dims[i] + index[i].at(rows[i]);
      u[idx] = f.add(u[idx], sign > 0 ? Scalar(1) : f.neg(1));
      return;
    }
    std::vector<int> perm = cols[j];
    do {
      // parity of perm relative to cols[j]
      int inv = 0;
      for (std::size_t a = 0; a < perm.size(); ++a)
        for (std::size_t b = a + 1; b < perm.size(); ++b) inv += perm[a] > perm[b];
      for (std::size_t a = 0; a < perm.size(); ++a) letter[cols[j][a]] = perm[a];
      rec(j + 1, inv % 2 ? -sign : sign);
    } while (std::next_permutation(perm.begin(), perm.end()));
  };
  rec(0, 1);
  PolyRep out = restrict_to(Submodule::generated(amb, std::vector<Vec>{u}), false);
  out.set_label("C" + plabel(lambda));
  return out;
}

const SimpleData& simple_data(const Partition& lambda, const RepContext& ctx) {
  std::lock_guard<std::recursive_mutex> lock(g_simple_mu);
  SimpleKey key{ctx.p(), {ctx.n}, weight_of(lambda, ctx.n)};
  auto& cache = simple_cache();
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  if (lambda.weight() > ctx.n)
    throw ContextTooSmall("simple " + plabel(lambda) + " needs n >= " +
                          std::to_string(lambda.weight()));
  SimpleData s;
  if (lambda.empty()) {
    s.weyl = s.costandard = s.simple = share(constant_rep(ctx));
  } else {
    Partition conj = conjugate(lambda);
    std::size_t wedge = nnz_product(conj.parts(), BasicKind::Wedge, ctx);
    std::size_t sym = nnz_product(lambda.parts(), BasicKind::Sym, ctx);
    if (wedge <= sym) {
      s.weyl = share(build_weyl(lambda, ctx));
      PolyRep c = dual(*s.weyl);
      c.set_label("C" + plabel(lambda));
      s.costandard = share(std::move(c));
    } else {
      s.costandard = share(build_costandard(lambda, ctx));
      PolyRep w = dual(*s.costandard);
      w.set_label("W" + plabel(lambda));
      s.weyl = share(std::move(w));
    }
    Presentation pw(s.weyl);
    auto imgs = pw.hom_images(*s.costandard);
    if (imgs.size() != 1)
      throw AssertFailure("hom(W, C) for " + plabel(lambda) + " has dimension " +
                          std::to_string(imgs.size()));
    PolyRep l = restrict_to(Submodule::generated(s.costandard, imgs[0]), false);
    l.set_label("L" + plabel(lambda));
    s.simple = share(std::move(l));
  }
  s.pres = std::make_shared<const Presentation>(s.simple);
  if (s.pres->hom_dim(*s.simple) != 1)
    throw AssertFailure("End of L" + plabel(lambda) + " is not k");
  auto self = s.pres->hom_basis(dual(*s.simple));
  if (self.size() != 1 || !is_invertible(self[0]))
    throw AssertFailure("L" + plabel(lambda) + " is not self-dual");
  return cache.emplace(key, std::move(s)).first->second;
}

const SimpleData& simple_data(FieldSpec f, const Layout& layout,
                              const Weight& w) {
  if (layout.blocks.size() == 1) {
    std::vector<int> parts(w.begin(), w.begin() + layout.blocks[0]);
    return simple_data(Partition(parts), RepContext(f, layout.blocks[0]));
  }
  std::lock_guard<std::recursive_mutex> lock(g_simple_mu);
  SimpleKey key{f.p(), layout.blocks, w};
  auto& cache = simple_cache();
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  std::optional<PolyRep> acc;
  int c = 0;
  for (int b : layout.blocks) {
    std::vector<int> parts(w.begin() + c, w.begin() + c + b);
    const PolyRep& l = *simple_data(Partition(parts), RepContext(f, b)).simple;
    acc = acc ? outer_tensor(*acc, l) : l;
    c += b;
  }
  acc->set_label("L(" + simple_label(w, layout) + ")");
  SimpleData s;
  s.simple = share(std::move(*acc));
  s.pres = std::make_shared<const Presentation>(s.simple);
  return cache.emplace(key, std::move(s)).first->second;
}

}  // namespace

PolyRepPtr weyl_module(const Partition& lambda, const RepContext& ctx) {
  return simple_data(lambda, ctx).weyl;
}
PolyRepPtr costandard_module(const Partition& lambda, const RepContext& ctx) {
  return simple_data(lambda, ctx).costandard;
}
PolyRepPtr simple_module(const Partition& lambda, const RepContext& ctx) {
  return simple_data(lambda, ctx).simple;
}
PolyRepPtr simple_module(FieldSpec f, const Layout& layout, const Weight& w) {
  return simple_data(f, layout, w).simple;
}

std::vector<std::pair<Partition, PolyRepPtr>> simples_of_degree(
    int d, const RepContext& ctx) {
  if (d > ctx.n) throw ContextTooSmall("simples of degree " + std::to_string(d));
  std::vector<std::pair<Partition, PolyRepPtr>> out;
  for (auto& l : enumerate_partitions(d, ctx.n))
    out.push_back({l, simple_module(l, ctx)});
  return out;
}

PolyRepPtr truncated_symmetric(int d, const RepContext& ctx) {
  PolyRep q = head(share(symmetric_power(d, ctx)));
  q.set_label("Q[" + std::to_string(d) + "]");
  return share(std::move(q));
}

// ---------------------------------------------------------------- structure

Submodule socle(PolyRepPtr m) {
  require_large_context(*m);
  std::vector<SparseVec> gens;
  for (const Weight& w : dominant_weights(*m)) {
    const SimpleData& s = simple_data(m->field(), m->layout(), w);
    for (auto& imgs : s.pres->hom_images(*m))
      for (auto& v : imgs) gens.push_back(v);
  }
  return Submodule::generated(m, gens);
}

namespace {

// radical from homs to simples, reusing one presentation of m
Submodule radical_with(PolyRepPtr m, const Presentation& pm) {
  const auto& blocks = m->weight_blocks();
  std::vector<std::vector<Vec>> rows(blocks.size());
  for (const Weight& w : dominant_weights(*m)) {
    PolyRepPtr l = simple_module(m->field(), m->layout(), w);
    for (const ExactMatrix& phi : pm.hom_basis(*l))
      for (std::size_t b = 0; b < blocks.size(); ++b) {
        int lb = l->find_weight(blocks[b].weight);
        if (lb < 0) continue;
        for (std::uint32_t r : l->weight_blocks()[lb].basis) {
          Vec x(blocks[b].basis.size());
          for (std::size_t j = 0; j < x.size(); ++j) x[j] = phi.at(r, blocks[b].basis[j]);
          rows[b].push_back(std::move(x));
        }
      }
  }
  Submodule u(m);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    const std::size_t n = blocks[b].basis.size();
    if (rows[b].empty()) {
      u.block(b) = Subspace::full(m->field(), n);
      continue;
    }
    ExactMatrix a = ExactMatrix::from_rows(m->field(), rows[b], n);
    u.block(b) = Subspace::span(m->field(), n, kernel_basis(a));
  }
  return u;
}

Factors hom_from_simples(const PolyRep& m) {
  Factors f;
  for (const Weight& w : dominant_weights(m)) {
    const SimpleData& s = simple_data(m.field(), m.layout(), w);
    if (std::size_t k = s.pres->hom_dim(m)) f[w] = int(k);
  }
  return f;
}

Factors hom_to_simples(const PolyRep& m) {
  Factors f;
  Presentation pm(borrow(m));
  for (const Weight& w : dominant_weights(m))
    if (std::size_t k = pm.hom_dim(*simple_module(m.field(), m.layout(), w)))
      f[w] = int(k);
  return f;
}

void add_factors(Factors& a, const Factors& b) {
  for (auto& [w, k] : b) a[w] += k;
}

}  // namespace

Submodule radical(PolyRepPtr m) {
  require_large_context(*m);
  Presentation pm(m);
  return radical_with(m, pm);
}

PolyRep head(PolyRepPtr m) {
  PolyRep h = quotient(radical(m));
  if (!m->label().empty()) h.set_label("Head(" + m->label() + ")");
  return h;
}

namespace {

void socle_walk(PolyRepPtr m, std::vector<Submodule>* series,
                std::vector<Factors>* layers) {
  require_large_context(*m);
  Submodule cur(m);
  while (!cur.is_whole()) {
    PolyRepPtr q = cur.is_zero() ? m : share(quotient(cur));
    if (layers) layers->push_back(hom_from_simples(*q));
    Submodule s = socle(q);
    if (s.is_zero()) throw AssertFailure("nonzero module with zero socle");
    cur = cur.is_zero() ? s : preimage(cur, s);
    if (series) series->push_back(cur);
  }
}

}  // namespace

std::vector<Submodule> socle_series(PolyRepPtr m) {
  std::vector<Submodule> s;
  socle_walk(std::move(m), &s, nullptr);
  return s;
}

std::vector<Factors> socle_layers(PolyRepPtr m) {
  std::vector<Factors> l;
  socle_walk(std::move(m), nullptr, &l);
  return l;
}

std::vector<Submodule> radical_series(PolyRepPtr m) {
  require_large_context(*m);
  std::vector<Submodule> out{Submodule::whole(m)};
  while (!out.back().is_zero()) {
    const Submodule& r = out.back();
    PolyRepPtr sub = share(restrict_to(r, false));
    Submodule rr = radical(sub);
    if (rr.dim() == sub->dim()) throw AssertFailure("radical is not proper");
    // back to coordinates of m
    std::vector<Vec> rb = r.basis();
    Submodule next(m);
    for (const Vec& v : rr.basis()) {
      Vec g(m->dim(), 0);
      for (std::size_t j = 0; j < v.size(); ++j)
        if (v[j]) m->field().axpy(g.data(), rb[j].data(), v[j], g.size());
      for (std::size_t b = 0; b < next.blocks(); ++b) {
        const auto& idx = m->weight_blocks()[b].basis;
        Vec x(idx.size());
        bool any = false;
        for (std::size_t i = 0; i < idx.size(); ++i) any |= (x[i] = g[idx[i]]) != 0;
        if (any) next.block(b).insert(x);
      }
    }
    out.push_back(std::move(next));
  }
  return out;
}

std::vector<Factors> radical_layers(PolyRepPtr m) {
  std::vector<Factors> out;
  auto series = radical_series(m);
  for (std::size_t k = 0; k + 1 < series.size(); ++k) {
    PolyRep sub = restrict_to(series[k], false);
    out.push_back(hom_to_simples(sub));
  }
  return out;
}

Factors semisimple_factors(PolyRepPtr m) {
  require_large_context(*m);
  return hom_from_simples(*m);
}

Factors composition_factors(PolyRepPtr m) {
  Factors f;
  for (auto& l : socle_layers(m)) add_factors(f, l);
  return f;
}

Factors composition_factors_by_radical(PolyRepPtr m) {
  Factors f;
  for (auto& l : radical_layers(m)) add_factors(f, l);
  return f;
}

std::map<Partition, int> as_partitions(const Factors& f, int n) {
  std::map<Partition, int> out;
  for (auto& [w, k] : f) out[Partition(weight_vector(w, n))] += k;
  return out;
}

std::string factors_to_string(const Factors& f, const Layout& layout) {
  std::string s;
  for (auto it = f.rbegin(); it != f.rend(); ++it) {
    if (!s.empty()) s += " + ";
    if (it->second > 1) s += std::to_string(it->second) + "*";
    s += "L(" + simple_label(it->first, layout) + ")";
  }
  return s.empty() ? "0" : s;
}

bool is_simple(PolyRepPtr m) {
  if (m->dim() == 0) return false;
  return socle(m).is_whole();
}

// ---------------------------------------------------------------- iso

std::string to_string(IsoResult r) {
  switch (r) {
    case IsoResult::Isomorphic:
      return "isomorphic";
    case IsoResult::NotIsomorphic:
      return "not isomorphic";
    case IsoResult::Inconclusive:
      return "inconclusive";
  }
  return "?";
}

namespace {

// square weight blocks of phi, smallest first
struct BlockForm {
  std::vector<std::vector<ExactMatrix>> per_basis;  // [basis element][block]
};

std::vector<std::pair<std::vector<std::uint32_t>, std::vector<std::uint32_t>>>
matching_blocks(const PolyRep& a, const PolyRep& b) {
  std::vector<std::pair<std::vector<std::uint32_t>, std::vector<std::uint32_t>>> out;
  for (auto& ab : a.weight_blocks())
    out.push_back({b.weight_blocks()[b.find_weight(ab.weight)].basis, ab.basis});
  std::sort(out.begin(), out.end(), [](auto& x, auto& y) {
    return x.first.size() < y.first.size();
  });
  return out;
}

bool invertible_combination(
    const std::vector<std::vector<ExactMatrix>>& blocks, const Vec& coeffs,
    const FieldSpec& f) {
  const std::size_t nb = blocks.empty() ? 0 : blocks[0].size();
  for (std::size_t k = 0; k < nb; ++k) {
    const std::size_t n = blocks[0][k].rows();
    ExactMatrix m(f, n, n);
    for (std::size_t h = 0; h < blocks.size(); ++h) {
      if (!coeffs[h]) continue;
      for (std::size_t i = 0; i < n; ++i)
        f.axpy(m.row(i), blocks[h][k].row(i), coeffs[h], n);
    }
    if (rank(m) < n) return false;
  }
  return true;
}

}  // namespace

IsoResult iso_test(PolyRepPtr a, PolyRepPtr b, std::uint64_t seed) {
  if (!(a->field() == b->field()) || !(a->layout() == b->layout()))
    return IsoResult::NotIsomorphic;
  if (a->dim() != b->dim() || a->degree() != b->degree())
    return IsoResult::NotIsomorphic;
  {
    auto wa = a->weights(), wb = b->weights();
    std::sort(wa.begin(), wa.end());
    std::sort(wb.begin(), wb.end());
    if (wa != wb) return IsoResult::NotIsomorphic;
  }
  if (a->dim() == 0) return IsoResult::Isomorphic;
  const FieldSpec& f = a->field();
  Presentation pa(a);
  auto basis = pa.hom_basis(*b);
  if (basis.empty()) return IsoResult::NotIsomorphic;
  auto pairs = matching_blocks(*a, *b);
  std::vector<std::vector<ExactMatrix>> blocks;
  for (auto& phi : basis) {
    std::vector<ExactMatrix> bl;
    for (auto& [rows, cols] : pairs) {
      ExactMatrix m(f, rows.size(), cols.size());
      for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) m.set(i, j, phi.at(rows[i], cols[j]));
      bl.push_back(std::move(m));
    }
    blocks.push_back(std::move(bl));
  }
  const std::size_t h = basis.size();
  for (std::size_t i = 0; i < h; ++i) {
    Vec c(h, 0);
    c[i] = 1;
    if (invertible_combination(blocks, c, f)) return IsoResult::Isomorphic;
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<unsigned> coin(0, f.p() - 1);
  for (int t = 0; t < 64; ++t) {
    Vec c(h);
    for (auto& x : c) x = Scalar(coin(rng));
    if (invertible_combination(blocks, c, f)) return IsoResult::Isomorphic;
  }
  // exhaustive up to scalars: first nonzero coefficient 1
  double space = 1;
  for (std::size_t i = 0; i < h; ++i) space *= f.p();
  if (space > double(1 << 20)) return IsoResult::Inconclusive;
  Vec c(h, 0);
  for (std::size_t lead = 0; lead < h; ++lead) {
    std::fill(c.begin(), c.end(), 0);
    c[lead] = 1;
    // odometer over positions after lead
    while (true) {
      if (invertible_combination(blocks, c, f)) return IsoResult::Isomorphic;
      std::size_t k = h;
      while (k-- > lead + 1) {
        if (++c[k] < f.p()) break;
        c[k] = 0;
      }
      if (k == lead) break;
    }
  }
  return IsoResult::NotIsomorphic;
}

// ---------------------------------------------------------------- claims

Status from_iso(IsoResult r) {
  switch (r) {
    case IsoResult::Isomorphic:
      return Status::Verified;
    case IsoResult::NotIsomorphic:
      return Status::Failed;
    default:
      return Status::Inconclusive;
  }
}

Report steinberg_check(const Partition& lambda, const RepContext& ctx) {
  Report r("L_lambda is the tensor product of the Frobenius twists of the "
           "simples at its p-adic levels");
  if (lambda.weight() > ctx.n) throw ContextTooSmall("steinberg check");
  auto levels = p_adic_decomposition(lambda, ctx.p());
  PolyRepPtr l = simple_module(lambda, ctx);
  std::optional<PolyRep> prod;
  nlohmann::json lv = nlohmann::json::array();
  for (std::size_t i = 0; i < levels.size(); ++i) {
    lv.push_back(levels[i].to_string());
    if (levels[i].empty()) continue;
    PolyRep t = twist(*simple_module(levels[i], ctx), int(i));
    prod = prod ? tensor(*prod, t) : std::move(t);
  }
  if (!prod) prod = constant_rep(ctx);
  IsoResult iso = iso_test(l, share(std::move(*prod)));
  r.add("lambda=" + lambda.to_string(), from_iso(iso),
        {{"dim", l->dim()}, {"levels", lv}, {"iso", to_string(iso)}});
  return r;
}

Report clausen_james_check(int d, const RepContext& ctx) {
  Report r("hom(tensor^d, L_lambda) is nonzero exactly for p-restricted lambda");
  if (d > ctx.n) throw ContextTooSmall("clausen-james check");
  Weight ones{};
  for (int i = 0; i < d; ++i) ones[i] = 1;
  std::optional<PolyRepPtr> td;
  if (d <= 4) td = share(tensor_power(d, ctx));
  for (auto& [lambda, l] : simples_of_degree(d, ctx)) {
    // hom(Gamma^(1^d), L) is the (1^d)-weight space
    int b = l->find_weight(ones);
    std::size_t dim = b < 0 ? 0 : l->weight_blocks()[b].basis.size();
    bool restricted = is_pr_restricted(lambda, ctx.p(), 1);
    nlohmann::json w = {{"hom_dim", dim}, {"restricted", restricted}};
    bool ok = (dim > 0) == restricted;
    if (td) {
      std::size_t from = hom_dim(**td, *l), to = hom_dim(*l, **td);
      w["solver_from"] = from;
      w["solver_to"] = to;
      ok = ok && from == dim && (to > 0) == (dim > 0);
    }
    r.add("lambda=" + lambda.to_string(), ok, w);
  }
  return r;
}

Report tenspres_check(const Partition& lambda, const Partition& mu,
                      const RepContext& ctx) {
  Report r("a tensor product of two nonconstant p-restricted simples is not "
           "simple");
  const unsigned p = ctx.p();
  if (lambda.empty() || mu.empty())
    throw InvalidArgument("tenspres check needs nonconstant simples");
  if (!is_pr_restricted(lambda, p, 1) || !is_pr_restricted(mu, p, 1))
    throw NotRestricted("tenspres check needs p-restricted partitions");
  if (lambda.weight() + mu.weight() > ctx.n) throw ContextTooSmall("tenspres check");
  PolyRepPtr t = share(tensor(*simple_module(lambda, ctx), *simple_module(mu, ctx)));
  std::size_t end = Presentation(t).hom_dim(*t);
  r.add("(" + lambda.to_string() + ")x(" + mu.to_string() + ")", end >= 2,
        {{"dim_end", end}, {"dim", t->dim()}});
  return r;
}

}  // namespace polyrep
