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

#include "polyrep/daytensor.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <unordered_map>

#include "polyrep/errors.hpp"
#include "polyrep/gamma.hpp"

namespace polyrep {

namespace {

std::atomic<std::size_t> g_max_dim{6000};
std::atomic<int> g_max_degree{4};

PolyRep zero_module(const PolyRep& like, int degree) {
  return PolyRep(like.field(), like.layout(), degree, {}, {});
}

PolyRep copies(const PolyRep& m, std::size_t k) {
  if (k == 0) return zero_module(m, m.degree());
  PolyRep acc = m;
  for (std::size_t i = 1; i < k; ++i) acc = direct_sum(acc, m);
  return acc;
}

void require_single(const PolyRep& m) {
  if (m.layout().blocks.size() != 1) throw ContextMismatch("expected a GL_n module");
}

PolyRep restrict_coords(const PolyRep& m, int c) {
  const int n = m.coords();
  std::vector<std::int64_t> local(m.dim(), -1);
  std::vector<Weight> ws;
  for (std::size_t b = 0; b < m.dim(); ++b) {
    const Weight& w = m.weights()[b];
    bool inside = true;
    for (int i = c; i < n; ++i) inside = inside && w[i] == 0;
    if (!inside) continue;
    local[b] = std::int64_t(ws.size());
    ws.push_back(w);
  }
  std::vector<CoeffEntry> es;
  for (const CoeffEntry& e : m.entries()) {
    if (local[e.row] < 0 || local[e.col] < 0) continue;
    std::vector<int> pos;
    bool inside = true;
    for (int q : e.key) {
      int r = q / n, s = q % n;
      if (r >= c || s >= c) inside = false;
      pos.push_back(r * c + s);
    }
    if (!inside) continue;
    es.push_back({ExponentKey::from_positions(pos), std::uint32_t(local[e.row]),
                  std::uint32_t(local[e.col]), e.value});
  }
  return PolyRep(m.field(), Layout::single(c), m.degree(), std::move(ws), std::move(es),
                 m.label());
}

}  // namespace

void set_max_intern_dim(std::size_t d) { g_max_dim = d; }
std::size_t max_intern_dim() { return g_max_dim; }
void set_max_intern_degree(int d) { g_max_degree = d; }
int max_intern_degree() { return g_max_degree; }

GammaPresentation gamma_presentation(PolyRepPtr m) {
  GammaPresentation out;
  out.module = m;
  auto res = resolution_of(m);
  res->extend(2);
  const Layout& L = m->layout();
  out.p0 = projective_of(res->stage(0));
  out.p1 = projective_of(res->stage(1));
  out.p0_dim = res->term_dim(0);
  for (const Weight& w : res->stage(0).weight_list(L))
    out.image_rank += rank(res->differential_block(0, w));
  return out;
}

PolyRep evaluate_at(const PolyRep& m, int coords) {
  require_single(m);
  const int n = m.coords();
  if (coords == n) return m;
  if (coords < 1 || coords > kMaxCoords) throw BudgetExceeded("coordinate count out of range");
  if (coords < n) return restrict_coords(m, coords);
  if (n < m.degree()) throw ContextTooSmall("extension needs n >= degree");
  const Layout big = Layout::single(coords);
  if (m.dim() == 0) return PolyRep(m.field(), big, m.degree(), {}, {}, m.label());
  Presentation pres(share(m));
  const Stage& st = pres.stage();
  std::size_t total = 0;
  std::vector<std::shared_ptr<const GammaShape>> small, large;
  for (const Weight& w : st.summands) {
    small.push_back(gamma_shape(m.layout(), w));
    large.push_back(gamma_shape(big, w));
    total += large.back()->keys.size();
  }
  if (total > max_intern_dim()) throw BudgetExceeded("extension cover too large");
  std::vector<int> table(std::size_t(n * n));
  for (int q = 0; q < n * n; ++q) table[q] = (q / n) * coords + q % n;
  // local index of Gamma^lambda at n coordinates -> global index at `coords`
  std::vector<std::vector<std::uint32_t>> move(st.summands.size());
  std::uint32_t off = 0;
  PolyRep cover;
  for (std::size_t a = 0; a < st.summands.size(); ++a) {
    std::unordered_map<ExponentKey, std::uint32_t, KeyHash> idx;
    for (std::uint32_t i = 0; i < large[a]->keys.size(); ++i) idx[large[a]->keys[i]] = i;
    for (const ExponentKey& k : small[a]->keys) move[a].push_back(off + idx.at(k.remapped(table)));
    off += std::uint32_t(large[a]->keys.size());
    PolyRep g = *gamma_rep(m.field(), big, st.summands[a]);
    cover = a == 0 ? g : direct_sum(cover, g);
  }
  auto cover_ptr = share(std::move(cover));
  std::vector<SparseVec> rels;
  for (auto& [w, v] : pres.relation_vectors()) {
    SparseVec s;
    for (auto [g, x] : v) {
      std::size_t a = std::size_t(std::upper_bound(st.offsets.begin(), st.offsets.end(), g) -
                                  st.offsets.begin()) - 1;
      s.emplace_back(move[a][g - st.offsets[a]], x);
    }
    std::sort(s.begin(), s.end());
    rels.push_back(std::move(s));
  }
  PolyRep q = quotient(Submodule::generated(cover_ptr, rels));
  if (q.dim() == 0 && m.dim() != 0) throw AssertFailure("extension lost the module");
  q.set_label(m.label());
  return q;
}

PolyRep internal_with_tensorpower(const PolyRep& f) {
  require_single(f);
  RepContext ctx = f.ctx();
  if (ctx.n < f.degree()) throw ContextTooSmall("need n >= d");
  SymRep s = schur_functor(f);
  PolyRep out = copies(tensor_power(f.degree(), ctx), s.dim());
  out.set_label("(" + f.label() + " (x) Tensor[" + std::to_string(f.degree()) + "])");
  return out;
}

PolyRep internal_with_wedge(const PolyRep& f) {
  require_single(f);
  if (f.field().p() == 2) throw OddCharRequired("wedge formula needs p odd");
  RepContext ctx = f.ctx();
  if (ctx.n < f.degree()) throw ContextTooSmall("need n >= d");
  return coinvariants_sd(sign_twist(schur_functor(f)), ctx);
}

PolyRep internal_with_Q(const PolyRep& f) {
  require_single(f);
  RepContext ctx = f.ctx();
  if (ctx.n < f.degree()) throw ContextTooSmall("need n >= d");
  auto fp = share(f);
  for (auto& [lam, mult] : as_partitions(semisimple_factors(share(head(fp))), ctx.n)) {
    (void)mult;
    if (!is_pr_restricted(lam, f.field().p(), 1))
      throw HeadNotRestricted("head has the factor L" + lam.to_string());
  }
  return coinvariants_sd(schur_functor(f), ctx);
}

namespace {

// hom(f o Hom(V, -), g#) for V of dimension c = max(degree, 1), with its
// GL(V) action; f and g are taken at c coordinates.
PolyRep param_hom(const PolyRep& f0, const PolyRep& g0) {
  const int d = f0.degree();
  const int c = std::max(d, 1);
  const FieldSpec& fld = f0.field();
  if (d > max_intern_degree()) throw BudgetExceeded("internal product degree above cap");
  PolyRep f = evaluate_at(f0, c), g = evaluate_at(g0, c);
  const int N = c * c;
  PolyRep fn = evaluate_at(f, N);
  // X = fn along g (x) I; coordinate (i, j) of Hom(V, W) is i*c + j
  std::vector<Weight> xw;
  for (const Weight& w : fn.weights()) {
    std::vector<int> v(std::size_t(c), 0);
    for (int q = 0; q < N; ++q) v[q / c] += w[q];
    xw.push_back(weight_from(v));
  }
  std::vector<CoeffEntry> xe;
  std::map<ExponentKey, std::vector<CoeffEntry>> right;  // keys in h
  for (const CoeffEntry& e : fn.entries()) {
    bool left = true, rt = true;
    std::vector<int> lp, rp;
    for (int q : e.key) {
      int r = q / N, s = q % N;
      if (r % c != s % c) left = false;
      if (r / c != s / c) rt = false;
      lp.push_back((r / c) * c + s / c);
      rp.push_back((s % c) * c + r % c);
    }
    if (left) xe.push_back({ExponentKey::from_positions(lp), e.row, e.col, e.value});
    if (rt) right[ExponentKey::from_positions(rp)].push_back(e);
  }
  auto x = share(PolyRep(fld, Layout::single(c), d, std::move(xw), std::move(xe)));
  HomSpace hs = hom(share(g), share(dual(*x)));
  const std::size_t h = hs.dim();
  const std::size_t dx = x->dim(), dg = g.dim();
  const std::size_t L = dx * dg;
  auto flat = [&](const ExactMatrix& b) {
    Vec v(L);
    for (std::size_t r = 0; r < dx; ++r) std::copy(b.row(r), b.row(r) + dg, v.begin() + r * dg);
    return v;
  };
  // beta -> C^T beta
  auto act = [&](const std::vector<CoeffEntry>& cs, const Vec& beta) {
    Vec out(L, 0);
    for (const CoeffEntry& e : cs)
      fld.axpy(out.data() + std::size_t(e.col) * dg, beta.data() + std::size_t(e.row) * dg,
               e.value, dg);
    return out;
  };
  std::vector<Vec> betas;
  for (auto& b : hs.basis) betas.push_back(flat(b));
  // weight basis of H
  std::vector<Vec> basis;
  std::vector<Weight> weights;
  for (auto& [key, cs] : right) {
    if (!key.is_diagonal(c)) continue;
    Subspace sp(fld, L);
    for (auto& b : betas) {
      Vec y = act(cs, b);
      if (sp.insert(y)) {
        basis.push_back(y);
        weights.push_back(key.rowsum(c));
      }
    }
  }
  if (basis.size() != h) throw AssertFailure("weight spaces do not span the hom space");
  Subspace all(fld, L);
  for (auto& b : basis) all.insert(b);
  // coordinates in `basis` = inv(Q) * echelon coordinates
  std::vector<Vec> qcols;
  for (auto& b : basis) qcols.push_back(all.coordinates(b));
  ExactMatrix Q = ExactMatrix::from_columns(fld, qcols, h);
  auto coords_of = [&](const Vec& v) {
    auto s = solve(Q, all.coordinates(v));
    if (!s.consistent()) throw AssertFailure("hom space not stable");
    return *s.solution;
  };
  std::vector<CoeffEntry> he;
  for (auto& [key, cs] : right)
    for (std::size_t s = 0; s < h; ++s) {
      Vec y = act(cs, basis[s]);
      if (std::all_of(y.begin(), y.end(), [](Scalar t) { return t == 0; })) continue;
      if (!all.contains(y)) throw AssertFailure("hom space not stable");
      Vec co = coords_of(y);
      for (std::size_t r = 0; r < h; ++r)
        if (co[r]) he.push_back({key, std::uint32_t(r), std::uint32_t(s), co[r]});
    }
  return PolyRep(fld, Layout::single(c), d, std::move(weights), std::move(he));
}

}  // namespace

PolyRep internal_oriented(const PolyRep& f, const PolyRep& g) {
  require_single(f);
  require_single(g);
  if (!(f.field() == g.field()) || !(f.layout() == g.layout()))
    throw ContextMismatch("internal product: different contexts");
  if (f.degree() != g.degree() || f.dim() == 0 || g.dim() == 0)
    return zero_module(f, f.degree());
  if (f.coords() < f.degree()) throw ContextTooSmall("need n >= d");
  PolyRep h = evaluate_at(dual(param_hom(f, g)), f.coords());
  h.set_label("(" + f.label() + " (x)_int " + g.label() + ")");
  return h;
}

PolyRep internal_hom(const PolyRep& f, const PolyRep& g) {
  require_single(f);
  if (!(f.field() == g.field()) || !(f.layout() == g.layout()))
    throw ContextMismatch("internal hom: different contexts");
  if (f.degree() != g.degree() || f.dim() == 0 || g.dim() == 0)
    return zero_module(f, f.degree());
  if (f.coords() < f.degree()) throw ContextTooSmall("need n >= d");
  PolyRep h = evaluate_at(param_hom(f, dual(g)), f.coords());
  h.set_label("Hom_int(" + f.label() + ", " + g.label() + ")");
  return h;
}

PolyRep internal_general(const PolyRep& f, const PolyRep& g) {
  if (f.degree() != g.degree()) return zero_module(f, f.degree());
  // the evaluated factor dominates the cost
  auto cost = [](const PolyRep& m) {
    int c = std::max(m.degree(), 1);
    return gamma_presentation(share(evaluate_at(m, c))).p0.dim(Layout::single(c * c));
  };
  if (f.dim() && g.dim() && f.coords() >= f.degree() && cost(g) < cost(f))
    return internal_oriented(g, f);
  return internal_oriented(f, g);
}

Report verify_stein_internal(const Partition& lambda, const Partition& mu,
                             const RepContext& ctx) {
  Report rep("stein-internal");
  const unsigned p = ctx.p();
  auto la = p_adic_decomposition(lambda, p);
  auto ma = p_adic_decomposition(mu, p);
  auto whole = share(internal_general(*simple_module(lambda, ctx), *simple_module(mu, ctx)));
  bool match = lambda.weight() == mu.weight();
  for (std::size_t i = 0; i < std::max(la.size(), ma.size()); ++i) {
    int a = i < la.size() ? la[i].weight() : 0;
    int b = i < ma.size() ? ma[i].weight() : 0;
    match = match && a == b;
  }
  nlohmann::json w = {{"lambda", lambda.to_string()}, {"mu", mu.to_string()},
                      {"dim", whole->dim()}, {"levels_match", match}};
  if (!match) {
    rep.add(lambda.to_string() + " x " + mu.to_string() + " vanishes", whole->dim() == 0, w);
    return rep;
  }
  std::optional<PolyRep> acc;
  for (std::size_t i = 0; i < la.size(); ++i) {
    if (la[i].weight() == 0) continue;
    PolyRep piece = internal_general(*simple_module(la[i], ctx), *simple_module(ma[i], ctx));
    PolyRep tw = twist(piece, int(i));
    acc = acc ? tensor(*acc, tw) : tw;
  }
  IsoResult r = acc ? iso_test(whole, share(*acc)) : IsoResult::NotIsomorphic;
  w["predicted_dim"] = acc ? acc->dim() : 0;
  w["iso"] = to_string(r);
  rep.add(lambda.to_string() + " x " + mu.to_string() + " levelwise",
          whole->dim() > 0 ? from_iso(r) : Status::Failed, w);
  return rep;
}

}  // namespace polyrep
