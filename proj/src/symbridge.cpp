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

#include "polyrep/symbridge.hpp"

#include <algorithm>
#include <atomic>
#include <climits>
#include <map>
#include <mutex>
#include <random>
#include <sstream>
#include <unordered_map>

#include "polyrep/errors.hpp"
#include "polyrep/homology.hpp"

namespace polyrep {

// ---------------------------------------------------------------- modules

SymRep::SymRep(FieldSpec f, int d, std::size_t dim, std::vector<ExactMatrix> gens,
               std::string label)
    : field_(f), d_(d), dim_(dim), gens_(std::move(gens)), label_(std::move(label)) {
  if (d < 0) throw InvalidArgument("negative degree");
  if (gens_.size() != std::size_t(std::max(d - 1, 0)))
    throw DimensionMismatch("need d-1 generator matrices");
  for (auto& g : gens_)
    if (g.rows() != dim || g.cols() != dim || !(g.field() == f))
      throw DimensionMismatch("generator shape");
  const ExactMatrix id = ExactMatrix::identity(f, dim);
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (!(gens_[i] * gens_[i] == id)) throw AssertFailure("s_i^2 != 1");
    if (i + 1 < gens_.size()) {
      const ExactMatrix& a = gens_[i];
      const ExactMatrix& b = gens_[i + 1];
      if (!(a * b * a == b * a * b)) throw AssertFailure("braid relation fails");
    }
    for (std::size_t j = i + 2; j < gens_.size(); ++j)
      if (!(gens_[i] * gens_[j] == gens_[j] * gens_[i]))
        throw AssertFailure("distant generators do not commute");
  }
}

namespace {

// S_d as permutations of {0..d-1}, closed under left multiplication by
// the s_i, with g = s_{via} o parent for every g but the identity.
struct SymGroup {
  int d = 0;
  std::vector<std::vector<int>> perms;
  std::map<std::vector<int>, int> index;
  std::vector<std::vector<int>> lmul;  // lmul[i][g] = s_i o g
  std::vector<int> parent, via;
  std::vector<std::vector<int>> mul;  // mul[a][b] = a o b

  std::vector<int> compose(const std::vector<int>& a, const std::vector<int>& b) const {
    std::vector<int> c(static_cast<std::size_t>(d));
    for (int x = 0; x < d; ++x) c[x] = a[b[x]];
    return c;
  }
};

std::shared_ptr<const SymGroup> sym_group(int d) {
  static std::mutex mu;
  static std::map<int, std::shared_ptr<const SymGroup>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[d];
  if (slot) return slot;
  auto g = std::make_shared<SymGroup>();
  g->d = d;
  std::vector<int> id(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) id[i] = i;
  g->perms.push_back(id);
  g->index[id] = 0;
  g->parent.push_back(-1);
  g->via.push_back(-1);
  auto transposition = [&](int i) {
    std::vector<int> s = id;
    std::swap(s[i], s[i + 1]);
    return s;
  };
  for (std::size_t q = 0; q < g->perms.size(); ++q)
    for (int i = 0; i + 1 < d; ++i) {
      auto c = g->compose(transposition(i), g->perms[q]);
      if (g->index.count(c)) continue;
      g->index[c] = int(g->perms.size());
      g->perms.push_back(c);
      g->parent.push_back(int(q));
      g->via.push_back(i);
    }
  const std::size_t N = g->perms.size();
  g->lmul.assign(std::size_t(std::max(d - 1, 0)), std::vector<int>(N));
  for (int i = 0; i + 1 < d; ++i)
    for (std::size_t q = 0; q < N; ++q)
      g->lmul[i][q] = g->index.at(g->compose(transposition(i), g->perms[q]));
  g->mul.assign(N, std::vector<int>(N));
  for (std::size_t a = 0; a < N; ++a)
    for (std::size_t b = 0; b < N; ++b)
      g->mul[a][b] = g->index.at(g->compose(g->perms[a], g->perms[b]));
  slot = g;
  return slot;
}

// rho(g) for every group element, in the order of sym_group(d)
std::vector<ExactMatrix> all_matrices(const SymRep& u) {
  auto G = sym_group(u.degree());
  std::vector<ExactMatrix> out;
  out.reserve(G->perms.size());
  out.push_back(ExactMatrix::identity(u.field(), u.dim()));
  for (std::size_t q = 1; q < G->perms.size(); ++q)
    out.push_back(u.gens()[G->via[q]] * out[G->parent[q]]);
  return out;
}

}  // namespace

SymRep trivial_module(FieldSpec f, int d) {
  std::vector<ExactMatrix> g(std::size_t(std::max(d - 1, 0)), ExactMatrix::identity(f, 1));
  return SymRep(f, d, 1, std::move(g), "triv");
}

SymRep sign_module(FieldSpec f, int d) {
  std::vector<ExactMatrix> g(std::size_t(std::max(d - 1, 0)),
                             ExactMatrix::identity(f, 1).scaled(f.from_int(-1)));
  return SymRep(f, d, 1, std::move(g), "sgn");
}

SymRep regular_module(FieldSpec f, int d) {
  auto G = sym_group(d);
  const std::size_t N = G->perms.size();
  std::vector<ExactMatrix> gens;
  for (int i = 0; i + 1 < d; ++i) {
    ExactMatrix m(f, N, N);
    for (std::size_t q = 0; q < N; ++q) m.set(G->lmul[i][q], q, 1);
    gens.push_back(std::move(m));
  }
  return SymRep(f, d, N, std::move(gens), "reg");
}

namespace {

std::vector<std::uint32_t> ones_block(const PolyRep& m, int d) {
  if (m.layout().blocks.size() != 1) throw ContextMismatch("schur functor needs GL_n");
  if (m.coords() < d) throw ContextTooSmall("schur functor needs n >= d");
  std::vector<int> w(std::size_t(m.coords()), 0);
  for (int i = 0; i < d; ++i) w[i] = 1;
  int b = m.find_weight(weight_from(w));
  if (b < 0) return {};
  return m.weight_blocks()[b].basis;
}

}  // namespace

SymRep schur_functor(const PolyRep& m) {
  const int d = m.degree();
  const int C = m.coords();
  auto basis = ones_block(m, d);
  std::vector<ExactMatrix> gens;
  for (int i = 0; i + 1 < d; ++i) {
    // permutation matrix of (i, i+1) on the first d coordinates
    std::vector<int> pos;
    for (int j = 0; j < d; ++j) {
      int r = j == i ? i + 1 : j == i + 1 ? i : j;
      pos.push_back(r * C + j);
    }
    ExactMatrix full = m.coeff(ExponentKey::from_positions(pos));
    ExactMatrix s(m.field(), basis.size(), basis.size());
    for (std::size_t a = 0; a < basis.size(); ++a)
      for (std::size_t b = 0; b < basis.size(); ++b)
        s.set(a, b, full.at(basis[a], basis[b]));
    gens.push_back(std::move(s));
  }
  return SymRep(m.field(), d, basis.size(), std::move(gens),
                m.label().empty() ? std::string() : "f(" + m.label() + ")");
}

ExactMatrix schur_functor_on_maps(const ExactMatrix& phi, const PolyRep& m,
                                  const PolyRep& n) {
  auto bm = ones_block(m, m.degree());
  auto bn = ones_block(n, n.degree());
  ExactMatrix out(m.field(), bn.size(), bm.size());
  for (std::size_t a = 0; a < bn.size(); ++a)
    for (std::size_t b = 0; b < bm.size(); ++b) out.set(a, b, phi.at(bn[a], bm[b]));
  return out;
}

namespace {

// word index with digit k = letter at position k
std::uint32_t place_swap(std::uint32_t x, int i, std::uint32_t n) {
  std::uint32_t lo = 1;
  for (int k = 0; k < i; ++k) lo *= n;
  const std::uint32_t a = (x / lo) % n, b = (x / (lo * n)) % n;
  return x - a * lo - b * lo * n + b * lo + a * lo * n;
}

PolyRepPtr words_times(const SymRep& v, const RepContext& ctx) {
  if (ctx.n < v.degree()) throw ContextTooSmall("need n >= d");
  if (!(ctx.field == v.field())) throw ContextMismatch("field mismatch");
  PolyRep t = tensor_power(v.degree(), ctx);
  if (v.dim() == 0) return share(PolyRep(t.field(), t.layout(), t.degree(), {}, {}));
  PolyRep acc = t;
  for (std::size_t b = 1; b < v.dim(); ++b) acc = direct_sum(acc, t);
  return share(std::move(acc));
}

}  // namespace

PolyRep coinvariants_sd(const SymRep& v, const RepContext& ctx) {
  auto tv = words_times(v, ctx);
  if (v.dim() == 0) return *tv;
  const FieldSpec& f = v.field();
  const std::uint32_t n = std::uint32_t(ctx.n);
  const std::uint32_t T = std::uint32_t(tv->dim() / v.dim());
  std::vector<SparseVec> rel;
  for (std::size_t i = 0; i < v.gens().size(); ++i) {
    const ExactMatrix& s = v.gens()[i];
    for (std::uint32_t x = 0; x < T; ++x)
      for (std::uint32_t b = 0; b < v.dim(); ++b) {
        std::map<std::uint32_t, Scalar> acc;
        acc[b * T + place_swap(x, int(i), n)] = 1;
        for (std::uint32_t c = 0; c < v.dim(); ++c)
          if (Scalar a = s.at(c, b)) {
            Scalar& slot = acc[c * T + x];
            slot = f.sub(slot, a);
          }
        SparseVec sv;
        for (auto& [k, a] : acc)
          if (a) sv.emplace_back(k, a);
        if (!sv.empty()) rel.push_back(std::move(sv));
      }
  }
  PolyRep q = quotient(Submodule::generated(tv, rel));
  q.set_label("l_d(" + v.label() + ")");
  return q;
}

PolyRep invariants_sd(const SymRep& v, const RepContext& ctx) {
  auto tv = words_times(v, ctx);
  if (v.dim() == 0) return *tv;
  const FieldSpec& f = v.field();
  const std::uint32_t n = std::uint32_t(ctx.n);
  const std::size_t T = tv->dim() / v.dim();
  // x (x) v_b  |->  swap_i(x) (x) s_i v_b  is weight preserving
  std::vector<SparseVec> inv;
  for (auto& blk : tv->weight_blocks()) {
    const auto& basis = blk.basis;
    std::unordered_map<std::uint32_t, std::size_t> local;
    for (std::size_t a = 0; a < basis.size(); ++a) local[basis[a]] = a;
    const std::size_t B = basis.size();
    ExactMatrix m(f, B * v.gens().size(), B);
    for (std::size_t i = 0; i < v.gens().size(); ++i) {
      const ExactMatrix& s = v.gens()[i];
      for (std::size_t a = 0; a < B; ++a) {
        const std::uint32_t g = basis[a];
        const std::uint32_t b = std::uint32_t(g / T), x = std::uint32_t(g % T);
        const std::uint32_t y = place_swap(x, int(i), n);
        for (std::uint32_t c = 0; c < v.dim(); ++c)
          if (Scalar e = s.at(c, b)) m.add_to(i * B + local.at(std::uint32_t(c * T + y)), a, e);
        m.add_to(i * B + a, a, f.from_int(-1));
      }
    }
    for (auto& k : kernel_basis(m)) {
      SparseVec sv;
      for (std::size_t a = 0; a < B; ++a)
        if (k[a]) sv.emplace_back(basis[a], k[a]);
      inv.push_back(std::move(sv));
    }
  }
  PolyRep r = restrict_to(Submodule::generated(tv, inv));
  r.set_label("r_d(" + v.label() + ")");
  return r;
}

SymRep kronecker(const SymRep& u, const SymRep& v) {
  if (u.degree() != v.degree()) throw DegreeMismatch("kronecker: different degrees");
  if (!(u.field() == v.field())) throw ContextMismatch("kronecker: different fields");
  std::vector<ExactMatrix> g;
  for (std::size_t i = 0; i < u.gens().size(); ++i) g.push_back(kron(u.gens()[i], v.gens()[i]));
  return SymRep(u.field(), u.degree(), u.dim() * v.dim(), std::move(g),
                "(" + u.label() + " # " + v.label() + ")");
}

SymRep sign_twist(const SymRep& u) {
  std::vector<ExactMatrix> g;
  for (auto& m : u.gens()) g.push_back(m.scaled(u.field().from_int(-1)));
  return SymRep(u.field(), u.degree(), u.dim(), std::move(g), "sgn(" + u.label() + ")");
}

SymRep sym_direct_sum(const SymRep& u, const SymRep& v) {
  if (u.degree() != v.degree()) throw DegreeMismatch("direct sum: different degrees");
  std::vector<ExactMatrix> g;
  for (std::size_t i = 0; i < u.gens().size(); ++i) {
    ExactMatrix m(u.field(), u.dim() + v.dim(), u.dim() + v.dim());
    for (auto& e : u.gens()[i].entries()) m.set(e.row, e.col, e.value);
    for (auto& e : v.gens()[i].entries()) m.set(u.dim() + e.row, u.dim() + e.col, e.value);
    g.push_back(std::move(m));
  }
  return SymRep(u.field(), u.degree(), u.dim() + v.dim(), std::move(g));
}

// ---------------------------------------------------------------- hom

std::vector<ExactMatrix> sym_hom_basis(const SymRep& u, const SymRep& v) {
  if (u.degree() != v.degree()) return {};
  const FieldSpec& f = u.field();
  const std::size_t a = u.dim(), b = v.dim();
  if (a == 0 || b == 0) return {};
  // unknown X (b x a), flattened row-major; X u_i - v_i X = 0
  const std::size_t N = a * b;
  if (N > 40000) throw BudgetExceeded("sym hom system too large");
  std::vector<Vec> sol;
  {
    // start from all of Hom_k and cut down generator by generator
    std::vector<Vec> basis;
    for (std::size_t t = 0; t < N; ++t) {
      Vec e(N, 0);
      e[t] = 1;
      basis.push_back(std::move(e));
    }
    bool first = true;
    for (std::size_t i = 0; i < u.gens().size(); ++i) {
      const ExactMatrix& U = u.gens()[i];
      const ExactMatrix& V = v.gens()[i];
      // image of each basis element under X -> X U - V X, as columns
      ExactMatrix m(f, N, basis.size());
      for (std::size_t c = 0; c < basis.size(); ++c) {
        const Vec& x = basis[c];
        for (std::size_t r = 0; r < b; ++r)
          for (std::size_t s = 0; s < a; ++s) {
            Scalar acc = 0;
            for (std::size_t t = 0; t < a; ++t)
              if (Scalar xv = x[r * a + t]) acc = f.add(acc, f.mul(xv, U.at(t, s)));
            for (std::size_t t = 0; t < b; ++t)
              if (Scalar xv = x[t * a + s]) acc = f.sub(acc, f.mul(V.at(r, t), xv));
            m.set(r * a + s, c, acc);
          }
      }
      std::vector<Vec> ker = kernel_basis(m);
      std::vector<Vec> next;
      for (auto& k : ker) {
        Vec y(N, 0);
        for (std::size_t c = 0; c < basis.size(); ++c)
          if (k[c]) f.axpy(y.data(), basis[c].data(), k[c], N);
        next.push_back(std::move(y));
      }
      basis = std::move(next);
      first = false;
      if (basis.empty()) break;
    }
    (void)first;
    sol = std::move(basis);
  }
  std::vector<ExactMatrix> out;
  for (auto& x : sol) {
    ExactMatrix m(f, b, a);
    for (std::size_t r = 0; r < b; ++r)
      for (std::size_t s = 0; s < a; ++s) m.set(r, s, x[r * a + s]);
    out.push_back(std::move(m));
  }
  return out;
}

IsoResult sym_iso_test(const SymRep& u, const SymRep& v, std::uint64_t seed) {
  if (!(u.field() == v.field()) || u.degree() != v.degree() || u.dim() != v.dim())
    return IsoResult::NotIsomorphic;
  if (u.dim() == 0) return IsoResult::Isomorphic;
  const FieldSpec& f = u.field();
  auto basis = sym_hom_basis(u, v);
  if (basis.empty()) return IsoResult::NotIsomorphic;
  const std::size_t h = basis.size();
  auto combo = [&](const Vec& c) {
    ExactMatrix m(f, v.dim(), u.dim());
    for (std::size_t i = 0; i < h; ++i)
      if (c[i]) m = m + basis[i].scaled(c[i]);
    return is_invertible(m);
  };
  for (std::size_t i = 0; i < h; ++i) {
    Vec c(h, 0);
    c[i] = 1;
    if (combo(c)) return IsoResult::Isomorphic;
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<unsigned> coin(0, f.p() - 1);
  for (int t = 0; t < 64; ++t) {
    Vec c(h);
    for (auto& x : c) x = Scalar(coin(rng));
    if (combo(c)) return IsoResult::Isomorphic;
  }
  double space = 1;
  for (std::size_t i = 0; i < h; ++i) space *= f.p();
  if (space > double(1 << 16)) return IsoResult::Inconclusive;
  Vec c(h, 0);
  for (std::size_t lead = 0; lead < h; ++lead) {
    std::fill(c.begin(), c.end(), 0);
    c[lead] = 1;
    while (true) {
      if (combo(c)) return IsoResult::Isomorphic;
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

// Simple iff the group matrices span the full matrix algebra; prime fields
// split the symmetric groups, so simple and absolutely simple agree.
bool sym_is_simple(const SymRep& u) {
  if (u.dim() == 0) return false;
  const std::size_t n = u.dim();
  Subspace span(u.field(), n * n);
  for (auto& m : all_matrices(u)) {
    Vec v;
    v.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i) v.insert(v.end(), m.row(i), m.row(i) + n);
    span.insert(v);
    if (span.dim() == n * n) return true;
  }
  return false;
}

// ---------------------------------------------------------------- ext

namespace {

std::atomic<int> g_max_sym_degree{5};

// Left action of group element h on k[S_d]^m.
Vec act_free(const SymGroup& G, int h, const Vec& x) {
  const std::size_t N = G.perms.size();
  Vec y(x.size(), 0);
  for (std::size_t a = 0; a * N < x.size(); ++a)
    for (std::size_t g = 0; g < N; ++g)
      if (Scalar c = x[a * N + g]) y[a * N + G.mul[h][g]] = c;
  return y;
}

// Greedy generators of the submodule spanned by `cands`, then pruned
// from the back. orbit(v) lists the images g.v.
template <class Orbit>
std::vector<Vec> pick_generators(FieldSpec f, std::size_t ambient,
                                 const std::vector<Vec>& cands, std::size_t target,
                                 Orbit&& orbit) {
  std::vector<Vec> chosen;
  {
    Subspace s(f, ambient);
    for (auto& c : cands) {
      if (s.dim() == target) break;
      if (s.contains(c)) continue;
      chosen.push_back(c);
      for (auto& w : orbit(c)) s.insert(w);
    }
  }
  std::vector<Vec> kept;
  Subspace s(f, ambient);
  for (std::size_t i = chosen.size(); i-- > 0;) {
    if (s.dim() == target) break;
    if (s.contains(chosen[i])) continue;
    kept.push_back(chosen[i]);
    for (auto& w : orbit(chosen[i])) s.insert(w);
  }
  std::reverse(kept.begin(), kept.end());
  return kept;
}

// rho_V(x) for x in k[S_d] (a vector over the group elements)
ExactMatrix group_algebra_action(const std::vector<ExactMatrix>& rho, const Vec& x,
                                 FieldSpec f, std::size_t dim) {
  ExactMatrix m(f, dim, dim);
  for (std::size_t g = 0; g < x.size(); ++g)
    if (x[g]) m = m + rho[g].scaled(x[g]);
  return m;
}

}  // namespace

void set_max_sym_degree(int d) { g_max_sym_degree = d; }
int max_sym_degree() { return g_max_sym_degree; }

std::vector<std::size_t> sym_ext_dims(const SymRep& u, const SymRep& v, int kmax) {
  std::vector<std::size_t> out(std::size_t(kmax + 1), 0);
  if (u.degree() != v.degree() || u.dim() == 0 || v.dim() == 0 || kmax < 0) return out;
  if (!(u.field() == v.field())) throw ContextMismatch("sym ext: different fields");
  const int d = u.degree();
  if (d > max_sym_degree()) throw BudgetExceeded("sym ext: degree above cap");
  const FieldSpec& f = u.field();
  auto G = sym_group(d);
  const std::size_t N = G->perms.size();
  auto rho_u = all_matrices(u);
  auto rho_v = all_matrices(v);

  // stage k: generators of P_k as elements of P_{k-1} (or of u for k = 0)
  std::vector<std::vector<Vec>> gens;
  std::size_t prev_dim = u.dim();
  // P_0
  {
    std::vector<Vec> cands;
    for (std::size_t i = 0; i < u.dim(); ++i) {
      Vec e(u.dim(), 0);
      e[i] = 1;
      cands.push_back(std::move(e));
    }
    gens.push_back(pick_generators(f, u.dim(), cands, u.dim(), [&](const Vec& x) {
      std::vector<Vec> o;
      for (std::size_t g = 0; g < N; ++g) o.push_back(rho_u[g].apply(x));
      return o;
    }));
  }
  // map P_k -> previous, column (a, g) = g . gen_a
  auto map_of = [&](const std::vector<Vec>& gk, bool into_u) {
    std::vector<Vec> cols;
    for (auto& x : gk)
      for (std::size_t g = 0; g < N; ++g)
        cols.push_back(into_u ? rho_u[g].apply(x) : act_free(*G, int(g), x));
    return ExactMatrix::from_columns(f, cols, into_u ? u.dim() : gk.empty() ? 0 : gk[0].size());
  };
  for (int k = 0; k <= kmax; ++k) {
    ExactMatrix dk = map_of(gens[k], k == 0);
    if (k > 0 && dk.rows() != prev_dim) throw AssertFailure("sym resolution shape");
    std::vector<Vec> ker = kernel_basis(dk);
    const std::size_t dimP = gens[k].size() * N;
    if (dimP > 20000) throw BudgetExceeded("sym resolution term too large");
    prev_dim = dimP;
    gens.push_back(pick_generators(f, dimP, ker, ker.size(), [&](const Vec& x) {
      std::vector<Vec> o;
      for (std::size_t g = 0; g < N; ++g) o.push_back(act_free(*G, int(g), x));
      return o;
    }));
  }
  // Hom(P_k, v) = v^{m_k}; delta^k sends y to (sum_a rho_v(w_ba) y_a)_b
  auto delta_rank = [&](int k) -> std::size_t {
    if (k < 0) return 0;
    const auto& src = gens[k];
    const auto& dst = gens[k + 1];
    if (src.empty() || dst.empty()) return 0;
    const std::size_t D = v.dim();
    ExactMatrix m(f, dst.size() * D, src.size() * D);
    for (std::size_t b = 0; b < dst.size(); ++b)
      for (std::size_t a = 0; a < src.size(); ++a) {
        Vec x(dst[b].begin() + a * N, dst[b].begin() + (a + 1) * N);
        if (std::all_of(x.begin(), x.end(), [](Scalar s) { return s == 0; })) continue;
        ExactMatrix blk = group_algebra_action(rho_v, x, f, D);
        for (auto& e : blk.entries()) m.set(b * D + e.row, a * D + e.col, e.value);
      }
    return rank(m);
  };
  std::size_t prev = 0;
  for (int k = 0; k <= kmax; ++k) {
    std::size_t r = delta_rank(k);
    out[k] = gens[k].size() * v.dim() - r - prev;
    prev = r;
  }
  return out;
}

std::size_t sym_ext(const SymRep& u, const SymRep& v, int k) {
  return sym_ext_dims(u, v, k)[k];
}

std::size_t sym_hom(const SymRep& u, const SymRep& v) { return sym_ext(u, v, 0); }

// ---------------------------------------------------------------- mullineux

Partition mullineux(const Partition& mu, FieldSpec f) {
  const unsigned p = f.p();
  if (!is_pr_restricted(mu, p, 1)) throw NotRestricted("mullineux needs a p-restricted partition");
  const int d = mu.weight();
  if (d == 0) return mu;
  RepContext ctx(f, d);
  SymRep target = sign_twist(schur_functor(*simple_module(mu, ctx)));
  std::vector<Partition> hits;
  for (auto& nu : enumerate_partitions(d, d)) {
    if (!is_pr_restricted(nu, p, 1)) continue;
    SymRep s = schur_functor(*simple_module(nu, ctx));
    IsoResult r = sym_iso_test(s, target);
    if (r == IsoResult::Inconclusive) throw AssertFailure("mullineux: inconclusive iso test");
    if (r == IsoResult::Isomorphic) hits.push_back(nu);
  }
  if (hits.size() != 1) throw AssertFailure("mullineux: no unique match");
  return hits[0];
}

// ---------------------------------------------------------------- thm-KN

Report verify_kn(PolyRepPtr f, PolyRepPtr g, int kmax) {
  Report rep("kn-schur");
  InvariantValue pf = invariant_p(f, 1), ig = invariant_i(g, 1);
  auto lim = [](const InvariantValue& v) {
    return v.kind == InvariantValue::Kind::Infinite ? INT_MAX / 4 : v.value;
  };
  const int bound = lim(pf) + lim(ig) - 1;
  SymRep sf = schur_functor(*f), sg = schur_functor(*g);
  auto ep = ext_dims(f, g, kmax);
  auto es = sym_ext_dims(sf, sg, kmax);
  for (int k = 0; k <= kmax; ++k) {
    nlohmann::json w = {{"k", k}, {"ext_P", ep[k]}, {"ext_S", es[k]}, {"bound", bound},
                        {"p_F", pf.to_string()}, {"i_G", ig.to_string()}};
    if (k < bound)
      rep.add("k=" + std::to_string(k) + " iso", ep[k] == es[k], w);
    else if (k == bound)
      rep.add("k=" + std::to_string(k) + " injective", ep[k] <= es[k], w);
  }
  return rep;
}

Report verify_kn_boundary(unsigned p) {
  Report rep("kn-boundary");
  FieldSpec f(p);
  const int d = int(p);
  RepContext ctx(f, d);
  {
    auto gam = share(divided_power(d, ctx));
    auto q = truncated_symmetric(d, ctx);
    std::size_t hp = hom_dim(*gam, *q);
    std::size_t hs = sym_hom(schur_functor(*gam), schur_functor(*q));
    rep.add("Gamma^p vs Q^p: hom differs", hp == 0 && hs == 1,
            {{"hom_P", hp}, {"hom_S", hs}});
  }
  {
    auto t = share(twisted_tensor({0, 1}, ctx));
    auto s = share(symmetric_power(d, ctx));
    SymRep ft = schur_functor(*t);
    std::size_t hp = hom_dim(*t, *s);
    rep.add("T(p,1) killed by the Schur functor", ft.dim() == 0 && hp > 0,
            {{"dim_fT", ft.dim()}, {"hom_P", hp}});
  }
  return rep;
}

// ---------------------------------------------------------------- io

std::string serialize(const SymRep& u) {
  std::ostringstream o;
  o << "SYMREP v1 p=" << u.field().p() << " d=" << u.degree() << " dim=" << u.dim() << "\n";
  for (std::size_t i = 0; i < u.gens().size(); ++i) {
    auto es = u.gens()[i].entries();
    o << "gen " << i + 1 << " " << es.size() << "\n";
    for (auto& e : es) o << e.row << " " << e.col << " " << unsigned(e.value) << "\n";
  }
  return o.str();
}

SymRep deserialize_symrep(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string tag, ver, ps, ds, dims;
  if (!(in >> tag >> ver >> ps >> ds >> dims) || tag != "SYMREP" || ver != "v1")
    throw FormatError("bad SYMREP header");
  auto field = [](const std::string& tok, const char* name) {
    std::string pre = std::string(name) + "=";
    if (tok.rfind(pre, 0) != 0) throw FormatError("expected " + pre);
    try {
      return std::stoll(tok.substr(pre.size()));
    } catch (...) {
      throw FormatError("bad number in " + tok);
    }
  };
  long long p = field(ps, "p"), d = field(ds, "d"), dim = field(dims, "dim");
  if (p < 2 || p > 251 || !is_prime(unsigned(p)) || d < 0 || d > 16 || dim < 0)
    throw FormatError("bad SYMREP parameters");
  FieldSpec f{unsigned(p)};
  std::vector<ExactMatrix> gens;
  for (long long i = 0; i + 1 < d; ++i) {
    std::string g;
    long long idx = 0, nnz = 0;
    if (!(in >> g >> idx >> nnz) || g != "gen" || idx != i + 1 || nnz < 0)
      throw FormatError("bad generator block");
    ExactMatrix m(f, std::size_t(dim), std::size_t(dim));
    for (long long t = 0; t < nnz; ++t) {
      long long r, c, v;
      if (!(in >> r >> c >> v) || r < 0 || c < 0 || r >= dim || c >= dim || v <= 0 || v >= p)
        throw FormatError("bad generator entry");
      m.set(std::size_t(r), std::size_t(c), Scalar(v));
    }
    gens.push_back(std::move(m));
  }
  try {
    return SymRep(f, int(d), std::size_t(dim), std::move(gens));
  } catch (const AssertFailure& e) {
    throw FormatError(std::string("not a module: ") + e.what());
  }
}

nlohmann::json to_json(const SymRep& u) {
  nlohmann::json g = nlohmann::json::array();
  for (auto& m : u.gens()) {
    nlohmann::json es = nlohmann::json::array();
    for (auto& e : m.entries()) es.push_back({e.row, e.col, e.value});
    g.push_back(es);
  }
  return {{"p", u.field().p()}, {"d", u.degree()}, {"dim", u.dim()}, {"gens", g}};
}

}  // namespace polyrep
