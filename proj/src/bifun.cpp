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

#include "polyrep/bifun.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "polyrep/daytensor.hpp"
#include "polyrep/errors.hpp"
#include "polyrep/homology.hpp"

namespace polyrep {

BiRep as_birep(PolyRepPtr rep) {
  if (rep->layout().blocks.size() != 2) throw ContextMismatch("bifunctor needs two blocks");
  BiRep b;
  b.rep = rep;
  const int n = rep->layout().blocks[0];
  for (std::size_t i = 0; i < rep->dim(); ++i) {
    const Weight& w = rep->weights()[i];
    int d = 0, e = 0;
    for (int c = 0; c < rep->coords(); ++c) (c < n ? d : e) += w[c];
    if (i == 0) {
      b.d = d;
      b.e = e;
    } else if (d != b.d || e != b.e) {
      throw DegreeMismatch("bifunctor is not bihomogeneous");
    }
  }
  return b;
}

BiRep zero_birep(FieldSpec f, int n, int m, int d, int e) {
  BiRep b;
  b.rep = share(PolyRep(f, Layout{{n, m}}, d + e, {}, {}));
  b.d = d;
  b.e = e;
  return b;
}

BiRep boxtimes(const PolyRep& a, const PolyRep& b) {
  if (a.layout().blocks.size() != 1 || b.layout().blocks.size() != 1)
    throw ContextMismatch("boxtimes takes GL_n modules");
  BiRep out;
  out.rep = share(outer_tensor(a, b));
  out.d = a.degree();
  out.e = b.degree();
  return out;
}

PolyRep phi(const BiRep& b, int r) {
  const int n = b.n(), m = b.m();
  if (n != m) throw ContextMismatch("phi needs n == m");
  const PolyRep& rep = *b.rep;
  const int C = n + m;
  const int q = int(ipow(rep.field().p(), unsigned(r)));
  std::vector<Weight> ws;
  for (const Weight& w : rep.weights()) {
    std::vector<int> v(std::size_t(n), 0);
    for (int i = 0; i < n; ++i) v[i] = w[i] + q * w[n + i];
    ws.push_back(weight_from(v));
  }
  std::vector<CoeffEntry> es;
  for (const CoeffEntry& e : rep.entries()) {
    std::vector<int> pos;
    for (int x : e.key) {
      int i = x / C, j = x % C;
      if (i < n) {
        pos.push_back(i * n + j);
      } else {
        for (int t = 0; t < q; ++t) pos.push_back((i - n) * n + (j - n));
      }
    }
    es.push_back({ExponentKey::from_positions(pos), e.row, e.col, e.value});
  }
  std::string label;
  if (!rep.label().empty())
    label = "Phi_" + std::to_string(r) + "(" + rep.label() + ")";
  return PolyRep(rep.field(), Layout::single(n), b.d + q * b.e, std::move(ws),
                 std::move(es), label);
}

PolyRep delta(const BiRep& b) { return phi(b, 0); }

std::vector<BiRep> boxplus(const PolyRep& f, int n, int m) {
  if (f.layout().blocks.size() != 1 || f.coords() != n + m)
    throw ContextMismatch("boxplus needs a GL_{n+m} module");
  const int C = n + m;
  Layout L{{n, m}};
  std::vector<CoeffEntry> es;
  for (const CoeffEntry& e : f.entries()) {
    bool levi = true;
    for (int x : e.key) levi = levi && ((x / C < n) == (x % C < n));
    if (levi) es.push_back(e);
  }
  PolyRep restricted(f.field(), L, f.degree(), f.weights(), std::move(es));
  std::vector<BiRep> out;
  for (int d = f.degree(); d >= 0; --d) {
    std::vector<std::uint32_t> basis;
    for (std::uint32_t i = 0; i < f.dim(); ++i) {
      int s = 0;
      for (int c = 0; c < n; ++c) s += f.weights()[i][c];
      if (s == d) basis.push_back(i);
    }
    if (basis.empty()) {
      out.push_back(zero_birep(f.field(), n, m, d, f.degree() - d));
      continue;
    }
    BiRep b = as_birep(share(coordinate_submodule(restricted, basis)));
    out.push_back(b);
  }
  return out;
}

std::size_t hom_bi(const BiRep& a, const BiRep& b) {
  if (a.d != b.d || a.e != b.e) return 0;
  return hom_dim(*a.rep, *b.rep);
}

std::vector<std::size_t> ext_bi(const BiRep& a, const BiRep& b, int kmax) {
  if (a.d != b.d || a.e != b.e) return std::vector<std::size_t>(std::size_t(kmax + 1), 0);
  return ext_dims(a.rep, b.rep, kmax);
}

Submodule tensor_submodule(const Submodule& a, const Submodule& b, PolyRepPtr ambient) {
  const std::size_t nb = b.ambient().dim();
  if (ambient->dim() != a.ambient().dim() * nb)
    throw DimensionMismatch("tensor_submodule: ambient dimension");
  std::vector<SparseVec> vs;
  auto ba = a.basis(), bb = b.basis();
  const FieldSpec& f = ambient->field();
  for (const Vec& u : ba)
    for (const Vec& v : bb) {
      SparseVec s;
      for (std::size_t i = 0; i < u.size(); ++i)
        if (u[i])
          for (std::size_t j = 0; j < nb; ++j)
            if (v[j]) s.emplace_back(std::uint32_t(i * nb + j), f.mul(u[i], v[j]));
      vs.push_back(std::move(s));
    }
  return Submodule::generated(ambient, vs);
}

// ---------------------------------------------------------------- lattices

namespace {

std::string fingerprint(const Submodule& s) {
  std::string out;
  for (std::size_t b = 0; b < s.blocks(); ++b) {
    for (const Vec& v : s.block(b).basis()) out.append(v.begin(), v.end());
    out.push_back('\xff');
  }
  return out;
}

std::vector<std::size_t> weight_dims(const Submodule& s) {
  std::vector<std::size_t> out;
  for (std::size_t b = 0; b < s.blocks(); ++b) out.push_back(s.block(b).dim());
  return out;
}

}  // namespace

std::vector<Submodule> submodule_lattice(PolyRepPtr m) {
  const unsigned p = m->field().p();
  const std::size_t n = m->dim();
  double count = 1;
  for (std::size_t i = 0; i < n; ++i) count *= p;
  if (count > 4096) throw BudgetExceeded("lattice enumeration needs p^dim <= 2^12");
  std::map<std::string, Submodule> seen;
  Submodule zero(m);
  seen.emplace(fingerprint(zero), zero);
  // nonzero vectors with leading coefficient 1
  Vec v(n, 0);
  for (std::size_t lead = 0; lead < n; ++lead) {
    std::fill(v.begin(), v.end(), 0);
    v[lead] = 1;
    while (true) {
      Submodule c = Submodule::generated(m, std::vector<Vec>{v});
      seen.emplace(fingerprint(c), c);
      std::size_t k = n;
      while (k-- > lead + 1) {
        if (++v[k] < p) break;
        v[k] = 0;
      }
      if (k == lead) break;
    }
  }
  std::vector<Submodule> all;
  for (auto& kv : seen) all.push_back(kv.second);
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) {
      Submodule s = all[i] + all[j];
      if (seen.emplace(fingerprint(s), s).second) all.push_back(s);
    }
  std::sort(all.begin(), all.end(),
            [](const Submodule& a, const Submodule& b) { return a.dim() < b.dim(); });
  return all;
}

Diagram module_diagram(PolyRepPtr m) {
  auto lat = submodule_lattice(m);
  const auto& blocks = m->weight_blocks();
  // join-irreducibles: a unique maximal proper member below
  std::vector<std::size_t> ji;
  std::vector<Weight> heads;
  for (std::size_t i = 0; i < lat.size(); ++i) {
    if (lat[i].is_zero()) continue;
    std::vector<std::size_t> below;
    for (std::size_t j = 0; j < lat.size(); ++j)
      if (j != i && lat[j].dim() < lat[i].dim() && lat[i].contains(lat[j])) below.push_back(j);
    std::vector<std::size_t> maximal;
    for (std::size_t j : below) {
      bool top = true;
      for (std::size_t k : below)
        if (k != j && lat[k].dim() > lat[j].dim() && lat[k].contains(lat[j])) top = false;
      if (top) maximal.push_back(j);
    }
    if (maximal.size() != 1) continue;
    auto hi = weight_dims(lat[i]), lo = weight_dims(lat[maximal[0]]);
    std::optional<Weight> best;
    for (std::size_t b = 0; b < blocks.size(); ++b)
      if (hi[b] > lo[b] && (!best || weight_greater(blocks[b].weight, *best))) best = blocks[b].weight;
    ji.push_back(i);
    heads.push_back(*best);
  }
  // composition length along one maximal chain
  std::size_t length = 0;
  {
    std::size_t cur = 0;
    while (!lat[cur].is_whole()) {
      std::size_t next = lat.size();
      for (std::size_t j = 0; j < lat.size(); ++j)
        if (lat[j].dim() > lat[cur].dim() && lat[j].contains(lat[cur]) &&
            (next == lat.size() || lat[j].dim() < lat[next].dim()))
          next = j;
      cur = next;
      ++length;
    }
  }
  Diagram g;
  g.vertices = heads;
  std::set<Weight> distinct(heads.begin(), heads.end());
  g.multiplicity_free = distinct.size() == heads.size() && heads.size() == length;
  for (std::size_t x = 0; x < ji.size(); ++x)
    for (std::size_t y = 0; y < ji.size(); ++y) {
      if (x == y || !lat[ji[x]].contains(lat[ji[y]])) continue;
      bool cover = true;
      for (std::size_t z = 0; z < ji.size(); ++z)
        if (z != x && z != y && lat[ji[x]].contains(lat[ji[z]]) &&
            lat[ji[z]].contains(lat[ji[y]]))
          cover = false;
      if (cover) g.edges.push_back({x, y});
    }
  return g;
}

namespace {

std::string weight_string(const Weight& w, int coords) {
  std::string s = "L(";
  int last = coords;
  while (last > 1 && w[last - 1] == 0) --last;
  for (int i = 0; i < last; ++i) s += (i ? "," : "") + std::to_string(w[i]);
  return s + ")";
}

}  // namespace

std::string diagram_edges(const Diagram& g, int coords) {
  std::ostringstream o;
  for (auto [x, y] : g.edges)
    o << weight_string(g.vertices[x], coords) << " -> " << weight_string(g.vertices[y], coords)
      << "\n";
  if (g.edges.empty())
    for (auto& v : g.vertices) o << weight_string(v, coords) << "\n";
  return o.str();
}

// ---------------------------------------------------------------- claims

namespace {

Weight combine(const Weight& a, const Weight& b, int q, int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v[i] = a[i] + q * b[i];
  return weight_from(v);
}

// S_k of the product = sum over i + j = k + 1 of S_i (x) S_j
std::vector<Submodule> product_series(const std::vector<Submodule>& a,
                                      const std::vector<Submodule>& b, PolyRepPtr amb) {
  std::vector<Submodule> out;
  const std::size_t len = a.size() + b.size() - 1;
  for (std::size_t k = 1; k <= len; ++k) {
    Submodule acc(amb);
    for (std::size_t i = 1; i <= a.size(); ++i) {
      if (i > k) break;
      std::size_t j = k + 1 - i;
      if (j > b.size()) continue;
      acc = acc + tensor_submodule(a[i - 1], b[j - 1], amb);
    }
    out.push_back(acc);
  }
  return out;
}

}  // namespace

Report verify_steinberg_lattice(PolyRepPtr f, PolyRepPtr g, int r) {
  Report rep("steinberg-type lattice");
  const unsigned p = f->field().p();
  const int q = int(ipow(p, unsigned(r)));
  std::string name = f->label() + " (x) (" + g->label() + ")^(" + std::to_string(r) + ")";
  auto Ms = share(tensor(*f, twist(*g, r)));
  double count = 1;
  for (std::size_t i = 0; i < Ms->dim(); ++i) count *= p;
  if (Ms->dim() > 0 && Ms->dim() <= 12 && count <= 4096) {
    Diagram dm = module_diagram(Ms);
    if (dm.multiplicity_free) {
      auto lf = submodule_lattice(f), lg = submodule_lattice(g), lm = submodule_lattice(Ms);
      std::vector<Submodule> prods;
      for (auto& a : lf)
        for (auto& b : lg) prods.push_back(tensor_submodule(a, b, Ms));
      bool ok = true;
      for (auto& s : lm) {
        Submodule acc(Ms);
        for (auto& t : prods)
          if (s.contains(t)) acc = acc + t;
        ok = ok && acc == s;
      }
      rep.add(name + ": submodules are sums of products", ok,
              {{"lattice_size", lm.size()}, {"dim", Ms->dim()}, {"coords", Ms->coords()}});
      Diagram da = module_diagram(f), db = module_diagram(g);
      const int n = Ms->coords();
      std::set<std::pair<Weight, Weight>> want, got;
      for (auto [x, y] : da.edges)
        for (auto& b : db.vertices)
          want.insert({combine(da.vertices[x], b, q, n), combine(da.vertices[y], b, q, n)});
      for (auto [x, y] : db.edges)
        for (auto& a : da.vertices)
          want.insert({combine(a, db.vertices[x], q, n), combine(a, db.vertices[y], q, n)});
      for (auto [x, y] : dm.edges) got.insert({dm.vertices[x], dm.vertices[y]});
      std::set<Weight> vw, vg(dm.vertices.begin(), dm.vertices.end());
      for (auto& a : da.vertices)
        for (auto& b : db.vertices) vw.insert(combine(a, b, q, n));
      rep.add(name + ": diagram is the product", want == got && vw == vg,
              {{"edges", diagram_edges(dm, n)}});
    }
  }
  return rep;
}

Report verify_steinberg_type(PolyRepPtr f, PolyRepPtr g, int r) {
  Report rep("steinberg-type");
  const unsigned p = f->field().p();
  const int q = int(ipow(p, unsigned(r)));
  const int df = f->degree(), dg = g->degree();
  const int D = std::max(df + q * dg, 1);
  if (D > 5) throw BudgetExceeded("steinberg-type check needs total degree <= 5");
  std::string name = f->label() + " (x) (" + g->label() + ")^(" + std::to_string(r) + ")";

  auto fd = share(evaluate_at(*f, std::max(df, 1)));
  for (auto& [lam, k] : as_partitions(composition_factors(fd), std::max(df, 1))) {
    (void)k;
    if (!is_pr_restricted(lam, p, r))
      throw NotRestricted("factor L" + lam.to_string() + " of the first functor");
  }
  auto gd = share(evaluate_at(*g, std::max(dg, 1)));
  auto F = share(evaluate_at(*f, D)), G = share(evaluate_at(*g, D));
  auto M = share(tensor(*F, twist(*G, r)));

  // (a) hom comparison through Phi
  {
    BiRep b = boxtimes(*fd, *gd);
    BiRep c = boxtimes(*fd, dual(*gd));
    std::size_t h1 = hom_bi(b, b), h2 = hom_dim(*M, *M);
    std::size_t h3 = hom_bi(b, c), h4 = hom_dim(*M, tensor(*F, twist(dual(*G), r)));
    rep.add(name + ": hom into itself", h1 == h2, {{"bi", h1}, {"phi", h2}});
    rep.add(name + ": hom into the dual twist", h3 == h4, {{"bi", h3}, {"phi", h4}});
  }
  // (b) socle series
  {
    auto sm = socle_series(M);
    auto pred = product_series(socle_series(F), socle_series(G), M);
    bool ok = sm.size() == pred.size();
    for (std::size_t k = 0; ok && k < sm.size(); ++k) ok = sm[k] == pred[k];
    nlohmann::json w = {{"loewy_length", sm.size()}, {"predicted_length", pred.size()}};
    std::vector<std::size_t> dims;
    for (auto& s : sm) dims.push_back(s.dim());
    w["socle_dims"] = dims;
    rep.add(name + ": socle series", ok, w);
  }
  if (is_simple(F) && is_simple(G))
    rep.add(name + ": simple", is_simple(M), {{"dim", M->dim()}});
  rep.absorb(verify_steinberg_lattice(f, g, r));
  return rep;
}

Report verify_appendixA(const std::vector<std::pair<PolyRepPtr, PolyRepPtr>>& samples) {
  Report rep("bicomodules");
  for (auto& [m, n] : samples) {
    std::string name = m->label() + " # " + n->label();
    BiRep b = boxtimes(*m, *n);
    auto B = b.rep;
    rep.add(name + ": socle",
            socle(B) == tensor_submodule(socle(m), socle(n), B));
    Submodule rad_pred = tensor_submodule(radical(m), Submodule::whole(n), B) +
                         tensor_submodule(Submodule::whole(m), radical(n), B);
    rep.add(name + ": head", radical(B) == rad_pred);
    auto sb = socle_series(B);
    auto pred = product_series(socle_series(m), socle_series(n), B);
    bool ok = sb.size() == pred.size();
    for (std::size_t k = 0; ok && k < sb.size(); ++k) ok = sb[k] == pred[k];
    rep.add(name + ": socle series", ok, {{"loewy_length", sb.size()}});
    rep.add(name + ": simple iff both factors are",
            is_simple(B) == (is_simple(m) && is_simple(n)));
    for (int t = 0; t < 2; ++t) {
      auto x = t == 0 ? m : share(dual(*m));
      auto y = t == 0 ? n : share(dual(*n));
      BiRep c = boxtimes(*x, *y);
      auto lhs = ext_bi(b, c, 1);
      auto e1 = ext_dims(m, x, 1), e2 = ext_dims(n, y, 1);
      std::size_t h = e1[0] * e2[0];
      std::size_t k1 = e1[1] * e2[0] + e1[0] * e2[1];
      rep.add(name + (t == 0 ? ": kunneth into itself" : ": kunneth into the duals"),
              lhs[0] == h && lhs[1] == k1,
              {{"ext_bi", lhs}, {"hom_product", h}, {"ext1_sum", k1}});
    }
  }
  return rep;
}

}  // namespace polyrep
