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

#include "polyrep/suites.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "polyrep/bifun.hpp"
#include "polyrep/daytensor.hpp"
#include "polyrep/errors.hpp"
#include "polyrep/functor_expr.hpp"
#include "polyrep/modkit.hpp"
#include "polyrep/parser.hpp"
#include "polyrep/partitions.hpp"
#include "polyrep/symbridge.hpp"

namespace polyrep {

namespace {

struct Run {
  const SuiteConfig& cfg;
  SuiteResult out;

  PolyRepPtr keep(PolyRepPtr m) {
    out.objects.push_back(m);
    return m;
  }
  bool checking() const { return !cfg.objects_only; }
  Report& rep() { return out.report; }
};

PolyRepPtr make(const std::string& text, const RepContext& ctx) {
  PolyRep m = *build(*parse_expr(text), ctx);
  m.set_label(text);
  return share(std::move(m));
}

PolyRepPtr labelled(PolyRep m, std::string label) {
  m.set_label(std::move(label));
  return share(std::move(m));
}

bool positive(const InvariantValue& v) {
  return v.kind != InvariantValue::Kind::Finite || v.value > 0;
}

nlohmann::json jv(const InvariantValue& v) { return v.to_json(); }

std::string tag(unsigned p) { return " p=" + std::to_string(p); }

// ---------------------------------------------------------------- table

std::vector<std::vector<InvariantValue>> table_rows(
    const std::vector<PolyRepPtr>& fs, const std::vector<int>& rs,
    std::optional<int> cap, DetectTarget target) {
  std::vector<std::vector<InvariantValue>> rows;
  for (int r : rs) {
    std::vector<InvariantValue> row;
    for (auto& f : fs) row.push_back(invariant_i(f, r, cap, target));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<PolyRepPtr> table_modules(int n) {
  RepContext ctx(2, n);
  std::vector<PolyRepPtr> fs;
  for (auto& s : table_functors()) fs.push_back(make(s, ctx));
  return fs;
}

void suite_prop65(Run& run) {
  const int n = run.cfg.n.value_or(4);
  auto fs = table_modules(n);
  for (auto& f : fs) run.keep(f);
  if (!run.checking()) return;
  const auto& want = table_expected();
  auto rows = table_rows(fs, {1, 2}, run.cfg.cap, DetectTarget::T);
  for (std::size_t k = 0; k < rows.size(); ++k)
    for (std::size_t j = 0; j < fs.size(); ++j) {
      const int r = int(k) + 1;
      run.rep().add("i(" + fs[j]->label() + "," + std::to_string(r) + ")",
                    rows[k][j] == InvariantValue::finite(want[k][j]),
                    {{"computed", jv(rows[k][j])}, {"expected", want[k][j]}});
    }
  // the simple detection family must give the same row
  auto lrow = table_rows(fs, {1}, run.cfg.cap, DetectTarget::L);
  for (std::size_t j = 0; j < fs.size(); ++j)
    run.rep().add("i(" + fs[j]->label() + ",1) via L(4,1)", lrow[0][j] == rows[0][j],
                  {{"T", jv(rows[0][j])}, {"L", jv(lrow[0][j])}});
}

// ---------------------------------------------------------------- closed forms

void suite_prop61(Run& run) {
  struct Case { unsigned p; int d, r; };
  const Case cases[] = {{2, 2, 1}, {2, 4, 1}, {2, 4, 2}, {3, 3, 1}};
  for (auto c : cases) {
    RepContext ctx(c.p, c.d);
    const int q1 = int(ipow(c.p, unsigned(c.r))) - 1;
    const std::pair<std::string, int> forms[] = {
        {"Sym[" + std::to_string(c.d) + "]", 0},
        {"Wedge[" + std::to_string(c.d) + "]", q1},
        {"Div[" + std::to_string(c.d) + "]", 2 * q1}};
    for (auto& [text, want] : forms) {
      auto f = run.keep(make(text, ctx));
      if (!run.checking()) continue;
      auto v = invariant_i(f, c.r, run.cfg.cap);
      run.rep().add("i(" + text + "," + std::to_string(c.r) + ")" + tag(c.p),
                    v == InvariantValue::finite(want),
                    {{"computed", jv(v)}, {"expected", want}});
    }
  }
}

// ---------------------------------------------------------------- calculus

void suite_prop_op(Run& run) {
  const auto cap = run.cfg.cap;
  RepContext c2(2, 2), c4(2, 4), c3(3, 3);
  std::vector<std::pair<PolyRepPtr, int>> duals;
  for (auto s : {"Sym[2]", "Wedge[2]", "Div[2]"}) duals.push_back({run.keep(make(s, c2)), 1});
  for (auto s : {"Sym[4]", "Wedge[4]", "Div[4]", "W[3,1]", "C[3,1]"}) {
    auto f = run.keep(make(s, c4));
    duals.push_back({f, 1});
    duals.push_back({f, 2});
  }
  for (auto s : {"Sym[3]", "Div[3]"}) duals.push_back({run.keep(make(s, c3)), 1});

  std::vector<std::pair<PolyRepPtr, PolyRepPtr>> prods;
  auto s2 = run.keep(make("Sym[2]", c4)), w2 = run.keep(make("Wedge[2]", c4)),
       g2 = run.keep(make("Div[2]", c4));
  prods = {{s2, w2}, {g2, w2}, {g2, g2}, {s2, g2}, {s2, s2}, {w2, w2}};
  std::vector<PolyRepPtr> tensors;
  for (auto& [a, b] : prods)
    tensors.push_back(run.keep(labelled(tensor(*a, *b), a->label() + " * " + b->label())));
  std::vector<std::pair<PolyRepPtr, PolyRepPtr>> sums = {
      {make("Sym[4]", c4), make("Wedge[4]", c4)},
      {make("Div[4]", c4), make("W[2,2]", c4)}};
  std::vector<PolyRepPtr> sum_mods;
  for (auto& [a, b] : sums)
    sum_mods.push_back(run.keep(labelled(direct_sum(*a, *b), a->label() + " + " + b->label())));
  // F(V (x) k^2) = F (+) F for a degree-1 parameter
  std::vector<PolyRepPtr> params = {s2, g2};
  std::vector<PolyRepPtr> param_mods;
  for (auto& f : params)
    param_mods.push_back(run.keep(labelled(direct_sum(*f, *f), f->label() + " (x) k^2")));
  std::vector<std::pair<PolyRepPtr, PolyRepPtr>> twists = {
      {g2, make("Tw(Div[2],1)", c4)},
      {w2, make("Tw(Wedge[2],1)", c4)},
      {s2, make("Tw(Sym[2],1)", c4)}};
  for (auto& t : twists) run.keep(t.second);
  if (!run.checking()) return;

  for (auto& [f, r] : duals) {
    auto pv = invariant_p(f, r, cap);
    auto iv = invariant_i(share(dual(*f)), r, cap);
    run.rep().add("p(" + f->label() + "," + std::to_string(r) + ") = i(dual)" + tag(f->field().p()),
                  pv == iv, {{"p", jv(pv)}, {"i_dual", jv(iv)}});
  }
  for (std::size_t k = 0; k < prods.size(); ++k) {
    auto [a, b] = prods[k];
    auto ia = invariant_i(a, 1, cap), ib = invariant_i(b, 1, cap);
    auto it = invariant_i(tensors[k], 1, cap);
    run.rep().add("i(" + tensors[k]->label() + ",1) = min", it == min(ia, ib),
                  {{"tensor", jv(it)}, {"left", jv(ia)}, {"right", jv(ib)}});
  }
  for (std::size_t k = 0; k < sums.size(); ++k) {
    auto ia = invariant_i(sums[k].first, 1, cap), ib = invariant_i(sums[k].second, 1, cap);
    auto it = invariant_i(sum_mods[k], 1, cap);
    run.rep().add("i(" + sum_mods[k]->label() + ",1) = min", it == min(ia, ib),
                  {{"sum", jv(it)}, {"left", jv(ia)}, {"right", jv(ib)}});
  }
  for (std::size_t k = 0; k < params.size(); ++k) {
    auto a = invariant_i(params[k], 1, cap), b = invariant_i(param_mods[k], 1, cap);
    run.rep().add("i(" + param_mods[k]->label() + ",1) = i(F,1)", a == b,
                  {{"F", jv(a)}, {"parametrized", jv(b)}});
  }
  for (auto& [f, t] : twists) {
    auto a = invariant_i(f, 1, cap), b = invariant_i(t, 2, cap);
    run.rep().add("i(" + f->label() + ",1) = i(twist,2)", a == b,
                  {{"F", jv(a)}, {"twisted", jv(b)}});
  }
  // positivity: i > 0 iff the socle is restricted, p > 0 iff the head is
  std::vector<PolyRepPtr> pos;
  for (auto& d : duals)
    if (d.second == 1) pos.push_back(d.first);
  for (auto& t : tensors) pos.push_back(t);
  for (auto& f : pos) {
    auto iv = invariant_i(f, 1, cap), pv = invariant_p(f, 1, cap);
    const bool soc = socle_restricted(f, 1), hd = head_restricted(f, 1);
    run.rep().add("positivity of i(" + f->label() + ",1)" + tag(f->field().p()),
                  positive(iv) == soc, {{"i", jv(iv)}, {"socle_restricted", soc}});
    run.rep().add("positivity of p(" + f->label() + ",1)" + tag(f->field().p()),
                  positive(pv) == hd, {{"p", jv(pv)}, {"head_restricted", hd}});
  }
  // both detection families
  for (auto& f : pos) {
    auto a = invariant_i(f, 1, cap), b = invariant_i(f, 1, cap, DetectTarget::L);
    run.rep().add("i(" + f->label() + ",1) via L(d,1)" + tag(f->field().p()), a == b,
                  {{"T", jv(a)}, {"L", jv(b)}});
  }
}

// ---------------------------------------------------------------- steinberg

int default_dmax(unsigned p) { return p == 2 ? 5 : 4; }

void suite_steinberg(Run& run) {
  const unsigned p = run.cfg.p;
  const int dmax = run.cfg.dmax.value_or(default_dmax(p));
  for (int d = 1; d <= dmax; ++d) {
    RepContext ctx(p, run.cfg.n.value_or(d));
    for (auto& lam : enumerate_partitions(d, d)) {
      run.keep(simple_module(lam, ctx));
      if (run.checking()) run.rep().absorb(steinberg_check(lam, ctx), "p=" + std::to_string(p) + " ");
    }
  }
}

void suite_clausen_james(Run& run) {
  const unsigned p = run.cfg.p;
  const int dmax = run.cfg.dmax.value_or(5);
  for (int d = 1; d <= dmax; ++d) {
    RepContext ctx(p, run.cfg.n.value_or(d));
    run.keep(make("Pow[" + std::to_string(d) + "]", ctx));
    if (run.checking()) run.rep().absorb(clausen_james_check(d, ctx), "p=" + std::to_string(p) + " ");
  }
}

void suite_tenspres(Run& run) {
  const unsigned p = run.cfg.p;
  const int dmax = run.cfg.dmax.value_or(4);
  std::vector<Partition> restricted;
  for (int d = 1; d < dmax; ++d)
    for (auto& lam : enumerate_partitions(d, d))
      if (is_pr_restricted(lam, p, 1)) restricted.push_back(lam);
  for (std::size_t a = 0; a < restricted.size(); ++a)
    for (std::size_t b = a; b < restricted.size(); ++b) {
      const auto& l = restricted[a];
      const auto& m = restricted[b];
      const int d = l.weight() + m.weight();
      if (d > dmax) continue;
      RepContext ctx(p, run.cfg.n.value_or(d));
      run.keep(simple_module(l, ctx));
      run.keep(simple_module(m, ctx));
      if (run.checking()) run.rep().absorb(tenspres_check(l, m, ctx), "p=" + std::to_string(p) + " ");
    }
}

// ---------------------------------------------------------------- cup products

void suite_cup(Run& run) {
  struct Quad { std::string f, g, x, y; };
  std::vector<Quad> qs;
  const char* deg2[] = {"Sym[2]", "Wedge[2]", "Div[2]"};
  const char* deg3[] = {"Sym[3]", "Wedge[3]", "Div[3]"};
  for (auto f : deg2)
    for (auto g : deg2) qs.push_back({f, g, "Nat", "Nat"});
  for (auto f : deg3)
    for (auto g : deg3) qs.push_back({f, g, "Nat", "Nat"});
  for (auto x : deg2)
    for (auto y : deg2) qs.push_back({"Nat", "Nat", x, y});
  // heads and socles that are twists of Nat on both sides
  qs.push_back({"Div[2] * Nat", "Sym[2] * Nat", "Nat", "Nat"});
  qs.push_back({"Div[3]", "Sym[2] * Nat", "Nat", "Nat"});
  qs.push_back({"Div[2] * Nat", "Sym[3]", "Nat", "Nat"});

  std::size_t with = 0, without = 0, strict = 0;
  for (auto& q : qs) {
    const unsigned p = 2;
    const int r = 1;
    auto probe = parse_expr(q.f);
    const int n = degree(*probe, p) + 2 * degree(*parse_expr(q.x), p);
    RepContext ctx(p, run.cfg.n.value_or(n));
    auto f = run.keep(make(q.f, ctx)), g = run.keep(make(q.g, ctx));
    auto x = run.keep(make(q.x, ctx)), y = run.keep(make(q.y, ctx));
    if (!run.checking()) continue;
    Report rep = verify_cup_deg01(f, g, x, y, r);
    const std::string name = "(" + q.f + ", " + q.g + ", " + q.x + ", " + q.y + ") ";
    run.rep().absorb(rep, name);
    bool c1 = false, c2 = false, s = false;
    for (auto& i : rep.instances) {
      const auto& w = i.witness;
      if (w.contains("C1")) {
        c1 = w["C1"].get<bool>();
        c2 = w["C2"].get<bool>();
      }
      if (w.contains("hom_total") &&
          w["hom_total"].get<std::size_t>() >
              w["hom_FG"].get<std::size_t>() * w["hom_XY"].get<std::size_t>())
        s = true;
      if (w.contains("predicted") &&
          w["ext1_total"].get<std::size_t>() > w["predicted"].get<std::size_t>())
        s = true;
    }
    if (c1 || c2) {
      ++with;
    } else {
      ++without;
      if (s) ++strict;
    }
  }
  if (!run.checking()) return;
  run.rep().add("sample with C1 or C2 has at least 20 quadruples", with >= 20, {{"count", with}});
  run.rep().add("sample violating both has at least 5 quadruples", without >= 5, {{"count", without}});
  run.rep().add("strict inequality seen when both fail", strict >= 1, {{"count", strict}});
}

void suite_connectedness(Run& run) {
  struct Case { std::string f, g; int n, kmax; };
  std::vector<Case> cs = {{"Nat", "Nat", 3, 3},
                          {"Sym[2]", "Sym[2]", 4, 3},
                          {"Wedge[2]", "Wedge[2]", 4, 3},
                          {"Div[2]", "Sym[2]", 4, 3},
                          {"Sym[2]", "Div[2]", 4, 3}};
  if (run.cfg.dmax.value_or(6) >= 6) cs.push_back({"Sym[4]", "Sym[4]", 6, 2});
  for (auto& c : cs) {
    RepContext ctx(2, run.cfg.n.value_or(c.n));
    auto f = run.keep(make(c.f, ctx)), g = run.keep(make(c.g, ctx));
    auto x = run.keep(make("Nat", ctx));
    if (run.checking())
      run.rep().absorb(verify_connectedness(f, g, x, x, 1, c.kmax),
                       "(" + c.f + ", " + c.g + ", Nat, Nat) ");
  }
}

// ---------------------------------------------------------------- degree 4

void suite_lmses(Run& run) {
  RepContext ctx(2, run.cfg.n.value_or(4));
  for (auto s : {"Wedge[4]", "Wedge[3] * Nat", "C[2,1,1]", "C[2,2]", "C[3,1]", "Sym[4]"})
    run.keep(make(s, ctx));
  if (run.checking()) run.rep().absorb(verify_lmses(ctx));
}

void suite_ptitlm(Run& run) {
  RepContext ctx(2, run.cfg.n.value_or(4));
  const std::pair<Partition, Tuple> cases[] = {
      {Partition{2, 2}, {2, 1}},
      {Partition{1, 1, 1, 1}, {0, 0, 1}},
      {Partition{2, 2}, {4}},
      {Partition{3, 1}, {4}},
      {Partition{2, 1, 1}, {2, 1}},
      {Partition{3, 1}, {0, 2}}};
  for (auto& [lam, t] : cases) {
    run.keep(costandard_module(lam, ctx));
    run.keep(weyl_module(conjugate(lam), ctx));
    if (run.checking())
      run.rep().absorb(verify_shift_ptitlm(lam, t, ctx),
                       "(" + lam.to_string() + ") T" + tuple_to_string(t) + " ");
  }
}

// ---------------------------------------------------------------- steinberg type

struct Pair { unsigned p; std::string f, g; };

std::vector<Pair> socle_pairs() {
  return {{2, "Nat", "Sym[2]"},      {2, "Nat", "Div[2]"},  {2, "Nat", "Nat"},
          {2, "Wedge[2]", "Nat"},    {2, "Wedge[2] * Nat", "Nat"},
          {2, "L[2,1]", "Nat"},      {3, "Nat", "Nat"},     {3, "Wedge[2]", "Nat"},
          {3, "Sym[2]", "Nat"}};
}

std::vector<Pair> lattice_pairs() {
  return {{2, "Nat", "Sym[2]"}, {2, "Nat", "Div[2]"}, {2, "Wedge[2]", "Sym[2]"},
          {2, "Wedge[2]", "Div[2]"}, {2, "Nat", "Nat"}, {3, "Nat", "Sym[2]"}};
}

void suite_socle_steinberg(Run& run) {
  for (auto& pr : socle_pairs()) {
    auto df = degree(*parse_expr(pr.f), pr.p), dg = degree(*parse_expr(pr.g), pr.p);
    RepContext ctx(pr.p, std::max({df, dg, 2}));
    auto f = run.keep(make(pr.f, ctx)), g = run.keep(make(pr.g, ctx));
    if (run.checking()) run.rep().absorb(verify_steinberg_type(f, g, 1), "p=" + std::to_string(pr.p) + " ");
  }
}

// which: "submodules" or "diagram"
void suite_lattice(Run& run, const std::string& which) {
  std::size_t applicable = 0;
  for (auto& pr : lattice_pairs()) {
    RepContext ctx(pr.p, run.cfg.n.value_or(2));
    auto f = run.keep(make(pr.f, ctx)), g = run.keep(make(pr.g, ctx));
    run.keep(labelled(tensor(*f, twist(*g, 1)), pr.f + " * Tw(" + pr.g + ",1)"));
    if (!run.checking()) continue;
    Report rep = verify_steinberg_lattice(f, g, 1);
    bool any = false;
    for (auto& i : rep.instances)
      if (i.name.find(": " + which) != std::string::npos) {
        run.rep().instances.push_back({"p=" + std::to_string(pr.p) + " " + i.name, i.status, i.witness});
        any = true;
      }
    if (any) ++applicable;
  }
  if (run.checking())
    run.rep().add("multiplicity-free instances checked", applicable >= 3, {{"count", applicable}});
}

void suite_appA(Run& run) {
  std::vector<std::pair<PolyRepPtr, PolyRepPtr>> samples;
  const std::pair<std::string, std::string> p2[] = {
      {"Div[2]", "Sym[2]"}, {"Nat", "Sym[2]"},    {"Sym[2]", "Div[2]"},
      {"Sym[2]", "Sym[2]"}, {"Div[2]", "Div[2]"}, {"Wedge[2]", "Sym[2]"},
      {"Nat", "Nat"},       {"Sym[2]", "Nat"},    {"Div[2]", "Nat"},
      {"Nat", "Div[2]"}};
  RepContext c2(2, 2), c32(3, 2), c33(3, 3);
  for (auto& [a, b] : p2) samples.push_back({run.keep(make(a, c2)), run.keep(make(b, c2))});
  samples.push_back({run.keep(make("Sym[2]", c32)), run.keep(make("Nat", c32))});
  samples.push_back({run.keep(make("Sym[3]", c33)), run.keep(make("Div[2]", c32))});
  if (run.checking()) run.rep().absorb(verify_appendixA(samples));
}

// ---------------------------------------------------------------- schur functor

void suite_kn(Run& run) {
  RepContext c4(2, 4), c3(3, 3);
  auto s4 = run.keep(make("Sym[4]", c4)), g4 = run.keep(make("Div[4]", c4));
  auto s3 = run.keep(make("Sym[3]", c3)), g3 = run.keep(make("Div[3]", c3));
  if (!run.checking()) return;
  run.rep().absorb(verify_kn(s4, g4, 3), "p=2 ");
  run.rep().absorb(verify_kn(s3, g3, 3), "p=3 ");
  run.rep().absorb(verify_kn_boundary(2), "p=2 ");
  run.rep().absorb(verify_kn_boundary(3), "p=3 ");
}

// f_d(a (x) b) against the Kronecker product; r is the internal product
void kronecker_instance(Run& run, const std::string& name, const PolyRep& a,
                        const PolyRep& b, const PolyRep& r) {
  auto k = kronecker(schur_functor(a), schur_functor(b));
  auto fr = schur_functor(r);
  run.rep().add("f(" + name + ") = Kronecker", from_iso(sym_iso_test(fr, k, run.cfg.seed)),
                {{"dim", fr.dim()}, {"kronecker_dim", k.dim()}});
}

void suite_internal_calcul(Run& run) {
  RepContext c3(3, 3), c2(2, 2), c23(2, 3);
  auto q3 = run.keep(make("Q[3]", c3)), w3 = run.keep(make("Wedge[3]", c3));
  auto s3 = run.keep(make("Sym[3]", c3)), g3 = run.keep(make("Div[3]", c3));
  auto l21 = run.keep(make("L[2,1]", c3)), l111 = run.keep(make("L[1,1,1]", c3));
  auto l11 = run.keep(make("L[1,1]", c2)), l2 = run.keep(make("L[2]", c2));
  auto s2 = run.keep(make("Sym[2]", c2)), w2 = run.keep(make("Wedge[2]", c2));
  auto g2 = run.keep(make("Div[2]", c2)), p2 = run.keep(make("Pow[2]", c2));
  auto mixed = run.keep(make("Nat * Tw(Nat,1)", c23));
  auto w3b = run.keep(make("Wedge[3]", c23)), l21b = run.keep(make("L[2,1]", c23));
  if (!run.checking()) return;
  const auto seed = run.cfg.seed;
  auto iso = [&](const std::string& name, const PolyRep& a, const PolyRepPtr& b) {
    run.rep().add(name, from_iso(iso_test(share(a), b, seed)), {{"dim", a.dim()}});
  };

  PolyRep qw = internal_general(*q3, *w3);
  iso("Q[3] (x) Wedge[3] = Wedge[3] p=3", qw, w3);
  kronecker_instance(run, "Q[3] (x) Wedge[3]", *q3, *w3, qw);
  PolyRep ww = internal_general(*w3, *w3);
  iso("Wedge[3] (x) Wedge[3] = Sym[3] p=3", ww, s3);
  kronecker_instance(run, "Wedge[3] (x) Wedge[3]", *w3, *w3, ww);
  iso("Q formula agrees on Wedge[3]", internal_with_Q(*w3), share(qw));
  iso("wedge formula agrees on Wedge[3]", internal_with_wedge(*w3), share(ww));

  // L_mu (x) Wedge^d against L_m(mu) (x) Q^d
  for (auto& mu : {Partition{2, 1}, Partition{1, 1, 1}}) {
    auto lm = simple_module(mu, c3);
    auto nu = mullineux(mu, c3.field);
    auto ln = simple_module(nu, c3);
    PolyRep a = internal_with_wedge(*lm);
    PolyRep b = internal_with_Q(*ln);
    run.rep().add("L[" + mu.to_string() + "] (x) Wedge[3] = L[" + nu.to_string() + "] (x) Q[3]",
                  from_iso(iso_test(share(a), share(b), seed)),
                  {{"dim", a.dim()}, {"mullineux", nu.to_string()}});
    kronecker_instance(run, "L[" + mu.to_string() + "] (x) Wedge[3]", *lm, *w3, a);
  }

  // unit law
  for (auto& f : {s3, l21}) {
    PolyRep u = internal_general(*g3, *f);
    iso("Div[3] (x) " + f->label() + " = " + f->label(), u, f);
    kronecker_instance(run, "Div[3] (x) " + f->label(), *g3, *f, u);
  }
  {
    PolyRep u = internal_general(*g2, *s2);
    iso("Div[2] (x) Sym[2] = Sym[2] p=2", u, s2);
  }

  // symmetry
  for (auto& [a, b] : {std::pair{s3, l21}, std::pair{w2, s2}}) {
    PolyRep x = internal_oriented(*a, *b), y = internal_oriented(*b, *a);
    iso(a->label() + " (x) " + b->label() + " is symmetric", x, share(y));
    kronecker_instance(run, a->label() + " (x) " + b->label(), *a, *b, x);
  }

  // tensor power formula
  for (auto& f : {s2, l11}) {
    PolyRep a = internal_with_tensorpower(*f), b = internal_general(*p2, *f);
    iso("tensor power formula on " + f->label(), a, share(b));
    kronecker_instance(run, "Pow[2] (x) " + f->label(), *p2, *f, b);
  }

  // degree mismatch and the vanishing case
  for (auto& g : {w3b, l21b}) {
    PolyRep z = internal_general(*mixed, *g);
    run.rep().add("(Nat * Tw(Nat,1)) (x) " + g->label() + " = 0", z.dim() == 0, {{"dim", z.dim()}});
  }
  PolyRep z = internal_general(*l11, *l2);
  run.rep().add("L[1,1] (x) L[2] = 0 p=2", z.dim() == 0, {{"dim", z.dim()}});
  kronecker_instance(run, "L[1,1] (x) L[2]", *l11, *l2, z);
  PolyRep nz = internal_general(*l11, *l11);
  run.rep().add("L[1,1] (x) L[1,1] is nonzero p=2", nz.dim() > 0, {{"dim", nz.dim()}});
  kronecker_instance(run, "L[1,1] (x) L[1,1]", *l11, *l11, nz);
}

void suite_stein_internal(Run& run) {
  struct Case { unsigned p; Partition l, m; };
  const Case cases[] = {{2, {2}, {2}},          {2, {1, 1}, {2}},     {2, {2, 1}, {1, 1, 1}},
                        {2, {3}, {2, 1}},       {2, {3}, {3}},        {3, {2, 1}, {2, 1}},
                        {3, {3}, {3}},          {3, {3}, {2, 1}},     {2, {2, 1}, {2, 1}},
                        {2, {2}, {1, 1}}};
  for (auto& c : cases) {
    const int d = c.l.weight();
    RepContext ctx(c.p, run.cfg.n.value_or(d));
    run.keep(simple_module(c.l, ctx));
    run.keep(simple_module(c.m, ctx));
    if (run.checking())
      run.rep().absorb(verify_stein_internal(c.l, c.m, ctx), "p=" + std::to_string(c.p) + " ");
  }
}

void suite_kronecker_schur(Run& run) {
  const auto seed = run.cfg.seed;
  struct Case { unsigned p; std::string f, g; };
  const Case cases[] = {{2, "Wedge[2]", "Sym[2]"}, {2, "Sym[2]", "Sym[2]"},
                        {2, "L[2,1]", "Sym[3]"},   {3, "L[2,1]", "Sym[3]"},
                        {3, "Wedge[3]", "Wedge[3]"}, {3, "Sym[3]", "Div[3]"}};
  std::vector<std::pair<PolyRepPtr, PolyRepPtr>> pairs;
  for (auto& c : cases) {
    RepContext ctx(c.p, degree(*parse_expr(c.f), c.p));
    pairs.push_back({run.keep(make(c.f, ctx)), run.keep(make(c.g, ctx))});
  }
  std::vector<std::pair<unsigned, int>> pd = {{2, 2}, {2, 3}, {2, 4}, {3, 2}, {3, 3}, {3, 4}};
  for (auto [p, d] : pd) {
    RepContext ctx(p, d);
    for (auto& [lam, l] : simples_of_degree(d, ctx)) {
      (void)lam;
      run.keep(l);
    }
  }
  if (!run.checking()) return;

  for (std::size_t k = 0; k < pairs.size(); ++k) {
    auto& [f, g] = pairs[k];
    PolyRep r = internal_general(*f, *g);
    kronecker_instance(run, f->label() + " (x) " + g->label() + tag(f->field().p()), *f, *g, r);
  }

  // kronecker(regular, V) = regular^dim V
  for (auto [p, d] : std::vector<std::pair<unsigned, int>>{{2, 3}, {3, 3}}) {
    FieldSpec fs(p);
    RepContext ctx(p, d);
    SymRep reg = regular_module(fs, d);
    std::vector<std::pair<std::string, SymRep>> vs = {{"trivial", trivial_module(fs, d)},
                                                      {"sign", sign_module(fs, d)}};
    auto l21 = simple_module(Partition{2, 1}, ctx);
    vs.push_back({"f(L[2,1])", schur_functor(*l21)});
    for (auto& [name, v] : vs) {
      SymRep sum = reg;
      for (std::size_t i = 1; i < v.dim(); ++i) sum = sym_direct_sum(sum, reg);
      run.rep().add("regular (x) " + name + tag(p) + " d=" + std::to_string(d),
                    from_iso(sym_iso_test(kronecker(reg, v), sum, seed)), {{"dim_V", v.dim()}});
    }
  }

  // adjunction units
  for (auto [p, d] : pd) {
    if (d > 3 && p == 3) continue;
    RepContext ctx(p, d);
    FieldSpec fs(p);
    std::vector<std::pair<std::string, SymRep>> vs;
    for (auto& [lam, l] : simples_of_degree(d, ctx))
      if (is_pr_restricted(lam, p, 1)) vs.push_back({"f(L[" + lam.to_string() + "])", schur_functor(*l)});
    if (d <= 3) vs.push_back({"regular", regular_module(fs, d)});
    for (auto& [name, v] : vs) {
      auto a = schur_functor(coinvariants_sd(v, ctx));
      auto b = schur_functor(invariants_sd(v, ctx));
      const std::string where = tag(p) + " d=" + std::to_string(d);
      run.rep().add("f(l(" + name + ")) = " + name + where, from_iso(sym_iso_test(a, v, seed)));
      run.rep().add("f(r(" + name + ")) = " + name + where, from_iso(sym_iso_test(b, v, seed)));
    }
  }

  // images of simples
  for (auto [p, d] : pd) {
    RepContext ctx(p, d);
    std::vector<std::pair<Partition, SymRep>> images;
    for (auto& [lam, l] : simples_of_degree(d, ctx)) {
      SymRep v = schur_functor(*l);
      const bool restricted = is_pr_restricted(lam, p, 1);
      const std::string name = "f(L[" + lam.to_string() + "])" + tag(p);
      if (restricted) {
        run.rep().add(name + " is simple", v.dim() > 0 && sym_is_simple(v), {{"dim", v.dim()}});
        images.push_back({lam, v});
      } else {
        run.rep().add(name + " = 0", v.dim() == 0, {{"dim", v.dim()}});
      }
    }
    bool distinct = true;
    for (std::size_t a = 0; a < images.size(); ++a)
      for (std::size_t b = a + 1; b < images.size(); ++b)
        if (sym_iso_test(images[a].second, images[b].second, seed) != IsoResult::NotIsomorphic)
          distinct = false;
    run.rep().add("restricted images pairwise distinct" + tag(p) + " d=" + std::to_string(d),
                  distinct, {{"count", images.size()}});
  }

  // Mullineux is an involution
  for (auto [p, d] : pd) {
    FieldSpec fs(p);
    for (auto& mu : enumerate_partitions(d, d)) {
      if (!is_pr_restricted(mu, p, 1)) continue;
      auto nu = mullineux(mu, fs);
      run.rep().add("mullineux twice (" + mu.to_string() + ")" + tag(p),
                    mullineux(nu, fs) == mu, {{"image", nu.to_string()}});
    }
  }

  // Kronecker products of simples of dim >= 2 are not simple in odd characteristic
  for (int d : {3, 4}) {
    RepContext ctx(3, d);
    std::vector<std::pair<Partition, SymRep>> big;
    for (auto& [lam, l] : simples_of_degree(d, ctx))
      if (is_pr_restricted(lam, 3, 1)) {
        SymRep v = schur_functor(*l);
        if (v.dim() >= 2) big.push_back({lam, v});
      }
    std::size_t tested = 0;
    bool ok = true;
    for (std::size_t a = 0; a < big.size(); ++a)
      for (std::size_t b = a; b < big.size(); ++b) {
        ++tested;
        ok = ok && !sym_is_simple(kronecker(big[a].second, big[b].second));
      }
    run.rep().add("Kronecker of simples not simple p=3 d=" + std::to_string(d), ok,
                  {{"pairs", tested}});
  }

  // f is exact: dims add up along soc M -> M -> M / soc M
  for (auto s : {"Sym[3]", "Div[3]", "Pow[3]"}) {
    RepContext ctx(2, 3);
    auto m = make(s, ctx);
    Submodule u = socle(m);
    auto a = schur_functor(restrict_to(u)), b = schur_functor(*m), c = schur_functor(quotient(u));
    run.rep().add(std::string("f exact on the socle sequence of ") + s,
                  a.dim() + c.dim() == b.dim(),
                  {{"sub", a.dim()}, {"whole", b.dim()}, {"quotient", c.dim()}});
  }
}

void suite_twist(Run& run) {
  const Pair cases[] = {{2, "Sym[2]", "Wedge[2]"}, {2, "Div[2]", "Sym[2]"},
                        {2, "Nat", "Nat"},         {2, "Wedge[2]", "Sym[2]"},
                        {2, "Sym[2]", "Div[2]"},   {3, "Nat", "Nat"},
                        {2, "Nat", "Sym[1]"}};
  for (auto& c : cases) {
    const int d = degree(*parse_expr(c.f), c.p);
    RepContext ctx(c.p, run.cfg.n.value_or(int(c.p) * d));
    auto f = run.keep(make(c.f, ctx)), g = run.keep(make(c.g, ctx));
    auto tf = run.keep(share(twist(*f, 1))), tg = run.keep(share(twist(*g, 1)));
    if (!run.checking()) continue;
    auto a = ext_dims(f, g, 1), b = ext_dims(tf, tg, 1);
    const std::string name = "(" + c.f + ", " + c.g + ")" + tag(c.p);
    run.rep().add(name + " hom", a[0] == b[0], {{"plain", a[0]}, {"twisted", b[0]}});
    run.rep().add(name + " Ext^1", a[1] == b[1], {{"plain", a[1]}, {"twisted", b[1]}});
  }
}

using SuiteFn = std::function<void(Run&)>;

const std::map<std::string, SuiteFn>& suite_fns() {
  static const std::map<std::string, SuiteFn> fns = {
      {"prop65-table", suite_prop65},
      {"prop61-closed-forms", suite_prop61},
      {"steinberg", suite_steinberg},
      {"clausen-james", suite_clausen_james},
      {"tenspres", suite_tenspres},
      {"cup-deg01", suite_cup},
      {"connectedness", suite_connectedness},
      {"prop-op", suite_prop_op},
      {"lmses", suite_lmses},
      {"ptitlm", suite_ptitlm},
      {"socle-steinberg", suite_socle_steinberg},
      {"subfunctor-lattice", [](Run& r) { suite_lattice(r, "submodules"); }},
      {"diagrams", [](Run& r) { suite_lattice(r, "diagram"); }},
      {"appA", suite_appA},
      {"kn-schur", suite_kn},
      {"internal-calcul", suite_internal_calcul},
      {"stein-internal", suite_stein_internal},
      {"kronecker-schur", suite_kronecker_schur},
      {"twist-deg01", suite_twist}};
  return fns;
}

}  // namespace

// ---------------------------------------------------------------- registry

const std::vector<SuiteInfo>& suite_registry() {
  static const std::vector<SuiteInfo> reg = {
      {"prop65-table", "i(F,1) and i(F,2) for the nine degree-4 functors at p=2", false},
      {"prop61-closed-forms", "closed forms of i for Sym, Wedge and Div", false},
      {"steinberg", "L_lambda against the twisted tensor product of its p-adic levels", true},
      {"clausen-james", "hom(Pow[d], L_lambda) nonzero iff lambda is p-restricted", true},
      {"tenspres", "tensor products of restricted simples are not simple", true},
      {"cup-deg01", "twisted Kunneth maps in degrees 0 and 1", false},
      {"connectedness", "twisted Kunneth maps up to the connectedness bound", false},
      {"prop-op", "duality, tensor, sum, parameter and twist rules for i and p", false},
      {"lmses", "the three degree-4 short exact sequences", false},
      {"ptitlm", "Ext shift between Schur and Weyl functors of conjugate shapes", false},
      {"socle-steinberg", "socle series and homs of Steinberg-type tensor products", false},
      {"subfunctor-lattice", "submodules of F * Tw(G,1) are sums of products", false},
      {"diagrams", "diagram of F * Tw(G,1) is the product diagram", false},
      {"appA", "socle, head, socle series and Kunneth for exterior tensor products", false},
      {"kn-schur", "Ext over P against Ext over the symmetric group, and the boundary", false},
      {"internal-calcul", "internal tensor products: formulas, unit, symmetry, vanishing", false},
      {"stein-internal", "internal tensor products of simples through p-adic levels", false},
      {"kronecker-schur", "Schur functor, Kronecker products, adjunctions, Mullineux", false},
      {"twist-deg01", "hom and Ext^1 unchanged by precomposing with the twist", false}};
  return reg;
}

bool has_suite(const std::string& name) { return suite_fns().count(name) > 0; }

SuiteResult run_suite(const std::string& name, const SuiteConfig& cfg) {
  auto it = suite_fns().find(name);
  if (it == suite_fns().end()) throw InvalidArgument("unknown suite " + name);
  Run run{cfg, {}};
  run.out.report.claim = name;
  it->second(run);
  return std::move(run.out);
}

// ---------------------------------------------------------------- properties

Report property_checks(const std::vector<PolyRepPtr>& objects,
                       std::unordered_set<std::size_t>* seen) {
  Report rep("properties");
  std::unordered_set<std::size_t> local;
  if (!seen) seen = &local;
  std::size_t idx = 0;
  for (auto& m : objects) {
    if (!seen->insert(std::hash<std::string>{}(serialize(*m))).second) continue;
    const std::string name = (m->label().empty() ? "#" + std::to_string(idx) : m->label()) +
                             " p=" + std::to_string(m->field().p()) +
                             " n=" + std::to_string(m->coords());
    ++idx;
    auto inv = check_invariants(*m, 12'000'000);
    rep.add(name + ": counit", inv.counit);
    rep.add(name + ": weight idempotents", inv.weights);
    const nlohmann::json cw = {{"exhaustive", inv.coassociativity_full},
                               {"columns", inv.columns_checked}};
    if (inv.columns_checked == 0 && m->dim() > 0)
      rep.add(name + ": coassociativity", Status::Inconclusive, cw);
    else
      rep.add(name + ": coassociativity", inv.coassociative, cw);
    rep.add(name + ": dual involution", dual(dual(*m)) == *m);

    const int p = int(m->field().p());
    // keys hold at most 16 variables; the twist copies are bounded too
    if (p * m->degree() <= 16 && m->entries().size() <= 2'000'000) {
      PolyRep t1 = twist(*m, 1);
      auto ti = check_invariants(t1);
      bool ok = ti.ok() && t1.dim() == m->dim() && t1.degree() == p * m->degree();
      if (p * p * m->degree() <= 16) ok = ok && twist(t1, 1) == twist(*m, 2);
      ok = ok && dual(t1) == twist(dual(*m), 1);
      rep.add(name + ": twist functoriality", ok,
              {{"coassociativity_columns", ti.columns_checked}});
    }

    const bool large = m->coords() >= m->degree() && m->degree() > 0;
    if (large && m->dim() <= 400) {
      auto a = composition_factors(m), b = composition_factors_by_radical(m);
      rep.add(name + ": Jordan-Holder", a == b,
              {{"socle_route", factors_to_string(a, m->layout())},
               {"radical_route", factors_to_string(b, m->layout())}});
    }
    if (large && m->dim() <= 200) {
      try {
        auto res = resolution_of(m);
        const int stages = std::max(res->computed(), 3);
        bool ok = true;
        for (int k = -1; k + 2 <= stages; ++k) ok = ok && res->verify_exactness(k);
        rep.add(name + ": resolution exact", ok, {{"stages", res->computed()}});
      } catch (const BudgetExceeded& e) {
        rep.add(name + ": resolution exact", Status::Inconclusive, {{"budget", e.what()}});
      }
    }
  }
  return rep;
}

// ---------------------------------------------------------------- table

const std::vector<std::string>& table_functors() {
  static const std::vector<std::string> fs = {
      "Div[4]", "W[3,1]", "W[2,2]", "W[2,1,1]", "Wedge[4]",
      "C[2,1,1]", "C[2,2]", "C[3,1]", "Sym[4]"};
  return fs;
}

const std::vector<std::vector<int>>& table_expected() {
  static const std::vector<std::vector<int>> rows = {{2, 2, 2, 1, 1, 1, 0, 0, 0},
                                                     {6, 5, 4, 4, 2, 2, 1, 1, 0}};
  return rows;
}

InvariantTable invariant_table(int n, std::optional<int> cap, DetectTarget target) {
  InvariantTable t;
  t.columns = table_functors();
  t.rs = {1, 2};
  t.rows = table_rows(table_modules(n), t.rs, cap, target);
  return t;
}

std::string InvariantTable::to_csv() const {
  std::ostringstream o;
  o << "F";
  for (auto& c : columns) o << ",\"" << c << "\"";
  o << "\n";
  for (std::size_t k = 0; k < rows.size(); ++k) {
    o << "i(F;" << rs[k] << ")";
    for (auto& v : rows[k]) o << "," << v.to_string();
    o << "\n";
  }
  return o.str();
}

nlohmann::json InvariantTable::to_json() const {
  nlohmann::json j = {{"p", 2}, {"columns", columns}, {"rows", nlohmann::json::array()}};
  for (std::size_t k = 0; k < rows.size(); ++k) {
    nlohmann::json row = {{"r", rs[k]}, {"values", nlohmann::json::array()}};
    for (auto& v : rows[k]) row["values"].push_back(v.to_json());
    j["rows"].push_back(row);
  }
  return j;
}

}  // namespace polyrep
