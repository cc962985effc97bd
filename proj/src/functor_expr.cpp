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

#include "polyrep/functor_expr.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <tuple>

#include "polyrep/errors.hpp"
#include "polyrep/homology.hpp"
#include "polyrep/modkit.hpp"

namespace polyrep {

ExprPtr make_basic(Expr::Kind k, int a) {
  if (a < 0) throw InvalidArgument("negative degree");
  auto e = std::make_shared<Expr>();
  e->kind = k;
  e->a = a;
  return e;
}

ExprPtr make_partition(Expr::Kind k, Partition lambda) {
  auto e = std::make_shared<Expr>();
  e->kind = k;
  e->a = lambda.weight();
  e->lambda = std::move(lambda);
  return e;
}

ExprPtr make_detect(Expr::Kind k, int d, int r) {
  if (d < 0 || r < 0) throw InvalidArgument("negative argument");
  auto e = std::make_shared<Expr>();
  e->kind = k;
  e->a = d;
  e->r = r;
  return e;
}

ExprPtr make_dual(ExprPtr x) {
  auto e = std::make_shared<Expr>();
  e->kind = Expr::Kind::Dual;
  e->args = {std::move(x)};
  return e;
}

ExprPtr make_twist(ExprPtr x, int r) {
  if (r < 0) throw InvalidArgument("negative twist");
  auto e = std::make_shared<Expr>();
  e->kind = Expr::Kind::Twist;
  e->r = r;
  e->args = {std::move(x)};
  return e;
}

ExprPtr make_binary(Expr::Kind k, ExprPtr a, ExprPtr b) {
  auto e = std::make_shared<Expr>();
  e->kind = k;
  e->args = {std::move(a), std::move(b)};
  return e;
}

namespace {

std::string parts_csv(const Partition& l) {
  std::string s;
  for (int x : l.parts()) s += (s.empty() ? "" : ",") + std::to_string(x);
  return s.empty() ? "0" : s;
}

}  // namespace

std::string to_string(const Expr& e) {
  using K = Expr::Kind;
  auto br = [&](const char* n) { return std::string(n) + "[" + std::to_string(e.a) + "]"; };
  switch (e.kind) {
    case K::Sym: return br("Sym");
    case K::Wedge: return br("Wedge");
    case K::Div: return br("Div");
    case K::Pow: return br("Pow");
    case K::Trunc: return br("Q");
    case K::Nat: return "Nat";
    case K::Simple: return "L[" + parts_csv(e.lambda) + "]";
    case K::Weyl: return "W[" + parts_csv(e.lambda) + "]";
    case K::Costandard: return "C[" + parts_csv(e.lambda) + "]";
    case K::TSum: return "T(" + std::to_string(e.a) + "," + std::to_string(e.r) + ")";
    case K::LSum: return "Lsum(" + std::to_string(e.a) + "," + std::to_string(e.r) + ")";
    case K::Dual: return "Dual(" + to_string(*e.args[0]) + ")";
    case K::Twist:
      return "Tw(" + to_string(*e.args[0]) + "," + std::to_string(e.r) + ")";
    case K::Tensor: {
      auto side = [](const Expr& x) {
        std::string s = to_string(x);
        return x.kind == K::Sum ? "(" + s + ")" : s;
      };
      // the right operand of a left-associated chain needs brackets too
      std::string rhs = side(*e.args[1]);
      if (e.args[1]->kind == K::Tensor) rhs = "(" + rhs + ")";
      return side(*e.args[0]) + " * " + rhs;
    }
    case K::Sum: {
      std::string rhs = to_string(*e.args[1]);
      if (e.args[1]->kind == K::Sum) rhs = "(" + rhs + ")";
      return to_string(*e.args[0]) + " + " + rhs;
    }
  }
  return "?";
}

std::vector<int> degrees(const Expr& e, unsigned p) {
  using K = Expr::Kind;
  switch (e.kind) {
    case K::Sym: case K::Wedge: case K::Div: case K::Pow: case K::Trunc:
    case K::TSum: case K::LSum:
      return {e.a};
    case K::Nat:
      return {1};
    case K::Simple: case K::Weyl: case K::Costandard:
      return {e.lambda.weight()};
    case K::Dual:
      return degrees(*e.args[0], p);
    case K::Twist: {
      std::vector<int> d = degrees(*e.args[0], p);
      for (int& x : d) x *= int(ipow(p, unsigned(e.r)));
      return d;
    }
    case K::Tensor: {
      std::set<int> s;
      for (int a : degrees(*e.args[0], p))
        for (int b : degrees(*e.args[1], p)) s.insert(a + b);
      return {s.begin(), s.end()};
    }
    case K::Sum: {
      std::set<int> s;
      for (auto& x : e.args)
        for (int d : degrees(*x, p)) s.insert(d);
      return {s.begin(), s.end()};
    }
  }
  return {};
}

int degree(const Expr& e, unsigned p) {
  auto d = degrees(e, p);
  if (d.size() != 1)
    throw DegreeMismatch(to_string(e) + " is not homogeneous");
  return d[0];
}

PolyRep zero_rep(const RepContext& ctx, int degree) {
  return PolyRep(ctx.field, Layout::single(ctx.n), degree, {}, {}, "0");
}

namespace {

using Components = std::map<int, PolyRepPtr>;

void merge(Components& into, int d, PolyRepPtr m) {
  auto it = into.find(d);
  if (it == into.end())
    into.emplace(d, std::move(m));
  else
    it->second = share(direct_sum(*it->second, *m));
}

PolyRepPtr detect_sum(int d, int r, DetectTarget t, const RepContext& ctx) {
  auto sums = detection_summands(d, r, t, ctx);
  if (sums.empty()) return share(zero_rep(ctx, d));
  PolyRep acc = *sums[0].second;
  for (std::size_t i = 1; i < sums.size(); ++i)
    acc = direct_sum(acc, *sums[i].second);
  return share(std::move(acc));
}

Components build_rec(const Expr& e, const RepContext& ctx) {
  using K = Expr::Kind;
  switch (e.kind) {
    case K::Sym: return {{e.a, share(symmetric_power(e.a, ctx))}};
    case K::Wedge: return {{e.a, share(exterior_power(e.a, ctx))}};
    case K::Div: return {{e.a, share(divided_power(e.a, ctx))}};
    case K::Pow: return {{e.a, share(tensor_power(e.a, ctx))}};
    case K::Nat: return {{1, share(natural_rep(ctx))}};
    case K::Trunc: return {{e.a, truncated_symmetric(e.a, ctx)}};
    case K::Simple: return {{e.a, simple_module(e.lambda, ctx)}};
    case K::Weyl: return {{e.a, weyl_module(e.lambda, ctx)}};
    case K::Costandard: return {{e.a, costandard_module(e.lambda, ctx)}};
    case K::TSum: return {{e.a, detect_sum(e.a, e.r, DetectTarget::T, ctx)}};
    case K::LSum: return {{e.a, detect_sum(e.a, e.r, DetectTarget::L, ctx)}};
    case K::Dual: {
      Components out;
      for (auto& [d, m] : build_rec(*e.args[0], ctx)) out[d] = share(dual(*m));
      return out;
    }
    case K::Twist: {
      Components out;
      const int q = int(ipow(ctx.p(), unsigned(e.r)));
      for (auto& [d, m] : build_rec(*e.args[0], ctx))
        out[d * q] = share(twist(*m, e.r));
      return out;
    }
    case K::Tensor: {
      Components a = build_rec(*e.args[0], ctx), b = build_rec(*e.args[1], ctx);
      Components out;
      for (auto& [da, ma] : a)
        for (auto& [db, mb] : b) merge(out, da + db, share(tensor(*ma, *mb)));
      return out;
    }
    case K::Sum: {
      Components out = build_rec(*e.args[0], ctx);
      for (auto& [d, m] : build_rec(*e.args[1], ctx)) merge(out, d, m);
      return out;
    }
  }
  return {};
}

std::mutex g_build_mu;
std::map<std::tuple<std::string, unsigned, int>, Components> g_build_cache;

}  // namespace

std::map<int, PolyRepPtr> build_components(const Expr& e,
                                           const RepContext& ctx) {
  const std::string key = to_string(e);
  {
    std::lock_guard<std::mutex> lock(g_build_mu);
    auto it = g_build_cache.find({key, ctx.p(), ctx.n});
    if (it != g_build_cache.end()) return it->second;
  }
  Components out;
  for (auto& [d, m] : build_rec(e, ctx)) {
    PolyRep c = *m;
    c.set_label(key);
    out.emplace(d, share(std::move(c)));
  }
  std::lock_guard<std::mutex> lock(g_build_mu);
  g_build_cache.emplace(std::make_tuple(key, ctx.p(), ctx.n), out);
  return out;
}

PolyRepPtr build(const Expr& e, const RepContext& ctx) {
  degree(e, ctx.p());
  return build_components(e, ctx).begin()->second;
}

}  // namespace polyrep
