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

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "polyrep/partitions.hpp"
#include "polyrep/polyrep.hpp"

namespace polyrep {

// Functor expressions:
//   Sym[a] Wedge[a] Div[a] Pow[a] Nat L[l] W[l] C[l] Q[a] T(d,r) Lsum(d,r)
//   Dual(e) Tw(e,r) e * e e + e
struct Expr {
  enum class Kind {
    Sym, Wedge, Div, Pow, Nat, Simple, Weyl, Costandard, Trunc,
    TSum, LSum, Dual, Twist, Tensor, Sum
  };
  Kind kind = Kind::Nat;
  int a = 0;  // degree argument, or d of T/Lsum
  int r = 0;  // twist exponent, or r of T/Lsum
  Partition lambda;
  std::vector<std::shared_ptr<const Expr>> args;
};

using ExprPtr = std::shared_ptr<const Expr>;

ExprPtr make_basic(Expr::Kind k, int a);
ExprPtr make_partition(Expr::Kind k, Partition lambda);
ExprPtr make_detect(Expr::Kind k, int d, int r);
ExprPtr make_dual(ExprPtr e);
ExprPtr make_twist(ExprPtr e, int r);
ExprPtr make_binary(Expr::Kind k, ExprPtr a, ExprPtr b);

// Canonical form; parse(to_string(e)) reproduces e.
std::string to_string(const Expr& e);

// Degrees of the homogeneous components (a sum may mix degrees).
std::vector<int> degrees(const Expr& e, unsigned p);
// DegreeMismatch unless homogeneous.
int degree(const Expr& e, unsigned p);

// Homogeneous components, built at ctx. Tensor products of mixed sums are
// expanded; a component that vanishes is dropped.
std::map<int, PolyRepPtr> build_components(const Expr& e,
                                           const RepContext& ctx);
// DegreeMismatch unless homogeneous.
PolyRepPtr build(const Expr& e, const RepContext& ctx);

// Zero module of the given degree.
PolyRep zero_rep(const RepContext& ctx, int degree);

}  // namespace polyrep
