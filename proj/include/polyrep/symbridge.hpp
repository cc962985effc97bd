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

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "polyrep/field.hpp"
#include "polyrep/modkit.hpp"
#include "polyrep/partitions.hpp"
#include "polyrep/polyrep.hpp"
#include "polyrep/report.hpp"

namespace polyrep {

// A kS_d-module given by the matrices of the adjacent transpositions
// s_1, ..., s_{d-1}. The Coxeter relations are checked on construction.
class SymRep {
 public:
  SymRep(FieldSpec f, int d, std::size_t dim, std::vector<ExactMatrix> gens,
         std::string label = {});

  const FieldSpec& field() const noexcept { return field_; }
  int degree() const noexcept { return d_; }
  std::size_t dim() const noexcept { return dim_; }
  const std::vector<ExactMatrix>& gens() const noexcept { return gens_; }
  const std::string& label() const noexcept { return label_; }
  void set_label(std::string s) { label_ = std::move(s); }

 private:
  FieldSpec field_;
  int d_;
  std::size_t dim_;
  std::vector<ExactMatrix> gens_;
  std::string label_;
};

SymRep trivial_module(FieldSpec f, int d);
SymRep sign_module(FieldSpec f, int d);
SymRep regular_module(FieldSpec f, int d);

// Weight (1,...,1) space, with s_i acting as the permutation matrix of
// (i, i+1) in GL_n. ContextTooSmall if n < d.
SymRep schur_functor(const PolyRep& m);
// Restriction of an intertwiner m -> n to the (1,...,1) weight spaces.
ExactMatrix schur_functor_on_maps(const ExactMatrix& phi, const PolyRep& m,
                                  const PolyRep& n);

// l_d(V) = tensor power tensored over kS_d with V, and r_d(V) the S_d-invariants
// of the tensor power tensored with V; place permutations act on the words.
PolyRep coinvariants_sd(const SymRep& v, const RepContext& ctx);
PolyRep invariants_sd(const SymRep& v, const RepContext& ctx);

SymRep kronecker(const SymRep& u, const SymRep& v);
SymRep sign_twist(const SymRep& u);
SymRep sym_direct_sum(const SymRep& u, const SymRep& v);

// Intertwiners u -> v by direct solving of X u_i = v_i X.
std::vector<ExactMatrix> sym_hom_basis(const SymRep& u, const SymRep& v);
IsoResult sym_iso_test(const SymRep& u, const SymRep& v, std::uint64_t seed = 1);
bool sym_is_simple(const SymRep& u);

// Ext over kS_d from a free resolution of u. sym_ext_dims(u, v, k)[j] is
// dim Ext^j for j <= k. d above max_sym_degree() is BudgetExceeded.
std::vector<std::size_t> sym_ext_dims(const SymRep& u, const SymRep& v, int kmax);
std::size_t sym_ext(const SymRep& u, const SymRep& v, int k);
std::size_t sym_hom(const SymRep& u, const SymRep& v);
void set_max_sym_degree(int d);
int max_sym_degree();

// The p-restricted nu with f(L_nu) = f(L_mu) (x) sign.
Partition mullineux(const Partition& mu, FieldSpec f);

// Ext_P(F, G) against Ext over kS_d through the Schur functor, in the
// window below p(F,1) + i(G,1) - 1 and at the boundary.
Report verify_kn(PolyRepPtr f, PolyRepPtr g, int kmax);
// The two boundary counterexamples at p: the Gamma^p / Q^p hom mismatch
// and the non-injectivity on T(p,1).
Report verify_kn_boundary(unsigned p);

std::string serialize(const SymRep& u);
SymRep deserialize_symrep(std::string_view text);
nlohmann::json to_json(const SymRep& u);

}  // namespace polyrep
