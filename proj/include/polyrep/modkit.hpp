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
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "polyrep/field.hpp"
#include "polyrep/gamma.hpp"
#include "polyrep/partitions.hpp"
#include "polyrep/polyrep.hpp"
#include "polyrep/report.hpp"

namespace polyrep {

// ---------------------------------------------------------------- hom

struct HomSpace {
  PolyRepPtr source, target;
  std::vector<ExactMatrix> basis;  // dim(target) x dim(source)
  std::size_t dim() const noexcept { return basis.size(); }
};

HomSpace hom(PolyRepPtr m, PolyRepPtr n);
HomSpace hom(const PolyRep& m, const PolyRep& n);
std::size_t hom_dim(const PolyRep& m, const PolyRep& n);
bool is_intertwiner(const ExactMatrix& phi, const PolyRep& m,
                    const PolyRep& n);

inline PolyRepPtr share(PolyRep m) {
  return std::make_shared<const PolyRep>(std::move(m));
}

// ---------------------------------------------------------------- submodules

// Weight-graded subspace: one echelon subspace per weight block of the
// ambient module, in block-local coordinates.
class Submodule {
 public:
  explicit Submodule(PolyRepPtr ambient);
  static Submodule whole(PolyRepPtr ambient);
  // smallest submodule containing the vectors (global coordinates)
  static Submodule generated(PolyRepPtr ambient, const std::vector<Vec>& vs);
  static Submodule generated(PolyRepPtr ambient,
                             const std::vector<SparseVec>& vs);

  const PolyRep& ambient() const noexcept { return *amb_; }
  const PolyRepPtr& ambient_ptr() const noexcept { return amb_; }
  std::size_t dim() const noexcept;
  std::size_t blocks() const noexcept { return blocks_.size(); }
  const Subspace& block(std::size_t b) const { return blocks_[b]; }
  Subspace& block(std::size_t b) { return blocks_[b]; }

  std::vector<Vec> basis() const;
  bool contains(const Vec& v) const;
  bool contains(const Submodule& o) const;
  bool is_zero() const noexcept { return dim() == 0; }
  bool is_whole() const noexcept { return dim() == amb_->dim(); }
  // coeff[E] U in U; elementary keys only unless all_keys
  bool stable(bool all_keys = false) const;

  friend bool operator==(const Submodule& a, const Submodule& b) {
    return a.blocks_ == b.blocks_;
  }

 private:
  PolyRepPtr amb_;
  std::vector<Subspace> blocks_;
};

Submodule operator+(const Submodule& a, const Submodule& b);
Submodule intersect(const Submodule& a, const Submodule& b);

Submodule image(const ExactMatrix& phi, const PolyRep& source,
                PolyRepPtr target);
Submodule kernel(const ExactMatrix& phi, PolyRepPtr source,
                 const PolyRep& target);

// Induced comodule on U; NotStable when U is not a submodule and check is on.
PolyRep restrict_to(const Submodule& u, bool check = true);
// M/U, basis: the non-pivot coordinates of each weight block.
PolyRep quotient(const Submodule& u);
ExactMatrix quotient_map(const Submodule& u);   // dim(M/U) x dim(M)
ExactMatrix inclusion_map(const Submodule& u);  // dim(M) x dim(U)
// Preimage in M of a submodule w of quotient(u).
Submodule preimage(const Submodule& u, const Submodule& w);

// ---------------------------------------------------------------- simples

// Simple modules are labelled by dominant weights of the layout; on a
// single block this is a partition.
std::string simple_label(const Weight& w, const Layout& layout);
Weight weight_of(const Partition& lambda, int n);

PolyRepPtr weyl_module(const Partition& lambda, const RepContext& ctx);
PolyRepPtr costandard_module(const Partition& lambda, const RepContext& ctx);
PolyRepPtr simple_module(const Partition& lambda, const RepContext& ctx);
PolyRepPtr simple_module(FieldSpec f, const Layout& layout, const Weight& w);
std::vector<std::pair<Partition, PolyRepPtr>> simples_of_degree(
    int d, const RepContext& ctx);
// Q^d: the head of S^d
PolyRepPtr truncated_symmetric(int d, const RepContext& ctx);

// ContextTooSmall unless every layout block is at least its degree.
void require_large_context(const PolyRep& m);

// ---------------------------------------------------------------- structure

using Factors = std::map<Weight, int>;

Submodule socle(PolyRepPtr m);
Submodule radical(PolyRepPtr m);
PolyRep head(PolyRepPtr m);
// S_1 = soc M in S_2 in ... in S_k = M
std::vector<Submodule> socle_series(PolyRepPtr m);
// M = R_0 > R_1 > ... > R_k = 0, as submodules of M
std::vector<Submodule> radical_series(PolyRepPtr m);
// multiplicities of simples in a semisimple module
Factors semisimple_factors(PolyRepPtr m);
std::vector<Factors> socle_layers(PolyRepPtr m);
std::vector<Factors> radical_layers(PolyRepPtr m);
Factors composition_factors(PolyRepPtr m);
Factors composition_factors_by_radical(PolyRepPtr m);
std::map<Partition, int> as_partitions(const Factors& f, int n);
std::string factors_to_string(const Factors& f, const Layout& layout);
bool is_simple(PolyRepPtr m);

// ---------------------------------------------------------------- iso

enum class IsoResult { Isomorphic, NotIsomorphic, Inconclusive };
std::string to_string(IsoResult r);
// isomorphic -> verified, not isomorphic -> failed
Status from_iso(IsoResult r);

IsoResult iso_test(PolyRepPtr a, PolyRepPtr b, std::uint64_t seed = 1);

// ---------------------------------------------------------------- claims

Report steinberg_check(const Partition& lambda, const RepContext& ctx);
Report clausen_james_check(int d, const RepContext& ctx);
Report tenspres_check(const Partition& lambda, const Partition& mu,
                      const RepContext& ctx);

}  // namespace polyrep
