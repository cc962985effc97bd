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
#include <mutex>
#include <unordered_map>
#include <vector>

#include "polyrep/field.hpp"
#include "polyrep/key.hpp"
#include "polyrep/polyrep.hpp"

// Presentations of modules by sums of divided-power modules Gamma^lambda.
// Every polynomial module is a quotient of such a sum, and Hom out of
// Gamma^lambda is evaluation at its generator, which makes hom and Ext
// computations small linear problems on weight spaces.

namespace polyrep {

using SparseVec = std::vector<std::pair<std::uint32_t, Scalar>>;

// Weakly decreasing on every layout block.
bool is_dominant(const Weight& w, const Layout& layout);
// Lexicographically decreasing; refines dominance on each block.
bool weight_greater(const Weight& a, const Weight& b);

// Basis of Gamma^lambda: the block-diagonal keys E with colsum lambda, in
// the basis order of the built module.
struct GammaShape {
  Layout layout;
  Weight lambda{};
  std::vector<ExponentKey> keys;
  std::vector<WeightBlock> blocks;  // grouped by rowsum, sorted by weight
  std::uint32_t generator = 0;

  const WeightBlock* block(const Weight& mu) const;
};

std::shared_ptr<const GammaShape> gamma_shape(const Layout& layout,
                                              const Weight& lambda);
PolyRepPtr gamma_rep(FieldSpec f, const Layout& layout, const Weight& lambda);

// Columns of Gamma^lambda computed on demand from the product formula, so
// that large summands cost memory only where they are touched.
class GammaColumns {
 public:
  struct Entry {
    ExponentKey key;
    std::uint32_t row;
    Scalar value;
  };
  GammaColumns(FieldSpec f, std::shared_ptr<const GammaShape> shape);
  const GammaShape& shape() const { return *shape_; }
  const FieldSpec& field() const { return field_; }
  // sorted by (key, row)
  const std::vector<Entry>& column(std::uint32_t b) const;

 private:
  std::vector<Entry> build(std::uint32_t b) const;

  FieldSpec field_;
  std::shared_ptr<const GammaShape> shape_;
  std::unordered_map<ExponentKey, std::uint32_t, KeyHash> index_;
  mutable std::mutex mu_;
  mutable std::unordered_map<std::uint32_t, std::vector<Entry>> cols_;
};

std::shared_ptr<const GammaColumns> gamma_columns(FieldSpec f,
                                                  const Layout& layout,
                                                  const Weight& lambda);

// Read-only direct sum of modules with column access.
class SumView {
 public:
  SumView() = default;
  void add(PolyRepPtr part);
  void add(std::shared_ptr<const GammaColumns> part);
  std::size_t dim() const noexcept { return dim_; }
  std::size_t parts() const noexcept { return parts_.size(); }
  const FieldSpec& field() const noexcept { return field_; }
  int coords() const noexcept { return coords_; }
  std::uint32_t offset(std::size_t i) const { return offsets_[i]; }
  // (part, local index)
  std::pair<std::uint32_t, std::uint32_t> locate(std::uint32_t g) const;
  const Weight& weight(std::uint32_t g) const;
  // global indices of weight mu, part by part
  const std::vector<std::uint32_t>& block(const Weight& mu) const;
  std::uint32_t local_in_block(std::uint32_t g) const;
  std::vector<Weight> weight_list() const;
  // f(key, global row, value) over column g
  template <class F>
  void for_column(std::uint32_t g, F&& f) const;

 private:
  struct Part {
    PolyRepPtr rep;
    std::shared_ptr<const GammaColumns> gamma;
  };
  void add_weights(const std::vector<Weight>& ws);

  std::vector<Part> parts_;
  std::vector<std::uint32_t> offsets_;
  std::vector<Weight> weights_;
  std::size_t dim_ = 0;
  FieldSpec field_{2};
  int coords_ = 1;
  std::map<Weight, std::vector<std::uint32_t>> blocks_;
  std::vector<std::uint32_t> local_;
};

template <class F>
void SumView::for_column(std::uint32_t g, F&& f) const {
  auto [p, l] = locate(g);
  const Part& part = parts_[p];
  const std::uint32_t off = offsets_[p];
  if (part.rep) {
    for (std::uint32_t e : part.rep->column(l)) {
      const CoeffEntry& x = part.rep->entries()[e];
      f(x.key, x.row + off, x.value);
    }
  } else {
    for (const auto& x : part.gamma->column(l)) f(x.key, x.row + off, x.value);
  }
}

// All images coeff[E] v at once, grouped by key.
struct Orbit {
  std::vector<ExponentKey> keys;
  std::vector<std::uint32_t> start;
  std::vector<std::pair<std::uint32_t, Scalar>> data;

  // index into keys, or -1
  long find(const ExponentKey& k) const;
  std::size_t size(std::size_t i) const { return start[i + 1] - start[i]; }
};

Orbit make_orbit(const SumView& view, const SparseVec& v);

SparseVec to_sparse(const Vec& local, const std::vector<std::uint32_t>& block);
Vec to_dense(const SparseVec& v, std::size_t dim);

enum class CoverStrategy {
  Greedy,     // highest weights first, then pruned from the lowest up
  AllWeights  // every dominant weight vector of a basis; no pruning
};

// Weight-vector generators of the submodule whose dominant weight spaces
// are given (local coordinates of `view`). Returns generators as global
// sparse vectors together with their weights.
struct Generators {
  std::vector<Weight> weights;
  std::vector<SparseVec> vectors;
};
Generators choose_generators(
    const SumView& view,
    const std::map<Weight, std::vector<Vec>>& dominant_spaces,
    CoverStrategy strategy);

// One step of a Gamma-resolution: P = sum of Gamma^{lambda_a}, the
// generator of summand a mapping to images[a] in the previous term.
struct Stage {
  std::vector<Weight> summands;
  std::vector<SparseVec> images;
  std::vector<std::uint32_t> offsets;  // global offset of each summand
  std::size_t dim = 0;

  void finalize(const Layout& layout);
  // (summand, basis index) pairs of weight mu in P, in global order
  struct Slot {
    std::uint32_t summand, index;
  };
  std::vector<Slot> slots(const Layout& layout, const Weight& mu) const;
  std::vector<Weight> weight_list(const Layout& layout) const;
};

// The matrix of the map P -> view at weight mu: rows are the weight-mu
// coordinates of the view, columns the slots of P of weight mu.
ExactMatrix stage_map_block(const SumView& codomain, const Stage& stage,
                            const Layout& layout, const Weight& mu);

// Same, for several weights in one pass over the generator orbits.
std::map<Weight, ExactMatrix> stage_map_blocks(const SumView& codomain,
                                               const Stage& stage,
                                               const Layout& layout,
                                               const std::vector<Weight>& mus);

SumView stage_view(FieldSpec f, const Layout& layout, const Stage& stage);

// Rows: for each listed vector w of P (global coordinates, weight mu), the
// coordinates of N_mu. Columns: the sum over summands a of N_{lambda_a}.
// Entry block (w, a) is sum_i w_(a,i) coeff_N[E_i] restricted to
// N_{lambda_a} -> N_mu. Column offsets per summand are returned in `cols`.
ExactMatrix evaluation_matrix(
    const PolyRep& n, const Layout& layout, const Stage& src,
    const std::vector<std::pair<Weight, SparseVec>>& vecs,
    std::vector<std::uint32_t>* cols = nullptr);

// A module as the quotient of a Gamma-sum by the relations, which are kept
// as full weight spaces at the dominant weights.
class Presentation {
 public:
  explicit Presentation(PolyRepPtr m,
                        CoverStrategy strategy = CoverStrategy::Greedy);

  const PolyRep& module() const { return *m_; }
  const Stage& stage() const { return stage_; }
  // kernel of the cover at each dominant weight (slot coordinates)
  const std::map<Weight, std::vector<Vec>>& relations() const {
    return relations_;
  }
  std::vector<std::pair<Weight, SparseVec>> relation_vectors() const;

  std::size_t hom_dim(const PolyRep& n) const;
  // For each basis element of Hom(m, n), the images of the generators
  // (global sparse vectors of n).
  std::vector<std::vector<SparseVec>> hom_images(const PolyRep& n) const;
  // Intertwiners as dim(n) x dim(m) matrices.
  std::vector<ExactMatrix> hom_basis(const PolyRep& n) const;

 private:
  PolyRepPtr m_;
  Stage stage_;
  std::map<Weight, std::vector<Vec>> relations_;
};

}  // namespace polyrep
