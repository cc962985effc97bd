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
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "polyrep/field.hpp"
#include "polyrep/key.hpp"

namespace polyrep {

struct RepContext {
  FieldSpec field;
  int n;
  RepContext(FieldSpec f, int n_);
  RepContext(unsigned p, int n_) : RepContext(FieldSpec(p), n_) {}
  unsigned p() const noexcept { return field.p(); }
  friend bool operator==(const RepContext& a, const RepContext& b) noexcept {
    return a.field == b.field && a.n == b.n;
  }
};

// Coordinate blocks. A single block of size n is GL_n; two blocks (n, m)
// give the Levi subgroup GL_n x GL_m inside GL_{n+m}, used for bifunctors.
struct Layout {
  std::vector<int> blocks;

  static Layout single(int n) { return Layout{{n}}; }
  int coords() const noexcept;
  int block_of(int coord) const noexcept;
  int block_start(int b) const noexcept;
  friend bool operator==(const Layout&, const Layout&) = default;
};

struct CoeffEntry {
  ExponentKey key;
  std::uint32_t row, col;
  Scalar value;
};

struct WeightBlock {
  Weight weight;
  std::vector<std::uint32_t> basis;
};

// Finite-dimensional comodule over the degree-d coefficient coalgebra,
// stored as the sparse coefficient tensor (E, row, col) -> value.
// Bases are weight-adapted: coeff[diag(mu)] is the coordinate projector
// onto the basis vectors of weight mu.
class PolyRep {
 public:
  PolyRep();
  PolyRep(FieldSpec f, Layout layout, int degree, std::vector<Weight> weights,
          std::vector<CoeffEntry> entries, std::string label = {});

  const FieldSpec& field() const noexcept { return field_; }
  const Layout& layout() const noexcept { return layout_; }
  int coords() const noexcept { return coords_; }
  int degree() const noexcept { return degree_; }
  std::size_t dim() const noexcept { return weights_.size(); }
  const std::string& label() const noexcept { return label_; }
  void set_label(std::string s) { label_ = std::move(s); }
  RepContext ctx() const;

  const std::vector<Weight>& weights() const noexcept { return weights_; }
  const std::vector<CoeffEntry>& entries() const noexcept { return entries_; }

  // Entry indices of column c, in canonical order.
  std::span<const std::uint32_t> column(std::size_t c) const {
    return {col_idx_.data() + col_ptr_[c], col_ptr_[c + 1] - col_ptr_[c]};
  }
  std::pair<std::size_t, std::size_t> key_range(const ExponentKey& k) const;
  ExactMatrix coeff(const ExponentKey& k) const;
  std::vector<ExponentKey> keys() const;

  const std::vector<WeightBlock>& weight_blocks() const noexcept {
    return blocks_;
  }
  // index into weight_blocks(), or -1
  int find_weight(const Weight& w) const;
  std::uint32_t block_of_basis(std::size_t b) const { return basis_block_[b]; }
  std::uint32_t local_index(std::size_t b) const { return basis_local_[b]; }

  // Degree carried by each layout block (constant over the basis).
  std::vector<int> block_degrees() const;

  friend bool operator==(const PolyRep& a, const PolyRep& b) {
    return a.field_ == b.field_ && a.layout_ == b.layout_ &&
           a.degree_ == b.degree_ && a.weights_ == b.weights_ &&
           a.same_entries(b);
  }

 private:
  bool same_entries(const PolyRep& o) const;
  void index();

  FieldSpec field_;
  Layout layout_;
  int coords_ = 1;
  int degree_ = 0;
  std::vector<Weight> weights_;
  std::vector<CoeffEntry> entries_;
  std::string label_;
  std::vector<std::uint32_t> col_ptr_, col_idx_;
  std::vector<WeightBlock> blocks_;
  std::vector<std::uint32_t> basis_block_, basis_local_;
};

using PolyRepPtr = std::shared_ptr<const PolyRep>;

// ---------------------------------------------------------------- builders

enum class BasicKind { Sym, Wedge, Div, TensorPower, Nat };

PolyRep constant_rep(FieldSpec f, const Layout& layout, std::size_t dim = 1);
PolyRep constant_rep(const RepContext& ctx, std::size_t dim = 1);
PolyRep build_basic(BasicKind kind, int a, const RepContext& ctx);
PolyRep symmetric_power(int a, const RepContext& ctx);
PolyRep divided_power(int a, const RepContext& ctx);
PolyRep exterior_power(int a, const RepContext& ctx);
PolyRep tensor_power(int a, const RepContext& ctx);
PolyRep natural_rep(const RepContext& ctx);

// Inclusion of Div[a] into TensorPower[a] (orbit sums of words).
ExactMatrix divided_power_inclusion(int a, const RepContext& ctx);

// Tensor products of divided / symmetric / exterior powers over a tuple.
PolyRep gamma_module(const std::vector<int>& tuple, const RepContext& ctx);
PolyRep sym_module(const std::vector<int>& tuple, const RepContext& ctx);
PolyRep wedge_module(const std::vector<int>& tuple, const RepContext& ctx);

PolyRep tensor(const PolyRep& m, const PolyRep& n);
PolyRep direct_sum(const PolyRep& m, const PolyRep& n);
PolyRep twist(const PolyRep& m, int r);
// Exterior tensor product: the result lives on the concatenated layout.
PolyRep outer_tensor(const PolyRep& m, const PolyRep& n);
PolyRep dual(const PolyRep& m);

// Standard basis vectors spanning the weight space; BadWeight if mu has the
// wrong length or sum.
std::vector<Vec> weight_space(const PolyRep& m, const std::vector<int>& mu);

// Sub-collection of basis vectors closed under the action, as a module.
PolyRep coordinate_submodule(const PolyRep& m,
                             const std::vector<std::uint32_t>& basis);

// Upper bound on the number of entries of the tensor product.
std::size_t tensor_size_estimate(const PolyRep& m, const PolyRep& n);

// ---------------------------------------------------------------- checks

struct InvariantCheck {
  bool counit = true;
  bool weights = true;
  bool coassociative = true;
  bool coassociativity_full = true;
  std::size_t columns_checked = 0;
  std::string detail;
  bool ok() const noexcept { return counit && weights && coassociative; }
};

// Counit and weight-projector laws are checked exactly; coassociativity is
// checked on every column when the expansion budget allows and on a
// deterministic sample of columns otherwise (possibly none: see
// columns_checked).
InvariantCheck check_invariants(const PolyRep& m,
                                std::size_t budget = 4'000'000);

// ---------------------------------------------------------------- io

std::string serialize(const PolyRep& m);
PolyRep deserialize(std::string_view text,
                    std::optional<unsigned> expected_p = std::nullopt);

}  // namespace polyrep
