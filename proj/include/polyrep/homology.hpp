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
#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "polyrep/gamma.hpp"
#include "polyrep/modkit.hpp"
#include "polyrep/partitions.hpp"
#include "polyrep/polyrep.hpp"
#include "polyrep/report.hpp"

namespace polyrep {

// A sum of Gamma^lambda with multiplicities.
struct GammaProjective {
  std::vector<std::pair<Weight, int>> summands;
  std::size_t dim(const Layout& layout) const;
  std::string to_string(const Layout& layout) const;
};

GammaProjective projective_of(const Stage& s);

// Gamma-resolution built by covering syzygies one weight-graded stage at a
// time. Stage k holds the generators of P_k as elements of P_{k-1} (of the
// target for k = 0).
class Resolution {
 public:
  explicit Resolution(PolyRepPtr target,
                      CoverStrategy strategy = CoverStrategy::Greedy);

  const PolyRep& target() const { return *target_; }
  const PolyRepPtr& target_ptr() const { return target_; }
  CoverStrategy strategy() const { return strategy_; }

  // Ensures P_0 .. P_{stages-1} exist.
  void extend(int stages);
  int computed() const { return int(stages_.size()); }
  // true once a zero syzygy was reached; later terms are zero
  bool finished() const { return finished_; }
  // empty stage past the end of a finished resolution
  const Stage& stage(int k);
  std::size_t term_dim(int k);

  // Differential P_{k+1} -> P_k (augmentation for k = -1) at weight mu.
  ExactMatrix differential_block(int k, const Weight& mu);
  // rank(d_{k+1}) = dim ker(d_k) at every dominant weight
  bool verify_exactness(int k);

  std::string fingerprint() const { return fingerprint_; }
  bool loaded_from_cache() const { return from_cache_; }

 private:
  void load_cache();
  void save_cache() const;
  const SumView& view(int k);  // view of P_k; k = -1 is the target

  PolyRepPtr target_;
  CoverStrategy strategy_;
  std::vector<Stage> stages_;
  bool finished_ = false;
  bool from_cache_ = false;
  std::string fingerprint_;
  std::map<int, SumView> views_;
  Stage empty_;
};

// Disk cache for resolutions: POLYREP_CACHE unless overridden; empty
// disables caching.
void set_cache_dir(std::optional<std::filesystem::path> dir);
std::optional<std::filesystem::path> cache_dir();

// Shared in-process resolutions, keyed by the serialized target.
std::shared_ptr<Resolution> resolution_of(
    PolyRepPtr target, CoverStrategy strategy = CoverStrategy::Greedy);

// dim Ext^k(M, N) from a resolution of M; Ext^0 is dim hom(M, N).
std::size_t ext_dim(Resolution& res, const PolyRep& n, int k);
std::vector<std::size_t> ext_dims(Resolution& res, const PolyRep& n, int kmax);
std::vector<std::size_t> ext_dims(PolyRepPtr m, PolyRepPtr n, int kmax);

// ---------------------------------------------------------------- invariants

struct InvariantValue {
  enum class Kind { Finite, Infinite, AtLeast };
  Kind kind = Kind::Finite;
  int value = 0;

  static InvariantValue finite(int v) { return {Kind::Finite, v}; }
  static InvariantValue infinite() { return {Kind::Infinite, 0}; }
  static InvariantValue at_least(int v) { return {Kind::AtLeast, v}; }
  std::string to_string() const;
  nlohmann::json to_json() const;
  friend bool operator==(const InvariantValue&, const InvariantValue&) = default;
};

InvariantValue min(const InvariantValue& a, const InvariantValue& b);

enum class DetectTarget { T, L };

// T^{(d_0,...,d_k)} = tensor^{d_0} x (tensor^{d_1})^(1) x ...
PolyRep twisted_tensor(const Tuple& t, const RepContext& ctx);
// summands of T(d,r) and of L(d,r)
std::vector<std::pair<std::string, PolyRepPtr>> detection_summands(
    int d, int r, DetectTarget target, const RepContext& ctx);

int default_cap(unsigned p, int r, int d);

// least k <= cap with Ext^k(G(d,r), F) != 0
InvariantValue invariant_i(PolyRepPtr f, int r, std::optional<int> cap = {},
                           DetectTarget target = DetectTarget::T);
// least k <= cap with Ext^k(F, G(d,r)) != 0
InvariantValue invariant_p(PolyRepPtr f, int r, std::optional<int> cap = {},
                           DetectTarget target = DetectTarget::T);

// Largest admissible term dimension; extend() throws BudgetExceeded past it.
void set_max_term_dim(std::size_t d);
std::size_t max_term_dim();

// All composition factors of Head(m) (resp. Soc(m)) are p^r-restricted.
bool head_restricted(PolyRepPtr m, int r);
bool socle_restricted(PolyRepPtr m, int r);

// ---------------------------------------------------------------- maps

// Kronecker product of matrices, matching the basis order of tensor().
ExactMatrix kron(const ExactMatrix& a, const ExactMatrix& b);
// S^a (x) S^b -> S^{a+b}
ExactMatrix sym_multiplication(int a, int b, const RepContext& ctx);
// S^{a+b} -> S^a (x) S^b
ExactMatrix sym_comultiplication(int a, int b, const RepContext& ctx);
// Wedge^{a+b} -> Wedge^a (x) Wedge^b
ExactMatrix wedge_comultiplication(int a, int b, const RepContext& ctx);

// ---------------------------------------------------------------- claims

// Twisted Kunneth maps in degrees 0 and 1 for F (x) X^(r) -> G (x) Y^(r).
// All four modules share one context large enough for both products.
Report verify_cup_deg01(PolyRepPtr f, PolyRepPtr g, PolyRepPtr x,
                        PolyRepPtr y, int r);
Report verify_connectedness(PolyRepPtr f, PolyRepPtr g, PolyRepPtr x,
                            PolyRepPtr y, int r, int kmax);
// Ext(T^t, S_lambda) against Ext shifted by s(t) with W of the conjugate.
Report verify_shift_ptitlm(const Partition& lambda, const Tuple& t,
                           const RepContext& ctx, int window = 2);
// The three degree-4 short exact sequences at p = 2.
Report verify_lmses(const RepContext& ctx);

}  // namespace polyrep
