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

#include <cstddef>

#include "polyrep/homology.hpp"
#include "polyrep/modkit.hpp"
#include "polyrep/polyrep.hpp"
#include "polyrep/report.hpp"
#include "polyrep/symbridge.hpp"

// Internal tensor product and internal hom of homogeneous functors of one
// degree. Hom(F, G)(V) = hom(F o Hom(V, -), G), and the internal tensor
// product is the dual of Hom(F, G#).

namespace polyrep {

// P1 -> P0 -> module -> 0 with P0, P1 sums of Gamma^lambda.
struct GammaPresentation {
  PolyRepPtr module;
  GammaProjective p0, p1;
  std::size_t image_rank = 0;  // rank of P1 -> P0 over all weights
  std::size_t p0_dim = 0;
  bool consistent() const { return module->dim() + image_rank == p0_dim; }
};

GammaPresentation gamma_presentation(PolyRepPtr m);

// The functor restricted to (or extended to) coords coordinates; extension
// goes through a Gamma-presentation. Needs coords() >= degree on input.
PolyRep evaluate_at(const PolyRep& m, int coords);

void set_max_intern_dim(std::size_t d);
std::size_t max_intern_dim();
void set_max_intern_degree(int d);
int max_intern_degree();

PolyRep internal_with_tensorpower(const PolyRep& f);
PolyRep internal_with_wedge(const PolyRep& f);
PolyRep internal_with_Q(const PolyRep& f);

// Evaluates f at dimension degree^2; the result lives in f's context.
PolyRep internal_hom(const PolyRep& f, const PolyRep& g);
// Picks the cheaper of the two orders.
PolyRep internal_general(const PolyRep& f, const PolyRep& g);
// f is the factor evaluated at the larger dimension.
PolyRep internal_oriented(const PolyRep& f, const PolyRep& g);

Report verify_stein_internal(const Partition& lambda, const Partition& mu,
                             const RepContext& ctx);

}  // namespace polyrep
