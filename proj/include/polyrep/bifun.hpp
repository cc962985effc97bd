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
#include <string>
#include <utility>
#include <vector>

#include "polyrep/modkit.hpp"
#include "polyrep/polyrep.hpp"
#include "polyrep/report.hpp"

// Bifunctors of bidegree (d, e), realized as comodules over the Levi
// subgroup GL_n x GL_m: a PolyRep on the layout (n, m) whose weights all
// have block sums (d, e).

namespace polyrep {

struct BiRep {
  PolyRepPtr rep;
  int d = 0, e = 0;

  int n() const { return rep->layout().blocks[0]; }
  int m() const { return rep->layout().blocks[1]; }
  std::size_t dim() const { return rep->dim(); }
};

// Checks the layout has two blocks and the bidegree is homogeneous.
BiRep as_birep(PolyRepPtr rep);
// Zero module of bidegree (d, e).
BiRep zero_birep(FieldSpec f, int n, int m, int d, int e);

BiRep boxtimes(const PolyRep& a, const PolyRep& b);
// B(V, V^(r)); needs n == m.
PolyRep phi(const BiRep& b, int r);
PolyRep delta(const BiRep& b);
// f(V + W) split by bidegree, from (d, 0) down to (0, d); f at n + m coords.
std::vector<BiRep> boxplus(const PolyRep& f, int n, int m);

std::size_t hom_bi(const BiRep& a, const BiRep& b);
std::vector<std::size_t> ext_bi(const BiRep& a, const BiRep& b, int kmax);

// Span of u (x) v over bases of a and b, inside the ambient a (x) b.
Submodule tensor_submodule(const Submodule& a, const Submodule& b, PolyRepPtr ambient);

// Every submodule, by closing the cyclic submodules under sums. Throws
// BudgetExceeded when p^dim exceeds 2^12.
std::vector<Submodule> submodule_lattice(PolyRepPtr m);

// Diagram of a multiplicity-free module: vertices are the composition
// factors (by highest weight), with an edge x -> y when the submodule with
// head x covers the one with head y among submodules with simple head.
struct Diagram {
  std::vector<Weight> vertices;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  bool multiplicity_free = true;
};
Diagram module_diagram(PolyRepPtr m);
std::string diagram_edges(const Diagram& g, int coords);

// Hom comparison and socle series at n = total degree (at most 5), then
// the lattice part below.
Report verify_steinberg_type(PolyRepPtr f, PolyRepPtr g, int r);
// Submodule lattice and diagram of f (x) g^(r) in the given context, when
// multiplicity free with p^dim <= 2^12; empty report otherwise.
Report verify_steinberg_lattice(PolyRepPtr f, PolyRepPtr g, int r);
Report verify_appendixA(const std::vector<std::pair<PolyRepPtr, PolyRepPtr>>& samples);

}  // namespace polyrep
