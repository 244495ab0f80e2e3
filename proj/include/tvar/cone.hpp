#pragma once

#include <vector>

#include "tvar/vec.hpp"

namespace tvar {

// Minimal V-description of a convex polyhedral cone: extreme rays modulo the
// lineality space, plus a canonical basis of that space. Rays are primitive
// integer vectors in lex order.
struct ConeVH {
  std::vector<Vec> rays;
  std::vector<Vec> lin;
};

struct ConeHRep {
  std::vector<Vec> ineqs;  // a with a.x >= 0, facet normals, primitive
  std::vector<Vec> eqs;    // e with e.x = 0, canonical span basis
};

// Extreme rays and lineality of {x : a.x >= 0 for a in ineqs, e.x = 0 for e
// in eqs}, by the double description method with the combinatorial adjacency
// test. Exact over Rat.
ConeVH cone_from_constraints(std::size_t dim, const std::vector<Vec>& ineqs,
                             const std::vector<Vec>& eqs = {});

// Irredundant generators of cone(gens) + span(lin).
ConeVH cone_canonicalize(std::size_t dim, const std::vector<Vec>& gens,
                         const std::vector<Vec>& lin = {});

// Facet normals and span equations of cone(gens) + span(lin); the dual side
// of the same computation.
ConeHRep cone_facets(std::size_t dim, const std::vector<Vec>& gens,
                     const std::vector<Vec>& lin = {});

}  // namespace tvar
