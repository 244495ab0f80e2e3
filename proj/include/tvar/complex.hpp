#pragma once

#include <string>
#include <vector>

#include "tvar/polyhedron.hpp"

namespace tvar {

// Polyhedral complex given by its maximal cells. Cell order is preserved as
// given (file order for parsed instances, canonical order for computed
// subdivisions); set-level equality is order independent.
struct PolyComplex {
  std::size_t rank = 0;
  std::vector<Polyhedron> cells;

  // Pairwise intersections must be common faces; with full_support also
  // every cell full-dimensional and every facet shared with another cell.
  // Returns an error description, empty on success.
  std::string check(bool full_support) const;

  bool is_fan() const;

  // Union of the cells' vertex sets, lex sorted.
  std::vector<Vec> vertex_set() const;

  // All faces of all cells, deduped, dims descending.
  std::vector<Polyhedron> all_faces() const;

  int cell_containing(const Vec& v) const;  // first hit, -1 if none
  int cell_with_recession(const Polyhedron& cone) const;

  bool same_cells(const PolyComplex& other) const;
};

// Fan of the recession cones of the cells (maximal ones). Throws
// "inconsistent tailfan" when those cones do not form a fan.
PolyComplex recession_fan(const PolyComplex& c);

}  // namespace tvar
