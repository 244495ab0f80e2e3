#pragma once

#include <vector>

#include "tvar/polyhedron.hpp"

namespace tvar {

// All integer points of a bounded polyhedron in lexicographic order, by
// recursive coordinate slicing (the first coordinate runs over its exact
// range; each slice is a polyhedron of one rank less). Throws "unbounded
// enumeration" for unbounded input. The top-level slices run under OpenMP;
// lattice_points_serial is the serial reference of the same recursion.
std::vector<IVec> lattice_points(const Polyhedron& p);
std::vector<IVec> lattice_points_serial(const Polyhedron& p);

}  // namespace tvar
