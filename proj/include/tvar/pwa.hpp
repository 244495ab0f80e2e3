#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "tvar/complex.hpp"
#include "tvar/polyhedron.hpp"

namespace tvar {

struct AffinePiece {
  Vec slope;
  Rat c;
  Rat operator()(const Vec& u) const { return dot(slope, u) + c; }
  friend bool operator==(const AffinePiece& a, const AffinePiece& b) {
    return a.slope == b.slope && a.c == b.c;
  }
};

AffinePiece piece_add(const AffinePiece& a, const AffinePiece& b);

// Piecewise affine function on a polyhedral complex: one affine piece per
// maximal cell. Used both for the per-point parts h_P of a support function
// (domain a full-support slice of N_Q) and for the conjugates / divisorial
// polytope functions on a box in M_Q.
struct PiecewiseAffine {
  PolyComplex dom;
  std::vector<AffinePiece> pieces;

  Rat operator()(const Vec& u) const;
  bool defined_at(const Vec& u) const { return dom.cell_containing(u) >= 0; }

  bool is_continuous() const;
  // Concave == the function equals the min of its own pieces everywhere.
  bool is_concave() const;
  // Concave and the pieces of cells sharing a facet differ.
  bool is_strictly_concave() const;

  // Vertices of the graph: (w, value) over all cell vertices, lex sorted.
  std::vector<std::pair<Vec, Rat>> graph_vertices() const;
};

// Constant zero function on the given domain (one cell).
PiecewiseAffine zero_pwa(const Polyhedron& domain);

// The min of the candidate pieces as a piecewise affine function: cells are
// the closures of the regions where one candidate is the unique minimum.
// This is the subdivision of `domain` into regions of linearity.
PiecewiseAffine min_envelope(const Polyhedron& domain, std::vector<AffinePiece> candidates);

// u -> min over graph vertices (v, f(v)) of <v,u> - f(v), on `box`.
// Throws "unbounded conjugate" when f has no graph vertices.
PiecewiseAffine concave_conjugate(const PiecewiseAffine& f, const Polyhedron& box);

// Sum of concave piecewise affine functions on a common box, with its
// regions of linearity as cells. Empty input gives the zero function on box.
PiecewiseAffine pwa_sum(const Polyhedron& box, const std::vector<PiecewiseAffine>& fs);

// The coarsest subdivision of `box` on which the sum is affine per cell;
// empty input returns the trivial complex {box} (whose face lattice is the
// face lattice of the box).
PolyComplex common_refinement(const Polyhedron& box, const std::vector<PiecewiseAffine>& fs);

// Graph scaling for divisor multiples: g(u) = m * f(u/m).
PiecewiseAffine pwa_scale_graph(const PiecewiseAffine& f, const Rat& m);

}  // namespace tvar
