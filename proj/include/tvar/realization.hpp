#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tvar/positivity.hpp"

namespace tvar {

// The realization polytope Inc(Psi) in M_Q x Q_0^P: over each u of the box
// the fiber is the simplex {x : sum x_P = 0, x_P <= Psi_P(u)}. Coordinates
// are ordered (u_1..u_n, x_{P_1}..x_{P_r}).
struct RealizationPolytope {
  Polyhedron box;
  std::vector<std::string> labels;        // size r >= 2
  std::vector<PiecewiseAffine> psi;       // per label, on the box
  HRep hrep;                              // in rank n + r
  std::size_t mrank = 0;

  std::size_t r() const { return labels.size(); }
  Rat psi_at(std::size_t p, const Vec& u) const { return psi[p](u); }
  Rat deg_at(const Vec& u) const;
};

// Assemble Inc(Psi) for the given point set (which must contain every point
// with a nontrivial function; missing entries get the zero function).
RealizationPolytope build_realization(const DivisorialPolytope& dp,
                                      const std::vector<std::string>& pset);

struct Fiber {
  Polyhedron simplex;  // in Q^r, with the sum-zero hyperplane in its hrep
  Rat dilation;        // deg Psi(u); negative means the fiber is empty
};

Fiber fiber(const RealizationPolytope& rp, const Vec& u);

// Integer points c with sum c = 0 and c_P <= floor(Psi_P(u)); the interior
// variant uses c_P <= ceil(Psi_P(u)) - 1. Lexicographic order.
std::vector<IVec> fiber_lattice_points(const RealizationPolytope& rp, const IVec& u,
                                       bool interior);
// First point in that order, without enumerating the rest.
std::optional<IVec> fiber_lattice_point_first(const RealizationPolytope& rp, const IVec& u,
                                              bool interior);

// Face of Inc(Psi) indexed by a proper subset I of the points and a face A
// of the subdivision A_I. Pairs over the same A with deg Psi|_A = 0 are
// identified; the representative keeps the lex-smallest I.
struct FacePair {
  std::vector<int> I;
  Polyhedron A;
  int dim = 0;
  bool fiber_collapsed = false;  // deg Psi vanishes on A
};

// All faces up to the stated identification. Throws "face enumeration too
// large" when 2^r exceeds the cap.
std::vector<FacePair> realization_faces(const RealizationPolytope& rp, std::size_t cap);

// Facets only: box facets with nonvanishing degree and the graph facets of
// the individual functions.
std::vector<FacePair> realization_facets(const RealizationPolytope& rp);

// Total lattice point count, fiber by fiber over the box; the per-u loop is
// an OpenMP kernel with fiber_census_serial as the reference.
Int fiber_census(const RealizationPolytope& rp, bool interior);
Int fiber_census_serial(const RealizationPolytope& rp, bool interior);

}  // namespace tvar
