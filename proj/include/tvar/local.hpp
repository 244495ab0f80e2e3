#pragma once

#include <vector>

#include "tvar/outcome.hpp"
#include "tvar/polyhedron.hpp"
#include "tvar/pwa.hpp"

namespace tvar {

// Local model cone at a contraction-free fixed point: the cone in
// M_Q x Q generated by (u,k) - v over u in the box, k <= h_P*(u). Always
// contains (0,-1); full-dimensional and pointed for genuine fixed points.
struct LocalCone {
  std::size_t mrank = 0;            // rank of M; the cone lives in mrank+1
  Vec apex;                         // (v, h_P*(v)); origin for intrinsic cones
  std::vector<IVec> rays;           // primitive generators (w_i, alpha_i)
  std::vector<IVec> facet_normals;  // primitive inner normals

  bool member(const IVec& x) const;
  bool interior_member(const IVec& x) const;
};

// Cone from the hypograph of a conjugate function at one of its graph
// vertices. Throws "v not a vertex" when v is not a vertex of the graph.
LocalCone local_cone_at_graph_vertex(const PiecewiseAffine& hstar, const Vec& v);

// The same cone built intrinsically from the slice cell at the fixed point:
// {(u,k) : <x,u> >= k for x in the cell}. For ample data both constructions
// agree.
LocalCone local_cone_of_cell(const Polyhedron& cell);

struct GorensteinData {
  IVec u;                    // the distinguished lattice point (u, alpha)
  Int alpha;                 // its last coordinate
  std::vector<Rat> lambdas;  // per ray; support linearly independent
};

// The unique lattice point pairing to 1 with every primitive inner facet
// normal, with its lambda-decomposition over the rays, or a not-Gorenstein
// diagnostic naming the obstruction.
Outcome<GorensteinData> gorenstein_generator(const LocalCone& c);

}  // namespace tvar
