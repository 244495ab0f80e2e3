#include "doctest.h"
#include "support.hpp"
#include "tvar/local.hpp"

using namespace tvar;
using namespace tvar::testing;

namespace {

LocalCone cone_from_rays(std::size_t dim, const std::vector<IVec>& rays) {
  std::vector<Vec> gens;
  for (const auto& r : rays) gens.push_back(to_vec(r));
  ConeVH c = cone_canonicalize(dim, gens);
  LocalCone out;
  out.mrank = dim - 1;
  out.apex = zero_vec(dim);
  for (const auto& r : c.rays) out.rays.push_back(to_ivec(primitive_direction(r)));
  ConeHRep h = cone_facets(dim, c.rays);
  for (const auto& n : h.ineqs) out.facet_normals.push_back(to_ivec(primitive_direction(n)));
  return out;
}

// Lattice points of the cone truncated to [-radius, radius]^dim.
std::vector<IVec> truncation(const LocalCone& c, long radius, bool interior) {
  std::vector<IVec> out;
  std::size_t dim = c.mrank + 1;
  IVec cur(dim);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == dim) {
      if (interior ? c.interior_member(cur) : c.member(cur)) out.push_back(cur);
      return;
    }
    for (long v = -radius; v <= radius; ++v) {
      cur[i] = v;
      rec(i + 1);
    }
  };
  rec(0);
  return out;
}

}  // namespace

TEST_CASE("local cone of the figure-4 configuration") {
  // Graph of h_P* through (0,1),(1,2),(2,2),(3,1),(4,-1); vertex at (2,2).
  PiecewiseAffine hstar;
  Polyhedron box = Polyhedron::from_vrep(1, {Vec{Rat(0)}, Vec{Rat(4)}});
  std::vector<AffinePiece> cand = {{Vec{Rat(1)}, Rat(1)},
                                   {Vec{Rat(0)}, Rat(2)},
                                   {Vec{Rat(-1)}, Rat(4)},
                                   {Vec{Rat(-2)}, Rat(7)}};
  hstar = min_envelope(box, cand);
  CHECK(hstar(Vec{Rat(2)}) == Rat(2));
  CHECK(hstar(Vec{Rat(4)}) == Rat(-1));

  LocalCone c = local_cone_at_graph_vertex(hstar, Vec{Rat(2)});
  REQUIRE(c.rays.size() == 2);
  // w_1 = (-1,0) and w_2 = (1,-1); (0,-1) is inside but not extreme.
  CHECK(c.rays[0] == IVec{-1, 0});
  CHECK(c.rays[1] == IVec{1, -1});
  CHECK(c.member(IVec{0, -1}));
  CHECK_FALSE(c.interior_member(IVec{0, 0}));

  auto g = gorenstein_generator(c);
  REQUIRE(g.ok());
  CHECK(g->u == IVec{0, -1});  // u = w_1 + w_2, alpha = -1
  CHECK(g->alpha == -1);
  CHECK(g->lambdas == std::vector<Rat>{Rat(1), Rat(1)});

  CHECK_THROWS_WITH(local_cone_at_graph_vertex(hstar, Vec{Rat(1, 2)}), "v not a vertex");
}

TEST_CASE("graph-vertex and intrinsic cones agree on the running example") {
  PiecewiseAffine h0s = concave_conjugate(example1_h_p0(), diamond());
  LocalCone from_graph = local_cone_at_graph_vertex(h0s, v2(0, 0));
  LocalCone intrinsic = local_cone_of_cell(example1_c1().cells[0]);
  CHECK(from_graph.rays == intrinsic.rays);
  CHECK(from_graph.facet_normals == intrinsic.facet_normals);
  auto g = gorenstein_generator(intrinsic);
  REQUIRE(g.ok());
  CHECK(g->u == IVec{0, 0, -1});
  // Simplicial bound on the lambdas.
  Rat lsum;
  for (const auto& l : g->lambdas) {
    CHECK(l >= Rat(0));
    CHECK(l <= Rat(1));
    lsum += l;
  }
  CHECK(lsum < Rat(3));
}

TEST_CASE("smooth cones sum their rays") {
  LocalCone c = cone_from_rays(2, {IVec{1, 0}, IVec{1, 2}});
  // Not smooth: determinant 2.
  auto g1 = gorenstein_generator(c);
  REQUIRE(g1.ok());
  CHECK(g1->u == IVec{1, 1});

  LocalCone smooth = cone_from_rays(3, {IVec{1, 0, 0}, IVec{0, 1, 0}, IVec{0, 0, 1}});
  auto g2 = gorenstein_generator(smooth);
  REQUIRE(g2.ok());
  CHECK(g2->u == IVec{1, 1, 1});
  CHECK(g2->lambdas == std::vector<Rat>{Rat(1), Rat(1), Rat(1)});
}

TEST_CASE("non-gorenstein cone is detected") {
  // Rays (1,0) and (1,3): the pairing point is (1, 2/3).
  LocalCone c = cone_from_rays(2, {IVec{1, 0}, IVec{1, 3}});
  auto g = gorenstein_generator(c);
  CHECK_FALSE(g.ok());
  CHECK(g.error.find("not Gorenstein") != std::string::npos);
}

TEST_CASE("gorenstein generator against brute-force lattice scans") {
  Rng rng(90210);
  int checked = 0, nontrivial = 0;
  while (checked < 60) {
    std::size_t dim = 2 + checked % 2;
    std::vector<IVec> rays;
    std::size_t n = dim + rand_int(rng, 0, 2);
    for (std::size_t i = 0; i < n; ++i) {
      IVec r;
      for (std::size_t j = 0; j + 1 < dim; ++j) r.push_back(Int(rand_int(rng, -3, 3)));
      r.push_back(Int(rand_int(rng, 1, 3)));  // keep the cone pointed
      rays.push_back(std::move(r));
    }
    LocalCone c;
    try {
      c = cone_from_rays(dim, rays);
      Mat span;
      for (const auto& r : c.rays) span.push_back(to_vec(r));
      if (mat_rank(span) != static_cast<int>(dim)) continue;
    } catch (...) {
      continue;
    }
    ++checked;
    auto g = gorenstein_generator(c);
    // Brute-force: search the radius-4 window for a lattice point pairing to
    // one with every facet normal.
    std::vector<IVec> candidates;
    for (const auto& x : truncation(c, 4, false)) {
      bool all_one = true;
      for (const auto& nrm : c.facet_normals) {
        Rat v = dot(to_vec(nrm), to_vec(x));
        if (v != Rat(1)) { all_one = false; break; }
      }
      if (all_one) candidates.push_back(x);
    }
    if (g.ok()) {
      ++nontrivial;
      bool fits = true;
      for (const auto& xi : g->u) fits &= xi >= -4 && xi <= 4;
      if (fits) {
        bool found = false;
        for (const auto& x : candidates) found |= x == g->u;
        CHECK(found);
      }
      // Set equality of the truncations: interior points = u + cone points.
      auto interior = truncation(c, 4, true);
      for (const auto& x : interior) {
        IVec y = x;
        for (std::size_t i = 0; i < y.size(); ++i) y[i] -= g->u[i];
        CHECK(c.member(y));
      }
      for (const auto& x : truncation(c, 3, false)) {
        IVec y = x;
        for (std::size_t i = 0; i < y.size(); ++i) y[i] += g->u[i];
        CHECK(c.interior_member(y));
      }
    } else {
      CHECK(candidates.empty());
    }
  }
  CHECK(nontrivial > 10);
}
