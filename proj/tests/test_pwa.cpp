#include "doctest.h"
#include "support.hpp"
#include "tvar/pwa.hpp"

using namespace tvar;
using namespace tvar::testing;

namespace {

Polyhedron interval(long a, long b) {
  return Polyhedron::from_vrep(1, {Vec{Rat(a)}, Vec{Rat(b)}});
}

// min over random integer-affine candidates, as a function on all of Q^n.
PiecewiseAffine random_concave(Rng& rng, std::size_t dim, int npieces) {
  std::vector<AffinePiece> cand;
  for (int i = 0; i < npieces; ++i)
    cand.push_back({rand_vec(rng, dim, -4, 4), rand_rat(rng, -4, 4, 1)});
  return min_envelope(Polyhedron::full_space(dim), cand);
}

}  // namespace

TEST_CASE("min envelope in rank one") {
  // min(2u, u+1, 3) on [0,3] breaks at 1 and 2.
  std::vector<AffinePiece> cand = {
      {Vec{Rat(2)}, Rat(0)}, {Vec{Rat(1)}, Rat(1)}, {Vec{Rat(0)}, Rat(3)}};
  PiecewiseAffine f = min_envelope(interval(0, 3), cand);
  CHECK(f.dom.cells.size() == 3);
  CHECK(f(Vec{Rat(0)}) == Rat(0));
  CHECK(f(Vec{Rat(1)}) == Rat(2));
  CHECK(f(Vec{Rat(3)}) == Rat(3));
  CHECK(f.is_concave());
  CHECK(f.is_continuous());

  // A candidate that is minimal nowhere is dropped.
  cand.push_back({Vec{Rat(1)}, Rat(5)});
  PiecewiseAffine g = min_envelope(interval(0, 3), cand);
  CHECK(g.dom.cells.size() == 3);
}

TEST_CASE("graph vertices and strict concavity of h_P0") {
  PiecewiseAffine h = example1_h_p0();
  CHECK(h.is_continuous());
  CHECK(h.is_concave());
  CHECK(h.is_strictly_concave());
  auto gv = h.graph_vertices();
  REQUIRE(gv.size() == 4);
  for (const auto& [v, val] : gv) CHECK(val == Rat(-5));
  CHECK(h(v2(0, 0)) == Rat(-5));
  CHECK(h(v2(2, 0)) == Rat(-6));
}

TEST_CASE("conjugate of h_P0 reproduces the diamond picture") {
  PiecewiseAffine h = example1_h_p0();
  PiecewiseAffine hs = concave_conjugate(h, diamond());
  CHECK(hs(v2(0, 0)) == Rat(5));
  CHECK(hs(v2(1, 0)) == Rat(4));
  CHECK(hs(v2(-1, 0)) == Rat(4));
  CHECK(hs(v2(0, 1)) == Rat(4));
  CHECK(hs(v2(0, -1)) == Rat(4));
  // Regions of linearity: the four triangles cut by both diagonals.
  CHECK(hs.dom.cells.size() == 4);
  CHECK(hs.is_concave());
}

TEST_CASE("conjugate of the zero function on a fan") {
  PiecewiseAffine z;
  z.dom = example1_sigma();
  z.pieces.assign(4, AffinePiece{v2(0, 0), Rat(0)});
  PiecewiseAffine zs = concave_conjugate(z, diamond());
  CHECK(zs.dom.cells.size() == 1);
  CHECK(zs(v2(0, 0)) == Rat(0));
  CHECK(zs(v2(1, 0)) == Rat(0));
}

TEST_CASE("rank-one conjugate example") {
  // Graph vertices (0,0) and (1,1); conjugate on [0,1] is min(0, u-1).
  PiecewiseAffine f;
  f.dom = PolyComplex{1, {interval(0, 1)}};
  f.pieces = {{Vec{Rat(1)}, Rat(0)}};
  PiecewiseAffine fs = concave_conjugate(f, interval(0, 1));
  CHECK(fs(Vec{Rat(0)}) == Rat(-1));
  CHECK(fs(Vec{Rat(1, 2)}) == Rat(-1, 2));
  CHECK(fs(Vec{Rat(1)}) == Rat(0));
}

TEST_CASE("conjugate needs graph vertices") {
  PiecewiseAffine f;
  f.dom = PolyComplex{1, {Polyhedron::full_space(1)}};
  f.pieces = {{Vec{Rat(1)}, Rat(0)}};
  CHECK_THROWS_WITH(concave_conjugate(f, interval(0, 1)), "unbounded conjugate");
}

TEST_CASE("common refinement") {
  Polyhedron box = interval(0, 3);
  SUBCASE("empty list returns the box itself") {
    PolyComplex c = common_refinement(box, {});
    REQUIRE(c.cells.size() == 1);
    CHECK(c.cells[0] == box);
  }
  SUBCASE("rank-one breakpoints union") {
    PiecewiseAffine f = min_envelope(box, {{Vec{Rat(0)}, Rat(0)}, {Vec{Rat(-1)}, Rat(1)}});
    PiecewiseAffine g = min_envelope(box, {{Vec{Rat(0)}, Rat(0)}, {Vec{Rat(-1)}, Rat(2)}});
    // f breaks at 1, g breaks at 2.
    PolyComplex c = common_refinement(box, {f, g});
    REQUIRE(c.cells.size() == 3);
    CHECK(c.cells[0] == interval(0, 1));
    CHECK(c.cells[1] == interval(1, 2));
    CHECK(c.cells[2] == interval(2, 3));
  }
  SUBCASE("mismatched boxes are rejected") {
    PiecewiseAffine f = zero_pwa(interval(10, 12));
    CHECK_THROWS(common_refinement(box, {f}));
  }
}

TEST_CASE("pwa sum of the example conjugates") {
  PiecewiseAffine h0s = concave_conjugate(example1_h_p0(), diamond());
  PiecewiseAffine z = zero_pwa(diamond());
  PiecewiseAffine s = pwa_sum(diamond(), {h0s, z});
  CHECK(s(v2(0, 0)) == Rat(5));
  CHECK(s.dom.cells.size() == 4);
}

TEST_CASE("graph scaling") {
  PiecewiseAffine h0s = concave_conjugate(example1_h_p0(), diamond());
  PiecewiseAffine m2 = pwa_scale_graph(h0s, Rat(2));
  CHECK(m2(v2(0, 0)) == Rat(10));
  CHECK(m2(v2(2, 0)) == Rat(8));
  CHECK(m2(v2(1, 0)) == Rat(9));
}

TEST_CASE("conjugate involution on random concave functions") {
  Rng rng(424242);
  int done = 0;
  for (int iter = 0; iter < 40; ++iter) {
    std::size_t dim = 1 + iter % 2;
    PiecewiseAffine h = random_concave(rng, dim, 2 + iter % 4);
    // Box of h: the convex hull of the active slopes.
    std::vector<Vec> slopes;
    for (const auto& p : h.pieces) slopes.push_back(p.slope);
    Polyhedron box = Polyhedron::from_vrep(dim, slopes);
    if (box.dim() < static_cast<int>(dim)) continue;  // degenerate draw
    PiecewiseAffine hs = concave_conjugate(h, box);
    PiecewiseAffine hss = concave_conjugate(hs, Polyhedron::full_space(dim));
    for (int s = 0; s < 8; ++s) {
      Vec v = rand_vec(rng, dim, -6, 6, 2);
      CHECK(hss(v) == h(v));
    }
    ++done;
  }
  CHECK(done >= 25);
}
