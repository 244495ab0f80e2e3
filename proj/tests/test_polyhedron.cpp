#include "doctest.h"
#include "support.hpp"
#include "tvar/polyhedron.hpp"

using namespace tvar;
using namespace tvar::testing;

TEST_CASE("vrep canonicalization drops non-vertices") {
  // Midpoint and an interior point are not vertices of the square.
  Polyhedron p = Polyhedron::from_vrep(
      2, {v2(0, 0), v2(2, 0), v2(0, 2), v2(2, 2), v2(1, 1), v2(1, 0)});
  CHECK(p.vertices().size() == 4);
  CHECK(p.is_bounded());
  CHECK(p.dim() == 2);
}

TEST_CASE("hrep of the diamond and membership") {
  Polyhedron d = diamond();
  CHECK(d.hrep().ineqs.size() == 4);
  CHECK(d.hrep().eqs.empty());
  CHECK(d.contains(v2(0, 0)));
  CHECK(d.contains(v2r(Rat(1, 2), Rat(1, 2))));
  CHECK_FALSE(d.contains(v2(1, 1)));
  CHECK(d.is_lattice_polytope());
}

TEST_CASE("hrep and vrep round-trip on random polytopes") {
  Rng rng(7);
  for (int iter = 0; iter < 60; ++iter) {
    std::size_t dim = 1 + iter % 3;
    std::vector<Vec> vs;
    std::size_t n = 1 + rand_int(rng, 0, 5);
    for (std::size_t i = 0; i < n; ++i) vs.push_back(rand_vec(rng, dim, -5, 5, 2));
    std::vector<Vec> rays;
    if (iter % 3 == 0) {
      Vec r = rand_vec(rng, dim, -2, 2);
      if (!is_zero(r)) rays.push_back(r);
    }
    Polyhedron p = Polyhedron::from_vrep(dim, vs, rays);
    Polyhedron q = Polyhedron::from_hrep(dim, p.hrep());
    CHECK(p == q);
  }
}

TEST_CASE("lower-dimensional and empty hrep inputs") {
  // A segment in the plane: affine hull equation shows up.
  Polyhedron seg = Polyhedron::from_vrep(2, {v2(0, 0), v2(2, 2)});
  CHECK(seg.dim() == 1);
  CHECK(seg.hrep().eqs.size() == 1);
  CHECK(Polyhedron::from_hrep(2, seg.hrep()) == seg);

  HRep infeasible;
  infeasible.ineqs.push_back({v2(1, 0), Rat(1)});
  infeasible.ineqs.push_back({v2(-1, 0), Rat(0)});
  infeasible.ineqs.push_back({v2(0, 1), Rat(0)});
  Polyhedron e = Polyhedron::from_hrep(2, infeasible);
  CHECK(e.is_empty());
  CHECK(e.dim() == -1);
}

TEST_CASE("halfplane has canonical vertex, ray, lineality") {
  HRep h;
  h.ineqs.push_back({v2(1, 0), Rat(0)});
  Polyhedron p = Polyhedron::from_hrep(2, h);
  CHECK(p.vertices() == std::vector<Vec>{v2(0, 0)});
  CHECK(p.rays() == std::vector<Vec>{v2(1, 0)});
  CHECK(p.lineality() == std::vector<Vec>{v2(0, 1)});
  CHECK(p == Polyhedron::from_vrep(2, {v2(0, 5)}, {v2(1, 0)}, {v2(0, 1)}));
}

TEST_CASE("minkowski sums") {
  Polyhedron a = Polyhedron::from_vrep(1, {Vec{Rat(0)}, Vec{Rat(1)}});
  Polyhedron sum = minkowski_sum({a, a});
  CHECK(sum == Polyhedron::from_vrep(1, {Vec{Rat(0)}, Vec{Rat(2)}}));

  // Opposite translates of a cone cancel.
  Polyhedron sigma = Polyhedron::from_vrep(2, {v2(0, 0)}, {v2(-1, 1), v2(1, 1)});
  Polyhedron s1 = sigma.translate(v2r(Rat(1, 2), Rat(1, 2)));
  Polyhedron s2 = sigma.translate(v2r(Rat(-1, 2), Rat(-1, 2)));
  CHECK(minkowski_sum({s1, s2}) == sigma);

  CHECK_THROWS(minkowski_sum({}));
}

TEST_CASE("sum of the three upper slices of the running example") {
  // Top cell over P_0 plus the shifted-apex cones over P_1 and P_4.
  Vec mp = v2(-1, 1), pp = v2(1, 1);
  Polyhedron top0 = Polyhedron::from_vrep(2, {mp, pp}, {mp, pp});
  Polyhedron top1 =
      Polyhedron::from_vrep(2, {v2r(Rat(1, 2), Rat(1, 2))}, {mp, pp});
  Polyhedron top4 =
      Polyhedron::from_vrep(2, {v2r(Rat(-1, 2), Rat(-1, 2))}, {mp, pp});
  Polyhedron total = minkowski_sum({top0, top1, top4});
  // Vertex-sum oracle: hull of all sums of vertex triples plus the rays.
  std::vector<Vec> vsums;
  for (const auto& x : top0.vertices())
    for (const auto& y : top1.vertices())
      for (const auto& z : top4.vertices()) vsums.push_back(vadd(vadd(x, y), z));
  Polyhedron expect = Polyhedron::from_vrep(2, vsums, {mp, pp});
  CHECK(total == expect);
  CHECK(total == Polyhedron::from_vrep(2, {mp, pp}, {mp, pp}));
}

TEST_CASE("minkowski sum is associative and commutative") {
  Rng rng(99);
  for (int iter = 0; iter < 25; ++iter) {
    std::size_t dim = 1 + iter % 2;
    auto mk = [&] {
      std::vector<Vec> vs;
      for (int i = 0; i < 3; ++i) vs.push_back(rand_vec(rng, dim, -4, 4, 2));
      return Polyhedron::from_vrep(dim, vs);
    };
    Polyhedron a = mk(), b = mk(), c = mk();
    CHECK(a.minkowski(b) == b.minkowski(a));
    CHECK(a.minkowski(b).minkowski(c) == a.minkowski(b.minkowski(c)));
  }
}

TEST_CASE("faces and face tests") {
  Polyhedron sq = Polyhedron::from_vrep(2, {v2(0, 0), v2(1, 0), v2(0, 1), v2(1, 1)});
  auto fs = sq.faces();
  CHECK(fs.size() == 9);  // square, 4 edges, 4 vertices
  for (const auto& f : fs) CHECK(f.is_face_of(sq));
  Polyhedron edge = Polyhedron::from_vrep(2, {v2(0, 0), v2(1, 0)});
  CHECK(edge.is_face_of(sq));
  Polyhedron half = Polyhedron::from_vrep(2, {v2r(Rat(1, 4), Rat(0)), v2r(Rat(3, 4), Rat(0))});
  CHECK_FALSE(half.is_face_of(sq));
  CHECK(sq.is_face_of(sq));
}

TEST_CASE("recession cones") {
  Polyhedron strip = Polyhedron::from_vrep(2, {v2(0, 0), v2(0, 1)}, {v2(1, 0)});
  Polyhedron rec = strip.recession();
  CHECK(rec.is_cone());
  CHECK(rec.rays() == std::vector<Vec>{v2(1, 0)});
  CHECK(diamond().recession() == Polyhedron::point(v2(0, 0)));
}

TEST_CASE("dilate and coordinate range") {
  Polyhedron d = diamond().dilate(Rat(3));
  auto [lo, hi] = d.coord_range(0);
  CHECK(lo == Rat(-3));
  CHECK(hi == Rat(3));
}
