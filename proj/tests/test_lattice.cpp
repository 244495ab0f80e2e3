#include "doctest.h"
#include "support.hpp"
#include "tvar/lattice.hpp"

using namespace tvar;
using namespace tvar::testing;

TEST_CASE("diamond has five lattice points") {
  auto pts = lattice_points(diamond());
  REQUIRE(pts.size() == 5);
  // Lexicographic order.
  CHECK(pts[0] == IVec{-1, 0});
  CHECK(pts[1] == IVec{0, -1});
  CHECK(pts[2] == IVec{0, 0});
  CHECK(pts[3] == IVec{0, 1});
  CHECK(pts[4] == IVec{1, 0});
}

TEST_CASE("degenerate enumerations") {
  CHECK(lattice_points(Polyhedron::empty(2)).empty());
  Polyhedron seg = Polyhedron::from_vrep(1, {Vec{Rat(0)}, Vec{Rat(67)}});
  CHECK(lattice_points(seg).size() == 68);
  // Non-integral isolated point.
  Polyhedron p = Polyhedron::point(v2r(Rat(1, 2), Rat(0)));
  CHECK(lattice_points(p).empty());
  CHECK_THROWS_WITH(lattice_points(Polyhedron::from_vrep(1, {Vec{Rat(0)}}, {Vec{Rat(1)}})),
                    "unbounded enumeration");
}

TEST_CASE("matches brute force on random polytopes") {
  Rng rng(5150);
  for (int iter = 0; iter < 40; ++iter) {
    std::size_t dim = 1 + iter % 3;
    std::vector<Vec> vs;
    std::size_t n = 1 + rand_int(rng, 0, 4);
    for (std::size_t i = 0; i < n; ++i) vs.push_back(rand_vec(rng, dim, -10, 10, 3));
    Polyhedron p = Polyhedron::from_vrep(dim, vs);
    CHECK(lattice_points(p) == lattice_points_bruteforce(p));
  }
}

TEST_CASE("parallel and serial kernels agree") {
  Polyhedron big = diamond().dilate(Rat(9));
  auto par = lattice_points(big);
  auto ser = lattice_points_serial(big);
  CHECK(par == ser);
  CHECK(par.size() == 181);  // 2*9*(9+1)+1 points in |x|+|y| <= 9
}
