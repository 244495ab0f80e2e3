#include "doctest.h"
#include "support.hpp"
#include "tvar/cone.hpp"

using namespace tvar;
using namespace tvar::testing;

TEST_CASE("quadrant from constraints") {
  ConeVH c = cone_from_constraints(2, {v2(1, 0), v2(0, 1)});
  CHECK(c.lin.empty());
  REQUIRE(c.rays.size() == 2);
  CHECK(c.rays[0] == v2(0, 1));
  CHECK(c.rays[1] == v2(1, 0));
}

TEST_CASE("halfplane keeps lineality") {
  ConeVH c = cone_from_constraints(2, {v2(1, 0)});
  CHECK(c.lin.size() == 1);
  CHECK(c.lin[0] == v2(0, 1));
  REQUIRE(c.rays.size() == 1);
  CHECK(c.rays[0] == v2(1, 0));
}

TEST_CASE("equalities collapse to the origin") {
  ConeVH c = cone_from_constraints(2, {}, {v2(1, 0), v2(0, 1)});
  CHECK(c.rays.empty());
  CHECK(c.lin.empty());
}

TEST_CASE("redundant generators are removed") {
  ConeVH c = cone_canonicalize(2, {v2(1, 0), v2(1, 1), v2(0, 1), v2(2, 3)});
  REQUIRE(c.rays.size() == 2);
  CHECK(c.rays[0] == v2(0, 1));
  CHECK(c.rays[1] == v2(1, 0));
}

TEST_CASE("double description agrees with brute force on random cones") {
  Rng rng(20240811);
  int pointed_cases = 0;
  for (int iter = 0; iter < 120; ++iter) {
    std::size_t dim = 2 + iter % 2;
    std::size_t m = 2 + rand_int(rng, 0, 3);
    std::vector<Vec> ineqs;
    for (std::size_t i = 0; i < m; ++i) {
      Vec a = rand_vec(rng, dim, -4, 4);
      if (!is_zero(a)) ineqs.push_back(a);
    }
    if (ineqs.empty()) continue;
    ConeVH c = cone_from_constraints(dim, ineqs);
    // Lineality is the kernel of the constraint matrix.
    CHECK(c.lin == canonical_span_basis(nullspace(ineqs, dim)));
    if (!c.lin.empty()) continue;
    ++pointed_cases;
    std::vector<Vec> expect = extreme_rays_bruteforce(dim, ineqs);
    std::sort(expect.begin(), expect.end());
    CHECK(c.rays == expect);
  }
  CHECK(pointed_cases > 30);
}

TEST_CASE("facets of a generated cone") {
  ConeHRep h = cone_facets(2, {v2(1, 2), v2(2, 1)});
  REQUIRE(h.ineqs.size() == 2);
  CHECK(h.eqs.empty());
  // Normals evaluate nonnegative on the generators.
  for (const auto& n : h.ineqs) {
    CHECK(dot(n, v2(1, 2)).sign() >= 0);
    CHECK(dot(n, v2(2, 1)).sign() >= 0);
  }
}
