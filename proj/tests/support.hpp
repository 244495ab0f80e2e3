#pragma once

#include <functional>
#include <random>
#include <vector>

#include "tvar/lattice.hpp"
#include "tvar/linalg.hpp"
#include "tvar/model.hpp"
#include "tvar/polyhedron.hpp"
#include "tvar/pwa.hpp"

namespace tvar::testing {

using Rng = std::mt19937_64;

inline long rand_int(Rng& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

inline Rat rand_rat(Rng& rng, long lo, long hi, long max_den = 3) {
  long d = rand_int(rng, 1, max_den);
  return Rat(rand_int(rng, lo * d, hi * d), d);
}

inline Vec rand_vec(Rng& rng, std::size_t n, long lo, long hi, long max_den = 1) {
  Vec v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(rand_rat(rng, lo, hi, max_den));
  return v;
}

// Brute-force lattice point oracle: scan the integer bounding box, keep the
// points the H-representation accepts.
inline std::vector<IVec> lattice_points_bruteforce(const Polyhedron& p) {
  std::vector<IVec> out;
  if (p.is_empty()) return out;
  std::size_t n = p.rank();
  if (n == 0) return {IVec{}};
  std::vector<Int> lo(n), hi(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto [l, h] = p.coord_range(i);
    lo[i] = l.ceil();
    hi[i] = h.floor();
    if (lo[i] > hi[i]) return out;
  }
  IVec cur(n);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == n) {
      Vec v = to_vec(cur);
      if (p.contains(v)) out.push_back(cur);
      return;
    }
    for (Int c = lo[i]; c <= hi[i]; ++c) {
      cur[i] = c;
      rec(i + 1);
    }
  };
  rec(0);
  return out;
}

// Brute-force extreme rays of a pointed cone {x : a.x >= 0}: candidates from
// (dim-1)-subsets of constraints with a one-dimensional common kernel.
inline std::vector<Vec> extreme_rays_bruteforce(std::size_t dim, const std::vector<Vec>& ineqs) {
  std::vector<Vec> out;
  std::vector<std::size_t> idx(ineqs.size());
  std::vector<bool> pick(ineqs.size());
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t start, std::size_t left) {
    if (left == 0) {
      Mat rows;
      for (std::size_t i = 0; i < ineqs.size(); ++i)
        if (pick[i]) rows.push_back(ineqs[i]);
      Mat null = nullspace(rows, dim);
      if (null.size() != 1) return;
      for (Vec w : {null[0], vneg(null[0])}) {
        bool feas = true;
        Mat tight;
        for (const auto& a : ineqs) {
          int s = dot(a, w).sign();
          if (s < 0) { feas = false; break; }
          if (s == 0) tight.push_back(a);
        }
        if (!feas) continue;
        if (mat_rank(tight) != static_cast<int>(dim) - 1) continue;
        Vec prim = primitive_direction(w);
        bool seen = false;
        for (const auto& o : out)
          if (o == prim) { seen = true; break; }
        if (!seen) out.push_back(prim);
      }
      return;
    }
    if (start == ineqs.size()) return;
    pick[start] = true;
    rec(start + 1, left - 1);
    pick[start] = false;
    if (ineqs.size() - start > left) rec(start + 1, left);
  };
  if (dim >= 1 && ineqs.size() >= dim - 1) rec(0, dim - 1);
  return out;
}

inline Vec v2(long a, long b) { return Vec{Rat(a), Rat(b)}; }
inline Vec v2r(const Rat& a, const Rat& b) { return Vec{a, b}; }

// --- Example 1 geometry (the singular (K*)^2 threefold) ---

// Slice over P_0: central square conv{(+-1,+-1)} and four unbounded cells.
inline PolyComplex example1_c1() {
  Vec mm = v2(-1, -1), mp = v2(-1, 1), pm = v2(1, -1), pp = v2(1, 1);
  std::vector<Polyhedron> cells;
  cells.push_back(Polyhedron::from_vrep(2, {mm, mp, pm, pp}));
  cells.push_back(Polyhedron::from_vrep(2, {mm, mp}, {mm, mp}));  // left
  cells.push_back(Polyhedron::from_vrep(2, {pm, pp}, {pm, pp}));  // right
  cells.push_back(Polyhedron::from_vrep(2, {mp, pp}, {mp, pp}));  // top
  cells.push_back(Polyhedron::from_vrep(2, {mm, pm}, {mm, pm}));  // bottom
  return PolyComplex{2, cells};
}

// Slice with the single vertex at `apex` and the four diagonal cones.
inline PolyComplex example1_shifted_fan(const Vec& apex) {
  Vec mm = v2(-1, -1), mp = v2(-1, 1), pm = v2(1, -1), pp = v2(1, 1);
  std::vector<Polyhedron> cells;
  for (auto rays : {std::vector<Vec>{mp, pp}, std::vector<Vec>{pm, pp},
                    std::vector<Vec>{mm, pm}, std::vector<Vec>{mm, mp}})
    cells.push_back(Polyhedron::from_vrep(2, {apex}, rays));
  return PolyComplex{2, cells};
}

inline PolyComplex example1_sigma() { return example1_shifted_fan(v2(0, 0)); }

// h_{P_0} of the running example: pieces per cell of example1_c1().
inline PiecewiseAffine example1_h_p0() {
  PiecewiseAffine f;
  f.dom = example1_c1();
  f.pieces = {
      {v2(0, 0), Rat(-5)},   // square
      {v2(1, 0), Rat(-4)},   // left
      {v2(-1, 0), Rat(-4)},  // right
      {v2(0, -1), Rat(-4)},  // top
      {v2(0, 1), Rat(-4)},   // bottom
  };
  return f;
}

inline Polyhedron diamond() {
  return Polyhedron::from_vrep(2, {v2(1, 0), v2(-1, 0), v2(0, 1), v2(0, -1)});
}

inline IVec iv2(long a, long b) { return IVec{Int(a), Int(b)}; }

inline CurveBase example1_base() {
  CurveBase b;
  b.genus = 0;
  for (int i = 0; i < 7; ++i)
    b.points.push_back({"P" + std::to_string(i), i == 6 ? Int(-2) : Int(0)});
  return b;
}

// The fansy divisor of the running example: C_1 over P_0, the (1/2,1/2)
// shifted fan over P_1..P_3, the (-1/2,-1/2) one over P_4..P_6, no marking.
inline FansyDivisor example1_fansy() {
  std::vector<std::optional<PolyComplex>> slices;
  slices.emplace_back(example1_c1());
  for (int i = 1; i <= 3; ++i)
    slices.emplace_back(example1_shifted_fan(v2r(Rat(1, 2), Rat(1, 2))));
  for (int i = 4; i <= 6; ++i)
    slices.emplace_back(example1_shifted_fan(v2r(Rat(-1, 2), Rat(-1, 2))));
  return make_fansy(example1_base(), example1_sigma(), std::move(slices), {});
}

// The ample divisor H of the running example, as a support function. Cell
// order matches the builders: square,left,right,top,bottom over P_0 and
// N,E,S,W over the other points and the recession fan.
inline CartierSupportFunction example1_h() {
  CartierSupportFunction h;
  h.cells.resize(7);
  h.cells[0] = {{iv2(0, 0), -5}, {iv2(1, 0), -4}, {iv2(-1, 0), -4},
                {iv2(0, -1), -4}, {iv2(0, 1), -4}};
  for (int p = 1; p <= 3; ++p)
    h.cells[p] = {{iv2(0, -1), 1}, {iv2(-1, 0), 1}, {iv2(0, 1), 0}, {iv2(1, 0), 0}};
  for (int p = 4; p <= 6; ++p)
    h.cells[p] = {{iv2(0, -1), 0}, {iv2(-1, 0), 0}, {iv2(0, 1), 1}, {iv2(1, 0), 1}};
  h.lin = {iv2(0, -1), iv2(-1, 0), iv2(0, 1), iv2(1, 0)};
  return h;
}

// Rank-one complete fan {Q>=0, Q<=0} and helpers for K*-surface style data.
inline PolyComplex line_fan() {
  Polyhedron plus = Polyhedron::from_vrep(1, {Vec{Rat(0)}}, {Vec{Rat(1)}});
  Polyhedron minus = Polyhedron::from_vrep(1, {Vec{Rat(0)}}, {Vec{Rat(-1)}});
  return PolyComplex{1, {plus, minus}};
}

// Rank-one slice with cells (-inf,b_0],[b_0,b_1],...,[b_k,inf).
inline PolyComplex line_slice(const std::vector<Rat>& breaks) {
  std::vector<Polyhedron> cells;
  cells.push_back(Polyhedron::from_vrep(1, {Vec{breaks.front()}}, {Vec{Rat(-1)}}));
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i)
    cells.push_back(Polyhedron::from_vrep(1, {Vec{breaks[i]}, Vec{breaks[i + 1]}}));
  cells.push_back(Polyhedron::from_vrep(1, {Vec{breaks.back()}}, {Vec{Rat(1)}}));
  return PolyComplex{1, cells};
}

}  // namespace tvar::testing
