#include "tvar/realization.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

#include "tvar/lattice.hpp"
#include "tvar/parallel.hpp"

namespace tvar {

Rat RealizationPolytope::deg_at(const Vec& u) const {
  Rat s;
  for (const auto& f : psi) s += f(u);
  return s;
}

RealizationPolytope build_realization(const DivisorialPolytope& dp,
                                      const std::vector<std::string>& pset) {
  if (pset.size() < 2) throw std::invalid_argument("realization needs at least two points");
  RealizationPolytope rp;
  rp.box = dp.box;
  rp.mrank = dp.box.rank();
  rp.labels = pset;
  for (const auto& label : pset) {
    int p = dp.base.index_of(label);
    rp.psi.push_back(p >= 0 ? dp.psi_of(p) : zero_pwa(dp.box));
  }
  for (std::size_t p = 0; p < dp.base.points.size(); ++p) {
    if (!dp.psi[p]) continue;
    if (std::find(pset.begin(), pset.end(), dp.base.points[p].label) == pset.end())
      throw std::invalid_argument("point set omits the nontrivial point " +
                                  dp.base.points[p].label);
  }

  std::size_t n = rp.mrank, r = rp.r();
  auto lift = [&](const Vec& a, std::size_t xcoord, const Rat& xcoef) {
    Vec w = zero_vec(n + r);
    for (std::size_t i = 0; i < n; ++i) w[i] = a[i];
    if (xcoord < r) w[n + xcoord] = xcoef;
    return w;
  };
  for (const auto& hs : rp.box.hrep().ineqs) rp.hrep.ineqs.push_back({lift(hs.a, r, Rat(0)), hs.b});
  for (const auto& hs : rp.box.hrep().eqs) rp.hrep.eqs.push_back({lift(hs.a, r, Rat(0)), hs.b});
  Vec sum = zero_vec(n + r);
  for (std::size_t p = 0; p < r; ++p) sum[n + p] = Rat(1);
  rp.hrep.eqs.push_back({sum, Rat(0)});
  // x_P <= Psi_P(u), one inequality per affine piece of the concave Psi_P.
  for (std::size_t p = 0; p < r; ++p)
    for (const auto& piece : rp.psi[p].pieces)
      rp.hrep.ineqs.push_back({lift(piece.slope, p, Rat(-1)), -piece.c});
  return rp;
}

Fiber fiber(const RealizationPolytope& rp, const Vec& u) {
  if (!rp.box.contains(u)) throw std::invalid_argument("fiber: point outside the box");
  std::size_t r = rp.r();
  Fiber out;
  out.dilation = rp.deg_at(u);
  if (out.dilation.sign() < 0) {
    out.simplex = Polyhedron::empty(r);
    return out;
  }
  // Vertices: all coordinates at their bound except one, which absorbs the
  // rest of the zero sum.
  std::vector<Rat> caps;
  for (std::size_t p = 0; p < r; ++p) caps.push_back(rp.psi_at(p, u));
  std::vector<Vec> verts;
  for (std::size_t q = 0; q < r; ++q) {
    Vec x(caps);
    x[q] = caps[q] - out.dilation;
    verts.push_back(std::move(x));
  }
  out.simplex = Polyhedron::from_vrep(r, verts);
  return out;
}

namespace {

std::vector<Int> fiber_caps(const RealizationPolytope& rp, const IVec& u, bool interior) {
  Vec uv = to_vec(u);
  if (!rp.box.contains(uv)) throw std::invalid_argument("fiber: point outside the box");
  std::vector<Int> caps;
  for (std::size_t p = 0; p < rp.r(); ++p) {
    Rat v = rp.psi_at(p, uv);
    caps.push_back(interior ? Int(v.ceil() - 1) : v.floor());
  }
  return caps;
}

void enumerate_sum_zero(const std::vector<Int>& caps, std::vector<IVec>* all,
                        std::optional<IVec>* first) {
  std::size_t r = caps.size();
  std::vector<Int> suffix(r + 1, Int(0));  // sum of caps from position i on
  for (std::size_t i = r; i-- > 0;) suffix[i] = suffix[i + 1] + caps[i];
  IVec cur(r);
  std::function<bool(std::size_t, Int)> rec = [&](std::size_t i, Int need) -> bool {
    if (i + 1 == r) {
      if (need > caps[i]) return false;
      cur[i] = need;
      if (first) {
        *first = cur;
        return true;
      }
      all->push_back(cur);
      return false;
    }
    // c_i ranges over [need - suffix(i+1), caps[i]], lex ascending.
    Int lo = need - suffix[i + 1];
    for (Int c = lo; c <= caps[i]; ++c) {
      cur[i] = c;
      if (rec(i + 1, need - c)) return true;
    }
    return false;
  };
  if (r > 0) rec(0, Int(0));
}

}  // namespace

std::vector<IVec> fiber_lattice_points(const RealizationPolytope& rp, const IVec& u,
                                       bool interior) {
  std::vector<Int> caps = fiber_caps(rp, u, interior);
  std::vector<IVec> out;
  enumerate_sum_zero(caps, &out, nullptr);
  return out;
}

std::optional<IVec> fiber_lattice_point_first(const RealizationPolytope& rp, const IVec& u,
                                              bool interior) {
  std::vector<Int> caps = fiber_caps(rp, u, interior);
  std::optional<IVec> first;
  enumerate_sum_zero(caps, nullptr, &first);
  return first;
}

std::vector<FacePair> realization_faces(const RealizationPolytope& rp, std::size_t cap) {
  std::size_t r = rp.r();
  if (r >= 8 * sizeof(std::size_t) || (std::size_t{1} << r) > cap)
    throw std::runtime_error("face enumeration too large");

  int boxdim = rp.box.dim();
  std::vector<FacePair> out;
  // Identified degree-zero faces, keyed by the face itself; the first
  // (lex-smallest) I wins.
  std::vector<Polyhedron> collapsed_seen;

  std::vector<std::vector<int>> subsets;
  {
    // Lexicographic order on the index sequences: {}, {0}, {0,1}, ...
    std::vector<std::vector<int>> stack{{}};
    while (!stack.empty()) {
      std::vector<int> cur = stack.back();
      stack.pop_back();
      if (cur.size() < r) subsets.push_back(cur);
      int start = cur.empty() ? 0 : cur.back() + 1;
      for (int i = static_cast<int>(r) - 1; i >= start; --i) {
        std::vector<int> next = cur;
        next.push_back(i);
        if (next.size() <= r - 1) stack.push_back(std::move(next));
      }
    }
    std::sort(subsets.begin(), subsets.end());
  }

  for (const auto& I : subsets) {
    std::vector<PiecewiseAffine> fs;
    for (int p : I) fs.push_back(rp.psi[p]);
    PolyComplex ai = common_refinement(rp.box, fs);
    for (const auto& a : ai.all_faces()) {
      bool zero = rp.deg_at(a.rel_interior_point()).sign() == 0;
      if (zero) {
        bool seen = false;
        for (const auto& o : collapsed_seen)
          if (o == a) { seen = true; break; }
        if (seen) continue;
        collapsed_seen.push_back(a);
        out.push_back({I, a, a.dim(), true});
      } else {
        int d = a.dim() + static_cast<int>(r) - 1 - static_cast<int>(I.size());
        out.push_back({I, a, d, false});
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const FacePair& x, const FacePair& y) {
    if (x.dim != y.dim) return x.dim > y.dim;
    if (x.I != y.I) return x.I < y.I;
    return poly_less(x.A, y.A);
  });
  (void)boxdim;
  return out;
}

std::vector<FacePair> realization_facets(const RealizationPolytope& rp) {
  std::vector<FacePair> out;
  std::size_t r = rp.r();
  for (const auto& a : rp.box.facets()) {
    if (rp.deg_at(a.rel_interior_point()).sign() == 0) continue;
    out.push_back({{}, a, a.dim() + static_cast<int>(r) - 1, false});
  }
  for (std::size_t p = 0; p < r; ++p) {
    PolyComplex ap = common_refinement(rp.box, {rp.psi[p]});
    for (const auto& a : ap.cells) {
      if (rp.deg_at(a.rel_interior_point()).sign() == 0) continue;
      out.push_back({{static_cast<int>(p)}, a, a.dim() + static_cast<int>(r) - 2, false});
    }
  }
  return out;
}

namespace {

Int census(const RealizationPolytope& rp, bool interior, bool parallel) {
  std::vector<IVec> us = lattice_points(rp.box);
  std::vector<Int> counts(us.size());
  auto body = [&](std::size_t i) {
    counts[i] = Int(static_cast<long>(fiber_lattice_points(rp, us[i], interior).size()));
  };
  if (parallel)
    parallel_for(us.size(), body);
  else
    for (std::size_t i = 0; i < us.size(); ++i) body(i);
  Int total = 0;
  for (const auto& c : counts) total += c;
  return total;
}

}  // namespace

Int fiber_census(const RealizationPolytope& rp, bool interior) {
  return census(rp, interior, true);
}

Int fiber_census_serial(const RealizationPolytope& rp, bool interior) {
  return census(rp, interior, false);
}

}  // namespace tvar
