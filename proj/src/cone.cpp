#include "tvar/cone.hpp"

#include <algorithm>
#include <cstdint>

#include "tvar/linalg.hpp"

namespace tvar {
namespace {

struct RayRec {
  Vec v;
  std::vector<bool> tight;  // per processed constraint
};

bool subset_of(const std::vector<bool>& a, const std::vector<bool>& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] && !b[i]) return false;
  return true;
}

// p and n are adjacent iff no third ray is tight on every constraint that is
// tight on both. Valid because the maintained set is exactly the extreme
// rays of the current cone modulo its lineality.
bool adjacent(const std::vector<RayRec>& rays, std::size_t pi, std::size_t ni) {
  std::vector<bool> common(rays[pi].tight.size());
  for (std::size_t i = 0; i < common.size(); ++i)
    common[i] = rays[pi].tight[i] && rays[ni].tight[i];
  for (std::size_t k = 0; k < rays.size(); ++k) {
    if (k == pi || k == ni) continue;
    if (subset_of(common, rays[k].tight)) return false;
  }
  return true;
}

}  // namespace

ConeVH cone_from_constraints(std::size_t dim, const std::vector<Vec>& ineqs,
                             const std::vector<Vec>& eqs) {
  std::vector<Vec> cons;
  cons.reserve(ineqs.size() + 2 * eqs.size());
  for (const auto& e : eqs) {
    cons.push_back(e);
    cons.push_back(vneg(e));
  }
  for (const auto& a : ineqs) cons.push_back(a);

  std::vector<Vec> lin;
  for (std::size_t i = 0; i < dim; ++i) {
    Vec e = zero_vec(dim);
    e[i] = Rat(1);
    lin.push_back(e);
  }
  std::vector<RayRec> rays;

  for (std::size_t k = 0; k < cons.size(); ++k) {
    const Vec& a = cons[k];
    std::size_t li = lin.size();
    for (std::size_t i = 0; i < lin.size(); ++i)
      if (dot(a, lin[i]).sign() != 0) { li = i; break; }

    if (li < lin.size()) {
      // Split the lineality space along a.
      Vec l = lin[li];
      Rat al = dot(a, l);
      if (al.sign() < 0) { l = vneg(l); al = -al; }
      std::vector<Vec> newlin;
      for (std::size_t i = 0; i < lin.size(); ++i) {
        if (i == li) continue;
        Rat c = dot(a, lin[i]) / al;
        newlin.push_back(vsub(lin[i], vscale(c, l)));
      }
      for (auto& r : rays) {
        Rat c = dot(a, r.v) / al;
        r.v = vsub(r.v, vscale(c, l));
        r.tight.push_back(true);
      }
      RayRec nr;
      nr.v = l;
      nr.tight.assign(k, true);  // l was in the lineality of every previous step
      nr.tight.push_back(false);
      rays.push_back(std::move(nr));
      lin = std::move(newlin);
      continue;
    }

    std::vector<std::size_t> pos, zer, neg;
    std::vector<Rat> val(rays.size());
    for (std::size_t i = 0; i < rays.size(); ++i) {
      val[i] = dot(a, rays[i].v);
      int s = val[i].sign();
      if (s > 0) pos.push_back(i);
      else if (s == 0) zer.push_back(i);
      else neg.push_back(i);
    }
    if (neg.empty()) {
      for (std::size_t i = 0; i < rays.size(); ++i) rays[i].tight.push_back(val[i].sign() == 0);
      continue;
    }

    std::vector<RayRec> next;
    for (std::size_t i : pos) {
      RayRec r = rays[i];
      r.tight.push_back(false);
      next.push_back(std::move(r));
    }
    for (std::size_t i : zer) {
      RayRec r = rays[i];
      r.tight.push_back(true);
      next.push_back(std::move(r));
    }
    for (std::size_t pi : pos) {
      for (std::size_t ni : neg) {
        if (!adjacent(rays, pi, ni)) continue;
        Vec w = vadd(vscale(val[pi], rays[ni].v), vscale(-val[ni], rays[pi].v));
        w = primitive_direction(w);
        if (is_zero(w)) continue;
        bool dup = false;
        for (const auto& r : next)
          if (r.v == w) { dup = true; break; }
        if (dup) continue;
        RayRec nr;
        nr.v = w;
        nr.tight.resize(k + 1);
        for (std::size_t j = 0; j <= k; ++j) nr.tight[j] = dot(cons[j], w).sign() == 0;
        next.push_back(std::move(nr));
      }
    }
    rays = std::move(next);
  }

  ConeVH out;
  for (auto& r : rays) out.rays.push_back(primitive_direction(r.v));
  std::sort(out.rays.begin(), out.rays.end());
  out.rays.erase(std::unique(out.rays.begin(), out.rays.end()), out.rays.end());
  out.lin = canonical_span_basis(lin);
  return out;
}

ConeHRep cone_facets(std::size_t dim, const std::vector<Vec>& gens,
                     const std::vector<Vec>& lin) {
  ConeVH dual = cone_from_constraints(dim, gens, lin);
  return {dual.rays, dual.lin};
}

ConeVH cone_canonicalize(std::size_t dim, const std::vector<Vec>& gens,
                         const std::vector<Vec>& lin) {
  ConeHRep h = cone_facets(dim, gens, lin);
  return cone_from_constraints(dim, h.ineqs, h.eqs);
}

}  // namespace tvar
