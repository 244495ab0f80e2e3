#include "tvar/positivity.hpp"

#include <algorithm>
#include <stdexcept>

#include "tvar/lattice.hpp"
#include "tvar/parallel.hpp"

namespace tvar {

PiecewiseAffine DivisorialPolytope::psi_of(std::size_t p) const {
  return psi[p] ? *psi[p] : zero_pwa(box);
}

Rat DivisorialPolytope::psi_at(std::size_t p, const Vec& u) const {
  return psi[p] ? (*psi[p])(u) : Rat(0);
}

Rat DivisorialPolytope::deg_at(const Vec& u) const {
  Rat s;
  for (std::size_t p = 0; p < psi.size(); ++p) s += psi_at(p, u);
  return s;
}

ValidationReport check_divisorial(const DivisorialPolytope& dp) {
  ValidationReport rep;
  auto fail = [&](std::string s) {
    rep.ok = false;
    rep.violations.push_back(std::move(s));
  };
  if (dp.box.is_empty() || !dp.box.is_bounded()) {
    fail("box must be a nonempty polytope");
    return rep;
  }
  if (!dp.box.is_lattice_polytope()) fail("box is not a lattice polytope");
  if (dp.box.dim() != static_cast<int>(dp.box.rank())) fail("box is not full-dimensional");
  if (dp.psi.size() != dp.base.points.size()) {
    fail("one function slot per point required");
    return rep;
  }

  std::vector<PiecewiseAffine> fs;
  for (std::size_t p = 0; p < dp.psi.size(); ++p) {
    PiecewiseAffine f = dp.psi_of(p);
    if (!f.defined_at(dp.box.rel_interior_point())) {
      fail("psi of " + dp.base.points[p].label + " is not defined on the box");
      return rep;
    }
    if (!f.is_continuous() || !f.is_concave())
      fail("psi of " + dp.base.points[p].label + " is not concave");
    for (const auto& [w, val] : f.graph_vertices())
      if (!is_integral(w) || !val.is_integer())
        fail("psi of " + dp.base.points[p].label + " has a non-integral graph vertex at " +
             vec_str(w));
    fs.push_back(std::move(f));
  }
  if (!rep.ok) return rep;

  // deg Psi >= 0 with zero set confined to the boundary of the box.
  PiecewiseAffine deg = pwa_sum(dp.box, fs);
  for (const auto& [w, val] : deg.graph_vertices())
    if (val.sign() < 0) fail("deg Psi is negative at " + vec_str(w));
  if (!rep.ok) return rep;
  for (std::size_t c = 0; c < deg.dom.cells.size(); ++c) {
    HRep zero_cut;
    zero_cut.eqs.push_back({deg.pieces[c].slope, -deg.pieces[c].c});
    Polyhedron z = deg.dom.cells[c].intersect(zero_cut);
    if (z.is_empty()) continue;
    bool on_boundary = false;
    for (const auto& hs : dp.box.hrep().ineqs) {
      bool tight = true;
      for (const auto& v : z.vertices())
        if (dot(hs.a, v) != hs.b) { tight = false; break; }
      if (tight) { on_boundary = true; break; }
    }
    if (!on_boundary) fail("deg Psi vanishes on the interior of the box");
  }

  // Degree-zero box vertices carry principal divisors.
  for (const auto& v : dp.box.vertices()) {
    if (dp.deg_at(v).sign() != 0) continue;
    if (dp.base.genus > 0) {
      rep.notes.push_back("genus > 0: principality at the degree-zero vertex " + vec_str(v) +
                          " is not decidable");
      continue;
    }
    for (std::size_t p = 0; p < dp.psi.size(); ++p)
      if (!dp.psi_at(p, v).is_integer())
        fail("Psi(" + vec_str(v) + ") is not principal: non-integral value at " +
             dp.base.points[p].label);
  }
  return rep;
}

Polyhedron box_of(const CartierSupportFunction& h, const FansyDivisor& fd) {
  HRep cut;
  for (std::size_t s = 0; s < fd.sigma.cells.size(); ++s)
    for (const auto& ray : fd.sigma.cells[s].rays())
      cut.ineqs.push_back({ray, dot(ray, to_vec(h.lin[s]))});
  return Polyhedron::from_hrep(fd.rank, cut);
}

std::vector<PiecewiseAffine> conjugates(const CartierSupportFunction& h, const FansyDivisor& fd,
                                        const Polyhedron& box) {
  std::vector<PiecewiseAffine> out(fd.base.points.size());
  box.hrep();
  parallel_for(out.size(), [&](std::size_t p) {
    out[p] = concave_conjugate(support_pwa(h, fd, static_cast<int>(p)), box);
  });
  return out;
}

DivisorialPolytope dual(const CartierSupportFunction& h, const FansyDivisor& fd) {
  Polyhedron box = box_of(h, fd);
  if (box.is_empty()) throw std::runtime_error("dual: empty box");
  DivisorialPolytope dp;
  dp.base = fd.base;
  dp.box = box;
  for (auto& f : conjugates(h, fd, box)) dp.psi.emplace_back(std::move(f));
  return dp;
}

Outcome<ToSupportResult> to_support(const DivisorialPolytope& dp) {
  using Fail = Outcome<ToSupportResult>;
  ValidationReport rep = check_divisorial(dp);
  if (!rep.ok) {
    std::string why = "invalid divisorial polytope";
    for (const auto& v : rep.violations) why += "; " + v;
    return Fail::fail(why);
  }
  std::size_t n = dp.box.rank();
  Polyhedron all = Polyhedron::full_space(n);

  // Conjugating the zero function on the box yields h^lin on the normal fan
  // of the box.
  PiecewiseAffine lin = concave_conjugate(zero_pwa(dp.box), all);
  PolyComplex sigma = lin.dom;
  CartierSupportFunction h;
  for (const auto& piece : lin.pieces) {
    if (!is_integral(piece.slope) || piece.c.sign() != 0)
      return Fail::fail("normal fan data is not integral");
    h.lin.push_back(to_ivec(piece.slope));
  }

  std::vector<std::optional<PolyComplex>> slices;
  for (std::size_t p = 0; p < dp.base.points.size(); ++p) {
    PiecewiseAffine hp = concave_conjugate(dp.psi_of(p), all);
    try {
      if (!recession_fan(hp.dom).same_cells(sigma))
        return Fail::fail("slice of " + dp.base.points[p].label +
                          " does not share the box normal fan");
    } catch (const std::exception& e) {
      return Fail::fail(e.what());
    }
    std::vector<SupportPiece> pieces;
    for (const auto& piece : hp.pieces) {
      if (!is_integral(piece.slope) || !piece.c.is_integer())
        return Fail::fail("conjugate of psi at " + dp.base.points[p].label +
                          " has non-integral affine data");
      pieces.push_back({to_ivec(piece.slope), piece.c.num()});
    }
    h.cells.push_back(std::move(pieces));
    slices.emplace_back(std::move(hp.dom));
  }

  FansyDivisor fd = make_fansy(dp.base, sigma, std::move(slices), {});

  // Marking: degree-zero box vertices name the contracted maximal cones;
  // their faces are marked exactly where deg S^sigma meets them.
  std::vector<std::vector<int>> marking;
  for (std::size_t s = 0; s < fd.sigma.cells.size(); ++s) {
    Vec u = to_vec(h.lin[s]);
    if (dp.deg_at(u).sign() != 0) continue;
    marking.push_back(fd.ray_indices(fd.sigma.cells[s]));
    std::vector<Polyhedron> parts;
    for (std::size_t p = 0; p < fd.base.points.size(); ++p) {
      int ci = fd.slice(p).cell_with_recession(fd.sigma.cells[s]);
      if (ci < 0) return Fail::fail("missing recession cell while marking");
      parts.push_back(fd.slice(p).cells[ci]);
    }
    Polyhedron degsum = minkowski_sum(parts);
    for (const auto& tau : fd.sigma.cells[s].faces()) {
      if (tau == fd.sigma.cells[s]) continue;
      if (!degsum.intersect(tau).is_empty()) marking.push_back(fd.ray_indices(tau));
    }
  }
  fd = make_fansy(fd.base, fd.sigma, fd.slices, std::move(marking));

  ValidationReport fdrep = validate(fd);
  if (!fdrep.ok) {
    std::string why = "reconstructed fansy divisor is invalid";
    for (const auto& v : fdrep.violations) why += "; " + v;
    return Fail::fail(why);
  }
  std::string herr = check_support(h, fd);
  if (!herr.empty()) return Fail::fail("reconstructed support function: " + herr);

  // Round trip with dual: same box, same conjugate graphs.
  Polyhedron back_box = box_of(h, fd);
  if (!(back_box == dp.box)) return Fail::fail("round trip failed: box mismatch");
  for (std::size_t p = 0; p < dp.base.points.size(); ++p) {
    PiecewiseAffine back = concave_conjugate(support_pwa(h, fd, static_cast<int>(p)), dp.box);
    if (back.graph_vertices() != dp.psi_of(p).graph_vertices())
      return Fail::fail("round trip failed at " + dp.base.points[p].label);
  }
  return Fail::success({std::move(fd), std::move(h)});
}

SectionSpace sections(const CartierSupportFunction& h, const FansyDivisor& fd, const IVec& u) {
  SectionSpace out;
  out.degree = u;
  Polyhedron box = box_of(h, fd);
  Vec uv = to_vec(u);
  out.in_box = !box.is_empty() && box.contains(uv);
  if (!out.in_box) {
    out.dimension = 0;
    out.exact = fd.base.genus == 0;
    return out;
  }
  auto hstars = conjugates(h, fd, box);
  for (std::size_t p = 0; p < hstars.size(); ++p) {
    Int f = hstars[p](uv).floor();
    out.floor_divisor[static_cast<int>(p)] = f;
    out.deg += f;
  }
  if (fd.base.genus == 0) {
    out.dimension = out.deg + 1 > 0 ? Int(out.deg + 1) : Int(0);
    out.exact = true;
  } else {
    out.dimension = -1;
    out.exact = false;
  }
  return out;
}

bool section_membership(const CartierSupportFunction& h, const FansyDivisor& fd,
                        const SemiInvariant& s) {
  Polyhedron box = box_of(h, fd);
  Vec uv = to_vec(s.degree);
  if (box.is_empty() || !box.contains(uv)) return false;
  auto hstars = conjugates(h, fd, box);
  for (std::size_t p = 0; p < hstars.size(); ++p) {
    Int ordf = 0;
    if (auto it = s.fdiv.find(static_cast<int>(p)); it != s.fdiv.end()) ordf = it->second;
    if (Rat(-ordf) > hstars[p](uv)) return false;
  }
  return true;
}

AmpleReport is_ample(const CartierSupportFunction& h, const FansyDivisor& fd) {
  AmpleReport rep;
  auto fail = [&](std::string s) { rep.diagnostics.push_back(std::move(s)); };

  std::string err = check_support(h, fd);
  if (!err.empty()) {
    fail(err);
    return rep;
  }
  for (int p = -1; p < static_cast<int>(fd.base.points.size()); ++p) {
    PiecewiseAffine f = support_pwa(h, fd, p);
    if (!f.is_strictly_concave())
      fail("h is not strictly concave on the slice of " +
           (p < 0 ? std::string("the generic fiber") : fd.base.points[p].label));
  }
  if (!rep.diagnostics.empty()) return rep;

  Polyhedron box = box_of(h, fd);
  if (box.is_empty() || box.dim() != static_cast<int>(fd.rank)) {
    fail("box is empty or degenerate");
    return rep;
  }
  // Maximal cones correspond bijectively to the vertices of the box.
  std::vector<Vec> us;
  for (const auto& u : h.lin) us.push_back(to_vec(u));
  std::vector<Vec> sorted_us = us;
  std::sort(sorted_us.begin(), sorted_us.end());
  sorted_us.erase(std::unique(sorted_us.begin(), sorted_us.end()), sorted_us.end());
  if (sorted_us != box.vertices()) {
    fail("linear parts do not match the box vertices");
    return rep;
  }

  DivisorialPolytope dp = dual(h, fd);
  ValidationReport dpr = check_divisorial(dp);
  if (!dpr.ok) {
    for (const auto& v : dpr.violations) fail("dual: " + v);
    return rep;
  }

  bool principality_open = false;
  for (std::size_t s = 0; s < fd.sigma.cells.size(); ++s) {
    bool zero = dp.deg_at(us[s]).sign() == 0;
    bool marked = fd.is_marked(fd.sigma.cells[s]);
    if (zero != marked)
      fail("degree-zero box vertices disagree with the marking at cone " + std::to_string(s));
    if (zero && fd.base.genus > 0) principality_open = true;
  }
  if (!rep.diagnostics.empty()) return rep;
  rep.status = principality_open ? AmpleStatus::AmpleModuloPrincipality : AmpleStatus::Ample;
  return rep;
}

NefReport nef_certificate(const CartierSupportFunction& h, const FansyDivisor& fd) {
  std::string err = check_support(h, fd);
  if (!err.empty()) return {false, err};
  for (int p = -1; p < static_cast<int>(fd.base.points.size()); ++p) {
    PiecewiseAffine f = support_pwa(h, fd, p);
    if (!f.is_concave())
      return {false, "h is not concave on the slice of " +
                         (p < 0 ? std::string("the generic fiber") : fd.base.points[p].label)};
  }
  Polyhedron box = box_of(h, fd);
  if (box.is_empty()) return {true, "empty box"};
  auto hstars = conjugates(h, fd, box);
  for (const auto& u : lattice_points(box)) {
    Rat deg;
    Vec uv = to_vec(u);
    for (const auto& f : hstars) deg += f(uv);
    if (deg.sign() < 0) return {false, "deg h* is negative at " + ivec_str(u)};
  }
  return {true, ""};
}

std::vector<BasepointCheck> BpfReport::basepoints() const {
  std::vector<BasepointCheck> out;
  for (const auto& c : checks)
    if (c.basepoint) out.push_back(c);
  return out;
}

Outcome<BpfReport> basepoint_free(const CartierSupportFunction& h, const FansyDivisor& fd) {
  using Fail = Outcome<BpfReport>;
  if (fd.base.genus != 0)
    return Fail::fail("basepoint_free requires genus 0; exact section spaces are unavailable");
  NefReport nef = nef_certificate(h, fd);
  if (!nef.pass) return Fail::fail("basepoint_free requires a nef certificate: " + nef.reason);

  Polyhedron box = box_of(h, fd);
  auto hstars = conjugates(h, fd, box);
  auto fps = fixed_points(fd);

  BpfReport rep;
  rep.checks.resize(fps.size());
  parallel_for(fps.size(), [&](std::size_t i) {
    const FixedPoint& x = fps[i];
    BasepointCheck chk;
    chk.at = x;
    if (x.kind == FixedPoint::Kind::Special) {
      const SupportPiece& piece = h.cells[x.point][x.cell];
      chk.u = piece.u;
      Vec uv = to_vec(piece.u);
      if (!box.contains(uv)) {
        chk.basepoint = true;
        chk.note = "degree outside the box";
      } else if (hstars[x.point](uv) != Rat(-piece.a)) {
        chk.basepoint = true;
        chk.note = "h* does not reach the local generator value";
      } else {
        Int t = -piece.a;
        for (std::size_t q = 0; q < hstars.size(); ++q) {
          if (static_cast<int>(q) == x.point) continue;
          t += hstars[q](uv).floor();
        }
        chk.obstruction = t;
        chk.basepoint = t < 0;
      }
    } else if (x.kind == FixedPoint::Kind::Generic) {
      chk.u = h.lin[x.cell];
      Vec uv = to_vec(chk.u);
      if (!box.contains(uv)) {
        chk.basepoint = true;
        chk.note = "degree outside the box";
      } else {
        Int t = 0;
        for (const auto& f : hstars) t += f(uv).floor();
        chk.obstruction = t;
        chk.basepoint = t < 0;
      }
    } else {
      // Contraction fixed points are never basepoints; the principal tuple
      // is verified anyway.
      chk.u = h.lin[x.cell];
      Vec uv = to_vec(chk.u);
      const Polyhedron& cone = fd.sigma.cells[x.cell];
      bool ok = box.contains(uv);
      Int asum = 0;
      for (std::size_t p = 0; p < fd.base.points.size() && ok; ++p) {
        int ci = fd.slice(p).cell_with_recession(cone);
        ok = ci >= 0 && hstars[p](uv) == Rat(-h.cells[p][ci].a);
        if (ok) asum += h.cells[p][ci].a;
      }
      ok = ok && asum == 0;
      chk.basepoint = false;
      chk.note = ok ? "principal tuple verified" : "anomaly: principal tuple not verified";
    }
    rep.checks[i] = std::move(chk);
  });
  rep.free = true;
  for (const auto& c : rep.checks) rep.free &= !c.basepoint;
  return Fail::success(std::move(rep));
}

}  // namespace tvar
