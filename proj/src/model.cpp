#include "tvar/model.hpp"

#include <algorithm>
#include <stdexcept>

#include "tvar/linalg.hpp"

namespace tvar {

int CurveBase::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < points.size(); ++i)
    if (points[i].label == label) return static_cast<int>(i);
  return -1;
}

Int CurveBase::canonical_degree() const {
  Int s = 0;
  for (const auto& p : points) s += p.a;
  return s;
}

const PolyComplex& FansyDivisor::slice(std::size_t p) const {
  return slices[p] ? *slices[p] : sigma;
}

std::vector<int> FansyDivisor::ray_indices(const Polyhedron& cone) const {
  std::vector<int> out;
  for (const auto& r : cone.rays()) {
    auto it = std::find(sigma_rays.begin(), sigma_rays.end(), primitive_direction(r));
    if (it == sigma_rays.end()) throw std::invalid_argument("cone ray is not a ray of Sigma");
    out.push_back(static_cast<int>(it - sigma_rays.begin()));
  }
  std::sort(out.begin(), out.end());
  return out;
}

Polyhedron FansyDivisor::marked_cone(std::size_t i) const {
  std::vector<Vec> rays;
  for (int r : marking[i]) rays.push_back(sigma_rays[r]);
  return Polyhedron::from_vrep(rank, {zero_vec(rank)}, rays);
}

bool FansyDivisor::is_marked(const Polyhedron& cone) const {
  std::vector<int> idx = ray_indices(cone);
  for (const auto& m : marking)
    if (m == idx) return true;
  return false;
}

bool FansyDivisor::ray_is_marked(std::size_t ray_idx) const {
  std::vector<int> key{static_cast<int>(ray_idx)};
  for (const auto& m : marking)
    if (m == key) return true;
  return false;
}

std::vector<int> FansyDivisor::marked_maximal_cones() const {
  std::vector<int> out;
  for (std::size_t s = 0; s < sigma.cells.size(); ++s)
    if (is_marked(sigma.cells[s])) out.push_back(static_cast<int>(s));
  return out;
}

FansyDivisor make_fansy(CurveBase base, PolyComplex sigma,
                        std::vector<std::optional<PolyComplex>> slices,
                        std::vector<std::vector<int>> marking) {
  FansyDivisor fd;
  fd.rank = sigma.rank;
  fd.base = std::move(base);
  fd.sigma = std::move(sigma);
  if (slices.size() != fd.base.points.size())
    throw std::invalid_argument("make_fansy: one slice slot per base point required");
  fd.slices = std::move(slices);
  std::vector<Vec> rays;
  for (const auto& c : fd.sigma.cells)
    for (const auto& r : c.rays()) rays.push_back(r);
  std::sort(rays.begin(), rays.end());
  rays.erase(std::unique(rays.begin(), rays.end()), rays.end());
  fd.sigma_rays = std::move(rays);
  for (auto& m : marking) {
    std::sort(m.begin(), m.end());
    m.erase(std::unique(m.begin(), m.end()), m.end());
  }
  std::sort(marking.begin(), marking.end());
  marking.erase(std::unique(marking.begin(), marking.end()), marking.end());
  fd.marking = std::move(marking);
  return fd;
}

namespace {

// deg S^sigma: Minkowski sum of the recession-sigma cells over the stored
// points (the trivial slices contribute sigma itself, which is absorbed).
Outcome<Polyhedron> deg_of_cone(const FansyDivisor& fd, const Polyhedron& cone) {
  std::vector<Polyhedron> parts;
  for (std::size_t p = 0; p < fd.base.points.size(); ++p) {
    int ci = fd.slice(p).cell_with_recession(cone);
    if (ci < 0)
      return Outcome<Polyhedron>::fail("slice of " + fd.base.points[p].label +
                                       " has no cell with recession cone " + cone.str());
    parts.push_back(fd.slice(p).cells[ci]);
  }
  if (parts.empty()) return Outcome<Polyhedron>::success(cone);
  return Outcome<Polyhedron>::success(minkowski_sum(parts));
}

}  // namespace

ValidationReport validate(const FansyDivisor& fd) {
  ValidationReport rep;
  auto fail = [&](std::string s) {
    rep.ok = false;
    rep.violations.push_back(std::move(s));
  };

  if (fd.base.canonical_degree() != 2 * fd.base.genus - 2)
    fail("canonical coefficients sum to " + fd.base.canonical_degree().get_str() +
         ", expected 2g-2");
  for (std::size_t i = 0; i < fd.base.points.size(); ++i)
    for (std::size_t j = i + 1; j < fd.base.points.size(); ++j)
      if (fd.base.points[i].label == fd.base.points[j].label)
        fail("duplicate point label " + fd.base.points[i].label);

  std::string s = fd.sigma.check(true);
  if (!s.empty()) fail("recession fan: " + s);
  if (!fd.sigma.is_fan()) fail("recession data is not a fan");

  for (std::size_t p = 0; p < fd.base.points.size(); ++p) {
    if (!fd.slices[p]) continue;
    std::string err = fd.slices[p]->check(true);
    if (!err.empty()) {
      fail("slice of " + fd.base.points[p].label + ": " + err);
      continue;
    }
    try {
      if (!recession_fan(*fd.slices[p]).same_cells(fd.sigma))
        fail("slice of " + fd.base.points[p].label + " does not share the common recession fan");
    } catch (const std::exception& e) {
      fail("slice of " + fd.base.points[p].label + ": " + e.what());
    }
  }
  if (!rep.ok) return rep;

  // Marking conditions.
  std::vector<Polyhedron> all_cones = fd.sigma.all_faces();
  for (std::size_t i = 0; i < fd.marking.size(); ++i) {
    Polyhedron mc = fd.marked_cone(i);
    bool found = false;
    for (const auto& c : all_cones)
      if (c == mc) { found = true; break; }
    if (!found) fail("marked cone " + mc.str() + " is not a cone of Sigma");
  }
  if (!rep.ok) return rep;

  // (1) upward closure along faces.
  for (const auto& big : all_cones) {
    for (const auto& small : all_cones) {
      if (small == big || !small.is_face_of(big)) continue;
      if (fd.is_marked(small) && !fd.is_marked(big))
        fail("marking violates condition (1): face " + small.str() + " marked but " +
             big.str() + " is not");
    }
  }

  // (2) and (3) for full-dimensional marked cones.
  for (int s_idx : fd.marked_maximal_cones()) {
    const Polyhedron& cone = fd.sigma.cells[s_idx];
    Outcome<Polyhedron> deg = deg_of_cone(fd, cone);
    if (!deg.ok()) {
      fail(deg.error);
      continue;
    }
    if (!cone.contains(*deg) || *deg == cone)
      fail("marking violates condition (2): deg S^sigma is not a proper subset of " + cone.str());
    for (const auto& tau : cone.faces()) {
      if (tau == cone) continue;
      bool meets = !deg->intersect(tau).is_empty();
      if (fd.is_marked(tau) != meets)
        fail("marking violates condition (3) at face " + tau.str() + " of " + cone.str());
    }
  }

  if (fd.base.genus > 0 && !fd.marking.empty())
    rep.notes.push_back(
        "genus > 0: the additional marking condition for higher genus is not checked");
  return rep;
}

std::string FixedPoint::describe(const FansyDivisor& fd) const {
  switch (kind) {
    case Kind::Special:
      return "(" + fd.base.points[point].label + ", cell " + std::to_string(cell) + ")";
    case Kind::Generic:
      return "(generic fiber, cone " + std::to_string(cell) + ")";
    case Kind::Contraction:
      return "(contraction, cone " + std::to_string(cell) + ")";
  }
  return "?";
}

std::vector<FixedPoint> fixed_points(const FansyDivisor& fd) {
  std::vector<FixedPoint> out;
  for (std::size_t p = 0; p < fd.base.points.size(); ++p) {
    const PolyComplex& sl = fd.slice(p);
    for (std::size_t c = 0; c < sl.cells.size(); ++c) {
      if (fd.is_marked(sl.cells[c].recession())) continue;
      out.push_back({FixedPoint::Kind::Special, static_cast<int>(p), static_cast<int>(c)});
    }
  }
  for (std::size_t s = 0; s < fd.sigma.cells.size(); ++s) {
    if (fd.is_marked(fd.sigma.cells[s])) continue;
    out.push_back({FixedPoint::Kind::Generic, -1, static_cast<int>(s)});
  }
  for (int s : fd.marked_maximal_cones())
    out.push_back({FixedPoint::Kind::Contraction, -1, s});
  return out;
}

WeilDivisor weil_add(const WeilDivisor& a, const WeilDivisor& b) {
  WeilDivisor out = a;
  for (const auto& [k, v] : b.vertical) out.vertical[k] += v;
  for (const auto& [k, v] : b.horizontal) out.horizontal[k] += v;
  std::erase_if(out.vertical, [](const auto& kv) { return kv.second.sign() == 0; });
  std::erase_if(out.horizontal, [](const auto& kv) { return kv.second.sign() == 0; });
  return out;
}

WeilDivisor weil_scale(const Rat& c, const WeilDivisor& d) {
  WeilDivisor out;
  if (c.sign() == 0) return out;
  for (const auto& [k, v] : d.vertical) out.vertical[k] = c * v;
  for (const auto& [k, v] : d.horizontal) out.horizontal[k] = c * v;
  return out;
}

bool weil_eq(const WeilDivisor& a, const WeilDivisor& b) {
  return a.vertical == b.vertical && a.horizontal == b.horizontal;
}

std::string weil_str(const WeilDivisor& d, const FansyDivisor& fd) {
  std::string s;
  for (const auto& [k, v] : d.vertical)
    s += (s.empty() ? "" : " + ") + v.str() + "*D(" + fd.base.points[k.first].label + "," +
         vec_str(k.second) + ")";
  for (const auto& [k, v] : d.horizontal)
    s += (s.empty() ? "" : " + ") + v.str() + "*D(" + vec_str(k) + ")";
  return s.empty() ? "0" : s;
}

WeilDivisor principal_divisor(const SemiInvariant& s, const FansyDivisor& fd) {
  for (const auto& [p, _] : s.fdiv)
    if (p < 0 || p >= static_cast<int>(fd.base.points.size()))
      throw std::invalid_argument("principal_divisor: support outside the stored point set");
  WeilDivisor out;
  Vec u = to_vec(s.degree);
  for (std::size_t r = 0; r < fd.sigma_rays.size(); ++r) {
    if (fd.ray_is_marked(r)) continue;
    Rat c = dot(fd.sigma_rays[r], u);
    if (c.sign() != 0) out.horizontal[fd.sigma_rays[r]] = c;
  }
  for (std::size_t p = 0; p < fd.base.points.size(); ++p) {
    Int ordf = 0;
    if (auto it = s.fdiv.find(static_cast<int>(p)); it != s.fdiv.end()) ordf = it->second;
    for (const auto& v : fd.slice(p).vertex_set()) {
      auto [mu, w] = primitive_multiple(v);
      Rat c = Rat(mu) * (dot(u, v) + Rat(ordf));
      if (c.sign() != 0) out.vertical[{static_cast<int>(p), v}] = c;
    }
  }
  return out;
}

PiecewiseAffine support_pwa(const CartierSupportFunction& h, const FansyDivisor& fd, int point) {
  PiecewiseAffine f;
  if (point < 0) {
    f.dom = fd.sigma;
    for (std::size_t s = 0; s < fd.sigma.cells.size(); ++s)
      f.pieces.push_back({to_vec(h.lin[s]), Rat(0)});
    return f;
  }
  f.dom = fd.slice(point);
  for (const auto& piece : h.cells[point]) f.pieces.push_back({to_vec(piece.u), Rat(piece.a)});
  return f;
}

Rat hlin_on_ray(const CartierSupportFunction& h, const FansyDivisor& fd, const Vec& ray) {
  for (std::size_t s = 0; s < fd.sigma.cells.size(); ++s)
    if (fd.sigma.cells[s].contains(ray)) return dot(ray, to_vec(h.lin[s]));
  throw std::invalid_argument("hlin_on_ray: ray outside the support of Sigma");
}

std::string check_support(const CartierSupportFunction& h, const FansyDivisor& fd) {
  if (h.cells.size() != fd.base.points.size() || h.lin.size() != fd.sigma.cells.size())
    return "support function shape does not match the fansy divisor";
  for (std::size_t p = 0; p < fd.base.points.size(); ++p)
    if (h.cells[p].size() != fd.slice(p).cells.size())
      return "support function of " + fd.base.points[p].label + " has wrong number of pieces";

  // h^lin must be a consistent piecewise linear function on Sigma.
  for (const auto& ray : fd.sigma_rays) {
    std::optional<Rat> val;
    for (std::size_t s = 0; s < fd.sigma.cells.size(); ++s) {
      if (!fd.sigma.cells[s].contains(ray)) continue;
      Rat v = dot(ray, to_vec(h.lin[s]));
      if (val && *val != v) return "h^lin is not well-defined on ray " + vec_str(ray);
      val = v;
    }
  }

  for (std::size_t p = 0; p < fd.base.points.size(); ++p) {
    PiecewiseAffine f = support_pwa(h, fd, static_cast<int>(p));
    if (!f.is_continuous())
      return "support function of " + fd.base.points[p].label + " is not continuous";
    // The linear part of every piece agrees with h^lin on its recession rays.
    for (std::size_t c = 0; c < f.dom.cells.size(); ++c)
      for (const auto& r : f.dom.cells[c].rays())
        if (dot(r, f.pieces[c].slope) != hlin_on_ray(h, fd, r))
          return "support function of " + fd.base.points[p].label +
                 " deviates from h^lin on ray " + vec_str(r);
  }

  // Contraction fixed points: one affine function with a principal tuple.
  for (int s : fd.marked_maximal_cones()) {
    const Polyhedron& cone = fd.sigma.cells[s];
    Int asum = 0;
    for (std::size_t p = 0; p < fd.base.points.size(); ++p) {
      int ci = fd.slice(p).cell_with_recession(cone);
      if (ci < 0) return "no cell with recession cone " + cone.str();
      const SupportPiece& piece = h.cells[p][ci];
      if (piece.u != h.lin[s])
        return "marked cone " + cone.str() + ": slice of " + fd.base.points[p].label +
               " does not share the linear part";
      asum += piece.a;
    }
    if (fd.base.genus == 0 && asum != 0)
      return "marked cone " + cone.str() + ": local generator tuple has degree " +
             asum.get_str() + ", not principal";
  }
  return "";
}

WeilDivisor support_to_weil(const CartierSupportFunction& h, const FansyDivisor& fd) {
  WeilDivisor out;
  for (std::size_t r = 0; r < fd.sigma_rays.size(); ++r) {
    if (fd.ray_is_marked(r)) continue;
    Rat c = -hlin_on_ray(h, fd, fd.sigma_rays[r]);
    if (c.sign() != 0) out.horizontal[fd.sigma_rays[r]] = c;
  }
  for (std::size_t p = 0; p < fd.base.points.size(); ++p) {
    PiecewiseAffine f = support_pwa(h, fd, static_cast<int>(p));
    for (const auto& v : fd.slice(p).vertex_set()) {
      auto [mu, w] = primitive_multiple(v);
      Rat c = -Rat(mu) * f(v);
      if (c.sign() != 0) out.vertical[{static_cast<int>(p), v}] = c;
    }
  }
  return out;
}

Outcome<CartierSupportFunction> weil_to_support(const WeilDivisor& d, const FansyDivisor& fd) {
  using Fail = Outcome<CartierSupportFunction>;
  std::size_t n = fd.rank;
  std::size_t npts = fd.base.points.size();

  // Unknown layout: per point and slice cell an affine piece (u, a), then
  // per maximal cone of sigma the linear part u_sigma.
  std::vector<std::vector<std::size_t>> cell_var(npts);
  std::size_t nvars = 0;
  for (std::size_t p = 0; p < npts; ++p) {
    cell_var[p].resize(fd.slice(p).cells.size());
    for (std::size_t c = 0; c < cell_var[p].size(); ++c) {
      cell_var[p][c] = nvars;
      nvars += n + 1;
    }
  }
  std::vector<std::size_t> lin_var(fd.sigma.cells.size());
  for (std::size_t s = 0; s < lin_var.size(); ++s) {
    lin_var[s] = nvars;
    nvars += n;
  }

  Mat rows;
  Vec rhs;
  std::vector<std::string> what;
  auto row = [&](std::string w) -> Vec& {
    rows.push_back(zero_vec(nvars));
    rhs.push_back(Rat(0));
    what.push_back(std::move(w));
    return rows.back();
  };

  auto vertical_coeff = [&](int p, const Vec& v) {
    auto it = d.vertical.find({p, v});
    return it == d.vertical.end() ? Rat(0) : it->second;
  };

  for (std::size_t p = 0; p < npts; ++p) {
    const PolyComplex& sl = fd.slice(p);
    for (std::size_t c = 0; c < sl.cells.size(); ++c) {
      std::size_t base = cell_var[p][c];
      for (const auto& v : sl.cells[c].vertices()) {
        auto [mu, w] = primitive_multiple(v);
        Vec& r = row("coefficient at D_(" + fd.base.points[p].label + "," + vec_str(v) + ")");
        for (std::size_t i = 0; i < n; ++i) r[base + i] = v[i];
        r[base + n] = Rat(1);
        rhs.back() = -vertical_coeff(static_cast<int>(p), v) / Rat(mu);
      }
      // Linear part of the piece matches h^lin on the recession rays.
      for (const auto& ray : sl.cells[c].rays()) {
        int s = -1;
        for (std::size_t k = 0; k < fd.sigma.cells.size(); ++k)
          if (fd.sigma.cells[k].contains(ray)) { s = static_cast<int>(k); break; }
        if (s < 0) return Fail::fail("not Cartier: slice ray " + vec_str(ray) + " outside Sigma");
        Vec& r = row("linear part on ray " + vec_str(ray));
        for (std::size_t i = 0; i < n; ++i) {
          r[cell_var[p][c] + i] += ray[i];
          r[lin_var[s] + i] -= ray[i];
        }
      }
      // Continuity with the other cells along shared unbounded faces.
      for (std::size_t c2 = c + 1; c2 < sl.cells.size(); ++c2) {
        Polyhedron f = sl.cells[c].intersect(sl.cells[c2]);
        if (f.is_empty()) continue;
        for (const auto& ray : f.rays()) {
          Vec& r = row("continuity of " + fd.base.points[p].label + " across ray " + vec_str(ray));
          for (std::size_t i = 0; i < n; ++i) {
            r[cell_var[p][c] + i] += ray[i];
            r[cell_var[p][c2] + i] -= ray[i];
          }
        }
      }
    }
  }

  // h^lin well-defined: maximal cones sharing a ray agree on it.
  for (const auto& ray : fd.sigma_rays) {
    int first = -1;
    for (std::size_t s = 0; s < fd.sigma.cells.size(); ++s) {
      if (!fd.sigma.cells[s].contains(ray)) continue;
      if (first < 0) {
        first = static_cast<int>(s);
        continue;
      }
      Vec& r = row("h^lin consistency on ray " + vec_str(ray));
      for (std::size_t i = 0; i < n; ++i) {
        r[lin_var[first] + i] += ray[i];
        r[lin_var[s] + i] -= ray[i];
      }
    }
  }

  // Unmarked rays carry horizontal divisors.
  for (std::size_t ri = 0; ri < fd.sigma_rays.size(); ++ri) {
    if (fd.ray_is_marked(ri)) continue;
    const Vec& ray = fd.sigma_rays[ri];
    int s = -1;
    for (std::size_t k = 0; k < fd.sigma.cells.size(); ++k)
      if (fd.sigma.cells[k].contains(ray)) { s = static_cast<int>(k); break; }
    Vec& r = row("coefficient at D_rho, rho=" + vec_str(ray));
    for (std::size_t i = 0; i < n; ++i) r[lin_var[s] + i] = ray[i];
    auto it = d.horizontal.find(ray);
    rhs.back() = it == d.horizontal.end() ? Rat(0) : -it->second;
  }

  // Marked maximal cones: shared linear part and a principal tuple.
  for (int s : fd.marked_maximal_cones()) {
    const Polyhedron& cone = fd.sigma.cells[s];
    std::vector<int> cells_of(npts);
    for (std::size_t p = 0; p < npts; ++p) {
      cells_of[p] = fd.slice(p).cell_with_recession(cone);
      if (cells_of[p] < 0)
        return Fail::fail("not Cartier: no cell with recession cone " + cone.str());
      for (std::size_t i = 0; i < n; ++i) {
        Vec& r = row("shared degree on marked cone " + cone.str());
        r[cell_var[p][cells_of[p]] + i] = Rat(1);
        r[lin_var[s] + i] = Rat(-1);
      }
    }
    if (fd.base.genus == 0) {
      Vec& r = row("principal tuple on marked cone " + cone.str());
      for (std::size_t p = 0; p < npts; ++p) r[cell_var[p][cells_of[p]] + n] = Rat(1);
    }
  }

  SolveResult sol = solve_linear(rows, rhs);
  if (sol.status == SolveStatus::Inconsistent)
    return Fail::fail("not Cartier: inconsistent condition \"" + what[sol.witness_row] + "\"");
  if (sol.status == SolveStatus::Underdetermined)
    return Fail::fail("not Cartier: support function underdetermined by the coefficients");

  CartierSupportFunction h;
  h.cells.resize(npts);
  for (std::size_t p = 0; p < npts; ++p) {
    for (std::size_t c = 0; c < cell_var[p].size(); ++c) {
      Vec u(sol.x.begin() + cell_var[p][c], sol.x.begin() + cell_var[p][c] + n);
      Rat a = sol.x[cell_var[p][c] + n];
      if (!is_integral(u) || !a.is_integer())
        return Fail::fail("not Cartier: non-integral affine data " + vec_str(u) + ", " + a.str() +
                          " on cell " + std::to_string(c) + " of " + fd.base.points[p].label);
      h.cells[p].push_back({to_ivec(u), a.num()});
    }
  }
  for (std::size_t s = 0; s < lin_var.size(); ++s) {
    Vec u(sol.x.begin() + lin_var[s], sol.x.begin() + lin_var[s] + n);
    if (!is_integral(u))
      return Fail::fail("not Cartier: non-integral linear part " + vec_str(u));
    h.lin.push_back(to_ivec(u));
  }

  std::string err = check_support(h, fd);
  if (!err.empty()) return Fail::fail("not Cartier: " + err);
  if (fd.base.genus > 0 && !fd.marked_maximal_cones().empty()) {
    // Principality of the marked tuple is not decidable here; recorded by
    // the caller via validate()'s note. The affine data is still returned.
  }
  if (!weil_eq(support_to_weil(h, fd), d))
    return Fail::fail("not Cartier: coefficients do not round-trip");
  return Fail::success(std::move(h));
}

CartierSupportFunction support_multiple(const CartierSupportFunction& h, long m) {
  if (m <= 0) throw std::invalid_argument("support_multiple: m must be positive");
  CartierSupportFunction out = h;
  for (auto& pcs : out.cells)
    for (auto& piece : pcs) {
      for (auto& x : piece.u) x *= m;
      piece.a *= m;
    }
  for (auto& u : out.lin)
    for (auto& x : u) x *= m;
  return out;
}

WeilDivisor canonical_weil(const FansyDivisor& fd) {
  WeilDivisor out;
  for (std::size_t r = 0; r < fd.sigma_rays.size(); ++r) {
    if (fd.ray_is_marked(r)) continue;
    out.horizontal[fd.sigma_rays[r]] = Rat(-1);
  }
  for (std::size_t p = 0; p < fd.base.points.size(); ++p) {
    Int b = fd.base.points[p].a + 1;
    for (const auto& v : fd.slice(p).vertex_set()) {
      auto [mu, w] = primitive_multiple(v);
      Rat c = Rat(Int(mu * b - 1));
      if (c.sign() != 0) out.vertical[{static_cast<int>(p), v}] = c;
    }
  }
  return out;
}

Outcome<GorensteinCertificate> is_gorenstein(const FansyDivisor& fd) {
  Outcome<CartierSupportFunction> k = weil_to_support(canonical_weil(fd), fd);
  if (!k.ok())
    return Outcome<GorensteinCertificate>::fail("canonical divisor is " + k.error);
  GorensteinCertificate cert;
  cert.canonical_support = *k;
  for (const auto& x : fixed_points(fd)) {
    if (x.kind == FixedPoint::Kind::Contraction) continue;
    const Polyhedron& cell = x.kind == FixedPoint::Kind::Special
                                 ? fd.slice(x.point).cells[x.cell]
                                 : fd.sigma.cells[x.cell];
    Outcome<GorensteinData> g = gorenstein_generator(local_cone_of_cell(cell));
    if (!g.ok())
      return Outcome<GorensteinCertificate>::fail("fixed point " + x.describe(fd) + ": " +
                                                  g.error);
    cert.generators.emplace_back(x, *g);
  }
  return Outcome<GorensteinCertificate>::success(std::move(cert));
}

}  // namespace tvar
