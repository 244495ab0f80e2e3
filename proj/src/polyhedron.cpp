#include "tvar/polyhedron.hpp"

#include <algorithm>
#include <stdexcept>

#include "tvar/linalg.hpp"

namespace tvar {
namespace {

// Homogenization: points v lift to (v,1), rays r to (r,0). The polyhedron is
// the t=1 slice of the lifted cone.
Vec lift(const Vec& v, const Rat& t) {
  Vec w(v);
  w.push_back(t);
  return w;
}

Vec unlift(const Vec& w) { return Vec(w.begin(), w.end() - 1); }

}  // namespace

Polyhedron Polyhedron::empty(std::size_t rank) {
  Polyhedron p;
  p.rank_ = rank;
  return p;
}

Polyhedron Polyhedron::full_space(std::size_t rank) {
  std::vector<Vec> lin;
  for (std::size_t i = 0; i < rank; ++i) {
    Vec e = zero_vec(rank);
    e[i] = Rat(1);
    lin.push_back(e);
  }
  return from_vrep(rank, {zero_vec(rank)}, {}, lin);
}

Polyhedron Polyhedron::from_vrep(std::size_t rank, std::vector<Vec> verts,
                                 std::vector<Vec> rays, std::vector<Vec> lin) {
  if (verts.empty()) return empty(rank);
  std::vector<Vec> gens;
  gens.reserve(verts.size() + rays.size());
  for (const auto& v : verts) gens.push_back(lift(v, Rat(1)));
  for (const auto& r : rays) gens.push_back(lift(r, Rat(0)));
  std::vector<Vec> liftlin;
  for (const auto& l : lin) liftlin.push_back(lift(l, Rat(0)));

  ConeVH c = cone_canonicalize(rank + 1, gens, liftlin);
  Polyhedron p;
  p.rank_ = rank;
  for (const auto& r : c.rays) {
    const Rat& t = r.back();
    if (t.sign() > 0) {
      Vec v = unlift(r);
      p.vertices_.push_back(vscale(Rat(1) / t, v));
    } else {
      p.rays_.push_back(primitive_direction(unlift(r)));
    }
  }
  for (const auto& l : c.lin) p.lineality_.push_back(unlift(l));
  p.lineality_ = canonical_span_basis(p.lineality_);
  std::sort(p.vertices_.begin(), p.vertices_.end());
  std::sort(p.rays_.begin(), p.rays_.end());
  if (p.vertices_.empty()) return empty(rank);
  return p;
}

Polyhedron Polyhedron::from_hrep(std::size_t rank, const HRep& h) {
  std::vector<Vec> ineqs, eqs;
  for (const auto& hs : h.ineqs) ineqs.push_back(lift(hs.a, -hs.b));
  Vec tpos = zero_vec(rank + 1);
  tpos[rank] = Rat(1);
  ineqs.push_back(tpos);
  for (const auto& hs : h.eqs) eqs.push_back(lift(hs.a, -hs.b));

  ConeVH c = cone_from_constraints(rank + 1, ineqs, eqs);
  Polyhedron p;
  p.rank_ = rank;
  for (const auto& r : c.rays) {
    const Rat& t = r.back();
    if (t.sign() > 0)
      p.vertices_.push_back(vscale(Rat(1) / t, unlift(r)));
    else
      p.rays_.push_back(primitive_direction(unlift(r)));
  }
  for (const auto& l : c.lin) p.lineality_.push_back(unlift(l));
  p.lineality_ = canonical_span_basis(p.lineality_);
  std::sort(p.vertices_.begin(), p.vertices_.end());
  std::sort(p.rays_.begin(), p.rays_.end());
  if (p.vertices_.empty()) return empty(rank);
  return p;
}

const HRep& Polyhedron::hrep() const {
  if (hrep_) return *hrep_;
  auto h = std::make_shared<HRep>();
  if (is_empty()) {
    // Canonical infeasible system.
    h->eqs.push_back({zero_vec(rank_), Rat(1)});
  } else {
    std::vector<Vec> gens;
    for (const auto& v : vertices_) gens.push_back(lift(v, Rat(1)));
    for (const auto& r : rays_) gens.push_back(lift(r, Rat(0)));
    std::vector<Vec> liftlin;
    for (const auto& l : lineality_) liftlin.push_back(lift(l, Rat(0)));
    ConeHRep ch = cone_facets(rank_ + 1, gens, liftlin);
    for (const auto& n : ch.ineqs) {
      Vec a = unlift(n);
      if (is_zero(a)) continue;  // the trivial t >= 0 facet
      h->ineqs.push_back({a, -n.back()});
    }
    for (const auto& n : ch.eqs) {
      Vec a = unlift(n);
      if (is_zero(a)) continue;
      h->eqs.push_back({a, -n.back()});
    }
  }
  hrep_ = h;
  return *hrep_;
}

int Polyhedron::dim() const {
  if (is_empty()) return -1;
  Mat dirs;
  for (std::size_t i = 1; i < vertices_.size(); ++i) dirs.push_back(vsub(vertices_[i], vertices_[0]));
  for (const auto& r : rays_) dirs.push_back(r);
  for (const auto& l : lineality_) dirs.push_back(l);
  return mat_rank(dirs);
}

bool Polyhedron::is_cone() const {
  return lineality_.empty() && vertices_.size() == 1 && is_zero(vertices_[0]);
}

bool Polyhedron::is_lattice_polytope() const {
  if (!is_bounded()) return false;
  for (const auto& v : vertices_)
    if (!is_integral(v)) return false;
  return true;
}

bool Polyhedron::contains(const Vec& x) const {
  if (is_empty()) return false;
  const HRep& h = hrep();
  for (const auto& hs : h.ineqs)
    if (dot(hs.a, x) < hs.b) return false;
  for (const auto& hs : h.eqs)
    if (dot(hs.a, x) != hs.b) return false;
  return true;
}

bool Polyhedron::contains(const Polyhedron& other) const {
  if (other.is_empty()) return true;
  if (is_empty()) return false;
  const HRep& h = hrep();
  for (const auto& v : other.vertices_)
    if (!contains(v)) return false;
  auto dir_ok = [&](const Vec& r, bool both_signs) {
    for (const auto& hs : h.ineqs) {
      int s = dot(hs.a, r).sign();
      if (s < 0 || (both_signs && s != 0)) return false;
    }
    for (const auto& hs : h.eqs)
      if (dot(hs.a, r).sign() != 0) return false;
    return true;
  };
  for (const auto& r : other.rays_)
    if (!dir_ok(r, false)) return false;
  for (const auto& l : other.lineality_)
    if (!dir_ok(l, true)) return false;
  return true;
}

Polyhedron Polyhedron::intersect(const HRep& extra) const {
  HRep h = hrep();
  for (const auto& hs : extra.ineqs) h.ineqs.push_back(hs);
  for (const auto& hs : extra.eqs) h.eqs.push_back(hs);
  return from_hrep(rank_, h);
}

Polyhedron Polyhedron::intersect(const Polyhedron& other) const {
  return intersect(other.hrep());
}

Polyhedron Polyhedron::recession() const {
  if (is_empty()) return empty(rank_);
  return from_vrep(rank_, {zero_vec(rank_)}, rays_, lineality_);
}

Polyhedron Polyhedron::translate(const Vec& t) const {
  if (is_empty()) return *this;
  std::vector<Vec> vs;
  for (const auto& v : vertices_) vs.push_back(vadd(v, t));
  return from_vrep(rank_, vs, rays_, lineality_);
}

Polyhedron Polyhedron::dilate(const Rat& c) const {
  if (c.sign() <= 0) throw std::invalid_argument("dilate: factor must be positive");
  if (is_empty()) return *this;
  std::vector<Vec> vs;
  for (const auto& v : vertices_) vs.push_back(vscale(c, v));
  return from_vrep(rank_, vs, rays_, lineality_);
}

Polyhedron Polyhedron::minkowski(const Polyhedron& other) const {
  if (is_empty() || other.is_empty()) return empty(rank_);
  std::vector<Vec> vs;
  for (const auto& a : vertices_)
    for (const auto& b : other.vertices_) vs.push_back(vadd(a, b));
  std::vector<Vec> rs = rays_;
  rs.insert(rs.end(), other.rays_.begin(), other.rays_.end());
  std::vector<Vec> ls = lineality_;
  ls.insert(ls.end(), other.lineality_.begin(), other.lineality_.end());
  return from_vrep(rank_, vs, rs, ls);
}

std::vector<Polyhedron> Polyhedron::facets() const {
  std::vector<Polyhedron> out;
  if (is_empty()) return out;
  const HRep& h = hrep();
  for (const auto& hs : h.ineqs) {
    HRep cut;
    cut.eqs.push_back(hs);
    out.push_back(intersect(cut));
  }
  return out;
}

std::vector<Polyhedron> Polyhedron::faces() const {
  std::vector<Polyhedron> out;
  if (is_empty()) return out;
  std::vector<Polyhedron> frontier{*this};
  out.push_back(*this);
  while (!frontier.empty()) {
    std::vector<Polyhedron> next;
    for (const auto& f : frontier) {
      for (auto& g : f.facets()) {
        if (g.is_empty()) continue;
        bool seen = false;
        for (const auto& o : out)
          if (o == g) { seen = true; break; }
        if (!seen) {
          out.push_back(g);
          next.push_back(g);
        }
      }
    }
    frontier = std::move(next);
  }
  std::sort(out.begin(), out.end(), [](const Polyhedron& a, const Polyhedron& b) {
    if (a.dim() != b.dim()) return a.dim() > b.dim();
    return poly_less(a, b);
  });
  return out;
}

bool Polyhedron::is_face_of(const Polyhedron& big) const {
  if (is_empty()) return true;
  if (!big.contains(*this)) return false;
  const HRep& h = big.hrep();
  HRep tight;
  for (const auto& hs : h.ineqs) {
    bool all_tight = true;
    for (const auto& v : vertices_)
      if (dot(hs.a, v) != hs.b) { all_tight = false; break; }
    if (all_tight)
      for (const auto& r : rays_)
        if (dot(hs.a, r).sign() != 0) { all_tight = false; break; }
    if (all_tight)
      for (const auto& l : lineality_)
        if (dot(hs.a, l).sign() != 0) { all_tight = false; break; }
    if (all_tight) tight.eqs.push_back(hs);
  }
  return big.intersect(tight) == *this;
}

Vec Polyhedron::rel_interior_point() const {
  if (is_empty()) throw std::invalid_argument("rel_interior_point: empty polyhedron");
  Vec p = zero_vec(rank_);
  for (const auto& v : vertices_) p = vadd(p, v);
  p = vscale(Rat(1, static_cast<long>(vertices_.size())), p);
  for (const auto& r : rays_) p = vadd(p, r);
  return p;
}

std::pair<Rat, Rat> Polyhedron::coord_range(std::size_t i) const {
  Rat lo = vertices_[0][i], hi = vertices_[0][i];
  for (const auto& v : vertices_) {
    if (v[i] < lo) lo = v[i];
    if (v[i] > hi) hi = v[i];
  }
  return {lo, hi};
}

std::string Polyhedron::str() const {
  if (is_empty()) return "{}";
  std::string s = "conv{";
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (i) s += ",";
    s += vec_str(vertices_[i]);
  }
  s += "}";
  if (!rays_.empty()) {
    s += "+cone{";
    for (std::size_t i = 0; i < rays_.size(); ++i) {
      if (i) s += ",";
      s += vec_str(rays_[i]);
    }
    s += "}";
  }
  if (!lineality_.empty()) s += "+lin[" + std::to_string(lineality_.size()) + "]";
  return s;
}

Polyhedron minkowski_sum(const std::vector<Polyhedron>& ps) {
  if (ps.empty()) throw std::invalid_argument("minkowski_sum: empty input list");
  Polyhedron acc = ps[0];
  for (std::size_t i = 1; i < ps.size(); ++i) {
    if (ps[i].rank() != acc.rank())
      throw std::invalid_argument("minkowski_sum: mixed ranks");
    acc = acc.minkowski(ps[i]);
  }
  return acc;
}

}  // namespace tvar
