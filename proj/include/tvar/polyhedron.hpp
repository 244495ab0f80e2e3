#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "tvar/cone.hpp"
#include "tvar/vec.hpp"

namespace tvar {

struct Halfspace {
  Vec a;
  Rat b;  // a.x >= b
};

struct HRep {
  std::vector<Halfspace> ineqs;  // irredundant facets when derived
  std::vector<Halfspace> eqs;    // affine hull
};

// Convex polyhedron with the V-representation as primary data: irredundant
// vertices, primitive extreme rays, canonical lineality basis (all lex
// sorted, so == is structural equality). The H-representation is derived on
// demand and cached; it round-trips with the V-side by construction.
class Polyhedron {
public:
  Polyhedron() : rank_(0) {}

  static Polyhedron from_vrep(std::size_t rank, std::vector<Vec> verts,
                              std::vector<Vec> rays = {}, std::vector<Vec> lin = {});
  static Polyhedron from_hrep(std::size_t rank, const HRep& h);
  static Polyhedron empty(std::size_t rank);
  static Polyhedron full_space(std::size_t rank);
  static Polyhedron point(const Vec& v) { return from_vrep(v.size(), {v}); }

  std::size_t rank() const { return rank_; }
  bool is_empty() const { return vertices_.empty(); }
  const std::vector<Vec>& vertices() const { return vertices_; }
  const std::vector<Vec>& rays() const { return rays_; }
  const std::vector<Vec>& lineality() const { return lineality_; }

  const HRep& hrep() const;

  int dim() const;  // affine dimension, -1 for empty
  bool is_bounded() const { return rays_.empty() && lineality_.empty(); }
  bool is_pointed() const { return lineality_.empty(); }
  // A cone here is a pointed polyhedron whose single vertex is the origin.
  bool is_cone() const;
  bool is_lattice_polytope() const;
  bool contains(const Vec& x) const;
  bool contains(const Polyhedron& other) const;

  Polyhedron intersect(const Polyhedron& other) const;
  Polyhedron intersect(const HRep& extra) const;
  Polyhedron recession() const;
  Polyhedron translate(const Vec& t) const;
  Polyhedron dilate(const Rat& c) const;  // c > 0
  Polyhedron minkowski(const Polyhedron& other) const;

  std::vector<Polyhedron> facets() const;
  // All nonempty faces, this polyhedron included, deduped, dims descending.
  std::vector<Polyhedron> faces() const;
  bool is_face_of(const Polyhedron& big) const;

  // A point in the relative interior (vertex centroid plus all rays).
  Vec rel_interior_point() const;

  // Exact coordinate range over the polyhedron; unbounded directions were
  // excluded by the caller. (min, max) over vertices.
  std::pair<Rat, Rat> coord_range(std::size_t i) const;

  std::string str() const;

  friend bool operator==(const Polyhedron& a, const Polyhedron& b) {
    return a.rank_ == b.rank_ && a.vertices_ == b.vertices_ && a.rays_ == b.rays_ &&
           a.lineality_ == b.lineality_;
  }
  friend bool poly_less(const Polyhedron& a, const Polyhedron& b) {
    if (a.vertices_ != b.vertices_) return a.vertices_ < b.vertices_;
    if (a.rays_ != b.rays_) return a.rays_ < b.rays_;
    return a.lineality_ < b.lineality_;
  }

private:
  std::size_t rank_;
  std::vector<Vec> vertices_;
  std::vector<Vec> rays_;
  std::vector<Vec> lineality_;
  mutable std::shared_ptr<const HRep> hrep_;
};

Polyhedron minkowski_sum(const std::vector<Polyhedron>& ps);

}  // namespace tvar
