#include "tvar/complex.hpp"

#include <algorithm>
#include <stdexcept>

namespace tvar {

std::string PolyComplex::check(bool full_support) const {
  if (cells.empty()) return "complex has no cells";
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (cells[i].is_empty()) return "cell " + std::to_string(i) + " is empty";
    if (cells[i].rank() != rank) return "cell " + std::to_string(i) + " has wrong rank";
    if (full_support && cells[i].dim() != static_cast<int>(rank))
      return "cell " + std::to_string(i) + " is not full-dimensional";
  }
  for (std::size_t i = 0; i < cells.size(); ++i) {
    for (std::size_t j = i + 1; j < cells.size(); ++j) {
      if (cells[i] == cells[j]) return "duplicate cells " + std::to_string(i) + "," + std::to_string(j);
      Polyhedron f = cells[i].intersect(cells[j]);
      if (f.is_empty()) continue;
      if (!f.is_face_of(cells[i]) || !f.is_face_of(cells[j]))
        return "cells " + std::to_string(i) + "," + std::to_string(j) +
               " do not intersect in a common face";
    }
  }
  if (full_support) {
    // A complex of full-dimensional cells covers the whole space iff every
    // facet of every cell is also contained in a second cell.
    for (std::size_t i = 0; i < cells.size(); ++i) {
      for (const auto& f : cells[i].facets()) {
        bool shared = false;
        for (std::size_t j = 0; j < cells.size() && !shared; ++j)
          if (j != i && cells[j].contains(f)) shared = true;
        if (!shared)
          return "support is all of N_Q violated: unshared facet of cell " + std::to_string(i);
      }
    }
  }
  return "";
}

bool PolyComplex::is_fan() const {
  for (const auto& c : cells)
    if (!c.is_cone()) return false;
  return check(false).empty();
}

std::vector<Vec> PolyComplex::vertex_set() const {
  std::vector<Vec> out;
  for (const auto& c : cells) {
    if (!c.lineality().empty()) continue;  // no true vertices
    for (const auto& v : c.vertices()) out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Polyhedron> PolyComplex::all_faces() const {
  std::vector<Polyhedron> out;
  for (const auto& c : cells) {
    for (auto& f : c.faces()) {
      bool seen = false;
      for (const auto& o : out)
        if (o == f) { seen = true; break; }
      if (!seen) out.push_back(std::move(f));
    }
  }
  std::sort(out.begin(), out.end(), [](const Polyhedron& a, const Polyhedron& b) {
    if (a.dim() != b.dim()) return a.dim() > b.dim();
    return poly_less(a, b);
  });
  return out;
}

int PolyComplex::cell_containing(const Vec& v) const {
  for (std::size_t i = 0; i < cells.size(); ++i)
    if (cells[i].contains(v)) return static_cast<int>(i);
  return -1;
}

int PolyComplex::cell_with_recession(const Polyhedron& cone) const {
  for (std::size_t i = 0; i < cells.size(); ++i)
    if (cells[i].recession() == cone) return static_cast<int>(i);
  return -1;
}

bool PolyComplex::same_cells(const PolyComplex& other) const {
  if (rank != other.rank || cells.size() != other.cells.size()) return false;
  std::vector<Polyhedron> a = cells, b = other.cells;
  auto lt = [](const Polyhedron& x, const Polyhedron& y) { return poly_less(x, y); };
  std::sort(a.begin(), a.end(), lt);
  std::sort(b.begin(), b.end(), lt);
  return a == b;
}

PolyComplex recession_fan(const PolyComplex& c) {
  std::vector<Polyhedron> cones;
  for (const auto& cell : c.cells) {
    Polyhedron r = cell.recession();
    bool seen = false;
    for (const auto& o : cones)
      if (o == r) { seen = true; break; }
    if (!seen) cones.push_back(std::move(r));
  }
  // Keep maximal cones only.
  std::vector<Polyhedron> maximal;
  for (std::size_t i = 0; i < cones.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < cones.size() && !dominated; ++j)
      if (j != i && cones[j].contains(cones[i])) dominated = true;
    if (!dominated) maximal.push_back(cones[i]);
  }
  std::sort(maximal.begin(), maximal.end(), [](const Polyhedron& a, const Polyhedron& b) {
    return poly_less(a, b);
  });
  PolyComplex fan{c.rank, std::move(maximal)};
  for (std::size_t i = 0; i < fan.cells.size(); ++i) {
    for (std::size_t j = i + 1; j < fan.cells.size(); ++j) {
      Polyhedron f = fan.cells[i].intersect(fan.cells[j]);
      if (f.is_empty()) continue;
      if (!f.is_face_of(fan.cells[i]) || !f.is_face_of(fan.cells[j]))
        throw std::runtime_error("inconsistent tailfan");
    }
  }
  return fan;
}

}  // namespace tvar
