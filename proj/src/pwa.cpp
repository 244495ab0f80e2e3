#include "tvar/pwa.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "tvar/linalg.hpp"

namespace tvar {

AffinePiece piece_add(const AffinePiece& a, const AffinePiece& b) {
  return {vadd(a.slope, b.slope), a.c + b.c};
}

Rat PiecewiseAffine::operator()(const Vec& u) const {
  int i = dom.cell_containing(u);
  if (i < 0) throw std::invalid_argument("PiecewiseAffine: point outside domain " + vec_str(u));
  return pieces[i](u);
}

bool PiecewiseAffine::is_continuous() const {
  for (std::size_t i = 0; i < dom.cells.size(); ++i) {
    for (std::size_t j = i + 1; j < dom.cells.size(); ++j) {
      Polyhedron f = dom.cells[i].intersect(dom.cells[j]);
      if (f.is_empty()) continue;
      for (const auto& v : f.vertices())
        if (pieces[i](v) != pieces[j](v)) return false;
      Vec ds = vsub(pieces[i].slope, pieces[j].slope);
      for (const auto& r : f.rays())
        if (dot(ds, r).sign() != 0) return false;
      for (const auto& l : f.lineality())
        if (dot(ds, l).sign() != 0) return false;
    }
  }
  return true;
}

bool PiecewiseAffine::is_concave() const {
  for (std::size_t i = 0; i < dom.cells.size(); ++i) {
    const Polyhedron& cell = dom.cells[i];
    for (std::size_t j = 0; j < pieces.size(); ++j) {
      if (j == i) continue;
      for (const auto& v : cell.vertices())
        if (pieces[j](v) < pieces[i](v)) return false;
      Vec ds = vsub(pieces[j].slope, pieces[i].slope);
      for (const auto& r : cell.rays())
        if (dot(ds, r).sign() < 0) return false;
      for (const auto& l : cell.lineality())
        if (dot(ds, l).sign() != 0) return false;
    }
  }
  return true;
}

bool PiecewiseAffine::is_strictly_concave() const {
  if (!is_concave()) return false;
  for (std::size_t i = 0; i < dom.cells.size(); ++i) {
    for (std::size_t j = i + 1; j < dom.cells.size(); ++j) {
      Polyhedron f = dom.cells[i].intersect(dom.cells[j]);
      if (f.is_empty()) continue;
      if (f.dim() == dom.cells[i].dim() - 1 && pieces[i] == pieces[j]) return false;
    }
  }
  return true;
}

std::vector<std::pair<Vec, Rat>> PiecewiseAffine::graph_vertices() const {
  std::vector<std::pair<Vec, Rat>> out;
  for (std::size_t i = 0; i < dom.cells.size(); ++i) {
    if (!dom.cells[i].lineality().empty()) continue;  // no true vertices
    for (const auto& v : dom.cells[i].vertices()) out.emplace_back(v, pieces[i](v));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  for (std::size_t i = 1; i < out.size(); ++i)
    if (out[i].first == out[i - 1].first)
      throw std::runtime_error("discontinuous piecewise affine data at " + vec_str(out[i].first));
  return out;
}

PiecewiseAffine zero_pwa(const Polyhedron& domain) {
  PiecewiseAffine f;
  f.dom = PolyComplex{domain.rank(), {domain}};
  f.pieces = {AffinePiece{zero_vec(domain.rank()), Rat(0)}};
  return f;
}

PiecewiseAffine min_envelope(const Polyhedron& domain, std::vector<AffinePiece> candidates) {
  if (domain.is_empty()) throw std::invalid_argument("min_envelope: empty domain");
  if (candidates.empty()) throw std::invalid_argument("min_envelope: no candidates");
  std::sort(candidates.begin(), candidates.end(), [](const AffinePiece& a, const AffinePiece& b) {
    if (a.slope != b.slope) return a.slope < b.slope;
    return a.c < b.c;
  });

  // Dedupe candidates that agree as functions on the affine hull of the
  // domain: compare values at a base point and along spanning directions.
  Vec base = domain.vertices()[0];
  Mat dirs;
  for (std::size_t i = 1; i < domain.vertices().size(); ++i)
    dirs.push_back(vsub(domain.vertices()[i], base));
  for (const auto& r : domain.rays()) dirs.push_back(r);
  for (const auto& l : domain.lineality()) dirs.push_back(l);
  Mat span = canonical_span_basis(dirs);

  std::vector<AffinePiece> kept;
  std::vector<std::vector<Rat>> keys;
  for (const auto& p : candidates) {
    std::vector<Rat> key{p(base)};
    for (const auto& d : span) key.push_back(dot(p.slope, d));
    bool dup = false;
    for (const auto& k : keys)
      if (k == key) { dup = true; break; }
    if (!dup) {
      keys.push_back(std::move(key));
      kept.push_back(p);
    }
  }

  int ddim = domain.dim();
  PiecewiseAffine out;
  out.dom.rank = domain.rank();
  for (std::size_t i = 0; i < kept.size(); ++i) {
    HRep cut;
    for (std::size_t j = 0; j < kept.size(); ++j) {
      if (j == i) continue;
      cut.ineqs.push_back({vsub(kept[j].slope, kept[i].slope), kept[i].c - kept[j].c});
    }
    Polyhedron region = domain.intersect(cut);
    if (region.is_empty() || region.dim() != ddim) continue;
    out.dom.cells.push_back(std::move(region));
    out.pieces.push_back(kept[i]);
  }
  // Canonical cell order.
  std::vector<std::size_t> idx(out.dom.cells.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return poly_less(out.dom.cells[a], out.dom.cells[b]);
  });
  PiecewiseAffine sorted;
  sorted.dom.rank = out.dom.rank;
  for (std::size_t i : idx) {
    sorted.dom.cells.push_back(std::move(out.dom.cells[i]));
    sorted.pieces.push_back(out.pieces[i]);
  }
  return sorted;
}

PiecewiseAffine concave_conjugate(const PiecewiseAffine& f, const Polyhedron& box) {
  auto gv = f.graph_vertices();
  if (gv.empty()) throw std::runtime_error("unbounded conjugate");
  if (box.is_empty()) throw std::invalid_argument("concave_conjugate: empty box");
  std::vector<AffinePiece> cand;
  cand.reserve(gv.size());
  for (const auto& [v, val] : gv) cand.push_back({v, -val});
  return min_envelope(box, std::move(cand));
}

PiecewiseAffine pwa_sum(const Polyhedron& box, const std::vector<PiecewiseAffine>& fs) {
  if (fs.empty()) return zero_pwa(box);
  int bdim = box.dim();
  // Iteratively collect the piece of the running sum on every full-dim
  // intersection; the sum of concave functions is concave, so its regions of
  // linearity come back out of the min envelope of those pieces.
  PiecewiseAffine acc;
  acc.dom.rank = box.rank();
  {
    const PiecewiseAffine& f0 = fs[0];
    for (std::size_t i = 0; i < f0.dom.cells.size(); ++i) {
      Polyhedron cell = f0.dom.cells[i].intersect(box);
      if (cell.is_empty() || cell.dim() != bdim) continue;
      acc.dom.cells.push_back(std::move(cell));
      acc.pieces.push_back(f0.pieces[i]);
    }
    if (acc.dom.cells.empty())
      throw std::invalid_argument("pwa_sum: function does not cover the box");
  }
  for (std::size_t k = 1; k < fs.size(); ++k) {
    std::vector<AffinePiece> cand;
    std::vector<Polyhedron> cells;
    for (std::size_t i = 0; i < acc.dom.cells.size(); ++i) {
      for (std::size_t j = 0; j < fs[k].dom.cells.size(); ++j) {
        Polyhedron cell = acc.dom.cells[i].intersect(fs[k].dom.cells[j]);
        if (cell.is_empty() || cell.dim() != bdim) continue;
        cells.push_back(std::move(cell));
        cand.push_back(piece_add(acc.pieces[i], fs[k].pieces[j]));
      }
    }
    if (cand.empty()) throw std::invalid_argument("pwa_sum: function does not cover the box");
    acc = min_envelope(box, std::move(cand));
  }
  return acc;
}

PolyComplex common_refinement(const Polyhedron& box, const std::vector<PiecewiseAffine>& fs) {
  for (const auto& f : fs)
    if (!f.defined_at(box.rel_interior_point()))
      throw std::invalid_argument("common_refinement: mismatched boxes");
  if (fs.empty()) return PolyComplex{box.rank(), {box}};
  return pwa_sum(box, fs).dom;
}

PiecewiseAffine pwa_scale_graph(const PiecewiseAffine& f, const Rat& m) {
  if (m.sign() <= 0) throw std::invalid_argument("pwa_scale_graph: factor must be positive");
  PiecewiseAffine out;
  out.dom.rank = f.dom.rank;
  for (const auto& cell : f.dom.cells) out.dom.cells.push_back(cell.dilate(m));
  for (const auto& p : f.pieces) out.pieces.push_back({p.slope, m * p.c});
  return out;
}

}  // namespace tvar
