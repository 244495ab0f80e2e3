#include "tvar/lattice.hpp"

#include <stdexcept>

#include "tvar/parallel.hpp"

namespace tvar {
namespace {

// Substitute x_0 = c into the H-representation, dropping that coordinate.
Polyhedron slice_first(const Polyhedron& p, const Rat& c) {
  const HRep& h = p.hrep();
  HRep s;
  auto cut = [&](const Halfspace& hs) {
    Vec a(hs.a.begin() + 1, hs.a.end());
    return Halfspace{a, hs.b - hs.a[0] * c};
  };
  for (const auto& hs : h.ineqs) s.ineqs.push_back(cut(hs));
  for (const auto& hs : h.eqs) s.eqs.push_back(cut(hs));
  return Polyhedron::from_hrep(p.rank() - 1, s);
}

void enumerate(const Polyhedron& p, IVec& prefix, std::vector<IVec>& out) {
  if (p.is_empty()) return;
  if (p.rank() == 0) {
    out.push_back(prefix);
    return;
  }
  auto [lo, hi] = p.coord_range(0);
  for (Int c = lo.ceil(); c <= hi.floor(); ++c) {
    prefix.push_back(c);
    enumerate(slice_first(p, Rat(c)), prefix, out);
    prefix.pop_back();
  }
}

std::vector<IVec> run(const Polyhedron& p, bool parallel) {
  if (p.is_empty()) return {};
  if (!p.is_bounded()) throw std::runtime_error("unbounded enumeration");
  if (p.rank() == 0) return {IVec{}};
  auto [lo, hi] = p.coord_range(0);
  Int first = lo.ceil(), last = hi.floor();
  if (first > last) return {};
  std::size_t n = mpz_class(last - first + 1).get_ui();
  std::vector<std::vector<IVec>> slabs(n);
  p.hrep();  // materialize the cache before sharing across threads
  auto body = [&](std::size_t i) {
    Int c = first + static_cast<long>(i);
    IVec prefix{c};
    enumerate(slice_first(p, Rat(c)), prefix, slabs[i]);
  };
  if (parallel)
    parallel_for(n, body);
  else
    for (std::size_t i = 0; i < n; ++i) body(i);
  std::vector<IVec> out;
  for (auto& s : slabs)
    for (auto& v : s) out.push_back(std::move(v));
  return out;
}

}  // namespace

std::vector<IVec> lattice_points(const Polyhedron& p) { return run(p, true); }

std::vector<IVec> lattice_points_serial(const Polyhedron& p) { return run(p, false); }

}  // namespace tvar
