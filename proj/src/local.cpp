#include "tvar/local.hpp"

#include <functional>
#include <stdexcept>

#include "tvar/cone.hpp"
#include "tvar/linalg.hpp"

namespace tvar {
namespace {

LocalCone finish(std::size_t mrank, Vec apex, const ConeVH& c) {
  if (!c.lin.empty()) throw std::runtime_error("local cone is not pointed");
  LocalCone out;
  out.mrank = mrank;
  out.apex = std::move(apex);
  Mat span;
  for (const auto& r : c.rays) {
    span.push_back(r);
    out.rays.push_back(to_ivec(primitive_direction(r)));
  }
  if (mat_rank(span) != static_cast<int>(mrank) + 1)
    throw std::runtime_error("local cone is not full-dimensional");
  ConeHRep h = cone_facets(mrank + 1, c.rays);
  for (const auto& n : h.ineqs) out.facet_normals.push_back(to_ivec(primitive_direction(n)));
  return out;
}

}  // namespace

bool LocalCone::member(const IVec& x) const {
  Vec v = to_vec(x);
  for (const auto& n : facet_normals)
    if (dot(to_vec(n), v).sign() < 0) return false;
  return true;
}

bool LocalCone::interior_member(const IVec& x) const {
  Vec v = to_vec(x);
  for (const auto& n : facet_normals)
    if (dot(to_vec(n), v).sign() <= 0) return false;
  return true;
}

LocalCone local_cone_at_graph_vertex(const PiecewiseAffine& hstar, const Vec& v) {
  std::size_t n = hstar.dom.rank;
  auto gv = hstar.graph_vertices();
  std::vector<Vec> lifted;
  for (const auto& [w, val] : gv) {
    Vec x(w);
    x.push_back(val);
    lifted.push_back(std::move(x));
  }
  Vec down = zero_vec(n + 1);
  down[n] = Rat(-1);
  // The hypograph's canonical vertices are the true graph vertices.
  Polyhedron hyp = Polyhedron::from_vrep(n + 1, lifted, {down});
  Vec apex(v);
  apex.push_back(hstar(v));
  bool is_vertex = false;
  for (const auto& w : hyp.vertices())
    if (w == apex) { is_vertex = true; break; }
  if (!is_vertex) throw std::runtime_error("v not a vertex");
  std::vector<Vec> gens{down};
  for (const auto& w : hyp.vertices()) {
    if (w == apex) continue;
    gens.push_back(vsub(w, apex));
  }
  return finish(n, apex, cone_canonicalize(n + 1, gens));
}

LocalCone local_cone_of_cell(const Polyhedron& cell) {
  if (cell.is_empty() || !cell.lineality().empty())
    throw std::invalid_argument("local_cone_of_cell: cell must be nonempty and pointed");
  std::size_t n = cell.rank();
  std::vector<Vec> rows;
  for (const auto& v : cell.vertices()) {
    Vec r(v);
    r.push_back(Rat(-1));
    rows.push_back(std::move(r));
  }
  for (const auto& q : cell.rays()) {
    Vec r(q);
    r.push_back(Rat(0));
    rows.push_back(std::move(r));
  }
  Vec apex = zero_vec(n + 1);
  return finish(n, apex, cone_from_constraints(n + 1, rows));
}

Outcome<GorensteinData> gorenstein_generator(const LocalCone& c) {
  std::size_t dim = c.mrank + 1;
  Mat rows;
  Vec rhs;
  for (const auto& n : c.facet_normals) {
    rows.push_back(to_vec(n));
    rhs.push_back(Rat(1));
  }
  SolveResult sol = solve_linear(rows, rhs);
  if (sol.status == SolveStatus::Inconsistent)
    return Outcome<GorensteinData>::fail(
        "not Gorenstein: no point pairs to 1 with facet normal " +
        ivec_str(c.facet_normals[sol.witness_row]));
  if (sol.status == SolveStatus::Underdetermined)
    return Outcome<GorensteinData>::fail("not Gorenstein: facet normals do not span");
  if (!is_integral(sol.x))
    return Outcome<GorensteinData>::fail("not Gorenstein: distinguished point " + vec_str(sol.x) +
                                         " is not a lattice point");
  GorensteinData g;
  g.u = to_ivec(sol.x);
  g.alpha = g.u[dim - 1];

  if (!c.interior_member(g.u)) throw std::runtime_error("gorenstein point not interior");
  // Alpha maximality holds whenever (0,-1) is in the cone, which is the
  // case for every local cone of a fixed point.
  IVec down(dim, Int(0));
  down[dim - 1] = -1;
  if (c.member(down)) {
    IVec up = g.u;
    up[dim - 1] += 1;
    if (c.interior_member(up)) throw std::runtime_error("gorenstein alpha not maximal");
  }

  // Lambda decomposition over a linearly independent subset of rays,
  // smallest subset first, lex order within a size; all lambdas in (0,1].
  std::size_t m = c.rays.size();
  std::vector<std::size_t> subset;
  std::function<bool(std::size_t, std::size_t)> search = [&](std::size_t start, std::size_t left) {
    if (left == 0) {
      Mat a(dim, Vec(subset.size(), Rat(0)));
      for (std::size_t j = 0; j < subset.size(); ++j)
        for (std::size_t r = 0; r < dim; ++r) a[r][j] = Rat(c.rays[subset[j]][r]);
      Vec b = to_vec(g.u);
      SolveResult s = solve_linear(a, b);
      if (s.status != SolveStatus::Unique) return false;
      for (const auto& l : s.x)
        if (l.sign() <= 0 || l > Rat(1)) return false;
      g.lambdas.assign(m, Rat(0));
      for (std::size_t j = 0; j < subset.size(); ++j) g.lambdas[subset[j]] = s.x[j];
      return true;
    }
    for (std::size_t i = start; i + left <= m; ++i) {
      subset.push_back(i);
      if (search(i + 1, left - 1)) return true;
      subset.pop_back();
    }
    return false;
  };
  bool found = false;
  for (std::size_t k = 1; k <= dim && !found; ++k) {
    subset.clear();
    found = search(0, k);
  }
  if (!found) throw std::runtime_error("theorem-machinery violation: no lambda decomposition");
  return Outcome<GorensteinData>::success(std::move(g));
}

}  // namespace tvar
