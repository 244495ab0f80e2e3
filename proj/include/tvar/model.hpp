#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tvar/complex.hpp"
#include "tvar/local.hpp"
#include "tvar/outcome.hpp"
#include "tvar/pwa.hpp"

namespace tvar {

struct CurvePoint {
  std::string label;
  Int a = 0;  // coefficient of the chosen canonical divisor K_Y at this point
};

struct CurveBase {
  long genus = 0;
  std::vector<CurvePoint> points;

  int index_of(const std::string& label) const;
  Int canonical_degree() const;
};

// A fansy divisor with marking: the combinatorial description of a complete
// complexity-one T-variety. Slices are stored per base point; a missing
// slice means the trivial one (the recession fan itself).
struct FansyDivisor {
  CurveBase base;
  std::size_t rank = 0;
  PolyComplex sigma;                             // recession fan, maximal cones
  std::vector<Vec> sigma_rays;                   // union of cone rays, lex sorted
  std::vector<std::optional<PolyComplex>> slices;  // parallel to base.points
  std::vector<std::vector<int>> marking;         // cones as sorted ray-index sets

  const PolyComplex& slice(std::size_t p) const;
  std::vector<int> ray_indices(const Polyhedron& cone) const;
  Polyhedron marked_cone(std::size_t i) const;
  bool is_marked(const Polyhedron& cone) const;
  bool ray_is_marked(std::size_t ray_idx) const;
  // Indices into sigma.cells of the maximal marked cones.
  std::vector<int> marked_maximal_cones() const;
  int dim_x() const { return static_cast<int>(rank) + 1; }
};

FansyDivisor make_fansy(CurveBase base, PolyComplex sigma,
                        std::vector<std::optional<PolyComplex>> slices,
                        std::vector<std::vector<int>> marking);

struct ValidationReport {
  bool ok = true;
  std::vector<std::string> violations;
  std::vector<std::string> notes;
};

// Full support, common recession fan, marking conditions (1)-(3), and the
// curve-level bookkeeping.
ValidationReport validate(const FansyDivisor& fd);

struct FixedPoint {
  enum class Kind { Special, Generic, Contraction };
  Kind kind = Kind::Special;
  int point = -1;  // stored point index (Special), else -1
  int cell = -1;   // slice cell (Special) or sigma cone index (others)

  std::string describe(const FansyDivisor& fd) const;
};

// Deterministic enumeration: special contraction-free fixed points per
// stored point and cell, then one representative per unmarked maximal cone
// (generic fibers), then the contraction fixed points of the marking.
std::vector<FixedPoint> fixed_points(const FansyDivisor& fd);

// Weil divisor on X: rational coefficients on the vertical divisors D_{P,v}
// and horizontal divisors D_rho. Zero coefficients are not stored.
struct WeilDivisor {
  std::map<std::pair<int, Vec>, Rat> vertical;
  std::map<Vec, Rat> horizontal;
};

WeilDivisor weil_add(const WeilDivisor& a, const WeilDivisor& b);
WeilDivisor weil_scale(const Rat& c, const WeilDivisor& d);
bool weil_eq(const WeilDivisor& a, const WeilDivisor& b);
std::string weil_str(const WeilDivisor& d, const FansyDivisor& fd);

// Semi-invariant function f.chi^u, stored by its degree u and the divisor of
// f on the base curve (orders of vanishing at stored points).
struct SemiInvariant {
  IVec degree;
  std::map<int, Int> fdiv;
};

WeilDivisor principal_divisor(const SemiInvariant& s, const FansyDivisor& fd);

// Invariant Cartier divisor data: one integral affine piece per slice cell,
// with the shared linear part stored per maximal cone of the recession fan.
struct SupportPiece {
  IVec u;
  Int a;
  friend bool operator==(const SupportPiece& x, const SupportPiece& y) {
    return x.u == y.u && x.a == y.a;
  }
};

struct CartierSupportFunction {
  std::vector<std::vector<SupportPiece>> cells;  // [point][cell of slice]
  std::vector<IVec> lin;                         // [maximal cone of sigma]
};

// h_P as a piecewise affine function; point = -1 gives the generic fiber
// function h^lin on the recession fan.
PiecewiseAffine support_pwa(const CartierSupportFunction& h, const FansyDivisor& fd, int point);
Rat hlin_on_ray(const CartierSupportFunction& h, const FansyDivisor& fd, const Vec& ray);

// Structural validity: continuity, common linear part, marked-cone local
// generator conditions. Empty result means valid.
std::string check_support(const CartierSupportFunction& h, const FansyDivisor& fd);

WeilDivisor support_to_weil(const CartierSupportFunction& h, const FansyDivisor& fd);

// Inverse of support_to_weil where possible: exact affine data solved from
// the coefficients, with integrality and the marked-cone conditions
// enforced. Fails with a "not Cartier" diagnostic naming the obstruction.
Outcome<CartierSupportFunction> weil_to_support(const WeilDivisor& d, const FansyDivisor& fd);

CartierSupportFunction support_multiple(const CartierSupportFunction& h, long m);

WeilDivisor canonical_weil(const FansyDivisor& fd);

struct GorensteinCertificate {
  CartierSupportFunction canonical_support;
  std::vector<std::pair<FixedPoint, GorensteinData>> generators;
};

// Gorenstein test: the canonical divisor is Cartier and every contraction-
// free fixed point's local cone admits a Gorenstein generator.
Outcome<GorensteinCertificate> is_gorenstein(const FansyDivisor& fd);

}  // namespace tvar
