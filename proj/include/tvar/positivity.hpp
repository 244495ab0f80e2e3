#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tvar/model.hpp"

namespace tvar {

// The dual picture of a polarized T-variety: a lattice polytope in M_Q with
// one concave piecewise affine function per stored point (absent = zero).
struct DivisorialPolytope {
  CurveBase base;
  Polyhedron box;
  std::vector<std::optional<PiecewiseAffine>> psi;

  PiecewiseAffine psi_of(std::size_t p) const;
  Rat psi_at(std::size_t p, const Vec& u) const;
  Rat deg_at(const Vec& u) const;
};

// Divisorial-polytope invariants: lattice box, concave integral-vertex
// functions, positive degree on the interior, principal values at the
// degree-zero vertices (genus zero).
ValidationReport check_divisorial(const DivisorialPolytope& dp);

// The polytope cut out by <rho,u> >= h^lin(rho); possibly empty.
Polyhedron box_of(const CartierSupportFunction& h, const FansyDivisor& fd);

// Conjugates h_P* on the box for the stored points, in point order.
std::vector<PiecewiseAffine> conjugates(const CartierSupportFunction& h, const FansyDivisor& fd,
                                        const Polyhedron& box);

// The dual divisorial polytope (h_P*)_P on box_of(h).
DivisorialPolytope dual(const CartierSupportFunction& h, const FansyDivisor& fd);

struct ToSupportResult {
  FansyDivisor fd;
  CartierSupportFunction h;
};

// Reverses dual: slices are the linearity regions of the conjugates of the
// psi_P, the marking comes from the degree-zero box vertices.
Outcome<ToSupportResult> to_support(const DivisorialPolytope& dp);

struct SectionSpace {
  IVec degree;
  bool in_box = false;
  std::map<int, Int> floor_divisor;  // floor(h_P*(u)) per stored point
  Int deg = 0;
  Int dimension = 0;  // exact for genus 0; -1 with exact=false otherwise
  bool exact = true;
};

SectionSpace sections(const CartierSupportFunction& h, const FansyDivisor& fd, const IVec& u);

// f.chi^u is a global section iff u lies in the box and -ord_P f <= h_P*(u)
// everywhere.
bool section_membership(const CartierSupportFunction& h, const FansyDivisor& fd,
                        const SemiInvariant& s);

enum class AmpleStatus { Ample, NotAmple, AmpleModuloPrincipality };

struct AmpleReport {
  AmpleStatus status = AmpleStatus::NotAmple;
  std::vector<std::string> diagnostics;
  bool ample() const { return status == AmpleStatus::Ample; }
};

// Strict concavity of every h_P, valid dual divisorial polytope, and the
// marked cones exactly the degree-zero box vertices.
AmpleReport is_ample(const CartierSupportFunction& h, const FansyDivisor& fd);

struct NefReport {
  bool pass = false;
  std::string reason;
};

// Necessary-condition certificate: every h_P concave and deg h* >= 0 on the
// lattice points of the box. Not claimed to be a complete nef decision.
NefReport nef_certificate(const CartierSupportFunction& h, const FansyDivisor& fd);

struct BasepointCheck {
  FixedPoint at;
  IVec u;              // degree of the would-be local generator
  Int obstruction = 0; // decisive integer; negative means basepoint
  bool basepoint = false;
  std::string note;
};

struct BpfReport {
  bool free = false;
  std::vector<BasepointCheck> checks;  // fixed-point order
  std::vector<BasepointCheck> basepoints() const;
};

// Basepoint-freeness at the torus fixed points (sufficient for global
// basepoint-freeness). Requires genus 0 and a passing nef certificate.
Outcome<BpfReport> basepoint_free(const CartierSupportFunction& h, const FansyDivisor& fd);

}  // namespace tvar
