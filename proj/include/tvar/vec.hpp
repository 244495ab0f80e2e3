#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "tvar/rat.hpp"

namespace tvar {

// Vectors are plain std::vectors of exact scalars; the ambient rank is their
// length and is never mixed within one computation. std::vector's built-in
// == and < (lexicographic) give the deterministic orderings used throughout.
using Vec = std::vector<Rat>;
using IVec = std::vector<Int>;

inline Vec zero_vec(std::size_t n) { return Vec(n, Rat(0)); }

inline Rat dot(const Vec& a, const Vec& b) {
  Rat s;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline Vec vadd(const Vec& a, const Vec& b) {
  Vec r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

inline Vec vsub(const Vec& a, const Vec& b) {
  Vec r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

inline Vec vneg(const Vec& a) {
  Vec r(a);
  for (auto& x : r) x = -x;
  return r;
}

inline Vec vscale(const Rat& c, const Vec& a) {
  Vec r(a);
  for (auto& x : r) x *= c;
  return r;
}

inline bool is_zero(const Vec& a) {
  for (const auto& x : a)
    if (x.sign() != 0) return false;
  return true;
}

inline bool is_integral(const Vec& a) {
  for (const auto& x : a)
    if (!x.is_integer()) return false;
  return true;
}

inline IVec to_ivec(const Vec& a) {
  IVec r;
  r.reserve(a.size());
  for (const auto& x : a) r.push_back(x.num());
  return r;
}

inline Vec to_vec(const IVec& a) {
  Vec r;
  r.reserve(a.size());
  for (const auto& x : a) r.push_back(Rat(x));
  return r;
}

// Smallest mu >= 1 with mu*v integral, together with mu*v. mu is the lcm of
// the (reduced) coordinate denominators; the zero vector yields (1, 0).
inline std::pair<Int, IVec> primitive_multiple(const Vec& v) {
  Int mu = 1;
  for (const auto& x : v) {
    Int d = x.den();
    mpz_lcm(mu.get_mpz_t(), mu.get_mpz_t(), d.get_mpz_t());
  }
  IVec w;
  w.reserve(v.size());
  for (const auto& x : v) {
    Rat y = Rat(mu) * x;
    w.push_back(y.num());
  }
  return {mu, w};
}

// Scales a nonzero rational vector to the primitive integer vector on the
// same ray. The zero vector maps to itself.
inline Vec primitive_direction(const Vec& v) {
  if (is_zero(v)) return zero_vec(v.size());
  auto [mu, w] = primitive_multiple(v);
  Int g = 0;
  for (const auto& x : w) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  Vec r;
  r.reserve(v.size());
  for (const auto& x : w) r.push_back(Rat(x, g));
  return r;
}

inline std::string vec_str(const Vec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].str();
  }
  return s + ")";
}

inline std::string ivec_str(const IVec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].get_str();
  }
  return s + ")";
}

}  // namespace tvar
