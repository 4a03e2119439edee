#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

#include "glnz/errors.hpp"

namespace glnz {

// Arbitrary-precision integers and canonical rationals (lowest terms,
// positive denominator, zero is 0/1).  mpq_class keeps results canonical
// as long as inputs are; make_rat is the one place raw fractions enter.
using Int = mpz_class;
using Rat = mpq_class;
using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

inline Rat make_rat(const Int& num, const Int& den) {
  if (sgn(den) == 0) throw Error("make_rat: zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

// Floor division and the matching remainder in [0, |b|).
inline Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline Int mod_floor(const Int& a, const Int& b) {
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

struct ExtGcd {
  Int g, s, t;  // g = s*a + t*b, g >= 0
};

inline ExtGcd ext_gcd(const Int& a, const Int& b) {
  ExtGcd r;
  mpz_gcdext(r.g.get_mpz_t(), r.s.get_mpz_t(), r.t.get_mpz_t(), a.get_mpz_t(),
             b.get_mpz_t());
  return r;
}

inline Int vec_gcd(const IntVec& v) {
  Int g = 0;
  for (const Int& x : v) g = gcd(g, x);
  return g;
}

inline Int dot(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size()) throw DimensionMismatch("dot: size mismatch");
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline Rat dot(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) throw DimensionMismatch("dot: size mismatch");
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// dst += c * src
inline void axpy(IntVec& dst, const Int& c, const IntVec& src) {
  for (std::size_t i = 0; i < dst.size(); ++i) dst[i] += c * src[i];
}

inline IntVec negated(IntVec v) {
  for (Int& x : v) x = -x;
  return v;
}

inline RatVec to_rat_vec(const IntVec& v) {
  RatVec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = Rat(v[i]);
  return r;
}

inline bool is_integral(const RatVec& v) {
  for (const Rat& x : v)
    if (!is_integer(x)) return false;
  return true;
}

inline IntVec to_int_vec(const RatVec& v) {
  IntVec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!is_integer(v[i])) throw Error("to_int_vec: non-integral entry");
    r[i] = v[i].get_num();
  }
  return r;
}

// lcm of the denominators of a rational vector (1 for the empty vector).
inline Int common_denominator(const RatVec& v) {
  Int d = 1;
  for (const Rat& x : v) d = lcm(d, x.get_den());
  return d;
}

inline std::string to_string(const Rat& r) { return r.get_str(); }
inline std::string to_string(const Int& n) { return n.get_str(); }

inline long to_long(const Int& n) {
  if (!n.fits_slong_p()) throw Error("to_long: value out of range");
  return n.get_si();
}

}  // namespace glnz
