#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "glnz/errors.hpp"
#include "glnz/lattice.hpp"
#include "glnz/matrix.hpp"
#include "glnz/rational.hpp"

namespace glnz {

// Least common denominator of the coordinates of a rational point.
inline Int den(const RatVec& p) { return common_denominator(p); }

// Homogeneous correspondent (den(p)*p_1, ..., den(p)*p_n, den(p)) in Z^{n+1}.
// Always primitive with positive last entry.
inline IntVec homogeneous(const RatVec& p) {
  Int d = den(p);
  IntVec h(p.size() + 1);
  for (std::size_t i = 0; i < p.size(); ++i) {
    Rat scaled = p[i] * Rat(d);
    h[i] = scaled.get_num();
  }
  h.back() = d;
  return h;
}

// Inverse of the homogeneous correspondent map.  Rejects invalid input
// instead of normalizing: a non-primitive or non-positive-last vector here
// means the caller mixed up lattice elements with correspondents.
inline RatVec from_homogeneous(const IntVec& h) {
  if (h.empty()) throw DimensionMismatch("from_homogeneous: empty vector");
  if (h.back() < 1) throw NonPositiveLast("from_homogeneous: last entry < 1");
  if (vec_gcd(h) != 1) throw NotPrimitive("from_homogeneous: gcd != 1");
  RatVec p(h.size() - 1);
  for (std::size_t i = 0; i + 1 < h.size(); ++i) p[i] = make_rat(h[i], h.back());
  return p;
}

// A rational m-simplex given by its vertices (affinely independent points).
struct RatSimplex {
  std::vector<RatVec> vertices;

  std::size_t ambient_dim() const {
    return vertices.empty() ? 0 : vertices.front().size();
  }
  bool operator==(const RatSimplex&) const = default;
};

// Rows are the homogeneous correspondents of the vertices.
inline IntMat homogeneous_matrix(const RatSimplex& t) {
  const std::size_t n = t.ambient_dim();
  IntMat m(t.vertices.size(), n + 1);
  for (std::size_t i = 0; i < t.vertices.size(); ++i) {
    if (t.vertices[i].size() != n)
      throw DimensionMismatch("homogeneous_matrix: ragged vertices");
    m.set_row(i, homogeneous(t.vertices[i]));
  }
  return m;
}

// A simplex is regular iff the homogeneous correspondents of its vertices
// extend to a basis of Z^{n+1} (for full simplexes: |det| = 1).
inline bool is_regular(const RatSimplex& t) {
  if (t.vertices.empty()) return false;
  return rows_extend_to_basis(homogeneous_matrix(t));
}

// An element x -> U x + t of the integer affine group, det(U) = +-1.
struct AffineWitness {
  IntMat u;
  IntVec t;

  std::size_t dim() const { return t.size(); }
  bool operator==(const AffineWitness&) const = default;

  // g(x): the image of a point, symbolic point, or space.  Dispatches to the
  // apply() overload for the argument (found at instantiation time, so
  // overloads declared in later headers participate).
  template <typename T>
  auto operator()(const T& x) const {
    return apply(*this, x);
  }
};

inline AffineWitness identity_witness(std::size_t n) {
  return AffineWitness{IntMat::identity(n), IntVec(n, 0)};
}

inline bool is_unimodular(const IntMat& u) {
  if (u.rows() != u.cols()) return false;
  Int d = det(u);
  return d == 1 || d == -1;
}

inline RatVec apply(const AffineWitness& g, const RatVec& p) {
  if (g.dim() != p.size()) throw DimensionMismatch("apply: dimension");
  RatVec out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    Rat s(g.t[i]);
    for (std::size_t j = 0; j < p.size(); ++j) s += Rat(g.u(i, j)) * p[j];
    out[i] = s;
  }
  return out;
}

// compose(a, b) is the map x -> a(b(x)).
inline AffineWitness compose(const AffineWitness& a, const AffineWitness& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("compose: dimension");
  AffineWitness r;
  r.u = a.u * b.u;
  r.t = a.u.mul_vec(b.t);
  for (std::size_t i = 0; i < a.dim(); ++i) r.t[i] += a.t[i];
  return r;
}

inline AffineWitness invert(const AffineWitness& g) {
  AffineWitness r;
  r.u = unimodular_inverse(g.u);
  r.t = r.u.mul_vec(g.t);
  for (Int& x : r.t) x = -x;
  return r;
}

// (n+1) x (n+1) block matrix [[U, t], [0, 1]] acting on homogeneous vectors.
inline IntMat homogenized(const AffineWitness& g) {
  const std::size_t n = g.dim();
  IntMat m(n + 1, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = g.u(i, j);
    m(i, n) = g.t[i];
  }
  m(n, n) = 1;
  return m;
}

// The unique integer affine map sending the i-th vertex of s to the i-th
// vertex of t, which exists iff the vertex denominators match componentwise.
// Both inputs must be regular n-simplexes in R^n.
inline std::optional<AffineWitness> simplex_transport(const RatSimplex& s,
                                                      const RatSimplex& t) {
  const std::size_t n = s.ambient_dim();
  if (t.ambient_dim() != n || s.vertices.size() != n + 1 ||
      t.vertices.size() != n + 1)
    throw DimensionMismatch("simplex_transport: need full simplexes in R^n");
  IntMat vs = homogeneous_matrix(s);
  IntMat ws = homogeneous_matrix(t);
  if (!rows_extend_to_basis(vs) || !rows_extend_to_basis(ws))
    throw NotRegular("simplex_transport: simplex not regular");
  for (std::size_t i = 0; i <= n; ++i)
    if (vs(i, n) != ws(i, n)) return std::nullopt;
  // M maps each homogeneous vertex of s onto the matching vertex of t:
  // M vs^T = ws^T, so M = (vs^-1 ws)^T.  Denominator equality forces the
  // block form [[U, b], [0, 1]].
  IntMat m = (unimodular_inverse(vs) * ws).transposed();
  for (std::size_t j = 0; j < n; ++j)
    detail::internal_check(m(n, j) == 0, "simplex_transport: bad block form");
  detail::internal_check(m(n, n) == 1, "simplex_transport: bad block form");
  AffineWitness g{IntMat(n, n), IntVec(n)};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) g.u(i, j) = m(i, j);
    g.t[i] = m(i, n);
  }
  detail::internal_check(is_unimodular(g.u), "simplex_transport: det != +-1");
  return g;
}

}  // namespace glnz
