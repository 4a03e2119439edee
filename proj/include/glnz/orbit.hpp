#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "glnz/affine_space.hpp"
#include "glnz/errors.hpp"
#include "glnz/lattice.hpp"
#include "glnz/matrix.hpp"
#include "glnz/rational.hpp"
#include "glnz/simplex.hpp"

namespace glnz {

// Declared coordinate universe for points: real numbers expressed as
// rational combinations over (1, a_1, ..., a_k) with the a_i asserted
// Q-linearly independent.  Numeric values, when supplied, are used only for
// floating sanity checks, never for decisions.
struct SymBasis {
  std::vector<std::string> symbols;  // names of a_1..a_k; "1" is implicit
  std::vector<double> values;        // optional, parallel to symbols

  std::size_t k() const { return symbols.size(); }

  // Semantic identity of points is only decidable over one declared basis.
  bool operator==(const SymBasis& o) const { return symbols == o.symbols; }
};

// A point of R^n whose i-th coordinate is coords[i][0]*1 + coords[i][1]*a_1
// + ... + coords[i][k]*a_k.  With k = 0 this is simply a rational point.
struct SymPoint {
  SymBasis basis;
  std::vector<RatVec> coords;  // n vectors of length k+1

  std::size_t n() const { return coords.size(); }

  bool is_rational() const {
    for (const RatVec& c : coords)
      for (std::size_t j = 1; j < c.size(); ++j)
        if (c[j] != 0) return false;
    return true;
  }

  RatVec rational_coords() const {
    RatVec r(coords.size());
    for (std::size_t i = 0; i < coords.size(); ++i) {
      for (std::size_t j = 1; j < coords[i].size(); ++j)
        if (coords[i][j] != 0)
          throw Error("rational_coords: point has irrational coordinates");
      r[i] = coords[i][0];
    }
    return r;
  }

  bool operator==(const SymPoint& o) const {
    return basis == o.basis && coords == o.coords;
  }
};

inline SymPoint sym_point(const SymBasis& basis,
                          const std::vector<RatVec>& coords) {
  SymPoint p{basis, coords};
  for (const RatVec& c : coords)
    if (c.size() != basis.k() + 1)
      throw DimensionMismatch("sym_point: coordinate vector length");
  return p;
}

inline SymPoint rational_sym_point(const RatVec& x) {
  SymPoint p;
  p.coords.reserve(x.size());
  for (const Rat& c : x) p.coords.push_back(RatVec{c});
  return p;
}

inline SymPoint apply(const AffineWitness& g, const SymPoint& x) {
  if (g.dim() != x.n()) throw DimensionMismatch("apply: dimension");
  SymPoint y;
  y.basis = x.basis;
  const std::size_t k1 = x.basis.k() + 1;
  y.coords.assign(x.n(), RatVec(k1, Rat(0)));
  for (std::size_t i = 0; i < x.n(); ++i) {
    for (std::size_t j = 0; j < x.n(); ++j) {
      if (g.u(i, j) == 0) continue;
      for (std::size_t m = 0; m < k1; ++m)
        y.coords[i][m] += Rat(g.u(i, j)) * x.coords[j][m];
    }
    y.coords[i][0] += Rat(g.t[i]);
  }
  return y;
}

// The subgroup G_x of (R, +) generated by 1 and the coordinates of x,
// presented as a canonical lattice in the coefficient space Q^{k+1}.
struct GroupInvariant {
  SymBasis basis;
  LatticeBasis lattice;

  bool operator==(const GroupInvariant& o) const {
    return basis == o.basis && lattice == o.lattice;
  }
};

inline GroupInvariant group_of(const SymPoint& x) {
  const std::size_t k1 = x.basis.k() + 1;
  std::vector<RatVec> gens;
  RatVec e0(k1, Rat(0));
  e0[0] = 1;
  gens.push_back(std::move(e0));
  for (const RatVec& c : x.coords) gens.push_back(c);
  return GroupInvariant{x.basis, lattice_canon(gens, k1)};
}

inline std::size_t rank_of(const GroupInvariant& g) {
  return g.lattice.rank();
}

// The largest integer d with 1/d in the group; exists because 1 is a member.
inline Int rational_denominator(const GroupInvariant& g) {
  const std::size_t k1 = g.lattice.ambient;
  Int scale = 1;
  for (const RatVec& r : g.lattice.rows) scale = lcm(scale, common_denominator(r));
  // integer combinations:  sum_i lambda_i * (scale * row_i) - t * e0 == 0
  IntMat m(k1, g.lattice.rank() + 1);
  for (std::size_t j = 0; j < g.lattice.rank(); ++j)
    for (std::size_t i = 0; i < k1; ++i) {
      Rat x = g.lattice.rows[j][i] * Rat(scale);
      m(i, j) = x.get_num();
    }
  m(0, g.lattice.rank()) = -1;
  IntMat ker = int_kernel(m);
  Int t = 0;
  for (std::size_t i = 0; i < ker.rows(); ++i)
    t = gcd(t, ker(i, g.lattice.rank()));
  detail::internal_check(t > 0, "rational_denominator: 1 not in group");
  Rat q = make_rat(t, scale);
  detail::internal_check(q.get_num() == 1, "rational_denominator: generator");
  return q.get_den();
}

// The smallest rational affine space containing x: the common kernel of all
// integer relations k_0 + k_1 x_1 + ... + k_n x_n = 0.
inline RatAffineSpace minimal_space(const SymPoint& x) {
  const std::size_t n = x.n();
  const std::size_t k1 = x.basis.k() + 1;
  RatMat coord(k1, n + 1);
  coord(0, 0) = 1;  // the constant 1
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < k1; ++i) coord(i, j + 1) = x.coords[j][i];
  IntMat rel = int_kernel(coord);  // rows (k_0, k_1, ..., k_n)
  IntMat ann(rel.rows(), n + 1);   // reorder to (k_1, ..., k_n, k_0)
  for (std::size_t i = 0; i < rel.rows(); ++i) {
    for (std::size_t j = 0; j < n; ++j) ann(i, j) = rel(i, j + 1);
    ann(i, n) = rel(i, 0);
  }
  return RatAffineSpace(n, ann);
}

inline bool contains(const RatAffineSpace& f, const SymPoint& x) {
  if (x.n() != f.ambient_dim()) throw DimensionMismatch("contains: dimension");
  const IntMat& eq = f.equation_rows();
  const std::size_t k1 = x.basis.k() + 1;
  for (std::size_t i = 0; i < eq.rows(); ++i) {
    RatVec s(k1, Rat(0));
    s[0] = Rat(eq(i, f.ambient_dim()));
    for (std::size_t j = 0; j < f.ambient_dim(); ++j)
      for (std::size_t m = 0; m < k1; ++m)
        s[m] += Rat(eq(i, j)) * x.coords[j][m];
    for (const Rat& v : s)
      if (v != 0) return false;
  }
  return true;
}

// The complete orbit invariant (G_x, c_{F_x}).
struct OrbitInvariant {
  GroupInvariant group;
  Int c = 1;

  std::size_t rank() const { return group.lattice.rank(); }
  Int d() const { return rational_denominator(group); }

  bool operator==(const OrbitInvariant& o) const {
    return group == o.group && c == o.c;
  }
};

inline OrbitInvariant invariant_of(const SymPoint& x) {
  OrbitInvariant inv{group_of(x), Int(1)};
  RatAffineSpace fx = minimal_space(x);
  detail::internal_check(fx.dim() + 1 == inv.rank(),
                         "invariant_of: rank(G_x) != dim(F_x) + 1");
  inv.c = fx.c();
  return inv;
}

inline bool orbit_equiv(const SymPoint& x, const SymPoint& y) {
  if (!(x.basis == y.basis))
    throw BasisMismatch("orbit_equiv: points use different symbol bases");
  if (x.n() != y.n()) throw DimensionMismatch("orbit_equiv: dimension");
  return invariant_of(x) == invariant_of(y);
}

namespace detail {

// Solves M (x_1,...,x_n,1) = (y_1,...,y_n,1) for an integer matrix M in
// block form [[U, t], [0, 1]].  Applicable when rank(G_x) = n+1: the
// coordinate vectors of (x_1,...,x_n,1) are linearly independent, so the
// solution is unique, and G_x = G_y makes it integral and unimodular.
inline AffineWitness full_rank_witness(const SymPoint& x, const SymPoint& y) {
  const std::size_t n = x.n();
  const std::size_t k1 = x.basis.k() + 1;
  RatMat b(k1, n + 1);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < k1; ++i) b(i, j) = x.coords[j][i];
  b(0, n) = 1;
  AffineWitness g{IntMat(n, n), IntVec(n)};
  for (std::size_t i = 0; i < n; ++i) {
    auto row = solve_integer_linear(b, y.coords[i]);
    internal_check(row.has_value(), "full_rank_witness: no integer solution");
    for (std::size_t j = 0; j < n; ++j) g.u(i, j) = (*row)[j];
    g.t[i] = (*row)[n];
  }
  internal_check(is_unimodular(g.u), "full_rank_witness: det != +-1");
  return g;
}

}  // namespace detail

// An explicit element gamma of the integer affine group with gamma(x) = y,
// or nullopt when the orbit invariants differ.
//
// Full rank: a single integer change of basis on (x, 1).  Lower rank:
// normalize both minimal spaces onto the canonical space F of their shared
// triple, flatten F onto R^e by z -> (d z_1, ..., d z_e), recurse at full
// rank in dimension e, and pull the result back through a simplex transport
// that fixes the trailing vertices of F's canonical simplex.
inline std::optional<AffineWitness> witness(const SymPoint& x,
                                            const SymPoint& y) {
  if (!(x.basis == y.basis))
    throw BasisMismatch("witness: points use different symbol bases");
  if (x.n() != y.n()) throw DimensionMismatch("witness: dimension");
  const std::size_t n = x.n();
  if (x == y) return identity_witness(n);

  OrbitInvariant ix = invariant_of(x);
  if (!(ix == invariant_of(y))) return std::nullopt;

  AffineWitness g;
  if (ix.rank() == n + 1) {
    g = detail::full_rank_witness(x, y);
  } else {
    const std::size_t e = ix.rank() - 1;
    const Int d = ix.d();
    const Int c = ix.c;
    auto [f, p] = canonical_space(SpaceInvariants{e, d, c}, n);

    auto g1 = space_equiv(minimal_space(x), f);
    auto g2 = space_equiv(minimal_space(y), f);
    detail::internal_check(g1.has_value() && g2.has_value(),
                           "witness: space normalization failed");
    SymPoint x1 = apply(*g1, x);
    SymPoint y1 = apply(*g2, y);

    AffineWitness g4 = identity_witness(n);
    if (e == 0) {
      detail::internal_check(x1 == y1, "witness: canonical points differ");
    } else {
      // eta(z) = (d z_1, ..., d z_e), bijective from f onto R^e
      auto eta = [&](const SymPoint& z) {
        SymPoint r;
        r.basis = z.basis;
        for (std::size_t i = 0; i < e; ++i) {
          RatVec ci = z.coords[i];
          for (Rat& v : ci) v *= Rat(d);
          r.coords.push_back(std::move(ci));
        }
        return r;
      };
      AffineWitness g3 = detail::full_rank_witness(eta(x1), eta(y1));

      // canonical simplex of f: v_i has 1/d in slot i, p/d in the trailing
      // slots, zeros elsewhere
      Rat pd = make_rat(p, d);
      Rat od = make_rat(1, d);
      std::vector<RatVec> vs;
      for (std::size_t i = 0; i <= e; ++i) {
        RatVec v(n, Rat(0));
        for (std::size_t j = e; j < n; ++j) v[j] = pd;
        if (i >= 1) v[i - 1] = od;
        vs.push_back(std::move(v));
      }
      // w_i = eta^{-1}(g3(eta(v_i))); eta(v_0) = 0 and eta(v_i) = xi_i
      std::vector<RatVec> ws;
      for (std::size_t i = 0; i <= e; ++i) {
        IntVec img(e);
        for (std::size_t r = 0; r < e; ++r)
          img[r] = g3.t[r] + (i >= 1 ? g3.u(r, i - 1) : Int(0));
        RatVec w(n, Rat(0));
        for (std::size_t r = 0; r < e; ++r) w[r] = make_rat(img[r], d);
        for (std::size_t j = e; j < n; ++j) w[j] = pd;
        detail::internal_check(den(w) == d, "witness: den(w_i) != d");
        ws.push_back(std::move(w));
      }
      // trailing vertices shared by both simplexes
      std::vector<RatVec> tail;
      if (c == 1) {
        detail::internal_check(p == 1, "witness: p != 1 with c = 1");
        tail.emplace_back(n, Rat(0));  // the origin
        for (std::size_t j = e + 1; j < n; ++j) {
          RatVec xi(n, Rat(0));
          xi[j] = 1;
          tail.push_back(std::move(xi));
        }
      } else {
        detail::internal_check(e + 1 == n, "witness: c > 1 off a hyperplane");
        Int q = (p * c - 1) / d;
        RatVec v(n, Rat(0));
        v[n - 1] = make_rat(q, c);
        tail.push_back(std::move(v));
      }
      RatSimplex s{vs}, t{ws};
      for (const RatVec& v : tail) {
        s.vertices.push_back(v);
        t.vertices.push_back(v);
      }
      auto tr = simplex_transport(s, t);
      detail::internal_check(tr.has_value(), "witness: transport failed");
      g4 = *tr;
    }
    g = compose(invert(*g2), compose(g4, *g1));
  }
  detail::internal_check(apply(g, x) == y, "witness: final verification");
  return g;
}

inline Int euler_phi(Int d) {
  if (d < 1) throw Error("euler_phi: argument < 1");
  Int phi = 1;
  for (Int p = 2; p * p <= d; ++p) {
    if (d % p != 0) continue;
    d /= p;
    phi *= p - 1;
    while (d % p == 0) {
      d /= p;
      phi *= p;
    }
  }
  if (d > 1) phi *= d - 1;
  return phi;
}

// All orbits sharing a given group invariant: one per admissible value of c,
// which is max(1, phi(d)/2) values when rank(G) = n and a single one
// otherwise.  Each representative is a point of the canonical space whose
// group is exactly G.
struct OrbitCount {
  Int count = 1;
  std::vector<std::pair<Int, SymPoint>> representatives;  // (c, point)
};

inline OrbitCount count_orbits(const GroupInvariant& g, std::size_t n) {
  const std::size_t r = rank_of(g);
  if (r > n + 1) throw RankTooLarge("count_orbits: rank exceeds n + 1");
  if (r == 0 || !lattice_contains(g.lattice, [&] {
        RatVec e0(g.lattice.ambient, Rat(0));
        e0[0] = 1;
        return e0;
      }()))
    throw Error("count_orbits: group does not contain 1");
  const Int d = rational_denominator(g);
  if (r == n + 1 && d != 1)
    throw Error("count_orbits: no point generates a full-rank group with d > 1");

  // lift a basis of the projection of G away from the rational line; the
  // lifts u_i together with (1/d)*1 generate G
  const std::size_t k = g.lattice.ambient - 1;
  std::vector<RatVec> lifts;
  if (r > 1) {
    std::vector<RatVec> proj;
    for (const RatVec& row : g.lattice.rows)
      proj.emplace_back(row.begin() + 1, row.end());
    LatticeBasis pl = lattice_canon(proj, k);
    detail::internal_check(pl.rank() == r - 1, "count_orbits: projection rank");
    RatMat cols(k, g.lattice.rank());
    for (std::size_t j = 0; j < g.lattice.rank(); ++j)
      for (std::size_t i = 0; i < k; ++i) cols(i, j) = g.lattice.rows[j][i + 1];
    for (const RatVec& w : pl.rows) {
      auto lam = solve_integer_linear(cols, w);
      detail::internal_check(lam.has_value(), "count_orbits: lift failed");
      RatVec u(k + 1, Rat(0));
      for (std::size_t j = 0; j < g.lattice.rank(); ++j)
        for (std::size_t i = 0; i <= k; ++i)
          u[i] += Rat((*lam)[j]) * g.lattice.rows[j][i];
      lifts.push_back(std::move(u));
    }
  }

  std::vector<Int> cs;
  if (r == n) {
    for (Int c = 1; 2 * c <= d || c == 1; ++c)
      if (gcd(c, d) == 1) cs.push_back(c);
  } else {
    cs.push_back(1);
  }

  OrbitCount out;
  out.count = Int(cs.size());
  const std::size_t e = r - 1;
  for (const Int& c : cs) {
    auto [f, p] = canonical_space(SpaceInvariants{e, d, c}, n);
    (void)f;
    SymPoint rep;
    rep.basis = g.basis;
    Rat pd = make_rat(p, d);
    for (std::size_t i = 0; i < e; ++i) rep.coords.push_back(lifts[i]);
    for (std::size_t i = e; i < n; ++i) {
      RatVec tcoord(k + 1, Rat(0));
      tcoord[0] = pd;
      rep.coords.push_back(std::move(tcoord));
    }
    out.representatives.emplace_back(c, std::move(rep));
  }
  return out;
}

}  // namespace glnz
