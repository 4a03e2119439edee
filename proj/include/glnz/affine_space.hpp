#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "glnz/errors.hpp"
#include "glnz/lattice.hpp"
#include "glnz/matrix.hpp"
#include "glnz/rational.hpp"
#include "glnz/simplex.hpp"

namespace glnz {

// The complete equivalence class of a nonempty rational affine space under
// the integer affine group: dimension, minimal point denominator d, and the
// minimal outside denominator c completing a regular simplex.
struct SpaceInvariants {
  std::size_t e = 0;
  Int d = 1;
  Int c = 1;

  bool operator==(const SpaceInvariants&) const = default;
};

// A nonempty rational affine subspace of R^n in canonical form.  The
// equation system is stored homogeneously: each row (h_1,...,h_n,h_0) means
// <h, z> + h_0 = 0, and the rows are the canonical HNF basis of the
// saturated annihilator lattice.  Two spaces are equal as point sets iff
// their representations compare equal.
class RatAffineSpace {
 public:
  // equation_rows: integer generators of the annihilator (may be redundant
  // or unsaturated; they are canonicalized here).
  RatAffineSpace(std::size_t n, const IntMat& equation_rows) : n_(n) {
    if (equation_rows.cols() != n + 1)
      throw DimensionMismatch("RatAffineSpace: equation row length");
    eq_ = saturate(equation_rows);
    const std::size_t s = eq_.rows();
    for (std::size_t i = 0; i < s; ++i) {
      bool zero_h = true;
      for (std::size_t j = 0; j < n_; ++j)
        if (eq_(i, j) != 0) zero_h = false;
      if (zero_h && eq_(i, n_) != 0)
        throw InconsistentSystem("RatAffineSpace: contradictory equations");
    }
    lat_ = int_kernel(eq_);
    detail::internal_check(lat_.rows() == n_ + 1 - s,
                           "RatAffineSpace: kernel rank");
    dim_ = n_ - s;
    Int g = 0;
    for (std::size_t i = 0; i < lat_.rows(); ++i) g = gcd(g, lat_(i, n_));
    detail::internal_check(g > 0, "RatAffineSpace: no rational points");
    d_ = g;
    c_ = compute_c();
  }

  std::size_t ambient_dim() const { return n_; }
  std::size_t dim() const { return dim_; }
  const Int& d() const { return d_; }
  const Int& c() const { return c_; }

  // Canonical HNF rows of the saturated annihilator, shape (n-e) x (n+1).
  const IntMat& equation_rows() const { return eq_; }

  // Canonical HNF basis of the homogenization lattice: the integer vectors
  // in the linear span of the homogenized rational points, shape (e+1)x(n+1).
  const IntMat& hom_lattice() const { return lat_; }

  LatticeBasis hom_lattice_basis() const {
    return basis_from_int_rows(lat_, lat_.rows(), n_ + 1);
  }

  bool contains(const RatVec& p) const {
    if (p.size() != n_) throw DimensionMismatch("contains: point dimension");
    for (std::size_t i = 0; i < eq_.rows(); ++i) {
      Rat s(eq_(i, n_));
      for (std::size_t j = 0; j < n_; ++j) s += Rat(eq_(i, j)) * p[j];
      if (s != 0) return false;
    }
    return true;
  }

  bool operator==(const RatAffineSpace& o) const {
    return n_ == o.n_ && eq_ == o.eq_;
  }

 private:
  Int compute_c() const {
    if (dim_ + 1 != n_) return 1;  // c = 1 unless the space is a hyperplane
    IntMat m = complete_to_basis(lat_);
    return min_positive_last_in_coset(m.row(n_), hom_lattice_basis()).c;
  }

  std::size_t n_ = 0;
  std::size_t dim_ = 0;
  IntMat eq_;
  IntMat lat_;
  Int d_ = 1;
  Int c_ = 1;
};

// Affine hull of a nonempty list of rational points.
inline RatAffineSpace space_from_points(const std::vector<RatVec>& points) {
  if (points.empty()) throw Error("space_from_points: no points");
  const std::size_t n = points.front().size();
  IntMat hom(points.size(), n + 1);
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i].size() != n)
      throw DimensionMismatch("space_from_points: ragged points");
    hom.set_row(i, homogeneous(points[i]));
  }
  return RatAffineSpace(n, int_kernel(hom));
}

// Intersection of rational hyperplanes <h, z> = r.
inline RatAffineSpace space_from_equations(
    std::size_t n, const std::vector<std::pair<RatVec, Rat>>& eqs) {
  IntMat rows(eqs.size(), n + 1);
  for (std::size_t i = 0; i < eqs.size(); ++i) {
    const auto& [h, r] = eqs[i];
    if (h.size() != n)
      throw DimensionMismatch("space_from_equations: normal length");
    Int d = lcm(common_denominator(h), r.get_den());
    for (std::size_t j = 0; j < n; ++j) {
      Rat x = h[j] * Rat(d);
      rows(i, j) = x.get_num();
    }
    Rat x = -r * Rat(d);
    rows(i, n) = x.get_num();
  }
  return RatAffineSpace(n, rows);
}

inline std::size_t dim(const RatAffineSpace& f) { return f.dim(); }
inline Int d_of(const RatAffineSpace& f) { return f.d(); }
inline Int c_of(const RatAffineSpace& f) { return f.c(); }

inline SpaceInvariants classify_space(const RatAffineSpace& f) {
  return SpaceInvariants{f.dim(), f.d(), f.c()};
}

inline bool contains(const RatAffineSpace& f, const RatVec& p) {
  return f.contains(p);
}

// One rational point of the space (deterministic).
inline RatVec rational_point_in(const RatAffineSpace& f) {
  const std::size_t n = f.ambient_dim();
  const IntMat& eq = f.equation_rows();
  RatMat a(eq.rows(), n);
  RatVec b(eq.rows());
  for (std::size_t i = 0; i < eq.rows(); ++i) {
    for (std::size_t j = 0; j < n; ++j) a(i, j) = Rat(eq(i, j));
    b[i] = Rat(-eq(i, n));
  }
  auto z = solve_particular(std::move(a), std::move(b));
  detail::internal_check(z.has_value(), "rational_point_in: no solution");
  return *z;
}

// Image of a space under an integer affine map: transport the homogenization
// lattice through the homogenized block matrix and rebuild.
inline RatAffineSpace apply(const AffineWitness& g, const RatAffineSpace& f) {
  if (g.dim() != f.ambient_dim()) throw DimensionMismatch("apply: dimension");
  IntMat m = homogenized(g);
  IntMat rows(f.hom_lattice().rows(), f.ambient_dim() + 1);
  for (std::size_t i = 0; i < rows.rows(); ++i)
    rows.set_row(i, m.mul_vec(f.hom_lattice().row(i)));
  return RatAffineSpace(f.ambient_dim(), int_kernel(rows));
}

// A regular dim(F)-simplex inside F with prescribed first vertex: complete
// the homogeneous correspondent of v0 to a basis of the homogenization
// lattice, then shift basis vectors by multiples of it until every last
// coordinate is positive.
inline RatSimplex regular_simplex_in_space(const RatAffineSpace& f,
                                           const RatVec& v0) {
  if (!f.contains(v0))
    throw PointNotInSpace("regular_simplex_in_space: v0 not in space");
  const std::size_t e = f.dim();
  IntVec h0 = homogeneous(v0);
  RatSimplex s;
  s.vertices.push_back(v0);
  if (e == 0) return s;

  const IntMat& lat = f.hom_lattice();
  // coordinates of h0 in the lattice basis; primitive because h0 is
  // primitive in Z^{n+1} and the lattice is saturated
  RatMat cols(lat.cols(), lat.rows());
  for (std::size_t i = 0; i < lat.rows(); ++i)
    for (std::size_t j = 0; j < lat.cols(); ++j) cols(j, i) = Rat(lat(i, j));
  auto alpha = solve_integer_linear(cols, to_rat_vec(h0));
  detail::internal_check(alpha.has_value(),
                         "regular_simplex_in_space: v0 outside lattice");
  IntMat alpha_row(1, e + 1);
  alpha_row.set_row(0, *alpha);
  IntMat comp = complete_to_basis(alpha_row);  // (e+1) x (e+1), first row alpha
  for (std::size_t i = 1; i <= e; ++i) {
    IntVec h(lat.cols(), 0);
    for (std::size_t j = 0; j <= e; ++j) axpy(h, comp(i, j), lat.row(j));
    if (h.back() < 1) {
      // add the smallest multiple of h0 that makes the last entry positive
      Int k = floor_div(h0.back() - h.back(), h0.back());
      axpy(h, k, h0);
    }
    s.vertices.push_back(from_homogeneous(h));
  }
  return s;
}

// A regular dim(F)-simplex in F all of whose vertices have the minimal
// denominator d_F: start from any regular simplex, combine its homogeneous
// vertices with extended-gcd coefficients to reach denominator d_F, restart
// there, then reduce each remaining vertex below d_F + den(v0).
inline RatSimplex homogeneous_denominator_simplex(const RatAffineSpace& f) {
  RatVec start = rational_point_in(f);
  RatSimplex s = regular_simplex_in_space(f, start);
  const std::size_t e = f.dim();
  const Int d = f.d();

  if (den(s.vertices.front()) != d) {
    // extended gcd over the vertex denominators
    std::vector<IntVec> homs;
    IntVec dens;
    for (const RatVec& v : s.vertices) {
      homs.push_back(homogeneous(v));
      dens.push_back(homs.back().back());
    }
    IntVec coeff(dens.size(), 0);
    Int g = dens[0];
    coeff[0] = 1;
    for (std::size_t i = 1; i < dens.size(); ++i) {
      ExtGcd eg = ext_gcd(g, dens[i]);
      for (std::size_t j = 0; j < i; ++j) coeff[j] *= eg.s;
      coeff[i] = eg.t;
      g = eg.g;
    }
    detail::internal_check(g == d, "homogeneous_denominator_simplex: gcd != d");
    IntVec hw(f.ambient_dim() + 1, 0);
    for (std::size_t i = 0; i < homs.size(); ++i) axpy(hw, coeff[i], homs[i]);
    s = regular_simplex_in_space(f, from_homogeneous(hw));
  }

  IntVec h0 = homogeneous(s.vertices.front());
  for (std::size_t i = 1; i <= e; ++i) {
    IntVec hi = homogeneous(s.vertices[i]);
    if (hi.back() > d) {
      Int m = floor_div(hi.back() - 1, d);  // m*d < den <= (m+1)*d
      axpy(hi, -m, h0);
      s.vertices[i] = from_homogeneous(hi);
    }
    detail::internal_check(homogeneous(s.vertices[i]).back() == d,
                           "homogeneous_denominator_simplex: denominator");
  }
  return s;
}

// A regular n-simplex whose first dim(F)+1 vertices lie in F with
// denominator d_F and whose remaining vertices have denominator c_F.
inline RatSimplex controlled_full_simplex(const RatAffineSpace& f) {
  const std::size_t n = f.ambient_dim();
  const std::size_t e = f.dim();
  RatSimplex s = homogeneous_denominator_simplex(f);
  if (e == n) return s;

  const std::size_t q = n - e;
  const IntMat& lat = f.hom_lattice();
  IntMat comp = complete_to_basis(lat);  // (n+1) x (n+1), first e+1 rows = lat
  std::vector<IntVec> block;
  for (std::size_t i = e + 1; i <= n; ++i) block.push_back(comp.row(i));

  const Int c = f.c();
  if (q == 1) {
    CosetMin cm = min_positive_last_in_coset(block[0], f.hom_lattice_basis());
    detail::internal_check(cm.c == c, "controlled_full_simplex: c mismatch");
    block[0] = cm.witness;
  } else {
    // Sweep the block so only the first row keeps a nonzero last coordinate.
    for (std::size_t i = 1; i < q; ++i) {
      const Int l0 = block[0].back(), li = block[i].back();
      if (li == 0) continue;
      ExtGcd eg = ext_gcd(l0, li);
      IntVec r0(block[0].size(), 0), ri(block[0].size(), 0);
      axpy(r0, eg.s, block[0]);
      axpy(r0, eg.t, block[i]);
      axpy(ri, -(li / eg.g), block[0]);
      axpy(ri, l0 / eg.g, block[i]);
      block[0] = std::move(r0);
      block[i] = std::move(ri);
    }
    Int g = block[0].back();
    if (g < 0) {
      block[0] = negated(block[0]);
      g = -g;
    }
    if (g != 1) {
      // Last coordinates of the lattice generate d_F Z and gcd(g, d_F) = 1,
      // so a second block row can be driven to last coordinate exactly 1.
      ExtGcd eg = ext_gcd(g, f.d());
      detail::internal_check(eg.g == 1, "controlled_full_simplex: gcd(g,d)");
      IntVec ell(n + 1, 0);
      {
        IntVec lasts(lat.rows());
        for (std::size_t i = 0; i < lat.rows(); ++i) lasts[i] = lat(i, n);
        IntMat eq(1, lasts.size());
        for (std::size_t i = 0; i < lasts.size(); ++i) eq(0, i) = lasts[i];
        auto coeff = solve_integer_linear(eq, IntVec{f.d()});
        detail::internal_check(coeff.has_value(),
                               "controlled_full_simplex: lattice target");
        for (std::size_t i = 0; i < lat.rows(); ++i)
          axpy(ell, (*coeff)[i], lat.row(i));
      }
      axpy(block[1], eg.s, block[0]);
      axpy(block[1], eg.t, ell);
      detail::internal_check(block[1].back() == 1,
                             "controlled_full_simplex: unit row");
      std::swap(block[0], block[1]);
    }
    detail::internal_check(c == 1, "controlled_full_simplex: c must be 1");
  }

  // Reduce the remaining block rows by the first one so every trailing
  // vertex gets denominator exactly c.
  const IntVec& w = block[0];
  for (std::size_t i = 1; i < q; ++i) {
    Int target = mod_floor(block[i].back() - 1, c) + 1;
    Int m = (block[i].back() - target) / c;
    if (m != 0) axpy(block[i], -m, w);
    detail::internal_check(block[i].back() == c,
                           "controlled_full_simplex: trailing denominator");
  }

  for (const IntVec& row : block) s.vertices.push_back(from_homogeneous(row));
  detail::internal_check(is_regular(s), "controlled_full_simplex: not regular");
  return s;
}

// Explicit map with gamma(F) = G when the invariant triples agree, nullopt
// otherwise: transport the controlled full simplex of F onto the one of G
// (their vertex denominators match componentwise by construction).
inline std::optional<AffineWitness> space_equiv(const RatAffineSpace& f,
                                                const RatAffineSpace& g) {
  if (f.ambient_dim() != g.ambient_dim())
    throw DimensionMismatch("space_equiv: ambient dimension");
  if (classify_space(f) != classify_space(g)) return std::nullopt;
  RatSimplex s = controlled_full_simplex(f);
  RatSimplex t = controlled_full_simplex(g);
  auto w = simplex_transport(s, t);
  detail::internal_check(w.has_value(), "space_equiv: transport failed");
  return w;
}

// The canonical space {y_{e+1} = ... = y_n = p/d} realizing a valid triple,
// with p the minimal element of {1,...,d} satisfying p*c == 1 (mod d).
inline std::pair<RatAffineSpace, Int> canonical_space(const SpaceInvariants& t,
                                                      std::size_t n) {
  if (n == 0) throw BadTriple("canonical_space: ambient dimension 0");
  if (t.e > n || t.d < 1 || t.c < 1) throw BadTriple("canonical_space: range");
  if (gcd(t.c, t.d) != 1) throw BadTriple("canonical_space: gcd(c,d) != 1");
  if (t.e == n) {
    if (t.d != 1 || t.c != 1)
      throw BadTriple("canonical_space: full space needs d = c = 1");
  } else if (t.e + 1 != n) {
    if (t.c != 1) throw BadTriple("canonical_space: c = 1 unless hyperplane");
  } else {
    if (2 * t.c > t.d && t.c != 1)
      throw BadTriple("canonical_space: c exceeds max(1, d/2)");
  }
  Int p = 1;
  while (mod_floor(p * t.c, t.d) != mod_floor(Int(1), t.d)) ++p;
  std::vector<std::pair<RatVec, Rat>> eqs;
  for (std::size_t j = t.e; j < n; ++j) {
    RatVec h(n, Rat(0));
    h[j] = 1;
    eqs.emplace_back(std::move(h), make_rat(p, t.d));
  }
  return {space_from_equations(n, eqs), p};
}

}  // namespace glnz
