#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "glnz/errors.hpp"
#include "glnz/matrix.hpp"
#include "glnz/rational.hpp"

namespace glnz {

// Row-style Hermite normal form.  The canonical form used everywhere in this
// library: echelon rows, positive pivots, entries above a pivot reduced into
// [0, pivot).  This normal form is unique per row lattice, so lattice
// equality is plain entry equality.
struct HnfResult {
  IntMat h;          // same shape as the input; nonzero rows first
  IntMat transform;  // unimodular, transform * input == h
  std::size_t rank = 0;
};

inline HnfResult hermite_normal_form(IntMat a) {
  const std::size_t k = a.rows(), m = a.cols();
  IntMat u = IntMat::identity(k);
  std::size_t r = 0;
  for (std::size_t j = 0; j < m && r < k; ++j) {
    // gcd-reduce column j on rows r..k-1 until a single entry remains
    while (true) {
      std::size_t best = k;
      for (std::size_t i = r; i < k; ++i) {
        if (a(i, j) == 0) continue;
        if (best == k ||
            mpz_cmpabs(a(i, j).get_mpz_t(), a(best, j).get_mpz_t()) < 0)
          best = i;
      }
      if (best == k) break;
      a.swap_rows(r, best);
      u.swap_rows(r, best);
      bool clean = true;
      for (std::size_t i = r + 1; i < k; ++i) {
        if (a(i, j) == 0) continue;
        Int q = floor_div(a(i, j), a(r, j));
        if (q != 0) {
          a.row_axpy(i, r, -q);
          u.row_axpy(i, r, -q);
        }
        if (a(i, j) != 0) clean = false;
      }
      if (clean) break;
    }
    if (a(r, j) == 0) continue;
    if (a(r, j) < 0) {
      a.negate_row(r);
      u.negate_row(r);
    }
    for (std::size_t i = 0; i < r; ++i) {
      Int q = floor_div(a(i, j), a(r, j));
      if (q != 0) {
        a.row_axpy(i, r, -q);
        u.row_axpy(i, r, -q);
      }
    }
    ++r;
  }
  return HnfResult{std::move(a), std::move(u), r};
}

// Canonical basis of a finitely generated subgroup of Q^m.  Two values
// compare equal iff they present identical entries, which happens iff the
// generated subgroups coincide.
struct LatticeBasis {
  std::size_t ambient = 0;
  std::vector<RatVec> rows;

  std::size_t rank() const { return rows.size(); }
  bool operator==(const LatticeBasis&) const = default;

  bool is_integral() const {
    for (const RatVec& r : rows)
      if (!glnz::is_integral(r)) return false;
    return true;
  }

  IntMat int_rows() const {
    IntMat m(rows.size(), ambient);
    for (std::size_t i = 0; i < rows.size(); ++i)
      m.set_row(i, to_int_vec(rows[i]));
    return m;
  }
};

inline LatticeBasis basis_from_int_rows(const IntMat& h, std::size_t rank,
                                        std::size_t ambient) {
  LatticeBasis b;
  b.ambient = ambient;
  b.rows.reserve(rank);
  for (std::size_t i = 0; i < rank; ++i) b.rows.push_back(to_rat_vec(h.row(i)));
  return b;
}

// HNF of a list of integer generators, together with the unimodular row
// transform.  Zero generators are allowed; the zero lattice yields an empty
// basis.
inline std::pair<LatticeBasis, IntMat> hnf(const std::vector<IntVec>& gens,
                                           std::size_t ambient) {
  IntMat a = IntMat::from_rows(gens, ambient);
  HnfResult r = hermite_normal_form(std::move(a));
  return {basis_from_int_rows(r.h, r.rank, ambient), std::move(r.transform)};
}

// Canonical basis of the subgroup of Q^m generated by rational vectors:
// clear denominators, reduce to integer HNF, scale back.  The result does
// not depend on the generator presentation.
inline LatticeBasis lattice_canon(const std::vector<RatVec>& gens,
                                  std::size_t ambient) {
  Int d = 1;
  for (const RatVec& g : gens) {
    if (g.size() != ambient)
      throw DimensionMismatch("lattice_canon: generator size");
    d = lcm(d, common_denominator(g));
  }
  IntMat a(gens.size(), ambient);
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = 0; j < ambient; ++j) {
      Rat scaled = gens[i][j] * Rat(d);
      a(i, j) = scaled.get_num();
    }
  HnfResult r = hermite_normal_form(std::move(a));
  LatticeBasis b;
  b.ambient = ambient;
  b.rows.reserve(r.rank);
  for (std::size_t i = 0; i < r.rank; ++i) {
    RatVec row(ambient);
    for (std::size_t j = 0; j < ambient; ++j) row[j] = make_rat(r.h(i, j), d);
    b.rows.push_back(std::move(row));
  }
  return b;
}

inline bool is_primitive(const IntVec& v) {
  Int g = vec_gcd(v);
  if (g == 0) throw Error("is_primitive: zero vector");
  return g == 1;
}

// True iff the rows of a (r x m, r <= m) extend to a basis of Z^m,
// equivalently the gcd of the maximal minors is 1, equivalently the HNF of
// the transpose is [I_r; 0].
inline bool rows_extend_to_basis(const IntMat& a) {
  const std::size_t r = a.rows(), m = a.cols();
  if (r > m) return false;
  HnfResult t = hermite_normal_form(a.transposed());
  if (t.rank != r) return false;
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      if (t.h(i, j) != Int(i == j ? 1 : 0)) return false;
  return true;
}

// Extends the rows of a (a basis of a primitive rank-r sublattice of Z^m) to
// a unimodular m x m matrix whose first r rows are the input.  The
// completion is derived from the HNF transform of the transpose and then
// reduced to the canonical coset representative modulo the input lattice, so
// the output is deterministic.
inline IntMat complete_to_basis(const IntMat& rows) {
  const std::size_t r = rows.rows(), m = rows.cols();
  if (r == 0 || r > m) throw DimensionMismatch("complete_to_basis: shape");
  HnfResult t = hermite_normal_form(rows.transposed());
  if (t.rank != r) throw NotExtendable("complete_to_basis: dependent rows");
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      if (t.h(i, j) != Int(i == j ? 1 : 0))
        throw NotExtendable("complete_to_basis: sublattice not primitive");
  // transform * rows^T == [I_r; 0], hence the first r rows of
  // transpose(transform^-1) are exactly the input rows.
  IntMat w = unimodular_inverse(t.transform).transposed();
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < m; ++j)
      detail::internal_check(w(i, j) == rows(i, j),
                             "complete_to_basis: prefix mismatch");
  HnfResult ha = hermite_normal_form(rows);
  for (std::size_t i = r; i < m; ++i) {
    for (std::size_t p = 0; p < ha.rank; ++p) {
      std::size_t col = 0;
      while (col < m && ha.h(p, col) == 0) ++col;
      Int q = floor_div(w(i, col), ha.h(p, col));
      if (q != 0)
        for (std::size_t j = 0; j < m; ++j) w(i, j) -= q * ha.h(p, j);
    }
  }
  Int d = det(w);
  detail::internal_check(d == 1 || d == -1, "complete_to_basis: not unimodular");
  return w;
}

// Basis of the saturated integer kernel {x in Z^m : a x = 0}, in canonical
// HNF form.  The kernel rows are the transform rows of the transpose HNF
// that map to zero.
inline IntMat int_kernel(const IntMat& a) {
  const std::size_t m = a.cols();
  HnfResult t = hermite_normal_form(a.transposed());
  const std::size_t k = m - t.rank;
  IntMat raw(k, m);
  for (std::size_t i = 0; i < k; ++i)
    raw.set_row(i, t.transform.row(t.rank + i));
  HnfResult canon = hermite_normal_form(std::move(raw));
  detail::internal_check(canon.rank == k, "int_kernel: dependent kernel rows");
  return canon.h.top_rows(k);
}

// Kernel of a rational matrix: row scaling does not change the kernel.
inline IntMat int_kernel(const RatMat& a) {
  IntMat scaled(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Int d = common_denominator(a.row(i));
    for (std::size_t j = 0; j < a.cols(); ++j) {
      Rat x = a(i, j) * Rat(d);
      scaled(i, j) = x.get_num();
    }
  }
  return int_kernel(scaled);
}

// Smallest sublattice of Z^m containing the rows of a whose quotient is
// torsion-free: the integer points of the rational row span.
inline IntMat saturate(const IntMat& a) { return int_kernel(int_kernel(a)); }

// Integer solution x of A x = b over Z (A rational, unknowns integer), or
// nullopt.  Works through the column lattice of A: express b as an integer
// combination of the HNF rows of A^T, then map the coefficients back through
// the transform.
inline std::optional<IntVec> solve_integer_linear(const RatMat& a,
                                                  const RatVec& b) {
  if (a.rows() != b.size())
    throw DimensionMismatch("solve_integer_linear: shape");
  const std::size_t rows = a.rows(), cols = a.cols();
  IntMat ai(rows, cols);
  IntVec bi(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    Int d = lcm(common_denominator(a.row(i)), b[i].get_den());
    for (std::size_t j = 0; j < cols; ++j) {
      Rat x = a(i, j) * Rat(d);
      ai(i, j) = x.get_num();
    }
    Rat x = b[i] * Rat(d);
    bi[i] = x.get_num();
  }
  HnfResult t = hermite_normal_form(ai.transposed());  // cols x rows
  IntVec y(cols, 0);
  IntVec resid = bi;
  for (std::size_t j = 0; j < t.rank; ++j) {
    std::size_t p = 0;
    while (p < rows && t.h(j, p) == 0) ++p;
    detail::internal_check(p < rows, "solve_integer_linear: zero hnf row");
    Int q = resid[p] / t.h(j, p);
    if (q * t.h(j, p) != resid[p]) return std::nullopt;
    y[j] = q;
    for (std::size_t c = 0; c < rows; ++c) resid[c] -= q * t.h(j, c);
  }
  for (const Int& v : resid)
    if (v != 0) return std::nullopt;
  return t.transform.transposed().mul_vec(y);
}

inline std::optional<IntVec> solve_integer_linear(const IntMat& a,
                                                  const IntVec& b) {
  return solve_integer_linear(to_rat(a), to_rat_vec(b));
}

// Membership of v in the subgroup presented by a canonical basis.
inline bool lattice_contains(const LatticeBasis& basis, const RatVec& v) {
  if (v.size() != basis.ambient)
    throw DimensionMismatch("lattice_contains: size");
  RatMat cols(basis.ambient, basis.rank());
  for (std::size_t j = 0; j < basis.rank(); ++j)
    for (std::size_t i = 0; i < basis.ambient; ++i) cols(i, j) = basis.rows[j][i];
  return solve_integer_linear(cols, v).has_value();
}

// Minimum positive last coordinate over the double coset
// (w0 + L) u (-w0 + L), together with a vector attaining it.  Preconditions:
// L is an integral lattice of rank m-1 and [L; w0] is a basis of Z^m.
struct CosetMin {
  Int c;
  IntVec witness;
};

inline CosetMin min_positive_last_in_coset(const IntVec& w0,
                                           const LatticeBasis& lat) {
  const std::size_t m = w0.size();
  if (lat.ambient != m || lat.rank() + 1 != m || !lat.is_integral())
    throw BadCoset("min_positive_last_in_coset: need integral rank m-1 lattice");
  IntMat l = lat.int_rows();
  IntMat full(m, m);
  for (std::size_t i = 0; i + 1 < m; ++i) full.set_row(i, l.row(i));
  full.set_row(m - 1, w0);
  Int d = det(full);
  if (d != 1 && d != -1)
    throw BadCoset("min_positive_last_in_coset: rows do not form a Z^m basis");

  IntVec lasts(l.rows());
  for (std::size_t i = 0; i < l.rows(); ++i) lasts[i] = l(i, m - 1);
  Int g = vec_gcd(lasts);
  const Int a = w0.back();

  Int c;
  int side;  // +1 for w0 + L, -1 for -w0 + L
  if (g == 0) {
    detail::internal_check(a == 1 || a == -1,
                           "min_positive_last_in_coset: degenerate coset");
    c = abs(a);
    side = a > 0 ? 1 : -1;
  } else {
    Int r = mod_floor(a, g);
    Int c_plus = (r == 0) ? g : r;
    Int c_minus = (r == 0) ? g : Int(g - r);
    if (c_plus <= c_minus) {
      c = c_plus;
      side = 1;
    } else {
      c = c_minus;
      side = -1;
    }
  }

  IntVec w = (side > 0) ? w0 : negated(w0);
  if (g != 0) {
    IntMat eq(1, lasts.size());
    for (std::size_t i = 0; i < lasts.size(); ++i) eq(0, i) = lasts[i];
    IntVec rhs{Int(c - w.back())};
    auto coeff = solve_integer_linear(eq, rhs);
    detail::internal_check(coeff.has_value(),
                           "min_positive_last_in_coset: unsolvable target");
    for (std::size_t i = 0; i < l.rows(); ++i) axpy(w, (*coeff)[i], l.row(i));
  }
  detail::internal_check(w.back() == c,
                         "min_positive_last_in_coset: witness mismatch");
  return CosetMin{std::move(c), std::move(w)};
}

}  // namespace glnz
