#pragma once

#include <cstddef>
#include <cstdint>
#include <deque>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "glnz/affine_space.hpp"
#include "glnz/errors.hpp"
#include "glnz/matrix.hpp"
#include "glnz/orbit.hpp"
#include "glnz/rational.hpp"
#include "glnz/simplex.hpp"

namespace glnz {

struct SearchBudget {
  int max_word_length = 6;
  Rat coordinate_bound = 3;     // prune points with any |coordinate| above this
  std::size_t node_cap = 1000000;
};

// A finite under-approximation of an orbit: the closure of the seed under a
// standard generating set (adjacent coordinate swaps, sign flip of the first
// coordinate, the transvection adding coordinate 2 to coordinate 1, and unit
// translations), truncated by the budget.  Membership proves equivalence;
// absence proves nothing.
struct OrbitSample {
  std::set<RatVec> points;
  bool complete = true;  // false iff the node cap was hit

  bool contains(const RatVec& p) const { return points.count(p) > 0; }
};

inline OrbitSample bfs_orbit(const RatVec& x, const SearchBudget& budget) {
  if (budget.max_word_length < 0 || budget.coordinate_bound <= 0 ||
      budget.node_cap == 0)
    throw Error("bfs_orbit: invalid budget");
  const std::size_t n = x.size();
  if (n == 0) throw DimensionMismatch("bfs_orbit: empty point");
  const Int qz = den(x);
  if (!qz.fits_slong_p() || qz.get_si() > 1000000000L)
    throw Error("bfs_orbit: seed denominator too large for search");
  const std::int64_t q = qz.get_si();

  // All generators preserve the common denominator, so the search runs on
  // numerator vectors scaled by q.
  Rat bound_scaled = budget.coordinate_bound * Rat(qz);
  Int bz = bound_scaled.get_num() / bound_scaled.get_den();
  if (!bz.fits_slong_p() || bz.get_si() > (1LL << 40))
    throw Error("bfs_orbit: coordinate bound too large for search");
  const std::int64_t bound = bz.get_si();

  using State = std::vector<std::int64_t>;
  State seed(n);
  for (std::size_t i = 0; i < n; ++i) {
    Rat scaled = x[i] * Rat(qz);
    seed[i] = scaled.get_num().get_si();
  }

  auto within = [&](const State& s) {
    for (std::int64_t v : s)
      if (v > bound || v < -bound) return false;
    return true;
  };

  std::set<State> seen{seed};
  std::deque<State> frontier{seed};
  bool complete = true;
  auto push = [&](State s) {
    if (!within(s)) return;
    if (seen.size() >= budget.node_cap) {
      if (seen.count(s) == 0) complete = false;
      return;
    }
    if (seen.insert(s).second) frontier.push_back(std::move(s));
  };

  for (int depth = 0; depth < budget.max_word_length && !frontier.empty();
       ++depth) {
    std::deque<State> next;
    std::swap(next, frontier);
    for (const State& s : next) {
      for (std::size_t i = 0; i + 1 < n; ++i) {  // adjacent swaps
        State t = s;
        std::swap(t[i], t[i + 1]);
        push(std::move(t));
      }
      {
        State t = s;  // sign flip of the first coordinate
        t[0] = -t[0];
        push(std::move(t));
      }
      if (n >= 2) {  // transvection and its inverse
        State t = s;
        t[0] += t[1];
        push(std::move(t));
        t = s;
        t[0] -= t[1];
        push(std::move(t));
      }
      for (std::size_t i = 0; i < n; ++i) {  // unit translations
        State t = s;
        t[i] += q;
        push(std::move(t));
        t = s;
        t[i] -= q;
        push(std::move(t));
      }
    }
  }

  OrbitSample out;
  out.complete = complete;
  for (const State& s : seen) {
    RatVec p(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = make_rat(Int(s[i]), qz);
    out.points.insert(std::move(p));
  }
  return out;
}

// Literal minimum-denominator search for the hyperplane invariant c_F:
// enumerate candidate points v with den(v) <= den_cap and coordinates
// bounded by coord_bound, and accept v iff its homogeneous correspondent
// completes the homogenization lattice of F to a basis of Z^{n+1} (the
// completion determinant is +-1, which already forces v primitive and
// outside F).  Returns the smallest denominator found, or nullopt when the
// cap is too small.  Independent of the coset reduction used by c_of.
inline std::optional<Int> c_by_definition(const RatAffineSpace& f, Int den_cap,
                                          Int coord_bound = 2) {
  const std::size_t n = f.ambient_dim();
  if (f.dim() + 1 != n)
    throw Error("c_by_definition: only hyperplanes have a nontrivial c");
  const IntMat& lat = f.hom_lattice();  // n x (n+1)

  // det([lat; v~]) expanded along the last row
  IntVec cof(n + 1);
  for (std::size_t j = 0; j <= n; ++j) {
    IntMat minor(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t cc = 0;
      for (std::size_t col = 0; col <= n; ++col) {
        if (col == j) continue;
        minor(i, cc++) = lat(i, col);
      }
    }
    Int m = det(minor);
    cof[j] = ((n + j) % 2 == 0) ? m : Int(-m);
  }

  for (Int q = 1; q <= den_cap; ++q) {
    const Int lo = -coord_bound * q, hi = coord_bound * q;
    bool found = false;
    auto rec = [&](auto&& self, std::size_t i, const Int& acc) -> void {
      if (found) return;
      if (i + 1 == n) {
        Int v = acc + lo * cof[i];
        for (Int s = lo; s <= hi; ++s) {
          if (v == 1 || v == -1) {
            found = true;
            return;
          }
          v += cof[i];
        }
        return;
      }
      for (Int s = lo; s <= hi && !found; ++s) self(self, i + 1, acc + s * cof[i]);
    };
    rec(rec, 0, Int(q * cof[n]));
    if (found) return q;
  }
  return std::nullopt;
}

// Closed-form classification on the line: for p/q in lowest terms the
// invariant is d = q together with c = min(r, q - r) where r is the inverse
// of p modulo q (c = 1 for q <= 2).  The inverse enters because a pair
// (a, b), (p, q) spans Z^2 exactly when aq - bp = +-1, i.e. b = -+p^{-1}
// modulo q, so the minimal completing denominator is the smaller residue of
// +-p^{-1}.  min(p, q - p) would label the same classes but with different
// values of c.
inline std::pair<Int, Int> n1_classify(const Rat& v) {
  Int q = v.get_den();
  if (q <= 2) return {q, Int(1)};
  Int p = mod_floor(v.get_num(), q);
  Int r;
  int ok = mpz_invert(r.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
  detail::internal_check(ok != 0, "n1_classify: non-reduced rational");
  return {q, std::min(r, Int(q - r))};
}

inline bool verify_witness(const AffineWitness& g, const RatVec& x,
                           const RatVec& y) {
  if (g.dim() != x.size() || x.size() != y.size())
    throw DimensionMismatch("verify_witness: dimension");
  return is_unimodular(g.u) && apply(g, x) == y;
}

inline bool verify_witness(const AffineWitness& g, const SymPoint& x,
                           const SymPoint& y) {
  if (g.dim() != x.n() || x.n() != y.n() || !(x.basis == y.basis))
    throw DimensionMismatch("verify_witness: dimension");
  return is_unimodular(g.u) && apply(g, x) == y;
}

}  // namespace glnz
