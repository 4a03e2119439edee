#include "glnz/orbit.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "glnz/oracle.hpp"
#include "test_util.hpp"

using namespace glnz;
using testutil::q;

namespace {

const SymBasis kR2Basis{{"r2"}, {1.41421356237}};
const SymBasis kR2R3Basis{{"r2", "r3"}, {1.41421356237, 1.73205080757}};

SymPoint rat1(const Rat& v) { return rational_sym_point(RatVec{v}); }

// x = (r2, 1 + r2)
SymPoint sqrt2_pair() {
  return sym_point(kR2Basis,
                   {{RatVec{Rat(0), Rat(1)}}, {RatVec{Rat(1), Rat(1)}}});
}

}  // namespace

TEST(GroupOf, CanonicalLattices) {
  GroupInvariant g1 = group_of(rational_sym_point(RatVec{q(1, 5), Rat(0)}));
  EXPECT_EQ(g1.lattice, lattice_canon({{q(1, 5)}}, 1));

  GroupInvariant g2 = group_of(sqrt2_pair());
  EXPECT_EQ(g2.lattice,
            lattice_canon({{Rat(1), Rat(0)}, {Rat(0), Rat(1)}}, 2));

  // x = (1/6, r3/4) over (1, r3)
  SymBasis b{{"r3"}, {1.73205080757}};
  SymPoint x = sym_point(b, {{RatVec{q(1, 6), Rat(0)}}, {RatVec{Rat(0), q(1, 4)}}});
  GroupInvariant g3 = group_of(x);
  EXPECT_EQ(g3.lattice.rows,
            (std::vector<RatVec>{{q(1, 6), Rat(0)}, {Rat(0), q(1, 4)}}));
}

TEST(RankAndDenominator, KnownGroups) {
  GroupInvariant g1 = group_of(rational_sym_point(RatVec{q(1, 5), Rat(0)}));
  EXPECT_EQ(rank_of(g1), 1u);
  EXPECT_EQ(rational_denominator(g1), 5);

  GroupInvariant g2 = group_of(sqrt2_pair());
  EXPECT_EQ(rank_of(g2), 2u);
  EXPECT_EQ(rational_denominator(g2), 1);

  SymBasis b{{"r3"}, {1.73205080757}};
  SymPoint x = sym_point(b, {{RatVec{q(1, 6), Rat(0)}}, {RatVec{Rat(0), q(1, 4)}}});
  GroupInvariant g3 = group_of(x);
  EXPECT_EQ(rank_of(g3), 2u);
  EXPECT_EQ(rational_denominator(g3), 6);
}

TEST(MinimalSpace, SmallestRationalSpaceThroughThePoint) {
  RatAffineSpace f1 = minimal_space(sqrt2_pair());
  EXPECT_EQ(f1.dim(), 1u);
  // y_2 = y_1 + 1
  RatAffineSpace expect1 =
      space_from_equations(2, {{RatVec{Rat(1), Rat(-1)}, Rat(-1)}});
  EXPECT_EQ(f1, expect1);

  SymPoint free2 = sym_point(
      kR2R3Basis,
      {{RatVec{Rat(0), Rat(1), Rat(0)}}, {RatVec{Rat(0), Rat(0), Rat(1)}}});
  EXPECT_EQ(minimal_space(free2).dim(), 2u);

  RatAffineSpace f3 = minimal_space(rational_sym_point(RatVec{q(1, 5), Rat(0)}));
  EXPECT_EQ(f3.dim(), 0u);
  EXPECT_TRUE(f3.contains(RatVec{q(1, 5), Rat(0)}));
}

TEST(InvariantOf, PairsGroupWithC) {
  OrbitInvariant i1 = invariant_of(rat1(q(2, 5)));
  EXPECT_EQ(i1.rank(), 1u);
  EXPECT_EQ(i1.d(), 5);
  EXPECT_EQ(i1.c, 2);

  OrbitInvariant i2 = invariant_of(rational_sym_point(RatVec{q(1, 5), Rat(0)}));
  EXPECT_EQ(i2.d(), 5);
  EXPECT_EQ(i2.c, 1);

  OrbitInvariant i3 = invariant_of(sqrt2_pair());
  EXPECT_EQ(i3.rank(), 2u);
  EXPECT_EQ(i3.d(), 1);
  EXPECT_EQ(i3.c, 1);
}

TEST(OrbitEquiv, Decisions) {
  EXPECT_TRUE(orbit_equiv(rat1(q(1, 5)), rat1(q(4, 5))));
  EXPECT_FALSE(orbit_equiv(rat1(q(1, 5)), rat1(q(2, 5))));
  EXPECT_TRUE(orbit_equiv(rational_sym_point(RatVec{q(1, 5), Rat(0)}),
                          rational_sym_point(RatVec{q(2, 5), Rat(0)})));

  SymPoint a = sym_point(kR2Basis, {{RatVec{Rat(0), Rat(1)}}});
  EXPECT_THROW(orbit_equiv(a, rat1(Rat(0))), BasisMismatch);
}

TEST(Witness, RationalExamples) {
  SymPoint x = rat1(q(2, 5));
  auto id = witness(x, x);
  ASSERT_TRUE(id.has_value());
  EXPECT_EQ(*id, identity_witness(1));

  SymPoint y = rat1(q(3, 5));
  auto w = witness(x, y);
  ASSERT_TRUE(w.has_value());
  EXPECT_TRUE(verify_witness(*w, x, y));

  SymPoint x2 = rational_sym_point(RatVec{q(1, 5), Rat(0)});
  SymPoint y2 = rational_sym_point(RatVec{q(2, 5), Rat(0)});
  auto w2 = witness(x2, y2);
  ASSERT_TRUE(w2.has_value());
  EXPECT_TRUE(verify_witness(*w2, x2, y2));

  EXPECT_FALSE(witness(rat1(q(1, 5)), rat1(q(2, 5))).has_value());
}

TEST(Witness, FullRankSymbolic) {
  SymPoint x = sym_point(kR2Basis, {{RatVec{Rat(0), Rat(1)}}});
  SymPoint y = sym_point(kR2Basis, {{RatVec{Rat(3), Rat(-1)}}});  // -r2 + 3
  auto w = witness(x, y);
  ASSERT_TRUE(w.has_value());
  EXPECT_TRUE(verify_witness(*w, x, y));
  EXPECT_EQ(w->u(0, 0), -1);
  EXPECT_EQ(w->t[0], 3);
}

TEST(Witness, LowerRankSymbolicPipeline) {
  std::mt19937_64 rng(41);
  SymPoint x = sqrt2_pair();
  for (int trial = 0; trial < 20; ++trial) {
    AffineWitness g = testutil::random_witness(rng, 2, 6);
    SymPoint y = apply(g, x);
    auto w = witness(x, y);
    ASSERT_TRUE(w.has_value());
    EXPECT_TRUE(verify_witness(*w, x, y));
  }
}

TEST(Witness, HyperplaneCaseWithNontrivialC) {
  // G = (1/5)Z + r2 Z has rank n = 2 and d = 5, so c separates orbits
  SymPoint x = sym_point(
      kR2Basis, {{RatVec{Rat(0), Rat(1)}}, {RatVec{q(2, 5), Rat(0)}}});
  SymPoint y = sym_point(
      kR2Basis, {{RatVec{Rat(1), Rat(1)}}, {RatVec{q(3, 5), Rat(0)}}});
  OrbitInvariant ix = invariant_of(x), iy = invariant_of(y);
  EXPECT_EQ(ix.rank(), 2u);
  EXPECT_EQ(ix.c, 2);
  EXPECT_TRUE(ix == iy);
  auto w = witness(x, y);
  ASSERT_TRUE(w.has_value());
  EXPECT_TRUE(verify_witness(*w, x, y));

  SymPoint z = sym_point(
      kR2Basis, {{RatVec{Rat(0), Rat(1)}}, {RatVec{q(1, 5), Rat(0)}}});
  EXPECT_EQ(invariant_of(z).c, 1);
  EXPECT_FALSE(witness(x, z).has_value());
}

TEST(Witness, SymbolicAcrossRanks) {
  std::mt19937_64 rng(43);
  // rank n+1 at n = 2
  SymPoint full = sym_point(
      kR2R3Basis,
      {{RatVec{Rat(0), Rat(1), Rat(0)}}, {RatVec{Rat(0), Rat(0), Rat(1)}}});
  for (int trial = 0; trial < 10; ++trial) {
    AffineWitness g = testutil::random_witness(rng, 2, 6);
    SymPoint y = apply(g, full);
    auto w = witness(full, y);
    ASSERT_TRUE(w.has_value());
    EXPECT_TRUE(verify_witness(*w, full, y));
  }

  // rank n at n = 3 with d = 5: the plane {y_3 = 2/5} has c = 2
  SymPoint x = sym_point(kR2R3Basis, {{RatVec{Rat(0), Rat(1), Rat(0)}},
                                      {RatVec{Rat(0), Rat(0), Rat(1)}},
                                      {RatVec{q(2, 5), Rat(0), Rat(0)}}});
  EXPECT_EQ(invariant_of(x).rank(), 3u);
  EXPECT_EQ(invariant_of(x).d(), 5);
  EXPECT_EQ(invariant_of(x).c, 2);
  for (int trial = 0; trial < 10; ++trial) {
    AffineWitness g = testutil::random_witness(rng, 3, 6);
    SymPoint y = apply(g, x);
    auto w = witness(x, y);
    ASSERT_TRUE(w.has_value());
    EXPECT_TRUE(verify_witness(*w, x, y));
  }

  // independently built equivalent pair on the planes {y_3 = 2/5}, {y_3 = 3/5}
  SymPoint z = sym_point(kR2R3Basis, {{RatVec{Rat(1), Rat(1), Rat(0)}},
                                      {RatVec{Rat(0), Rat(0), Rat(1)}},
                                      {RatVec{q(3, 5), Rat(0), Rat(0)}}});
  EXPECT_TRUE(orbit_equiv(x, z));
  auto w = witness(x, z);
  ASSERT_TRUE(w.has_value());
  EXPECT_TRUE(verify_witness(*w, x, z));

  // same group, different c: not equivalent
  SymPoint u = sym_point(kR2R3Basis, {{RatVec{Rat(0), Rat(1), Rat(0)}},
                                      {RatVec{Rat(0), Rat(0), Rat(1)}},
                                      {RatVec{q(1, 5), Rat(0), Rat(0)}}});
  EXPECT_TRUE(group_of(u) == group_of(x));
  EXPECT_EQ(invariant_of(u).c, 1);
  EXPECT_FALSE(witness(x, u).has_value());
}

TEST(CountOrbits, CountsAndRepresentatives) {
  GroupInvariant g5{SymBasis{}, lattice_canon({{q(1, 5)}}, 1)};
  OrbitCount c5 = count_orbits(g5, 1);
  EXPECT_EQ(c5.count, 2);
  ASSERT_EQ(c5.representatives.size(), 2u);
  EXPECT_EQ(c5.representatives[0].first, 1);
  EXPECT_EQ(c5.representatives[1].first, 2);
  std::set<Int> seen;
  for (const auto& [c, rep] : c5.representatives) {
    OrbitInvariant inv = invariant_of(rep);
    EXPECT_TRUE(inv.group == g5);
    EXPECT_EQ(inv.c, c);
    seen.insert(c);
  }
  EXPECT_EQ(seen.size(), 2u);

  GroupInvariant g1{SymBasis{}, lattice_canon({{Rat(1)}}, 1)};
  EXPECT_EQ(count_orbits(g1, 1).count, 1);

  GroupInvariant g12{SymBasis{}, lattice_canon({{q(1, 12)}}, 1)};
  OrbitCount c12 = count_orbits(g12, 1);
  EXPECT_EQ(c12.count, 2);
  EXPECT_EQ(c12.representatives[0].first, 1);
  EXPECT_EQ(c12.representatives[1].first, 5);
  EXPECT_EQ(c12.count, std::max(Int(1), Int(euler_phi(12) / 2)));

  GroupInvariant big{kR2R3Basis,
                     lattice_canon({{Rat(1), Rat(0), Rat(0)},
                                    {Rat(0), Rat(1), Rat(0)},
                                    {Rat(0), Rat(0), Rat(1)}},
                                   3)};
  EXPECT_THROW(count_orbits(big, 1), RankTooLarge);
}

TEST(CountOrbits, SymbolicRankTwo) {
  // G = (1/4)Z + r2 Z at n = 2: rank = n, d = 4, a single orbit
  GroupInvariant g{kR2Basis,
                   lattice_canon({{q(1, 4), Rat(0)}, {Rat(0), Rat(1)}}, 2)};
  OrbitCount c = count_orbits(g, 2);
  EXPECT_EQ(c.count, std::max(Int(1), Int(euler_phi(4) / 2)));
  for (const auto& [cc, rep] : c.representatives) {
    OrbitInvariant inv = invariant_of(rep);
    EXPECT_TRUE(inv.group == g);
    EXPECT_EQ(inv.c, cc);
  }
}

TEST(CountOrbits, MatchesDistinctInvariantCounts) {
  // n = 1: points p/d sweep out exactly count_orbits distinct invariants
  for (long d = 1; d <= 50; ++d) {
    GroupInvariant g{SymBasis{}, lattice_canon({{q(1, d)}}, 1)};
    std::set<std::pair<std::string, std::string>> seen;
    for (long p = 1; p <= d; ++p) {
      if (gcd(Int(p), Int(d)) != 1) continue;
      OrbitInvariant inv = invariant_of(rat1(q(p, d)));
      seen.insert({to_string(inv.d()), to_string(inv.c)});
    }
    EXPECT_EQ(Int(seen.size()), count_orbits(g, 1).count) << "d = " << d;
  }
  // n = 2 with a rank-1 group: the diagonal points (p/d, p/d) collapse to a
  // single orbit
  for (long d = 1; d <= 20; ++d) {
    std::set<std::string> seen;
    for (long p = 1; p <= d; ++p) {
      if (gcd(Int(p), Int(d)) != 1) continue;
      OrbitInvariant inv =
          invariant_of(rational_sym_point(RatVec{q(p, d), q(p, d)}));
      seen.insert(to_string(inv.d()) + "|" + to_string(inv.c));
    }
    GroupInvariant gd{SymBasis{}, lattice_canon({{q(1, d)}}, 1)};
    OrbitCount cnt = count_orbits(gd, 2);
    EXPECT_EQ(Int(seen.size()), cnt.count) << "d = " << d;
    EXPECT_EQ(cnt.count, 1);
  }
}

TEST(EulerPhi, Totients) {
  EXPECT_EQ(euler_phi(Int(1)), 1);
  EXPECT_EQ(euler_phi(Int(6)), 2);
  EXPECT_EQ(euler_phi(Int(12)), 4);
  EXPECT_EQ(euler_phi(Int(97)), 96);
}

TEST(Transforms, GroupAndSpaceAreEquivariant) {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t n = 1 + trial % 3;
    SymPoint x;
    if (trial % 2 == 0) {
      x = rational_sym_point(testutil::random_rat_point(rng, n, 1 + trial % 9, 9));
    } else {
      x = testutil::random_sym_point(rng, kR2R3Basis, n, 4, 4);
    }
    OrbitInvariant inv = invariant_of(x);
    EXPECT_EQ(minimal_space(x).dim() + 1, inv.rank());
    AffineWitness g = testutil::random_witness(rng, n, 6);
    SymPoint y = apply(g, x);
    EXPECT_TRUE(group_of(y) == group_of(x));
    EXPECT_EQ(minimal_space(y), apply(g, minimal_space(x)));
  }
}

TEST(GroupEquality, DecidesBelowRankNAndForSmallD) {
  // rank 1 < n = 2: equal groups force equivalence
  SymPoint a = rational_sym_point(RatVec{q(1, 5), Rat(0)});
  SymPoint b = rational_sym_point(RatVec{q(3, 5), q(2, 5)});
  EXPECT_TRUE(group_of(a) == group_of(b));
  EXPECT_TRUE(orbit_equiv(a, b));

  // d in {1,2,3,4,6} at n = 1: equal groups force equivalence
  for (long d : {1L, 2L, 3L, 4L, 6L})
    for (long p1 = 1; p1 <= d; ++p1)
      for (long p2 = 1; p2 <= d; ++p2) {
        if (gcd(Int(p1), Int(d)) != 1 || gcd(Int(p2), Int(d)) != 1) continue;
        EXPECT_TRUE(orbit_equiv(rat1(q(p1, d)), rat1(q(p2, d))))
            << p1 << "/" << d << " vs " << p2 << "/" << d;
      }
}
