#include <gtest/gtest.h>

#include "ahg/semigroup.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace ahg;

TEST(InNA, AgreesWithLevelSets) {
  std::mt19937_64 rng(31);
  std::vector<IntMatrix> mats{fixtures::surface(), fixtures::normal3(), fixtures::curve()};
  for (int k = 0; k < 4; ++k) mats.push_back(oracle::random_matrix(rng));
  for (const auto& A : mats) {
    const Configuration C(A);
    const oracle::LevelSets L(A, 7);
    for (int k = 0; k < 300; ++k) {
      const RatVec g = oracle::random_lattice_point(A, rng, -2, 3);
      if (L.degree(g) > 7) continue;
      const auto u = in_NA(C, g);
      EXPECT_EQ(u.has_value(), L.contains(g)) << to_string(g);
      if (u) {
        EXPECT_EQ(to_rat(A.apply(*u)), g);
      }
    }
  }
}

TEST(InNA, CurveHolesAreOutside) {
  const Configuration C(fixtures::curve());
  EXPECT_FALSE(in_NA(C, fixtures::rv({1, 1})));
  EXPECT_FALSE(in_NA(C, fixtures::rv({2, 10})));
  EXPECT_TRUE(in_NA(C, fixtures::rv({2, 11})));
}

TEST(ETau, AgreesWithBruteForce) {
  std::mt19937_64 rng(37);
  std::vector<IntMatrix> mats{fixtures::surface(), fixtures::curve()};
  for (int k = 0; k < 3; ++k) mats.push_back(oracle::random_matrix(rng, 3, 4, 2));
  for (const auto& A : mats) {
    const Configuration C(A);
    for (int k = 0; k < 6; ++k) {
      const RatVec beta = oracle::random_lattice_point(A, rng, -2, 2);
      for (std::size_t t = 0; t < C.faces().size(); ++t) {
        const auto& cols = C.faces().faces[t].columns;
        EXPECT_TRUE(oracle::same_cosets(A, cols, e_tau(C, t, beta).residues,
                                        oracle::e_tau(A, cols, beta, 10)))
            << to_string(beta) << " face " << t;
      }
    }
  }
}

TEST(ETau, SurfaceEdgeValues) {
  const Configuration C(fixtures::surface());
  const std::size_t t = *C.faces().find({0, 3});
  const auto both = e_tau(C, t, fixtures::rv({2, 1, 2}));  // a2 + a3
  EXPECT_TRUE(oracle::same_cosets(C.matrix(), {0, 3}, both.residues,
                                  {fixtures::rv({0, 0, 0}), fixtures::rv({1, 1, 0})}));
  const auto one = e_tau(C, t, fixtures::rv({2, 2, 0}));  // a1 + a4
  EXPECT_TRUE(oracle::same_cosets(C.matrix(), {0, 3}, one.residues, {fixtures::rv({0, 0, 0})}));
}

TEST(Normality, Examples) {
  EXPECT_FALSE(is_normal(Configuration(fixtures::surface())));
  EXPECT_TRUE(is_normal(Configuration(fixtures::normal3())));
  EXPECT_FALSE(is_normal(Configuration(fixtures::curve())));
  EXPECT_TRUE(is_normal(Configuration(IntMatrix{{1, 1, 1}, {0, 1, 2}})));
}

TEST(NumericalSemigroup, GapsAndFrobenius) {
  const auto S = numerical_semigroup({7, 2, 9, 4});
  EXPECT_EQ(S.gaps, (std::vector<long>{1, 3, 5}));
  EXPECT_EQ(S.frobenius, 5);
  EXPECT_TRUE(S.contains(Rat(6)));
  EXPECT_FALSE(S.contains(Rat(5)));
  EXPECT_FALSE(S.contains(Rat(1, 2)));
  EXPECT_FALSE(S.contains(Rat(-2)));
  const auto T = numerical_semigroup({1});
  EXPECT_TRUE(T.gaps.empty());
  EXPECT_EQ(T.frobenius, -1);
}

TEST(NumericalSemigroup, CurveFacets) {
  const Configuration C(fixtures::curve());
  ASSERT_EQ(C.facets().size(), 2u);
  for (std::size_t f = 0; f < 2; ++f) {
    const auto S = facet_value_semigroup(C, f);
    if (C.facets()[f].zero_columns == std::vector<int>{0}) {
      EXPECT_EQ(S.gaps, (std::vector<long>{1, 3, 5}));
    } else {
      EXPECT_EQ(C.facets()[f].zero_columns, std::vector<int>{4});
      EXPECT_EQ(S.gaps, (std::vector<long>{1, 3}));
    }
  }
}

TEST(Resonance, Flags) {
  const Configuration C(fixtures::curve());
  const auto r = resonance(C, {Rat(1, 3), Rat(2, 7)});
  EXPECT_TRUE(r.nonresonant);
  EXPECT_TRUE(r.semi_nonresonant);
  const auto s = resonance(C, fixtures::rv({-1, -1}));
  EXPECT_FALSE(s.nonresonant);
  EXPECT_TRUE(s.semi_nonresonant);  // values -1 and -8
  const auto t = resonance(C, fixtures::rv({1, 2}));
  EXPECT_FALSE(t.semi_nonresonant);
}
