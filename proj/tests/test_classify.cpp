#include <gtest/gtest.h>

#include "ahg/classify.hpp"
#include "ahg/error.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace ahg;
using fixtures::rv;

TEST(Isomorphism, SurfaceEdgeSeparates) {
  const Configuration C(fixtures::surface());
  // a2 + a3 and a1 + a4 differ on the index-two edge.
  const IsoDecision d = decide_isomorphic(C, rv({2, 1, 2}), rv({2, 2, 0}));
  EXPECT_FALSE(d.isomorphic);
  ASSERT_TRUE(d.differing_face.has_value());
  EXPECT_EQ(C.faces().faces[*d.differing_face].columns, (std::vector<int>{0, 3}));
  EXPECT_TRUE(isomorphic(C, rv({2, 1, 2}), rv({3, 2, 3})));
}

TEST(Isomorphism, DifferentCosetsNeverIsomorphic) {
  const Configuration C(fixtures::curve());
  EXPECT_FALSE(isomorphic(C, {Rat(1, 2), Rat(0)}, {Rat(1, 3), Rat(0)}));
}

TEST(Isomorphism, NormalCriterionAgrees) {
  const Configuration C(fixtures::normal3());
  std::mt19937_64 rng(83);
  std::uniform_int_distribution<long> e(-3, 3);
  for (int k = 0; k < 200; ++k) {
    const RatVec a{Rat(e(rng)), Rat(e(rng)), Rat(e(rng))};
    const RatVec b{Rat(e(rng)), Rat(e(rng)), Rat(e(rng))};
    EXPECT_EQ(classify_normal(C, a, b), isomorphic(C, a, b));
  }
  try {
    classify_normal(Configuration(fixtures::curve()), rv({0, 0}), rv({1, 0}));
    FAIL();
  } catch (const Error& e2) {
    EXPECT_EQ(e2.code(), ErrorCode::kNotNormal);
  }
}

TEST(Curve, HolesAndParts) {
  const Configuration C(fixtures::curve());
  const HoleSet H = curve_holes(C);
  EXPECT_EQ(H.holes, (std::vector<IntVec>{{2, 10}, {2, 12}, {3, 19}}));
  EXPECT_EQ(curve_part(C, rv({2, 10})), 5);
  EXPECT_EQ(curve_part(C, rv({1, 7})), 1);
  EXPECT_EQ(curve_part(C, {Rat(1, 2), Rat(0)}), 0);
  // beta2 = 1 is not in S1 while 9 - 1 = 8 is in S2.
  EXPECT_EQ(curve_part(C, rv({1, 1})), 3);
  EXPECT_TRUE(classify_curve(C, rv({2, 10}), rv({3, 19})));
  EXPECT_FALSE(classify_curve(C, rv({2, 10}), rv({2, 11})));
  try {
    require_curve(Configuration(fixtures::surface()));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotCurve);
  }
}

TEST(Curve, CriterionAgreesWithProfiles) {
  const Configuration C(fixtures::curve());
  const HoleSet H = curve_holes(C);
  std::mt19937_64 rng(89);
  std::uniform_int_distribution<long> b1(-2, 4), b2(-10, 30);
  for (int k = 0; k < 150; ++k) {
    const RatVec a = rv({b1(rng), b2(rng)}), b = rv({b1(rng), b2(rng)});
    EXPECT_EQ(classify_curve(C, H, a, b), isomorphic(C, a, b)) << to_string(a) << to_string(b);
  }
}

TEST(Witness, OperatorsPassIndependentChecks) {
  const Configuration C(fixtures::surface());
  const IntMatrix& A = C.matrix();
  const RatVec beta = rv({1, 0, 1}), beta2 = rv({2, 0, 2});
  ASSERT_TRUE(isomorphic(C, beta, beta2));
  const IsoWitness w = iso_witness(C, beta, beta2, 3);
  EXPECT_NE(w.scalar, 0);
  EXPECT_TRUE(w.weights_ok && w.certificates_ok && w.composition_ok && w.forward.ok());
  EXPECT_TRUE(oracle::certificate_ok(w.P_plus, A));
  EXPECT_TRUE(oracle::certificate_ok(w.P_minus, A));
  EXPECT_TRUE(oracle::weight_ok(w.P_plus.element, A, w.chi));
  EXPECT_TRUE(oracle::weight_ok(w.P_minus.element, A, scale(w.chi, Rat(-1))));
  EXPECT_NE(w.p_plus(add(beta, w.chi)), 0);
  EXPECT_NE(w.p_minus(beta), 0);
  const auto image = oracle::apply(w.P_plus.element, oracle::phi(A, w.exponent, w.order));
  const auto res = oracle::residual(A, beta2, image, 2);
  EXPECT_TRUE(res.ok());
  try {
    iso_witness(C, rv({2, 1, 2}), rv({2, 2, 0}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotIsomorphic);
  }
}

TEST(Enumerate, SmallBoxes) {
  const Configuration N(fixtures::normal3());
  const auto e = enumerate_classes(N, {{-3, 3}, {-3, 3}, {-3, 3}});
  EXPECT_EQ(e.points, 343u);
  EXPECT_EQ(e.classes.size(), 14u);
  std::size_t total = 0;
  for (const auto& c : e.classes) total += c.members;
  EXPECT_EQ(total, 343u);
  EnumerateOptions only;
  only.only_NA = true;
  const auto s = enumerate_classes(Configuration(fixtures::surface()), {{0, 6}, {0, 6}, {0, 6}}, only);
  EXPECT_EQ(s.classes.size(), 2u);
  EnumerateOptions shifted;
  shifted.offset = RatVec{Rat(1, 2), Rat(1, 3), Rat(1, 5)};
  EXPECT_EQ(enumerate_classes(N, {{0, 2}, {0, 2}, {0, 2}}, shifted).classes.size(), 1u);
}

TEST(Laurent, CurveHoleFaces) {
  const Configuration C(fixtures::curve());
  const auto L = laurent_solution_faces(C, rv({2, 10}));
  EXPECT_EQ(L.count, 2u);
}

TEST(Volume, KnownValuesAndApexIndependence) {
  const Configuration S(fixtures::surface()), N(fixtures::normal3()), K(fixtures::curve());
  EXPECT_EQ(normalized_volume(S), 3);
  EXPECT_EQ(normalized_volume(N), 2);
  EXPECT_EQ(normalized_volume(K), 9);
  for (std::size_t a = 0; a < 4; ++a) EXPECT_EQ(normalized_volume(S, a), 3);
  EXPECT_EQ(normalized_volume(Configuration(IntMatrix{{1, 1, 1}, {0, 2, 4}})), 2);
}
