#include <gtest/gtest.h>

#include <random>

#include "ahg/lattice.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace ahg;

namespace {

IntMatrix random_int_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, long bound) {
  IntMatrix M(r, c);
  std::uniform_int_distribution<long> e(-bound, bound);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < c; ++j) M.at(i, j) = e(rng);
  }
  return M;
}

Int det(IntMatrix M) {
  const std::size_t n = M.rows();
  std::vector<RatVec> R(n, RatVec(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) R[i][j] = Rat(M.at(i, j));
  }
  Rat d = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && R[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(R[p], R[c]);
      d = -d;
    }
    d *= R[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      const Rat f = R[i][c] / R[c][c];
      for (std::size_t k = c; k < n; ++k) R[i][k] -= f * R[c][k];
    }
  }
  return d.get_num();
}

std::vector<RatVec> cols_of(const IntMatrix& M) {
  std::vector<RatVec> out;
  for (std::size_t j = 0; j < M.cols(); ++j) out.push_back(to_rat(M.column(j)));
  return out;
}

}  // namespace

TEST(Hermite, FactorisationAndShape) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t r = 1 + trial % 3, c = 2 + trial % 4;
    const IntMatrix M = random_int_matrix(rng, r, c, 6);
    const HermiteResult hr = hermite_normal_form(M);
    EXPECT_EQ(M * hr.U, hr.H);
    const Int du = det(hr.U);
    EXPECT_TRUE(du == 1 || du == -1);
    EXPECT_EQ(hr.rank, oracle::rank(cols_of(M)));
    for (std::size_t j = hr.rank; j < c; ++j) {
      for (std::size_t i = 0; i < r; ++i) EXPECT_EQ(hr.H.at(i, j), 0);
    }
    const oracle::IntLattice LM(r, cols_of(M)), LH(r, cols_of(hr.H));
    for (const auto& v : cols_of(M)) EXPECT_TRUE(LH.contains(v));
    for (const auto& v : cols_of(hr.H)) EXPECT_TRUE(LM.contains(v));
  }
}

TEST(Smith, ProductMatchesMinorGcd) {
  const IntMatrix M{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}};
  const IntVec s = smith_invariants(M);
  ASSERT_EQ(s.size(), 3u);
  EXPECT_EQ(s[0], 2);
  EXPECT_EQ(s[1], 6);
  EXPECT_EQ(s[2] * s[1] * s[0], abs(det(M)));
  for (std::size_t i = 1; i < s.size(); ++i) EXPECT_EQ(s[i] % s[i - 1], 0);
}

TEST(Kernel, SaturatedAndAnnihilated) {
  for (const IntMatrix& A : {fixtures::surface(), fixtures::normal3(), fixtures::curve()}) {
    const LatticeBasis K = kernel_lattice(A);
    EXPECT_EQ(K.rank(), A.cols() - oracle::rank(oracle::columns(A)));
    for (const auto& u : K.basis()) EXPECT_TRUE(is_zero(A.apply(u)));
    // Saturation: the invariants of the basis matrix are all one.
    for (const Int& s : smith_invariants(K.as_matrix())) EXPECT_EQ(s, 1);
  }
}

TEST(Kernel, SurfaceKernelLine) {
  const LatticeBasis K = kernel_lattice(fixtures::surface());
  ASSERT_EQ(K.rank(), 1u);
  IntVec u = K.basis()[0];
  if (u[0] < 0) {
    for (auto& x : u) x = -x;
  }
  EXPECT_EQ(u, (IntVec{1, -2, 2, -1}));
}

TEST(Solve, IntegerAndRational) {
  const IntMatrix A = fixtures::curve();
  const auto c = solve_integer(A, fixtures::rv({3, 19}));
  ASSERT_TRUE(c.has_value());
  EXPECT_EQ(to_rat(A.apply(*c)), fixtures::rv({3, 19}));
  const IntMatrix B{{2, 0}, {0, 2}};
  EXPECT_FALSE(solve_integer(B, fixtures::rv({1, 0})).has_value());
  const auto x = rational_solve({{Rat(2), Rat(0)}, {Rat(0), Rat(2)}}, fixtures::rv({1, 0}));
  ASSERT_TRUE(x.has_value());
  EXPECT_EQ((*x)[0], Rat(1, 2));
  EXPECT_FALSE(rational_solve({{Rat(1), Rat(1)}, {Rat(2), Rat(2)}}, fixtures::rv({1, 0})));
}

TEST(LatticeBasis, MembershipAgreesWithEchelonOracle) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const IntMatrix M = random_int_matrix(rng, 3, 3 + trial % 2, 4);
    std::vector<IntVec> gens;
    for (std::size_t j = 0; j < M.cols(); ++j) gens.push_back(M.column(j));
    const LatticeBasis L = LatticeBasis::generated_by(3, gens);
    const oracle::IntLattice O(3, cols_of(M));
    std::uniform_int_distribution<long> e(-6, 6);
    for (int k = 0; k < 30; ++k) {
      const RatVec v{Rat(e(rng)), Rat(e(rng)), Rat(e(rng))};
      EXPECT_EQ(L.contains(v), O.contains(v));
      if (L.contains(v)) {
        EXPECT_EQ(to_rat(L.combine(*L.coordinates(v))), v);
      }
      EXPECT_TRUE(O.contains(sub(v, L.reduce(v))));
    }
  }
}

TEST(Quotient, IndexAndDistinctCosets) {
  const LatticeBasis big = LatticeBasis::full(3);
  const LatticeBasis small =
      LatticeBasis::generated_by(3, {IntVec{2, 0, 0}, IntVec{0, 3, 0}, IntVec{1, 1, 1}});
  const QuotientResidues q = quotient_representatives(big, small);
  EXPECT_EQ(q.index, 6);
  ASSERT_EQ(q.representatives.size(), 6u);
  const oracle::IntLattice O(3, {fixtures::rv({2, 0, 0}), fixtures::rv({0, 3, 0}),
                                 fixtures::rv({1, 1, 1})});
  for (std::size_t i = 0; i < 6; ++i) {
    for (std::size_t j = i + 1; j < 6; ++j) {
      EXPECT_FALSE(O.contains(sub(q.representatives[i], q.representatives[j])));
    }
  }
}

TEST(Homogeneity, WitnessIsOneOnColumns) {
  for (const IntMatrix& A : {fixtures::surface(), fixtures::normal3(), fixtures::curve()}) {
    const HomogeneityWitness h = homogeneity_witness(A);
    EXPECT_EQ(h.h, oracle::homogeneity(A));
    for (std::size_t j = 0; j < A.cols(); ++j) EXPECT_EQ(h(to_rat(A.column(j))), 1);
  }
}

TEST(Rank, AgreesWithOracle) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    IntMatrix M = random_int_matrix(rng, 3, 4, 2);
    if (trial % 3 == 0) {
      for (std::size_t j = 0; j < 4; ++j) M.at(2, j) = M.at(0, j) + M.at(1, j);
    }
    EXPECT_EQ(rational_rank(M), oracle::rank(cols_of(M)));
  }
}
