#pragma once

// Reference implementations used only by the tests. Everything here is
// written from the definitions with plain enumeration and its own linear
// algebra, so that it can be compared against the library.

#include <map>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ahg/classify.hpp"

namespace oracle {

using ahg::Exponent;
using ahg::Int;
using ahg::IntMatrix;
using ahg::IntVec;
using ahg::Rat;
using ahg::RatVec;

// Rank of a list of rational vectors by fraction-exact elimination.
std::size_t rank(std::vector<RatVec> rows);
bool in_span(const std::vector<RatVec>& vectors, const RatVec& v);
// Some x with sum_k x_k cols[k] = b.
std::optional<RatVec> solve_columns(const std::vector<RatVec>& cols, const RatVec& b);

std::vector<RatVec> columns(const IntMatrix& A);
RatVec image_rat(const IntMatrix& A, const RatVec& w);
std::vector<RatVec> columns(const IntMatrix& A, const std::vector<int>& which);

// The subgroup of Z^m generated by integer vectors, in integer echelon form.
class IntLattice {
 public:
  IntLattice(std::size_t m, const std::vector<RatVec>& generators);
  bool contains(const RatVec& v) const;

 private:
  std::size_t m_;
  std::vector<IntVec> rows_;
  std::vector<std::size_t> pivots_;
};

// h with h . a_j = 1 for all columns.
RatVec homogeneity(const IntMatrix& A);

// NA level by level: level k holds every sum of k columns.
class LevelSets {
 public:
  LevelSets(const IntMatrix& A, int max_level);
  int max_level() const { return static_cast<int>(levels_.size()) - 1; }
  Rat degree(const RatVec& gamma) const;
  // Requires degree(gamma) <= max_level().
  bool contains(const RatVec& gamma) const;

 private:
  IntMatrix A_;
  RatVec h_;
  std::vector<std::set<IntVec>> levels_;
};

// gamma in NA + Z(A cap tau), searching u in N^{not tau} with |u| <= bound.
bool in_NA_plus_face(const IntMatrix& A, const std::vector<int>& tau,
                     const RatVec& gamma, int bound);

// Coset representatives of (Q(A cap tau) cap ZA) / Z(A cap tau), found from
// integer combinations of the columns with coefficients in [-bound, bound].
std::vector<RatVec> face_quotient(const IntMatrix& A, const std::vector<int>& tau,
                                  int bound);

// E_tau(beta) as coset representatives.
std::vector<RatVec> e_tau(const IntMatrix& A, const std::vector<int>& tau,
                          const RatVec& beta, int bound, int quotient_bound = 2);

// Two lists of coset representatives describe the same cosets mod Z(A cap tau).
bool same_cosets(const IntMatrix& A, const std::vector<int>& tau,
                 const std::vector<RatVec>& a, const std::vector<RatVec>& b);

// Minimal u with A u - chi in NA and |u| <= max_degree.
std::vector<Exponent> m_chi(const IntMatrix& A, const RatVec& chi, int max_degree);

// Standard pairs (u, sigma) of a monomial ideal, sigma ranging over all
// subsets of the variables.
std::vector<std::pair<Exponent, std::vector<int>>> standard_pairs(
    std::size_t n, const std::vector<Exponent>& generators);

struct Affine {
  RatVec point;
  std::vector<RatVec> directions;

  bool contains(const RatVec& s) const;
  bool subset_of(const Affine& other) const;
};

// Zero set of the distraction of M pushed forward by s = A theta.
std::vector<Affine> distraction_variety(const IntMatrix& A,
                                        const std::vector<Exponent>& generators);
std::vector<Affine> to_affine(const ahg::Configuration& C,
                              const std::vector<ahg::BComponent>& V);
std::vector<Affine> shifted(std::vector<Affine> V, const RatVec& shift);
bool union_contains(const std::vector<Affine>& V, const RatVec& s);
bool same_union(const std::vector<Affine>& a, const std::vector<Affine>& b);

// Normally ordered Weyl algebra terms keyed by (alpha, m).
using Terms = std::map<std::pair<Exponent, Exponent>, Rat>;
Terms terms_of(const ahg::WeylElement& E);
// b(A theta), multiplying out the linear factors one theta at a time.
Terms substitute(const ahg::FactoredPoly& b, const IntMatrix& A);
bool weight_ok(const ahg::WeylElement& E, const IntMatrix& A, const RatVec& chi);
// b(s) d^v - E d^u equals the certificate sum, term by term.
bool certificate_ok(const ahg::SymmetryOperator& op, const IntMatrix& A);

// Pairs (p, q) in N^n with A p = A q, disjoint supports and |p| <= max_plus.
std::vector<std::pair<Exponent, Exponent>> fiber_pairs(const IntMatrix& A, int max_plus);

struct Series {
  RatVec base;
  int radius = 0;  // exact within this L1 distance of base
  std::map<RatVec, Rat> terms;
};

Rat falling(const Rat& x, int k);
int l1(const RatVec& a, const RatVec& b);
Series phi(const IntMatrix& A, const RatVec& v, int order);
Series apply(const ahg::WeylElement& E, const Series& S);

struct Residual {
  bool euler = true;
  bool toric = true;
  int checked_radius = 0;
  bool ok() const { return euler && toric; }
};
// Euler equations exactly; every binomial of degree <= degree_bound inside
// the radius where the truncation cannot interfere.
Residual residual(const IntMatrix& A, const RatVec& beta, const Series& S,
                  int degree_bound);

// Random homogeneous matrix: first row of ones, full rank, distinct columns.
IntMatrix random_matrix(std::mt19937_64& rng, std::size_t max_d = 3,
                        std::size_t max_n = 5, long max_entry = 3);
RatVec random_lattice_point(const IntMatrix& A, std::mt19937_64& rng, long lo, long hi);

}  // namespace oracle
