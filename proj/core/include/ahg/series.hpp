#pragma once

// Truncated canonical series phi_v and their residuals against H_A(beta).

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ahg/arith.hpp"
#include "ahg/cone.hpp"
#include "ahg/weyl.hpp"

namespace ahg {

// sum c_w x^w over exponents w in Q^n. Coefficients are exact for every w
// with |w - base|_1 <= radius; terms farther out are dropped.
struct FormalSeries {
  RatVec base;
  int radius = 0;
  std::map<RatVec, Rat> terms;

  // Truncation order in the h-degree of u_+, i.e. radius / 2.
  int order() const { return radius < 0 ? -1 : radius / 2; }
  Rat coefficient(const RatVec& w) const;
};

int l1_distance(const RatVec& a, const RatVec& b);

// {i : v_i a negative integer}, 0-based.
std::vector<int> negative_support(const RatVec& v);

// Kernel vectors u (A u = 0) with |u_+| <= max_plus.
std::vector<IntVec> kernel_vectors(const Configuration& C, int max_plus);

struct NegSupportReport {
  RatVec v;
  std::vector<int> nsupp;
  bool minimal = true;
  int bound = 0;                  // kernel search bound on |u_+|
  std::optional<IntVec> improve;  // u with nsupp(v+u) strictly smaller
};

NegSupportReport minimal_negative_support(const Configuration& C,
                                          const RatVec& v, int order = 8);

// Some v with A v = beta and minimal negative support.
RatVec find_minimal_exponent(const Configuration& C, const RatVec& beta,
                             int order = 8);

// Terms [v]_{u-} / [v+u]_{u+} x^{v+u} for u in N_v with |u_+| <= order.
// Throws NOT_MINIMAL.
FormalSeries phi_v(const Configuration& C, const RatVec& v, int order = 8);

// x^alpha d^m x^w = [w]_m x^{w+alpha-m}; the radius drops by E.spread().
FormalSeries apply_operator(const WeylElement& E, const FormalSeries& S);

struct ResidualReport {
  bool euler_exact = true;
  bool toric_vanishes = true;
  int radius = 0;  // toric residuals checked within this L1 radius
  int order = 0;
  std::string failure;

  bool ok() const { return euler_exact && toric_vanishes; }
};

ResidualReport check_solution(const Configuration& C, const RatVec& beta,
                              const FormalSeries& S);

// [x]_k = x (x-1) ... (x-k+1)
Rat falling_factorial(const Rat& x, int k);

}  // namespace ahg
