#pragma once

// Membership in NA and NA + Z(A cap tau), the invariants E_tau(beta),
// normality, facet-value semigroups and resonance flags.

#include <optional>
#include <vector>

#include "ahg/arith.hpp"
#include "ahg/cone.hpp"

namespace ahg {

using Parameter = RatVec;

struct ETauSet {
  std::size_t face = 0;
  std::vector<RatVec> residues;  // canonical, sorted

  bool contains_zero() const;
  friend bool operator==(const ETauSet&, const ETauSet&) = default;
};

struct NumericalSemigroup {
  std::vector<long> generators;  // sorted, distinct, nonzero
  long frobenius = -1;
  std::vector<long> gaps;

  bool contains(const Rat& x) const;
  bool contains(long x) const;
};

// Some u in N^n with A u = gamma.
std::optional<Exponent> in_NA(const Configuration& C, const RatVec& gamma);

// gamma in NA + Z(A cap tau).
bool in_NA_mod_face(const Configuration& C, std::size_t face,
                    const RatVec& gamma);

ETauSet e_tau(const Configuration& C, std::size_t face, const Parameter& beta);

bool is_normal(const Configuration& C);

NumericalSemigroup numerical_semigroup(std::vector<long> generators);
NumericalSemigroup facet_value_semigroup(const Configuration& C,
                                         std::size_t facet);

struct Resonance {
  std::vector<bool> integral;  // F_sigma(beta) in Z
  std::vector<bool> natural;   // F_sigma(beta) in N
  bool nonresonant = false;
  bool semi_nonresonant = false;
};
Resonance resonance(const Configuration& C, const Parameter& beta);

}  // namespace ahg
