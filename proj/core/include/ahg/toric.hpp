#pragma once

// The monomial ideals M_chi, their standard pairs, and the b-ideals B_chi
// described by prime components (A u, tau).

#include <optional>
#include <vector>

#include "ahg/arith.hpp"
#include "ahg/cone.hpp"
#include "ahg/groebner.hpp"
#include "ahg/polynomial.hpp"

namespace ahg {

class MonomialIdeal {
 public:
  MonomialIdeal() = default;
  // Keeps the minimal elements of `gens`, sorted.
  MonomialIdeal(std::size_t n, std::vector<Exponent> gens);

  std::size_t n() const { return n_; }
  const std::vector<Exponent>& generators() const { return gens_; }
  bool contains(const Exponent& m) const;
  bool is_unit() const;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Exponent> gens_;
};

// <d^u : A u in chi + NA>. Throws CHI_NOT_IN_LATTICE.
MonomialIdeal m_chi(const Configuration& C, const RatVec& chi);

struct StandardPair {
  Exponent u;
  std::size_t face = 0;

  friend auto operator<=>(const StandardPair&, const StandardPair&) = default;
};

// Standard pairs (u, tau) with tau ranging over the faces of `faces`.
std::vector<StandardPair> standard_pairs(const MonomialIdeal& M,
                                         const FaceLattice& faces);

// The affine subspace point + Q(A cap face).
struct BComponent {
  RatVec point;
  std::size_t face = 0;
};

struct BIdeal {
  RatVec chi;
  std::vector<BComponent> components;  // empty: the unit ideal

  bool is_unit() const { return components.empty(); }
};

BIdeal b_ideal(const Configuration& C, const RatVec& chi);

// beta in V(B).
bool v_b_member(const Configuration& C, const BIdeal& B, const RatVec& beta);
bool component_contains_point(const Configuration& C, const BComponent& c,
                              const RatVec& beta);

// A product of factors F_sigma - F_sigma(p), each through some component
// and nonzero at `point`, covering every component; nullopt when point lies
// in V(B).
std::optional<FactoredPoly> b_poly_avoiding(const Configuration& C,
                                            const BIdeal& B,
                                            const RatVec& point);

// b vanishes on V(B); exact for any polynomial.
bool vanishes_on(const Configuration& C, const std::vector<BComponent>& V,
                 const SPoly& b);

// inner is contained in outer as affine subspaces.
bool component_subset(const Configuration& C, const BComponent& inner,
                      const BComponent& outer);

// The maximal components of a union, in canonical order and form.
std::vector<BComponent> irredundant(const Configuration& C,
                                    std::vector<BComponent> components);

bool same_variety(const Configuration& C, const std::vector<BComponent>& a,
                  const std::vector<BComponent>& b);

std::vector<BComponent> translate(const std::vector<BComponent>& V,
                                  const RatVec& shift);

}  // namespace ahg
