#pragma once

// Isomorphism classes of A-hypergeometric systems: E-profiles, witnesses,
// the normal and monomial-curve criteria, class enumeration, Laurent faces
// and the normalized volume.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ahg/arith.hpp"
#include "ahg/cone.hpp"
#include "ahg/semigroup.hpp"
#include "ahg/series.hpp"
#include "ahg/toric.hpp"
#include "ahg/weyl.hpp"

namespace ahg {

// E_tau(beta) for every face, in face-lattice order.
struct EProfile {
  std::vector<ETauSet> sets;

  // Canonical serialization, usable as a class key.
  std::string key() const;
  friend bool operator==(const EProfile& a, const EProfile& b);
};

EProfile e_profile(const Configuration& C, const Parameter& beta);

struct IsoDecision {
  bool isomorphic = false;
  std::optional<std::size_t> differing_face;  // first face where E differs
};

IsoDecision decide_isomorphic(const Configuration& C, const Parameter& beta,
                              const Parameter& beta2);
bool isomorphic(const Configuration& C, const Parameter& beta,
                const Parameter& beta2);

// V(B_{-chi,chi}) = (V(B_chi) - chi) u V(B_{-chi}), irredundant.
std::vector<BComponent> b_minus_plus(const Configuration& C, const RatVec& chi);

struct IsoWitness {
  RatVec chi;
  FactoredPoly p_plus;   // in B_chi, nonzero at beta + chi
  FactoredPoly p_minus;  // in B_{-chi}, nonzero at beta
  SymmetryOperator P_plus;
  SymmetryOperator P_minus;
  Rat scalar;
  bool weights_ok = false;
  bool certificates_ok = false;
  // Series checks on phi_v with A v = beta.
  int order = 0;
  RatVec exponent;
  ResidualReport forward;  // P_plus phi_v against H_A(beta + chi)
  bool composition_ok = false;  // P_minus P_plus phi_v = scalar phi_v
  std::vector<std::string> diagnostics;
};

// Throws NOT_ISOMORPHIC or WITNESS_FAILURE.
IsoWitness iso_witness(const Configuration& C, const Parameter& beta,
                       const Parameter& beta2, int order = 8,
                       bool check_series = true);

// Throws NOT_NORMAL.
bool classify_normal(const Configuration& C, const Parameter& beta,
                     const Parameter& beta2);

struct HoleSet {
  std::vector<IntVec> holes;  // sorted
};

// Throws NOT_CURVE.
void require_curve(const Configuration& C);
HoleSet curve_holes(const Configuration& C);
bool classify_curve(const Configuration& C, const Parameter& beta,
                    const Parameter& beta2);
bool classify_curve(const Configuration& C, const HoleSet& H,
                    const Parameter& beta, const Parameter& beta2);
// 1: NA, 2: only the a_1 facet value in its semigroup, 3: only the a_n one,
// 4: neither, 5: a hole. 0 outside ZA.
int curve_part(const Configuration& C, const Parameter& beta);

struct ParameterClass {
  std::string key;
  Parameter representative;  // lexicographically least member
  std::size_t members = 0;
  EProfile profile;
};

struct ClassEnumeration {
  std::vector<ParameterClass> classes;  // sorted by representative
  std::size_t points = 0;
};

struct EnumerateOptions {
  std::optional<RatVec> offset;  // added to every lattice point
  bool only_NA = false;
  unsigned threads = 0;  // 0: AHG_THREADS or hardware concurrency
};

ClassEnumeration enumerate_classes(const Configuration& C,
                                   const std::vector<std::pair<long, long>>& box,
                                   const EnumerateOptions& options = {});

struct LaurentFaces {
  std::vector<std::size_t> faces;
  std::size_t count = 0;
};

LaurentFaces laurent_solution_faces(const Configuration& C, const Parameter& beta);

// Normalized volume of conv(A) with respect to ZA, by pyramids over the
// facets missing the apex column.
Int normalized_volume(const Configuration& C, std::size_t apex = 0);

}  // namespace ahg
