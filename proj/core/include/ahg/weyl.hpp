#pragma once

// Normally ordered elements of the Weyl algebra D = Q<x, d>, Euler
// substitution and contiguity operators with explicit D I_A certificates.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ahg/arith.hpp"
#include "ahg/cone.hpp"
#include "ahg/groebner.hpp"
#include "ahg/polynomial.hpp"

namespace ahg {

// sum c x^alpha d^m, every x to the left of every d.
class WeylElement {
 public:
  using Key = std::pair<Exponent, Exponent>;  // (alpha, m)

  WeylElement() = default;
  explicit WeylElement(std::size_t n) : n_(n) {}

  static WeylElement constant(std::size_t n, const Rat& c);
  static WeylElement monomial(Exponent alpha, Exponent m, const Rat& c = 1);
  static WeylElement x(std::size_t n, std::size_t j);
  static WeylElement d(std::size_t n, std::size_t j);
  static WeylElement theta(std::size_t n, std::size_t j);
  static WeylElement partial(const Exponent& m);

  std::size_t n() const { return n_; }
  const std::map<Key, Rat>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add_term(const Exponent& alpha, const Exponent& m, const Rat& c);

  // this * d^v, which needs no reordering.
  WeylElement times_partial(const Exponent& v) const;

  // Largest |alpha - m|_1 over the terms: how far a term moves exponents.
  int spread() const;

  std::string to_string() const;

  WeylElement& operator+=(const WeylElement& b);
  WeylElement& operator-=(const WeylElement& b);

  friend WeylElement operator+(const WeylElement& a, const WeylElement& b);
  friend WeylElement operator-(const WeylElement& a, const WeylElement& b);
  friend WeylElement operator*(const Rat& c, const WeylElement& a);
  friend WeylElement operator*(const WeylElement& a, const WeylElement& b);
  friend bool operator==(const WeylElement&, const WeylElement&) = default;

 private:
  std::size_t n_ = 0;
  std::map<Key, Rat> terms_;
};

inline WeylElement weyl_mul(const WeylElement& a, const WeylElement& b) {
  return a * b;
}

// b(sum_j a_1j theta_j, ..., sum_j a_dj theta_j), normally ordered.
WeylElement substitute_euler(const SPoly& b, const IntMatrix& A);
WeylElement substitute_euler(const FactoredPoly& b, const IntMatrix& A);

// s_i = sum_j a_ij theta_j.
WeylElement euler_operator(const IntMatrix& A, std::size_t i);

struct CertificateEntry {
  WeylElement cofactor;
  Binomial generator;  // d^plus - d^minus in I_A
};

struct Certificate {
  std::vector<CertificateEntry> pairs;

  // sum cofactor * (d^plus - d^minus)
  WeylElement total(std::size_t n) const;
};

// E with E d^u = b(s) d^v modulo D I_A, where certificate records
// b(s) d^v - E d^u.
struct SymmetryOperator {
  RatVec chi;
  WeylElement element;
  FactoredPoly b;
  Exponent u;  // shift_plus
  Exponent v;  // shift_minus
  Certificate certificate;
};

// The reduction algorithm with lowest variable d_i for each i with u_i > 0.
// Throws NOT_IN_B_IDEAL when b does not vanish on V(B_chi) (checked unless
// check_b is false) and RIGHT_FACTOR_MISSING when a term lacks d_i^{u_i}.
SymmetryOperator contiguity_operator(const Configuration& C, const RatVec& chi,
                                     const FactoredPoly& b, const Exponent& u,
                                     const Exponent& v, bool check_b = true);

// Nonnegative u, v with A u - A v = chi, small in total degree.
std::pair<Exponent, Exponent> shift_pair(const Configuration& C,
                                         const RatVec& chi);

bool verify_weight(const WeylElement& E, const IntMatrix& A, const RatVec& chi);
bool verify_certificate(const SymmetryOperator& op, const Configuration& C);

// P in D I_A: every x-coefficient of P (normal order) lies in I_A.
bool in_left_ideal(const WeylElement& P, const Configuration& C);

}  // namespace ahg
