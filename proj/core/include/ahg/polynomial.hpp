#pragma once

// Polynomials in the Euler symbols s_1..s_d, dense enough for b-polynomials.

#include <map>
#include <string>
#include <vector>

#include "ahg/arith.hpp"

namespace ahg {

// coeffs . s + constant
struct LinearForm {
  RatVec coeffs;
  Rat constant;

  Rat operator()(const RatVec& s) const { return dot(coeffs, s) + constant; }
  // The form s -> L(s + chi).
  LinearForm shifted(const RatVec& chi) const;
  std::string to_string() const;

  friend bool operator==(const LinearForm&, const LinearForm&) = default;
};

class SPoly {
 public:
  SPoly() = default;
  explicit SPoly(std::size_t nvars) : nvars_(nvars) {}
  static SPoly constant(std::size_t nvars, const Rat& c);
  static SPoly from_linear(const LinearForm& L);

  std::size_t nvars() const { return nvars_; }
  const std::map<Exponent, Rat>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int degree() const;

  void add_term(const Exponent& e, const Rat& c);
  Rat operator()(const RatVec& s) const;

  friend SPoly operator+(const SPoly& a, const SPoly& b);
  friend SPoly operator-(const SPoly& a, const SPoly& b);
  friend SPoly operator*(const SPoly& a, const SPoly& b);
  friend bool operator==(const SPoly&, const SPoly&) = default;

 private:
  std::size_t nvars_ = 0;
  std::map<Exponent, Rat> terms_;
};

// scalar * product of linear factors.
struct FactoredPoly {
  std::size_t nvars = 0;
  Rat scalar = 1;
  std::vector<LinearForm> factors;

  static FactoredPoly one(std::size_t nvars) { return FactoredPoly{nvars, 1, {}}; }

  Rat operator()(const RatVec& s) const;
  FactoredPoly shifted(const RatVec& chi) const;
  SPoly expand() const;
  int degree() const { return static_cast<int>(factors.size()); }
  std::string to_string() const;

  friend FactoredPoly operator*(const FactoredPoly& a, const FactoredPoly& b);
};

}  // namespace ahg
