#pragma once

// Buchberger's algorithm specialised to pure difference binomials, and the
// toric ideal I_A computed from a kernel lattice basis by saturation.

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "ahg/arith.hpp"
#include "ahg/lattice.hpp"

namespace ahg {

// The polynomial d^plus - d^minus.
struct Binomial {
  Exponent plus;
  Exponent minus;

  friend bool operator==(const Binomial&, const Binomial&) = default;
  friend auto operator<=>(const Binomial&, const Binomial&) = default;
};

// Graded reverse lexicographic order. `variables` lists the variables from
// highest to lowest; the last entry is the lowest variable.
class TermOrder {
 public:
  static TermOrder grevlex(std::size_t n);
  static TermOrder grevlex_lowest(std::size_t n, std::size_t lowest);

  // a > b
  bool greater(const Exponent& a, const Exponent& b) const;
  const std::vector<std::size_t>& variables() const { return variables_; }

  friend auto operator<=>(const TermOrder&, const TermOrder&) = default;

 private:
  std::vector<std::size_t> variables_;
};

// Reduced Groebner basis of a binomial ideal. Every element is oriented so
// that `plus` is its leading monomial.
class GroebnerBasis {
 public:
  GroebnerBasis() = default;
  GroebnerBasis(TermOrder order, std::vector<Binomial> elements)
      : order_(std::move(order)), elements_(std::move(elements)) {}

  const TermOrder& order() const { return order_; }
  const std::vector<Binomial>& elements() const { return elements_; }

  // One rewriting step d^m -> d^(m - lead + trail), recorded per step.
  struct Step {
    Exponent quotient;  // m - lead(g)
    std::size_t element;
  };
  // Normal form of the monomial d^m; `steps` (optional) receives the trace.
  Exponent normal_form(Exponent m, std::vector<Step>* steps = nullptr) const;

  bool is_zero_mod(const Binomial& b) const {
    return normal_form(b.plus) == normal_form(b.minus);
  }

 private:
  TermOrder order_;
  std::vector<Binomial> elements_;
};

GroebnerBasis buchberger(const std::vector<Binomial>& generators,
                         const TermOrder& order);

// I_A with lazily computed, cached Groebner bases. Safe for concurrent use.
class ToricIdeal {
 public:
  explicit ToricIdeal(IntMatrix A);

  const IntMatrix& matrix() const { return A_; }

  // Reduced Groebner basis for grevlex with the last variable lowest; these
  // binomials are the stored generators of I_A.
  const std::vector<Binomial>& generators() const;

  const GroebnerBasis& groebner(const TermOrder& order) const;

 private:
  IntMatrix A_;
  mutable std::mutex mutex_;
  mutable std::map<TermOrder, std::unique_ptr<GroebnerBasis>> cache_;
  mutable std::vector<Binomial> generators_;
  mutable bool generators_ready_ = false;
};

ToricIdeal toric_ideal(const IntMatrix& A);

}  // namespace ahg
