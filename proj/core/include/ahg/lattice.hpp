#pragma once

// Exact integer linear algebra: Hermite and Smith forms, lattices given by
// canonical bases, kernels, quotient residues and the homogeneity functional.

#include <initializer_list>
#include <optional>
#include <vector>

#include "ahg/arith.hpp"

namespace ahg {

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix from_rows(const std::vector<IntVec>& rows);
  static IntMatrix from_columns(std::size_t rows,
                                const std::vector<IntVec>& columns);
  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Int& at(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  IntVec column(std::size_t j) const;
  IntVec row(std::size_t i) const;
  IntMatrix transpose() const;
  IntMatrix select_columns(const std::vector<int>& cols) const;

  // this * v
  IntVec apply(const IntVec& v) const;
  RatVec apply(const RatVec& v) const;
  IntVec apply(const Exponent& v) const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

// H = M * U with U unimodular and H in column Hermite normal form: lower
// echelon, positive pivots, entries left of a pivot reduced into [0, pivot),
// trailing zero columns. The column lattices of M and H coincide.
struct HermiteResult {
  IntMatrix H;
  IntMatrix U;
  std::size_t rank = 0;
};
HermiteResult hermite_normal_form(const IntMatrix& M);

// Nonzero elementary divisors d_1 | d_2 | ... of M.
IntVec smith_invariants(const IntMatrix& M);

std::size_t rational_rank(const IntMatrix& M);
std::size_t rational_rank(const std::vector<RatVec>& rows);

// Some x with M x = b over Q, if consistent.
std::optional<RatVec> rational_solve(const std::vector<RatVec>& M,
                                     const RatVec& b);

// Basis of {x in Q^cols : rows . x = 0}.
std::vector<RatVec> rational_kernel(const std::vector<RatVec>& rows,
                                    std::size_t cols);

// A full-rank sublattice of Z^m stored by its canonical Hermite basis.
class LatticeBasis {
 public:
  LatticeBasis() = default;
  explicit LatticeBasis(std::size_t ambient) : ambient_(ambient) {}

  // The lattice generated by arbitrary (possibly dependent) integer vectors.
  static LatticeBasis generated_by(std::size_t ambient,
                                   const std::vector<IntVec>& generators);
  static LatticeBasis full(std::size_t ambient);

  std::size_t ambient() const { return ambient_; }
  std::size_t rank() const { return basis_.size(); }
  const std::vector<IntVec>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivot_rows() const { return pivots_; }

  // Integer coordinates c with sum c_i b_i = v, or nullopt when v is not in
  // the lattice.
  std::optional<IntVec> coordinates(const RatVec& v) const;
  bool contains(const RatVec& v) const { return coordinates(v).has_value(); }
  bool contains(const IntVec& v) const { return contains(to_rat(v)); }

  // Canonical coset representative of v modulo the lattice: the pivot
  // coordinate against each basis vector is reduced into [0, 1).
  RatVec reduce(RatVec v) const;

  IntVec combine(const IntVec& coords) const;

  // The basis as the columns of an ambient x rank matrix.
  IntMatrix as_matrix() const;

  friend bool operator==(const LatticeBasis& a, const LatticeBasis& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  std::size_t ambient_ = 0;
  std::vector<IntVec> basis_;
  std::vector<std::size_t> pivots_;
};

std::optional<IntVec> lattice_member(const LatticeBasis& L, const RatVec& v);

// Saturated basis of {u in Z^n : A u = 0}.
LatticeBasis kernel_lattice(const IntMatrix& A);

// Q(generators) intersected with `within`, i.e. the saturation of the
// lattice generated by `generators` inside `within`.
LatticeBasis saturate_within(const LatticeBasis& within,
                             const std::vector<IntVec>& generators);

// Integer c with M c = t, if one exists.
std::optional<IntVec> solve_integer(const IntMatrix& M, const RatVec& t);

struct QuotientResidues {
  LatticeBasis big;
  LatticeBasis small;
  std::vector<RatVec> representatives;  // canonical, sorted
  Int index;
};
QuotientResidues quotient_representatives(const LatticeBasis& big,
                                          const LatticeBasis& small);

struct HomogeneityWitness {
  RatVec h;

  Rat operator()(const RatVec& v) const { return dot(h, v); }
};
HomogeneityWitness homogeneity_witness(const IntMatrix& A);

}  // namespace ahg
