#pragma once

// Facets and faces of the cone Q>=0 A, and the per-matrix data every other
// module works from.

#include <memory>
#include <optional>
#include <vector>

#include "ahg/arith.hpp"
#include "ahg/groebner.hpp"
#include "ahg/lattice.hpp"

namespace ahg {

// Primitive integral support function of a facet: F(x) = f . x, integral
// with F(ZA) = Z, nonnegative on every column, zero exactly on
// zero_columns.
struct SupportFunction {
  RatVec f;
  std::vector<int> zero_columns;

  Rat operator()(const RatVec& x) const { return dot(f, x); }
  Rat operator()(const IntVec& x) const { return dot(f, x); }
};

struct Face {
  std::vector<int> columns;  // sorted column indices (0-based)
  std::size_t dim = 0;
  std::vector<int> incident_facets;

  bool contains_column(int j) const;
};

struct FaceLattice {
  std::vector<Face> faces;  // ordered by dim, then columns
  // contains[i][j]: face j is a subface of face i.
  std::vector<std::vector<bool>> contains;

  std::size_t size() const { return faces.size(); }
  std::optional<std::size_t> find(const std::vector<int>& columns) const;
  std::size_t origin() const { return 0; }
  std::size_t whole() const { return faces.size() - 1; }
};

// Facets normalized to be primitive with respect to `lattice` (default: the
// lattice generated by the columns). Ordered by zero_columns.
std::vector<SupportFunction> facets(const IntMatrix& A);
std::vector<SupportFunction> facets(const IntMatrix& A,
                                    const LatticeBasis& lattice);

FaceLattice face_lattice(const IntMatrix& A,
                         const std::vector<SupportFunction>& facets);
FaceLattice face_lattice(const IntMatrix& A);

// Sum of the support functions of the facets containing the face.
// Throws WHOLE_CONE for the whole cone.
RatVec positive_functional(const FaceLattice& lattice,
                           const std::vector<SupportFunction>& facets,
                           std::size_t face);

// Lattices attached to a face tau.
struct FaceData {
  LatticeBasis span;       // Z(A cap tau)
  LatticeBasis saturated;  // Q(A cap tau) cap ZA
  std::vector<RatVec> residues;  // saturated / span, canonical
  Int index;
  std::optional<RatVec> positive;  // g_tau; absent for the whole cone
  std::vector<int> outside;        // columns not in tau
  // F_sigma(b_k) for incident facets sigma and the ZA basis b_k.
  IntMatrix incident_on_basis;
  std::vector<int> incident;
};

// A validated homogeneous full-rank matrix together with its lattice, cone
// and toric ideal. Immutable after construction and safe to share between
// threads.
class Configuration {
 public:
  explicit Configuration(IntMatrix A);
  ~Configuration();
  Configuration(const Configuration&) = delete;
  Configuration& operator=(const Configuration&) = delete;

  const IntMatrix& matrix() const { return A_; }
  std::size_t d() const { return A_.rows(); }
  std::size_t n() const { return A_.cols(); }

  const RatVec& column(std::size_t j) const { return columns_[j]; }
  const HomogeneityWitness& homogeneity() const { return h_; }
  const LatticeBasis& lattice() const { return ZA_; }
  const std::vector<SupportFunction>& facets() const { return facets_; }
  const FaceLattice& faces() const { return faces_; }
  const FaceData& face_data(std::size_t face) const { return face_data_[face]; }
  const ToricIdeal& toric() const { return *toric_; }

  Rat degree(const RatVec& x) const { return h_(x); }
  bool in_lattice(const RatVec& x) const { return ZA_.contains(x); }

 private:
  IntMatrix A_;
  std::vector<RatVec> columns_;
  HomogeneityWitness h_;
  LatticeBasis ZA_;
  std::vector<SupportFunction> facets_;
  FaceLattice faces_;
  std::vector<FaceData> face_data_;
  std::unique_ptr<ToricIdeal> toric_;
};

}  // namespace ahg
