#include "ahg/cone.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "ahg/error.hpp"

namespace ahg {

bool Face::contains_column(int j) const {
  return std::binary_search(columns.begin(), columns.end(), j);
}

std::optional<std::size_t> FaceLattice::find(const std::vector<int>& columns) const {
  for (std::size_t i = 0; i < faces.size(); ++i) {
    if (faces[i].columns == columns) return i;
  }
  return std::nullopt;
}

namespace {

// Calls fn on every k-subset of {0..n-1} in lexicographic order.
template <typename Fn>
void for_each_subset(int n, int k, Fn&& fn) {
  std::vector<int> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  if (k > n) return;
  while (true) {
    fn(idx);
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::vector<int> intersect(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

bool subset_of(const std::vector<int>& a, const std::vector<int>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

std::vector<SupportFunction> facets(const IntMatrix& A) {
  std::vector<IntVec> cols;
  for (std::size_t j = 0; j < A.cols(); ++j) cols.push_back(A.column(j));
  return facets(A, LatticeBasis::generated_by(A.rows(), cols));
}

std::vector<SupportFunction> facets(const IntMatrix& A,
                                    const LatticeBasis& lattice) {
  const std::size_t d = A.rows(), n = A.cols();
  if (rational_rank(A) < d) {
    throw Error(ErrorCode::kNotFullDim, "matrix rank is below the row count");
  }
  std::vector<RatVec> columns;
  for (std::size_t j = 0; j < n; ++j) columns.push_back(to_rat(A.column(j)));

  std::map<std::vector<int>, SupportFunction> found;
  for_each_subset(static_cast<int>(n), static_cast<int>(d) - 1,
                  [&](const std::vector<int>& subset) {
    std::vector<RatVec> rows;
    for (int j : subset) rows.push_back(columns[j]);
    if (rational_rank(rows) + 1 != d && !rows.empty()) return;
    const auto normal = rational_kernel(rows, d);
    if (normal.size() != 1) return;
    RatVec f = normal.front();
    bool pos = false, neg = false;
    std::vector<int> zeros;
    for (std::size_t j = 0; j < n; ++j) {
      const Rat v = dot(f, columns[j]);
      if (v > 0) pos = true;
      if (v < 0) neg = true;
      if (v == 0) zeros.push_back(static_cast<int>(j));
    }
    if (pos && neg) return;
    if (neg) f = scale(f, Rat(-1));
    if (found.count(zeros)) return;
    // Scale so that f takes coprime integer values on the lattice basis.
    Int den_lcm = 1, num_gcd = 0;
    for (const auto& b : lattice.basis()) {
      const Rat v = dot(f, b);
      mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), v.get_den_mpz_t());
    }
    for (const auto& b : lattice.basis()) {
      const Rat v = dot(f, b) * den_lcm;
      mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), v.get_num_mpz_t());
    }
    f = scale(f, make_rat(den_lcm, num_gcd));
    found.emplace(zeros, SupportFunction{std::move(f), zeros});
  });

  std::vector<SupportFunction> out;
  for (auto& [zeros, sf] : found) out.push_back(std::move(sf));
  return out;
}

FaceLattice face_lattice(const IntMatrix& A,
                         const std::vector<SupportFunction>& facets) {
  std::vector<int> all(A.cols());
  std::iota(all.begin(), all.end(), 0);
  std::set<std::vector<int>> seen{all};
  std::vector<std::vector<int>> queue{all};
  for (std::size_t q = 0; q < queue.size(); ++q) {
    for (const auto& sf : facets) {
      auto next = intersect(queue[q], sf.zero_columns);
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }

  FaceLattice L;
  for (const auto& cols : seen) {
    Face face;
    face.columns = cols;
    face.dim = rational_rank(A.select_columns(cols));
    for (std::size_t s = 0; s < facets.size(); ++s) {
      if (subset_of(cols, facets[s].zero_columns)) {
        face.incident_facets.push_back(static_cast<int>(s));
      }
    }
    L.faces.push_back(std::move(face));
  }
  std::sort(L.faces.begin(), L.faces.end(), [](const Face& a, const Face& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    return a.columns < b.columns;
  });
  const std::size_t m = L.faces.size();
  L.contains.assign(m, std::vector<bool>(m, false));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      L.contains[i][j] = subset_of(L.faces[j].columns, L.faces[i].columns);
    }
  }
  return L;
}

FaceLattice face_lattice(const IntMatrix& A) { return face_lattice(A, facets(A)); }

RatVec positive_functional(const FaceLattice& lattice,
                           const std::vector<SupportFunction>& facets,
                           std::size_t face) {
  const Face& f = lattice.faces[face];
  if (f.incident_facets.empty()) {
    throw Error(ErrorCode::kWholeCone, "no facet contains the whole cone");
  }
  RatVec g(facets.front().f.size());
  for (int s : f.incident_facets) g = add(g, facets[s].f);
  return g;
}

Configuration::Configuration(IntMatrix A) : A_(std::move(A)) {
  if (A_.rows() == 0 || A_.cols() < A_.rows()) {
    throw Error(ErrorCode::kNotFullDim, "need d >= 1 rows and n >= d columns");
  }
  h_ = homogeneity_witness(A_);
  if (rational_rank(A_) < A_.rows()) {
    throw Error(ErrorCode::kNotFullDim, "matrix rank is below the row count");
  }
  std::vector<IntVec> int_columns;
  for (std::size_t j = 0; j < n(); ++j) {
    int_columns.push_back(A_.column(j));
    columns_.push_back(to_rat(int_columns.back()));
  }
  ZA_ = LatticeBasis::generated_by(d(), int_columns);
  facets_ = ahg::facets(A_, ZA_);
  faces_ = face_lattice(A_, facets_);

  for (std::size_t t = 0; t < faces_.size(); ++t) {
    const Face& face = faces_.faces[t];
    FaceData fd;
    std::vector<IntVec> gens;
    for (int j : face.columns) gens.push_back(int_columns[j]);
    fd.span = LatticeBasis::generated_by(d(), gens);
    fd.saturated = saturate_within(ZA_, gens);
    auto q = quotient_representatives(fd.saturated, fd.span);
    fd.residues = std::move(q.representatives);
    fd.index = q.index;
    if (!face.incident_facets.empty()) {
      fd.positive = positive_functional(faces_, facets_, t);
    }
    for (std::size_t j = 0; j < n(); ++j) {
      if (!face.contains_column(static_cast<int>(j))) {
        fd.outside.push_back(static_cast<int>(j));
      }
    }
    fd.incident = face.incident_facets;
    fd.incident_on_basis = IntMatrix(fd.incident.size(), ZA_.rank());
    for (std::size_t r = 0; r < fd.incident.size(); ++r) {
      for (std::size_t k = 0; k < ZA_.rank(); ++k) {
        const Rat v = dot(facets_[fd.incident[r]].f, ZA_.basis()[k]);
        fd.incident_on_basis.at(r, k) = v.get_num();
      }
    }
    face_data_.push_back(std::move(fd));
  }
  toric_ = std::make_unique<ToricIdeal>(A_);
}

Configuration::~Configuration() = default;

}  // namespace ahg
