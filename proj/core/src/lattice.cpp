#include "ahg/lattice.hpp"

#include <algorithm>
#include <cassert>
#include <set>

#include "ahg/error.hpp"

namespace ahg {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) {
      throw Error(ErrorCode::kInvalidArgument, "ragged matrix rows");
    }
    for (long x : r) data_.emplace_back(x);
  }
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVec>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  IntMatrix M(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) {
      throw Error(ErrorCode::kInvalidArgument, "ragged matrix rows");
    }
    for (std::size_t j = 0; j < cols; ++j) M.at(i, j) = rows[i][j];
  }
  return M;
}

IntMatrix IntMatrix::from_columns(std::size_t rows,
                                  const std::vector<IntVec>& columns) {
  IntMatrix M(rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    assert(columns[j].size() == rows);
    for (std::size_t i = 0; i < rows; ++i) M.at(i, j) = columns[j][i];
  }
  return M;
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix M(n, n);
  for (std::size_t i = 0; i < n; ++i) M.at(i, i) = 1;
  return M;
}

IntVec IntMatrix::column(std::size_t j) const {
  IntVec v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = at(i, j);
  return v;
}

IntVec IntMatrix::row(std::size_t i) const {
  return IntVec(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix T(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) T.at(j, i) = at(i, j);
  }
  return T;
}

IntMatrix IntMatrix::select_columns(const std::vector<int>& cols) const {
  IntMatrix M(rows_, cols.size());
  for (std::size_t k = 0; k < cols.size(); ++k) {
    for (std::size_t i = 0; i < rows_; ++i) M.at(i, k) = at(i, cols[k]);
  }
  return M;
}

IntVec IntMatrix::apply(const IntVec& v) const {
  assert(v.size() == cols_);
  IntVec out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out[i] += at(i, j) * v[j];
  }
  return out;
}

RatVec IntMatrix::apply(const RatVec& v) const {
  assert(v.size() == cols_);
  RatVec out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out[i] += at(i, j) * v[j];
  }
  return out;
}

IntVec IntMatrix::apply(const Exponent& v) const {
  assert(v.size() == cols_);
  IntVec out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (v[j] != 0) out[i] += at(i, j) * v[j];
    }
  }
  return out;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  assert(a.cols_ == b.rows_);
  IntMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (a.at(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        c.at(i, j) += a.at(i, k) * b.at(k, j);
      }
    }
  }
  return c;
}

namespace {

Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

// Column operations applied simultaneously to H and U.
struct ColumnOps {
  IntMatrix& H;
  IntMatrix& U;

  void axpy(std::size_t dst, std::size_t src, const Int& q) {
    if (q == 0) return;
    for (std::size_t i = 0; i < H.rows(); ++i) H.at(i, dst) -= q * H.at(i, src);
    for (std::size_t i = 0; i < U.rows(); ++i) U.at(i, dst) -= q * U.at(i, src);
  }
  void swap(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < H.rows(); ++i) std::swap(H.at(i, a), H.at(i, b));
    for (std::size_t i = 0; i < U.rows(); ++i) std::swap(U.at(i, a), U.at(i, b));
  }
  void negate(std::size_t c) {
    for (std::size_t i = 0; i < H.rows(); ++i) H.at(i, c) = -H.at(i, c);
    for (std::size_t i = 0; i < U.rows(); ++i) U.at(i, c) = -U.at(i, c);
  }
};

struct HermiteWork {
  HermiteResult result;
  std::vector<std::size_t> pivot_rows;
};

HermiteWork hermite_work(const IntMatrix& M) {
  HermiteWork w;
  w.result.H = M;
  w.result.U = IntMatrix::identity(M.cols());
  IntMatrix& H = w.result.H;
  ColumnOps ops{H, w.result.U};
  const std::size_t m = M.cols();
  std::size_t pc = 0;
  for (std::size_t r = 0; r < M.rows() && pc < m; ++r) {
    while (true) {
      std::size_t best = m;
      for (std::size_t c = pc; c < m; ++c) {
        if (H.at(r, c) == 0) continue;
        if (best == m || abs(H.at(r, c)) < abs(H.at(r, best))) best = c;
      }
      if (best == m) break;
      ops.swap(pc, best);
      bool done = true;
      for (std::size_t c = pc + 1; c < m; ++c) {
        if (H.at(r, c) == 0) continue;
        ops.axpy(c, pc, floor_div(H.at(r, c), H.at(r, pc)));
        if (H.at(r, c) != 0) done = false;
      }
      if (done) break;
    }
    if (H.at(r, pc) == 0) continue;
    if (H.at(r, pc) < 0) ops.negate(pc);
    for (std::size_t c = 0; c < pc; ++c) {
      ops.axpy(c, pc, floor_div(H.at(r, c), H.at(r, pc)));
    }
    w.pivot_rows.push_back(r);
    ++pc;
  }
  w.result.rank = pc;
  return w;
}

std::vector<std::vector<Rat>> to_rat_rows(const IntMatrix& M) {
  std::vector<RatVec> rows(M.rows(), RatVec(M.cols()));
  for (std::size_t i = 0; i < M.rows(); ++i) {
    for (std::size_t j = 0; j < M.cols(); ++j) rows[i][j] = M.at(i, j);
  }
  return rows;
}

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(std::vector<RatVec>& rows, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);
    const Rat inv = 1 / rows[r][c];
    for (auto& x : rows[r]) x *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const Rat f = rows[i][c];
      for (std::size_t k = 0; k < rows[i].size(); ++k) {
        rows[i][k] -= f * rows[r][k];
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

HermiteResult hermite_normal_form(const IntMatrix& M) {
  return hermite_work(M).result;
}

IntVec smith_invariants(const IntMatrix& M) {
  IntMatrix S = M;
  const std::size_t rows = S.rows(), cols = S.cols();
  IntVec out;
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    while (true) {
      std::size_t bi = rows, bj = cols;
      for (std::size_t i = t; i < rows; ++i) {
        for (std::size_t j = t; j < cols; ++j) {
          if (S.at(i, j) == 0) continue;
          if (bi == rows || abs(S.at(i, j)) < abs(S.at(bi, bj))) {
            bi = i;
            bj = j;
          }
        }
      }
      if (bi == rows) return out;
      for (std::size_t j = 0; j < cols; ++j) std::swap(S.at(t, j), S.at(bi, j));
      for (std::size_t i = 0; i < rows; ++i) std::swap(S.at(i, t), S.at(i, bj));
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        const Int q = floor_div(S.at(i, t), S.at(t, t));
        if (q != 0) {
          for (std::size_t j = t; j < cols; ++j) S.at(i, j) -= q * S.at(t, j);
        }
        if (S.at(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        const Int q = floor_div(S.at(t, j), S.at(t, t));
        if (q != 0) {
          for (std::size_t i = t; i < rows; ++i) S.at(i, j) -= q * S.at(i, t);
        }
        if (S.at(t, j) != 0) clean = false;
      }
      if (!clean) continue;
      // Enforce d_t | every remaining entry.
      bool divisible = true;
      for (std::size_t i = t + 1; i < rows && divisible; ++i) {
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (S.at(i, j) % S.at(t, t) != 0) {
            for (std::size_t k = t; k < cols; ++k) S.at(t, k) += S.at(i, k);
            divisible = false;
            break;
          }
        }
      }
      if (divisible) break;
    }
    out.push_back(abs(S.at(t, t)));
  }
  return out;
}

std::size_t rational_rank(const IntMatrix& M) {
  auto rows = to_rat_rows(M);
  return rref(rows, M.cols()).size();
}

std::size_t rational_rank(const std::vector<RatVec>& rows) {
  if (rows.empty()) return 0;
  auto copy = rows;
  return rref(copy, rows.front().size()).size();
}

std::optional<RatVec> rational_solve(const std::vector<RatVec>& M,
                                     const RatVec& b) {
  assert(M.size() == b.size());
  if (M.empty()) return RatVec{};
  const std::size_t cols = M.front().size();
  std::vector<RatVec> aug = M;
  for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b[i]);
  const auto pivots = rref(aug, cols + 1);
  if (!pivots.empty() && pivots.back() == cols) return std::nullopt;
  RatVec x(cols);
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug[r][cols];
  return x;
}

std::vector<RatVec> rational_kernel(const std::vector<RatVec>& rows,
                                    std::size_t cols) {
  auto work = rows;
  const auto pivots = rref(work, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<RatVec> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    RatVec v(cols);
    v[f] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -work[r][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

LatticeBasis LatticeBasis::generated_by(std::size_t ambient,
                                        const std::vector<IntVec>& generators) {
  LatticeBasis L(ambient);
  if (generators.empty()) return L;
  const auto w = hermite_work(IntMatrix::from_columns(ambient, generators));
  for (std::size_t k = 0; k < w.result.rank; ++k) {
    L.basis_.push_back(w.result.H.column(k));
  }
  L.pivots_ = w.pivot_rows;
  return L;
}

LatticeBasis LatticeBasis::full(std::size_t ambient) {
  std::vector<IntVec> gens;
  for (std::size_t i = 0; i < ambient; ++i) {
    IntVec e(ambient);
    e[i] = 1;
    gens.push_back(std::move(e));
  }
  return generated_by(ambient, gens);
}

std::optional<IntVec> LatticeBasis::coordinates(const RatVec& v) const {
  assert(v.size() == ambient_);
  auto iv = to_int(v);
  if (!iv) return std::nullopt;
  IntVec rest = std::move(*iv);
  IntVec coords(basis_.size());
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    const std::size_t r = pivots_[k];
    const Int& p = basis_[k][r];
    if (rest[r] % p != 0) return std::nullopt;
    coords[k] = rest[r] / p;
    if (coords[k] == 0) continue;
    for (std::size_t i = r; i < ambient_; ++i) rest[i] -= coords[k] * basis_[k][i];
  }
  if (!is_zero(rest)) return std::nullopt;
  return coords;
}

RatVec LatticeBasis::reduce(RatVec v) const {
  assert(v.size() == ambient_);
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    const std::size_t r = pivots_[k];
    const Int q = floor_of(Rat(v[r] / basis_[k][r]));
    if (q == 0) continue;
    for (std::size_t i = r; i < ambient_; ++i) v[i] -= q * basis_[k][i];
  }
  return v;
}

IntVec LatticeBasis::combine(const IntVec& coords) const {
  assert(coords.size() == basis_.size());
  IntVec out(ambient_);
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    if (coords[k] == 0) continue;
    for (std::size_t i = 0; i < ambient_; ++i) out[i] += coords[k] * basis_[k][i];
  }
  return out;
}

IntMatrix LatticeBasis::as_matrix() const {
  return IntMatrix::from_columns(ambient_, basis_);
}

std::optional<IntVec> lattice_member(const LatticeBasis& L, const RatVec& v) {
  return L.coordinates(v);
}

LatticeBasis kernel_lattice(const IntMatrix& A) {
  const auto h = hermite_normal_form(A);
  std::vector<IntVec> gens;
  for (std::size_t k = h.rank; k < A.cols(); ++k) gens.push_back(h.U.column(k));
  return LatticeBasis::generated_by(A.cols(), gens);
}

LatticeBasis saturate_within(const LatticeBasis& within,
                             const std::vector<IntVec>& generators) {
  const std::size_t r = within.rank();
  std::vector<IntVec> coords;
  for (const auto& g : generators) {
    auto c = within.coordinates(to_rat(g));
    if (!c) {
      throw Error(ErrorCode::kNotSublattice,
                  "generator outside the enclosing lattice");
    }
    coords.push_back(std::move(*c));
  }
  LatticeBasis sat_coords;
  if (coords.empty()) {
    sat_coords = LatticeBasis(r);
  } else {
    // (Q C) cap Z^r = kernel of the integer annihilator of C.
    const IntMatrix Ct = IntMatrix::from_columns(r, coords).transpose();
    const LatticeBasis annihilator = kernel_lattice(Ct);
    if (annihilator.rank() == 0) {
      sat_coords = LatticeBasis::full(r);
    } else {
      sat_coords = kernel_lattice(IntMatrix::from_rows(annihilator.basis()));
    }
  }
  std::vector<IntVec> ambient_gens;
  for (const auto& b : sat_coords.basis()) ambient_gens.push_back(within.combine(b));
  return LatticeBasis::generated_by(within.ambient(), ambient_gens);
}

std::optional<IntVec> solve_integer(const IntMatrix& M, const RatVec& t) {
  assert(t.size() == M.rows());
  const auto w = hermite_work(M);
  const IntMatrix& H = w.result.H;
  IntVec y(M.cols());
  std::size_t next = 0;
  for (std::size_t r = 0; r < M.rows(); ++r) {
    Rat s = t[r];
    for (std::size_t k = 0; k < next; ++k) s -= H.at(r, k) * y[k];
    if (next < w.pivot_rows.size() && w.pivot_rows[next] == r) {
      const Rat q = s / H.at(r, next);
      if (!is_integral(q)) return std::nullopt;
      y[next] = q.get_num();
      ++next;
    } else if (s != 0) {
      return std::nullopt;
    }
  }
  return w.result.U.apply(y);
}

QuotientResidues quotient_representatives(const LatticeBasis& big,
                                          const LatticeBasis& small) {
  if (big.ambient() != small.ambient()) {
    throw Error(ErrorCode::kInvalidArgument, "ambient dimensions differ");
  }
  std::vector<IntVec> coords;
  for (const auto& b : small.basis()) {
    auto c = big.coordinates(to_rat(b));
    if (!c) {
      throw Error(ErrorCode::kNotSublattice,
                  "small lattice is not contained in big lattice");
    }
    coords.push_back(std::move(*c));
  }
  if (big.rank() != small.rank()) {
    throw Error(ErrorCode::kInvalidArgument,
                "quotient of lattices of different rank is infinite");
  }
  QuotientResidues q{big, small, {}, 1};
  const std::size_t r = big.rank();
  if (r == 0) {
    q.representatives.push_back(RatVec(big.ambient()));
    return q;
  }
  const IntMatrix C = IntMatrix::from_columns(r, coords);
  for (const auto& e : smith_invariants(C)) q.index *= e;

  const auto h = hermite_normal_form(C);
  IntVec box(r);
  for (std::size_t k = 0; k < r; ++k) box[k] = h.H.at(k, k);

  std::set<RatVec> reps;
  IntVec t(r);
  while (true) {
    reps.insert(small.reduce(to_rat(big.combine(t))));
    std::size_t k = 0;
    while (k < r) {
      ++t[k];
      if (t[k] < box[k]) break;
      t[k] = 0;
      ++k;
    }
    if (k == r) break;
  }
  q.representatives.assign(reps.begin(), reps.end());
  assert(Int(q.representatives.size()) == q.index);
  return q;
}

HomogeneityWitness homogeneity_witness(const IntMatrix& A) {
  std::vector<RatVec> eqs;
  for (std::size_t j = 0; j < A.cols(); ++j) eqs.push_back(to_rat(A.column(j)));
  auto h = rational_solve(eqs, RatVec(A.cols(), Rat(1)));
  if (!h) {
    throw Error(ErrorCode::kNotHomogeneous,
                "columns do not lie on a hyperplane off the origin");
  }
  if (h->size() != A.rows()) h->resize(A.rows());
  return HomogeneityWitness{std::move(*h)};
}

}  // namespace ahg
