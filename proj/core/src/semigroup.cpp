#include "ahg/semigroup.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "ahg/error.hpp"

namespace ahg {

bool ETauSet::contains_zero() const {
  for (const auto& r : residues) {
    if (is_zero(r)) return true;
  }
  return false;
}

bool NumericalSemigroup::contains(long x) const {
  if (x < 0) return false;
  return !std::binary_search(gaps.begin(), gaps.end(), x);
}

bool NumericalSemigroup::contains(const Rat& x) const {
  if (!is_integral(x) || x < 0) return false;
  if (!x.get_num().fits_slong_p()) return true;
  return contains(x.get_num().get_si());
}

namespace {

long to_long(const Int& x) {
  if (!x.fits_slong_p()) {
    throw Error(ErrorCode::kInvalidArgument, "value exceeds machine range");
  }
  return x.get_si();
}

// Depth-first search for u in N^n with A u = gamma, columns taken in order.
class MembershipSearch {
 public:
  explicit MembershipSearch(const Configuration& C) : C_(C) {
    const std::size_t d = C.d(), n = C.n();
    cols_.assign(n, std::vector<long>(d));
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t i = 0; i < d; ++i) cols_[j][i] = to_long(C.matrix().at(i, j));
    }
    for (const auto& sf : C.facets()) {
      std::vector<long> vals(n);
      for (std::size_t j = 0; j < n; ++j) vals[j] = to_long(sf(C.column(j)).get_num());
      fvals_.push_back(std::move(vals));
    }
  }

  std::optional<Exponent> run(const std::vector<long>& gamma,
                              const std::vector<long>& fgamma) {
    u_.assign(C_.n(), 0);
    if (dfs(0, gamma, fgamma)) return u_;
    return std::nullopt;
  }

 private:
  bool dfs(std::size_t j, const std::vector<long>& rem,
           const std::vector<long>& frem) {
    if (std::all_of(rem.begin(), rem.end(), [](long x) { return x == 0; })) {
      std::fill(u_.begin() + j, u_.end(), 0);
      return true;
    }
    if (j == C_.n()) return false;
    std::vector<long> key(rem);
    key.push_back(static_cast<long>(j));
    if (failed_.count(key)) return false;

    long kmax = -1;
    for (std::size_t s = 0; s < fvals_.size(); ++s) {
      if (fvals_[s][j] > 0) {
        const long b = frem[s] / fvals_[s][j];
        kmax = kmax < 0 ? b : std::min(kmax, b);
      }
    }
    std::vector<long> r(rem), fr(frem);
    for (long k = kmax; k >= 0; --k) {
      for (std::size_t i = 0; i < r.size(); ++i) r[i] = rem[i] - k * cols_[j][i];
      for (std::size_t s = 0; s < fr.size(); ++s) fr[s] = frem[s] - k * fvals_[s][j];
      u_[j] = static_cast<int>(k);
      if (dfs(j + 1, r, fr)) return true;
    }
    failed_.insert(std::move(key));
    return false;
  }

  const Configuration& C_;
  std::vector<std::vector<long>> cols_;
  std::vector<std::vector<long>> fvals_;
  std::set<std::vector<long>> failed_;
  Exponent u_;
};

// Search over u in N^{outside(tau)} with gamma - A u in Z(A cap tau).
class FaceMembershipSearch {
 public:
  FaceMembershipSearch(const Configuration& C, std::size_t face)
      : C_(C), fd_(C.face_data(face)) {
    for (int j : fd_.outside) g_cols_.push_back(dot(*fd_.positive, C.column(j)));
  }

  bool run(const RatVec& gamma) { return dfs(0, fd_.span.reduce(gamma)); }

 private:
  bool dfs(std::size_t idx, const RatVec& rem) {
    if (fd_.span.contains(rem)) return true;
    if (idx == fd_.outside.size()) return false;
    auto key = std::make_pair(idx, rem);
    if (failed_.count(key)) return false;

    const Rat grem = dot(*fd_.positive, rem);
    for (int s : fd_.incident) {
      if (C_.facets()[s](rem) < 0) {
        failed_.insert(std::move(key));
        return false;
      }
    }
    const RatVec& a = C_.column(fd_.outside[idx]);
    const Int kmax = floor_of(Rat(grem / g_cols_[idx]));
    for (Int k = kmax; k >= 0; --k) {
      RatVec next = fd_.span.reduce(sub(rem, scale(a, Rat(k))));
      if (dfs(idx + 1, next)) return true;
    }
    failed_.insert(std::move(key));
    return false;
  }

  const Configuration& C_;
  const FaceData& fd_;
  std::vector<Rat> g_cols_;
  std::set<std::pair<std::size_t, RatVec>> failed_;
};

bool lex_less_pred(const RatVec& a, const RatVec& b) { return lex_less(a, b); }

}  // namespace

std::optional<Exponent> in_NA(const Configuration& C, const RatVec& gamma) {
  if (gamma.size() != C.d()) {
    throw Error(ErrorCode::kInvalidArgument, "parameter has the wrong length");
  }
  if (!C.in_lattice(gamma)) return std::nullopt;
  std::vector<long> g(C.d()), fg;
  for (std::size_t i = 0; i < C.d(); ++i) g[i] = to_long(gamma[i].get_num());
  for (const auto& sf : C.facets()) {
    const Rat v = sf(gamma);
    if (v < 0) return std::nullopt;
    fg.push_back(to_long(v.get_num()));
  }
  MembershipSearch search(C);
  return search.run(g, fg);
}

bool in_NA_mod_face(const Configuration& C, std::size_t face,
                    const RatVec& gamma) {
  if (gamma.size() != C.d()) {
    throw Error(ErrorCode::kInvalidArgument, "parameter has the wrong length");
  }
  if (!C.in_lattice(gamma)) return false;
  if (face == C.faces().whole()) return true;
  FaceMembershipSearch search(C, face);
  return search.run(gamma);
}

ETauSet e_tau(const Configuration& C, std::size_t face, const Parameter& beta) {
  if (beta.size() != C.d()) {
    throw Error(ErrorCode::kInvalidArgument, "parameter has the wrong length");
  }
  const FaceData& fd = C.face_data(face);
  ETauSet out;
  out.face = face;

  // lambda0 in (beta + ZA) cap Q(A cap tau).
  RatVec lambda0 = beta;
  if (!fd.incident.empty()) {
    RatVec rhs;
    for (int s : fd.incident) rhs.push_back(-C.facets()[s](beta));
    const auto c = solve_integer(fd.incident_on_basis, rhs);
    if (!c) return out;
    lambda0 = add(beta, to_rat(C.lattice().combine(*c)));
  }
  std::set<RatVec> found;
  for (const auto& rep : fd.residues) {
    RatVec lambda = fd.span.reduce(add(lambda0, rep));
    if (found.count(lambda)) continue;
    if (in_NA_mod_face(C, face, sub(beta, lambda))) found.insert(std::move(lambda));
  }
  out.residues.assign(found.begin(), found.end());
  std::sort(out.residues.begin(), out.residues.end(), lex_less_pred);
  return out;
}

bool is_normal(const Configuration& C) {
  const std::size_t d = C.d();
  if (d == 1) return true;
  Int bound = 0;
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < C.n(); ++j) {
      Int a = abs(C.matrix().at(i, j));
      if (a > bound) bound = a;
    }
  }
  const long M = to_long(bound) * static_cast<long>(d - 1);
  std::vector<long> x(d, -M);
  while (true) {
    RatVec g(d);
    for (std::size_t i = 0; i < d; ++i) g[i] = Rat(x[i]);
    const Rat h = C.degree(g);
    bool candidate = h <= Rat(static_cast<long>(d - 1)) && C.in_lattice(g);
    if (candidate) {
      for (const auto& sf : C.facets()) {
        if (sf(g) < 0) {
          candidate = false;
          break;
        }
      }
    }
    if (candidate && !in_NA(C, g)) return false;
    std::size_t k = 0;
    while (k < d && ++x[k] > M) x[k++] = -M;
    if (k == d) break;
  }
  return true;
}

NumericalSemigroup numerical_semigroup(std::vector<long> generators) {
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()),
                   generators.end());
  generators.erase(std::remove(generators.begin(), generators.end(), 0L),
                   generators.end());
  NumericalSemigroup S;
  S.generators = generators;
  if (generators.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "semigroup has no generators");
  }
  const long g = std::accumulate(generators.begin(), generators.end(), 0L,
                                 [](long a, long b) { return std::gcd(a, b); });
  if (g != 1) {
    throw Error(ErrorCode::kInvalidArgument, "generators are not coprime");
  }
  const long lo = generators.front(), hi = generators.back();
  const long limit = (lo - 1) * (hi - 1) + hi;
  std::vector<bool> member(limit + 1, false);
  member[0] = true;
  for (long x = 1; x <= limit; ++x) {
    for (long a : generators) {
      if (a <= x && member[x - a]) {
        member[x] = true;
        break;
      }
    }
  }
  for (long x = 0; x <= limit; ++x) {
    if (!member[x]) S.gaps.push_back(x);
  }
  S.frobenius = S.gaps.empty() ? -1 : S.gaps.back();
  return S;
}

NumericalSemigroup facet_value_semigroup(const Configuration& C,
                                         std::size_t facet) {
  const auto& sf = C.facets().at(facet);
  std::vector<long> gens;
  for (std::size_t j = 0; j < C.n(); ++j) {
    gens.push_back(to_long(sf(C.column(j)).get_num()));
  }
  return numerical_semigroup(std::move(gens));
}

Resonance resonance(const Configuration& C, const Parameter& beta) {
  Resonance r;
  r.nonresonant = r.semi_nonresonant = true;
  for (const auto& sf : C.facets()) {
    const Rat v = sf(beta);
    const bool z = is_integral(v);
    const bool nat = z && v >= 0;
    r.integral.push_back(z);
    r.natural.push_back(nat);
    if (z) r.nonresonant = false;
    if (nat) r.semi_nonresonant = false;
  }
  return r;
}

}  // namespace ahg
