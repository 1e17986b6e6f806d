#include "ahg/series.hpp"

#include <algorithm>
#include <cstdlib>

#include "ahg/error.hpp"

namespace ahg {

Rat FormalSeries::coefficient(const RatVec& w) const {
  auto it = terms.find(w);
  return it == terms.end() ? Rat(0) : it->second;
}

int l1_distance(const RatVec& a, const RatVec& b) {
  Rat total = 0;
  for (std::size_t i = 0; i < a.size(); ++i) total += abs(a[i] - b[i]);
  // Exponents in one series differ by integer vectors.
  return static_cast<int>(floor_of(total).get_si());
}

std::vector<int> negative_support(const RatVec& v) {
  std::vector<int> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (is_integral(v[i]) && v[i] < 0) out.push_back(static_cast<int>(i));
  }
  return out;
}

Rat falling_factorial(const Rat& x, int k) {
  Rat r = 1;
  for (int i = 0; i < k; ++i) r *= x - i;
  return r;
}

namespace {

void monomials_up_to(std::size_t n, int max_degree, std::size_t j, Exponent& cur,
                     int left, std::vector<Exponent>& out) {
  if (j == n) {
    out.push_back(cur);
    return;
  }
  for (int k = 0; k <= left; ++k) {
    cur[j] = k;
    monomials_up_to(n, max_degree, j + 1, cur, left - k, out);
  }
  cur[j] = 0;
}

bool disjoint(const Exponent& a, const Exponent& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > 0 && b[i] > 0) return false;
  }
  return true;
}

}  // namespace

std::vector<IntVec> kernel_vectors(const Configuration& C, int max_plus) {
  const std::size_t n = C.n();
  std::vector<Exponent> mons;
  Exponent cur(n, 0);
  monomials_up_to(n, max_plus, 0, cur, max_plus, mons);
  std::map<IntVec, std::vector<Exponent>> fibers;
  for (auto& m : mons) fibers[C.matrix().apply(m)].push_back(std::move(m));
  std::vector<IntVec> out;
  for (const auto& [img, fiber] : fibers) {
    for (const auto& p : fiber) {
      for (const auto& q : fiber) {
        if (!disjoint(p, q)) continue;
        if (p == q && degree(p) > 0) continue;
        IntVec u(n);
        for (std::size_t j = 0; j < n; ++j) u[j] = p[j] - q[j];
        out.push_back(std::move(u));
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

NegSupportReport minimal_negative_support(const Configuration& C,
                                          const RatVec& v, int order) {
  NegSupportReport r;
  r.v = v;
  r.nsupp = negative_support(v);
  if (r.nsupp.empty()) return r;
  Int top = 0;
  for (const auto& x : v) top = std::max(top, Int(abs(floor_of(x))));
  r.bound = static_cast<int>(top.get_si()) + order + 1;
  for (const auto& u : kernel_vectors(C, r.bound)) {
    const auto ns = negative_support(add(v, to_rat(u)));
    if (ns.size() < r.nsupp.size() &&
        std::includes(r.nsupp.begin(), r.nsupp.end(), ns.begin(), ns.end())) {
      r.minimal = false;
      r.improve = u;
      break;
    }
  }
  return r;
}

RatVec find_minimal_exponent(const Configuration& C, const RatVec& beta,
                             int order) {
  const std::size_t d = C.d(), n = C.n();
  std::vector<int> cols;
  std::vector<RatVec> picked;
  for (std::size_t j = 0; j < n && cols.size() < d; ++j) {
    picked.push_back(C.column(j));
    if (rational_rank(picked) == picked.size()) {
      cols.push_back(static_cast<int>(j));
    } else {
      picked.pop_back();
    }
  }
  std::vector<RatVec> rows(d, RatVec(cols.size()));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t k = 0; k < cols.size(); ++k) rows[i][k] = C.column(cols[k])[i];
  }
  const auto x = rational_solve(rows, beta);
  if (!x) throw Error(ErrorCode::kInvalidArgument, "no exponent solves A v = beta");
  RatVec v(n, Rat(0));
  for (std::size_t k = 0; k < cols.size(); ++k) v[cols[k]] = (*x)[k];
  while (true) {
    const auto rep = minimal_negative_support(C, v, order);
    if (rep.minimal) return v;
    v = add(v, to_rat(*rep.improve));
  }
}

FormalSeries phi_v(const Configuration& C, const RatVec& v, int order) {
  const auto rep = minimal_negative_support(C, v, order);
  if (!rep.minimal) {
    throw Error(ErrorCode::kNotMinimal,
                "exponent " + to_string(v) + " does not have minimal negative support");
  }
  FormalSeries S;
  S.base = v;
  S.radius = 2 * order;
  for (const auto& u : kernel_vectors(C, order)) {
    const RatVec w = add(v, to_rat(u));
    if (negative_support(w) != rep.nsupp) continue;
    Rat num = 1, den = 1;
    for (std::size_t j = 0; j < v.size(); ++j) {
      const int k = static_cast<int>(u[j].get_si());
      if (k < 0) num *= falling_factorial(v[j], -k);
      if (k > 0) den *= falling_factorial(w[j], k);
    }
    S.terms.emplace(w, num / den);
  }
  return S;
}

FormalSeries apply_operator(const WeylElement& E, const FormalSeries& S) {
  FormalSeries out;
  out.base = S.base;
  out.radius = S.radius - E.spread();
  for (const auto& [w, c] : S.terms) {
    for (const auto& [k, e] : E.terms()) {
      const auto& [alpha, m] = k;
      Rat coef = c * e;
      RatVec w2 = w;
      for (std::size_t j = 0; j < w.size() && coef != 0; ++j) {
        coef *= falling_factorial(w[j], m[j]);
        w2[j] += alpha[j] - m[j];
      }
      if (coef == 0 || l1_distance(w2, S.base) > out.radius) continue;
      Rat& slot = out.terms[w2];
      slot += coef;
    }
  }
  for (auto it = out.terms.begin(); it != out.terms.end();) {
    it = it->second == 0 ? out.terms.erase(it) : std::next(it);
  }
  return out;
}

ResidualReport check_solution(const Configuration& C, const RatVec& beta,
                              const FormalSeries& S) {
  ResidualReport r;
  for (const auto& [w, c] : S.terms) {
    if (C.matrix().apply(w) != beta) {
      r.euler_exact = false;
      r.failure = "Euler residual at x^" + to_string(w);
      break;
    }
  }
  int maxdeg = 0;
  const auto& gens = C.toric().generators();
  for (const auto& g : gens) maxdeg = std::max({maxdeg, degree(g.plus), degree(g.minus)});
  r.radius = S.radius - maxdeg;
  r.order = r.radius < 0 ? -1 : r.radius / 2;
  for (const auto& g : gens) {
    std::map<RatVec, Rat> residual;
    for (const auto& [w, c] : S.terms) {
      for (int sign : {1, -1}) {
        const Exponent& m = sign > 0 ? g.plus : g.minus;
        Rat coef = c * sign;
        RatVec w2 = w;
        for (std::size_t j = 0; j < w.size() && coef != 0; ++j) {
          coef *= falling_factorial(w[j], m[j]);
          w2[j] -= m[j];
        }
        if (coef == 0 || l1_distance(w2, S.base) > r.radius) continue;
        residual[w2] += coef;
      }
    }
    for (const auto& [w, c] : residual) {
      if (c != 0) {
        r.toric_vanishes = false;
        if (r.failure.empty()) r.failure = "toric residual at x^" + to_string(w);
        return r;
      }
    }
  }
  return r;
}

}  // namespace ahg
