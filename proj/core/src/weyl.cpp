#include "ahg/weyl.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "ahg/error.hpp"
#include "ahg/semigroup.hpp"
#include "ahg/toric.hpp"

namespace ahg {

WeylElement WeylElement::constant(std::size_t n, const Rat& c) {
  WeylElement e(n);
  e.add_term(Exponent(n), Exponent(n), c);
  return e;
}

WeylElement WeylElement::monomial(Exponent alpha, Exponent m, const Rat& c) {
  WeylElement e(alpha.size());
  e.add_term(alpha, m, c);
  return e;
}

WeylElement WeylElement::x(std::size_t n, std::size_t j) {
  Exponent a(n);
  a[j] = 1;
  return monomial(a, Exponent(n));
}

WeylElement WeylElement::d(std::size_t n, std::size_t j) {
  Exponent m(n);
  m[j] = 1;
  return monomial(Exponent(n), m);
}

WeylElement WeylElement::theta(std::size_t n, std::size_t j) {
  Exponent a(n);
  a[j] = 1;
  return monomial(a, a);
}

WeylElement WeylElement::partial(const Exponent& m) {
  return monomial(Exponent(m.size()), m);
}

void WeylElement::add_term(const Exponent& alpha, const Exponent& m,
                           const Rat& c) {
  if (c == 0) return;
  if (n_ == 0) n_ = alpha.size();
  auto [it, inserted] = terms_.emplace(Key{alpha, m}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

WeylElement WeylElement::times_partial(const Exponent& v) const {
  WeylElement out(n_);
  for (const auto& [k, c] : terms_) out.terms_.emplace(Key{k.first, add(k.second, v)}, c);
  return out;
}

int WeylElement::spread() const {
  int s = 0;
  for (const auto& [k, c] : terms_) {
    int t = 0;
    for (std::size_t j = 0; j < k.first.size(); ++j) t += std::abs(k.first[j] - k.second[j]);
    s = std::max(s, t);
  }
  return s;
}

std::string WeylElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    const bool unit = degree(k.first) + degree(k.second) == 0;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    const Rat a = abs(c);
    if (a != 1 || unit) os << ahg::to_string(a);
    bool need_star = a != 1;
    auto emit = [&](const char* sym, const Exponent& e) {
      for (std::size_t j = 0; j < e.size(); ++j) {
        if (e[j] == 0) continue;
        os << (need_star ? "*" : "") << sym << (j + 1);
        if (e[j] > 1) os << "^" << e[j];
        need_star = true;
      }
    };
    emit("x", k.first);
    emit("d", k.second);
  }
  return os.str();
}

WeylElement& WeylElement::operator+=(const WeylElement& b) {
  if (n_ == 0) n_ = b.n_;
  for (const auto& [k, c] : b.terms_) add_term(k.first, k.second, c);
  return *this;
}

WeylElement& WeylElement::operator-=(const WeylElement& b) {
  if (n_ == 0) n_ = b.n_;
  for (const auto& [k, c] : b.terms_) add_term(k.first, k.second, -c);
  return *this;
}

WeylElement operator+(const WeylElement& a, const WeylElement& b) {
  WeylElement out = a;
  out += b;
  return out;
}

WeylElement operator-(const WeylElement& a, const WeylElement& b) {
  WeylElement out = a;
  out -= b;
  return out;
}

WeylElement operator*(const Rat& c, const WeylElement& a) {
  WeylElement out(a.n_);
  if (c == 0) return out;
  for (const auto& [k, v] : a.terms_) out.terms_.emplace(k, c * v);
  return out;
}

namespace {

Int binomial(int n, int k) {
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

// w (w-1) ... (w-k+1) for integral w.
Int falling(int w, int k) {
  Int r = 1;
  for (int i = 0; i < k; ++i) r *= w - i;
  return r;
}

}  // namespace

WeylElement operator*(const WeylElement& a, const WeylElement& b) {
  const std::size_t n = std::max(a.n_, b.n_);
  WeylElement out(n);
  struct Partial {
    Exponent alpha, m;
    Rat c;
  };
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) {
      // x^a d^m x^b d^p with d_j^m x_j^b = sum_k C(m,k) [b]_k x^(b-k) d^(m-k).
      std::vector<Partial> acc{{ka.first, kb.second, ca * cb}};
      for (std::size_t j = 0; j < n; ++j) {
        const int mj = ka.second[j], bj = kb.first[j];
        std::vector<Partial> next;
        for (const auto& p : acc) {
          for (int k = 0; k <= std::min(mj, bj); ++k) {
            Partial q = p;
            q.alpha[j] += bj - k;
            q.m[j] += mj - k;
            q.c *= Rat(binomial(mj, k) * falling(bj, k));
            next.push_back(std::move(q));
          }
        }
        acc = std::move(next);
      }
      for (const auto& p : acc) out.add_term(p.alpha, p.m, p.c);
    }
  }
  return out;
}

WeylElement euler_operator(const IntMatrix& A, std::size_t i) {
  const std::size_t n = A.cols();
  WeylElement s(n);
  for (std::size_t j = 0; j < n; ++j) {
    Exponent e(n);
    e[j] = 1;
    s.add_term(e, e, Rat(A.at(i, j)));
  }
  return s;
}

namespace {

// A polynomial in theta_1..theta_n, normally ordered.
WeylElement theta_to_weyl(const SPoly& theta, std::size_t n) {
  // theta_j^k = sum_l S(k, l) x_j^l d_j^l.
  int top = 0;
  for (const auto& [e, c] : theta.terms()) {
    for (int k : e) top = std::max(top, k);
  }
  std::vector<std::vector<Int>> S(top + 1, std::vector<Int>(top + 1, 0));
  S[0][0] = 1;
  for (int k = 1; k <= top; ++k) {
    for (int l = 1; l <= k; ++l) S[k][l] = S[k - 1][l - 1] + Int(l) * S[k - 1][l];
  }
  WeylElement out(n);
  for (const auto& [e, c] : theta.terms()) {
    std::vector<std::pair<Exponent, Rat>> acc{{Exponent(n), c}};
    for (std::size_t j = 0; j < n; ++j) {
      if (e[j] == 0) continue;
      std::vector<std::pair<Exponent, Rat>> next;
      for (const auto& [l, v] : acc) {
        for (int k = 1; k <= e[j]; ++k) {
          Exponent l2 = l;
          l2[j] = k;
          next.emplace_back(std::move(l2), v * Rat(S[e[j]][k]));
        }
      }
      acc = std::move(next);
    }
    for (const auto& [l, v] : acc) out.add_term(l, l, v);
  }
  return out;
}

// The linear form L(A theta) in theta.
SPoly theta_linear(const LinearForm& L, const IntMatrix& A) {
  LinearForm f{RatVec(A.cols()), L.constant};
  for (std::size_t i = 0; i < A.rows(); ++i) {
    for (std::size_t j = 0; j < A.cols(); ++j) f.coeffs[j] += L.coeffs[i] * A.at(i, j);
  }
  return SPoly::from_linear(f);
}

}  // namespace

WeylElement substitute_euler(const SPoly& b, const IntMatrix& A) {
  const std::size_t d = A.rows(), n = A.cols();
  std::vector<SPoly> L;
  for (std::size_t i = 0; i < d; ++i) {
    LinearForm f{RatVec(d), 0};
    f.coeffs[i] = 1;
    L.push_back(theta_linear(f, A));
  }
  SPoly theta(n);
  for (const auto& [e, c] : b.terms()) {
    SPoly t = SPoly::constant(n, c);
    for (std::size_t i = 0; i < d; ++i) {
      for (int k = 0; k < e[i]; ++k) t = t * L[i];
    }
    for (const auto& [m, v] : t.terms()) theta.add_term(m, v);
  }
  return theta_to_weyl(theta, n);
}

WeylElement substitute_euler(const FactoredPoly& b, const IntMatrix& A) {
  SPoly theta = SPoly::constant(A.cols(), b.scalar);
  for (const auto& f : b.factors) theta = theta * theta_linear(f, A);
  return theta_to_weyl(theta, A.cols());
}

WeylElement Certificate::total(std::size_t n) const {
  WeylElement sum(n);
  for (const auto& p : pairs) {
    WeylElement g = WeylElement::partial(p.generator.plus) -
                    WeylElement::partial(p.generator.minus);
    sum += p.cofactor * g;
  }
  return sum;
}

std::pair<Exponent, Exponent> shift_pair(const Configuration& C,
                                         const RatVec& chi) {
  if (chi.size() != C.d() || !C.in_lattice(chi)) {
    throw Error(ErrorCode::kChiNotInLattice, "chi is not in ZA");
  }
  // u: a generator of M_chi of least degree, so A u - chi lies in NA.
  const MonomialIdeal M = m_chi(C, chi);
  Exponent u = M.generators().front();
  for (const auto& g : M.generators()) {
    if (degree(g) < degree(u)) u = g;
  }
  const auto v = in_NA(C, sub(to_rat(C.matrix().apply(u)), chi));
  return {u, *v};
}

SymmetryOperator contiguity_operator(const Configuration& C, const RatVec& chi,
                                     const FactoredPoly& b, const Exponent& u,
                                     const Exponent& v, bool check_b) {
  const std::size_t n = C.n();
  if (chi.size() != C.d() || !C.in_lattice(chi)) {
    throw Error(ErrorCode::kChiNotInLattice, "chi is not in ZA");
  }
  if (u.size() != n || v.size() != n ||
      sub(to_rat(C.matrix().apply(u)), to_rat(C.matrix().apply(v))) != chi) {
    throw Error(ErrorCode::kInvalidArgument, "A u - A v differs from chi");
  }
  if (check_b) {
    const BIdeal B = b_ideal(C, chi);
    if (!vanishes_on(C, B.components, b.expand())) {
      throw Error(ErrorCode::kNotInBIdeal, "b does not vanish on V(B_chi)");
    }
  }

  SymmetryOperator op;
  op.chi = chi;
  op.b = b;
  op.u = u;
  op.v = v;
  WeylElement P = substitute_euler(b, C.matrix()).times_partial(v);
  Exponent divided(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (u[i] == 0) continue;
    const GroebnerBasis& G = C.toric().groebner(TermOrder::grevlex_lowest(n, i));
    WeylElement R(n);
    for (const auto& [k, c] : P.terms()) {
      std::vector<GroebnerBasis::Step> steps;
      const Exponent nf = G.normal_form(k.second, &steps);
      for (const auto& st : steps) {
        op.certificate.pairs.push_back(CertificateEntry{
            WeylElement::monomial(k.first, add(st.quotient, divided), c),
            G.elements()[st.element]});
      }
      R.add_term(k.first, nf, c);
    }
    WeylElement Q(n);
    for (const auto& [k, c] : R.terms()) {
      if (k.second[i] < u[i]) {
        throw Error(ErrorCode::kRightFactorMissing,
                    "a term lacks the right factor d" + std::to_string(i + 1) +
                        "^" + std::to_string(u[i]));
      }
      Exponent m = k.second;
      m[i] -= u[i];
      Q.add_term(k.first, m, c);
    }
    P = std::move(Q);
    divided[i] = u[i];
  }
  op.element = std::move(P);
  return op;
}

bool verify_weight(const WeylElement& E, const IntMatrix& A, const RatVec& chi) {
  for (std::size_t i = 0; i < A.rows(); ++i) {
    const WeylElement s = euler_operator(A, i);
    if (s * E - E * s != chi[i] * E) return false;
  }
  return true;
}

bool verify_certificate(const SymmetryOperator& op, const Configuration& C) {
  const std::size_t n = C.n();
  for (const auto& p : op.certificate.pairs) {
    if (C.matrix().apply(p.generator.plus) != C.matrix().apply(p.generator.minus)) {
      return false;
    }
  }
  const WeylElement lhs = substitute_euler(op.b, C.matrix()).times_partial(op.v) -
                          op.element.times_partial(op.u);
  return lhs == op.certificate.total(n);
}

bool in_left_ideal(const WeylElement& P, const Configuration& C) {
  const std::size_t n = C.n();
  const GroebnerBasis& G = C.toric().groebner(TermOrder::grevlex(n));
  std::map<Exponent, std::map<Exponent, Rat>> reduced;
  for (const auto& [k, c] : P.terms()) {
    Rat& slot = reduced[k.first][G.normal_form(k.second)];
    slot += c;
  }
  for (const auto& [alpha, poly] : reduced) {
    for (const auto& [m, c] : poly) {
      if (c != 0) return false;
    }
  }
  return true;
}

}  // namespace ahg
