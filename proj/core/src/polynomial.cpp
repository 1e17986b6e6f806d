#include "ahg/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace ahg {

LinearForm LinearForm::shifted(const RatVec& chi) const {
  return LinearForm{coeffs, constant + dot(coeffs, chi)};
}

std::string LinearForm::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    const Rat& c = coeffs[i];
    if (c == 0) continue;
    if (c < 0) {
      os << (first ? "-" : " - ");
    } else if (!first) {
      os << " + ";
    }
    const Rat a = abs(c);
    if (a != 1) os << ahg::to_string(a) << "*";
    os << "s" << (i + 1);
    first = false;
  }
  if (constant != 0 || first) {
    if (first) {
      os << ahg::to_string(constant);
    } else {
      os << (constant < 0 ? " - " : " + ") << ahg::to_string(Rat(abs(constant)));
    }
  }
  return os.str();
}

SPoly SPoly::constant(std::size_t nvars, const Rat& c) {
  SPoly p(nvars);
  p.add_term(Exponent(nvars), c);
  return p;
}

SPoly SPoly::from_linear(const LinearForm& L) {
  const std::size_t n = L.coeffs.size();
  SPoly p = constant(n, L.constant);
  for (std::size_t i = 0; i < n; ++i) {
    Exponent e(n);
    e[i] = 1;
    p.add_term(e, L.coeffs[i]);
  }
  return p;
}

int SPoly::degree() const {
  int d = terms_.empty() ? -1 : 0;
  for (const auto& [e, c] : terms_) d = std::max(d, ahg::degree(e));
  return d;
}

void SPoly::add_term(const Exponent& e, const Rat& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rat SPoly::operator()(const RatVec& s) const {
  Rat total = 0;
  for (const auto& [e, c] : terms_) {
    Rat t = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      for (int k = 0; k < e[i]; ++k) t *= s[i];
    }
    total += t;
  }
  return total;
}

SPoly operator+(const SPoly& a, const SPoly& b) {
  SPoly out = a;
  for (const auto& [e, c] : b.terms_) out.add_term(e, c);
  return out;
}

SPoly operator-(const SPoly& a, const SPoly& b) {
  SPoly out = a;
  for (const auto& [e, c] : b.terms_) out.add_term(e, -c);
  return out;
}

SPoly operator*(const SPoly& a, const SPoly& b) {
  SPoly out(std::max(a.nvars_, b.nvars_));
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) out.add_term(add(ea, eb), ca * cb);
  }
  return out;
}

Rat FactoredPoly::operator()(const RatVec& s) const {
  Rat v = scalar;
  for (const auto& f : factors) v *= f(s);
  return v;
}

FactoredPoly FactoredPoly::shifted(const RatVec& chi) const {
  FactoredPoly out{nvars, scalar, {}};
  for (const auto& f : factors) out.factors.push_back(f.shifted(chi));
  return out;
}

SPoly FactoredPoly::expand() const {
  SPoly p = SPoly::constant(nvars, scalar);
  for (const auto& f : factors) p = p * SPoly::from_linear(f);
  return p;
}

std::string FactoredPoly::to_string() const {
  std::ostringstream os;
  if (factors.empty() || scalar != 1) os << ahg::to_string(scalar);
  for (std::size_t k = 0; k < factors.size(); ++k) {
    if (k > 0 || scalar != 1) os << "*";
    os << "(" << factors[k].to_string() << ")";
  }
  return os.str();
}

FactoredPoly operator*(const FactoredPoly& a, const FactoredPoly& b) {
  FactoredPoly out{std::max(a.nvars, b.nvars), a.scalar * b.scalar, a.factors};
  out.factors.insert(out.factors.end(), b.factors.begin(), b.factors.end());
  return out;
}

}  // namespace ahg
