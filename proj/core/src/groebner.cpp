#include "ahg/groebner.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <numeric>

namespace ahg {

TermOrder TermOrder::grevlex(std::size_t n) {
  TermOrder o;
  o.variables_.resize(n);
  std::iota(o.variables_.begin(), o.variables_.end(), 0);
  return o;
}

TermOrder TermOrder::grevlex_lowest(std::size_t n, std::size_t lowest) {
  TermOrder o;
  for (std::size_t i = 0; i < n; ++i) {
    if (i != lowest) o.variables_.push_back(i);
  }
  o.variables_.push_back(lowest);
  return o;
}

bool TermOrder::greater(const Exponent& a, const Exponent& b) const {
  const int da = degree(a), db = degree(b);
  if (da != db) return da > db;
  for (std::size_t k = variables_.size(); k-- > 0;) {
    const std::size_t v = variables_[k];
    if (a[v] != b[v]) return a[v] < b[v];
  }
  return false;
}

namespace {

Exponent reduce_monomial(const std::vector<Binomial>& elements, Exponent m,
                         std::vector<GroebnerBasis::Step>* steps) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t k = 0; k < elements.size(); ++k) {
      const Binomial& g = elements[k];
      if (!divides(g.plus, m)) continue;
      Exponent q = sub(m, g.plus);
      m = add(q, g.minus);
      if (steps) steps->push_back(GroebnerBasis::Step{std::move(q), k});
      changed = true;
      break;
    }
  }
  return m;
}

// Orients b so that plus is leading; returns false when b is zero.
bool orient(Binomial& b, const TermOrder& order) {
  if (b.plus == b.minus) return false;
  if (!order.greater(b.plus, b.minus)) std::swap(b.plus, b.minus);
  return true;
}

bool coprime(const Exponent& a, const Exponent& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > 0 && b[i] > 0) return false;
  }
  return true;
}

Exponent lcm(const Exponent& a, const Exponent& b) {
  Exponent out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::max(a[i], b[i]);
  return out;
}

}  // namespace

Exponent GroebnerBasis::normal_form(Exponent m, std::vector<Step>* steps) const {
  return reduce_monomial(elements_, std::move(m), steps);
}

GroebnerBasis buchberger(const std::vector<Binomial>& generators,
                         const TermOrder& order) {
  std::vector<Binomial> G;
  std::deque<std::pair<std::size_t, std::size_t>> pairs;

  auto add_element = [&](Binomial b) {
    b.plus = reduce_monomial(G, b.plus, nullptr);
    b.minus = reduce_monomial(G, b.minus, nullptr);
    if (!orient(b, order)) return;
    G.push_back(std::move(b));
    for (std::size_t k = 0; k + 1 < G.size(); ++k) pairs.emplace_back(k, G.size() - 1);
  };

  for (auto b : generators) add_element(std::move(b));

  while (!pairs.empty()) {
    const auto [i, j] = pairs.front();
    pairs.pop_front();
    if (coprime(G[i].plus, G[j].plus)) continue;
    const Exponent L = lcm(G[i].plus, G[j].plus);
    Binomial s{add(sub(L, G[i].plus), G[i].minus),
               add(sub(L, G[j].plus), G[j].minus)};
    add_element(std::move(s));
  }

  // Minimalise, then reduce trailing terms.
  std::vector<Binomial> minimal;
  for (std::size_t i = 0; i < G.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < G.size() && !redundant; ++j) {
      if (i == j || !divides(G[j].plus, G[i].plus)) continue;
      redundant = G[j].plus != G[i].plus || j < i;
    }
    if (!redundant) minimal.push_back(G[i]);
  }
  std::vector<Binomial> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Binomial> others;
    for (std::size_t j = 0; j < minimal.size(); ++j) {
      if (j != i) others.push_back(minimal[j]);
    }
    Binomial b = minimal[i];
    b.minus = reduce_monomial(others, b.minus, nullptr);
    reduced.push_back(std::move(b));
  }
  std::sort(reduced.begin(), reduced.end());
  return GroebnerBasis(order, std::move(reduced));
}

ToricIdeal::ToricIdeal(IntMatrix A) : A_(std::move(A)) {}

ToricIdeal toric_ideal(const IntMatrix& A) { return ToricIdeal(A); }

const std::vector<Binomial>& ToricIdeal::generators() const {
  std::lock_guard lock(mutex_);
  if (generators_ready_) return generators_;
  const std::size_t n = A_.cols();
  std::vector<Binomial> current;
  const LatticeBasis kernel = kernel_lattice(A_);
  for (const auto& u : kernel.basis()) {
    Binomial b{Exponent(n), Exponent(n)};
    for (std::size_t j = 0; j < n; ++j) {
      const int x = static_cast<int>(u[j].get_si());
      (x > 0 ? b.plus[j] : b.minus[j]) = std::abs(x);
    }
    current.push_back(std::move(b));
  }
  // Lattice basis ideal saturated by each variable in turn: in a revlex
  // basis with d_i lowest, dividing out d_i gives the saturation by d_i
  // (the ideal is homogeneous for the total degree).
  for (std::size_t i = 0; i < n && !current.empty(); ++i) {
    const auto G = buchberger(current, TermOrder::grevlex_lowest(n, i));
    current.clear();
    for (auto b : G.elements()) {
      const int k = std::min(b.plus[i], b.minus[i]);
      b.plus[i] -= k;
      b.minus[i] -= k;
      current.push_back(std::move(b));
    }
  }
  generators_ = buchberger(current, TermOrder::grevlex(n)).elements();
  generators_ready_ = true;
  return generators_;
}

const GroebnerBasis& ToricIdeal::groebner(const TermOrder& order) const {
  const auto& gens = generators();
  std::lock_guard lock(mutex_);
  auto it = cache_.find(order);
  if (it == cache_.end()) {
    it = cache_.emplace(order, std::make_unique<GroebnerBasis>(
                                   buchberger(gens, order))).first;
  }
  return *it->second;
}

}  // namespace ahg
