#include "ahg/toric.hpp"

#include <algorithm>
#include <set>

#include "ahg/error.hpp"
#include "ahg/semigroup.hpp"

namespace ahg {

MonomialIdeal::MonomialIdeal(std::size_t n, std::vector<Exponent> gens) : n_(n) {
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    bool minimal = true;
    for (std::size_t j = 0; j < gens.size() && minimal; ++j) {
      if (i != j && divides(gens[j], gens[i])) minimal = false;
    }
    if (minimal) gens_.push_back(gens[i]);
  }
}

bool MonomialIdeal::contains(const Exponent& m) const {
  for (const auto& g : gens_) {
    if (divides(g, m)) return true;
  }
  return false;
}

bool MonomialIdeal::is_unit() const {
  return contains(Exponent(n_));
}

namespace {

// The smallest face whose columns include `cols`.
std::size_t enclosing_face(const Configuration& C, const std::vector<int>& cols) {
  const FaceLattice& L = C.faces();
  std::size_t best = L.whole();
  for (std::size_t t = 0; t < L.size(); ++t) {
    const Face& f = L.faces[t];
    if (f.columns.size() >= L.faces[best].columns.size()) continue;
    if (std::includes(f.columns.begin(), f.columns.end(), cols.begin(), cols.end())) {
      best = t;
    }
  }
  return best;
}

// Whether some u' + N^tau outside J (u' below the generator exponents off
// tau) still meets {u : A u - chi in NA}. For a set tau with enclosing face
// F this happens iff A u' - chi lies in NA + Z(A cap F).
bool complement_meets(const Configuration& C, const std::vector<Exponent>& gens,
                      const RatVec& chi) {
  const std::size_t n = C.n();
  Exponent maxexp(n, 0);
  for (const auto& g : gens) {
    for (std::size_t j = 0; j < n; ++j) maxexp[j] = std::max(maxexp[j], g[j]);
  }
  std::set<std::pair<std::size_t, RatVec>> tested;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> tau, off;
    bool ok = true;
    for (std::size_t j = 0; j < n; ++j) {
      if (mask & (1u << j)) {
        tau.push_back(static_cast<int>(j));
      } else if (maxexp[j] == 0) {
        ok = false;
      } else {
        off.push_back(static_cast<int>(j));
      }
    }
    if (!ok) continue;
    const std::size_t face = enclosing_face(C, tau);
    auto avoids = [&](const Exponent& u) {
      for (const auto& g : gens) {
        bool below = true;
        for (int j : off) below = below && g[j] <= u[j];
        if (below) return false;
      }
      return true;
    };
    Exponent u(n, 0);
    while (true) {
      bool maximal = avoids(u);
      for (std::size_t k = 0; k < off.size() && maximal; ++k) {
        const int j = off[k];
        if (u[j] + 1 >= maxexp[j]) continue;
        ++u[j];
        maximal = !avoids(u);
        --u[j];
      }
      if (maximal) {
        RatVec gamma = sub(to_rat(C.matrix().apply(u)), chi);
        if (tested.emplace(face, gamma).second && in_NA_mod_face(C, face, gamma)) {
          return true;
        }
      }
      std::size_t k = 0;
      while (k < off.size()) {
        const int j = off[k];
        if (++u[j] < maxexp[j]) break;
        u[j] = 0;
        ++k;
      }
      if (k == off.size()) break;
    }
  }
  return false;
}

// Canonical point of p + Q(A cap face): coordinates at the pivots of a
// reduced echelon basis of the span are zeroed.
RatVec canonical_point(const Configuration& C, std::size_t face, RatVec p) {
  std::vector<RatVec> rows;
  for (int j : C.faces().faces[face].columns) rows.push_back(C.column(j));
  const std::size_t d = C.d();
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
  for (std::size_t col = 0; col < d && rank < rows.size(); ++col) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][col] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    rows[rank] = scale(rows[rank], Rat(1) / rows[rank][col]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r != rank && rows[r][col] != 0) {
        rows[r] = sub(rows[r], scale(rows[rank], rows[r][col]));
      }
    }
    pivots.push_back(col);
    ++rank;
  }
  for (std::size_t k = 0; k < rank; ++k) {
    if (p[pivots[k]] != 0) p = sub(p, scale(rows[k], p[pivots[k]]));
  }
  return p;
}

}  // namespace

MonomialIdeal m_chi(const Configuration& C, const RatVec& chi) {
  if (chi.size() != C.d() || !C.in_lattice(chi)) {
    throw Error(ErrorCode::kChiNotInLattice, "chi is not in ZA");
  }
  const std::size_t n = C.n();
  std::vector<Exponent> gens;
  for (int D = 0; complement_meets(C, gens, chi); ++D) {
    MonomialIdeal J(n, gens);
    Exponent u(n, 0);
    u[n - 1] = D;
    while (true) {
      if (!J.contains(u) && in_NA(C, sub(to_rat(C.matrix().apply(u)), chi))) {
        gens.push_back(u);
      }
      // Next exponent of total degree D.
      std::size_t k = n - 1;
      while (k > 0 && u[k] == 0) --k;
      if (k == 0) break;
      const int last = u[k];
      u[k] = 0;
      ++u[k - 1];
      u[n - 1] = last - 1;
    }
  }
  return MonomialIdeal(n, std::move(gens));
}

std::vector<StandardPair> standard_pairs(const MonomialIdeal& M,
                                         const FaceLattice& faces) {
  std::vector<StandardPair> out;
  const std::size_t n = M.n();
  if (M.is_unit()) return out;
  Exponent maxexp(n, 0);
  for (const auto& g : M.generators()) {
    for (std::size_t j = 0; j < n; ++j) maxexp[j] = std::max(maxexp[j], g[j]);
  }
  for (std::size_t t = 0; t < faces.size(); ++t) {
    const Face& face = faces.faces[t];
    std::vector<int> outside;
    for (std::size_t j = 0; j < n; ++j) {
      if (!face.contains_column(static_cast<int>(j))) outside.push_back(static_cast<int>(j));
    }
    bool empty_box = false;
    for (int j : outside) empty_box = empty_box || maxexp[j] == 0;
    if (empty_box) continue;

    auto below_off = [&](const Exponent& m, const Exponent& u, int skip) {
      for (int j : outside) {
        if (j != skip && m[j] > u[j]) return false;
      }
      return true;
    };

    Exponent u(n, 0);
    while (true) {
      bool standard = true;
      for (const auto& m : M.generators()) {
        if (below_off(m, u, -1)) {
          standard = false;
          break;
        }
      }
      for (std::size_t k = 0; k < outside.size() && standard; ++k) {
        bool blocked = false;
        for (const auto& m : M.generators()) {
          if (below_off(m, u, outside[k])) {
            blocked = true;
            break;
          }
        }
        standard = blocked;
      }
      if (standard) out.push_back(StandardPair{u, t});

      std::size_t k = 0;
      while (k < outside.size()) {
        const int j = outside[k];
        if (++u[j] < maxexp[j]) break;
        u[j] = 0;
        ++k;
      }
      if (k == outside.size()) break;
    }
  }
  std::sort(out.begin(), out.end(), [](const StandardPair& a, const StandardPair& b) {
    return a.face != b.face ? a.face < b.face : a.u < b.u;
  });
  return out;
}

BIdeal b_ideal(const Configuration& C, const RatVec& chi) {
  BIdeal B;
  B.chi = chi;
  const MonomialIdeal M = m_chi(C, chi);
  std::set<std::pair<std::size_t, RatVec>> seen;
  for (const auto& sp : standard_pairs(M, C.faces())) {
    RatVec p = to_rat(C.matrix().apply(sp.u));
    RatVec key = canonical_point(C, sp.face, p);
    if (!seen.emplace(sp.face, key).second) continue;
    B.components.push_back(BComponent{std::move(p), sp.face});
  }
  return B;
}

bool component_contains_point(const Configuration& C, const BComponent& c,
                              const RatVec& beta) {
  for (int s : C.faces().faces[c.face].incident_facets) {
    const auto& F = C.facets()[s];
    if (F(beta) != F(c.point)) return false;
  }
  return true;
}

bool v_b_member(const Configuration& C, const BIdeal& B, const RatVec& beta) {
  for (const auto& c : B.components) {
    if (component_contains_point(C, c, beta)) return true;
  }
  return false;
}

std::optional<FactoredPoly> b_poly_avoiding(const Configuration& C,
                                            const BIdeal& B,
                                            const RatVec& point) {
  // Candidate factors F_sigma - c through some component, nonzero at point.
  struct Candidate {
    int facet;
    Rat value;
  };
  std::vector<Candidate> candidates;
  for (const auto& c : B.components) {
    bool any = false;
    for (int s : C.faces().faces[c.face].incident_facets) {
      const auto& F = C.facets()[s];
      const Rat at = F(c.point);
      if (F(point) == at) continue;
      any = true;
      bool seen = false;
      for (const auto& k : candidates) seen = seen || (k.facet == s && k.value == at);
      if (!seen) candidates.push_back(Candidate{s, at});
    }
    if (!any) return std::nullopt;
  }
  auto covers = [&](const Candidate& k, const BComponent& c) {
    const auto& inc = C.faces().faces[c.face].incident_facets;
    return std::find(inc.begin(), inc.end(), k.facet) != inc.end() &&
           C.facets()[k.facet](c.point) == k.value;
  };
  // Greedy cover, first candidate wins ties.
  FactoredPoly b = FactoredPoly::one(C.d());
  std::vector<bool> done(B.components.size(), false);
  while (std::find(done.begin(), done.end(), false) != done.end()) {
    std::size_t best = 0, best_count = 0;
    for (std::size_t k = 0; k < candidates.size(); ++k) {
      std::size_t count = 0;
      for (std::size_t i = 0; i < done.size(); ++i) {
        if (!done[i] && covers(candidates[k], B.components[i])) ++count;
      }
      if (count > best_count) {
        best = k;
        best_count = count;
      }
    }
    for (std::size_t i = 0; i < done.size(); ++i) {
      if (covers(candidates[best], B.components[i])) done[i] = true;
    }
    b.factors.push_back(
        LinearForm{C.facets()[candidates[best].facet].f, -candidates[best].value});
  }
  return b;
}

bool vanishes_on(const Configuration& C, const std::vector<BComponent>& V,
                 const SPoly& b) {
  const int deg = std::max(b.degree(), 0);
  for (const auto& c : V) {
    // A basis of the span of the face columns.
    std::vector<RatVec> basis;
    for (int j : C.faces().faces[c.face].columns) {
      basis.push_back(C.column(j));
      if (rational_rank(basis) < basis.size()) basis.pop_back();
    }
    const std::size_t k = basis.size();
    std::vector<int> t(k, 0);
    while (true) {
      RatVec x = c.point;
      for (std::size_t i = 0; i < k; ++i) x = add(x, scale(basis[i], Rat(t[i])));
      if (b(x) != 0) return false;
      std::size_t i = 0;
      while (i < k && ++t[i] > deg) t[i++] = 0;
      if (i == k) break;
    }
  }
  return true;
}

bool component_subset(const Configuration& C, const BComponent& inner,
                      const BComponent& outer) {
  if (!C.faces().contains[outer.face][inner.face]) return false;
  return component_contains_point(C, outer, inner.point);
}

std::vector<BComponent> irredundant(const Configuration& C,
                                    std::vector<BComponent> components) {
  for (auto& c : components) c.point = canonical_point(C, c.face, c.point);
  std::sort(components.begin(), components.end(),
            [](const BComponent& a, const BComponent& b) {
              return a.face != b.face ? a.face < b.face : lex_less(a.point, b.point);
            });
  components.erase(std::unique(components.begin(), components.end(),
                               [](const BComponent& a, const BComponent& b) {
                                 return a.face == b.face && a.point == b.point;
                               }),
                   components.end());
  std::vector<BComponent> out;
  for (std::size_t i = 0; i < components.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < components.size() && !redundant; ++j) {
      if (i != j && component_subset(C, components[i], components[j])) {
        redundant = true;
      }
    }
    if (!redundant) out.push_back(components[i]);
  }
  return out;
}

bool same_variety(const Configuration& C, const std::vector<BComponent>& a,
                  const std::vector<BComponent>& b) {
  const auto x = irredundant(C, a), y = irredundant(C, b);
  if (x.size() != y.size()) return false;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].face != y[i].face || x[i].point != y[i].point) return false;
  }
  return true;
}

std::vector<BComponent> translate(const std::vector<BComponent>& V,
                                  const RatVec& shift) {
  std::vector<BComponent> out = V;
  for (auto& c : out) c.point = add(c.point, shift);
  return out;
}

}  // namespace ahg
