#include <algorithm>
#include <random>
#include <set>

#include "ahg/classify.hpp"
#include "ahg/error.hpp"
#include "ahg_cli/cli.hpp"

namespace ahg::cli {

IntMatrix random_homogeneous_matrix(unsigned long seed, std::size_t max_d,
                                    std::size_t max_n, long max_entry) {
  std::mt19937_64 rng(seed);
  auto pick = [&](long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(rng);
  };
  while (true) {
    const std::size_t d = static_cast<std::size_t>(pick(2, static_cast<long>(max_d)));
    const std::size_t n = static_cast<std::size_t>(pick(static_cast<long>(d) + 1, static_cast<long>(max_n)));
    IntMatrix A(d, n);
    for (std::size_t j = 0; j < n; ++j) {
      A.at(0, j) = 1;
      for (std::size_t i = 1; i < d; ++i) A.at(i, j) = pick(0, max_entry);
    }
    std::set<IntVec> cols;
    for (std::size_t j = 0; j < n; ++j) cols.insert(A.column(j));
    if (cols.size() == n && rational_rank(A) == d) return A;
  }
}

namespace {

class Suite {
 public:
  Json results = Json::array();
  bool all = true;

  template <class F>
  void run(const char* name, F&& body) {
    Json j;
    j["property"] = name;
    std::string detail;
    bool pass = false;
    try {
      pass = body(detail);
    } catch (const Error& e) {
      detail = std::string(error_code_name(e.code())) + ": " + e.what();
    } catch (const std::exception& e) {
      detail = e.what();
    }
    j["pass"] = pass;
    if (!detail.empty()) j["detail"] = detail;
    all = all && pass;
    results.push_back(std::move(j));
  }
};

RatVec random_lattice_point(const Configuration& C, std::mt19937_64& rng, long lo, long hi) {
  RatVec beta(C.d(), Rat(0));
  for (std::size_t j = 0; j < C.n(); ++j) {
    const long c = std::uniform_int_distribution<long>(lo, hi)(rng);
    beta = add(beta, scale(C.column(j), Rat(c)));
  }
  return beta;
}

// a_i, -a_i or a_i - a_j: keeps the operators of modest degree.
RatVec small_shift(const Configuration& C, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> col(0, C.n() - 1);
  const std::size_t i = col(rng), j = col(rng);
  switch (std::uniform_int_distribution<int>(0, 2)(rng)) {
    case 0: return C.column(i);
    case 1: return scale(C.column(i), Rat(-1));
    default: return sub(C.column(i), C.column(j));
  }
}

bool residues_subset(const ETauSet& a, const ETauSet& b) {
  return std::includes(b.residues.begin(), b.residues.end(), a.residues.begin(),
                       a.residues.end());
}

void monomials(std::size_t n, int left, std::size_t j, Exponent& cur,
               std::vector<Exponent>& out) {
  if (j == n) {
    out.push_back(cur);
    return;
  }
  for (int k = 0; k <= left; ++k) {
    cur[j] = k;
    monomials(n, left - k, j + 1, cur, out);
  }
  cur[j] = 0;
}

}  // namespace

Json run_checks(const IntMatrix& A, unsigned long seed, int order) {
  const Configuration C(A);
  std::mt19937_64 rng(seed);
  Suite s;
  const std::size_t d = C.d(), n = C.n();

  s.run("homogeneity", [&](std::string&) {
    for (std::size_t j = 0; j < n; ++j) {
      if (C.degree(C.column(j)) != 1) return false;
    }
    return true;
  });

  s.run("facets_primitive", [&](std::string& detail) {
    for (const auto& F : C.facets()) {
      std::vector<RatVec> zero;
      for (std::size_t j = 0; j < n; ++j) {
        const Rat v = F(C.column(j));
        if (v < 0) return false;
        if (v == 0) zero.push_back(C.column(j));
      }
      if (rational_rank(zero) != d - 1) return false;
      Int g = 0;
      for (const auto& b : C.lattice().basis()) {
        const Rat v = F(b);
        if (!is_integral(v)) return false;
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_num_mpz_t());
      }
      if (g != 1) {
        detail = "facet value gcd " + g.get_str();
        return false;
      }
    }
    return true;
  });

  s.run("face_lattice_closed", [&](std::string&) {
    const auto& L = C.faces();
    for (const auto& f : L.faces) {
      std::vector<int> closure;
      for (std::size_t j = 0; j < n; ++j) {
        bool all_zero = true;
        for (int s2 : f.incident_facets) all_zero = all_zero && C.facets()[s2](C.column(j)) == 0;
        if (all_zero) closure.push_back(static_cast<int>(j));
      }
      if (!f.incident_facets.empty() && closure != f.columns) return false;
      for (const auto& g : L.faces) {
        std::vector<int> meet;
        std::set_intersection(f.columns.begin(), f.columns.end(), g.columns.begin(),
                              g.columns.end(), std::back_inserter(meet));
        if (!L.find(meet)) return false;
      }
    }
    return true;
  });

  s.run("positive_functional", [&](std::string&) {
    const auto& L = C.faces();
    for (std::size_t t = 0; t + 1 < L.size(); ++t) {
      const RatVec g = positive_functional(L, C.facets(), t);
      for (std::size_t j = 0; j < n; ++j) {
        const bool inside = L.faces[t].contains_column(static_cast<int>(j));
        if ((dot(g, C.column(j)) > 0) == inside) return false;
      }
    }
    return true;
  });

  s.run("toric_generators", [&](std::string&) {
    for (const auto& g : C.toric().generators()) {
      if (A.apply(g.plus) != A.apply(g.minus)) return false;
    }
    const GroebnerBasis& G = C.toric().groebner(TermOrder::grevlex(n));
    const LatticeBasis kernel = kernel_lattice(A);
    for (const auto& u : kernel.basis()) {
      Binomial b{Exponent(n, 0), Exponent(n, 0)};
      for (std::size_t j = 0; j < n; ++j) {
        const int x = static_cast<int>(u[j].get_si());
        (x > 0 ? b.plus : b.minus)[j] = std::abs(x);
      }
      if (!G.is_zero_mod(b)) return false;
    }
    return true;
  });

  s.run("facet_criterion", [&](std::string& detail) {
    for (int trial = 0; trial < 20; ++trial) {
      const RatVec beta = random_lattice_point(C, rng, -2, 3);
      for (std::size_t f = 0; f < C.facets().size(); ++f) {
        const auto face = C.faces().find(C.facets()[f].zero_columns);
        const bool nonempty = !e_tau(C, *face, beta).residues.empty();
        const bool in_values = facet_value_semigroup(C, f).contains(C.facets()[f](beta));
        if (nonempty != in_values) {
          detail = "beta " + to_string(beta);
          return false;
        }
      }
    }
    return true;
  });

  s.run("shift_inclusion", [&](std::string& detail) {
    for (int trial = 0; trial < 10; ++trial) {
      const RatVec beta = random_lattice_point(C, rng, -2, 2);
      const std::size_t j = std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
      const RatVec shifted = add(beta, C.column(j));
      for (std::size_t t = 0; t < C.faces().size(); ++t) {
        if (!residues_subset(e_tau(C, t, beta), e_tau(C, t, shifted))) {
          detail = "beta " + to_string(beta);
          return false;
        }
      }
    }
    return true;
  });

  s.run("m_chi_membership", [&](std::string& detail) {
    std::vector<Exponent> box;
    Exponent cur(n, 0);
    monomials(n, 4, 0, cur, box);
    for (int trial = 0; trial < 5; ++trial) {
      const RatVec chi = random_lattice_point(C, rng, -2, 2);
      const MonomialIdeal M = m_chi(C, chi);
      for (const auto& u : box) {
        const bool direct = in_NA(C, sub(to_rat(A.apply(u)), chi)).has_value();
        if (M.contains(u) != direct) {
          detail = "chi " + to_string(chi) + " u " + to_string(u);
          return false;
        }
      }
    }
    return true;
  });

  s.run("b_ideal_shift_law", [&](std::string& detail) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const RatVec& chi = C.column(i);
        const RatVec& chi2 = C.column(j);
        auto rhs = b_ideal(C, chi).components;
        const auto moved = translate(b_ideal(C, chi2).components, chi);
        rhs.insert(rhs.end(), moved.begin(), moved.end());
        if (!same_variety(C, b_ideal(C, add(chi, chi2)).components, irredundant(C, rhs))) {
          detail = "columns " + std::to_string(i + 1) + "," + std::to_string(j + 1);
          return false;
        }
      }
    }
    return true;
  });

  s.run("iso_witness", [&](std::string& detail) {
    int found = 0, skipped = 0;
    for (int trial = 0; trial < 40 && found < 2; ++trial) {
      const RatVec beta = random_lattice_point(C, rng, -1, 2);
      const RatVec beta2 = add(beta, small_shift(C, rng));
      if (beta == beta2 || !isomorphic(C, beta, beta2)) continue;
      ++found;
      const IsoWitness w = iso_witness(C, beta, beta2, order);
      bool composition = true;
      if (w.P_minus.element.size() * w.P_plus.element.size() <= 20000) {
        const WeylElement comp =
            w.P_minus.element * w.P_plus.element -
            substitute_euler(w.p_plus.shifted(w.chi) * w.p_minus, A);
        composition = in_left_ideal(comp, C);
      } else {
        ++skipped;
      }
      if (w.scalar == 0 || !w.weights_ok || !w.certificates_ok || !w.forward.ok() ||
          !w.composition_ok || !composition) {
        detail = "beta " + to_string(beta) + " beta2 " + to_string(beta2);
        return false;
      }
    }
    if (found == 0) detail = "no isomorphic pair sampled";
    if (skipped > 0) {
      detail = std::to_string(skipped) + " operator product(s) too large for the D I_A test";
    }
    return true;
  });

  s.run("volume_apex_independent", [&](std::string& detail) {
    const Int v = normalized_volume(C, 0);
    for (std::size_t a = 1; a < n; ++a) {
      if (normalized_volume(C, a) != v) return false;
    }
    detail = "volume " + v.get_str();
    return true;
  });

  s.run("normal_implications", [&](std::string& detail) {
    if (!is_normal(C)) {
      detail = "not normal";
      return true;
    }
    for (std::size_t t = 0; t < C.faces().size(); ++t) {
      if (C.face_data(t).index != 1) return false;
    }
    for (std::size_t f = 0; f < C.facets().size(); ++f) {
      if (!facet_value_semigroup(C, f).gaps.empty()) return false;
    }
    return true;
  });

  Json out;
  out["all_pass"] = s.all;
  out["properties"] = s.results;
  return out;
}

}  // namespace ahg::cli
