#include "ahg/classify.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>
#include <thread>

#include "ahg/error.hpp"

namespace ahg {

std::string EProfile::key() const {
  std::ostringstream os;
  for (std::size_t t = 0; t < sets.size(); ++t) {
    if (t > 0) os << ";";
    os << "{";
    for (std::size_t k = 0; k < sets[t].residues.size(); ++k) {
      if (k > 0) os << ",";
      os << to_string(sets[t].residues[k]);
    }
    os << "}";
  }
  return os.str();
}

bool operator==(const EProfile& a, const EProfile& b) {
  if (a.sets.size() != b.sets.size()) return false;
  for (std::size_t t = 0; t < a.sets.size(); ++t) {
    if (a.sets[t].residues != b.sets[t].residues) return false;
  }
  return true;
}

EProfile e_profile(const Configuration& C, const Parameter& beta) {
  EProfile p;
  for (std::size_t t = 0; t < C.faces().size(); ++t) p.sets.push_back(e_tau(C, t, beta));
  return p;
}

IsoDecision decide_isomorphic(const Configuration& C, const Parameter& beta,
                              const Parameter& beta2) {
  IsoDecision out;
  // The whole cone first: it fails exactly when beta - beta2 is not in ZA.
  const std::size_t whole = C.faces().whole();
  if (e_tau(C, whole, beta).residues != e_tau(C, whole, beta2).residues) {
    out.differing_face = whole;
    return out;
  }
  for (std::size_t t = 0; t < C.faces().size(); ++t) {
    if (t == whole) continue;
    if (e_tau(C, t, beta).residues != e_tau(C, t, beta2).residues) {
      out.differing_face = t;
      return out;
    }
  }
  out.isomorphic = true;
  return out;
}

bool isomorphic(const Configuration& C, const Parameter& beta,
                const Parameter& beta2) {
  return decide_isomorphic(C, beta, beta2).isomorphic;
}

std::vector<BComponent> b_minus_plus(const Configuration& C, const RatVec& chi) {
  auto V = translate(b_ideal(C, chi).components, scale(chi, Rat(-1)));
  const auto W = b_ideal(C, scale(chi, Rat(-1))).components;
  V.insert(V.end(), W.begin(), W.end());
  return irredundant(C, std::move(V));
}

namespace {

int max_generator_degree(const Configuration& C) {
  int m = 0;
  for (const auto& g : C.toric().generators()) {
    m = std::max({m, degree(g.plus), degree(g.minus)});
  }
  return m;
}

}  // namespace

IsoWitness iso_witness(const Configuration& C, const Parameter& beta,
                       const Parameter& beta2, int order, bool check_series) {
  const auto decision = decide_isomorphic(C, beta, beta2);
  if (!decision.isomorphic) {
    const auto& cols = C.faces().faces[*decision.differing_face].columns;
    std::string face = "(";
    for (std::size_t k = 0; k < cols.size(); ++k) {
      face += (k ? "," : "") + std::to_string(cols[k] + 1);
    }
    throw Error(ErrorCode::kNotIsomorphic,
                "E_tau differs at the face with columns " + face + ")");
  }
  IsoWitness w;
  w.chi = sub(beta2, beta);
  const RatVec minus_chi = scale(w.chi, Rat(-1));
  const BIdeal Bp = b_ideal(C, w.chi), Bm = b_ideal(C, minus_chi);
  const auto pp = b_poly_avoiding(C, Bp, beta2);
  const auto pm = b_poly_avoiding(C, Bm, beta);
  if (!pp || !pm) {
    throw Error(ErrorCode::kWitnessFailure,
                "no b-polynomial avoids the parameter although the profiles agree");
  }
  if (!vanishes_on(C, Bp.components, pp->expand()) ||
      !vanishes_on(C, Bm.components, pm->expand())) {
    throw Error(ErrorCode::kWitnessFailure, "b-polynomial misses a component");
  }
  w.p_plus = *pp;
  w.p_minus = *pm;
  const auto [u1, v1] = shift_pair(C, w.chi);
  const auto [u2, v2] = shift_pair(C, minus_chi);
  w.P_plus = contiguity_operator(C, w.chi, w.p_plus, u1, v1, false);
  w.P_minus = contiguity_operator(C, minus_chi, w.p_minus, u2, v2, false);
  w.scalar = w.p_plus(beta2) * w.p_minus(beta);
  if (w.scalar == 0) throw Error(ErrorCode::kWitnessFailure, "zero scalar");
  w.weights_ok = verify_weight(w.P_plus.element, C.matrix(), w.chi) &&
                 verify_weight(w.P_minus.element, C.matrix(), minus_chi);
  w.certificates_ok = verify_certificate(w.P_plus, C) && verify_certificate(w.P_minus, C);
  if (!w.weights_ok || !w.certificates_ok) {
    throw Error(ErrorCode::kWitnessFailure, "operator verification failed");
  }
  if (!check_series) return w;

  const int sp = w.P_plus.element.spread(), sm = w.P_minus.element.spread();
  // Keep at least two orders of both checks past the operator spread.
  const int need = std::max(sp + sm, sp + max_generator_degree(C)) + 4;
  w.order = std::max(order, (need + 1) / 2);
  if (w.order > order) {
    w.diagnostics.push_back("series order raised from " + std::to_string(order) +
                            " to " + std::to_string(w.order) +
                            " to cover the operator spread");
  }
  w.exponent = find_minimal_exponent(C, beta, w.order);
  const FormalSeries phi = phi_v(C, w.exponent, w.order);
  const FormalSeries image = apply_operator(w.P_plus.element, phi);
  w.forward = check_solution(C, beta2, image);
  const FormalSeries back = apply_operator(w.P_minus.element, image);
  w.composition_ok = true;
  for (const auto& [x, c] : phi.terms) {
    if (l1_distance(x, phi.base) <= back.radius && back.coefficient(x) != w.scalar * c) {
      w.composition_ok = false;
    }
  }
  for (const auto& [x, c] : back.terms) {
    if (phi.coefficient(x) * w.scalar != c) w.composition_ok = false;
  }
  return w;
}

bool classify_normal(const Configuration& C, const Parameter& beta,
                     const Parameter& beta2) {
  if (!is_normal(C)) throw Error(ErrorCode::kNotNormal, "A is not normal");
  if (!C.in_lattice(sub(beta, beta2))) return false;
  for (const auto& F : C.facets()) {
    const Rat x = F(beta), y = F(beta2);
    const bool nx = is_integral(x) && x >= 0, ny = is_integral(y) && y >= 0;
    if (nx != ny) return false;
  }
  return true;
}

void require_curve(const Configuration& C) {
  const IntMatrix& A = C.matrix();
  bool ok = C.d() == 2 && C.n() >= 2 && A.at(1, 0) == 0;
  for (std::size_t j = 0; ok && j < C.n(); ++j) ok = A.at(0, j) == 1;
  for (std::size_t j = 1; ok && j < C.n(); ++j) ok = A.at(1, j) > A.at(1, j - 1);
  if (ok) {
    Int g = 0;
    for (std::size_t j = 1; j < C.n(); ++j) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), A.at(1, j).get_mpz_t());
    ok = g == 1;
  }
  if (!ok) {
    throw Error(ErrorCode::kNotCurve,
                "A is not (1 ... 1; 0 i_2 ... i_n) with 0 < i_2 < ... < i_n coprime");
  }
}

namespace {

struct CurveFacets {
  std::size_t first = 0;  // vanishes on a_1
  std::size_t last = 0;   // vanishes on a_n
  NumericalSemigroup S_first, S_last;
  long in = 0;
};

CurveFacets curve_facets(const Configuration& C) {
  require_curve(C);
  CurveFacets cf;
  const int n = static_cast<int>(C.n());
  for (std::size_t s = 0; s < C.facets().size(); ++s) {
    const auto& z = C.facets()[s].zero_columns;
    if (z == std::vector<int>{0}) cf.first = s;
    if (z == std::vector<int>{n - 1}) cf.last = s;
  }
  cf.S_first = facet_value_semigroup(C, cf.first);
  cf.S_last = facet_value_semigroup(C, cf.last);
  cf.in = C.matrix().at(1, n - 1).get_si();
  return cf;
}

bool contains_hole(const HoleSet& H, const Parameter& beta) {
  const auto b = to_int(beta);
  return b && std::binary_search(H.holes.begin(), H.holes.end(), *b);
}

}  // namespace

HoleSet curve_holes(const Configuration& C) {
  const CurveFacets cf = curve_facets(C);
  const auto& F1 = C.facets()[cf.first];
  const auto& F2 = C.facets()[cf.last];
  const long in = cf.in;
  const std::vector<RatVec> rows{F1.f, F2.f};
  auto point = [&](long f1, long f2) {
    return *rational_solve(rows, RatVec{Rat(f1), Rat(f2)});
  };
  // Least element of S in the class r mod in.
  auto least = [&](const NumericalSemigroup& S, long r) {
    long x = ((r % in) + in) % in;
    while (!S.contains(x)) x += in;
    return x;
  };
  std::set<IntVec> holes;
  for (long r = 0; r < in; ++r) {
    const long f1_min = least(cf.S_first, r), f2_min = least(cf.S_last, -r);
    if (!C.in_lattice(point(f1_min, f2_min))) continue;
    long f2_star = f2_min, f1_star = f1_min;
    while (!in_NA(C, point(f1_min, f2_star))) f2_star += in;
    while (!in_NA(C, point(f1_star, f2_min))) f1_star += in;
    for (long f1 = f1_min; f1 < f1_star; f1 += in) {
      for (long f2 = f2_min; f2 < f2_star; f2 += in) {
        const RatVec b = point(f1, f2);
        if (C.in_lattice(b) && !in_NA(C, b)) holes.insert(*to_int(b));
      }
    }
  }
  return HoleSet{std::vector<IntVec>(holes.begin(), holes.end())};
}

int curve_part(const Configuration& C, const Parameter& beta) {
  const CurveFacets cf = curve_facets(C);
  if (!C.in_lattice(beta)) return 0;
  if (in_NA(C, beta)) return 1;
  const bool a = cf.S_first.contains(C.facets()[cf.first](beta));
  const bool b = cf.S_last.contains(C.facets()[cf.last](beta));
  if (a && b) return 5;
  if (a) return 2;
  if (b) return 3;
  return 4;
}

bool classify_curve(const Configuration& C, const Parameter& beta,
                    const Parameter& beta2) {
  return classify_curve(C, curve_holes(C), beta, beta2);
}

bool classify_curve(const Configuration& C, const HoleSet& H,
                    const Parameter& beta, const Parameter& beta2) {
  const CurveFacets cf = curve_facets(C);
  if (contains_hole(H, beta)) return contains_hole(H, beta2);
  if (!C.in_lattice(sub(beta, beta2)) || contains_hole(H, beta2)) return false;
  for (std::size_t s : {cf.first, cf.last}) {
    const auto& S = s == cf.first ? cf.S_first : cf.S_last;
    if (S.contains(C.facets()[s](beta)) != S.contains(C.facets()[s](beta2))) return false;
  }
  return true;
}

ClassEnumeration enumerate_classes(const Configuration& C,
                                   const std::vector<std::pair<long, long>>& box,
                                   const EnumerateOptions& options) {
  if (box.size() != C.d()) {
    throw Error(ErrorCode::kInvalidArgument, "box has the wrong dimension");
  }
  std::vector<Parameter> points;
  std::vector<long> x(box.size());
  for (std::size_t i = 0; i < box.size(); ++i) {
    if (box[i].first > box[i].second) return {};
    x[i] = box[i].first;
  }
  while (true) {
    Parameter p(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) p[i] = Rat(x[i]);
    if (options.offset) p = add(p, *options.offset);
    points.push_back(std::move(p));
    std::size_t i = 0;
    while (i < x.size() && ++x[i] > box[i].second) {
      x[i] = box[i].first;
      ++i;
    }
    if (i == x.size()) break;
  }
  if (options.only_NA) {
    std::erase_if(points, [&](const Parameter& p) { return !in_NA(C, p); });
  }

  unsigned threads = options.threads;
  if (threads == 0) {
    threads = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("AHG_THREADS")) {
      const long cap = std::atol(env);
      if (cap > 0) threads = std::min<unsigned>(threads, static_cast<unsigned>(cap));
    }
  }
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(points.size())));

  std::vector<EProfile> profiles(points.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t k; (k = next++) < points.size();) profiles[k] = e_profile(C, points[k]);
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();

  std::map<std::string, ParameterClass> by_key;
  for (std::size_t k = 0; k < points.size(); ++k) {
    std::string key = profiles[k].key();
    auto [it, inserted] = by_key.try_emplace(key);
    ParameterClass& cls = it->second;
    if (inserted) {
      cls.key = key;
      cls.representative = points[k];
      cls.profile = profiles[k];
    } else if (lex_less(points[k], cls.representative)) {
      cls.representative = points[k];
    }
    ++cls.members;
  }
  ClassEnumeration out;
  out.points = points.size();
  for (auto& [key, cls] : by_key) out.classes.push_back(std::move(cls));
  std::sort(out.classes.begin(), out.classes.end(),
            [](const ParameterClass& a, const ParameterClass& b) {
              return lex_less(a.representative, b.representative);
            });
  return out;
}

LaurentFaces laurent_solution_faces(const Configuration& C, const Parameter& beta) {
  LaurentFaces out;
  const FaceLattice& L = C.faces();
  std::vector<bool> zero(L.size());
  for (std::size_t t = 0; t < L.size(); ++t) zero[t] = e_tau(C, t, beta).contains_zero();
  for (std::size_t t = 0; t < L.size(); ++t) {
    if (L.faces[t].dim != L.faces[t].columns.size() || !zero[t]) continue;
    bool minimal = true;
    for (std::size_t s = 0; s < L.size() && minimal; ++s) {
      if (s != t && L.contains[t][s] && zero[s]) minimal = false;
    }
    if (minimal) out.faces.push_back(t);
  }
  out.count = out.faces.size();
  return out;
}

namespace {

// Normalized volume of conv(cols) inside h = 1, for columns spanning Z^k.
Int pyramid_volume(const std::vector<IntVec>& cols, std::size_t k, std::size_t apex) {
  if (k == 1) return 1;
  const IntMatrix A = IntMatrix::from_columns(k, cols);
  const LatticeBasis full = LatticeBasis::full(k);
  Int total = 0;
  for (const auto& F : facets(A, full)) {
    const Rat height = F(to_rat(cols[apex]));
    if (height == 0) continue;
    std::vector<IntVec> face_cols;
    for (int j : F.zero_columns) face_cols.push_back(cols[j]);
    const LatticeBasis span = saturate_within(full, face_cols);
    std::vector<IntVec> coords;
    for (const auto& c : face_cols) coords.push_back(*span.coordinates(to_rat(c)));
    total += height.get_num() * pyramid_volume(coords, k - 1, 0);
  }
  return total;
}

}  // namespace

Int normalized_volume(const Configuration& C, std::size_t apex) {
  if (apex >= C.n()) throw Error(ErrorCode::kInvalidArgument, "apex out of range");
  std::vector<IntVec> cols;
  for (std::size_t j = 0; j < C.n(); ++j) cols.push_back(*C.lattice().coordinates(C.column(j)));
  return pyramid_volume(cols, C.d(), apex);
}

}  // namespace ahg
