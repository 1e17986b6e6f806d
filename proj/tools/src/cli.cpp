#include "ahg_cli/cli.hpp"

#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "ahg/classify.hpp"
#include "ahg/error.hpp"

namespace ahg::cli {

namespace {

const Int kSafeMax("9007199254740991");

Error parse_error(const std::string& detail) {
  return Error(ErrorCode::kParseError, detail);
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

Int parse_int(const std::string& token) {
  Int x;
  const std::string t = token.size() > 1 && token[0] == '+' ? token.substr(1) : token;
  if (t.empty() || x.set_str(t, 10) != 0) throw parse_error("not an integer: '" + token + "'");
  return x;
}

Int json_int(const Json& j) {
  if (j.is_number_integer()) return Int(std::to_string(j.get<long long>()));
  if (j.is_number_unsigned()) return Int(std::to_string(j.get<unsigned long long>()));
  if (j.is_string()) return parse_int(j.get<std::string>());
  throw parse_error("matrix entry is not an integer: " + j.dump());
}

}  // namespace

Json to_json(const Int& x) {
  if (abs(x) <= kSafeMax) return Json(x.get_si());
  return Json(x.get_str());
}

Json to_json(const Rat& x) {
  Rat r = x;
  r.canonicalize();
  if (is_integral(r)) return to_json(r.get_num());
  return Json(to_string(r));
}

Json to_json(const IntVec& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

Json to_json(const RatVec& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

Json to_json(const Exponent& v) {
  Json out = Json::array();
  for (int x : v) out.push_back(x);
  return out;
}

Json to_json(const IntMatrix& A) {
  Json out = Json::array();
  for (std::size_t i = 0; i < A.rows(); ++i) out.push_back(to_json(A.row(i)));
  return out;
}

Json columns_json(const std::vector<int>& cols) {
  Json out = Json::array();
  for (int c : cols) out.push_back(c + 1);
  return out;
}

IntMatrix parse_matrix(const std::string& text) {
  const std::string t = trim(text);
  std::vector<IntVec> rows;
  if (!t.empty() && (t[0] == '{' || t[0] == '[')) {
    Json j;
    try {
      j = Json::parse(t);
    } catch (const Json::parse_error& e) {
      throw parse_error(std::string("invalid JSON: ") + e.what());
    }
    if (j.is_object()) {
      if (!j.contains("A")) throw parse_error("JSON object has no \"A\" key");
      j = j["A"];
    }
    if (!j.is_array()) throw parse_error("\"A\" must be an array of rows");
    for (const auto& r : j) {
      if (!r.is_array()) throw parse_error("matrix row is not an array");
      IntVec row;
      for (const auto& x : r) row.push_back(json_int(x));
      rows.push_back(std::move(row));
    }
  } else {
    std::string line;
    std::string normalized = t;
    for (char& c : normalized) {
      if (c == ';') c = '\n';
    }
    std::istringstream lines(normalized);
    while (std::getline(lines, line)) {
      std::istringstream tokens(line);
      IntVec row;
      for (std::string tok; tokens >> tok;) row.push_back(parse_int(tok));
      if (!row.empty()) rows.push_back(std::move(row));
    }
  }
  if (rows.empty() || rows[0].empty()) throw parse_error("empty matrix");
  for (const auto& r : rows) {
    if (r.size() != rows[0].size()) throw parse_error("matrix rows have different lengths");
  }
  return IntMatrix::from_rows(rows);
}

IntMatrix load_matrix(const std::string& source) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(source, ec)) {
    std::ifstream in(source);
    if (!in) throw parse_error("cannot read " + source);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_matrix(buf.str());
  }
  return parse_matrix(source);
}

RatVec parse_vector(const std::string& text) {
  RatVec v;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    const std::string t = trim(item);
    const auto r = parse_rat(t);
    if (!r) throw parse_error("not a rational number: '" + t + "'");
    v.push_back(*r);
  }
  if (v.empty()) throw parse_error("empty vector");
  return v;
}

std::vector<std::pair<long, long>> parse_box(const std::string& text) {
  std::vector<std::pair<long, long>> box;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw parse_error("box range without ':': '" + item + "'");
    const Int lo = parse_int(trim(item.substr(0, colon)));
    const Int hi = parse_int(trim(item.substr(colon + 1)));
    if (!lo.fits_slong_p() || !hi.fits_slong_p()) throw parse_error("box bound out of range");
    box.emplace_back(lo.get_si(), hi.get_si());
  }
  if (box.empty()) throw parse_error("empty box");
  return box;
}

namespace {

struct Options {
  std::string matrix;
  std::string beta;
  std::string beta2;
  std::string chi;
  std::string box;
  std::string offset;
  int order = 8;
  unsigned long seed = 1;
  bool only_na = false;
  bool seed_given = false;
};

struct Context {
  Options opt;
  Json input = Json::object();
  Json diagnostics = Json::array();
};

RatVec require_vector(const std::string& text, const char* name, std::size_t d,
                      Context& ctx) {
  if (text.empty()) throw parse_error(std::string("missing ") + name);
  RatVec v = parse_vector(text);
  if (v.size() != d) {
    throw parse_error(std::string(name) + " has " + std::to_string(v.size()) +
                      " entries, expected " + std::to_string(d));
  }
  ctx.input[name] = to_json(v);
  return v;
}

Json face_json(const Configuration& C, std::size_t t) {
  return columns_json(C.faces().faces[t].columns);
}

Json eset_json(const ETauSet& E) {
  Json out = Json::array();
  for (const auto& r : E.residues) out.push_back(to_json(r));
  return out;
}

Json profile_json(const Configuration& C, const EProfile& p) {
  Json out = Json::array();
  for (const auto& E : p.sets) {
    Json f;
    f["face"] = face_json(C, E.face);
    f["E"] = eset_json(E);
    out.push_back(std::move(f));
  }
  return out;
}

Json cmd_faces(const Configuration& C, Context&) {
  Json r;
  Int index = 1;
  for (const auto& e : smith_invariants(C.matrix())) index *= e;
  r["lattice_index"] = to_json(index);
  r["normal"] = is_normal(C);
  Json facets = Json::array();
  for (const auto& F : C.facets()) {
    Json f;
    f["support_function"] = to_json(F.f);
    f["zero_columns"] = columns_json(F.zero_columns);
    facets.push_back(std::move(f));
  }
  r["facets"] = std::move(facets);
  Json faces = Json::array();
  for (std::size_t t = 0; t < C.faces().size(); ++t) {
    const auto& face = C.faces().faces[t];
    const auto& data = C.face_data(t);
    Json f;
    f["columns"] = columns_json(face.columns);
    f["dim"] = face.dim;
    f["index"] = to_json(data.index);
    Json res = Json::array();
    for (const auto& x : data.residues) res.push_back(to_json(x));
    f["residues"] = std::move(res);
    faces.push_back(std::move(f));
  }
  r["faces"] = std::move(faces);
  return r;
}

Json cmd_esets(const Configuration& C, Context& ctx) {
  const RatVec beta = require_vector(ctx.opt.beta, "beta", C.d(), ctx);
  Json r;
  r["in_NA"] = in_NA(C, beta).has_value();
  const Resonance res = resonance(C, beta);
  r["nonresonant"] = res.nonresonant;
  r["semi_nonresonant"] = res.semi_nonresonant;
  r["profile"] = profile_json(C, e_profile(C, beta));
  return r;
}

bool is_curve(const Configuration& C) {
  try {
    require_curve(C);
    return true;
  } catch (const Error&) {
    return false;
  }
}

Json cmd_classify(const Configuration& C, Context& ctx) {
  const RatVec beta = require_vector(ctx.opt.beta, "beta", C.d(), ctx);
  const RatVec beta2 = require_vector(ctx.opt.beta2, "beta2", C.d(), ctx);
  const IsoDecision dec = decide_isomorphic(C, beta, beta2);
  Json r;
  r["isomorphic"] = dec.isomorphic;
  if (dec.differing_face) r["differing_face"] = face_json(C, *dec.differing_face);
  if (is_normal(C) && classify_normal(C, beta, beta2) != dec.isomorphic) {
    throw Error(ErrorCode::kWitnessFailure, "normal criterion disagrees with E-profiles");
  }
  if (is_curve(C) && classify_curve(C, beta, beta2) != dec.isomorphic) {
    throw Error(ErrorCode::kWitnessFailure, "curve criterion disagrees with E-profiles");
  }
  return r;
}

Json operator_json(const SymmetryOperator& P) {
  Json j;
  j["chi"] = to_json(P.chi);
  j["b"] = P.b.to_string();
  j["shift_plus"] = to_json(P.u);
  j["shift_minus"] = to_json(P.v);
  j["terms"] = P.element.size();
  j["spread"] = P.element.spread();
  j["certificate_terms"] = P.certificate.pairs.size();
  j["operator"] = P.element.to_string();
  return j;
}

Json cmd_witness(const Configuration& C, Context& ctx) {
  const RatVec beta = require_vector(ctx.opt.beta, "beta", C.d(), ctx);
  const RatVec beta2 = require_vector(ctx.opt.beta2, "beta2", C.d(), ctx);
  ctx.input["order"] = ctx.opt.order;
  const IsoWitness w = iso_witness(C, beta, beta2, ctx.opt.order);
  for (const auto& d : w.diagnostics) ctx.diagnostics.push_back(d);
  if (!w.forward.ok()) {
    throw Error(ErrorCode::kWitnessFailure, "series residual: " + w.forward.failure);
  }
  if (!w.composition_ok) {
    throw Error(ErrorCode::kWitnessFailure, "composition does not act by the scalar");
  }
  Json r;
  r["chi"] = to_json(w.chi);
  r["scalar"] = to_json(w.scalar);
  r["p_plus"] = w.p_plus.to_string();
  r["p_minus"] = w.p_minus.to_string();
  r["weights_ok"] = w.weights_ok;
  r["certificates_ok"] = w.certificates_ok;
  Json s;
  s["order"] = w.order;
  s["exponent"] = to_json(w.exponent);
  s["forward_residual_zero"] = w.forward.ok();
  s["checked_order"] = w.forward.order;
  s["composition_ok"] = w.composition_ok;
  r["series"] = std::move(s);
  r["P_plus"] = operator_json(w.P_plus);
  r["P_minus"] = operator_json(w.P_minus);
  ctx.diagnostics.push_back("series truncated at order " + std::to_string(w.order) +
                            "; residuals checked through order " +
                            std::to_string(w.forward.order));
  return r;
}

Json cmd_enumerate(const Configuration& C, Context& ctx) {
  if (ctx.opt.box.empty()) throw parse_error("missing --box");
  const auto box = parse_box(ctx.opt.box);
  if (box.size() != C.d()) throw parse_error("--box needs one range per row of A");
  ctx.input["box"] = ctx.opt.box;
  EnumerateOptions eo;
  eo.only_NA = ctx.opt.only_na;
  if (eo.only_NA) ctx.input["only_na"] = true;
  if (!ctx.opt.offset.empty()) {
    eo.offset = require_vector(ctx.opt.offset, "offset", C.d(), ctx);
  }
  const ClassEnumeration e = enumerate_classes(C, box, eo);
  Json r;
  r["class_count"] = e.classes.size();
  r["points"] = e.points;
  Json classes = Json::array();
  for (const auto& cls : e.classes) {
    Json c;
    c["representative"] = to_json(cls.representative);
    c["members"] = cls.members;
    c["profile"] = profile_json(C, cls.profile);
    classes.push_back(std::move(c));
  }
  r["classes"] = std::move(classes);
  return r;
}

Json cmd_holes(const Configuration& C, Context&) {
  const HoleSet H = curve_holes(C);
  Json r;
  Json holes = Json::array();
  for (const auto& h : H.holes) holes.push_back(to_json(h));
  r["holes"] = std::move(holes);
  Json semigroups = Json::array();
  for (std::size_t s = 0; s < C.facets().size(); ++s) {
    const NumericalSemigroup S = facet_value_semigroup(C, s);
    Json j;
    j["zero_columns"] = columns_json(C.facets()[s].zero_columns);
    j["gaps"] = S.gaps;
    j["frobenius"] = S.frobenius;
    semigroups.push_back(std::move(j));
  }
  r["facet_semigroups"] = std::move(semigroups);
  return r;
}

Json components_json(const Configuration& C, const std::vector<BComponent>& V) {
  Json out = Json::array();
  for (const auto& c : V) {
    Json j;
    j["point"] = to_json(c.point);
    j["face"] = face_json(C, c.face);
    out.push_back(std::move(j));
  }
  return out;
}

Json cmd_bideal(const Configuration& C, Context& ctx) {
  const RatVec chi = require_vector(ctx.opt.chi, "chi", C.d(), ctx);
  const MonomialIdeal M = m_chi(C, chi);
  const BIdeal B = b_ideal(C, chi);
  Json r;
  Json gens = Json::array();
  for (const auto& g : M.generators()) gens.push_back(to_json(g));
  r["m_chi"] = std::move(gens);
  Json pairs = Json::array();
  for (const auto& sp : standard_pairs(M, C.faces())) {
    Json j;
    j["u"] = to_json(sp.u);
    j["face"] = face_json(C, sp.face);
    pairs.push_back(std::move(j));
  }
  r["standard_pairs"] = std::move(pairs);
  r["unit"] = B.is_unit();
  r["components"] = components_json(C, B.components);
  return r;
}

Json cmd_contig(const Configuration& C, Context& ctx) {
  const RatVec chi = require_vector(ctx.opt.chi, "chi", C.d(), ctx);
  const BIdeal B = b_ideal(C, chi);
  RatVec avoid(C.d());
  if (!ctx.opt.beta.empty()) {
    // P maps solutions at beta to beta + chi, where b must not vanish.
    avoid = add(require_vector(ctx.opt.beta, "beta", C.d(), ctx), chi);
  } else {
    // A point off every component, so b only needs to vanish on V(B_chi).
    static const long primes[] = {7919, 7927, 7933, 7937, 7949, 7951, 7963, 7993};
    for (std::size_t i = 0; i < C.d(); ++i) avoid[i] = Rat(1, primes[i % 8] + i);
  }
  const auto b = b_poly_avoiding(C, B, avoid);
  if (!b) {
    throw Error(ErrorCode::kNotInBIdeal, "the point " + to_string(avoid) + " lies in V(B_chi)");
  }
  const auto [u, v] = shift_pair(C, chi);
  const SymmetryOperator P = contiguity_operator(C, chi, *b, u, v);
  Json r = operator_json(P);
  r["weight_ok"] = verify_weight(P.element, C.matrix(), chi);
  r["certificate_ok"] = verify_certificate(P, C);
  if (!ctx.opt.beta.empty()) r["b_at_beta_plus_chi"] = to_json((*b)(avoid));
  return r;
}

Json cmd_laurent(const Configuration& C, Context& ctx) {
  const RatVec beta = require_vector(ctx.opt.beta, "beta", C.d(), ctx);
  const LaurentFaces L = laurent_solution_faces(C, beta);
  Json r;
  Json faces = Json::array();
  for (std::size_t t : L.faces) faces.push_back(face_json(C, t));
  r["faces"] = std::move(faces);
  r["count"] = L.count;
  r["status"] = "asserted";
  return r;
}

Json cmd_volume(const Configuration& C, Context&) {
  const Int v = normalized_volume(C, 0);
  bool same = true;
  for (std::size_t a = 1; a < C.n(); ++a) same = same && normalized_volume(C, a) == v;
  Json r;
  r["normalized_volume"] = to_json(v);
  r["apex_independent"] = same;
  return r;
}

using Handler = std::function<Json(const Configuration&, Context&)>;

Json error_json(const std::string& command, std::string_view code,
                const std::string& detail) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = command;
  j["error"] = std::string(code);
  j["detail"] = detail;
  return j;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out) {
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out);
}

int run(int argc, const char* const* argv, std::ostream& out) {
  CLI::App app{"Isomorphism classes of A-hypergeometric systems", "ahg"};
  app.require_subcommand(1);
  Context ctx;
  Options& o = ctx.opt;

  struct Command {
    const char* name;
    const char* help;
    bool beta, beta2, chi, box, order, seed, matrix_required;
    Handler handler;
  };
  const std::vector<Command> commands = {
      {"faces", "facets, faces and face residues", false, false, false, false, false, false, true, cmd_faces},
      {"esets", "E_tau(beta) for every face", true, false, false, false, false, false, true, cmd_esets},
      {"classify", "decide whether M_A(beta) and M_A(beta2) are isomorphic", true, true, false, false, false, false, true, cmd_classify},
      {"witness", "explicit isomorphism M_A(beta) -> M_A(beta2)", true, true, false, false, true, false, true, cmd_witness},
      {"enumerate", "isomorphism classes of the lattice points of a box", false, false, false, true, false, false, true, cmd_enumerate},
      {"holes", "holes of a monomial curve", false, false, false, false, false, false, true, cmd_holes},
      {"bideal", "M_chi, its standard pairs and V(B_chi)", false, false, true, false, false, false, true, cmd_bideal},
      {"contig", "a contiguity operator of weight chi", true, false, true, false, false, false, true, cmd_contig},
      {"laurent", "faces carrying Laurent polynomial solutions", true, false, false, false, false, false, true, cmd_laurent},
      {"volume", "normalized volume of conv(A)", false, false, false, false, false, false, true, cmd_volume},
      {"check", "invariant suite on A or a random matrix", false, false, false, false, true, true, false, nullptr},
  };
  std::vector<std::pair<CLI::App*, const Command*>> subs;
  for (const auto& s : commands) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    auto* m = sub->add_option("-A,--matrix", o.matrix, "matrix file or inline rows");
    if (s.matrix_required) m->required();
    if (s.beta) sub->add_option("-b,--beta", o.beta, "parameter, comma separated rationals");
    if (s.beta2) sub->add_option("--b2,--beta2", o.beta2, "second parameter");
    if (s.chi) sub->add_option("--chi", o.chi, "weight in ZA");
    if (s.box) {
      sub->add_option("--box", o.box, "lo:hi per coordinate");
      sub->add_flag("--only-na", o.only_na, "keep only points of NA");
      sub->add_option("--offset", o.offset, "rational vector added to every point");
    }
    if (s.order) sub->add_option("--order", o.order, "series truncation order")->check(CLI::Range(1, 64));
    if (s.seed) sub->add_option("--seed", o.seed, "random instance seed");
    subs.emplace_back(sub, &s);
  }

  // CLI11 reads "-b2" as "-b 2"; accept the single-dash spelling as well.
  std::vector<std::string> fixed;
  for (int i = 0; i < argc; ++i) {
    std::string a = argv[i];
    if (a == "-b2") a = "--b2";
    fixed.push_back(std::move(a));
  }
  std::vector<const char*> fixed_argv;
  for (const auto& a : fixed) fixed_argv.push_back(a.c_str());

  std::string command;
  try {
    app.parse(static_cast<int>(fixed_argv.size()), fixed_argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    for (const auto& [sub, s] : subs) {
      if (sub->parsed()) command = s->name;
    }
    out << error_json(command, "PARSE_ERROR", e.what()).dump(2) << "\n";
    return 2;
  }

  const Command* cmd = nullptr;
  for (const auto& [sub, s] : subs) {
    if (sub->parsed()) cmd = s;
  }
  command = cmd->name;
  try {
    Json result;
    if (command == "check") {
      IntMatrix A;
      if (o.matrix.empty()) {
        A = random_homogeneous_matrix(o.seed);
        ctx.input["seed"] = o.seed;
      } else {
        A = load_matrix(o.matrix);
        ctx.input["seed"] = o.seed;
      }
      ctx.input["A"] = to_json(A);
      ctx.input["order"] = o.order;
      result = run_checks(A, o.seed, o.order);
    } else {
      const IntMatrix A = load_matrix(o.matrix);
      ctx.input["A"] = to_json(A);
      const Configuration C(A);
      result = cmd->handler(C, ctx);
    }
    Json env;
    env["schema_version"] = kSchemaVersion;
    env["command"] = command;
    env["input"] = ctx.input;
    env["result"] = result;
    env["diagnostics"] = ctx.diagnostics;
    out << env.dump(2) << "\n";
    if (command == "check" && !result["all_pass"].get<bool>()) return 1;
    return 0;
  } catch (const Error& e) {
    out << error_json(command, error_code_name(e.code()), e.what()).dump(2) << "\n";
    return is_input_error(e.code()) ? 2 : 1;
  } catch (const std::exception& e) {
    out << error_json(command, "INTERNAL", e.what()).dump(2) << "\n";
    return 1;
  }
}

}  // namespace ahg::cli
