#include "ahg/arith.hpp"

#include <cassert>

#include "ahg/error.hpp"

namespace ahg {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNotHomogeneous: return "NOT_HOMOGENEOUS";
    case ErrorCode::kNotFullDim: return "NOT_FULL_DIM";
    case ErrorCode::kNotSublattice: return "NOT_SUBLATTICE";
    case ErrorCode::kWholeCone: return "WHOLE_CONE";
    case ErrorCode::kChiNotInLattice: return "CHI_NOT_IN_LATTICE";
    case ErrorCode::kRightFactorMissing: return "RIGHT_FACTOR_MISSING";
    case ErrorCode::kNotInBIdeal: return "NOT_IN_B_IDEAL";
    case ErrorCode::kNotMinimal: return "NOT_MINIMAL";
    case ErrorCode::kNotIsomorphic: return "NOT_ISOMORPHIC";
    case ErrorCode::kWitnessFailure: return "WITNESS_FAILURE";
    case ErrorCode::kNotNormal: return "NOT_NORMAL";
    case ErrorCode::kNotCurve: return "NOT_CURVE";
    case ErrorCode::kInvalidArgument: return "INVALID_ARGUMENT";
    case ErrorCode::kParseError: return "PARSE_ERROR";
  }
  return "UNKNOWN";
}

bool is_input_error(ErrorCode code) {
  switch (code) {
    case ErrorCode::kRightFactorMissing:
    case ErrorCode::kWitnessFailure:
      return false;
    default:
      return true;
  }
}

bool is_integral(const RatVec& v) {
  for (const auto& x : v) {
    if (!is_integral(x)) return false;
  }
  return true;
}

RatVec to_rat(const IntVec& v) {
  RatVec out;
  out.reserve(v.size());
  for (const auto& x : v) out.emplace_back(x);
  return out;
}

RatVec to_rat(const Exponent& v) {
  RatVec out;
  out.reserve(v.size());
  for (int x : v) out.emplace_back(x);
  return out;
}

std::optional<IntVec> to_int(const RatVec& v) {
  IntVec out;
  out.reserve(v.size());
  for (const auto& x : v) {
    if (!is_integral(x)) return std::nullopt;
    out.push_back(x.get_num());
  }
  return out;
}

Rat dot(const RatVec& a, const RatVec& b) {
  assert(a.size() == b.size());
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rat dot(const RatVec& a, const IntVec& b) {
  assert(a.size() == b.size());
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Int dot(const IntVec& a, const IntVec& b) {
  assert(a.size() == b.size());
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

RatVec add(const RatVec& a, const RatVec& b) {
  assert(a.size() == b.size());
  RatVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

RatVec sub(const RatVec& a, const RatVec& b) {
  assert(a.size() == b.size());
  RatVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

RatVec scale(const RatVec& a, const Rat& s) {
  RatVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] * s;
  return out;
}

bool is_zero(const RatVec& v) {
  for (const auto& x : v) {
    if (x != 0) return false;
  }
  return true;
}

bool is_zero(const IntVec& v) {
  for (const auto& x : v) {
    if (x != 0) return false;
  }
  return true;
}

Exponent add(const Exponent& a, const Exponent& b) {
  Exponent out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

Exponent sub(const Exponent& a, const Exponent& b) {
  Exponent out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

bool divides(const Exponent& a, const Exponent& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

int degree(const Exponent& e) {
  int s = 0;
  for (int x : e) s += x;
  return s;
}

std::string to_string(const Rat& r) {
  if (is_integral(r)) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string to_string(const RatVec& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += to_string(v[i]);
  }
  return out + ")";
}

std::string to_string(const Exponent& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(v[i]);
  }
  return out + ")";
}

std::optional<Rat> parse_rat(const std::string& text) {
  std::string s;
  for (char c : text) {
    if (c != ' ' && c != '\t') s.push_back(c);
  }
  if (s.empty()) return std::nullopt;
  auto valid_int = [](const std::string& t) {
    std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i) {
      if (t[i] < '0' || t[i] > '9') return false;
    }
    return true;
  };
  auto strip_plus = [](std::string t) {
    if (!t.empty() && t[0] == '+') t.erase(0, 1);
    return t;
  };
  const auto slash = s.find('/');
  if (slash == std::string::npos) {
    if (!valid_int(s)) return std::nullopt;
    return Rat(Int(strip_plus(s)));
  }
  const std::string num = s.substr(0, slash);
  const std::string den = s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den)) return std::nullopt;
  Int d(strip_plus(den));
  if (d == 0) return std::nullopt;
  return make_rat(Int(strip_plus(num)), d);
}

bool lex_less(const RatVec& a, const RatVec& b) { return a < b; }

}  // namespace ahg
