#pragma once

// Exact integer and rational vector helpers shared by every module.

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace ahg {

using Int = mpz_class;
using Rat = mpq_class;
using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

// Exponent vectors of monomials in N^n (and kernel vectors in Z^n).
using Exponent = std::vector<int>;

inline Rat make_rat(const Int& num, const Int& den) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_integral(const Rat& r) { return r.get_den() == 1; }
bool is_integral(const RatVec& v);

inline Int floor_of(const Rat& r) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

RatVec to_rat(const IntVec& v);
RatVec to_rat(const Exponent& v);
std::optional<IntVec> to_int(const RatVec& v);

Rat dot(const RatVec& a, const RatVec& b);
Rat dot(const RatVec& a, const IntVec& b);
Int dot(const IntVec& a, const IntVec& b);

RatVec add(const RatVec& a, const RatVec& b);
RatVec sub(const RatVec& a, const RatVec& b);
RatVec scale(const RatVec& a, const Rat& s);
bool is_zero(const RatVec& v);
bool is_zero(const IntVec& v);

Exponent add(const Exponent& a, const Exponent& b);
Exponent sub(const Exponent& a, const Exponent& b);
bool divides(const Exponent& a, const Exponent& b);  // a <= b componentwise
int degree(const Exponent& e);

// "p/q" in lowest terms, or "p" for integers.
std::string to_string(const Rat& r);
std::string to_string(const RatVec& v);
std::string to_string(const Exponent& v);

// Parses "p", "-p", "p/q".
std::optional<Rat> parse_rat(const std::string& text);

// Lexicographic comparison of rational vectors.
bool lex_less(const RatVec& a, const RatVec& b);

}  // namespace ahg
