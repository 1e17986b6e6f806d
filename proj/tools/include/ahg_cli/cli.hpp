#pragma once

// The ahg command-line surface: argument handling, input parsing and the
// JSON envelope shared by every subcommand.

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

#include "ahg/arith.hpp"
#include "ahg/lattice.hpp"

namespace ahg::cli {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1.0";

// Integers inside the IEEE double safe range become numbers, others strings.
Json to_json(const Int& x);
// Integral values as above, everything else as a "p/q" string.
Json to_json(const Rat& x);
Json to_json(const IntVec& v);
Json to_json(const RatVec& v);
Json to_json(const Exponent& v);
Json to_json(const IntMatrix& A);
// 0-based column indices printed 1-based.
Json columns_json(const std::vector<int>& cols);

// {"A": [[...]]}, a bare JSON array of rows, or whitespace separated rows
// (newline or ';' between rows). Throws PARSE_ERROR.
IntMatrix parse_matrix(const std::string& text);
// A file path when one exists, otherwise the text itself.
IntMatrix load_matrix(const std::string& source);
// "1,-2/3,0"
RatVec parse_vector(const std::string& text);
// "-3:3,-3:3"
std::vector<std::pair<long, long>> parse_box(const std::string& text);

// Runs one invocation; argv[0] is the program name. Writes one JSON
// document to out and returns the exit code.
int run(int argc, const char* const* argv, std::ostream& out);
int run(const std::vector<std::string>& args, std::ostream& out);

// A random homogeneous matrix of full row rank: first row all ones, the
// others with entries in [0, max_entry].
IntMatrix random_homogeneous_matrix(unsigned long seed, std::size_t max_d = 3,
                                    std::size_t max_n = 5, long max_entry = 3);

// The invariant suite behind `check`: one entry per property with
// "property", "pass" and optional "detail".
Json run_checks(const IntMatrix& A, unsigned long seed, int order);

}  // namespace ahg::cli
