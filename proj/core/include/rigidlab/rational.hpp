#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace rigidlab {

// Exact arithmetic scalar used throughout the library. All counting results
// (censuses, energies, certificates) are computed over Q so that equality of
// measured values is a decidable exact test, never a float comparison.
using Q = mpq_class;

using VecQ = std::vector<Q>;
using MatQ = std::vector<std::vector<Q>>;

// Parses "a", "-a", or "a/b" (b > 0 after canonicalisation). Throws
// UsageError on malformed input.
Q q_parse(const std::string& text);

// Canonical "a" or "a/b" form, matching q_parse.
std::string q_to_string(const Q& v);

inline int q_sign(const Q& v) { return sgn(v); }

Q q_abs(const Q& v);

// floor(v) as an exact integer rational.
Q q_floor(const Q& v);

// v^e for e >= 0.
Q q_pow(const Q& v, unsigned long e);

double q_to_double(const Q& v);

bool is_integer(const Q& v);

// Returns floor(sqrt(n)) for integer n >= 0 and sets exact=true when n is a
// perfect square.
long perfect_sqrt(long n, bool& exact);

// Lexicographic comparison helpers so exact vectors can key std::map.
int compare(const VecQ& a, const VecQ& b);

struct VecQLess {
    bool operator()(const VecQ& a, const VecQ& b) const { return compare(a, b) < 0; }
};

}  // namespace rigidlab
