// Exact rational scalars. All arithmetic in the library is over Q; nothing
// here ever rounds.

#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace qaut {

using Rational = mpq_class;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimensionError : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

// n/d in canonical form (gcd 1, positive denominator). Rejects d = 0.
Rational frac(long num, long den);

// Parses "p/q" or "p". Rejects zero denominators and malformed input.
Rational parse_rational(const std::string& text);

// "p/q", or just "p" when the denominator is 1.
std::string to_string(const Rational& r);

}  // namespace qaut
