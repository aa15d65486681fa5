#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace orbitkit {

/// Exact rational scalar. GMP keeps every value canonical (lowest terms, positive denominator)
/// after arithmetic; values built from strings go through parse_rational which canonicalizes.
using Rational = mpq_class;
using BigInt = mpz_class;

/// "p/q", or "p" when q == 1.
std::string to_string(const Rational& value);

/// Accepts "p", "p/q" with optional sign. Throws ParseError on malformed text or q == 0.
Rational parse_rational(std::string_view text);

inline int sign(const Rational& value) { return sgn(value); }

inline double to_double(const Rational& value) { return value.get_d(); }

}  // namespace orbitkit
