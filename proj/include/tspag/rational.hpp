#ifndef TSPAG_RATIONAL_HPP
#define TSPAG_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

namespace tspag {

/// Exact rational scalar. GMP keeps values canonical (lowest terms,
/// positive denominator) through arithmetic; no rounding ever happens.
using Rational = mpq_class;

/// Parse "p", "-p" or "p/q" with q > 0 after sign normalization.
/// Anything else (floats, exponents, empty, junk) throws ParseError.
Rational rational_from_string(const std::string& text);

/// Canonical text form: "p" for integers, "p/q" otherwise.
std::string rational_to_string(const Rational& value);

bool is_integer(const Rational& value);

/// True when value is exactly 0 or exactly 1.
bool is_binary(const Rational& value);

} // namespace tspag

#endif
