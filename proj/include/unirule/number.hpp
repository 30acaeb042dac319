#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace unirule {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "p/q", "p" or a signed decimal integer into a canonical rational.
/// Throws Error(ParseError) on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

/// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

}  // namespace unirule
