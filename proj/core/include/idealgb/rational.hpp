#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace idealgb {

/// Exact rational number; always canonical (lowest terms, positive
/// denominator).
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p" or "p/q" (optional leading sign). Throws ParseError.
Rational parseRational(std::string_view text);

/// "p/q" in lowest terms, or "p" when q == 1.
std::string to_string(const Rational& r);

/// n! as an exact integer.
Integer factorial(unsigned n);

}  // namespace idealgb
