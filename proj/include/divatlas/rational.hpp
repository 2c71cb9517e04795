#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace divatlas {

// GMP keeps mpq_class in canonical form (positive denominator, reduced)
// after every arithmetic operation; parse_rational canonicalizes input.
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p", "-p" or "p/q". Throws std::invalid_argument on malformed
/// text or a zero denominator.
Rational parse_rational(std::string_view text);

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);

Integer factorial(unsigned long n);

} // namespace divatlas
