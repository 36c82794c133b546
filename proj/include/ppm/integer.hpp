#pragma once

// Arbitrary-precision scalar types shared by every module, plus the few
// combinatorial primitives (binomials, factorials, powers) everything else
// is built from.

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace ppm {

using Integer = mpz_class;
using Rational = mpq_class;

/// C(n, k); zero when k < 0 or k > n.
Integer binomial(long n, long k);

Integer factorial(unsigned long n);

/// base^exponent with 0^0 = 1.
Integer ipow(const Integer& base, unsigned long exponent);

std::string to_string(const Integer& value);

/// Always "p/q" with q >= 1, even for integral values.
std::string to_string(const Rational& value);

/// Accepts "p/q" or a bare integer "p"; throws std::invalid_argument on
/// malformed input or a zero denominator. Result is canonicalized.
Rational parse_rational(std::string_view text);

/// Throws std::invalid_argument on malformed input.
Integer parse_integer(std::string_view text);

/// Decimal rendering rounded half away from zero to `places` digits.
std::string to_decimal(const Rational& value, unsigned places);

}  // namespace ppm
