#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <string>

namespace lgapery {

using Integer = mpz_class;
/// GMP rationals are kept canonical: gcd(num, den) = 1, den > 0, zero is 0/1.
using Rational = mpq_class;

/// "p" or "p/q".
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

/// Parses "p", "-p" or "p/q"; throws std::invalid_argument on bad input or q = 0.
Rational rational_from_string(const std::string& text);

Integer lcm_of_denominators(std::span<const Rational> values);
Integer gcd_of_numerators(std::span<const Rational> values);

/// Decimal expansion of q truncated toward zero after `decimals` fractional digits.
std::string to_decimal(const Rational& q, unsigned decimals);

bool fits_int64(const Integer& z);
std::int64_t to_int64(const Integer& z);

}  // namespace lgapery
