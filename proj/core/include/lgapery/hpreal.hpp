#pragma once

#include "lgapery/rational.hpp"

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace lgapery {

/// Guard bits added on top of the bits needed for a requested decimal precision.
inline constexpr long kGuardBits = 32;

/// ceil(digits * log2(10)) + kGuardBits.
long bits_for_digits(unsigned digits);

/// Binary floating value mantissa * 2^exponent carrying a precision in bits.
/// Results of inexact operations keep at most precision_bits significant bits
/// (rounded toward minus infinity); exact inputs are never padded.
class HighPrecisionReal {
public:
    HighPrecisionReal() = default;
    HighPrecisionReal(Integer mantissa, std::int64_t exponent, long precision_bits);

    static HighPrecisionReal from_integer(const Integer& n, long precision_bits);
    static HighPrecisionReal from_rational(const Rational& q, long precision_bits);
    /// Plain decimal text such as "-12.5e-3".
    static HighPrecisionReal from_decimal(std::string_view text, long precision_bits);

    const Integer& mantissa() const noexcept { return mantissa_; }
    std::int64_t exponent() const noexcept { return exponent_; }
    long precision_bits() const noexcept { return precision_bits_; }
    HighPrecisionReal with_precision(long bits) const;

    int sign() const noexcept { return sgn(mantissa_); }
    bool is_zero() const noexcept { return mantissa_ == 0; }
    /// floor(log2 |x|); undefined for zero.
    std::int64_t top_bit() const;

    Rational to_rational() const;
    double to_double() const;
    /// Rounded to `digits` significant decimal digits.
    std::string to_significant(unsigned digits) const;
    /// Rounded to `decimals` digits after the point.
    std::string to_fixed(unsigned decimals) const;

    HighPrecisionReal operator-() const;
    friend HighPrecisionReal operator+(const HighPrecisionReal& a, const HighPrecisionReal& b);
    friend HighPrecisionReal operator-(const HighPrecisionReal& a, const HighPrecisionReal& b);
    friend HighPrecisionReal operator*(const HighPrecisionReal& a, const HighPrecisionReal& b);
    /// Throws std::domain_error on division by zero.
    friend HighPrecisionReal operator/(const HighPrecisionReal& a, const HighPrecisionReal& b);
    HighPrecisionReal& operator+=(const HighPrecisionReal& b) { return *this = *this + b; }
    HighPrecisionReal& operator-=(const HighPrecisionReal& b) { return *this = *this - b; }
    HighPrecisionReal& operator*=(const HighPrecisionReal& b) { return *this = *this * b; }
    HighPrecisionReal& operator/=(const HighPrecisionReal& b) { return *this = *this / b; }

    /// Exact value comparison (precision is ignored).
    friend std::strong_ordering operator<=>(const HighPrecisionReal& a, const HighPrecisionReal& b);
    friend bool operator==(const HighPrecisionReal& a, const HighPrecisionReal& b) {
        return (a <=> b) == std::strong_ordering::equal;
    }

private:
    void normalize();

    Integer mantissa_ = 0;
    std::int64_t exponent_ = 0;
    long precision_bits_ = 64;
};

HighPrecisionReal abs(const HighPrecisionReal& x);
/// x * 2^k, exact.
HighPrecisionReal ldexp(const HighPrecisionReal& x, std::int64_t k);
HighPrecisionReal sqrt(const HighPrecisionReal& x);
HighPrecisionReal exp(const HighPrecisionReal& x);
/// Natural logarithm; throws std::domain_error for x <= 0.
HighPrecisionReal log(const HighPrecisionReal& x);
HighPrecisionReal pow(const HighPrecisionReal& x, unsigned n);
/// 10^k at the given precision.
HighPrecisionReal pow10(long k, long precision_bits);

}  // namespace lgapery
