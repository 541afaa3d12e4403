#pragma once

#include "lgapery/hpreal.hpp"

#include <string>
#include <vector>

namespace lgapery {

/// pi by Machin's formula 16 atan(1/5) - 4 atan(1/239).
HighPrecisionReal pi(unsigned digits);
/// pi by Stormer's formula 48 atan(1/18) + 32 atan(1/57) - 20 atan(1/239).
HighPrecisionReal pi_stormer(unsigned digits);

/// sqrt(k) by Newton iteration on scaled integers; exact for perfect squares.
HighPrecisionReal sqrt_int(const Integer& k, unsigned digits);
/// sqrt(k) by GMP's integer square root of the scaled radicand.
HighPrecisionReal sqrt_int_reference(const Integer& k, unsigned digits);

/// zeta(3) = 5/2 sum (-1)^(n-1) / (n^3 binom(2n, n)).
HighPrecisionReal zeta3(unsigned digits);
/// zeta(3) from the defining series with an Euler-Maclaurin tail, summed exactly.
HighPrecisionReal zeta3_euler_maclaurin(unsigned digits);

/// log 2 = 2 atanh(1/3).
HighPrecisionReal ln2(unsigned digits);
/// log 2 = 18 atanh(1/26) - 2 atanh(1/4801) + 8 atanh(1/8749).
HighPrecisionReal ln2_alternate(unsigned digits);

/// Bit-precision variants used internally; memoized per precision.
HighPrecisionReal pi_bits(long bits);
HighPrecisionReal ln2_bits(long bits);
HighPrecisionReal zeta3_bits(long bits);

/// Polylogarithm Li_s(x) for s in {2, 3} and |x| <= 1. Throws
/// std::invalid_argument for other s and std::domain_error for |x| > 1.
HighPrecisionReal li(int s, const HighPrecisionReal& x, unsigned digits);

struct CrossCheck {
    std::string name;
    unsigned digits = 0;
    HighPrecisionReal primary;
    HighPrecisionReal reference;
    bool agree = false;
};

/// Runs every constant (pi, zeta(3), sqrt 2, sqrt 3, log 2) through both of
/// its formulas; agree means |primary - reference| <= 10^-digits.
std::vector<CrossCheck> constant_cross_checks(unsigned digits);

}  // namespace lgapery
