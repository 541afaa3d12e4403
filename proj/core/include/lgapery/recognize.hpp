#pragma once

#include "lgapery/hpreal.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace lgapery {

/// A named constant evaluated on demand at a given number of decimal digits.
struct BasisConstant {
    std::string name;
    std::function<HighPrecisionReal(unsigned digits)> value;
};

/// one, zeta3, pi3_over_sqrt3, pi3 (tried in this order).
const std::vector<BasisConstant>& standard_basis();

struct RecognizeOptions {
    Integer max_denominator = 10000;
    unsigned guard_digits = 8;
};

struct RecognizedConstant {
    Rational coefficient;
    std::string basis;
    HighPrecisionReal residual;  ///< |x - coefficient * basis| at the input precision
};

/// Recomputes the value being recognized at a requested number of digits.
using ValueProducer = std::function<HighPrecisionReal(unsigned digits)>;

/// Continued-fraction convergents of y whose denominators do not exceed max_denominator.
std::vector<Rational> convergents(const Rational& y, const Integer& max_denominator);

/// For each basis constant B in order, scans the convergents of x/B and accepts
/// the first p/q with |x - (p/q) B| < 10^-(digits - guard_digits). A candidate
/// is re-verified with B at doubled precision, against producer(2 digits) with
/// threshold 10^-(2 digits - guard_digits) when a producer is given. Returns
/// nullopt when nothing passes. Throws std::invalid_argument when digits <
/// 3 guard_digits.
std::optional<RecognizedConstant> recognize(const HighPrecisionReal& x, unsigned digits,
                                            const std::vector<BasisConstant>& basis = standard_basis(),
                                            const RecognizeOptions& options = {},
                                            const ValueProducer& producer = {});

}  // namespace lgapery
