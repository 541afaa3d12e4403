#pragma once

#include "lgapery/hpreal.hpp"

#include <cstddef>
#include <functional>

namespace lgapery {

/// An abscissa together with its distances to both endpoints, each carried at
/// full relative precision so integrands can avoid cancellation near a or b.
struct QuadNode {
    HighPrecisionReal x;
    HighPrecisionReal from_a;  ///< x - a
    HighPrecisionReal to_b;    ///< b - x
};

using Integrand = std::function<HighPrecisionReal(const QuadNode&)>;

struct QuadOptions {
    unsigned max_level = 12;
};

struct QuadResult {
    HighPrecisionReal value;
    unsigned levels = 0;  ///< step h = 2^-levels at acceptance
    std::size_t evaluations = 0;
    HighPrecisionReal last_difference;
};

/// Tanh-sinh quadrature on [a, b]. The step is halved until two successive
/// levels agree to 10^-digits (relative to max(1, |value|)); throws
/// ConvergenceError after max_level halvings.
QuadResult quad_de(const Integrand& f, const Rational& a, const Rational& b, unsigned digits,
                   const QuadOptions& options = {});

/// 2 (int_0^1 log^2 y / (1 - y) dy + int_0^1 log^2 y / (1 + y) dy) = 7 zeta(3).
/// A nonzero perturbation multiplies both integrands by (1 + perturbation * y^2)
/// and exists for negative controls. Requires 1 <= digits <= 40.
HighPrecisionReal v16_membrane_value(unsigned digits, const Rational& perturbation = 0);

}  // namespace lgapery
