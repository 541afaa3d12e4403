#include "lgapery/quadrature.hpp"

#include "lgapery/constants.hpp"
#include "lgapery/errors.hpp"

#include <cmath>
#include <stdexcept>

namespace lgapery {

namespace {

struct Abscissae {
    const Rational& a;
    const Rational& b;
    long bits;
    HighPrecisionReal half_pi;
    HighPrecisionReal width;  // b - a

    HighPrecisionReal real(const Rational& q) const { return HighPrecisionReal::from_rational(q, bits); }

    // Contribution w(t) f(x(t)) + w(-t) f(x(-t)) for t > 0, or w(0) f(x(0)).
    HighPrecisionReal pair(const Integrand& f, const HighPrecisionReal& t, std::size_t& evaluations) const {
        const HighPrecisionReal one = HighPrecisionReal::from_integer(1, bits);
        if (t.is_zero()) {
            const HighPrecisionReal half = ldexp(width, -1);
            ++evaluations;
            return half_pi * ldexp(width, -1) * f({real((a + b) / 2), half, half});
        }
        const HighPrecisionReal et = exp(t);
        const HighPrecisionReal cosh_t = ldexp(et + one / et, -1);
        const HighPrecisionReal u = half_pi * ldexp(et - one / et, -1);
        const HighPrecisionReal eu = exp(u);
        const HighPrecisionReal e2u = eu * eu;
        const HighPrecisionReal near = width / (one + e2u);  // distance to the nearer endpoint
        const HighPrecisionReal far = width - near;
        const HighPrecisionReal s = eu + one / eu;
        // (b - a)/2 * (pi/2) cosh t / cosh^2 u
        const HighPrecisionReal w = ldexp(width * half_pi * cosh_t / (s * s), 1);
        const HighPrecisionReal xb = real(b) - near;
        const HighPrecisionReal xa = real(a) + near;
        evaluations += 2;
        return w * (f({xb, far, near}) + f({xa, near, far}));
    }
};

}  // namespace

QuadResult quad_de(const Integrand& f, const Rational& a, const Rational& b, unsigned digits, const QuadOptions& options) {
    if (!(a < b)) throw std::invalid_argument("quad_de needs a < b");
    const long bits = bits_for_digits(digits) + 16;
    const Abscissae nodes{a, b, bits, ldexp(pi_bits(bits), -1), HighPrecisionReal::from_rational(b - a, bits)};
    // Beyond t_max the nearer endpoint distance drops below 2^-(bits + 20) of the width.
    const double u_max = static_cast<double>(bits + 20) * std::log(2.0) / 2;
    const double t_max = std::asinh(2 * u_max / M_PI);
    const HighPrecisionReal tolerance = pow10(-static_cast<long>(digits), bits);

    QuadResult result;
    // Level 0: h = 1, nodes at all integers.
    HighPrecisionReal sum = nodes.pair(f, HighPrecisionReal::from_integer(0, bits), result.evaluations);
    for (long k = 1; static_cast<double>(k) <= t_max; ++k)
        sum += nodes.pair(f, HighPrecisionReal::from_integer(k, bits), result.evaluations);
    HighPrecisionReal previous = sum;
    for (unsigned level = 1; level <= options.max_level; ++level) {
        const double h = std::ldexp(1.0, -static_cast<int>(level));
        HighPrecisionReal fresh = HighPrecisionReal::from_integer(0, bits);
        for (long k = 1; static_cast<double>(k) * h <= t_max; k += 2) {
            fresh += nodes.pair(f, HighPrecisionReal(Integer(k), -static_cast<std::int64_t>(level), bits), result.evaluations);
        }
        sum += fresh;
        const HighPrecisionReal estimate = ldexp(sum, -static_cast<std::int64_t>(level));
        const HighPrecisionReal diff = abs(estimate - previous);
        const HighPrecisionReal scale = std::max(HighPrecisionReal::from_integer(1, bits), abs(estimate));
        previous = estimate;
        if (diff <= tolerance * scale) {
            result.value = estimate.with_precision(bits_for_digits(digits));
            result.levels = level;
            result.last_difference = diff;
            return result;
        }
    }
    throw ConvergenceError("tanh-sinh quadrature did not converge within " + std::to_string(options.max_level) +
                           " levels");
}

HighPrecisionReal v16_membrane_value(unsigned digits, const Rational& perturbation) {
    if (digits < 1 || digits > 40) throw std::invalid_argument("v16_membrane_value supports 1..40 digits");
    const unsigned work = digits + 4;
    const long bits = bits_for_digits(work) + 16;
    const HighPrecisionReal one = HighPrecisionReal::from_integer(1, bits);
    const HighPrecisionReal eps = HighPrecisionReal::from_rational(perturbation, bits);
    auto weight = [&](const QuadNode& n) { return perturbation == 0 ? one : one + eps * n.from_a * n.from_a; };
    const auto first = quad_de(
        [&](const QuadNode& n) {
            const HighPrecisionReal l = log(n.from_a);
            return l * l / n.to_b * weight(n);
        },
        0, 1, work);
    const auto second = quad_de(
        [&](const QuadNode& n) {
            const HighPrecisionReal l = log(n.from_a);
            return l * l / (one + n.from_a) * weight(n);
        },
        0, 1, work);
    return ldexp(first.value + second.value, 1).with_precision(bits_for_digits(digits));
}

}  // namespace lgapery
