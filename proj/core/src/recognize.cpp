#include "lgapery/recognize.hpp"

#include "lgapery/constants.hpp"

#include <stdexcept>

namespace lgapery {

const std::vector<BasisConstant>& standard_basis() {
    static const std::vector<BasisConstant> basis{
        {"one", [](unsigned d) { return HighPrecisionReal::from_integer(1, bits_for_digits(d)); }},
        {"zeta3", [](unsigned d) { return zeta3(d); }},
        {"pi3_over_sqrt3", [](unsigned d) { return pow(pi(d), 3) / sqrt_int(3, d); }},
        {"pi3", [](unsigned d) { return pow(pi(d), 3); }},
    };
    return basis;
}

std::vector<Rational> convergents(const Rational& y, const Integer& max_denominator) {
    std::vector<Rational> out;
    Integer num = y.get_num(), den = y.get_den();
    Integer p_prev = 0, q_prev = 1, p = 1, q = 0;
    while (den != 0) {
        Integer a;
        mpz_fdiv_q(a.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        const Integer p_next = a * p + p_prev;
        const Integer q_next = a * q + q_prev;
        if (q_next > max_denominator) break;
        p_prev = p;
        q_prev = q;
        p = p_next;
        q = q_next;
        out.emplace_back(p, q);
        out.back().canonicalize();
        const Integer r = num - a * den;
        num = den;
        den = r;
    }
    return out;
}

std::optional<RecognizedConstant> recognize(const HighPrecisionReal& x, unsigned digits,
                                            const std::vector<BasisConstant>& basis, const RecognizeOptions& options,
                                            const ValueProducer& producer) {
    if (digits < 3 * options.guard_digits) {
        throw std::invalid_argument("recognition at " + std::to_string(digits) + " digits needs guard_digits <= " +
                                    std::to_string(digits / 3));
    }
    const long bits = bits_for_digits(digits);
    const long threshold_exp = static_cast<long>(digits) - static_cast<long>(options.guard_digits);
    const HighPrecisionReal threshold = pow10(-threshold_exp, bits);
    const Rational xq = x.to_rational();
    for (const auto& b : basis) {
        const HighPrecisionReal B = b.value(digits);
        if (B.is_zero()) continue;
        // Residuals are measured against a sharper copy of B so they reflect x alone.
        const HighPrecisionReal B_sharp = b.value(digits + 10);
        const Rational y = (x.with_precision(bits) / B).to_rational();
        for (const Rational& c : convergents(y, options.max_denominator)) {
            const HighPrecisionReal residual =
                abs(x.with_precision(bits) - HighPrecisionReal::from_rational(c, bits + 40) * B_sharp);
            if (!(residual < threshold)) continue;
            // Re-verify at doubled precision.
            const unsigned d2 = 2 * digits;
            const long bits2 = bits_for_digits(d2);
            const HighPrecisionReal B2 = b.value(d2);
            const HighPrecisionReal c2 = HighPrecisionReal::from_rational(c, bits2);
            bool confirmed = false;
            if (producer) {
                const HighPrecisionReal x2 = producer(d2).with_precision(bits2);
                confirmed = abs(x2 - c2 * B2) < pow10(-(static_cast<long>(d2) - static_cast<long>(options.guard_digits)), bits2);
            } else {
                confirmed = abs(HighPrecisionReal::from_rational(xq, bits2) - c2 * B2) < threshold;
            }
            if (confirmed) return RecognizedConstant{c, b.name, residual};
        }
    }
    return std::nullopt;
}

}  // namespace lgapery
