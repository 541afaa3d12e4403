#include "lgapery/rational.hpp"

#include <stdexcept>

namespace lgapery {

std::string to_string(const Rational& q) { return q.get_str(); }

std::string to_string(const Integer& z) { return z.get_str(); }

Rational rational_from_string(const std::string& text) {
    Rational q;
    if (text.empty() || q.set_str(text, 10) != 0) {
        throw std::invalid_argument("not a rational number: '" + text + "'");
    }
    if (q.get_den() == 0) {
        throw std::invalid_argument("zero denominator: '" + text + "'");
    }
    q.canonicalize();
    return q;
}

Integer lcm_of_denominators(std::span<const Rational> values) {
    Integer l = 1;
    for (const auto& v : values) {
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
    }
    return l;
}

Integer gcd_of_numerators(std::span<const Rational> values) {
    Integer g = 0;
    for (const auto& v : values) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_num_mpz_t());
    }
    return g;
}

std::string to_decimal(const Rational& q, unsigned decimals) {
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, decimals);
    Integer num = abs(q.get_num()) * scale;
    Integer digits;
    mpz_tdiv_q(digits.get_mpz_t(), num.get_mpz_t(), q.get_den_mpz_t());
    std::string s = digits.get_str();
    if (s.size() <= decimals) s.insert(0, decimals + 1 - s.size(), '0');
    if (decimals > 0) s.insert(s.size() - decimals, ".");
    return (q < 0 ? "-" : "") + s;
}

static_assert(sizeof(long) == sizeof(std::int64_t), "expects an LP64 platform");

bool fits_int64(const Integer& z) { return mpz_fits_slong_p(z.get_mpz_t()) != 0; }

std::int64_t to_int64(const Integer& z) {
    if (!fits_int64(z)) {
        throw std::overflow_error("integer does not fit in 64 bits: " + z.get_str());
    }
    return static_cast<std::int64_t>(mpz_get_si(z.get_mpz_t()));
}

}  // namespace lgapery
