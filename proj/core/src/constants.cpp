#include "lgapery/constants.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace lgapery {

namespace {

Integer one_shifted(long bits) {
    Integer r;
    mpz_setbit(r.get_mpz_t(), static_cast<mp_bitcnt_t>(bits));
    return r;
}

// sum_{n>=0} (+-1)^n / ((2n+1) k^(2n+1)), scaled by 2^P.
Integer arctan_series(unsigned long k, long P, bool alternating) {
    Integer power = one_shifted(P) / k;
    const Integer k2 = Integer(k) * k;
    Integer sum = 0;
    for (unsigned long n = 0; power != 0; ++n) {
        Integer term = power / (2 * n + 1);
        if (alternating && n % 2 == 1) {
            sum -= term;
        } else {
            sum += term;
        }
        power /= k2;
    }
    return sum;
}

class ConstantCache {
public:
    template <class F>
    HighPrecisionReal get(long bits, F compute) {
        {
            std::lock_guard<std::mutex> lock(mutex_);
            auto it = values_.find(bits);
            if (it != values_.end()) return it->second;
        }
        HighPrecisionReal v = compute(bits);
        std::lock_guard<std::mutex> lock(mutex_);
        return values_.emplace(bits, std::move(v)).first->second;
    }

private:
    std::mutex mutex_;
    std::map<long, HighPrecisionReal> values_;
};

HighPrecisionReal from_fixed(const Integer& v, long P, long bits) { return HighPrecisionReal(v, -P, bits); }

std::vector<Rational> bernoulli_numbers(std::size_t count) {
    std::vector<Rational> B(count);
    B[0] = 1;
    for (std::size_t m = 1; m < count; ++m) {
        Rational s = 0;
        Integer binom = 1;  // C(m+1, j)
        for (std::size_t j = 0; j < m; ++j) {
            s += Rational(binom) * B[j];
            binom = binom * static_cast<unsigned long>(m + 1 - j) / static_cast<unsigned long>(j + 1);
        }
        B[m] = -s / static_cast<long>(m + 1);
    }
    return B;
}

HighPrecisionReal li_series(int s, const HighPrecisionReal& x, long p) {
    HighPrecisionReal sum = HighPrecisionReal::from_integer(0, p);
    HighPrecisionReal power = x.with_precision(p);
    for (long n = 1;; ++n) {
        Integer denom = Integer(n) * n;
        if (s == 3) denom *= n;
        const HighPrecisionReal term = power / HighPrecisionReal::from_integer(denom, p);
        if (term.is_zero()) break;
        if (!sum.is_zero() && term.top_bit() < sum.top_bit() - p - 4) break;
        sum += term;
        power *= x;
    }
    return sum;
}

HighPrecisionReal li_impl(int s, const HighPrecisionReal& x, long p) {
    const HighPrecisionReal one = HighPrecisionReal::from_integer(1, p);
    const HighPrecisionReal two_thirds = HighPrecisionReal::from_rational(Rational(2, 3), p);
    if (x.is_zero()) return HighPrecisionReal::from_integer(0, p);
    const HighPrecisionReal pi2_6 = pi_bits(p) * pi_bits(p) / HighPrecisionReal::from_integer(6, p);
    if (x == one) return s == 2 ? pi2_6 : zeta3_bits(p);
    if (x == -one) {
        return s == 2 ? -(pi2_6 / HighPrecisionReal::from_integer(2, p))
                      : -(zeta3_bits(p) * HighPrecisionReal::from_rational(Rational(3, 4), p));
    }
    if (abs(x) <= two_thirds) return li_series(s, x, p);
    if (x.sign() < 0) {
        // Li_s(x) = 2^(1-s) Li_s(x^2) - Li_s(-x)
        return ldexp(li_impl(s, x * x, p), 1 - s) - li_impl(s, -x, p);
    }
    const HighPrecisionReal lx = log(x);
    const HighPrecisionReal l1x = log(one - x);
    if (s == 2) return pi2_6 - lx * l1x - li_impl(2, one - x, p);
    // Landen: Li3(x) + Li3(1-x) + Li3(1-1/x) = zeta(3) + log^3 x / 6 + pi^2/6 log x - log^2 x log(1-x) / 2
    const HighPrecisionReal six = HighPrecisionReal::from_integer(6, p);
    return zeta3_bits(p) + lx * lx * lx / six + pi2_6 * lx - ldexp(lx * lx * l1x, -1) - li_impl(3, one - x, p) -
           li_impl(3, one - one / x, p);
}

}  // namespace

HighPrecisionReal pi_bits(long bits) {
    static ConstantCache cache;
    return cache.get(bits, [](long b) {
        const long P = b + 16;
        const Integer v = 16 * arctan_series(5, P, true) - 4 * arctan_series(239, P, true);
        return from_fixed(v, P, b);
    });
}

HighPrecisionReal ln2_bits(long bits) {
    static ConstantCache cache;
    return cache.get(bits, [](long b) {
        const long P = b + 16;
        return from_fixed(2 * arctan_series(3, P, false), P, b);
    });
}

HighPrecisionReal zeta3_bits(long bits) {
    static ConstantCache cache;
    return cache.get(bits, [](long b) {
        const long P = b + 16;
        const Integer one = one_shifted(P);
        Integer central = 2;  // binom(2n, n) at n = 1
        Integer sum = 0;
        for (unsigned long n = 1;; ++n) {
            const Integer term = one / (Integer(n) * n * n * central);
            if (term == 0) break;
            if (n % 2 == 1) {
                sum += term;
            } else {
                sum -= term;
            }
            central = central * (2 * n + 1) * (2 * n + 2) / ((n + 1) * (n + 1));
        }
        return HighPrecisionReal(5 * sum, -P - 1, b);
    });
}

HighPrecisionReal pi(unsigned digits) { return pi_bits(bits_for_digits(digits)); }

HighPrecisionReal pi_stormer(unsigned digits) {
    const long b = bits_for_digits(digits);
    const long P = b + 16;
    const Integer v = 48 * arctan_series(18, P, true) + 32 * arctan_series(57, P, true) - 20 * arctan_series(239, P, true);
    return from_fixed(v, P, b);
}

HighPrecisionReal sqrt_int(const Integer& k, unsigned digits) {
    if (k < 0) throw std::domain_error("square root of a negative integer");
    const long b = bits_for_digits(digits);
    if (k == 0) return HighPrecisionReal::from_integer(0, b);
    const Integer K = k * one_shifted(2 * b);
    // Newton from above converges monotonically to floor(sqrt(K)).
    Integer x = one_shifted(static_cast<long>((mpz_sizeinbase(K.get_mpz_t(), 2) + 1) / 2));
    for (;;) {
        const Integer y = (x + K / x) / 2;
        if (y >= x) break;
        x = y;
    }
    return from_fixed(x, b, b);
}

HighPrecisionReal sqrt_int_reference(const Integer& k, unsigned digits) {
    if (k < 0) throw std::domain_error("square root of a negative integer");
    const long b = bits_for_digits(digits);
    const Integer K = k * one_shifted(2 * b);
    Integer r;
    mpz_sqrt(r.get_mpz_t(), K.get_mpz_t());
    return from_fixed(r, b, b);
}

HighPrecisionReal zeta3(unsigned digits) { return zeta3_bits(bits_for_digits(digits)); }

HighPrecisionReal zeta3_euler_maclaurin(unsigned digits) {
    const long N = static_cast<long>(digits) + 10;
    Rational sum = 0;
    for (long n = 1; n < N; ++n) sum += Rational(1) / Rational(Integer(n) * n * n);
    const Rational n2 = Rational(N * N);
    sum += Rational(1) / (2 * n2) + Rational(1) / (2 * n2 * N);
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits + 5);
    const Rational tolerance = Rational(1) / Rational(scale);
    const std::size_t max_k = 400;
    const auto B = bernoulli_numbers(2 * max_k + 1);
    Rational npow = n2 * n2;  // N^(2k+2) at k = 1
    Rational last = 0;
    for (std::size_t k = 1;; ++k) {
        if (k > max_k) throw std::logic_error("Euler-Maclaurin tail did not reach the tolerance");
        const Rational term = B[2 * k] * static_cast<long>(2 * k + 1) / (2 * npow);
        if (k > 1 && abs(term) > abs(last)) throw std::logic_error("Euler-Maclaurin tail diverged before the tolerance");
        sum += term;
        if (abs(term) < tolerance) break;
        last = term;
        npow *= n2;
    }
    return HighPrecisionReal::from_rational(sum, bits_for_digits(digits));
}

HighPrecisionReal ln2(unsigned digits) { return ln2_bits(bits_for_digits(digits)); }

HighPrecisionReal ln2_alternate(unsigned digits) {
    const long b = bits_for_digits(digits);
    const long P = b + 16;
    const Integer v = 18 * arctan_series(26, P, false) - 2 * arctan_series(4801, P, false) + 8 * arctan_series(8749, P, false);
    return from_fixed(v, P, b);
}

HighPrecisionReal li(int s, const HighPrecisionReal& x, unsigned digits) {
    if (s != 2 && s != 3) throw std::invalid_argument("li supports s = 2 and s = 3");
    const long b = bits_for_digits(digits);
    if (abs(x) > HighPrecisionReal::from_integer(1, b)) throw std::domain_error("li needs |x| <= 1");
    return li_impl(s, x.with_precision(b + 16), b + 16).with_precision(b);
}

std::vector<CrossCheck> constant_cross_checks(unsigned digits) {
    const long b = bits_for_digits(digits);
    const HighPrecisionReal tolerance = pow10(-static_cast<long>(digits), b);
    std::vector<CrossCheck> out;
    auto add = [&](std::string name, HighPrecisionReal p, HighPrecisionReal r) {
        const bool agree = abs(p - r) <= tolerance;
        out.push_back({std::move(name), digits, std::move(p), std::move(r), agree});
    };
    add("pi", pi(digits), pi_stormer(digits));
    add("zeta3", zeta3(digits), zeta3_euler_maclaurin(digits));
    add("sqrt2", sqrt_int(2, digits), sqrt_int_reference(2, digits));
    add("sqrt3", sqrt_int(3, digits), sqrt_int_reference(3, digits));
    add("ln2", ln2(digits), ln2_alternate(digits));
    return out;
}

}  // namespace lgapery
