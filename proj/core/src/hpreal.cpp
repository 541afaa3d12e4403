#include "lgapery/hpreal.hpp"

#include "lgapery/constants.hpp"

#include <cctype>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace lgapery {

namespace {

std::int64_t bit_length(const Integer& m) {
    return m == 0 ? 0 : static_cast<std::int64_t>(mpz_sizeinbase(m.get_mpz_t(), 2));
}

Integer shifted(const Integer& m, std::int64_t k) {
    Integer r;
    if (k >= 0) {
        mpz_mul_2exp(r.get_mpz_t(), m.get_mpz_t(), static_cast<mp_bitcnt_t>(k));
    } else {
        mpz_fdiv_q_2exp(r.get_mpz_t(), m.get_mpz_t(), static_cast<mp_bitcnt_t>(-k));
    }
    return r;
}

Integer pow10_integer(unsigned long k) {
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), 10, k);
    return r;
}

// Rounds |q| * 10^k to the nearest integer, halves away from zero.
Integer round_scaled(const Rational& q, long k) {
    Rational scaled = abs(q);
    if (k >= 0) {
        scaled *= Rational(pow10_integer(static_cast<unsigned long>(k)));
    } else {
        scaled /= Rational(pow10_integer(static_cast<unsigned long>(-k)));
    }
    Integer twice = 2 * scaled.get_num() + scaled.get_den();
    Integer out;
    mpz_fdiv_q(out.get_mpz_t(), twice.get_mpz_t(), Integer(2 * scaled.get_den()).get_mpz_t());
    return out;
}

// floor(log10 |q|) for q != 0.
long decimal_exponent(const Rational& q) {
    const Rational a = abs(q);
    const double approx = (static_cast<double>(mpz_sizeinbase(a.get_num_mpz_t(), 2)) -
                           static_cast<double>(mpz_sizeinbase(a.get_den_mpz_t(), 2))) *
                          std::log10(2.0);
    long e = static_cast<long>(std::floor(approx));
    auto power = [](long k) {
        return k >= 0 ? Rational(pow10_integer(static_cast<unsigned long>(k)))
                      : Rational(1) / Rational(pow10_integer(static_cast<unsigned long>(-k)));
    };
    while (a >= power(e + 1)) ++e;
    while (a < power(e)) --e;
    return e;
}

}  // namespace

long bits_for_digits(unsigned digits) {
    return static_cast<long>((static_cast<std::uint64_t>(digits) * 3321929 + 999999) / 1000000) + kGuardBits;
}

HighPrecisionReal::HighPrecisionReal(Integer mantissa, std::int64_t exponent, long precision_bits)
    : mantissa_(std::move(mantissa)), exponent_(exponent), precision_bits_(precision_bits) {
    if (precision_bits_ < 2) throw std::invalid_argument("precision must be at least 2 bits");
    normalize();
}

void HighPrecisionReal::normalize() {
    if (mantissa_ == 0) {
        exponent_ = 0;
        return;
    }
    const std::int64_t excess = bit_length(mantissa_) - precision_bits_;
    if (excess > 0) {
        mantissa_ = shifted(mantissa_, -excess);
        exponent_ += excess;
    }
}

HighPrecisionReal HighPrecisionReal::from_integer(const Integer& n, long precision_bits) {
    return HighPrecisionReal(n, 0, precision_bits);
}

HighPrecisionReal HighPrecisionReal::from_rational(const Rational& q, long precision_bits) {
    if (q == 0) return HighPrecisionReal(0, 0, precision_bits);
    if (q.get_den() == 1) return from_integer(q.get_num(), precision_bits);
    const std::int64_t k = precision_bits + 2 - (bit_length(q.get_num()) - bit_length(q.get_den()));
    Integer num = q.get_num(), den = q.get_den();
    if (k >= 0) {
        num = shifted(num, k);
    } else {
        den = shifted(den, -k);
    }
    Integer m;
    mpz_fdiv_q(m.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return HighPrecisionReal(std::move(m), -k, precision_bits);
}

HighPrecisionReal HighPrecisionReal::from_decimal(std::string_view text, long precision_bits) {
    std::size_t i = 0;
    bool negative = false;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) negative = text[i++] == '-';
    std::string digits;
    long point_shift = 0;
    bool seen_point = false;
    for (; i < text.size(); ++i) {
        const char c = text[i];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            digits += c;
            if (seen_point) --point_shift;
        } else if (c == '.' && !seen_point) {
            seen_point = true;
        } else {
            break;
        }
    }
    if (digits.empty()) throw std::invalid_argument("malformed decimal: " + std::string(text));
    if (i < text.size() && (text[i] == 'e' || text[i] == 'E')) {
        try {
            point_shift += std::stol(std::string(text.substr(i + 1)));
        } catch (const std::exception&) {
            throw std::invalid_argument("malformed decimal: " + std::string(text));
        }
    } else if (i != text.size()) {
        throw std::invalid_argument("malformed decimal: " + std::string(text));
    }
    Rational q{Integer(digits)};
    if (point_shift >= 0) {
        q *= Rational(pow10_integer(static_cast<unsigned long>(point_shift)));
    } else {
        q /= Rational(pow10_integer(static_cast<unsigned long>(-point_shift)));
    }
    return from_rational(negative ? Rational(-q) : q, precision_bits);
}

HighPrecisionReal HighPrecisionReal::with_precision(long bits) const {
    return HighPrecisionReal(mantissa_, exponent_, bits);
}

std::int64_t HighPrecisionReal::top_bit() const {
    if (is_zero()) throw std::domain_error("top_bit of zero");
    return exponent_ + bit_length(mantissa_) - 1;
}

Rational HighPrecisionReal::to_rational() const {
    if (exponent_ >= 0) return Rational(shifted(mantissa_, exponent_));
    Rational q(mantissa_);
    mpq_div_2exp(q.get_mpq_t(), q.get_mpq_t(), static_cast<mp_bitcnt_t>(-exponent_));
    return q;
}

double HighPrecisionReal::to_double() const {
    if (is_zero()) return 0.0;
    long e = 0;
    const double d = mpz_get_d_2exp(&e, mantissa_.get_mpz_t());
    const std::int64_t total = exponent_ + e;
    if (total > std::numeric_limits<int>::max()) return d > 0 ? HUGE_VAL : -HUGE_VAL;
    if (total < std::numeric_limits<int>::min()) return 0.0;
    return std::ldexp(d, static_cast<int>(total));
}

std::string HighPrecisionReal::to_significant(unsigned digits) const {
    if (digits == 0) throw std::invalid_argument("need at least one significant digit");
    if (is_zero()) return "0";
    const Rational q = to_rational();
    long e = decimal_exponent(q);
    Integer n = round_scaled(q, static_cast<long>(digits) - 1 - e);
    if (n == pow10_integer(digits)) {
        n /= 10;
        ++e;
    }
    std::string s = n.get_str();
    std::string out = sign() < 0 ? "-" : "";
    if (e >= -7 && e < 30) {
        if (e < 0) {
            out += "0." + std::string(static_cast<std::size_t>(-e - 1), '0') + s;
        } else if (static_cast<std::size_t>(e) + 1 < s.size()) {
            out += s.substr(0, static_cast<std::size_t>(e) + 1) + "." + s.substr(static_cast<std::size_t>(e) + 1);
        } else {
            out += s + std::string(static_cast<std::size_t>(e) + 1 - s.size(), '0');
        }
    } else {
        out += s.substr(0, 1);
        if (s.size() > 1) out += "." + s.substr(1);
        out += "e" + std::to_string(e);
    }
    return out;
}

std::string HighPrecisionReal::to_fixed(unsigned decimals) const {
    const Integer n = round_scaled(to_rational(), static_cast<long>(decimals));
    std::string s = n.get_str();
    if (s.size() <= decimals) s.insert(0, decimals + 1 - s.size(), '0');
    if (decimals > 0) s.insert(s.size() - decimals, ".");
    return (sign() < 0 && n != 0 ? "-" : "") + s;
}

HighPrecisionReal HighPrecisionReal::operator-() const {
    HighPrecisionReal r = *this;
    r.mantissa_ = -r.mantissa_;
    return r;
}

HighPrecisionReal operator+(const HighPrecisionReal& a, const HighPrecisionReal& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    const long prec = std::min(a.precision_bits_, b.precision_bits_);
    const std::int64_t top = std::max(a.top_bit(), b.top_bit());
    // Bits far below the larger operand's precision cannot affect the result.
    const std::int64_t target = std::max(std::min(a.exponent_, b.exponent_), top - prec - 8);
    Integer m = shifted(a.mantissa_, a.exponent_ - target) + shifted(b.mantissa_, b.exponent_ - target);
    return HighPrecisionReal(std::move(m), target, prec);
}

HighPrecisionReal operator-(const HighPrecisionReal& a, const HighPrecisionReal& b) { return a + (-b); }

HighPrecisionReal operator*(const HighPrecisionReal& a, const HighPrecisionReal& b) {
    const long prec = std::min(a.precision_bits_, b.precision_bits_);
    if (a.is_zero() || b.is_zero()) return HighPrecisionReal(0, 0, prec);
    return HighPrecisionReal(a.mantissa_ * b.mantissa_, a.exponent_ + b.exponent_, prec);
}

HighPrecisionReal operator/(const HighPrecisionReal& a, const HighPrecisionReal& b) {
    if (b.is_zero()) throw std::domain_error("division by zero");
    const long prec = std::min(a.precision_bits_, b.precision_bits_);
    if (a.is_zero()) return HighPrecisionReal(0, 0, prec);
    const std::int64_t shift = std::max<std::int64_t>(0, prec + 2 + bit_length(b.mantissa_) - bit_length(a.mantissa_));
    const Integer num = shifted(a.mantissa_, shift);
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), b.mantissa_.get_mpz_t());
    return HighPrecisionReal(std::move(q), a.exponent_ - b.exponent_ - shift, prec);
}

std::strong_ordering operator<=>(const HighPrecisionReal& a, const HighPrecisionReal& b) {
    const int sa = a.sign(), sb = b.sign();
    if (sa != sb) return sa <=> sb;
    if (sa == 0) return std::strong_ordering::equal;
    const std::int64_t ta = a.top_bit(), tb = b.top_bit();
    if (ta != tb) return sa > 0 ? ta <=> tb : tb <=> ta;
    const std::int64_t base = std::min(a.exponent_, b.exponent_);
    const int c = cmp(shifted(a.mantissa_, a.exponent_ - base), shifted(b.mantissa_, b.exponent_ - base));
    return c <=> 0;
}

HighPrecisionReal abs(const HighPrecisionReal& x) { return x.sign() < 0 ? -x : x; }

HighPrecisionReal ldexp(const HighPrecisionReal& x, std::int64_t k) {
    if (x.is_zero()) return x;
    return HighPrecisionReal(x.mantissa(), x.exponent() + k, x.precision_bits());
}

HighPrecisionReal sqrt(const HighPrecisionReal& x) {
    if (x.sign() < 0) throw std::domain_error("square root of a negative number");
    if (x.is_zero()) return x;
    Integer m = x.mantissa();
    std::int64_t e = x.exponent();
    if (e % 2 != 0) {
        m <<= 1;
        --e;
    }
    const std::int64_t len = bit_length(m);
    const std::int64_t k = std::max<std::int64_t>(0, (2 * x.precision_bits() + 4 - len + 1) / 2);
    m = shifted(m, 2 * k);
    Integer r;
    mpz_sqrt(r.get_mpz_t(), m.get_mpz_t());
    return HighPrecisionReal(std::move(r), (e - 2 * k) / 2, x.precision_bits());
}

HighPrecisionReal exp(const HighPrecisionReal& x) {
    const long prec = x.precision_bits();
    if (x.is_zero()) return HighPrecisionReal::from_integer(1, prec);
    const double approx = x.to_double();
    if (!(std::fabs(approx) < 1e15)) throw std::overflow_error("exp argument out of range");
    const long p = prec + 16;
    const auto k = static_cast<std::int64_t>(std::llround(approx / std::log(2.0)));
    const HighPrecisionReal r =
        x.with_precision(p + 64) - HighPrecisionReal::from_integer(Integer(static_cast<long>(k)), p + 64) * ln2_bits(p + 64);
    // Halve the reduced argument s times, sum the Taylor series in fixed point, square back.
    const auto s = static_cast<std::int64_t>(std::sqrt(static_cast<double>(p)) / 2) + 1;
    const std::int64_t P = p + s + 8;
    const Integer R = shifted(r.mantissa(), r.exponent() - s + P);
    const Integer one = shifted(Integer(1), P);
    Integer sum = one, term = one;
    for (unsigned long n = 1;; ++n) {
        term = shifted(term * R, -P);
        mpz_tdiv_q_ui(term.get_mpz_t(), term.get_mpz_t(), n);
        if (term == 0) break;
        sum += term;
    }
    for (std::int64_t i = 0; i < s; ++i) sum = shifted(sum * sum, -P);
    return HighPrecisionReal(std::move(sum), k - P, prec);
}

HighPrecisionReal log(const HighPrecisionReal& x) {
    if (x.sign() <= 0) throw std::domain_error("logarithm of a non-positive number");
    const long prec = x.precision_bits();
    const long p = prec + 16;
    std::int64_t E = x.top_bit();
    // Pick E so that y = x / 2^E lies in [1/sqrt2, sqrt2).
    const Integer& m = x.mantissa();
    const std::int64_t len = bit_length(m);
    if (m * m > shifted(Integer(1), 2 * len - 1)) ++E;
    const HighPrecisionReal y = ldexp(x, -E).with_precision(p);
    const HighPrecisionReal one = HighPrecisionReal::from_integer(1, p);
    const HighPrecisionReal z = (y - one) / (y + one);
    HighPrecisionReal sum = z;
    if (!z.is_zero()) {
        const HighPrecisionReal z2 = z * z;
        HighPrecisionReal power = z;
        for (long k = 1;; ++k) {
            power *= z2;
            const HighPrecisionReal t = power / HighPrecisionReal::from_integer(2 * k + 1, p);
            if (t.is_zero() || t.top_bit() < sum.top_bit() - p - 4) break;
            sum += t;
        }
    }
    HighPrecisionReal result = ldexp(sum, 1);
    if (E != 0) result += HighPrecisionReal::from_integer(Integer(static_cast<long>(E)), p + 64) * ln2_bits(p + 64);
    return result.with_precision(prec);
}

HighPrecisionReal pow(const HighPrecisionReal& x, unsigned n) {
    HighPrecisionReal result = HighPrecisionReal::from_integer(1, x.precision_bits());
    HighPrecisionReal base = x;
    while (n > 0) {
        if (n & 1U) result *= base;
        n >>= 1U;
        if (n > 0) base *= base;
    }
    return result;
}

HighPrecisionReal pow10(long k, long precision_bits) {
    const Integer p = pow10_integer(static_cast<unsigned long>(k >= 0 ? k : -k));
    return k >= 0 ? HighPrecisionReal::from_integer(p, precision_bits)
                  : HighPrecisionReal::from_rational(Rational(1) / Rational(p), precision_bits);
}

}  // namespace lgapery
