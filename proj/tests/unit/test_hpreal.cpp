#include "lgapery/constants.hpp"
#include "lgapery/errors.hpp"
#include "lgapery/hpreal.hpp"
#include "lgapery/quadrature.hpp"
#include "lgapery/recognize.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace lgapery;

namespace {

HighPrecisionReal num(long v, unsigned digits = 50) { return HighPrecisionReal::from_integer(v, bits_for_digits(digits)); }

HighPrecisionReal eps(long exponent, unsigned digits = 60) { return pow10(exponent, bits_for_digits(digits)); }

// log^2(y) / (1 - s y) on (0, 1), s = +1 or -1. Near y = 1 the factor 1 - y
// comes from the endpoint distance so the singular quotient stays accurate.
Integrand log_square_over(int s) {
    return [s](const QuadNode& node) {
        const auto l = log(node.x);
        const auto den = s > 0 ? node.to_b : HighPrecisionReal::from_integer(1, node.x.precision_bits()) + node.x;
        return l * l / den;
    };
}

// Alternating sum of -(-1)^n / n^3 accelerated by Cohen-Rodriguez Villegas-Zagier.
HighPrecisionReal li3_minus_one_oracle(unsigned digits) {
    const long bits = bits_for_digits(digits + 10);
    const unsigned n = digits * 2;
    // d = ((3 + sqrt 8)^n + (3 - sqrt 8)^n) / 2, b = -1, c = -d.
    const auto root8 = sqrt(HighPrecisionReal::from_integer(8, bits));
    const auto three = HighPrecisionReal::from_integer(3, bits);
    auto d = pow(three + root8, n);
    d = ldexp(d + pow(three - root8, n), -1);
    auto b = HighPrecisionReal::from_integer(-1, bits);
    auto c = -d;
    HighPrecisionReal s = HighPrecisionReal::from_integer(0, bits);
    for (unsigned k = 0; k < n; ++k) {
        c = b - c;
        // a_k = 1 / (k+1)^3 in sum (-1)^k a_k
        const auto kk = HighPrecisionReal::from_integer(static_cast<long>(k) + 1, bits);
        s = s + c / (kk * kk * kk);
        const Rational factor(Integer(2 * (static_cast<long>(k) + static_cast<long>(n))) *
                                  (static_cast<long>(k) - static_cast<long>(n)),
                              Integer(2 * static_cast<long>(k) + 1) * (static_cast<long>(k) + 1));
        b = b * HighPrecisionReal::from_rational(factor, bits);
    }
    // s / d = sum (-1)^k / (k+1)^3 = -Li3(-1).
    return -(s / d);
}

}  // namespace

TEST_SUITE("hpreal") {

TEST_CASE("arithmetic and printing") {
    const auto third = HighPrecisionReal::from_rational(Rational(1, 3), bits_for_digits(30));
    CHECK(third.to_significant(10) == "0.3333333333");
    CHECK((third * num(3, 30)).to_significant(20) == "1.0000000000000000000");
    CHECK(num(0).to_significant(5) == "0");
    CHECK(num(-2).to_significant(3) == "-2.00");
    CHECK(HighPrecisionReal::from_decimal("2.5", 64).to_significant(1) == "3");
    CHECK(HighPrecisionReal::from_decimal("1.25e-40", 200).to_significant(3) == "1.25e-40");
    CHECK((num(7) / num(8)).to_rational() == Rational(7, 8));
    CHECK(num(3) > num(2));
    CHECK(-num(3) < num(-2));
    CHECK(abs(num(-4)) == num(4));
    CHECK(ldexp(num(3), -2).to_rational() == Rational(3, 4));
    CHECK_THROWS(num(1) / num(0));
}

TEST_CASE("elementary functions") {
    const long bits = bits_for_digits(40);
    CHECK(sqrt(HighPrecisionReal::from_integer(4, bits)) == HighPrecisionReal::from_integer(2, bits));
    const auto e = exp(HighPrecisionReal::from_integer(1, bits));
    CHECK(e.to_significant(30) == "2.71828182845904523536028747135");
    CHECK(abs(log(e) - num(1, 40)) < eps(-38));
    CHECK(log(HighPrecisionReal::from_integer(2, bits)).to_significant(25) == ln2(30).to_significant(25));
    CHECK(abs(exp(log(HighPrecisionReal::from_integer(10, bits))) - HighPrecisionReal::from_integer(10, bits)) < eps(-36));
    CHECK(pow(num(3), 4) == num(81));
}

TEST_CASE("zeta3") {
    CHECK(zeta3(15).to_significant(15) == "1.20205690315959");
    CHECK(zeta3(1).to_fixed(1) == "1.2");
    CHECK(zeta3(1).to_significant(2) == "1.2");
    for (unsigned d : {10u, 25u, 40u}) CHECK(zeta3(2 * d).to_fixed(d) == zeta3(d).to_fixed(d));
}

TEST_CASE("pi and square roots") {
    CHECK(pi(10).to_significant(10) == "3.141592654");
    CHECK(sqrt_int(4, 30) == HighPrecisionReal::from_integer(2, bits_for_digits(30)));
    const auto r2 = sqrt_int(2, 20);
    CHECK(abs(r2 * r2 - num(2, 20)) < pow10(-19, bits_for_digits(20)));
}

TEST_CASE("dual-formula cross-checks at 100 digits") {
    const auto checks = constant_cross_checks(100);
    REQUIRE(checks.size() >= 4);
    for (const auto& c : checks) {
        CHECK_MESSAGE(c.agree, c.name);
        CHECK(c.primary.to_significant(100) == c.reference.to_significant(100));
    }
    CHECK(zeta3(60).to_significant(50) == "1.2020569031595942853997381615114499907649862923405");
    CHECK(pi(60).to_significant(50) == "3.1415926535897932384626433832795028841971693993751");
    CHECK(sqrt_int(3, 60).to_significant(40) == "1.732050807568877293527446341505872366943");
}

TEST_CASE("monotone refinement across three doublings") {
    for (unsigned d : {25u, 50u, 100u}) {
        const unsigned D = 2 * d;
        CHECK(zeta3(D).to_fixed(d) == zeta3(d).to_fixed(d));
        CHECK(pi(D).to_fixed(d) == pi(d).to_fixed(d));
        CHECK(sqrt_int(2, D).to_fixed(d) == sqrt_int(2, d).to_fixed(d));
        CHECK(sqrt_int(3, D).to_fixed(d) == sqrt_int(3, d).to_fixed(d));
        CHECK(abs(zeta3(D) - zeta3(d)) < pow10(-static_cast<long>(d), bits_for_digits(D)));
    }
}

TEST_CASE("polylogarithms") {
    CHECK(abs(li(3, num(1, 30), 30) - zeta3(30)) < eps(-29));
    const auto l3 = li(3, num(-1, 30), 30);
    CHECK(abs(l3 + zeta3(30) * HighPrecisionReal::from_rational(Rational(3, 4), bits_for_digits(30))) < eps(-28));
    CHECK(abs(l3 - li3_minus_one_oracle(30)) < eps(-28));
    CHECK(li(2, num(0, 30), 30).is_zero());
    // Li2(1/2) = pi^2/12 - log(2)^2/2.
    const auto half = HighPrecisionReal::from_rational(Rational(1, 2), bits_for_digits(30));
    const auto p = pi(30), l = ln2(30);
    CHECK(abs(li(2, half, 30) - (p * p / num(12, 30) - l * l * half)) < eps(-28));
    CHECK_THROWS_AS(li(4, half, 30), std::invalid_argument);
    CHECK_THROWS_AS(li(2, num(2, 30), 30), std::domain_error);
}

TEST_CASE("tanh-sinh quadrature") {
    const auto z = zeta3(40);
    const auto minus = quad_de(log_square_over(1), 0, 1, 30);
    CHECK(abs(minus.value - z * num(2, 40)) < eps(-25));
    const auto plus = quad_de(log_square_over(-1), 0, 1, 30);
    CHECK(abs(plus.value - z * HighPrecisionReal::from_rational(Rational(3, 2), bits_for_digits(40))) < eps(-25));
    const auto one = quad_de([](const QuadNode& n) { return HighPrecisionReal::from_integer(1, n.x.precision_bits()); },
                             0, 1, 30);
    CHECK(abs(one.value - num(1, 30)) < eps(-29));
    const auto shifted = quad_de([](const QuadNode& n) { return n.x; }, -1, 3, 20);
    CHECK(abs(shifted.value - num(4, 20)) < eps(-19));
    QuadOptions tight;
    tight.max_level = 1;
    CHECK_THROWS_AS(quad_de(log_square_over(1), 0, 1, 30, tight), ConvergenceError);
}

TEST_CASE("halving the tolerance at most doubles the level count") {
    for (int s : {1, -1}) {
        for (unsigned d : {10u, 15u, 20u}) {
            const auto coarse = quad_de(log_square_over(s), 0, 1, d);
            const auto fine = quad_de(log_square_over(s), 0, 1, 2 * d);
            CHECK(fine.levels <= 2 * coarse.levels);
        }
    }
}

TEST_CASE("V16 membrane value") {
    const auto v = v16_membrane_value(20);
    const auto target = zeta3(40) * num(7, 40);
    CHECK(v.to_significant(14) == "8.4143983221172");
    CHECK(abs(v - target) < pow10(-18, bits_for_digits(40)));
    const auto v30 = v16_membrane_value(30);
    const auto found = recognize(v30, 30);
    REQUIRE(found);
    CHECK(found->coefficient == 7);
    CHECK(found->basis == "zeta3");
    CHECK(v16_membrane_value(10).to_fixed(10) == v30.to_fixed(10));
    const auto corrupted = v16_membrane_value(20, Rational(1, 1000));
    CHECK(abs(corrupted - target) > pow10(-5, bits_for_digits(40)));
    CHECK_THROWS_AS(v16_membrane_value(0), std::invalid_argument);
    CHECK_THROWS_AS(v16_membrane_value(41), std::invalid_argument);
}

TEST_CASE("continued fraction convergents") {
    const auto c = convergents(Rational(415, 93), 1000);
    CHECK(c.back() == Rational(415, 93));
    CHECK(c.front() == 4);
    const auto capped = convergents(Rational(355, 113), 100);
    CHECK(capped.back() == Rational(22, 7));
}

TEST_CASE("recognition") {
    const auto seven = zeta3(30) * num(7, 30);
    auto found = recognize(seven, 30);
    REQUIRE(found);
    CHECK(found->coefficient == 7);
    CHECK(found->basis == "zeta3");

    found = recognize(num(0, 30), 30);
    REQUIRE(found);
    CHECK(found->coefficient == 0);
    CHECK(found->basis == "one");

    found = recognize(zeta3(50) / num(6), 50);
    REQUIRE(found);
    CHECK(found->coefficient == Rational(1, 6));

    const auto p = pi(50);
    found = recognize(p * p * p * HighPrecisionReal::from_rational(Rational(4, 243), bits_for_digits(50)) / sqrt_int(3, 50), 50);
    REQUIRE(found);
    CHECK(found->basis == "pi3_over_sqrt3");
    CHECK(found->coefficient == Rational(4, 243));

    // e is not a small rational multiple of any basis constant.
    CHECK_FALSE(recognize(exp(num(1, 50)), 50));
    CHECK_THROWS_AS(recognize(seven, 20), std::invalid_argument);

    RecognizeOptions narrow;
    narrow.max_denominator = 5;
    CHECK_FALSE(recognize(zeta3(50) / num(6), 50, standard_basis(), narrow));
}

TEST_CASE("recognition under noise") {
    const unsigned digits = 50;
    const auto base = zeta3(80) * HighPrecisionReal::from_rational(Rational(7, 32), bits_for_digits(80));
    // Two orders below the acceptance threshold 10^-(digits - guard).
    const auto small = base + pow10(-(static_cast<long>(digits) - 8 + 2), bits_for_digits(80));
    const auto found = recognize(small.with_precision(bits_for_digits(digits)), digits);
    REQUIRE(found);
    CHECK(found->coefficient == Rational(7, 32));
    const auto large = base + pow10(-3, bits_for_digits(80));
    CHECK_FALSE(recognize(large.with_precision(bits_for_digits(digits)), digits));

    // With a producer, a value that drifts at higher precision is rejected.
    const auto drifting = [&](unsigned d) { return zeta3(d) * num(7, d) + pow10(-60, bits_for_digits(d)); };
    CHECK_FALSE(recognize(drifting(50), 50, standard_basis(), {}, drifting));
    const auto faithful = [](unsigned d) { return zeta3(d) * num(7, d); };
    CHECK(recognize(faithful(50), 50, standard_basis(), {}, faithful));
}

}
