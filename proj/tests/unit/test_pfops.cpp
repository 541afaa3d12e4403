#include "lgapery/catalog.hpp"
#include "lgapery/errors.hpp"
#include "lgapery/linalg.hpp"
#include "lgapery/operator.hpp"
#include "lgapery/periods.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace lgapery;

namespace {

const char* const kExample = "D^3 - t*(1+2*D)*(17*D^2+17*D+5) + t^2*(D+1)^3";

std::vector<Rational> periods_of(const std::string& name, std::size_t count) {
    return period_sequence(find_catalog_entry(name)->phi, count - 1).values;
}

}  // namespace

TEST_SUITE("pfops") {

TEST_CASE("parse and print operators") {
    const auto op = parse_operator(kExample);
    CHECK(op.order() == 3);
    CHECK(op.degree() == 2);
    CHECK(op.row(0) == UPoly{0, 0, 0, 1});
    CHECK(op.row(1) == UPoly{-5, -27, -51, -34});
    CHECK(op.row(2) == UPoly{1, 3, 3, 1});
    CHECK(op.column(3) == UPoly{1, -34, 1});
    CHECK(to_string(op) == "D^3 + t*(-34*D^3 - 51*D^2 - 27*D - 5) + t^2*(D^3 + 3*D^2 + 3*D + 1)");
    CHECK(parse_operator(to_string(op)) == op);
    CHECK_THROWS_AS(parse_operator("D + x"), ParseError);
    CHECK(parse_operator("0").is_zero());
}

TEST_CASE("normalization") {
    const auto op = parse_operator(kExample);
    CHECK(op.normalized() == op);
    CHECK(parse_operator("-2*D^3 + 2*t*(1+2*D)*(17*D^2+17*D+5) - 2*t^2*(D+1)^3").normalized() == op);
    CHECK(parse_operator("1/2*D - 1/2*t*D - 1/2*t").normalized() == parse_operator("D - t*D - t"));
}

TEST_CASE("operator to recurrence") {
    const auto rec = to_recurrence(parse_operator(kExample));
    REQUIRE(rec.span() == 2);
    const UPoly n{0, 1};
    CHECK(rec.coefficients[0] == n * n * n);
    CHECK(rec.coefficients[1] == -(UPoly{-1, 2} * UPoly{5, -17, 17}));
    CHECK(rec.coefficients[2] == UPoly{-1, 1} * UPoly{-1, 1} * UPoly{-1, 1});

    const auto d = to_recurrence(parse_operator("D"));
    REQUIRE(d.span() == 0);
    CHECK(d.coefficients[0] == n);
}

TEST_CASE("operator and recurrence round trip") {
    for (const char* text : {kExample, "D", "D - t*D - t", "D^2 + t*(3*D+1)*(2*D-1) - 7*t^3*D^2",
                             "2*D^4 - t^2*(D+1)^4 + 5*t*D"}) {
        const auto op = parse_operator(text).normalized();
        CHECK(operator_from_recurrence(to_recurrence(op)).normalized() == op);
    }
}

TEST_CASE("apply") {
    const auto ones = std::vector<Rational>(10, Rational(1));
    const auto out = apply(parse_operator("D"), ones, 9);
    for (std::size_t n = 0; n < out.size(); ++n) CHECK(out[n] == static_cast<long>(n));
    for (const auto& c : apply(DifferentialOperator{}, ones, 9)) CHECK(c == 0);
    CHECK_THROWS_AS(apply(parse_operator("D"), ones, 10), std::invalid_argument);

    const auto v12 = periods_of("V12", 30);
    const auto annihilated = apply(parse_operator(kExample), v12, 28);
    CHECK(annihilated.size() == 29);
    for (const auto& c : annihilated) CHECK(c == 0);
}

TEST_CASE("discovery on V12") {
    const auto result = operator_from_series(periods_of("V12", 30));
    CHECK(result.op == parse_operator(kExample));
    CHECK(result.verified_terms == 30);
    CHECK(result.fitted_terms + 8 <= 30);
}

TEST_CASE("discovery on simple series") {
    const auto geometric = operator_from_series(std::vector<Rational>(20, Rational(1)));
    CHECK(geometric.op == parse_operator("D - t*D - t"));
    CHECK(geometric.op.order() == 1);

    std::vector<Rational> constant(20, Rational(0));
    constant[0] = 5;
    CHECK(operator_from_series(constant).op == parse_operator("D"));

    CHECK_THROWS_AS(operator_from_series(std::vector<Rational>(8, Rational(1))), std::invalid_argument);
    // 2^(n^2) has no holonomic annihilator of small order.
    std::vector<Rational> wild;
    for (unsigned n = 0; n < 30; ++n) wild.push_back(Rational(Integer(1) << (n * n)));
    CHECK_THROWS_AS(operator_from_series(wild, DiscoveryOptions{2, 2, 8}), DiscoveryError);
}

TEST_CASE("discovery annihilates the catalog periods and is stable") {
    for (const auto& entry : catalog()) {
        const auto series30 = period_sequence(entry.phi, 29).values;
        const auto series40 = period_sequence(entry.phi, 39).values;
        const auto a = operator_from_series(series30);
        const auto b = operator_from_series(series40);
        CHECK_MESSAGE(a.op == b.op, entry.name);
        CHECK(a.op.order() == 3);
        CHECK(a.fitted_terms + 8 <= a.verified_terms);
        for (const auto& c : apply(a.op, series40, 39)) CHECK(c == 0);
        CHECK(symbol(a.op) == entry.expected_symbol);
    }
}

TEST_CASE("symbols") {
    CHECK(symbol(parse_operator(kExample)) == UPoly{1, -34, 1});
    CHECK(to_string(symbol(parse_operator(kExample)), "t") == "t^2 - 34*t + 1");
    CHECK(symbol(parse_operator("D")) == UPoly{1});
    CHECK(symbol(parse_operator("D")).degree() == 0);
    CHECK(find_catalog_entry("V18")->expected_symbol == UPoly{-27, -18, 1});
}

TEST_CASE("singular points") {
    const auto v16 = singular_points(UPoly{16, -24, 1});
    REQUIRE(v16.finite_points.size() == 2);
    CHECK(v16.includes_zero);
    CHECK(v16.includes_infinity);
    CHECK(v16.finite_points[0].exact == Surd{12, -8, 2});
    CHECK(v16.finite_points[1].exact == Surd{12, 8, 2});
    CHECK(v16.finite_points[0].kind == SingularPoint::Kind::Surd);
    CHECK(to_string(v16.finite_points[1].exact) == "12 + 8*sqrt(2)");

    const auto r1 = singular_points(UPoly{64, -20, 1});
    REQUIRE(r1.finite_points.size() == 2);
    CHECK(r1.finite_points[0].exact == Surd{4, 0, 0});
    CHECK(r1.finite_points[1].exact == Surd{16, 0, 0});
    CHECK(r1.finite_points[0].kind == SingularPoint::Kind::Rational);

    const auto v18 = singular_points(UPoly{-27, -18, 1});
    REQUIRE(v18.finite_points.size() == 2);
    CHECK(v18.finite_points[0].exact == Surd{9, -6, 3});
    CHECK(v18.finite_points[1].exact == Surd{9, 6, 3});

    const auto degenerate = singular_points(UPoly{0, 0, 1});
    CHECK(degenerate.finite_points.empty());
    CHECK(degenerate.zero_root_multiplicity == 2);

    const auto doubled = singular_points(UPoly{4, -4, 1});
    REQUIRE(doubled.finite_points.size() == 1);
    CHECK(doubled.finite_points[0].multiplicity == 2);

    // Cubic: numeric fallback for real roots of t^3 - 3t + 1.
    const auto cubic = singular_points(UPoly{1, -3, 0, 1});
    CHECK(cubic.finite_points.size() == 3);
    for (const auto& p : cubic.finite_points) CHECK(p.kind == SingularPoint::Kind::Numeric);
    CHECK(cubic.finite_points[0].numeric.rfind("-1.879385241571816768108218554", 0) == 0);
    const auto complex_pair = singular_points(UPoly{1, 0, 0, 1});
    CHECK(complex_pair.finite_points.size() == 1);
    CHECK(complex_pair.nonreal_roots_omitted == 2);
}

TEST_CASE("involution") {
    for (const auto& entry : catalog()) {
        const auto inv = involution(entry.expected_symbol);
        CHECK(inv.exists);
        CHECK(inv.M == entry.expected_M);
        const auto pts = singular_points(entry.expected_symbol).finite_points;
        REQUIRE(pts.size() == 2);
        // (p - q sqrt D)(p + q sqrt D) = p^2 - q^2 D.
        const auto& a = pts[0].exact;
        const auto& b = pts[1].exact;
        const Rational product = a.p * b.p + a.q * b.q * Rational(a.is_rational() ? 0 : a.radicand);
        CHECK(product == inv.M);
    }
    CHECK(involution(UPoly{64, -20, 1}).M == 64);
    CHECK_FALSE(involution(UPoly{1}).exists);
    CHECK_FALSE(involution(UPoly{1, -3, 0, 1}).exists);
}

TEST_CASE("Bareiss nullspace") {
    const IntegerMatrix m{{1, 2, 3}, {2, 4, 6}, {1, 0, -1}};
    const auto ns = nullspace(m);
    REQUIRE(ns.size() == 1);
    CHECK(ns[0] == std::vector<Integer>{1, -2, 1});
    const auto echelon = bareiss_echelon(m);
    CHECK(echelon.rank() == 2);
    CHECK(nullspace(IntegerMatrix{{1, 0}, {0, 1}}).empty());
}

}
