#include "pipeline.hpp"

#include "lgapery/catalog.hpp"
#include "lgapery/parser.hpp"

#include <doctest.h>

using namespace lgapery;
using namespace lgapery::cli;

namespace {

int exit_code_of(const std::string& input, RunOptions options = {}, bool periods_only = false) {
    try {
        cmd_run(input, options, periods_only);
        return kSuccess;
    } catch (const StageError& e) {
        return e.exit_code();
    }
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("catalog") {
    CHECK(catalog().size() == 4);
    const auto* v18 = find_catalog_entry("V18");
    REQUIRE(v18);
    CHECK(v18->phi == parse("(x+y+z)*(x+y+z+x*y+x*z+y*z+x*y*z)/(x*y*z)", 3));
    CHECK(find_catalog_entry("v18") == nullptr);
    const std::vector<UPoly> symbols{{1, -34, 1}, {16, -24, 1}, {-27, -18, 1}, {64, -20, 1}};
    const std::vector<long> ms{1, 16, -27, 64};
    for (std::size_t i = 0; i < 4; ++i) {
        CHECK(catalog()[i].expected_symbol == symbols[i]);
        CHECK(catalog()[i].expected_M == ms[i]);
    }
    const auto j = catalog_json();
    CHECK(j.size() == 4);
}

TEST_CASE("run V12 end to end") {
    RunOptions options;
    const auto report = cmd_run("V12", options);
    REQUIRE(report.op);
    CHECK(*report.op == parse_operator("D^3 - t*(1+2*D)*(17*D^2+17*D+5) + t^2*(D+1)^3"));
    CHECK(*report.symbol == UPoly{1, -34, 1});
    CHECK(report.involution->M == 1);
    REQUIRE(report.apery);
    REQUIRE(report.apery->recognized);
    CHECK(report.apery->recognized->coefficient == Rational(1, 6));
    CHECK(report.apery->recognized->basis == "zeta3");
    CHECK(report.polytope->reflexive);
    CHECK(report.temperedness->passed);

    const auto first = to_json(report, options).dump(2);
    const auto second = to_json(cmd_run("V12", options), options).dump(2);
    CHECK(first == second);
    CHECK(first.find("timings") == std::string::npos);
}

TEST_CASE("run V18 recognizes pi^3/sqrt(3)") {
    const auto report = cmd_run("V18", RunOptions{});
    REQUIRE(report.apery->recognized);
    CHECK(report.apery->recognized->basis == "pi3_over_sqrt3");
}

TEST_CASE("periods only") {
    RunOptions options;
    options.terms = 8;
    const auto report = cmd_run("x+y+z+1/(x*y*z)", options, true);
    REQUIRE(report.periods);
    CHECK(report.periods->values ==
          std::vector<Rational>{1, 0, 0, 0, 24, 0, 0, 0, 2520});
    CHECK_FALSE(report.op);
    const auto j = to_json(report, options);
    CHECK(j["periods"]["values"].size() == 9);
}

TEST_CASE("exit codes") {
    CHECK(exit_code_of("x +* y") == kParse);
    CHECK(exit_code_of("x+y+z+1/(x*y*z)+3*x/y") == kGeometry);
    RunOptions small;
    small.ansatz_order = 1;
    small.ansatz_degree = 1;
    CHECK(exit_code_of("V12", small) == kDiscovery);
    RunOptions few;
    few.terms = 20;
    CHECK(exit_code_of("R1", few) == kConvergence);

    Pipeline b4(RunOptions{});
    b4.use_operator("D^3 - 64*t^2*(D+1)^3");
    b4.analyze();
    try {
        b4.apery();
        FAIL("expected a convergence failure");
    } catch (const StageError& e) {
        CHECK(e.exit_code() == kConvergence);
        CHECK(e.stage() == "apery");
    }
}

TEST_CASE("oracle rerun") {
    RunOptions options;
    options.oracle = true;
    options.terms = 8;
    const auto report = cmd_run("V16", options, true);
    CHECK(report.oracle_verified);
}

TEST_CASE("check-v16") {
    const auto pass = cmd_check_v16_value(20);
    CHECK(pass.passed);
    CHECK(pass.residual < pow10(-18, bits_for_digits(40)));
    CHECK(cmd_check_v16_value(5).passed);
    const auto fail = cmd_check_v16_value(20, Rational(1, 1000));
    CHECK_FALSE(fail.passed);
    CHECK(fail.residual > fail.threshold);
    const auto j = to_json(fail, false);
    CHECK(j["passed"] == false);
}

TEST_CASE("guard digits") {
    CHECK(guard_digits_for(50) == 8);
    CHECK(guard_digits_for(12) == 4);
    CHECK(3 * guard_digits_for(5) <= 5);
}

}
