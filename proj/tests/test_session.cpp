#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "curvette/session.hpp"
#include "curvette/walkthrough.hpp"
#include "helpers.hpp"

using namespace curvette;

TEST_CASE("a full session file parses into a validated configuration") {
    SessionConfig cfg = parse_session(
        "# the running example\n"
        "vars x y z\n"
        "trunc 80\n"
        "assume u > 2\n"
        "tsign +\n"
        "x = t^6\n"
        "y = t^10 + u*t^11\n"
        "z = t^14 + t^15\n");
    CHECK(cfg.vars == std::vector<std::string>{"x", "y", "z"});
    CHECK(cfg.truncation == Rat(80));
    CHECK(cfg.t_sign == 1);
    CHECK(cfg.curvette.series_of(1).coeff(Rat(11)) == RatFn::param());
    CHECK(cfg.assumption.kind == ParamAssumption::Kind::OpenInterval);
    CHECK(nu_value(cfg.curvette, parse_poly_expr("x", cfg.vars)).value == Rat(6));
}

TEST_CASE("the last assumption wins") {
    SessionConfig cfg = parse_session(
        "vars x\nassume u > 2\nassume u = 3\nx = t^2\n");
    CHECK(cfg.assumption.kind == ParamAssumption::Kind::ExactValue);
    CHECK(cfg.assumption.value == Rat(3));
    SessionConfig cfg2 = parse_session("vars x\nassume 2 < u < 5\nx = t^2\n");
    CHECK(cfg2.assumption.lo == Rat(2));
    CHECK(cfg2.assumption.hi == Rat(5));
}

TEST_CASE("parse errors carry their position") {
    CHECK_THROWS_WITH_AS(static_cast<void>(parse_session("vars x\nx = t^\n")),
                         doctest::Contains("line 2"), math_error);
    CHECK_THROWS_WITH_AS(static_cast<void>(parse_session("vars x\nx = t^2 + w\n")),
                         doctest::Contains("line 2"), math_error);
    CHECK_THROWS_AS(static_cast<void>(parse_session("vars x y\nx = t^2\n")), math_error);
    CHECK_THROWS_WITH_AS(static_cast<void>(parse_session("vars x x\nx = t^2\n")),
                         doctest::Contains("duplicate"), math_error);
    CHECK_THROWS_AS(static_cast<void>(parse_session("vars u\nu = t^2\n")), math_error);
    // constant term breaks the positive-order invariant
    CHECK_THROWS_AS(static_cast<void>(parse_session("vars x\nx = 1 + t\n")), math_error);
}

TEST_CASE("levels above half the truncation are rejected") {
    SessionConfig cfg = parse_session("vars x\ntrunc 20\nx = t^2\n");
    CHECK_NOTHROW(cfg.require_level(Rat(10)));
    CHECK_THROWS_WITH_AS(cfg.require_level(Rat(11)),
                         doctest::Contains("invariant-violation"), math_error);
}

TEST_CASE("expression parsing handles coefficients and rejects bad division") {
    auto vars = std::vector<std::string>{"x", "y"};
    Poly p = parse_poly_expr("(2*u-1)/(u+1) * x^2 - y/2", vars);
    CHECK(p.terms().size() == 2);
    CHECK_THROWS_AS(static_cast<void>(parse_poly_expr("x / y", vars)), math_error);
    CHECK_THROWS_AS(static_cast<void>(parse_poly_expr("x / 0", vars)), math_error);
    CHECK_THROWS_WITH_AS(static_cast<void>(parse_poly_expr("x + ", vars)),
                         doctest::Contains("col"), math_error);
    CHECK(parse_poly_expr("-x + - y", vars) == -parse_poly_expr("x + y", vars));
}

TEST_CASE("the bundled walkthrough is deterministic") {
    WalkthroughReport a = run_walkthrough();
    WalkthroughReport b = run_walkthrough();
    REQUIRE(a.checks.size() == b.checks.size());
    for (size_t i = 0; i < a.checks.size(); ++i) {
        CHECK(a.checks[i].name == b.checks[i].name);
        CHECK(a.checks[i].actual == b.checks[i].actual);
    }
    CHECK(a.all_pass());
}

TEST_CASE("a too-small truncation fails with the retryable error") {
    CHECK_THROWS_WITH_AS(static_cast<void>(run_walkthrough(Rat(24))),
                         doctest::Contains("truncation-exceeded"), math_error);
}
