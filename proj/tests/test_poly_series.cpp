#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "helpers.hpp"

using namespace curvette;
using curvette::testing::make_curvette;

namespace {
const std::vector<std::string> kVars{"x", "y", "z"};

Poly P(const std::string& s) { return parse_poly_expr(s, kVars); }

Poly random_poly(std::mt19937& rng, int max_terms = 4, int max_exp = 3) {
    std::uniform_int_distribution<int> terms(1, max_terms), exp(0, max_exp), coef(-3, 3);
    Poly p(kVars);
    int n = terms(rng);
    for (int i = 0; i < n; ++i) {
        Exps e{exp(rng), exp(rng), exp(rng)};
        p.add_term(e, RatFn(Rat(coef(rng))));
    }
    return p;
}

} // namespace

TEST_CASE("polynomial ring operations normalize term maps") {
    CHECK(P("y^2 - x*z") + P("x*z") == P("y^2"));
    CHECK(P("y") * P("y^2 - x*z") == P("y^3 - x*y*z"));
    CHECK((P("x") - P("x")).is_zero());
    CHECK_THROWS_AS(P("x") + parse_poly_expr("a", {"a"}), math_error);
}

TEST_CASE("the three lifted roots satisfy the exact syzygy") {
    Poly q4 = P("y^2 - x*z"), q5 = P("y*z - x^4"), q6 = P("z^2 - x^3*y");
    Poly syz = P("x") * q6 - P("y") * q5 + P("z") * q4;
    CHECK(syz.is_zero());
}

TEST_CASE("series substitution reproduces the worked coefficients") {
    Curvette c = curvette::testing::space_curve(40);
    TruncSeries q4 = series_substitute(P("y^2 - x*z"), c.series());
    CHECK(q4.order().value == Rat(21));
    CHECK(q4.lead().to_string() == "2*u - 1");
    CHECK(q4.coeff(Rat(22)).to_string() == "u^2");
    CHECK(q4.terms().size() == 2);

    TruncSeries q5 = series_substitute(P("y*z - x^4"), c.series());
    CHECK(q5.order().value == Rat(25));
    CHECK(q5.lead().to_string() == "u + 1");
    CHECK(q5.coeff(Rat(26)).to_string() == "u");

    TruncSeries one = series_substitute(P("1"), c.series());
    CHECK(one.order().value == Rat(0));
    CHECK(one.lead() == RatFn(1));
}

TEST_CASE("series order reports zero-to-truncation for empty series") {
    Curvette c = curvette::testing::space_curve(40);
    TruncSeries q6 = series_substitute(P("z^2 - x^3*y"), c.series());
    CHECK(q6.order().value == Rat(29));
    CHECK(q6.lead().to_string() == "-u + 2");

    TruncSeries zero = TruncSeries::zero(Rat(40));
    CHECK(!zero.order().known());
    CHECK(zero.order().to_string() == "zero-to-truncation");
    CHECK_THROWS_AS(static_cast<void>(zero.lead()), math_error);
}

TEST_CASE("orders add under multiplication below the bound") {
    std::mt19937 rng(19);
    std::uniform_int_distribution<int> exp(1, 6), coef(1, 5), nterms(1, 3);
    for (int i = 0; i < 80; ++i) {
        TruncSeries a(Rat(40)), b(Rat(40));
        int n = nterms(rng), m = nterms(rng);
        for (int k = 0; k < n; ++k) a.add_term(Rat(exp(rng)), RatFn(Rat(coef(rng))));
        for (int k = 0; k < m; ++k) b.add_term(Rat(exp(rng)), RatFn(Rat(coef(rng))));
        TruncSeries prod = a * b;
        REQUIRE(a.order().known());
        REQUIRE(b.order().known());
        Rat expect = *a.order().value + *b.order().value;
        if (prod.bound() && !(expect < *prod.bound())) continue;
        CHECK(prod.order().value == expect);
    }
}

TEST_CASE("substitution is a ring homomorphism below the shared bound") {
    std::mt19937 rng(23);
    Curvette c = curvette::testing::space_curve(48);
    for (int i = 0; i < 40; ++i) {
        Poly f = random_poly(rng), g = random_poly(rng);
        TruncSeries lhs = series_substitute(f * g, c.series());
        TruncSeries rhs = series_substitute(f, c.series()) *
                          series_substitute(g, c.series());
        // compare below the smaller bound
        std::optional<Rat> bound = lhs.bound();
        if (rhs.bound() && (!bound || *rhs.bound() < *bound)) bound = rhs.bound();
        for (const auto& [e, coeff] : lhs.terms()) {
            if (bound && !(e < *bound)) continue;
            CHECK(rhs.coeff(e) == coeff);
        }
        for (const auto& [e, coeff] : rhs.terms()) {
            if (bound && !(e < *bound)) continue;
            CHECK(series_substitute(f * g, c.series()).coeff(e) == coeff);
        }
    }
}

TEST_CASE("scaling a polynomial by a unit scales every series coefficient") {
    std::mt19937 rng(29);
    Curvette c = curvette::testing::space_curve(48);
    RatFn unit(UPoly(std::vector<Rat>{Rat(1), Rat(2)}),
               UPoly(std::vector<Rat>{Rat(3), Rat(1)})); // (2u+1)/(u+3)
    for (int i = 0; i < 30; ++i) {
        Poly f = random_poly(rng);
        TruncSeries base = series_substitute(f, c.series());
        TruncSeries scaled = series_substitute(f.scaled(unit), c.series());
        CHECK(scaled.terms().size() == base.terms().size());
        for (const auto& [e, coeff] : base.terms()) CHECK(scaled.coeff(e) == coeff * unit);
    }
}

TEST_CASE("product reliability follows the truncation rule") {
    // bounds (N1, o1) = (10, 2) and (N2, o2) = (20, 5):
    // the product is reliable strictly below min(10 + 5, 20 + 2) = 15.
    TruncSeries a(Rat(10)), b(Rat(20));
    a.add_term(Rat(2), RatFn(1));
    b.add_term(Rat(5), RatFn(1));
    TruncSeries prod = a * b;
    REQUIRE(prod.bound().has_value());
    CHECK(*prod.bound() == Rat(15));

    // sums clip at the smaller bound
    TruncSeries sum = a + b;
    REQUIRE(sum.bound().has_value());
    CHECK(*sum.bound() == Rat(10));

    // exact series do not constrain the product beyond the other factor
    TruncSeries exact(std::nullopt);
    exact.add_term(Rat(3), RatFn(1));
    TruncSeries p2 = a * exact;
    REQUIRE(p2.bound().has_value());
    CHECK(*p2.bound() == Rat(13));
}

TEST_CASE("series division inverts multiplication on curve data") {
    TruncSeries y = parse_series_expr("t^3 + t^4", Rat(30));
    TruncSeries x = parse_series_expr("t^2", Rat(30));
    TruncSeries q = TruncSeries::divide(y, x);
    CHECK(q.order().value == Rat(1));
    CHECK(q.coeff(Rat(1)) == RatFn(1));
    CHECK(q.coeff(Rat(2)) == RatFn(1));
    // multiply back and compare below the quotient bound
    TruncSeries back = q * x;
    for (const auto& [e, coeff] : back.terms()) CHECK(y.coeff(e) == coeff);
    CHECK_THROWS_AS(static_cast<void>(TruncSeries::divide(x, TruncSeries::zero(Rat(30)))),
                    math_error);
}
