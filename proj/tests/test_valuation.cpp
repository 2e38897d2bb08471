#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "curvette/semigroup.hpp"
#include "helpers.hpp"

using namespace curvette;
using curvette::testing::make_curvette;

namespace {
const std::vector<std::string> kVars{"x", "y", "z"};
Poly P(const std::string& s) { return parse_poly_expr(s, kVars); }
} // namespace

TEST_CASE("curvette values are read off substituted series") {
    Curvette c = curvette::testing::space_curve(60);
    CHECK(nu_value(c, P("x")).value == Rat(6));
    CHECK(nu_value(c, P("z^2 - x^3*y")).value == Rat(29));
    Poly syz = P("x") * P("z^2 - x^3*y") - P("y") * P("y*z - x^4") + P("z") * P("y^2 - x*z");
    CHECK(!nu_value(c, syz).known());
}

TEST_CASE("initial forms carry value and nonzero lead") {
    Curvette c = curvette::testing::space_curve(60);
    InitialForm a = initial_form(c, P("y") * P("y^2 - x*z"));
    CHECK(a.value == Rat(31));
    CHECK(a.lead.to_string() == "2*u - 1");
    InitialForm b = initial_form(c, P("x") * P("y*z - x^4"));
    CHECK(b.value == Rat(31));
    CHECK(b.lead.to_string() == "u + 1");
    InitialForm d = initial_form(c, P("x"));
    CHECK(d.value == Rat(6));
    CHECK(d.lead == RatFn(1));
    CHECK_THROWS_AS(static_cast<void>(initial_form(
                        c, P("x") * P("z^2-x^3*y") - P("y") * P("y*z-x^4") +
                               P("z") * P("y^2-x*z"))),
                    math_error);
}

TEST_CASE("signs at a point combine lead sign and t parity") {
    Curvette c = curvette::testing::space_curve(60);
    CHECK(sign_at(c, P("y^2 - x*z")) == 1);   // lead 2u-1 > 0 on (2, oo)
    CHECK(sign_at(c, P("z^2 - x^3*y")) == -1); // lead 2-u < 0 on (2, oo)
    CHECK(sign_at(c, Poly(kVars)) == 0);

    Curvette neg = make_curvette({"x", "y"}, {"t^3", "t^4"}, 64,
                                 ParamAssumption::whole_line(), -1);
    CHECK(sign_at(neg, parse_poly_expr("x", {"x", "y"})) == -1); // odd exponent flips
    CHECK(sign_at(neg, parse_poly_expr("y", {"x", "y"})) == 1);  // even exponent
}

TEST_CASE("monomial valuations minimize the weighted degree") {
    MonomialValuation m({"x", "y"}, {Rat(6), Rat(10)});
    CHECK(monomial_value(m, parse_poly_expr("y^2 - x^3", {"x", "y"})) == Rat(18));
    CHECK(monomial_value(m, parse_poly_expr("1", {"x", "y"})) == Rat(0));
    CHECK(!monomial_value(m, Poly({"x", "y"})).has_value());
    MonomialValuation unit({"x", "y"}, {Rat(1), Rat(1)});
    CHECK(monomial_value(unit, parse_poly_expr("x + y^2", {"x", "y"})) == Rat(1));
}

TEST_CASE("monomial valuation agrees with the ideal-membership search") {
    std::mt19937 rng(31);
    std::uniform_int_distribution<int> w(1, 9), exp(0, 4), coef(1, 5), terms(1, 4);
    for (int i = 0; i < 60; ++i) {
        MonomialValuation m({"x", "y"}, {Rat(w(rng)), Rat(w(rng))});
        Poly f({"x", "y"});
        int n = terms(rng);
        for (int k = 0; k < n; ++k) f.add_term({exp(rng), exp(rng)}, RatFn(Rat(coef(rng))));
        auto fast = monomial_value(m, f);
        REQUIRE(fast.has_value());
        // Oracle: walk the weight semigroup; f lies in the ideal of value g
        // exactly when every monomial's weighted degree reaches g.
        Semigroup sg({m.weights[0], m.weights[1]});
        std::optional<Rat> oracle = Rat(0);
        for (size_t n2 = 1;; ++n2) {
            Rat g = sg.nth(n2);
            if (g > *fast + m.weights[0] + m.weights[1]) break;
            bool inside = true;
            for (const auto& [e, cfc] : f.terms()) {
                Rat deg = m.weights[0] * Rat(e[0]) + m.weights[1] * Rat(e[1]);
                if (deg < g) { inside = false; break; }
            }
            if (inside) oracle = g;
        }
        CHECK(*fast == *oracle);
    }
}

TEST_CASE("semigroup enumeration is sorted and matches brute force") {
    Semigroup sg({Rat(6), Rat(10), Rat(14), Rat(21), Rat(25), Rat(29)});
    CHECK(sg.nth(8) == Rat(21));
    CHECK(sg.nth(11) == Rat(25));
    Semigroup unit({Rat(1)});
    CHECK(unit.enumerate(3) == std::vector<Rat>{Rat(1), Rat(2), Rat(3)});

    std::mt19937 rng(37);
    std::uniform_int_distribution<int> g(2, 12), count(1, 3);
    for (int i = 0; i < 40; ++i) {
        std::vector<Rat> gens;
        int n = count(rng) + 1;
        for (int k = 0; k < n; ++k) gens.push_back(Rat(g(rng)));
        Semigroup s(gens);
        auto fast = s.enumerate(10);
        // brute force below the 10th element
        std::set<Rat> brute;
        std::function<void(Rat, size_t)> rec = [&](Rat acc, size_t idx) {
            if (acc > fast.back()) return;
            if (!acc.is_zero()) brute.insert(acc);
            for (size_t j = idx; j < gens.size(); ++j) rec(acc + gens[j], j);
        };
        rec(Rat(0), 0);
        std::vector<Rat> expect(brute.begin(), brute.end());
        expect.resize(std::min<size_t>(expect.size(), 10));
        CHECK(fast == expect);
    }
}

TEST_CASE("values are additive on products") {
    std::mt19937 rng(97);
    Curvette c = curvette::testing::space_curve(120);
    std::uniform_int_distribution<int> exp(0, 2), coef(-3, 3), terms(1, 3);
    int done = 0;
    for (int i = 0; i < 120 && done < 50; ++i) {
        Poly f(kVars), g(kVars);
        for (int k = 0; k < terms(rng); ++k)
            f.add_term({exp(rng), exp(rng), exp(rng)}, RatFn(Rat(coef(rng))));
        for (int k = 0; k < terms(rng); ++k)
            g.add_term({exp(rng), exp(rng), exp(rng)}, RatFn(Rat(coef(rng))));
        auto vf = nu_value(c, f), vg = nu_value(c, g), vfg = nu_value(c, f * g);
        if (!vf.known() || !vg.known() || !vfg.known()) continue;
        CHECK(*vfg.value == *vf.value + *vg.value);
        ++done;
    }
    CHECK(done >= 30);
}

TEST_CASE("a sum has the minimal value exactly when the minimal leads survive") {
    std::mt19937 rng(41);
    Curvette c = curvette::testing::space_curve(60);
    std::uniform_int_distribution<int> exp(0, 3), coef(-3, 3), count(2, 4);
    for (int i = 0; i < 80; ++i) {
        int s = count(rng);
        std::vector<Poly> parts;
        std::vector<TruncSeries> images;
        Poly total(kVars);
        for (int k = 0; k < s; ++k) {
            Poly f(kVars);
            Exps e{exp(rng), exp(rng), exp(rng)};
            int cf = coef(rng);
            if (cf == 0) cf = 1;
            f.add_term(e, RatFn(Rat(cf)));
            // occasionally inject an exact cancellation
            if (k == 1 && i % 3 == 0) f = -parts[0];
            parts.push_back(f);
            images.push_back(series_substitute(f, c.series()));
            total = total + f;
        }
        std::optional<Rat> beta;
        for (const auto& im : images)
            if (im.has_terms() && (!beta || im.lead_exp() < *beta)) beta = im.lead_exp();
        if (!beta) continue;
        RatFn lead_sum;
        for (const auto& im : images)
            if (im.has_terms() && im.lead_exp() == *beta) lead_sum += im.lead();
        SeriesOrder total_order = nu_value(c, total);
        bool value_is_min = total_order.known() && *total_order.value == *beta;
        CHECK(value_is_min == !lead_sum.is_zero());
    }
}

TEST_CASE("smaller value dominates any rational multiple of a larger one") {
    std::mt19937 rng(43);
    Curvette c = curvette::testing::space_curve(60);
    std::uniform_int_distribution<int> exp(0, 2), coef(1, 4);
    int done = 0;
    for (int i = 0; i < 200 && done < 40; ++i) {
        Poly f(kVars), g(kVars);
        f.add_term({exp(rng), exp(rng), exp(rng)}, RatFn(Rat(coef(rng))));
        g.add_term({exp(rng) + 1, exp(rng), exp(rng)}, RatFn(Rat(coef(rng))));
        auto vf = nu_value(c, f), vg = nu_value(c, g);
        if (!vf.known() || !vg.known() || !(*vf.value < *vg.value)) continue;
        if (sign_at(c, f) != 1) continue;
        for (long N : {1L, 10L, 1000000L})
            CHECK(sign_at(c, f - g.scaled(RatFn(Rat(N)))) == 1);
        ++done;
    }
    CHECK(done >= 20);
}
