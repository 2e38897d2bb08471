#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "curvette/standard_form.hpp"
#include "helpers.hpp"

using namespace curvette;
using curvette::testing::make_curvette;

namespace {
const std::vector<std::string> kVars{"x", "y", "z"};
Poly P(const std::string& s) { return parse_poly_expr(s, kVars); }

int root_created_at(const RootSystem& rs, long level) {
    for (size_t i = 0; i < rs.roots().size(); ++i)
        if (!rs.roots()[i].is_variable && rs.roots()[i].created_at == Rat(level))
            return static_cast<int>(i);
    return -1;
}
} // namespace

TEST_CASE("coordinate preparation subtracts captured initial forms") {
    // The running example is already prepared.
    Curvette c = curvette::testing::space_curve();
    Preparation p = prepare_coordinates(c, Rat(37));
    CHECK(p.steps.empty());

    // Equal initial forms force one subtraction; the result is on the center.
    Curvette d = make_curvette({"x", "y"}, {"t^2", "t^2"}, 64);
    Preparation pd = prepare_coordinates(d, Rat(10));
    REQUIRE(pd.steps.size() == 1);
    CHECK(pd.steps[0].var_index == 1);
    CHECK(pd.steps[0].subtracted == parse_poly_expr("x", {"x", "y"}));
    CHECK(!pd.curvette.series_of(1).has_terms());

    // No combination reaches the second value below itself.
    Curvette e = make_curvette({"x", "y"}, {"t^2", "t^3"}, 64);
    CHECK(prepare_coordinates(e, Rat(10)).steps.empty());
}

TEST_CASE("preparation replays identically on a second point") {
    Curvette a = make_curvette({"x", "y"}, {"t^2", "t^2 + t^3"}, 64);
    Curvette b = make_curvette({"x", "y"}, {"t^2", "t^2 + t^4"}, 64);
    Preparation pa = prepare_coordinates(a, Rat(20));
    Curvette rb = replay_preparation(b, pa.steps);
    REQUIRE(!pa.steps.empty());
    CHECK(pa.curvette.series_of(1).order().value == Rat(3));
    CHECK(rb.series_of(1).order().value == Rat(4));
}

TEST_CASE("the level walk reproduces the worked root system") {
    RootSystem rs = curvette::testing::space_curve_roots(35);

    struct Want {
        long created;
        long value;
        const char* poly;
    };
    for (const auto& w : std::initializer_list<Want>{
             {20, 21, "y^2 - x*z"}, {24, 25, "y*z - x^4"}, {28, 29, "z^2 - x^3*y"}}) {
        int i = root_created_at(rs, w.created);
        REQUIRE(i >= 0);
        CHECK(rs.roots()[static_cast<size_t>(i)].value == Rat(w.value));
        CHECK(rs.roots()[static_cast<size_t>(i)].poly == P(w.poly));
        CHECK(rs.roots()[static_cast<size_t>(i)].in_V);
    }

    // The chain of lifted roots above value 31.
    long expected_value = 32;
    for (long created : {31, 32, 33, 34}) {
        int i = root_created_at(rs, created);
        REQUIRE(i >= 0);
        CHECK(rs.roots()[static_cast<size_t>(i)].value == Rat(expected_value));
        CHECK(!rs.roots()[static_cast<size_t>(i)].in_V);
        ++expected_value;
    }

    // Level 35 produces three dependencies (two of them the syzygy twins).
    const LevelRecord* lev35 = nullptr;
    for (const auto& lev : rs.levels())
        if (lev.gamma == Rat(35)) lev35 = &lev;
    REQUIRE(lev35);
    CHECK(lev35->monomials.size() == 4);
    CHECK(lev35->relations.size() == 3);
}

TEST_CASE("chain roots extend their predecessors' expressions") {
    RootSystem rs = curvette::testing::space_curve_roots(35);
    int q7 = root_created_at(rs, 31);
    REQUIRE(q7 >= 0);
    int cur = q7;
    while (rs.roots()[static_cast<size_t>(cur)].successor >= 0) {
        const auto& pred = rs.roots()[static_cast<size_t>(cur)];
        const auto& succ = rs.roots()[static_cast<size_t>(pred.successor)];
        CHECK(succ.in_monomial == pred.in_monomial);
        REQUIRE(succ.value.has_value());
        REQUIRE(pred.value.has_value());
        CHECK(*succ.value > *pred.value);
        // expression of the successor = expression of the predecessor + tail
        REQUIRE(succ.expression.size() == pred.expression.size() + 1);
        for (size_t k = 0; k < pred.expression.size(); ++k) {
            CHECK(succ.expression[k].second == pred.expression[k].second);
            CHECK(succ.expression[k].first == pred.expression[k].first);
        }
        // the predecessor expands as successor + tail, exactly
        Poly expanded = succ.poly;
        for (const auto& [cf, m] : pred.successor_tail)
            expanded = expanded + rs.mono_poly(m).scaled(cf);
        CHECK(expanded == pred.poly);
        cur = pred.successor;
    }
    CHECK(classify_essential(rs, q7, Rat(35)) == false);
    int last = cur;
    CHECK(classify_essential(rs, last, Rat(35)) == true);
    // variables are always essential
    for (int i = 0; i < 3; ++i) CHECK(classify_essential(rs, i, Rat(35)));
}

TEST_CASE("set classifications respect the value inequalities at every level") {
    RootSystem rs = curvette::testing::space_curve_roots(35);
    for (const auto& lev : rs.levels()) {
        for (int r : lev.lambda) {
            REQUIRE(rs.roots()[static_cast<size_t>(r)].value.has_value());
            CHECK(*rs.roots()[static_cast<size_t>(r)].value < lev.gamma);
        }
        for (int r : lev.theta) {
            const auto& rec = rs.roots()[static_cast<size_t>(r)];
            if (rec.value) CHECK(*rec.value >= lev.gamma);
        }
        for (int r : lev.v) {
            bool in_psi = false;
            for (int q : lev.psi) in_psi = in_psi || q == r;
            CHECK(in_psi); // V inside Psi inside Lambda
        }
        for (int r : lev.psi) {
            bool in_lambda = false;
            for (int q : lev.lambda) in_lambda = in_lambda || q == r;
            CHECK(in_lambda);
        }
    }
}

TEST_CASE("every bounded value has a lead spanned by standard monomials") {
    // The leads of equal-value standard monomials over the V roots span the
    // graded piece: for each random polynomial, a standard monomial of equal
    // value exists and a single coefficient matches the lead exactly.
    std::mt19937 rng(47);
    RootSystem rs = curvette::testing::space_curve_roots(35);
    Curvette c = rs.curvette();
    Semigroup sg = rs.value_semigroup();
    std::vector<int> vroots = rs.v_set();
    std::uniform_int_distribution<int> exp(0, 3), coef(-3, 3);
    int done = 0;
    for (int i = 0; i < 200 && done < 50; ++i) {
        Poly f(kVars);
        for (int k = 0; k < 3; ++k)
            f.add_term({exp(rng), exp(rng), exp(rng)}, RatFn(Rat(coef(rng))));
        auto v = nu_value(c, f);
        if (!v.known() || *v.value > Rat(35) || v.value->is_zero()) continue;
        CHECK(sg.contains(*v.value));

        // enumerate monomials over the V roots with this value and find a
        // standard one whose lead scales to the polynomial's lead
        std::vector<RootMono> found;
        std::function<void(size_t, Rat, RootMono&)> rec2 = [&](size_t idx, Rat rem,
                                                               RootMono& mono) {
            if (rem.is_zero()) {
                if (!mono.empty()) found.push_back(mono);
                return;
            }
            if (idx >= vroots.size() || rem < Rat(0)) return;
            const Rat& val = *rs.roots()[static_cast<size_t>(vroots[idx])].value;
            for (int e = 0; Rat(e) * val <= rem; ++e) {
                if (e > 0) mono[vroots[idx]] = e;
                rec2(idx + 1, rem - val * Rat(e), mono);
            }
            mono.erase(vroots[idx]);
        };
        RootMono scratch;
        rec2(0, *v.value, scratch);
        bool matched = false;
        RatFn lead_f = initial_form(c, f).lead;
        for (const auto& m : found) {
            if (!is_standard(m, rs, Rat(35))) continue;
            TruncSeries s = rs.mono_series(m);
            RatFn ratio = lead_f / s.lead();
            matched = matched || !ratio.is_zero();
        }
        CHECK(matched);
        ++done;
    }
    CHECK(done >= 30);
}

TEST_CASE("the dimension-2 recursion finds the first relation") {
    Curvette c = make_curvette({"x", "y"}, {"t^4", "t^6 + t^7"}, 64);
    RootSystem rs = roots_2d(prepare_coordinates(c, Rat(32)).curvette, 3);
    REQUIRE(rs.roots().size() >= 3);
    CHECK(rs.roots()[0].value == Rat(4));
    CHECK(rs.roots()[1].value == Rat(6));
    CHECK(rs.alpha_data().at(1).alpha_prime == 2);
    CHECK(rs.roots()[2].poly == parse_poly_expr("y^2 - x^3", {"x", "y"}));
    CHECK(rs.roots()[2].value == Rat(13));
}

TEST_CASE("a curvette on the lifted curve reports value-unknown") {
    Curvette c = make_curvette({"x", "y"}, {"t^2", "t^3"}, 64);
    RootSystem rs = roots_2d(prepare_coordinates(c, Rat(32)).curvette, 4);
    CHECK(rs.stop_reason() == "value-unknown");
    REQUIRE(rs.roots().size() == 3);
    CHECK(rs.roots()[2].poly == parse_poly_expr("y^2 - x^3", {"x", "y"}));
    CHECK(!rs.roots()[2].value.has_value());
}

TEST_CASE("preparation that empties a variable leaves a two-root system") {
    Curvette c = make_curvette({"x", "y"}, {"t", "t + u*t^2"}, 64);
    Preparation p = prepare_coordinates(c, Rat(32));
    RootSystem rs = roots_2d(p.curvette, 4);
    CHECK(rs.roots().size() == 2);
    CHECK(rs.stop_reason() == "value-unknown");
}

TEST_CASE("the two constructions agree on shared inputs") {
    for (const char* ys : {"t^6 + t^7", "t^6 + 2*t^7"}) {
        Curvette c = make_curvette({"x", "y"}, {"t^4", ys}, 80);
        Curvette prepared = prepare_coordinates(c, Rat(14)).curvette;
        RootSystem general = roots_up_to(prepared, Rat(13));
        RootSystem dim2 = roots_2d(prepared, 3);
        // the first lifted root matches between the general walk and the
        // dimension-2 recursion
        int g = root_created_at(general, 12);
        REQUIRE(g >= 0);
        CHECK(general.roots()[static_cast<size_t>(g)].poly == dim2.roots()[2].poly);
        CHECK(general.roots()[static_cast<size_t>(g)].value == dim2.roots()[2].value);
    }
}

TEST_CASE("levels beyond the truncation-safe bound are refused") {
    Curvette c = curvette::testing::space_curve(40);
    CHECK_THROWS_WITH_AS(static_cast<void>(roots_up_to(c, Rat(35))),
                         doctest::Contains("truncation-exceeded"), math_error);
}

TEST_CASE("a lifted root with unknown value aborts the general walk") {
    // the point lies on the lifted curve: the first relation's value cannot
    // be resolved at any truncation, which is reported as retryable
    Curvette c = make_curvette({"x", "y"}, {"t^2", "t^3"}, 64);
    RootSystem low = roots_up_to(c, Rat(5));
    CHECK(low.roots().size() == 2); // no relations below the first collision
    CHECK_THROWS_WITH_AS(static_cast<void>(roots_up_to(c, Rat(6))),
                         doctest::Contains("truncation-exceeded"), math_error);
}

TEST_CASE("the multiplicity product law holds on the recursion output") {
    Curvette c = make_curvette({"x", "y"}, {"t^4", "t^6 + t^7"}, 200);
    RootSystem rs = roots_2d(prepare_coordinates(c, Rat(60)).curvette, 4);
    const auto& seq = rs.essential_sequence();
    REQUIRE(seq.size() >= 3);
    long product = 1; // alpha_1 = 1
    for (size_t i = 2; i < seq.size(); ++i) {
        auto it = rs.alpha_data().find(seq[i - 1]);
        REQUIRE(it != rs.alpha_data().end());
        product *= it->second.alpha;
        auto o = rs.roots()[static_cast<size_t>(seq[i])].poly.order_at_origin();
        REQUIRE(o.has_value());
        CHECK(*o == product);
    }
}
