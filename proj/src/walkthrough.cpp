#include "curvette/walkthrough.hpp"

#include <algorithm>
#include <sstream>

#include "curvette/blowup.hpp"
#include "curvette/expr.hpp"
#include "curvette/session.hpp"
#include "curvette/standard_form.hpp"

namespace curvette {

namespace {

std::string session_text(const Rat& trunc) {
    return "# bundled example: a space curve with one symbolic coefficient\n"
           "vars x y z\n"
           "trunc " + trunc.to_string() + "\n"
           "assume u > 2\n"
           "tsign +\n"
           "x = t^6\n"
           "y = t^10 + u*t^11\n"
           "z = t^14 + t^15\n";
}


int find_root(const RootSystem& rs, const Rat& created_at) {
    for (size_t i = 0; i < rs.roots().size(); ++i)
        if (!rs.roots()[i].is_variable && rs.roots()[i].created_at == created_at)
            return static_cast<int>(i);
    return -1;
}

std::string opt_value(const std::optional<Rat>& v) {
    return v ? v->to_string() : std::string("unknown");
}

} // namespace

std::string walkthrough_session_text() { return session_text(Rat(80)); }

WalkthroughReport run_walkthrough(std::optional<Rat> trunc_override) {
    WalkthroughReport rep;
    auto check = [&](const std::string& name, const std::string& expected,
                     const std::string& actual) {
        rep.checks.push_back(WalkthroughCheck{name, expected, actual, expected == actual});
    };

    SessionConfig cfg = parse_session(session_text(trunc_override.value_or(Rat(80))));
    const auto& vars = cfg.vars;

    Preparation prep = prepare_coordinates(cfg.curvette, Rat(35));
    check("preparation leaves the coordinates unchanged", "0",
          std::to_string(prep.steps.size()));

    RootSystem rs = roots_up_to(prep.curvette, Rat(35));

    struct Expect {
        Rat created_at;
        const char* name;
        const char* value;
        const char* poly; // empty: skip
        const char* lead; // empty: skip
    };
    const Expect expected_roots[] = {
        {Rat(20), "first lifted root", "21", "y^2 - x*z", "2*u - 1"},
        {Rat(24), "second lifted root", "25", "y*z - x^4", "u + 1"},
        {Rat(28), "third lifted root", "29", "z^2 - x^3*y", "-u + 2"},
        {Rat(31), "fourth lifted root", "32", "", ""},
        {Rat(32), "fifth lifted root", "33", "", ""},
    };
    for (const auto& e : expected_roots) {
        int idx = find_root(rs, e.created_at);
        if (idx < 0) {
            check(std::string(e.name) + " exists", "yes", "no");
            continue;
        }
        const auto& rec = rs.roots()[static_cast<size_t>(idx)];
        check(std::string(e.name) + " value", e.value, opt_value(rec.value));
        if (*e.poly)
            check(std::string(e.name) + " polynomial", e.poly, rec.poly.to_string());
        if (*e.lead)
            check(std::string(e.name) + " leading coefficient", e.lead,
                  rec.series.has_terms() ? rec.series.lead().to_string() : "unknown");
    }
    {
        // The level-31 root is the expected combination of earlier roots.
        int q4 = find_root(rs, Rat(20)), q5 = find_root(rs, Rat(24));
        int q7 = find_root(rs, Rat(31));
        if (q4 >= 0 && q5 >= 0 && q7 >= 0) {
            RatFn alpha(UPoly(std::vector<Rat>{Rat(-1), Rat(2)}),
                        UPoly(std::vector<Rat>{Rat(1), Rat(1)})); // (2u-1)/(u+1)
            Poly expect = Poly::variable(vars, 1) * rs.roots()[static_cast<size_t>(q4)].poly -
                          (Poly::variable(vars, 0) * rs.roots()[static_cast<size_t>(q5)].poly)
                              .scaled(alpha);
            check("fourth lifted root is the expected combination", "yes",
                  expect == rs.roots()[static_cast<size_t>(q7)].poly ? "yes" : "no");
        }
    }

    // Value semigroup positions.
    Semigroup sg = rs.value_semigroup();
    check("8th positive semigroup element", "21", sg.nth(8).to_string());
    check("11th positive semigroup element", "25", sg.nth(11).to_string());

    // Standard forms of x^3 + y^3 + z^3.
    Poly f = parse_poly_expr("x^3 + y^3 + z^3", vars);
    {
        StandardForm sf30 = standard_form(f, Rat(30), rs);
        Poly back = expand_monomials(sf30.settled, rs) + expand_monomials(sf30.tail, rs);
        check("standard form of level 30 is unchanged", "yes",
              sf30.settled.size() == 1 && sf30.tail.size() == 2 && back == f ? "yes" : "no");
    }
    {
        std::vector<RewriteStep> log;
        StandardForm sf = standard_form(f, Rat(31), rs, &log);
        std::vector<std::string> monos;
        std::vector<std::string> values;
        for (const auto& [c, m] : sf.settled) {
            monos.push_back(rs.mono_string(m));
            values.push_back(rs.mono_value(m).to_string());
        }
        for (const auto& [c, m] : sf.tail) {
            monos.push_back(rs.mono_string(m));
            values.push_back(rs.mono_value(m).to_string());
        }
        std::ostringstream ms, vs;
        for (const auto& s : monos) ms << s << " ";
        for (const auto& s : values) vs << s << " ";
        check("standard form of level 31", "x^3 x^5 y*Q4 x*Q5 z^3 ", ms.str());
        check("standard form of level 31 value list", "18 30 31 31 42 ", vs.str());
        // After the first rewrite the working expansion passes through
        // x^3 + y*Q4 + x*y*z + z^3; the second step then rewrites x*y*z.
        std::ostringstream steps;
        for (const auto& st : log) steps << st.rendered << "; ";
        check("level 31 rewrite steps", "y^3 -> via Q4; x*y*z -> via Q5; ", steps.str());
        Poly back = expand_monomials(sf.settled, rs) + expand_monomials(sf.tail, rs);
        check("standard form re-expands exactly", "yes", back == f ? "yes" : "no");
        check("value read from the standard form", "18",
              value_via_standard_form(f, rs).to_string());
    }

    // Separating data for the pair of points with distinct parameter values.
    {
        CurvettePair sym(cfg.curvette, cfg.curvette, true);
        SepResult s = separating_value(sym);
        check("separating value (symbolic pair)", "31",
              s.found ? s.value_alpha.to_string() : "none");
        check("divergence kind (symbolic pair)", "sign-order-mismatch",
              divergence_kind_name(s.kind));
        CurvettePair exact(cfg.curvette.specialized(Rat(3)), cfg.curvette.specialized(Rat(4)),
                           true);
        SepResult s2 = separating_value(exact);
        check("separating value (parameters 3 and 4)", "31",
              s2.found ? s2.value_alpha.to_string() : "none");
        check("divergence kind (parameters 3 and 4)", "sign-order-mismatch",
              divergence_kind_name(s2.kind));
        std::ostringstream leads;
        for (const auto& l : s2.alpha_leads) leads << l.to_string() << " ";
        leads << "| ";
        for (const auto& l : s2.beta_leads) leads << l.to_string() << " ";
        check("lead vectors at the separating level", "5 4 | 7 5 ", leads.str());
        Poly w = witness_sign_change(exact, s2);
        check("witness changes sign between the points", "1 -1",
              std::to_string(sign_at(exact.alpha, w)) + " " +
                  std::to_string(sign_at(exact.beta, w)));

        // The lifted level-31 roots differ once the parameter is specialized.
        RootSystem ra = roots_up_to(
            prepare_coordinates(cfg.curvette.specialized(Rat(3)), Rat(32)).curvette, Rat(32));
        RootSystem rb = roots_up_to(
            prepare_coordinates(cfg.curvette.specialized(Rat(4)), Rat(32)).curvette, Rat(32));
        int qa = find_root(ra, Rat(31)), qb = find_root(rb, Rat(31));
        check("lifted roots beyond the separating value differ", "yes",
              qa >= 0 && qb >= 0 &&
                      !(ra.roots()[static_cast<size_t>(qa)].poly ==
                        rb.roots()[static_cast<size_t>(qb)].poly)
                  ? "yes"
                  : "no");
    }

    // The syzygy among the first three lifted roots.
    {
        int q4 = find_root(rs, Rat(20)), q5 = find_root(rs, Rat(24)), q6 = find_root(rs, Rat(28));
        if (q4 >= 0 && q5 >= 0 && q6 >= 0) {
            Poly syz = Poly::variable(vars, 0) * rs.roots()[static_cast<size_t>(q6)].poly -
                       Poly::variable(vars, 1) * rs.roots()[static_cast<size_t>(q5)].poly +
                       Poly::variable(vars, 2) * rs.roots()[static_cast<size_t>(q4)].poly;
            check("syzygy vanishes identically", "yes", syz.is_zero() ? "yes" : "no");
            check("syzygy value is zero-to-truncation", "zero-to-truncation",
                  nu_value(cfg.curvette, syz).to_string());
        }
    }

    return rep;
}

} // namespace curvette
