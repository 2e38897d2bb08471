/*
 * curvette_cli.cpp
 * Command-line front end: curvette values, semigroups, root systems,
 * standard forms, separating ideals, blowups, dual graphs, and the bundled
 * walkthrough. Exit codes: 0 success, 1 math error or check mismatch,
 * 2 usage.
 */
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "curvette/blowup.hpp"
#include "curvette/dual_graph.hpp"
#include "curvette/expr.hpp"
#include "curvette/session.hpp"
#include "curvette/standard_form.hpp"
#include "curvette/walkthrough.hpp"

using nlohmann::json;
using namespace curvette;

namespace {

SessionConfig load_with_trunc(const std::string& path, const std::string& trunc) {
    SessionConfig cfg = load_session(path);
    if (!trunc.empty()) {
        Rat t = Rat::from_string(trunc);
        std::vector<TruncSeries> ss;
        for (const auto& s : cfg.curvette.series()) ss.push_back(s.clipped(t));
        cfg.truncation = t;
        cfg.curvette = Curvette(cfg.vars, std::move(ss), cfg.assumption, cfg.t_sign);
    }
    return cfg;
}

Curvette maybe_specialize(const Curvette& c, const std::string& value) {
    if (value.empty()) return c;
    return c.specialized(Rat::from_string(value));
}

json root_json(const RootSystem& rs, int i) {
    const auto& r = rs.roots()[static_cast<size_t>(i)];
    json j;
    j["name"] = rs.root_name(i);
    j["value"] = r.value ? json(r.value->to_string()) : json(nullptr);
    j["poly"] = r.poly.to_string();
    j["in"] = rs.mono_string(r.in_monomial);
    std::ostringstream ex;
    bool first = true;
    for (const auto& [c, m] : r.expression) {
        if (!first) ex << " + ";
        first = false;
        ex << "(" << c.to_string() << ")*" << rs.mono_string(m);
    }
    j["expression"] = ex.str();
    j["essential"] = rs.essential_at(i, rs.level());
    j["in_v"] = r.in_V;
    j["in_theta"] = rs.in_theta_at(i, rs.level());
    if (r.successor >= 0) j["successor"] = rs.root_name(r.successor);
    return j;
}

void print_roots_table(const RootSystem& rs, std::ostream& os) {
    os << "# index  name  value  In  essential  V  Theta  polynomial\n";
    for (size_t i = 0; i < rs.roots().size(); ++i) {
        const auto& r = rs.roots()[i];
        os << i + 1 << "  " << rs.root_name(static_cast<int>(i)) << "  "
           << (r.value ? r.value->to_string() : "unknown") << "  "
           << rs.mono_string(r.in_monomial) << "  "
           << (rs.essential_at(static_cast<int>(i), rs.level()) ? "yes" : "no") << "  "
           << (r.in_V ? "yes" : "no") << "  "
           << (rs.in_theta_at(static_cast<int>(i), rs.level()) ? "yes" : "no") << "  "
           << r.poly.to_string();
        if (r.successor >= 0) os << "  -> " << rs.root_name(r.successor);
        os << "\n";
        std::ostringstream ex;
        bool first = true;
        for (const auto& [c, m] : r.expression) {
            if (!first) ex << " + ";
            first = false;
            std::string cs = c.to_string();
            if (cs == "1") ex << rs.mono_string(m);
            else ex << "(" << cs << ")*" << rs.mono_string(m);
        }
        os << "    expression: " << ex.str() << "\n";
    }
}

int run(int argc, char** argv) {
    CLI::App app{"exact curvette valuations, approximate roots and blowup data"};
    app.require_subcommand(1);
    app.fallthrough(); // global flags are accepted after the subcommand
    bool as_json = false;
    app.add_flag("--json", as_json, "machine-readable output");

    // ---- value
    auto* c_value = app.add_subcommand("value", "t-adic value of a polynomial at a curvette");
    std::string v_file, v_poly, v_trunc;
    c_value->add_option("--curvette", v_file, "session file")->required();
    c_value->add_option("--poly", v_poly, "polynomial expression")->required();
    c_value->add_option("--trunc", v_trunc, "truncation override");

    // ---- semigroup
    auto* c_semi = app.add_subcommand("semigroup", "enumerate a numerical semigroup");
    std::string s_gens;
    size_t s_count = 12;
    size_t s_nth = 0;
    c_semi->add_option("--gens", s_gens, "comma-separated positive generators")->required();
    c_semi->add_option("--count", s_count, "how many elements to list");
    c_semi->add_option("--nth", s_nth, "print only the n-th element (1-based)");

    // ---- roots
    auto* c_roots = app.add_subcommand("roots", "approximate roots up to a level");
    std::string r_file, r_level, r_trunc;
    c_roots->add_option("--curvette", r_file, "session file")->required();
    c_roots->add_option("--level", r_level, "value level")->required();
    c_roots->add_option("--trunc", r_trunc, "truncation override");

    // ---- roots2d
    auto* c_r2 = app.add_subcommand("roots2d", "dimension-2 root recursion");
    std::string r2_file, r2_trunc;
    int r2_max = 6;
    c_r2->add_option("--curvette", r2_file, "session file")->required();
    c_r2->add_option("--max", r2_max, "maximum number of confirmed roots");
    c_r2->add_option("--trunc", r2_trunc, "truncation override");

    // ---- standard-form
    auto* c_sf = app.add_subcommand("standard-form", "standard form of a polynomial");
    std::string sf_file, sf_poly, sf_level, sf_trunc;
    bool sf_steps = false;
    c_sf->add_option("--curvette", sf_file, "session file")->required();
    c_sf->add_option("--poly", sf_poly, "polynomial expression")->required();
    c_sf->add_option("--level", sf_level, "standard-form level")->required();
    c_sf->add_option("--trunc", sf_trunc, "truncation override");
    c_sf->add_flag("--show-steps", sf_steps, "print each rewrite");

    // ---- sep-ideal
    auto* c_sep = app.add_subcommand("sep-ideal", "separating ideal of two curvette points");
    std::string sp_alpha, sp_beta, sp_exact, sp_trunc;
    bool sp_same = false;
    c_sep->add_option("--alpha", sp_alpha, "session file for the first point")->required();
    c_sep->add_option("--beta", sp_beta, "session file for the second point")->required();
    c_sep->add_option("--exact-params", sp_exact, "a,b: substitute exact parameter values");
    c_sep->add_option("--trunc", sp_trunc, "truncation override");
    c_sep->add_flag("--same-param", sp_same,
                    "treat the symbolic parameter as shared (identical points)");

    // ---- connected-set
    auto* c_cs = app.add_subcommand("connected-set", "description of the set C or C'");
    std::string cs_alpha, cs_beta, cs_exact, cs_variant = "C", cs_trunc;
    std::vector<std::string> cs_polys;
    c_cs->add_option("--alpha", cs_alpha, "session file for the first point")->required();
    c_cs->add_option("--beta", cs_beta, "session file for the second point")->required();
    c_cs->add_option("--poly", cs_polys, "input polynomial (repeatable)")->required();
    c_cs->add_option("--variant", cs_variant, "C or Cprime");
    c_cs->add_option("--exact-params", cs_exact, "a,b: substitute exact parameter values");
    c_cs->add_option("--trunc", cs_trunc, "truncation override");

    // ---- blowup
    auto* c_bl = app.add_subcommand("blowup", "resolution sequence of a curvette pair");
    std::string bl_alpha, bl_beta, bl_exact, bl_trunc;
    std::vector<std::string> bl_pair;
    int bl_steps = 12;
    bool bl_table = false;
    c_bl->add_option("--pair", bl_pair, "the two session files")->expected(2);
    c_bl->add_option("--alpha", bl_alpha, "session file for the first point");
    c_bl->add_option("--beta", bl_beta, "session file for the second point");
    c_bl->add_option("--max-steps", bl_steps, "step budget");
    c_bl->add_option("--exact-params", bl_exact, "a,b: substitute exact parameter values");
    c_bl->add_option("--trunc", bl_trunc, "truncation override");
    c_bl->add_flag("--chart-table", bl_table,
                   "locate each dimension-2 root as a chart coordinate");

    // ---- dual-graph
    auto* c_dg = app.add_subcommand("dual-graph", "signed dual graph rewriting from a script");
    std::string dg_script;
    bool dg_dot = false;
    c_dg->add_option("--script", dg_script, "event script file")->required();
    c_dg->add_flag("--dot", dg_dot, "emit graphviz after the final event");

    // ---- walkthrough
    auto* c_wt = app.add_subcommand("walkthrough", "run the bundled end-to-end example");
    std::string wt_trunc;
    c_wt->add_option("--trunc", wt_trunc, "truncation override");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2; // usage errors exit 2
    }
    std::ostream& os = std::cout;

    if (*c_value) {
        SessionConfig cfg = load_with_trunc(v_file, v_trunc);
        Poly f = parse_poly_expr(v_poly, cfg.vars);
        SeriesOrder o = nu_value(cfg.curvette, f);
        if (as_json) {
            json j;
            j["poly"] = f.to_string();
            j["value"] = o.known() ? json(o.value->to_string()) : json(nullptr);
            j["status"] = o.known() ? "finite" : "zero-to-truncation";
            os << j.dump(2) << "\n";
        } else {
            os << "value(" << f.to_string() << ") = " << o.to_string() << "\n";
        }
        return 0;
    }

    if (*c_semi) {
        std::vector<Rat> gens;
        std::stringstream ss(s_gens);
        std::string tok;
        while (std::getline(ss, tok, ',')) gens.push_back(Rat::from_string(tok));
        Semigroup sg(gens);
        if (s_nth > 0) {
            Rat v = sg.nth(s_nth);
            if (as_json) {
                json j;
                j["nth"] = s_nth;
                j["element"] = v.to_string();
                os << j.dump(2) << "\n";
            } else {
                os << "element " << s_nth << " = " << v.to_string() << "\n";
            }
            return 0;
        }
        auto elems = sg.enumerate(s_count);
        if (as_json) {
            json j = json::array();
            for (const auto& e : elems) j.push_back(e.to_string());
            os << j.dump(2) << "\n";
        } else {
            for (size_t i = 0; i < elems.size(); ++i)
                os << i + 1 << ": " << elems[i].to_string() << "\n";
        }
        return 0;
    }

    if (*c_roots) {
        SessionConfig cfg = load_with_trunc(r_file, r_trunc);
        Rat level = Rat::from_string(r_level);
        Preparation prep = prepare_coordinates(cfg.curvette, level);
        RootSystem rs = roots_up_to(prep.curvette, level);
        if (as_json) {
            json j;
            j["level"] = level.to_string();
            j["preparation_steps"] = prep.steps.size();
            j["roots"] = json::array();
            for (size_t i = 0; i < rs.roots().size(); ++i)
                j["roots"].push_back(root_json(rs, static_cast<int>(i)));
            os << j.dump(2) << "\n";
        } else {
            if (!prep.steps.empty())
                os << "# coordinates prepared with " << prep.steps.size() << " substitution(s)\n";
            print_roots_table(rs, os);
        }
        return 0;
    }

    if (*c_r2) {
        SessionConfig cfg = load_with_trunc(r2_file, r2_trunc);
        Preparation prep = prepare_coordinates(cfg.curvette, cfg.truncation / Rat(2));
        RootSystem rs = roots_2d(prep.curvette, r2_max);
        if (as_json) {
            json j;
            j["stop"] = rs.stop_reason();
            j["roots"] = json::array();
            for (size_t i = 0; i < rs.roots().size(); ++i) {
                json r = root_json(rs, static_cast<int>(i));
                auto it = rs.alpha_data().find(static_cast<int>(i));
                if (it != rs.alpha_data().end()) {
                    r["alpha_prime"] = it->second.alpha_prime;
                    r["alpha"] = it->second.alpha;
                }
                j["roots"].push_back(std::move(r));
            }
            os << j.dump(2) << "\n";
        } else {
            print_roots_table(rs, os);
            os << "stop: " << (rs.stop_reason().empty() ? "done" : rs.stop_reason()) << "\n";
            for (const auto& [i, a] : rs.alpha_data())
                os << "alpha(" << rs.root_name(i) << "): smallest multiple " << a.alpha_prime
                   << ", exponent " << a.alpha << "\n";
        }
        return 0;
    }

    if (*c_sf) {
        SessionConfig cfg = load_with_trunc(sf_file, sf_trunc);
        Rat level = Rat::from_string(sf_level);
        Poly f = parse_poly_expr(sf_poly, cfg.vars);
        Preparation prep = prepare_coordinates(cfg.curvette, level);
        RootSystem rs = roots_up_to(prep.curvette, level);
        std::vector<RewriteStep> log;
        StandardForm sf = standard_form(f, level, rs, sf_steps ? &log : nullptr);
        auto term_json = [&](const std::pair<RatFn, RootMono>& t) {
            json j;
            j["coeff"] = t.first.to_string();
            j["monomial"] = rs.mono_string(t.second);
            j["value"] = rs.mono_value(t.second).to_string();
            return j;
        };
        if (as_json) {
            json j;
            j["level"] = level.to_string();
            j["settled"] = json::array();
            for (const auto& t : sf.settled) j["settled"].push_back(term_json(t));
            j["tail"] = json::array();
            for (const auto& t : sf.tail) j["tail"].push_back(term_json(t));
            if (sf_steps) {
                j["steps"] = json::array();
                for (const auto& st : log) {
                    json sj;
                    sj["rule"] = st.rule;
                    sj["slice_value"] = st.slice_value.to_string();
                    sj["rewrite"] = st.rendered;
                    j["steps"].push_back(std::move(sj));
                }
            }
            os << j.dump(2) << "\n";
        } else {
            os << "standard form of level " << level.to_string() << ":\n";
            for (const auto& t : sf.settled)
                os << "  settled  (" << t.first.to_string() << ") * "
                   << rs.mono_string(t.second) << "   value "
                   << rs.mono_value(t.second).to_string() << "\n";
            for (const auto& t : sf.tail)
                os << "  tail     (" << t.first.to_string() << ") * "
                   << rs.mono_string(t.second) << "   value "
                   << rs.mono_value(t.second).to_string() << "\n";
            if (sf_steps) {
                os << "rewrites:\n";
                for (const auto& st : log)
                    os << "  rule " << st.rule << " at value " << st.slice_value.to_string()
                       << ": " << st.rendered << "\n";
            }
        }
        return 0;
    }

    auto parse_exact = [](const std::string& s) {
        auto comma = s.find(',');
        if (comma == std::string::npos)
            throw math_error(errc::syntax_error, "--exact-params needs a,b");
        return std::pair<Rat, Rat>(Rat::from_string(s.substr(0, comma)),
                                   Rat::from_string(s.substr(comma + 1)));
    };

    if (*c_sep) {
        SessionConfig ca = load_with_trunc(sp_alpha, sp_trunc);
        SessionConfig cb = load_with_trunc(sp_beta, sp_trunc);
        Curvette a = ca.curvette, b = cb.curvette;
        bool distinct = !sp_same;
        if (!sp_exact.empty()) {
            auto [pa, pb] = parse_exact(sp_exact);
            a = a.specialized(pa);
            b = b.specialized(pb);
        }
        CurvettePair pair(a, b, distinct);
        SepResult s = separating_value(pair);
        json j;
        j["found"] = s.found;
        if (s.found) {
            j["value_alpha"] = s.value_alpha.to_string();
            j["value_beta"] = s.value_beta.to_string();
            j["level_index"] = s.level_index;
            j["kind"] = divergence_kind_name(s.kind);
            auto gens = separating_generators(pair, s);
            j["generators"] = json::array();
            for (const auto& m : gens) j["generators"].push_back(s.common.mono_string(m));
            try {
                Poly w = witness_sign_change(pair, s);
                j["witness"] = w.to_string();
            } catch (const math_error& e) {
                j["witness"] = nullptr;
                j["witness_note"] = e.what();
            }
        }
        if (as_json) {
            os << j.dump(2) << "\n";
        } else if (!s.found) {
            os << "no separating value within the truncation bound\n";
        } else {
            os << "separating value: " << s.value_alpha.to_string() << " (level index "
               << s.level_index << ", " << divergence_kind_name(s.kind) << ")\n";
            os << "generators:";
            for (const auto& g : j["generators"]) os << " " << g.get<std::string>();
            os << "\n";
            if (j.contains("witness") && !j["witness"].is_null())
                os << "witness: " << j["witness"].get<std::string>() << "\n";
            else
                os << "witness: none (" << j.value("witness_note", "") << ")\n";
        }
        return 0;
    }

    if (*c_cs) {
        SessionConfig ca = load_with_trunc(cs_alpha, cs_trunc);
        SessionConfig cb = load_with_trunc(cs_beta, cs_trunc);
        Curvette a = ca.curvette, b = cb.curvette;
        if (!cs_exact.empty()) {
            auto [pa, pb] = parse_exact(cs_exact);
            a = a.specialized(pa);
            b = b.specialized(pb);
        }
        CurvettePair pair(a, b, true);
        SepResult s = separating_value(pair);
        if (!s.found)
            throw math_error(errc::invariant_violation,
                             "no separating value within the truncation bound");
        std::vector<Poly> fs;
        for (const auto& e : cs_polys) fs.push_back(parse_poly_expr(e, ca.vars));
        auto variant = cs_variant == "Cprime" ? ConnectedSetDesc::Variant::CPrime
                                              : ConnectedSetDesc::Variant::C;
        ConnectedSetDesc d = connected_set(pair, s, fs, variant);
        json j;
        j["variant"] = cs_variant;
        j["level"] = s.value_alpha.to_string();
        j["inputs"] = json::array();
        for (const auto& in : d.inputs) {
            json ji;
            ji["poly"] = in.f.to_string();
            ji["head_value"] = in.head_value.to_string();
            ji["heads"] = json::array();
            for (const auto& [c, m] : in.heads) ji["heads"].push_back(d.common.mono_string(m));
            ji["tails"] = json::array();
            for (const auto& [c, m] : in.tails) ji["tails"].push_back(d.common.mono_string(m));
            ji["head_sum_sign"] = in.head_sum_sign;
            json signs = json::object();
            for (const auto& [r, sg] : in.head_root_signs)
                signs[d.common.root_name(r)] = sg;
            ji["head_root_signs"] = std::move(signs);
            j["inputs"].push_back(std::move(ji));
        }
        j["member_alpha"] = membership(d, pair.alpha);
        j["member_beta"] = membership(d, pair.beta);
        if (as_json) {
            os << j.dump(2) << "\n";
        } else {
            os << "set description (variant " << cs_variant << ", level "
               << s.value_alpha.to_string() << ")\n";
            for (const auto& ji : j["inputs"]) {
                os << "  input " << ji["poly"].get<std::string>() << "  value "
                   << ji["head_value"].get<std::string>() << "\n    heads:";
                for (const auto& h : ji["heads"]) os << " " << h.get<std::string>();
                os << "\n    tails:";
                for (const auto& t : ji["tails"]) os << " " << t.get<std::string>();
                os << "\n    head-sum sign " << ji["head_sum_sign"].get<int>() << "\n";
            }
            os << "membership: alpha=" << (j["member_alpha"].get<bool>() ? "yes" : "no")
               << " beta=" << (j["member_beta"].get<bool>() ? "yes" : "no") << "\n";
        }
        return 0;
    }

    if (*c_bl) {
        if (bl_pair.size() == 2) {
            bl_alpha = bl_pair[0];
            bl_beta = bl_pair[1];
        }
        if (bl_alpha.empty() || bl_beta.empty())
            throw math_error(errc::syntax_error,
                             "blowup needs --pair A B or --alpha/--beta");
        SessionConfig ca = load_with_trunc(bl_alpha, bl_trunc);
        SessionConfig cb = load_with_trunc(bl_beta, bl_trunc);
        Curvette a = ca.curvette, b = cb.curvette;
        bool distinct = true;
        if (!bl_exact.empty()) {
            auto [pa, pb] = parse_exact(bl_exact);
            a = a.specialized(pa);
            b = b.specialized(pb);
        } else if (a.same_point_as(b)) {
            distinct = false;
        }
        CurvettePair pair(a, b, distinct);
        Resolution res = resolve_pair(pair, bl_steps);
        const char* status = res.status == Resolution::Status::Resolved ? "resolved"
                             : res.status == Resolution::Status::MaxSteps ? "max-steps"
                                                                          : "branch-divergence";
        json j;
        j["status"] = status;
        j["steps"] = json::array();
        for (size_t i = 0; i < res.steps.size(); ++i) {
            const auto& st = res.steps[i];
            json js;
            js["index"] = i;
            if (i > 0) {
                const auto& h = st.chart.history.back();
                js["branch"] = h.branch_yx ? "y/x" : "x/y";
                js["center_residue"] = h.c0.to_string();
            }
            js["separating_value"] =
                st.sep.found ? json(st.sep.value_alpha.to_string()) : json(nullptr);
            js["kind"] = divergence_kind_name(st.sep.kind);
            js["ideal_multiplicity"] = st.ideal_multiplicity;
            j["steps"].push_back(std::move(js));
        }
        if (bl_table) {
            Preparation prep = prepare_coordinates(a, ca.truncation / Rat(2));
            RootSystem r2 = roots_2d(prep.curvette, 5);
            std::vector<Chart> charts;
            for (const auto& st : res.steps) charts.push_back(st.chart);
            j["chart_table"] = json::array();
            for (const auto& row : chart_data(r2, charts)) {
                json jr;
                jr["root"] = r2.root_name(row.root);
                jr["chart"] = row.chart_index;
                jr["strict"] = row.strict.to_string();
                jr["complement"] =
                    row.complement ? json(r2.mono_string(*row.complement)) : json(nullptr);
                jr["earlier_roots_monomial_units"] = row.earlier_monomial_units;
                if (!row.note.empty()) jr["note"] = row.note;
                j["chart_table"].push_back(std::move(jr));
            }
        }
        if (as_json) {
            os << j.dump(2) << "\n";
        } else {
            os << "status: " << status << "\n";
            for (const auto& js : j["steps"]) {
                os << "step " << js["index"].get<size_t>();
                if (js.contains("branch"))
                    os << " [" << js["branch"].get<std::string>() << ", residue "
                       << js["center_residue"].get<std::string>() << "]";
                os << ": separating value "
                   << (js["separating_value"].is_null()
                           ? std::string("none")
                           : js["separating_value"].get<std::string>())
                   << " (" << js["kind"].get<std::string>() << "), ideal multiplicity "
                   << js["ideal_multiplicity"].get<long>() << "\n";
            }
            if (bl_table)
                for (const auto& jr : j["chart_table"]) {
                    os << "root " << jr["root"].get<std::string>() << ": chart "
                       << jr["chart"].get<int>() << ", strict transform "
                       << jr["strict"].get<std::string>() << ", complement "
                       << (jr["complement"].is_null() ? std::string("-")
                                                      : jr["complement"].get<std::string>())
                       << (jr.contains("note") ? "  (" + jr["note"].get<std::string>() + ")"
                                               : "")
                       << "\n";
                }
        }
        return 0;
    }

    if (*c_dg) {
        std::ifstream in(dg_script);
        if (!in) throw math_error(errc::syntax_error, "cannot open script " + dg_script);
        SignedDualGraph g;
        bool initialized = false;
        std::string line;
        size_t lineno = 0;
        json jlog = json::array();
        while (std::getline(in, line)) {
            ++lineno;
            std::string s = line.substr(0, line.find('#'));
            std::istringstream ls(s);
            std::string cmd;
            if (!(ls >> cmd)) continue;
            if (cmd == "init") {
                std::string w;
                ls >> w;
                if (w != "U" && w != "V")
                    throw math_error(errc::syntax_error,
                                     "line " + std::to_string(lineno) + ": init needs U or V");
                g = init_graph(w[0]);
                initialized = true;
            } else if (!initialized) {
                throw math_error(errc::syntax_error, "script must start with init");
            } else if (cmd == "split") {
                int va, vb;
                ls >> va >> vb;
                g = apply_event(g, BlowupEvent::split_edge(va, vb));
            } else if (cmd == "bamboo") {
                int va, om;
                ls >> va >> om;
                g = apply_event(g, BlowupEvent::bamboo(va, om));
            } else if (cmd == "seed-u") {
                g = apply_event(g, BlowupEvent::first_step_u());
            } else if (cmd == "extend") {
                int va;
                ls >> va;
                g = apply_event(g, BlowupEvent::extend(va));
            } else {
                throw math_error(errc::syntax_error,
                                 "line " + std::to_string(lineno) + ": unknown event " + cmd);
            }
            if (as_json) {
                json js;
                js["generation"] = g.generation();
                js["vertices"] = json::array();
                for (const auto& [id, sg] : g.vertices()) {
                    json jv;
                    jv["id"] = id;
                    jv["sign"] = sg;
                    js["vertices"].push_back(std::move(jv));
                }
                js["edges"] = json::array();
                for (const auto& [ea, eb] : g.edges())
                    js["edges"].push_back(json::array({ea, eb}));
                js["bamboo"] = is_bamboo(g);
                jlog.push_back(std::move(js));
            } else {
                os << g.to_string();
                os << "bamboo: " << (is_bamboo(g) ? "yes" : "no") << "\n";
            }
        }
        if (as_json) os << jlog.dump(2) << "\n";
        if (dg_dot) os << g.to_dot();
        return 0;
    }

    if (*c_wt) {
        std::optional<Rat> trunc;
        if (!wt_trunc.empty()) trunc = Rat::from_string(wt_trunc);
        WalkthroughReport rep = run_walkthrough(trunc);
        if (as_json) {
            json j = json::array();
            for (const auto& c : rep.checks) {
                json jc;
                jc["name"] = c.name;
                jc["expected"] = c.expected;
                jc["actual"] = c.actual;
                jc["pass"] = c.pass;
                j.push_back(std::move(jc));
            }
            os << j.dump(2) << "\n";
        } else {
            for (const auto& c : rep.checks)
                os << (c.pass ? "PASS" : "FAIL") << "  " << c.name
                   << (c.pass ? "" : "  expected [" + c.expected + "] got [" + c.actual + "]")
                   << "\n";
        }
        return rep.all_pass() ? 0 : 1;
    }

    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const math_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
