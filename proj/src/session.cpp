#include "curvette/session.hpp"

#include <fstream>
#include <sstream>

#include "curvette/expr.hpp"

namespace curvette {

void SessionConfig::require_level(const Rat& level) const {
    if (level * Rat(2) > truncation)
        throw math_error(errc::invariant_violation,
                         "truncation must be at least twice the requested level; "
                         "needed " +
                             (level * Rat(2)).to_string() + ", have " +
                             truncation.to_string());
}

namespace {

[[noreturn]] void fail(size_t line, const std::string& msg) {
    throw math_error(errc::syntax_error, "line " + std::to_string(line) + ": " + msg);
}

std::vector<std::string> split_ws(const std::string& s) {
    std::istringstream is(s);
    std::vector<std::string> out;
    std::string w;
    while (is >> w) out.push_back(w);
    return out;
}

Rat parse_rat(const std::string& s, size_t line) {
    try {
        return Rat::from_string(s);
    } catch (const math_error&) {
        fail(line, "bad rational '" + s + "'");
    }
}

} // namespace

SessionConfig parse_session(const std::string& text) {
    SessionConfig cfg;
    std::map<std::string, std::string> assignments; // var -> expression text
    std::map<std::string, size_t> assignment_lines;
    bool have_vars = false;

    std::istringstream is(text);
    std::string raw;
    size_t lineno = 0;
    while (std::getline(is, raw)) {
        ++lineno;
        std::string linetext = raw.substr(0, raw.find('#'));
        auto first = linetext.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        linetext = linetext.substr(first);

        auto eq = linetext.find('=');
        auto words = split_ws(linetext);
        if (words.empty()) continue;

        if (words[0] == "vars") {
            if (have_vars) fail(lineno, "duplicate vars line");
            if (words.size() < 2) fail(lineno, "vars needs at least one name");
            for (size_t i = 1; i < words.size(); ++i) {
                if (words[i] == "u" || words[i] == "t")
                    fail(lineno, "'" + words[i] + "' is reserved");
                for (const auto& v : cfg.vars)
                    if (v == words[i]) fail(lineno, "duplicate variable " + words[i]);
                cfg.vars.push_back(words[i]);
            }
            have_vars = true;
            continue;
        }
        if (words[0] == "trunc" || words[0] == "truncation") {
            if (words.size() != 2) fail(lineno, "trunc needs one value");
            cfg.truncation = parse_rat(words[1], lineno);
            if (!(cfg.truncation > Rat(1))) fail(lineno, "truncation must exceed 1");
            continue;
        }
        if (words[0] == "tsign") {
            if (words.size() != 2 || (words[1] != "+" && words[1] != "-"))
                fail(lineno, "tsign needs + or -");
            cfg.t_sign = words[1] == "+" ? +1 : -1;
            continue;
        }
        if (words[0] == "assume") {
            // forms: u > q | u < q | u = q | q < u < q'
            if (words.size() == 4 && words[1] == "u") {
                Rat q = parse_rat(words[3], lineno);
                if (words[2] == ">")
                    cfg.assumption = ParamAssumption::interval(q, std::nullopt);
                else if (words[2] == "<")
                    cfg.assumption = ParamAssumption::interval(std::nullopt, q);
                else if (words[2] == "=")
                    cfg.assumption = ParamAssumption::exact(q);
                else
                    fail(lineno, "assume needs <, > or =");
            } else if (words.size() == 6 && words[2] == "<" && words[3] == "u" &&
                       words[4] == "<") {
                Rat lo = parse_rat(words[1], lineno);
                Rat hi = parse_rat(words[5], lineno);
                if (!(lo < hi)) fail(lineno, "empty interval");
                cfg.assumption = ParamAssumption::interval(lo, hi);
            } else {
                fail(lineno, "assume forms: 'u > q', 'u < q', 'u = q', 'q < u < q'");
            }
            continue;
        }
        if (eq != std::string::npos) {
            std::string lhs = linetext.substr(0, eq);
            std::string rhs = linetext.substr(eq + 1);
            auto lw = split_ws(lhs);
            if (lw.size() != 1) fail(lineno, "assignment needs one variable on the left");
            assignments[lw[0]] = rhs;
            assignment_lines[lw[0]] = lineno;
            continue;
        }
        fail(lineno, "unrecognized directive '" + words[0] + "'");
    }

    if (!have_vars) throw math_error(errc::syntax_error, "missing vars line");
    std::vector<TruncSeries> series;
    for (const auto& v : cfg.vars) {
        auto it = assignments.find(v);
        if (it == assignments.end())
            throw math_error(errc::unknown_variable, "variable " + v + " has no assignment");
        try {
            series.push_back(parse_series_expr(it->second, cfg.truncation));
        } catch (const math_error& e) {
            if (e.code() == errc::syntax_error || e.code() == errc::unknown_variable)
                fail(assignment_lines[v], std::string(e.what()));
            throw;
        }
    }
    for (const auto& [v, expr] : assignments) {
        bool known = false;
        for (const auto& w : cfg.vars) known = known || w == v;
        if (!known)
            throw math_error(errc::unknown_variable, "assignment to undeclared variable " + v);
    }
    try {
        cfg.curvette = Curvette(cfg.vars, std::move(series), cfg.assumption, cfg.t_sign);
    } catch (const math_error& e) {
        throw math_error(errc::invariant_violation, e.what());
    }
    return cfg;
}

SessionConfig load_session(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw math_error(errc::syntax_error, "cannot open session file " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_session(buf.str());
}

} // namespace curvette
