#include "curvette/blowup.hpp"

namespace curvette {

namespace {

// Substitution images of one step: branch y/x sends (x, y) -> (x, x(y'+c0)).
std::vector<Poly> step_images(const std::vector<std::string>& vars, const SubstRecord& s) {
    Poly X = Poly::variable(vars, 0);
    Poly Y = Poly::variable(vars, 1);
    if (s.branch_yx)
        return {X, X * (Y + Poly::constant(vars, s.c0))};
    return {Y * (X + Poly::constant(vars, s.c0)), Y};
}

// Extract the maximal power of variable `vi` from f.
long extract_variable(Poly& f, size_t vi) {
    if (f.is_zero()) return 0;
    int m = -1;
    for (const auto& [e, c] : f.terms())
        m = m < 0 ? e[vi] : std::min(m, e[vi]);
    if (m <= 0) return 0;
    Poly out(f.vars());
    for (const auto& [e, c] : f.terms()) {
        Exps r = e;
        r[vi] -= m;
        out.add_term(r, c);
    }
    f = out;
    return m;
}

} // namespace

Poly Chart::total_transform(const Poly& f) const {
    Poly g = f;
    for (const auto& s : history) g = g.substitute(step_images(vars, s));
    return g;
}

BlowupStep local_blowup(const Chart& ch, const Curvette& c) {
    if (c.vars().size() != 2)
        throw math_error(errc::arity_mismatch, "blowups act on two-variable charts");
    const TruncSeries& sx = c.series_of(0);
    const TruncSeries& sy = c.series_of(1);
    if (!sx.has_terms() && !sy.has_terms())
        throw math_error(errc::center_equals_point,
                         "curvette coincides with the blown-up point");

    auto ord = [](const TruncSeries& s) -> std::optional<Rat> {
        return s.has_terms() ? std::optional<Rat>(s.terms().begin()->first) : std::nullopt;
    };
    auto ox = ord(sx), oy = ord(sy);
    bool yx = !oy || (ox && *oy >= *ox); // nu(y) >= nu(x): branch y/x

    SubstRecord rec;
    rec.branch_yx = yx;
    const TruncSeries& num = yx ? sy : sx;
    const TruncSeries& den = yx ? sx : sy;
    TruncSeries quot = num.has_terms() ? TruncSeries::divide(num, den)
                                       : TruncSeries::zero(num.bound());
    RatFn c0;
    if (quot.has_terms() && quot.terms().begin()->first.is_zero())
        c0 = quot.terms().begin()->second;
    rec.c0 = c0;
    TruncSeries shifted = quot - TruncSeries::term(c0, Rat(0), std::nullopt);

    BlowupStep out;
    out.chart = ch;
    out.chart.history.push_back(rec);
    std::vector<TruncSeries> ns = yx ? std::vector<TruncSeries>{sx, shifted}
                                     : std::vector<TruncSeries>{shifted, sy};
    out.curvette = Curvette(c.vars(), std::move(ns), c.param(), c.t_sign());
    return out;
}

TransformResult strict_transform_poly(const Chart& ch, const Poly& f) {
    if (f.is_zero())
        throw math_error(errc::invariant_violation, "strict transform of zero");
    if (ch.history.empty())
        return TransformResult{f, 0};
    const SubstRecord& s = ch.history.back();
    Poly g = f.substitute(step_images(ch.vars, s));
    TransformResult r;
    long m = extract_variable(g, s.branch_yx ? 0 : 1);
    r.strict = std::move(g);
    r.exceptional_multiplicity = m;
    return r;
}

TransformResult strict_transform_total(const Chart& ch, const Poly& f) {
    TransformResult acc{f, 0};
    Chart partial;
    partial.vars = ch.vars;
    for (const auto& s : ch.history) {
        partial.history = {s};
        TransformResult step = strict_transform_poly(partial, acc.strict);
        acc.strict = std::move(step.strict);
        acc.exceptional_multiplicity += step.exceptional_multiplicity;
    }
    return acc;
}

Curvette strict_transform_curvette(const Curvette& delta) {
    Chart ch;
    ch.vars = delta.vars();
    return local_blowup(ch, delta).curvette;
}

Resolution resolve_pair(const CurvettePair& p, int max_steps) {
    Resolution out;
    Chart ch;
    ch.vars = p.alpha.vars();
    CurvettePair cur = p;

    for (int step = 0;; ++step) {
        bool identical = !cur.distinct_params && cur.alpha.same_point_as(cur.beta);
        ResolutionStep rec{ch, cur, identical ? SepResult{} : separating_value(cur), 0};
        if (rec.sep.found) {
            auto gens = separating_generators(cur, rec.sep);
            std::optional<long> a;
            for (const auto& m : gens) {
                Poly g = rec.sep.common.mono_poly(m);
                auto o = g.order_at_origin();
                if (o && (!a || *o < *a)) a = o;
            }
            rec.ideal_multiplicity = a.value_or(0);
        }
        bool resolved = false;
        if (rec.sep.found) {
            // Terminal condition: the transformed separating value equals the
            // value of the maximal ideal, i.e. min(nu(x'), nu(y')).
            auto oa = nu_value(cur.alpha, Poly::variable(ch.vars, 0));
            auto ob = nu_value(cur.alpha, Poly::variable(ch.vars, 1));
            std::optional<Rat> m_value;
            if (oa.known()) m_value = oa.value;
            if (ob.known() && (!m_value || *ob.value < *m_value)) m_value = ob.value;
            resolved = m_value && rec.sep.value_alpha == *m_value;
        }
        out.steps.push_back(std::move(rec));
        if (resolved) {
            out.status = Resolution::Status::Resolved;
            return out;
        }
        if (step >= max_steps) {
            out.status = Resolution::Status::MaxSteps;
            return out;
        }

        BlowupStep ba = local_blowup(ch, cur.alpha);
        BlowupStep bb = local_blowup(ch, cur.beta);
        const SubstRecord& ra = ba.chart.history.back();
        const SubstRecord& rb = bb.chart.history.back();
        if (ra.branch_yx != rb.branch_yx || !(ra.c0 == rb.c0)) {
            out.status = Resolution::Status::BranchDivergence;
            return out;
        }
        ch = ba.chart;
        cur = CurvettePair(ba.curvette, bb.curvette, cur.distinct_params);
    }
}

std::vector<Chart> blowup_charts(const Curvette& c, int steps) {
    std::vector<Chart> charts;
    Chart ch;
    ch.vars = c.vars();
    charts.push_back(ch);
    Curvette cur = c;
    for (int i = 0; i < steps; ++i) {
        if (!cur.series_of(0).has_terms() && !cur.series_of(1).has_terms()) break;
        BlowupStep st = local_blowup(ch, cur);
        ch = st.chart;
        cur = st.curvette;
        charts.push_back(ch);
    }
    return charts;
}

std::vector<ChartDataRow> chart_data(const RootSystem& rs2d,
                                     const std::vector<Chart>& charts) {
    std::vector<ChartDataRow> rows;
    const auto& seq = rs2d.essential_sequence();
    size_t start = 0; // the chart indices increase strictly along the roots
    for (size_t pos = 0; pos < seq.size(); ++pos) {
        int root = seq[pos];
        const Poly& q = rs2d.roots()[static_cast<size_t>(root)].poly;
        ChartDataRow row;
        row.root = root;

        for (size_t si = start; si < charts.size(); ++si) {
            const Chart& ch = charts[si];
            TransformResult tr = strict_transform_total(ch, q);
            auto o = tr.strict.order_at_origin();
            if (!o || *o != 1) continue;
            row.chart_index = static_cast<int>(si) + 1;
            row.strict = tr.strict;

            // Search a small exponent box for a complementary monomial in the
            // earlier roots whose transform is a regular parameter.
            std::vector<int> earlier(seq.begin(), seq.begin() + static_cast<long>(pos));
            std::vector<int> exps(earlier.size(), 0);
            bool found = false;
            std::function<void(size_t)> search = [&](size_t i) {
                if (found) return;
                if (i == earlier.size()) {
                    RootMono m;
                    long total = 0;
                    for (size_t k = 0; k < earlier.size(); ++k) {
                        if (exps[k] > 0) m[earlier[k]] = exps[k];
                        total += exps[k];
                    }
                    if (total == 0) return;
                    // The monomial itself, read in the chart coordinates,
                    // must be a regular parameter transverse to the strict
                    // transform: order 1 and independent linear parts.
                    Poly full = ch.total_transform(rs2d.mono_poly(m));
                    auto of = full.order_at_origin();
                    if (!of || *of != 1) return;
                    auto linear = [&](const Poly& g, size_t vi) {
                        Exps e(2, 0);
                        e[vi] = 1;
                        auto it = g.terms().find(e);
                        return it == g.terms().end() ? RatFn() : it->second;
                    };
                    RatFn a0 = linear(full, 0), a1 = linear(full, 1);
                    RatFn b0 = linear(tr.strict, 0), b1 = linear(tr.strict, 1);
                    if ((a0 * b1 - a1 * b0).is_zero()) return;
                    row.complement = m;
                    found = true;
                } else {
                    for (int e = 0; e <= 4 && !found; ++e) {
                        exps[i] = e;
                        search(i + 1);
                    }
                    exps[i] = 0;
                }
            };
            search(0);

            // Property check: every earlier root is monomial x unit here.
            std::vector<Poly> earlier_polys;
            for (int r : earlier)
                earlier_polys.push_back(rs2d.roots()[static_cast<size_t>(r)].poly);
            row.earlier_monomial_units =
                earlier_polys.empty() || is_locally_monomial(ch, earlier_polys);
            if (!found)
                row.note = pos == 0 ? "first root: the other coordinate completes the system"
                                    : "no complementary monomial within the search box";
            break;
        }
        if (row.chart_index < 0)
            row.note = "strict transform never became a parameter within the sequence";
        else
            start = static_cast<size_t>(row.chart_index); // next root looks later
        rows.push_back(std::move(row));
    }
    return rows;
}

bool is_locally_monomial(const Chart& ch, const std::vector<Poly>& gs) {
    for (const auto& g : gs) {
        if (g.is_zero()) return false;
        Poly t = ch.total_transform(g);
        extract_variable(t, 0);
        extract_variable(t, 1);
        // Unit at the origin: nonzero constant term.
        Exps zero(2, 0);
        auto it = t.terms().find(zero);
        if (it == t.terms().end()) return false;
    }
    return true;
}

} // namespace curvette
