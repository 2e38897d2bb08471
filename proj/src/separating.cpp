#include "curvette/separating.hpp"

#include <algorithm>

namespace curvette {

CurvettePair::CurvettePair(Curvette a, Curvette b, bool distinct)
    : alpha(std::move(a)), beta(std::move(b)), distinct_params(distinct) {
    if (alpha.vars() != beta.vars())
        throw math_error(errc::arity_mismatch, "pair must share one variable list");
}

const char* divergence_kind_name(DivergenceKind k) {
    switch (k) {
        case DivergenceKind::None: return "none";
        case DivergenceKind::MonomialSetMismatch: return "monomial-set-mismatch";
        case DivergenceKind::SignOrderMismatch: return "sign-order-mismatch";
    }
    return "none";
}

namespace {

// Sign multiplier contributed by t^gamma when t is negative.
int t_sign_factor(const Curvette& c, const Rat& gamma) {
    if (c.t_sign() > 0) return 1;
    mpz_class den = gamma.den();
    if (mpz_even_p(den.get_mpz_t()))
        throw math_error(errc::invariant_violation,
                         "sign of t^" + gamma.to_string() + " with negative t is undefined");
    mpz_class num = gamma.num();
    return mpz_odd_p(num.get_mpz_t()) ? -1 : 1;
}

// Positive proportionality of the two lead vectors, quantified over all
// admissible parameter values. For identical points it holds trivially.
bool leads_positively_proportional(const std::vector<RatFn>& m, const std::vector<RatFn>& n,
                                   const ParamAssumption& pa, const ParamAssumption& pb,
                                   bool identical_point) {
    if (m.size() != n.size())
        throw math_error(errc::invariant_violation, "lead vectors of different lengths");
    if (identical_point) return true;
    if (m.empty()) return true;
    const RatFn& ms = m.back();
    const RatFn& ns = n.back();
    for (size_t i = 0; i + 1 < m.size(); ++i) {
        RatFn rm = m[i] / ms;
        RatFn rn = n[i] / ns;
        if (!rm.is_constant() || !rn.is_constant()) return false;
        if (!(rm == rn)) return false;
    }
    int sa = sign_under(ms, pa);
    int sb = sign_under(ns, pb);
    if (sa == 0 || sb == 0)
        throw math_error(errc::invariant_violation, "level lead vanished identically");
    return sa == sb;
}

struct Walk {
    SepResult result;
    RootBuilder a;
    RootBuilder b;
    Rat bound;
};

Walk walk_pair(const CurvettePair& p, std::optional<Rat> bound_opt) {
    Rat ta = p.alpha.truncation();
    Rat tb = p.beta.truncation();
    Rat bound = bound_opt ? *bound_opt : (ta < tb ? ta : tb) / Rat(2);

    // Prepare alpha and replay the same substitutions on beta so both points
    // are read in one coordinate system.
    Preparation prep = prepare_coordinates(p.alpha, bound);
    Curvette beta_prepared = replay_preparation(p.beta, prep.steps);

    bool identical = !p.distinct_params && p.alpha.same_point_as(p.beta);

    Walk w{SepResult{}, RootBuilder(prep.curvette), RootBuilder(beta_prepared), bound};
    SepResult& res = w.result;

    size_t index = 0;
    for (;;) {
        auto ga = w.a.next_level(bound);
        auto gb = w.b.next_level(bound);
        if (!ga && !gb) break; // no divergence within the bound
        ++index;
        if (!ga || !gb || *ga != *gb) {
            res.found = true;
            res.level_index = index;
            res.kind = DivergenceKind::MonomialSetMismatch;
            res.value_alpha = ga ? *ga : *gb;
            res.value_beta = gb ? *gb : *ga;
            break;
        }
        LevelRecord la = w.a.probe(*ga);
        LevelRecord lb = w.b.probe(*gb);

        auto monos = [](const LevelRecord& l) {
            std::vector<RootMono> v;
            for (const auto& lm : l.monomials) v.push_back(lm.mono);
            return v;
        };
        if (monos(la) != monos(lb)) {
            res.found = true;
            res.level_index = index;
            res.kind = DivergenceKind::MonomialSetMismatch;
            res.value_alpha = *ga;
            res.value_beta = *gb;
            break;
        }

        std::vector<RatFn> ml, nl;
        int fa = t_sign_factor(p.alpha, *ga);
        int fb = t_sign_factor(p.beta, *gb);
        for (const auto& lm : la.monomials)
            ml.push_back(fa < 0 ? -lm.lead : lm.lead);
        for (const auto& lm : lb.monomials)
            nl.push_back(fb < 0 ? -lm.lead : lm.lead);

        if (!leads_positively_proportional(ml, nl, p.alpha.param(), p.beta.param(),
                                           identical)) {
            res.found = true;
            res.level_index = index;
            res.kind = DivergenceKind::SignOrderMismatch;
            res.value_alpha = *ga;
            res.value_beta = *gb;
            for (const auto& lm : la.monomials) res.monomials.push_back(lm.mono);
            res.alpha_leads = std::move(ml);
            res.beta_leads = std::move(nl);
            break;
        }

        w.a.process(*ga);
        w.b.process(*gb);
    }
    return w;
}

} // namespace

SepResult separating_value(const CurvettePair& p, std::optional<Rat> bound) {
    Walk w = walk_pair(p, bound);
    SepResult res = std::move(w.result);
    std::optional<Rat> lvl;
    if (res.found) lvl = res.value_alpha;
    res.common = w.a.snapshot(lvl);
    res.beta_view = w.b.snapshot(res.found ? std::optional<Rat>(res.value_beta)
                                           : std::nullopt);
    return res;
}

RootSystem common_roots(const CurvettePair& p, const Rat& bound) {
    Walk w = walk_pair(p, bound);
    // The prefix is everything built strictly before the divergence.
    return w.a.snapshot(w.result.found ? std::optional<Rat>(w.result.value_alpha)
                                       : std::optional<Rat>(bound));
}

std::vector<RootMono> separating_generators(const CurvettePair& p, const SepResult& s,
                                            bool pruned) {
    (void)p;
    if (!s.found) return {};
    return nu_ideal_generators(s.value_alpha, s.common, pruned);
}

Poly witness_sign_change(const CurvettePair& p, const SepResult& s) {
    if (!s.found)
        throw math_error(errc::not_found_within_budget, "no separating value was found");
    const auto& rs = s.common;

    auto verify = [&](const Poly& f) {
        return sign_at(p.alpha, f) == +1 && sign_at(p.beta, f) == -1;
    };

    if (s.kind == DivergenceKind::SignOrderMismatch) {
        const auto& m = s.alpha_leads;
        const auto& n = s.beta_leads;
        // Exact lead vectors: solve a 2x2 sign system on a non-proportional
        // coordinate pair. Symbolic leads have no single rational witness.
        for (const auto& c : m)
            if (!c.is_constant())
                throw math_error(errc::not_found_within_budget,
                                 "symbolic parameters admit no single rational witness; "
                                 "specialize the parameter values");
        for (const auto& c : n)
            if (!c.is_constant())
                throw math_error(errc::not_found_within_budget,
                                 "symbolic parameters admit no single rational witness; "
                                 "specialize the parameter values");
        size_t sz = m.size();
        for (size_t i = 0; i < sz; ++i) {
            for (size_t j = i + 1; j < sz; ++j) {
                Rat mi = m[i].constant_value(), mj = m[j].constant_value();
                Rat ni = n[i].constant_value(), nj = n[j].constant_value();
                Rat det = mi * nj - mj * ni;
                if (det.is_zero()) continue;
                // lambda_i m_i + lambda_j m_j = 1; lambda_i n_i + lambda_j n_j = -1
                Rat li = (nj + mj) / det;
                Rat lj = (-mi - ni) / det;
                Poly f = rs.mono_poly(s.monomials[i]).scaled(RatFn(li)) +
                         rs.mono_poly(s.monomials[j]).scaled(RatFn(lj));
                if (verify(f)) return f;
            }
        }
        // Anti-proportional case: one monomial already changes sign.
        for (size_t i = 0; i < sz; ++i) {
            Rat mi = m[i].constant_value(), ni = n[i].constant_value();
            if (mi.sign() != 0 && ni.sign() != 0 && mi.sign() != ni.sign()) {
                Poly f = rs.mono_poly(s.monomials[i]).scaled(RatFn(Rat(mi.sign())));
                if (verify(f)) return f;
            }
        }
        throw math_error(errc::not_found_within_budget,
                         "no rational witness found for the sign divergence");
    }

    // Monomial-set mismatch: combine a monomial seen only on one side with
    // one of the other side's monomials of that level.
    LevelRecord la, lb;
    {
        // Recompute the divergence level monomials for both points.
        Walk w = walk_pair(p, std::nullopt);
        if (!w.result.found)
            throw math_error(errc::not_found_within_budget, "divergence did not reproduce");
        la = w.a.probe(w.result.value_alpha);
        lb = w.b.probe(w.result.value_beta);
    }
    // A monomial seen on one side only, combined with one of the other
    // side's monomials; both directions are tried, the second with the
    // overall sign flipped.
    for (int dir = 0; dir < 2; ++dir) {
        const auto& mine = dir == 0 ? la.monomials : lb.monomials;
        const auto& other = dir == 0 ? lb.monomials : la.monomials;
        const Curvette& first = dir == 0 ? p.alpha : p.beta;
        const Curvette& second = dir == 0 ? p.beta : p.alpha;
        for (const auto& ga : mine) {
            bool shared = false;
            for (const auto& gb : other)
                if (gb.mono == ga.mono) { shared = true; break; }
            if (shared) continue;
            for (const auto& gb : other) {
                Poly pa_mono = s.common.mono_poly(ga.mono);
                Poly pb_mono = s.common.mono_poly(gb.mono);
                // This side's sign is decided by its own monomial, the other
                // side's by the shared one; scale until both dominate.
                int sa = sign_at(first, pa_mono);
                int sb = sign_at(second, pb_mono);
                if (sa == 0 || sb == 0) continue;
                for (long t : {1L, 2L, 8L, 64L, 4096L}) {
                    Poly f = pa_mono.scaled(RatFn(Rat(sa * t))) -
                             pb_mono.scaled(RatFn(Rat(sb)));
                    if (dir == 1) f = -f;
                    if (verify(f)) return f;
                }
            }
        }
    }
    throw math_error(errc::not_found_within_budget,
                     "no rational witness found for the monomial-set divergence");
}

ConnectedSetDesc connected_set(const CurvettePair& p, const SepResult& s,
                               const std::vector<Poly>& fs,
                               ConnectedSetDesc::Variant variant) {
    if (!s.found)
        throw math_error(errc::invariant_violation,
                         "connected-set description needs a separating value");
    ConnectedSetDesc d;
    d.variant = variant;
    d.common = s.common;
    for (const auto& f : fs) {
        StandardForm sf = standard_form(f, s.value_alpha, s.common);
        if (sf.settled.empty())
            throw math_error(errc::f_in_separating_ideal,
                             "input lies in the separating ideal: " + f.to_string());
        ConnectedSetDesc::PerInput in;
        in.f = f;
        in.head_value = s.common.mono_value(sf.settled.front().second);
        for (const auto& [c, m] : sf.settled) {
            Rat v = s.common.mono_value(m);
            if (v < in.head_value) in.head_value = v;
        }
        for (const auto& [c, m] : sf.settled) {
            if (s.common.mono_value(m) == in.head_value) in.heads.push_back({c, m});
            else in.tails.push_back({c, m});
        }
        for (const auto& [c, m] : sf.tail) in.tails.push_back({c, m});

        Poly head_sum = expand_monomials(in.heads, s.common);
        in.head_sum_sign = sign_at(p.alpha, head_sum);
        if (in.head_sum_sign == 0)
            throw math_error(errc::invariant_violation, "head sum vanishes at the first point");
        for (const auto& [c, m] : in.heads)
            for (const auto& [r, e] : m)
                if (!in.head_root_signs.count(r))
                    in.head_root_signs[r] =
                        sign_at(p.alpha, s.common.roots()[static_cast<size_t>(r)].poly);
        d.inputs.push_back(std::move(in));
    }
    return d;
}

bool membership(const ConnectedSetDesc& d, const Curvette& delta) {
    const RootSystem& rs = d.common;
    // Values of the roots at delta, computed once.
    std::map<int, Rat> root_values;
    auto value_of = [&](const RootMono& m) {
        Rat v(0);
        for (const auto& [r, e] : m) {
            auto it = root_values.find(r);
            if (it == root_values.end()) {
                SeriesOrder o = nu_value(delta, rs.roots()[static_cast<size_t>(r)].poly);
                if (!o.known())
                    throw math_error(errc::value_unknown,
                                     "root value unknown at the tested point");
                it = root_values.emplace(r, *o.value).first;
            }
            v += it->second * Rat(e);
        }
        return v;
    };

    for (const auto& in : d.inputs) {
        // Sign conditions shared by both variants.
        for (const auto& [r, sg] : in.head_root_signs)
            if (sign_at(delta, rs.roots()[static_cast<size_t>(r)].poly) != sg) return false;
        Poly head_sum = expand_monomials(in.heads, rs);
        if (sign_at(delta, head_sum) != in.head_sum_sign) return false;

        if (d.variant == ConnectedSetDesc::Variant::C) {
            for (const auto& [ch, mh] : in.heads) {
                Rat vh = value_of(mh);
                for (const auto& [ct, mt] : in.tails)
                    if (!(vh < value_of(mt))) return false;
            }
        } else {
            // |head sum| > n_i |tail monomial| for every tail monomial.
            TruncSeries hs = series_substitute(head_sum, delta.series());
            if (!hs.has_terms())
                throw math_error(errc::value_unknown, "head sum unknown at the tested point");
            Rat n_i(static_cast<long>(in.tails.size()));
            for (const auto& [ct, mt] : in.tails) {
                TruncSeries td = series_substitute(rs.mono_poly(mt), delta.series());
                if (!td.has_terms())
                    throw math_error(errc::value_unknown,
                                     "tail monomial unknown at the tested point");
                const Rat& oh = hs.lead_exp();
                const Rat& ot = td.lead_exp();
                if (oh < ot) continue;
                if (oh > ot) return false;
                RatFn diff = hs.lead() * hs.lead() -
                             td.lead() * td.lead() * RatFn(n_i * n_i);
                if (sign_under(diff, delta.param()) <= 0) return false;
            }
        }
    }
    return true;
}

} // namespace curvette
