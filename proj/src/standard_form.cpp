#include "curvette/standard_form.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace curvette {

namespace {

constexpr size_t kStepBudget = 1000000;

// Non-variable roots of Psi(level) u Theta(level).
std::vector<int> psi_theta_roots(const RootSystem& rs, const Rat& level) {
    std::vector<int> out;
    for (size_t i = 0; i < rs.roots().size(); ++i) {
        int r = static_cast<int>(i);
        if (rs.roots()[i].is_variable) continue;
        bool in_psi = rs.in_lambda_at(r, level) && rs.essential_at(r, level);
        if (in_psi || rs.in_theta_at(r, level)) out.push_back(r);
    }
    return out;
}

struct TermMap {
    // Terms keyed by monomial; the root system supplies the order.
    explicit TermMap(const RootSystem& rs)
        : terms([&rs](const RootMono& a, const RootMono& b) { return rs.mono_less(a, b); }) {}

    void add(const RootMono& m, const RatFn& c) {
        if (c.is_zero()) return;
        auto it = terms.find(m);
        if (it == terms.end()) {
            terms.emplace(m, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms.erase(it);
        }
    }

    std::map<RootMono, RatFn, std::function<bool(const RootMono&, const RootMono&)>> terms;
};

RootMono mono_quotient(const RootMono& m, const RootMono& d) {
    RootMono q = m;
    for (const auto& [r, e] : d) {
        q[r] -= e;
        if (q[r] == 0) q.erase(r);
        else if (q[r] < 0)
            throw math_error(errc::invariant_violation, "monomial quotient underflow");
    }
    return q;
}

} // namespace

bool is_standard(const RootMono& m, const RootSystem& rs, const Rat& level) {
    for (const auto& [r, e] : m) {
        const auto& rec = rs.roots()[static_cast<size_t>(r)];
        if (rec.is_variable) continue;
        if (!rs.in_v_at(r, level)) return false;
    }
    for (int r : psi_theta_roots(rs, level)) {
        const auto& in = rs.roots()[static_cast<size_t>(r)].in_monomial;
        if (mono_divides(in, m)) return false;
    }
    // Variables outside V(level) also break standardness.
    for (const auto& [r, e] : m) {
        const auto& rec = rs.roots()[static_cast<size_t>(r)];
        if (rec.is_variable && !rs.in_v_at(r, level)) return false;
    }
    return true;
}

StandardForm standard_form(const Poly& f, const Rat& level, const RootSystem& rs,
                           std::vector<RewriteStep>* log) {
    if (level > rs.level())
        throw math_error(errc::level_insufficient,
                         "root system only reaches level " + rs.level().to_string());
    if (f.vars() != rs.curvette().vars())
        throw math_error(errc::arity_mismatch, "polynomial over different variables");

    TermMap work(rs);
    for (const auto& [e, c] : f.terms()) {
        RootMono m;
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i] > 0) m[static_cast<int>(i)] = e[i];
        work.add(m, c);
    }

    StandardForm out;
    out.level = level;

    auto slice_min_value = [&]() -> std::optional<Rat> {
        std::optional<Rat> best;
        for (const auto& [m, c] : work.terms) {
            Rat v = rs.mono_value(m);
            if (!best || v < *best) best = v;
        }
        return best;
    };

    size_t steps = 0;
    std::vector<int> candidates = psi_theta_roots(rs, level);
    for (;;) {
        auto v = slice_min_value();
        if (!v || *v >= level) break;
        // Rewrite the value-v slice until every monomial in it is standard.
        for (;;) {
            // First (in monomial order) non-standard monomial of value v.
            const RootMono* target = nullptr;
            RatFn coeff;
            for (const auto& [m, c] : work.terms) {
                if (rs.mono_value(m) != *v) continue;
                if (!is_standard(m, rs, level)) {
                    target = &m;
                    coeff = c;
                    break;
                }
            }
            if (!target) break;
            if (++steps > kStepBudget)
                throw math_error(errc::non_terminating_guard,
                                 "standard-form step budget exceeded");
            RootMono m = *target;

            // Rule 1: some In(Q) divides the monomial; take the candidate of
            // least value so the walk visits every chain member.
            int rule1 = -1;
            for (int r : candidates) {
                const auto& rec = rs.roots()[static_cast<size_t>(r)];
                if (!mono_divides(rec.in_monomial, m)) continue;
                if (rule1 < 0) { rule1 = r; continue; }
                const auto& best = rs.roots()[static_cast<size_t>(rule1)];
                if (rec.value && best.value && *rec.value < *best.value) rule1 = r;
            }
            if (rule1 >= 0) {
                const auto& rec = rs.roots()[static_cast<size_t>(rule1)];
                RootMono q = mono_quotient(m, rec.in_monomial);
                work.add(m, -coeff);
                work.add(mono_mul(q, RootMono{{rule1, 1}}), coeff);
                for (size_t k = 1; k < rec.expression.size(); ++k)
                    work.add(mono_mul(q, rec.expression[k].second),
                             -(coeff * rec.expression[k].first));
                if (log)
                    log->push_back(RewriteStep{1, *v, m, rule1,
                                               rs.mono_string(m) + " -> via " +
                                                   rs.root_name(rule1)});
                continue;
            }

            // Rule 2: a root outside V(level) appears; replace it through its
            // recorded successor.
            int rule2 = -1;
            for (const auto& [r, e] : m)
                if (!rs.roots()[static_cast<size_t>(r)].is_variable && !rs.in_v_at(r, level)) {
                    rule2 = r;
                    break;
                }
            if (rule2 < 0 || rs.roots()[static_cast<size_t>(rule2)].successor < 0)
                throw math_error(errc::non_terminating_guard,
                                 "no applicable rewrite for " + rs.mono_string(m));
            const auto& rec = rs.roots()[static_cast<size_t>(rule2)];
            RootMono q = mono_quotient(m, RootMono{{rule2, 1}});
            work.add(m, -coeff);
            work.add(mono_mul(q, RootMono{{rec.successor, 1}}), coeff);
            for (const auto& [ck, mk] : rec.successor_tail)
                work.add(mono_mul(q, mk), coeff * ck);
            if (log)
                log->push_back(RewriteStep{2, *v, m, rule2,
                                           rs.mono_string(m) + " -> via successor " +
                                               rs.root_name(rec.successor)});
        }
        // Move the settled slice out.
        for (auto it = work.terms.begin(); it != work.terms.end();) {
            if (rs.mono_value(it->first) == *v) {
                out.settled.push_back({it->second, it->first});
                it = work.terms.erase(it);
            } else {
                ++it;
            }
        }
    }
    for (const auto& [m, c] : work.terms) out.tail.push_back({c, m});
    // settled was collected slice by slice in increasing value; inside each
    // slice the map order is the monomial order.
    return out;
}

Poly expand_monomials(const std::vector<std::pair<RatFn, RootMono>>& terms,
                      const RootSystem& rs) {
    Poly p(rs.curvette().vars());
    for (const auto& [c, m] : terms) p = p + rs.mono_poly(m).scaled(c);
    return p;
}

Rat value_via_standard_form(const Poly& f, const RootSystem& rs) {
    StandardForm sf = standard_form(f, rs.level(), rs);
    std::optional<Rat> best;
    for (const auto& [c, m] : sf.settled) {
        Rat v = rs.mono_value(m);
        if (!best || v < *best) best = v;
    }
    if (best) return *best;
    if (sf.tail.empty())
        throw math_error(errc::value_unknown, "zero polynomial has no finite value");
    throw math_error(errc::level_insufficient,
                     "value of the input is not below the system level " +
                         rs.level().to_string());
}

std::vector<RootMono> nu_ideal_generators(const Rat& gamma, const RootSystem& rs, bool pruned) {
    if (gamma > rs.level())
        throw math_error(errc::level_insufficient,
                         "root system only reaches level " + rs.level().to_string());
    // Monomials are taken over Psi at the system's top level, plus Theta at
    // the top level when gamma is the top level itself. Variables always
    // participate.
    std::vector<int> roots;
    std::vector<Rat> values;
    const Rat& top = rs.level();
    for (size_t i = 0; i < rs.roots().size(); ++i) {
        int r = static_cast<int>(i);
        const auto& rec = rs.roots()[i];
        if (!rec.value) continue;
        bool in_psi = rec.is_variable ||
                      (rs.in_lambda_at(r, top) && rs.essential_at(r, top));
        bool in_theta_top = gamma == top && rs.in_theta_at(r, top);
        if (in_psi || in_theta_top) {
            roots.push_back(r);
            values.push_back(*rec.value);
        }
    }

    Rat max_value(0);
    for (const auto& v : values)
        if (v > max_value) max_value = v;

    std::vector<RootMono> out;
    // DFS over exponents; a useful generator has value < gamma + value(root)
    // for each of its support roots, so per-root exponents are small.
    std::vector<int> exps(roots.size(), 0);
    std::function<void(size_t, Rat)> rec = [&](size_t i, Rat acc) {
        if (acc >= gamma + max_value + Rat(1)) return;
        if (i == roots.size()) {
            if (acc < gamma) return;
            RootMono m;
            for (size_t k = 0; k < roots.size(); ++k)
                if (exps[k] > 0) m[roots[k]] = exps[k];
            if (m.empty()) return;
            if (pruned) {
                for (const auto& [r, e] : m) {
                    Rat reduced = acc - *rs.roots()[static_cast<size_t>(r)].value;
                    if (reduced >= gamma) return; // removable factor: not minimal
                }
            } else {
                if (acc >= gamma + max_value) return; // bounded redundant slice
            }
            out.push_back(std::move(m));
            return;
        }
        for (int e = 0;; ++e) {
            exps[i] = e;
            Rat next = acc + values[i] * Rat(e);
            if (e > 0 && next >= gamma + max_value + Rat(1)) break;
            rec(i + 1, next);
            if (values[i].is_zero()) break;
        }
        exps[i] = 0;
    };
    rec(0, Rat(0));

    std::sort(out.begin(), out.end(),
              [&](const RootMono& a, const RootMono& b) { return rs.mono_less(a, b); });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    if (pruned) {
        // Keep a monomial only if no kept generator divides it. A pure root
        // singleton is also redundant when every monomial of the root's
        // expression is divisible by a kept generator (the root then already
        // lies in the ideal the kept generators span).
        std::vector<RootMono> kept;
        auto covered = [&](const RootMono& m) {
            for (const auto& k : kept)
                if (mono_divides(k, m)) return true;
            return false;
        };
        for (const auto& m : out) {
            if (covered(m)) continue;
            if (m.size() == 1 && m.begin()->second == 1 &&
                !rs.roots()[static_cast<size_t>(m.begin()->first)].is_variable) {
                const auto& rec = rs.roots()[static_cast<size_t>(m.begin()->first)];
                bool redundant = !rec.expression.empty();
                for (const auto& [cc, mm] : rec.expression)
                    if (!covered(mm)) { redundant = false; break; }
                if (redundant) continue;
            }
            kept.push_back(m);
        }
        out = std::move(kept);
    }
    return out;
}

std::vector<KernelDegreeReport> relations_kernel_check(const RootSystem& rs, const Rat& level) {
    std::vector<KernelDegreeReport> reports;

    // Generators of the relation ideal: least-value parts of the expressions
    // of non-variable roots, written over the X variables (= V roots).
    struct Gen {
        Rat degree;
        std::vector<std::pair<RatFn, RootMono>> terms;
    };
    std::vector<Gen> gens;
    for (const auto& rec : rs.roots()) {
        if (rec.is_variable || rec.expression.empty()) continue;
        Rat d = rs.mono_value(rec.expression.front().second);
        std::vector<std::pair<RatFn, RootMono>> part;
        for (const auto& [c, m] : rec.expression)
            if (rs.mono_value(m) == d) part.push_back({c, m});
        if (part.size() >= 2) gens.push_back(Gen{d, std::move(part)});
    }

    for (const auto& lev : rs.levels()) {
        if (!(lev.gamma < level)) continue;
        KernelDegreeReport rep;
        rep.degree = lev.gamma;

        // X-monomials of this degree over the V roots (no exclusion filter).
        std::vector<int> vroots;
        std::vector<Rat> vvals;
        for (size_t i = 0; i < rs.roots().size(); ++i)
            if (rs.in_v_at(static_cast<int>(i), lev.gamma)) {
                vroots.push_back(static_cast<int>(i));
                vvals.push_back(*rs.roots()[i].value);
            }
        std::vector<RootMono> xmonos;
        std::vector<int> exps(vroots.size(), 0);
        std::function<void(size_t, Rat)> recur = [&](size_t i, Rat remaining) {
            if (remaining.is_zero()) {
                RootMono m;
                for (size_t k = 0; k < vroots.size(); ++k)
                    if (exps[k] > 0) m[vroots[k]] = exps[k];
                if (!m.empty()) xmonos.push_back(std::move(m));
                return;
            }
            if (i >= vroots.size() || remaining < Rat(0)) return;
            for (int e = 0; Rat(e) * vvals[i] <= remaining; ++e) {
                exps[i] = e;
                recur(i + 1, remaining - vvals[i] * Rat(e));
            }
            exps[i] = 0;
        };
        recur(0, lev.gamma);
        std::sort(xmonos.begin(), xmonos.end(),
                  [&](const RootMono& a, const RootMono& b) { return rs.mono_less(a, b); });
        rep.monomial_count = xmonos.size();
        rep.kernel_dim = xmonos.empty() ? 0 : xmonos.size() - 1;

        // Degree slice of the relation ideal: X^delta * g.
        std::map<RootMono, size_t> index;
        for (size_t i = 0; i < xmonos.size(); ++i) index[xmonos[i]] = i;
        std::vector<std::vector<RatFn>> rows;
        for (const auto& g : gens) {
            if (g.degree > lev.gamma) continue;
            Rat rem = lev.gamma - g.degree;
            // All multiplier monomials of degree rem over the V roots
            // (including the empty one when rem == 0).
            std::vector<RootMono> mult;
            std::vector<int> ex2(vroots.size(), 0);
            std::function<void(size_t, Rat)> rec2 = [&](size_t i, Rat remaining) {
                if (remaining.is_zero()) {
                    RootMono m;
                    for (size_t k = 0; k < vroots.size(); ++k)
                        if (ex2[k] > 0) m[vroots[k]] = ex2[k];
                    mult.push_back(std::move(m));
                    return;
                }
                if (i >= vroots.size() || remaining < Rat(0)) return;
                for (int e = 0; Rat(e) * vvals[i] <= remaining; ++e) {
                    ex2[i] = e;
                    rec2(i + 1, remaining - vvals[i] * Rat(e));
                }
                ex2[i] = 0;
            };
            rec2(0, rem);
            for (const auto& d : mult) {
                std::vector<RatFn> row(xmonos.size());
                bool in_range = true;
                for (const auto& [c, m] : g.terms) {
                    RootMono prod = mono_mul(d, m);
                    auto it = index.find(prod);
                    if (it == index.end()) { in_range = false; break; }
                    row[it->second] += c;
                }
                if (in_range) rows.push_back(std::move(row));
            }
        }

        // Rank by Gaussian elimination over the coefficient field.
        size_t rank = 0;
        for (size_t col = 0; col < xmonos.size() && rank < rows.size(); ++col) {
            size_t pivot = rows.size();
            for (size_t r = rank; r < rows.size(); ++r)
                if (!rows[r][col].is_zero()) { pivot = r; break; }
            if (pivot == rows.size()) continue;
            std::swap(rows[rank], rows[pivot]);
            RatFn inv = rows[rank][col].inverse();
            for (auto& x : rows[rank]) x *= inv;
            for (size_t r = 0; r < rows.size(); ++r) {
                if (r == rank || rows[r][col].is_zero()) continue;
                RatFn f = rows[r][col];
                for (size_t cc = 0; cc < xmonos.size(); ++cc)
                    rows[r][cc] -= f * rows[rank][cc];
            }
            ++rank;
        }
        rep.ideal_dim = rank;
        rep.pass = rep.ideal_dim == rep.kernel_dim;
        reports.push_back(std::move(rep));
    }
    return reports;
}

} // namespace curvette
