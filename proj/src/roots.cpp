#include "curvette/roots.hpp"

#include <algorithm>
#include <sstream>

namespace curvette {

bool mono_divides(const RootMono& a, const RootMono& b) {
    for (const auto& [r, e] : a) {
        auto it = b.find(r);
        if (it == b.end() || it->second < e) return false;
    }
    return true;
}

RootMono mono_mul(const RootMono& a, const RootMono& b) {
    RootMono r = a;
    for (const auto& [k, e] : b) r[k] += e;
    return r;
}

namespace {

// Rank of a root in the combined Lambda-then-Theta order.
std::pair<long, long> root_rank(const RootRecord& rec, int creation_index) {
    if (rec.in_lambda) return {0, rec.lambda_rank};
    return {1, creation_index};
}

bool mono_lex_less(const std::vector<RootRecord>& roots, const RootMono& a, const RootMono& b) {
    // Most significant root = smallest rank; larger exponent there wins.
    std::vector<std::pair<std::pair<long, long>, int>> keys;
    for (const auto& [r, e] : a) keys.push_back({root_rank(roots[r], r), r});
    for (const auto& [r, e] : b) keys.push_back({root_rank(roots[r], r), r});
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    for (const auto& [rank, r] : keys) {
        auto ia = a.find(r), ib = b.find(r);
        int ea = ia == a.end() ? 0 : ia->second;
        int eb = ib == b.end() ? 0 : ib->second;
        if (ea != eb) return ea < eb;
    }
    return false;
}

Rat mono_value_of(const std::vector<RootRecord>& roots, const RootMono& m) {
    Rat v(0);
    for (const auto& [r, e] : m) {
        if (!roots[r].value)
            throw math_error(errc::value_unknown,
                             "monomial uses a root of unknown value");
        v += *roots[r].value * Rat(e);
    }
    return v;
}

bool mono_order_less(const std::vector<RootRecord>& roots, const RootMono& a, const RootMono& b) {
    Rat va = mono_value_of(roots, a), vb = mono_value_of(roots, b);
    if (va != vb) return va < vb;
    return mono_lex_less(roots, a, b);
}

} // namespace

// ---------------------------------------------------------------------------
// RootSystem queries

std::vector<int> RootSystem::lambda_set() const {
    std::vector<int> v;
    for (size_t i = 0; i < roots_.size(); ++i)
        if (roots_[i].in_lambda) v.push_back(static_cast<int>(i));
    std::sort(v.begin(), v.end(), [&](int a, int b) {
        return roots_[static_cast<size_t>(a)].lambda_rank <
               roots_[static_cast<size_t>(b)].lambda_rank;
    });
    return v;
}

std::vector<int> RootSystem::psi_set() const {
    std::vector<int> v;
    for (int i : lambda_set())
        if (essential_at(i, level_)) v.push_back(i);
    return v;
}

std::vector<int> RootSystem::v_set() const {
    std::vector<int> v;
    for (int i : lambda_set())
        if (roots_[static_cast<size_t>(i)].in_V) v.push_back(i);
    return v;
}

std::vector<int> RootSystem::theta_set() const {
    std::vector<int> v;
    for (size_t i = 0; i < roots_.size(); ++i)
        if (in_theta_at(static_cast<int>(i), level_)) v.push_back(static_cast<int>(i));
    return v;
}

Rat RootSystem::mono_value(const RootMono& m) const { return mono_value_of(roots_, m); }

Poly RootSystem::mono_poly(const RootMono& m) const {
    Poly p = Poly::constant(curvette_.vars(), RatFn(1));
    for (const auto& [r, e] : m)
        p = p * roots_[static_cast<size_t>(r)].poly.pow(static_cast<unsigned>(e));
    return p;
}

TruncSeries RootSystem::mono_series(const RootMono& m) const {
    TruncSeries s = TruncSeries::term(RatFn(1), Rat(0), std::nullopt);
    for (const auto& [r, e] : m)
        s = s * roots_[static_cast<size_t>(r)].series.pow(static_cast<unsigned>(e));
    return s;
}

bool RootSystem::mono_less(const RootMono& a, const RootMono& b) const {
    return mono_order_less(roots_, a, b);
}

std::string RootSystem::root_name(int i) const {
    const auto& rec = roots_.at(static_cast<size_t>(i));
    if (rec.is_variable) return curvette_.vars()[static_cast<size_t>(i)];
    return "Q" + std::to_string(i + 1);
}

std::string RootSystem::mono_string(const RootMono& m) const {
    if (m.empty()) return "1";
    std::vector<std::pair<std::pair<long, long>, int>> keys;
    for (const auto& [r, e] : m)
        keys.push_back({root_rank(roots_[static_cast<size_t>(r)], r), r});
    std::sort(keys.begin(), keys.end());
    std::ostringstream os;
    bool first = true;
    for (const auto& [rank, r] : keys) {
        if (!first) os << "*";
        first = false;
        os << root_name(r);
        int e = m.at(r);
        if (e > 1) os << "^" << e;
    }
    return os.str();
}

bool RootSystem::in_lambda_at(int root, const Rat& gamma) const {
    const auto& rec = roots_.at(static_cast<size_t>(root));
    return rec.value && *rec.value < gamma && rec.in_lambda;
}

bool RootSystem::essential_at(int root, const Rat& gamma) const {
    const auto& rec = roots_.at(static_cast<size_t>(root));
    if (rec.successor < 0) return true;
    return !in_lambda_at(rec.successor, gamma);
}

bool RootSystem::in_v_at(int root, const Rat& gamma) const {
    return in_lambda_at(root, gamma) && roots_[static_cast<size_t>(root)].in_V;
}

bool RootSystem::in_theta_at(int root, const Rat& gamma) const {
    const auto& rec = roots_.at(static_cast<size_t>(root));
    if (!(rec.created_at <= gamma) && !rec.is_variable) return false;
    return !rec.value || *rec.value >= gamma;
}

Semigroup RootSystem::value_semigroup() const {
    std::vector<Rat> gens;
    for (int i : v_set()) gens.push_back(*roots_[static_cast<size_t>(i)].value);
    return Semigroup(std::move(gens));
}

// ---------------------------------------------------------------------------
// Preparation

namespace {

// All exponent vectors over `values` (indices into it) with weighted sum
// exactly `target`, exponents >= 0.
void enumerate_weighted(const std::vector<Rat>& values, size_t i, const Rat& target,
                        std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (target.is_zero()) {
        out.push_back(cur);
        // keep exploring: later entries must stay 0, which the loop below
        // does automatically only through the zero branch; cut here instead
        return;
    }
    if (i >= values.size() || target < Rat(0)) return;
    Rat rem = target;
    int e = 0;
    while (true) {
        cur[i] = e;
        enumerate_weighted(values, i + 1, rem, cur, out);
        rem -= values[i];
        ++e;
        if (rem < Rat(0)) break;
    }
    cur[i] = 0;
}

std::vector<std::vector<int>> weighted_solutions(const std::vector<Rat>& values,
                                                 const Rat& target) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(values.size(), 0);
    enumerate_weighted(values, 0, target, cur, out);
    return out;
}

// Power table over a series vector; preparation reuses powers across its
// subtraction steps instead of recomputing them.
class PowerCache {
public:
    explicit PowerCache(const std::vector<TruncSeries>& base) : base_(&base) {}
    const TruncSeries& get(size_t i, int e) {
        auto& v = pw_[i];
        if (v.empty()) v.push_back((*base_)[i]);
        while (static_cast<int>(v.size()) < e) v.push_back(v.back() * (*base_)[i]);
        return v[static_cast<size_t>(e) - 1];
    }
    void invalidate(size_t i) { pw_.erase(i); }

private:
    const std::vector<TruncSeries>* base_;
    std::map<size_t, std::vector<TruncSeries>> pw_;
};

TruncSeries substitute_cached(const Poly& f, const std::vector<TruncSeries>& series,
                              PowerCache& cache) {
    TruncSeries acc(std::nullopt);
    bool seeded = false;
    for (const auto& [e, c] : f.terms()) {
        TruncSeries term = TruncSeries::term(c, Rat(0), std::nullopt);
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i] > 0) term = term * cache.get(i, e[i]);
        acc = acc + term;
        seeded = true;
    }
    if (!seeded) {
        std::optional<Rat> b;
        for (const auto& s : series)
            if (s.bound() && (!b || *s.bound() < *b)) b = s.bound();
        return TruncSeries::zero(b);
    }
    return acc;
}

} // namespace

Preparation prepare_coordinates(const Curvette& c, const Rat& level_bound) {
    const auto& vars = c.vars();
    std::vector<TruncSeries> series = c.series();

    // Variables are prepared in nondecreasing value order; variables whose
    // series is zero up to the truncation come last and are left alone.
    std::vector<size_t> order(vars.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
        bool ha = series[a].has_terms(), hb = series[b].has_terms();
        if (ha != hb) return ha;
        if (!ha) return a < b;
        const Rat& oa = series[a].terms().begin()->first;
        const Rat& ob = series[b].terms().begin()->first;
        if (oa != ob) return oa < ob;
        return a < b;
    });

    std::vector<PrepStep> steps;
    PowerCache cache(series);
    for (size_t pos = 1; pos < order.size(); ++pos) {
        size_t j = order[pos];
        for (;;) {
            if (!series[j].has_terms()) break; // zero to truncation: stop here
            Rat vj = series[j].terms().begin()->first;
            if (vj > level_bound) break;

            // Lower-value variables with visible terms and their values.
            std::vector<size_t> idx;
            std::vector<Rat> vals;
            for (size_t q = 0; q < pos; ++q) {
                size_t i = order[q];
                if (series[i].has_terms()) {
                    idx.push_back(i);
                    vals.push_back(series[i].terms().begin()->first);
                }
            }
            auto sols = weighted_solutions(vals, vj);
            if (sols.empty()) break;

            // Deterministic pick: lexicographically smallest exponent vector
            // read over the variable order (most significant first).
            std::sort(sols.begin(), sols.end());
            const auto& e = sols.front();

            RatFn mono_lead(1);
            Poly mono = Poly::constant(vars, RatFn(1));
            for (size_t k = 0; k < idx.size(); ++k) {
                if (e[k] == 0) continue;
                mono_lead *= series[idx[k]].terms().begin()->second.pow(
                    static_cast<unsigned>(e[k]));
                mono = mono * Poly::variable(vars, idx[k]).pow(static_cast<unsigned>(e[k]));
            }
            RatFn coeff = series[j].terms().begin()->second / mono_lead;
            Poly f = mono.scaled(coeff);
            series[j] = series[j] - substitute_cached(f, series, cache);
            cache.invalidate(j);
            steps.push_back(PrepStep{j, f});
        }
    }
    return Preparation{Curvette(vars, std::move(series), c.param(), c.t_sign()),
                       std::move(steps)};
}

Curvette replay_preparation(const Curvette& c, const std::vector<PrepStep>& steps) {
    std::vector<TruncSeries> series = c.series();
    PowerCache cache(series);
    for (const auto& st : steps) {
        series[st.var_index] =
            series[st.var_index] - substitute_cached(st.subtracted, series, cache);
        cache.invalidate(st.var_index);
    }
    return Curvette(c.vars(), std::move(series), c.param(), c.t_sign());
}

// ---------------------------------------------------------------------------
// The level-by-level builder

RootBuilder::RootBuilder(Curvette prepared) : c_(std::move(prepared)) {
    const auto& vars = c_.vars();
    for (size_t i = 0; i < vars.size(); ++i) {
        RootRecord rec;
        rec.poly = Poly::variable(vars, i);
        rec.series = c_.series_of(i);
        if (rec.series.has_terms()) rec.value = rec.series.terms().begin()->first;
        RootMono self{{static_cast<int>(i), 1}};
        rec.expression = {{RatFn(1), self}};
        rec.in_monomial = self;
        rec.is_variable = true;
        rec.created_at = Rat(0);
        roots_.push_back(std::move(rec));
        theta_.push_back(static_cast<int>(i));
    }
}

std::optional<Rat> RootBuilder::next_level(const Rat& max_level) const {
    std::optional<Rat> best;
    if (!v_values_.empty()) {
        Semigroup sg(v_values_);
        auto n = sg.next_after(processed_);
        if (n && (!best || *n < *best)) best = n;
    }
    for (int r : theta_) {
        const auto& rec = roots_[static_cast<size_t>(r)];
        if (rec.value && *rec.value > processed_ && (!best || *rec.value < *best))
            best = rec.value;
    }
    if (best && *best > max_level) return std::nullopt;
    return best;
}

LevelRecord RootBuilder::probe(const Rat& gamma) const {
    RootBuilder copy = *this;
    return copy.process(gamma);
}

// Process one level; gamma must come from next_level.
const LevelRecord& RootBuilder::process(const Rat& gamma) {
    enter_lambda(gamma);

    LevelRecord rec;
    rec.gamma = gamma;

    // Qualifying generalized monomials over the current V roots.
    std::vector<Rat> vvals;
    for (int r : v_roots_) vvals.push_back(*roots_[static_cast<size_t>(r)].value);
    for (const auto& e : weighted_solutions(vvals, gamma)) {
        RootMono m;
        for (size_t k = 0; k < e.size(); ++k)
            if (e[k] > 0) m[v_roots_[k]] = e[k];
        if (m.empty()) continue;
        if (in_excluded(m)) continue;
        rec.monomials.push_back(LevelMonomial{std::move(m), RatFn(), -1});
    }
    for (int r : theta_) {
        const auto& rr = roots_[static_cast<size_t>(r)];
        if (rr.value && *rr.value == gamma)
            rec.monomials.push_back(LevelMonomial{RootMono{{r, 1}}, RatFn(), r});
    }
    std::sort(rec.monomials.begin(), rec.monomials.end(),
              [&](const LevelMonomial& a, const LevelMonomial& b) {
                  return mono_lex_less(roots_, a.mono, b.mono);
              });

    for (auto& lm : rec.monomials) {
        TruncSeries s = lm.theta_root >= 0 ? roots_[static_cast<size_t>(lm.theta_root)].series
                                           : mono_series(lm.mono);
        if (s.bound() && !(*s.bound() > gamma))
            throw math_error(errc::truncation_exceeded,
                             "monomial " + mono_string_b(lm.mono) +
                                 " is not reliable at value " + gamma.to_string());
        if (!s.has_terms() || s.terms().begin()->first != gamma)
            throw math_error(errc::invariant_violation,
                             "monomial " + mono_string_b(lm.mono) +
                                 " does not have the expected value");
        lm.lead = s.terms().begin()->second;
    }

    // Dependencies: every monomial except the last pairs with the last
    // (the graded piece is one-dimensional over the coefficient field).
    if (rec.monomials.size() >= 2) {
        size_t s = rec.monomials.size();
        for (size_t pivot = s - 1; pivot-- > 0;) {
            RatFn crel = rec.monomials[pivot].lead / rec.monomials[s - 1].lead;
            rec.relations.push_back({static_cast<int>(pivot), crel});
            int idx = create_root(rec.monomials[pivot], rec.monomials[s - 1], crel, gamma);
            rec.new_roots.push_back(idx);
        }
    }

    snapshot_sets(rec, gamma);
    processed_ = gamma;
    levels_.push_back(std::move(rec));
    return levels_.back();
}

RootSystem RootBuilder::snapshot(std::optional<Rat> level) const {
    if (level && *level > processed_) {
        // Classification is valid past the last processed value: pending
        // roots below the requested level still enter Lambda.
        RootBuilder ahead = *this;
        ahead.enter_lambda(*level);
        RootSystem rs;
        rs.curvette_ = ahead.c_;
        rs.roots_ = ahead.roots_;
        rs.levels_ = ahead.levels_;
        rs.level_ = *level;
        return rs;
    }
    RootSystem rs;
    rs.curvette_ = c_;
    rs.roots_ = roots_;
    rs.levels_ = levels_;
    rs.level_ = level ? *level : processed_;
    return rs;
}

void RootBuilder::enter_lambda(const Rat& gamma) {
    std::vector<int> entering;
    for (int r : theta_) {
        const auto& rec = roots_[static_cast<size_t>(r)];
        if (rec.value && *rec.value < gamma) entering.push_back(r);
    }
    std::sort(entering.begin(), entering.end(), [&](int a, int b) {
        const auto& ra = roots_[static_cast<size_t>(a)];
        const auto& rb = roots_[static_cast<size_t>(b)];
        if (*ra.value != *rb.value) return *ra.value < *rb.value;
        return a < b;
    });
    for (int r : entering) {
        auto& rec = roots_[static_cast<size_t>(r)];
        rec.in_lambda = true;
        rec.lambda_rank = static_cast<long>(lambda_order_.size());
        lambda_order_.push_back(r);
        bool in_v = v_values_.empty() ? true : !Semigroup(v_values_).contains(*rec.value);
        rec.in_V = in_v;
        if (in_v) {
            v_values_.push_back(*rec.value);
            v_roots_.push_back(r);
        }
        if (!rec.is_variable) in_monomials_.push_back(rec.in_monomial);
        theta_.erase(std::remove(theta_.begin(), theta_.end(), r), theta_.end());
    }
}

bool RootBuilder::in_excluded(const RootMono& m) const {
    for (const auto& in : in_monomials_)
        if (mono_divides(in, m)) return true;
    return false;
}

TruncSeries RootBuilder::mono_series(const RootMono& m) const {
    TruncSeries s = TruncSeries::term(RatFn(1), Rat(0), std::nullopt);
    for (const auto& [r, e] : m)
        s = s * roots_[static_cast<size_t>(r)].series.pow(static_cast<unsigned>(e));
    return s;
}

Poly RootBuilder::mono_poly(const RootMono& m) const {
    Poly p = Poly::constant(c_.vars(), RatFn(1));
    for (const auto& [r, e] : m)
        p = p * roots_[static_cast<size_t>(r)].poly.pow(static_cast<unsigned>(e));
    return p;
}

std::string RootBuilder::mono_string_b(const RootMono& m) const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [r, e] : m) {
        if (!first) os << "*";
        first = false;
        os << (roots_[static_cast<size_t>(r)].is_variable
                   ? c_.vars()[static_cast<size_t>(r)]
                   : "Q" + std::to_string(r + 1));
        if (e > 1) os << "^" << e;
    }
    return first ? "1" : os.str();
}

int RootBuilder::create_root(const LevelMonomial& pivot, const LevelMonomial& tail,
                             const RatFn& c, const Rat& gamma) {
    RootRecord rec;
    rec.poly = mono_poly(pivot.mono) - mono_poly(tail.mono).scaled(c);
    rec.series = (pivot.theta_root >= 0 ? roots_[static_cast<size_t>(pivot.theta_root)].series
                                        : mono_series(pivot.mono)) -
                 (tail.theta_root >= 0 ? roots_[static_cast<size_t>(tail.theta_root)].series
                                       : mono_series(tail.mono))
                     .scaled(c);
    auto ord = rec.series.order();
    if (ord.known()) {
        rec.value = ord.value;
        if (!(*rec.value > gamma))
            throw math_error(errc::invariant_violation, "lifted root does not raise the value");
    }
    int idx = static_cast<int>(roots_.size());
    if (pivot.theta_root >= 0) {
        auto& pred = roots_[static_cast<size_t>(pivot.theta_root)];
        rec.expression = pred.expression;
        rec.expression.push_back({-c, tail.mono});
        rec.in_monomial = pred.in_monomial;
        pred.successor = idx;
        pred.successor_tail = {{c, tail.mono}};
    } else {
        rec.expression = {{RatFn(1), pivot.mono}, {-c, tail.mono}};
        rec.in_monomial = pivot.mono;
    }
    rec.created_at = gamma;
    roots_.push_back(std::move(rec));
    theta_.push_back(idx);
    return idx;
}

void RootBuilder::snapshot_sets(LevelRecord& rec, const Rat& gamma) {
    for (int r : lambda_order_) {
        rec.lambda.push_back(r);
        const auto& rr = roots_[static_cast<size_t>(r)];
        bool essential =
            rr.successor < 0 || !roots_[static_cast<size_t>(rr.successor)].in_lambda;
        if (essential) rec.psi.push_back(r);
        if (rr.in_V) rec.v.push_back(r);
    }
    (void)gamma;
    rec.theta = theta_;
}

RootSystem roots_up_to(const Curvette& c, const Rat& level) {
    Rat trunc = c.truncation();
    if (level * Rat(2) > trunc)
        throw math_error(errc::truncation_exceeded,
                         "level " + level.to_string() + " exceeds the truncation-safe bound " +
                             (trunc / Rat(2)).to_string() + "; rerun with truncation >= " +
                             (level * Rat(2)).to_string());
    RootBuilder b(c);
    while (auto g = b.next_level(level)) {
        const LevelRecord& rec = b.process(*g);
        for (int idx : rec.new_roots) {
            const auto& rr = b.roots()[static_cast<size_t>(idx)];
            if (!rr.value)
                throw math_error(errc::truncation_exceeded,
                                 "value of lifted root at level " + rec.gamma.to_string() +
                                     " is zero up to the truncation; raise the truncation "
                                     "and retry");
        }
    }
    RootSystem rs = b.snapshot();
    rs.level_ = level;
    return rs;
}

// ---------------------------------------------------------------------------
// Dimension-2 recursion

namespace {

// Smallest positive integer a with a*beta in the group generated by gens.
long smallest_multiple_in_group(const Rat& beta, const std::vector<Rat>& gens) {
    Rat g(0);
    for (const auto& x : gens) g = rat_gcd(g, x);
    if (g.is_zero())
        throw math_error(errc::invariant_violation, "empty value group");
    Rat q = beta / g; // a*q must be an integer
    return mpz_class(q.den()).get_si();
}

} // namespace

RootSystem roots_2d(const Curvette& c, int max_roots) {
    if (c.vars().size() != 2)
        throw math_error(errc::arity_mismatch, "the dimension-2 recursion needs two variables");
    if (c.series_of(0).has_terms() && c.series_of(1).has_terms() &&
        c.series_of(0).terms().begin()->first > c.series_of(1).terms().begin()->first)
        throw math_error(errc::invariant_violation,
                         "the first variable must carry the smaller value");
    Rat trunc = c.truncation();
    Rat safe = trunc / Rat(2);

    RootSystem rs;
    rs.curvette_ = c;
    rs.level_ = Rat(0);

    auto push_variable = [&](size_t i) {
        RootRecord rec;
        rec.poly = Poly::variable(c.vars(), i);
        rec.series = c.series_of(i);
        if (rec.series.has_terms()) rec.value = rec.series.terms().begin()->first;
        RootMono self{{static_cast<int>(i), 1}};
        rec.expression = {{RatFn(1), self}};
        rec.in_monomial = self;
        rec.is_variable = true;
        rec.created_at = Rat(0);
        rec.in_lambda = true;
        rec.lambda_rank = static_cast<long>(i);
        rec.in_V = true;
        rs.roots_.push_back(std::move(rec));
    };
    push_variable(0);
    push_variable(1);

    // Confirmed approximate roots Q_1, ..., Q_{i-1} with their values and
    // alpha exponents (alpha_1 = 1 by convention). The working root is the
    // current chain candidate Q_i^{(j)}; Q_2 = y plays that role at first.
    rs.essential_sequence_ = {0, 1};
    rs.alpha_data_[0] = RootSystem::AlphaData{1, 1};
    std::vector<int> confirmed{0};
    std::vector<Rat> beta;
    std::vector<long> alpha{1};
    int working = 1;

    if (!rs.roots_[0].value || !rs.roots_[1].value) {
        rs.stop_reason_ = "value-unknown";
        return rs;
    }
    beta.push_back(*rs.roots_[0].value);

    for (;;) {
        if (static_cast<int>(rs.essential_sequence_.size()) >= max_roots) {
            rs.stop_reason_ = "max-roots";
            break;
        }
        const Rat beta_w = *rs.roots_[static_cast<size_t>(working)].value;
        long aprime = smallest_multiple_in_group(beta_w, beta);
        Rat rel_level = beta_w * Rat(aprime);
        if (rel_level > safe) {
            rs.stop_reason_ = "no-relation-within-truncation";
            break;
        }

        // Unique standard representation rel_level = sum gamma_r beta_r with
        // 0 <= gamma_r < alpha_r for r >= 2 (1-based) and gamma_1 >= 0.
        std::vector<int> gamma_rep;
        for (auto& s : weighted_solutions(beta, rel_level)) {
            bool ok = true;
            for (size_t r = 1; r < s.size(); ++r)
                if (s[r] >= static_cast<int>(alpha[r])) { ok = false; break; }
            if (ok) { gamma_rep = std::move(s); break; }
        }
        if (gamma_rep.empty() && !rel_level.is_zero())
            throw math_error(errc::invariant_violation,
                             "no standard representation for the relation level");

        RootMono mono;
        RatFn mono_lead(1);
        for (size_t r = 0; r < gamma_rep.size(); ++r) {
            if (gamma_rep[r] == 0) continue;
            int root_idx = confirmed[r];
            mono[root_idx] = gamma_rep[r];
            mono_lead *= rs.roots_[static_cast<size_t>(root_idx)]
                             .series.lead()
                             .pow(static_cast<unsigned>(gamma_rep[r]));
        }
        RatFn residue = rs.roots_[static_cast<size_t>(working)]
                            .series.lead()
                            .pow(static_cast<unsigned>(aprime)) /
                        mono_lead;

        // Lift: new = working^alpha' - residue * monomial (minimal-polynomial
        // degree d = 1: the residue is a ratio of leads, already in k).
        RootRecord rec;
        {
            const auto& w = rs.roots_[static_cast<size_t>(working)];
            rec.poly = w.poly.pow(static_cast<unsigned>(aprime)) -
                       rs.mono_poly(mono).scaled(residue);
            rec.series = w.series.pow(static_cast<unsigned>(aprime)) -
                         rs.mono_series(mono).scaled(residue);
            if (aprime > 1) {
                RootMono pivot{{working, static_cast<int>(aprime)}};
                rec.expression = {{RatFn(1), pivot}, {-residue, mono}};
                rec.in_monomial = pivot;
            } else {
                rec.expression = w.expression;
                rec.expression.push_back({-residue, mono});
                rec.in_monomial = w.in_monomial;
            }
            rec.created_at = rel_level;
            auto ord = rec.series.order();
            if (ord.known()) rec.value = ord.value;
        }
        int idx = static_cast<int>(rs.roots_.size());
        rs.roots_.push_back(std::move(rec));
        rs.level_ = rel_level;

        if (aprime > 1) {
            // The working root firms up as the next confirmed root.
            rs.alpha_data_[working] = RootSystem::AlphaData{aprime, aprime};
            confirmed.push_back(working);
            beta.push_back(beta_w);
            alpha.push_back(aprime);
            auto& w = rs.roots_[static_cast<size_t>(working)];
            w.in_lambda = true;
            w.in_V = true;
            w.lambda_rank = static_cast<long>(confirmed.size()) - 1;
            rs.essential_sequence_.push_back(idx);
        } else {
            auto& w = rs.roots_[static_cast<size_t>(working)];
            w.successor = idx;
            w.successor_tail = {{residue, mono}};
            // The chain replaces its predecessor in the essential sequence.
            for (auto& e : rs.essential_sequence_)
                if (e == working) e = idx;
        }

        if (!rs.roots_[static_cast<size_t>(idx)].value) {
            rs.stop_reason_ = "value-unknown";
            break;
        }
        working = idx;
    }
    return rs;
}

bool classify_essential(const RootSystem& rs, int root, const Rat& gamma) {
    return rs.essential_at(root, gamma);
}

} // namespace curvette
