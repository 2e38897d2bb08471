/*
 * separating.hpp
 * The separating ideal of two curvette points with a common specialization
 * at the origin: its value, monomial generators, a sign-change witness, and
 * the conjecturally-connected set descriptions C and C'.
 *
 * Both constructions are walked in lockstep, level by level. A level counts
 * as shared when the values agree, the monomial sets agree, and the two lead
 * vectors are positively proportional (the "all linear combinations keep
 * their sign" condition collapses to positive proportionality in the
 * one-dimensional graded pieces). Symbolic pairs treat the two parameter
 * values as independent: proportionality then forces all lead ratios to be
 * the same rational constants.
 */
#pragma once

#include "curvette/roots.hpp"
#include "curvette/standard_form.hpp"

namespace curvette {

struct CurvettePair {
    Curvette alpha;
    Curvette beta;
    // When both points carry the symbolic parameter: whether the two
    // parameter values are assumed distinct.
    bool distinct_params = true;

    CurvettePair(Curvette a, Curvette b, bool distinct = true);
};

enum class DivergenceKind { None, MonomialSetMismatch, SignOrderMismatch };

const char* divergence_kind_name(DivergenceKind k);

struct SepResult {
    bool found = false;
    size_t level_index = 0; // 1-based index of the diverging level
    Rat value_alpha;        // nu_alpha of the separating ideal
    Rat value_beta;
    DivergenceKind kind = DivergenceKind::None;

    // Divergence-level data (present for sign-order mismatches).
    std::vector<RootMono> monomials;
    std::vector<RatFn> alpha_leads, beta_leads; // t-sign adjusted

    // Common construction as of the divergence level (alpha's valuation);
    // its level is value_alpha so standard forms up to it are available.
    RootSystem common;
    RootSystem beta_view; // same roots, beta's series/values
};

// Walks levels up to `bound` (default: the truncation-safe bound).
SepResult separating_value(const CurvettePair& p, std::optional<Rat> bound = std::nullopt);

// The common root prefix as a RootSystem for alpha (identical polynomials).
RootSystem common_roots(const CurvettePair& p, const Rat& bound);

// Generalized monomials in the common roots of alpha-value >= the
// separating value, divisibility pruned unless `pruned` is false.
std::vector<RootMono> separating_generators(const CurvettePair& p, const SepResult& s,
                                            bool pruned = true);

// An element changing sign between the two points, of alpha-value equal to
// the separating value. Validity is re-verified through sign_at; symbolic
// constraints that admit no rational witness give not-found-within-budget.
Poly witness_sign_change(const CurvettePair& p, const SepResult& s);

struct ConnectedSetDesc {
    enum class Variant { C, CPrime };
    struct PerInput {
        Poly f;
        Rat head_value; // nu_alpha(f)
        std::vector<std::pair<RatFn, RootMono>> heads; // value = head_value slice
        std::vector<std::pair<RatFn, RootMono>> tails; // all later monomials
        int head_sum_sign = 0;                 // sign of the head sum at alpha
        std::map<int, int> head_root_signs;    // root index -> sign at alpha
    };
    Variant variant = Variant::C;
    std::vector<PerInput> inputs;
    RootSystem common; // supplies the root polynomials for evaluation
};

ConnectedSetDesc connected_set(const CurvettePair& p, const SepResult& s,
                               const std::vector<Poly>& fs,
                               ConnectedSetDesc::Variant variant);

// Evaluates the value inequalities and sign conditions of the description at
// another curvette point.
bool membership(const ConnectedSetDesc& d, const Curvette& delta);

} // namespace curvette
