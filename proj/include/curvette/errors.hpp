/*
 * errors.hpp
 * Error codes shared by the whole library. Every failure mode that a caller
 * can react to carries a stable machine-readable code string.
 */
#pragma once

#include <stdexcept>
#include <string>

namespace curvette {

enum class errc {
    division_by_zero,
    ambiguous_sign,
    pole_in_interval,
    endpoint_is_root,
    arity_mismatch,
    truncation_exceeded,
    value_unknown,
    level_insufficient,
    non_terminating_guard,
    residue_not_in_base_field,
    center_equals_point,
    step_budget_exceeded,
    not_found_within_budget,
    f_in_separating_ideal,
    not_reached_within_steps,
    invalid_event,
    syntax_error,
    unknown_variable,
    invariant_violation,
    mismatch,
};

inline const char* errc_code(errc c) {
    switch (c) {
        case errc::division_by_zero: return "division-by-zero";
        case errc::ambiguous_sign: return "ambiguous-sign";
        case errc::pole_in_interval: return "pole-in-interval";
        case errc::endpoint_is_root: return "endpoint-is-root";
        case errc::arity_mismatch: return "arity-mismatch";
        case errc::truncation_exceeded: return "truncation-exceeded";
        case errc::value_unknown: return "value-unknown";
        case errc::level_insufficient: return "level-insufficient";
        case errc::non_terminating_guard: return "non-terminating-guard";
        case errc::residue_not_in_base_field: return "residue-not-in-base-field";
        case errc::center_equals_point: return "center-equals-point";
        case errc::step_budget_exceeded: return "step-budget-exceeded";
        case errc::not_found_within_budget: return "not-found-within-budget";
        case errc::f_in_separating_ideal: return "f-in-separating-ideal";
        case errc::not_reached_within_steps: return "not-reached-within-steps";
        case errc::invalid_event: return "invalid-event";
        case errc::syntax_error: return "syntax-error";
        case errc::unknown_variable: return "unknown-variable";
        case errc::invariant_violation: return "invariant-violation";
        case errc::mismatch: return "mismatch";
    }
    return "unknown";
}

class math_error : public std::runtime_error {
public:
    math_error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_code(code)) + ": " + what), code_(code) {}

    errc code() const { return code_; }

private:
    errc code_;
};

} // namespace curvette
