/*
 * standard_form.hpp
 * Rewriting elements into standard form over a root system, plus the derived
 * valuation-ideal machinery: generators of P_gamma and the per-degree check
 * that the lead relations present exactly the kernel of the monomial map.
 */
#pragma once

#include <vector>

#include "curvette/roots.hpp"

namespace curvette {

struct StandardForm {
    // Monomials of value < level, all standard; increasing monomial order.
    std::vector<std::pair<RatFn, RootMono>> settled;
    // Monomials of value >= level, increasing monomial order.
    std::vector<std::pair<RatFn, RootMono>> tail;
    Rat level;
};

struct RewriteStep {
    int rule = 0;        // 1 or 2
    Rat slice_value;     // value of the slice being rewritten
    RootMono target;     // monomial rewritten
    int via_root = -1;   // the root whose relation was used
    std::string rendered;
};

// A monomial is standard when all its roots lie in V(level) and no initial
// monomial of a non-variable root of Psi(level) u Theta(level) divides it.
bool is_standard(const RootMono& m, const RootSystem& rs, const Rat& level);

// Standard form of f of the given level (level <= rs.level()). The settled
// part is unique; settled + tail re-expands to f exactly.
StandardForm standard_form(const Poly& f, const Rat& level, const RootSystem& rs,
                           std::vector<RewriteStep>* log = nullptr);

// nu(f) read off the standard form; errors level-insufficient when the
// system's level does not exceed nu(f).
Rat value_via_standard_form(const Poly& f, const RootSystem& rs);

// Generators of the nu-ideal of value gamma: generalized monomials of value
// >= gamma in the Psi roots (plus Theta at the top level), divisibility
// pruned when `pruned` (the redundant bounded slice otherwise).
std::vector<RootMono> nu_ideal_generators(const Rat& gamma, const RootSystem& rs,
                                          bool pruned = true);

struct KernelDegreeReport {
    Rat degree;
    size_t monomial_count = 0;
    size_t kernel_dim = 0;
    size_t ideal_dim = 0;
    bool pass = false;
};

// For each graded degree below `level`, compares the kernel of the
// X-monomial -> lead map with the degree slice of the ideal generated by the
// least-value parts of the root expressions.
std::vector<KernelDegreeReport> relations_kernel_check(const RootSystem& rs, const Rat& level);

// Expand a sum of root monomials back into a polynomial.
Poly expand_monomials(const std::vector<std::pair<RatFn, RootMono>>& terms,
                      const RootSystem& rs);

} // namespace curvette
