/*
 * blowup.hpp
 * Local blowups of two-variable charts along the valuation, strict and weak
 * transforms, the resolution sequence of a separating ideal, and the chart
 * table locating each approximate root as a coordinate.
 */
#pragma once

#include "curvette/separating.hpp"

namespace curvette {

struct SubstRecord {
    bool branch_yx = true; // y = x(y' + c0); otherwise x = y(x' + c0)
    RatFn c0;              // residue of the transformed center (in k)
};

struct Chart {
    std::vector<std::string> vars; // the two chart coordinate names
    std::vector<SubstRecord> history;

    // Composite transform of a polynomial in the original coordinates into
    // this chart (no exceptional factor removed).
    Poly total_transform(const Poly& f) const;
};

struct TransformResult {
    Poly strict;
    long exceptional_multiplicity = 0;
};

// One blowup step: chooses the branch containing the transformed center of
// the curvette, records the substitution, and transforms the curvette.
struct BlowupStep {
    Chart chart;       // chart after the step
    Curvette curvette; // transformed curvette, centered at the new origin
};
BlowupStep local_blowup(const Chart& ch, const Curvette& c);

// Strict transform of f under the LAST substitution of the chart: the
// substitution is applied and the maximal exceptional power removed.
TransformResult strict_transform_poly(const Chart& ch, const Poly& f);

// Strict transform of f through the whole chart history.
TransformResult strict_transform_total(const Chart& ch, const Poly& f);

// Strict transform of another curvette point under a single blowup of the
// origin; the branch is chosen by the point itself.
Curvette strict_transform_curvette(const Curvette& delta);

struct ResolutionStep {
    Chart chart;          // chart after this step (step 0: original ring)
    CurvettePair pair;    // transformed pair in the chart
    SepResult sep;        // separating data of the transformed pair
    long ideal_multiplicity = 0; // m-adic order of the separating ideal
};

struct Resolution {
    std::vector<ResolutionStep> steps;
    // resolved: the transform of the separating ideal is the maximal ideal.
    enum class Status { Resolved, MaxSteps, BranchDivergence } status;
};

// Blows the pair up along the common center until the weak transform of the
// separating ideal is the maximal ideal, or max_steps is reached, or the two
// points stop sharing a branch.
Resolution resolve_pair(const CurvettePair& p, int max_steps);

// Blowup sequence along a single curvette: chart 1 is the original ring,
// each further chart one local blowup. Stops early when the curvette
// coincides with the center.
std::vector<Chart> blowup_charts(const Curvette& c, int steps);

struct ChartDataRow {
    int root = -1;
    int chart_index = -1;        // 1-based; 1 = the original ring
    Poly strict;                 // the coordinate-like strict transform
    std::optional<RootMono> complement; // monomial in earlier roots acting as the other coordinate
    bool earlier_monomial_units = false; // property: earlier roots are monomial x unit here
    std::string note;
};

// For each confirmed root of a dimension-2 system, locates the first chart
// where its strict transform is a regular parameter and searches a small box
// of exponent vectors for the complementary monomial.
std::vector<ChartDataRow> chart_data(const RootSystem& rs2d,
                                     const std::vector<Chart>& charts);

// Is every g (transformed through the chart) of the form x'^a y'^b * unit?
bool is_locally_monomial(const Chart& ch, const std::vector<Poly>& gs);

} // namespace curvette
