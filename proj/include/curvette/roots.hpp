/*
 * roots.hpp
 * Systems of approximate roots of a curvette valuation.
 *
 * The construction walks the value semigroup level by level. At each level
 * it enumerates the qualifying generalized monomials (all leading
 * coefficients live in the one-dimensional graded piece, so dependencies are
 * found by reducing a single row), lifts each dependency to a new root, and
 * maintains the Lambda/Psi/V/Theta classification of the roots. The
 * dimension-2 recursion is also provided directly; on shared inputs the two
 * constructions agree and the tests cross-check them.
 */
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "curvette/curvette.hpp"
#include "curvette/semigroup.hpp"

namespace curvette {

// Sparse monomial over root indices; exponents are strictly positive.
using RootMono = std::map<int, int>;

bool mono_divides(const RootMono& a, const RootMono& b); // a | b componentwise
RootMono mono_mul(const RootMono& a, const RootMono& b);

struct RootRecord {
    Poly poly;                 // over the curvette's variables
    TruncSeries series;        // cached image under the curvette
    std::optional<Rat> value;  // t-adic value; nullopt = unknown at truncation
    std::vector<std::pair<RatFn, RootMono>> expression; // increasing monomials
    RootMono in_monomial;      // first expression monomial
    bool is_variable = false;
    Rat created_at;            // level whose relation produced it (variables: 0)

    bool in_lambda = false;    // has entered Lambda
    long lambda_rank = -1;     // position within Lambda once entered
    bool in_V = false;         // decided at Lambda entry
    int successor = -1;        // root extending this one's expression
    // this = successor + sum of tail terms (exact polynomial identity)
    std::vector<std::pair<RatFn, RootMono>> successor_tail;
};

struct LevelMonomial {
    RootMono mono;
    RatFn lead;              // coefficient of t^gamma
    int theta_root = -1;     // >= 0 when the monomial is a Theta root itself
};

struct LevelRecord {
    Rat gamma;
    std::vector<LevelMonomial> monomials;        // increasing monomial order
    // relations: pivot position paired with c; the lifted root is
    // monomials[pivot] - c * monomials.back()
    std::vector<std::pair<int, RatFn>> relations;
    std::vector<int> new_roots;                  // indices created at this level
    // classification snapshots after processing the level
    std::vector<int> lambda, psi, v, theta;
};

struct PrepStep {
    size_t var_index;
    Poly subtracted; // in the earlier variables; new var = old var - subtracted
};

struct Preparation {
    Curvette curvette;
    std::vector<PrepStep> steps;
};

class RootSystem {
public:
    const Curvette& curvette() const { return curvette_; }
    const std::vector<RootRecord>& roots() const { return roots_; }
    const std::vector<LevelRecord>& levels() const { return levels_; }
    const Rat& level() const { return level_; }

    // Final classification index lists.
    std::vector<int> lambda_set() const;
    std::vector<int> psi_set() const;
    std::vector<int> v_set() const;
    std::vector<int> theta_set() const;

    // Dimension-2 extras: alpha'_i and alpha_i per essential root index.
    struct AlphaData { long alpha_prime = 0, alpha = 0; };
    const std::map<int, AlphaData>& alpha_data() const { return alpha_data_; }
    const std::vector<int>& essential_sequence() const { return essential_sequence_; }
    const std::string& stop_reason() const { return stop_reason_; }

    // Monomial helpers.
    Rat mono_value(const RootMono& m) const;
    Poly mono_poly(const RootMono& m) const;
    TruncSeries mono_series(const RootMono& m) const;
    bool mono_less(const RootMono& a, const RootMono& b) const;
    std::string mono_string(const RootMono& m) const;
    std::string root_name(int i) const;

    // Level-relative classification (Lambda/Psi/V/Theta at a level <= top).
    bool in_lambda_at(int root, const Rat& gamma) const;
    bool essential_at(int root, const Rat& gamma) const;
    bool in_v_at(int root, const Rat& gamma) const;
    bool in_theta_at(int root, const Rat& gamma) const;

    // Semigroup of the V-root values (the value semigroup up to the level).
    Semigroup value_semigroup() const;

private:
    friend class RootBuilder;
    friend RootSystem roots_up_to(const Curvette&, const Rat&);
    friend RootSystem roots_2d(const Curvette&, int);
    Curvette curvette_;
    std::vector<RootRecord> roots_;
    std::vector<LevelRecord> levels_;
    Rat level_;
    std::map<int, AlphaData> alpha_data_;
    std::vector<int> essential_sequence_;
    std::string stop_reason_;
};

// Incremental level-by-level construction, used directly where two
// valuations must be walked in lockstep.
class RootBuilder {
public:
    explicit RootBuilder(Curvette prepared);

    // Next candidate level value above the last processed one, or nullopt
    // when none exists at or below max_level.
    std::optional<Rat> next_level(const Rat& max_level) const;

    // Monomial list and leads of the level without creating roots.
    LevelRecord probe(const Rat& gamma) const;

    // Process one level (monomials, dependencies, lifted roots).
    const LevelRecord& process(const Rat& gamma);

    const std::vector<RootRecord>& roots() const { return roots_; }
    const std::vector<LevelRecord>& levels() const { return levels_; }
    const Rat& processed() const { return processed_; }

    // Current state as a RootSystem; `level` overrides the reached level
    // (used when the classification is valid past the last processed value).
    RootSystem snapshot(std::optional<Rat> level = std::nullopt) const;

private:
    void enter_lambda(const Rat& gamma);
    bool in_excluded(const RootMono& m) const;
    TruncSeries mono_series(const RootMono& m) const;
    Poly mono_poly(const RootMono& m) const;
    std::string mono_string_b(const RootMono& m) const;
    int create_root(const LevelMonomial& pivot, const LevelMonomial& tail, const RatFn& c,
                    const Rat& gamma);
    void snapshot_sets(LevelRecord& rec, const Rat& gamma);

    Curvette c_;
    std::vector<RootRecord> roots_;
    std::vector<LevelRecord> levels_;
    std::vector<int> theta_;
    std::vector<int> lambda_order_;
    std::vector<int> v_roots_;
    std::vector<Rat> v_values_;
    std::vector<RootMono> in_monomials_;
    Rat processed_ = Rat(0);
};

// Coordinate preparation: repeatedly replaces a variable by itself minus a
// matching combination of monomials in the earlier variables until its
// initial form is no longer captured, its series becomes zero up to the
// truncation, or its value passes the level bound. The recorded steps can be
// replayed on a second curvette.
Preparation prepare_coordinates(const Curvette& c, const Rat& level_bound);
Curvette replay_preparation(const Curvette& c, const std::vector<PrepStep>& steps);

// Roots through all semigroup levels <= level. Pre: prepared curvette and
// level <= truncation/2 (truncation-exceeded otherwise).
RootSystem roots_up_to(const Curvette& c, const Rat& level);

// The dimension-2 recursion on a prepared 2-variable curvette. Stops at
// max_roots essential roots, at a value unknown within the truncation, or
// when the next relation level would pass the truncation-safe bound.
RootSystem roots_2d(const Curvette& c, int max_roots);

// Def-level essentiality at a chosen level (flags recomputed, not mutated).
bool classify_essential(const RootSystem& rs, int root, const Rat& gamma);

} // namespace curvette
