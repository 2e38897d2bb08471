/*
 * walkthrough.hpp
 * The bundled end-to-end computation: a fixed three-variable curvette whose
 * roots, standard forms, semigroup indices, separating data and syzygy are
 * all known in closed form. Every value is machine-checked; the CLI and the
 * acceptance suite both consume the report.
 */
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "curvette/rat.hpp"

namespace curvette {

struct WalkthroughCheck {
    std::string name;
    std::string expected;
    std::string actual;
    bool pass = false;
};

struct WalkthroughReport {
    std::vector<WalkthroughCheck> checks;
    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

// The bundled session declares truncation 80 (the level-35 construction
// needs at least 70); an override below that fails with truncation-exceeded.
WalkthroughReport run_walkthrough(std::optional<Rat> trunc_override = std::nullopt);

// The bundled session text, as a reusable example input.
std::string walkthrough_session_text();

} // namespace curvette
