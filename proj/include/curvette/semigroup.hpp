/*
 * semigroup.hpp
 * Numerical semigroups with positive rational generators: sorted enumeration
 * of elements and membership tests. The enumeration cache is guarded so a
 * completed Semigroup can be read from several threads.
 */
#pragma once

#include <mutex>
#include <optional>
#include <set>
#include <vector>

#include "curvette/rat.hpp"

namespace curvette {

class Semigroup {
public:
    Semigroup() = default;
    explicit Semigroup(std::vector<Rat> generators);

    Semigroup(const Semigroup& o) : gens_(o.gens_) {
        std::lock_guard<std::mutex> lock(o.mu_);
        cache_ = o.cache_;
        frontier_ = o.frontier_;
    }
    Semigroup& operator=(const Semigroup& o) {
        if (this != &o) {
            std::scoped_lock lock(mu_, o.mu_);
            gens_ = o.gens_;
            cache_ = o.cache_;
            frontier_ = o.frontier_;
        }
        return *this;
    }

    const std::vector<Rat>& generators() const { return gens_; }

    // First `count` strictly positive elements, ascending.
    std::vector<Rat> enumerate(size_t count) const;

    // n-th positive element (1-based).
    Rat nth(size_t n) const;

    // Least element strictly greater than x; nullopt for the empty semigroup.
    std::optional<Rat> next_after(const Rat& x) const;

    // Is v a nonnegative-integer combination of the generators?
    bool contains(const Rat& v) const;

private:
    std::vector<Rat> gens_; // sorted, deduplicated, positive
    mutable std::mutex mu_;
    mutable std::vector<Rat> cache_;
    mutable std::set<Rat> frontier_;
};

} // namespace curvette
