#include "curvette/semigroup.hpp"

#include <algorithm>

#include "curvette/errors.hpp"

namespace curvette {

Semigroup::Semigroup(std::vector<Rat> generators) : gens_(std::move(generators)) {
    for (const auto& g : gens_)
        if (!(g > Rat(0)))
            throw math_error(errc::invariant_violation, "semigroup generators must be positive");
    std::sort(gens_.begin(), gens_.end());
    gens_.erase(std::unique(gens_.begin(), gens_.end()), gens_.end());
}

std::vector<Rat> Semigroup::enumerate(size_t count) const {
    std::lock_guard<std::mutex> lock(mu_);
    if (gens_.empty()) {
        if (count > 0)
            throw math_error(errc::invariant_violation, "empty semigroup has no elements");
        return {};
    }
    if (cache_.empty() && frontier_.empty())
        for (const auto& g : gens_) frontier_.insert(g);
    while (cache_.size() < count) {
        if (frontier_.empty())
            throw math_error(errc::invariant_violation, "semigroup enumeration exhausted");
        Rat least = *frontier_.begin();
        frontier_.erase(frontier_.begin());
        cache_.push_back(least);
        for (const auto& g : gens_) frontier_.insert(least + g);
    }
    return std::vector<Rat>(cache_.begin(), cache_.begin() + static_cast<long>(count));
}

Rat Semigroup::nth(size_t n) const {
    if (n == 0) throw math_error(errc::invariant_violation, "semigroup indexing is 1-based");
    return enumerate(n).back();
}

std::optional<Rat> Semigroup::next_after(const Rat& x) const {
    if (gens_.empty()) return std::nullopt;
    for (size_t n = 1;; ++n) {
        Rat v = nth(n);
        if (v > x) return v;
    }
}

bool Semigroup::contains(const Rat& v) const {
    if (v.is_zero()) return true;
    if (v < Rat(0) || gens_.empty()) return false;
    // Depth-first with memo-free pruning; generator counts are tiny here.
    std::vector<Rat> stack{v};
    std::set<Rat> seen;
    while (!stack.empty()) {
        Rat r = stack.back();
        stack.pop_back();
        if (r.is_zero()) return true;
        if (r < Rat(0) || seen.count(r)) continue;
        seen.insert(r);
        for (const auto& g : gens_) {
            Rat next = r - g;
            if (next.is_zero()) return true;
            if (next > Rat(0) && !seen.count(next)) stack.push_back(next);
        }
    }
    return false;
}

} // namespace curvette
