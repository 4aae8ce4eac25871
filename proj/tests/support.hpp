#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gyro/gyro.hpp"

namespace gyro::test {

inline std::string data_path(const std::string& rel) { return std::string(GYRO_DATA_DIR) + "/" + rel; }

inline FiniteTable z4() { return cyclic_table(4); }
inline FiniteTable g8() { return load_table_file(data_path("tables/g8.json")); }
inline FiniteTable g16() { return load_table_file(data_path("tables/g16.json")); }

inline ElementSet set_from_mask(std::size_t order, std::uint64_t mask) {
    ElementSet s(order);
    for (std::size_t i = 0; i < order; ++i)
        if (mask >> i & 1U) s.insert(i);
    return s;
}

// Oracles below work from the Cayley table alone.

/// The w with a⊕(b⊕z) = (a⊕b)⊕w, found by scanning; nullopt if none or several.
inline std::optional<std::size_t> solve_gyration(const FiniteTable& g, std::size_t a, std::size_t b, std::size_t z) {
    const auto lhs = g.add(a, g.add(b, z));
    std::optional<std::size_t> found;
    for (std::size_t w = 0; w < g.order(); ++w) {
        if (g.add(g.add(a, b), w) == lhs) {
            if (found) return std::nullopt;
            found = w;
        }
    }
    return found;
}

inline bool brute_closed(const FiniteTable& g, const ElementSet& h) {
    for (std::size_t x = 0; x < g.order(); ++x) {
        if (!h.contains(x)) continue;
        bool has_inverse = false;
        for (std::size_t y = 0; y < g.order(); ++y) {
            if (h.contains(y) && g.add(x, y) == 0) has_inverse = true;
            if (h.contains(y) && !h.contains(g.add(x, y))) return false;
        }
        if (!has_inverse) return false;
    }
    return true;
}

/// gyr[a,h] maps H onto H for all a, h, with gyrations solved from G3.
inline bool brute_L(const FiniteTable& g, const ElementSet& h) {
    for (std::size_t a = 0; a < g.order(); ++a)
        for (std::size_t k = 0; k < g.order(); ++k) {
            if (!h.contains(k)) continue;
            for (std::size_t x = 0; x < g.order(); ++x)
                if (h.contains(x) && !h.contains(*solve_gyration(g, a, k, x))) return false;
        }
    return true;
}

/// Symmetric gyr-invariant sets containing 0, as unions of orbits.
inline std::vector<ElementSet> invariant_sets(const FiniteTable& g) {
    const auto maps = gyration_maps(g);
    std::vector<ElementSet> orbits;
    ElementSet seen(g.order());
    seen.insert(0);
    for (std::size_t x = 1; x < g.order(); ++x) {
        if (seen.contains(x)) continue;
        auto o = gyr_orbit(g, maps, x);
        seen = seen.unite(o);
        orbits.push_back(std::move(o));
    }
    std::vector<ElementSet> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << orbits.size()); ++mask) {
        ElementSet s(g.order());
        s.insert(0);
        for (std::size_t i = 0; i < orbits.size(); ++i)
            if (mask >> i & 1U) s = s.unite(orbits[i]);
        out.push_back(std::move(s));
    }
    return out;
}

inline bool law_holds(const FiniteTable& g, Flavor f, const ElementSet& v, const ElementSet& u) {
    for (auto x : v.elements())
        for (auto y : v.elements()) {
            if (f == Flavor::weak) {
                if (!u.contains(g.add(x, y))) return false;
                continue;
            }
            for (auto z : v.elements())
                if (!u.contains(g.add(x, g.add(y, z)))) return false;
        }
    return true;
}

/// Every strictly decreasing chain of invariant sets obeying the law, the last
/// set also obeying it against itself (so the chain is valid once it stabilizes).
inline std::vector<FiniteChain> all_chains(const FiniteTable& g, Flavor f, std::size_t max_len) {
    const auto sets = invariant_sets(g);
    std::vector<FiniteChain> out;
    std::function<void(FiniteChain&)> grow = [&](FiniteChain& c) {
        if (law_holds(g, f, c.sets.back(), c.sets.back())) out.push_back(c);
        if (c.sets.size() == max_len) return;
        for (const auto& s : sets) {
            if (s == c.sets.back() || !s.subset_of(c.sets.back())) continue;
            if (!law_holds(g, f, s, c.sets.back())) continue;
            c.sets.push_back(s);
            grow(c);
            c.sets.pop_back();
        }
    };
    for (const auto& s : sets) {
        FiniteChain c{f, {s}};
        grow(c);
    }
    return out;
}

}  // namespace gyro::test
