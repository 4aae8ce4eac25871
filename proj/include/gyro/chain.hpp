#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "gyro/element_set.hpp"
#include "gyro/errors.hpp"
#include "gyro/finite_table.hpp"
#include "gyro/gyration.hpp"
#include "gyro/radial.hpp"

namespace gyro {

/// Containment law of a chain U₀ ⊇ U₁ ⊇ ...:
///   weak:        U_{n+1} ⊕ U_{n+1} ⊆ U_n
///   admissible:  U_{n+1} ⊕ (U_{n+1} ⊕ U_{n+1}) ⊆ U_n
enum class Flavor { weak, admissible };

inline const char* to_string(Flavor f) { return f == Flavor::weak ? "weak" : "admissible"; }

/**
 * A chain of neighborhoods of 0 in a finite model. The listed sets are
 * U₀, ..., U_K; the chain is eventually constant, U_n = U_K for n > K, and its
 * tail U_K is the intersection H of all U_n.
 */
struct FiniteChain {
    Flavor flavor = Flavor::weak;
    std::vector<ElementSet> sets;

    const ElementSet& at(std::size_t n) const { return sets.at(std::min(n, sets.size() - 1)); }
    const ElementSet& tail() const { return sets.back(); }
    /// K: index of the last listed set.
    std::size_t last_index() const { return sets.size() - 1; }

    /// Drops trailing repetitions so that last_index() is where the chain stabilizes.
    FiniteChain normalized() const {
        FiniteChain c = *this;
        while (c.sets.size() > 1 && c.sets[c.sets.size() - 2] == c.sets.back()) c.sets.pop_back();
        return c;
    }
};

/// A chain of open norm balls about 0 with radii r₀ > r₁ > ...; its tail is {0}.
struct RadialChain {
    Flavor flavor = Flavor::weak;
    double c = 1.0;
    std::vector<double> radii;
};

template <typename E>
struct ChainVerdict {
    bool valid = true;
    std::optional<std::size_t> index;  // n at which the containment law (or a set property) fails
    std::string reason;
    std::vector<E> witness;

    explicit operator bool() const { return valid; }
};

/// Distinct permutations z ↦ gyr[a, b](z) over all a, b.
inline std::vector<std::vector<std::size_t>> gyration_maps(const FiniteTable& g) {
    std::set<std::vector<std::size_t>> maps;
    const std::size_t n = g.order();
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            std::vector<std::size_t> p(n);
            for (std::size_t z = 0; z < n; ++z) p[z] = gyr(g, a, b, z);
            maps.insert(std::move(p));
        }
    }
    return {maps.begin(), maps.end()};
}

/// Whether gyr[a, b](U) = U for all a, b. Returns (a, b, x) with gyr[a,b](x) ∉ U on failure.
inline std::optional<std::vector<std::size_t>> gyr_invariance_witness(const FiniteTable& g, const ElementSet& u) {
    for (std::size_t a = 0; a < g.order(); ++a)
        for (std::size_t b = 0; b < g.order(); ++b)
            for (auto x : u.elements())
                if (!u.contains(gyr(g, a, b, x))) return std::vector<std::size_t>{a, b, x};
    return std::nullopt;
}

namespace detail {

/// First (x, y[, z]) in V with x⊕y ∉ U (weak) or x⊕(y⊕z) ∉ U (admissible).
inline std::optional<std::vector<std::size_t>> law_witness(const FiniteTable& g, Flavor f, const ElementSet& v,
                                                           const ElementSet& u) {
    const auto els = v.elements();
    if (f == Flavor::weak) {
        for (auto x : els)
            for (auto y : els)
                if (!u.contains(g.add(x, y))) return std::vector<std::size_t>{x, y};
        return std::nullopt;
    }
    for (auto y : els) {
        for (auto z : els) {
            const auto yz = g.add(y, z);
            for (auto x : els)
                if (!u.contains(g.add(x, yz))) return std::vector<std::size_t>{x, y, z};
        }
    }
    return std::nullopt;
}

}  // namespace detail

/**
 * Checks every U_n contains 0, is symmetric and gyr-invariant, and that the
 * flavor's containment law holds for n = 0, ..., K, the last step being the
 * tail law U_K ⊕ U_K ⊆ U_K (resp. the admissible form).
 */
inline ChainVerdict<std::size_t> validate_chain(const FiniteTable& g, const FiniteChain& chain) {
    if (chain.sets.empty()) throw precondition_error("validate_chain: empty chain");
    for (std::size_t n = 0; n < chain.sets.size(); ++n) {
        const auto& u = chain.sets[n];
        if (u.universe() != g.order()) throw carrier_error("validate_chain: set universe does not match the model");
        if (!u.contains(0)) return {false, n, "U_" + std::to_string(n) + " does not contain 0", {}};
        for (auto x : u.elements())
            if (!u.contains(g.negate(x)))
                return {false, n, "U_" + std::to_string(n) + " is not symmetric", {x, g.negate(x)}};
        if (auto w = gyr_invariance_witness(g, u))
            return {false, n, "U_" + std::to_string(n) + " is not gyr-invariant", *w};
    }
    for (std::size_t n = 0; n < chain.sets.size(); ++n) {
        if (auto w = detail::law_witness(g, chain.flavor, chain.at(n + 1), chain.at(n)))
            return {false, n, std::string(to_string(chain.flavor)) + " containment law fails at n=" + std::to_string(n), *w};
    }
    return {};
}

/// Radial chains: radii in [0, c) and r_{n+1} ⊕₁ r_{n+1} ≤ r_n (weak) or
/// r_{n+1} ⊕₁ (r_{n+1} ⊕₁ r_{n+1}) ≤ r_n (admissible), up to a relative 1e-12.
inline ChainVerdict<double> validate_chain(const RadialChain& chain) {
    if (chain.radii.empty()) throw precondition_error("validate_chain: empty chain");
    for (std::size_t n = 0; n < chain.radii.size(); ++n) {
        const double r = chain.radii[n];
        if (!(r >= 0.0 && r < chain.c)) return {false, n, "radius outside [0, c)", {r}};
    }
    for (std::size_t n = 0; n + 1 < chain.radii.size(); ++n) {
        const double next = chain.radii[n + 1];
        double sum = radial_add(chain.c, next, next);
        if (chain.flavor == Flavor::admissible) sum = radial_add(chain.c, next, sum);
        if (sum > chain.radii[n] * (1.0 + 1e-12))
            return {false, n, std::string(to_string(chain.flavor)) + " containment law fails at n=" + std::to_string(n),
                    {next, sum, chain.radii[n]}};
    }
    return {};
}

/// Extends a radial chain to `length` radii by the largest radius obeying the
/// flavor's law at each step.
inline RadialChain extend_radial_chain(RadialChain chain, std::size_t length) {
    if (chain.radii.empty()) throw precondition_error("extend_radial_chain: empty chain");
    while (chain.radii.size() < length) {
        const double r = chain.radii.back();
        chain.radii.push_back(chain.flavor == Flavor::weak ? radial_half(chain.c, r) : radial_third(chain.c, r));
    }
    return chain;
}

/// Elements reachable from x by ⊖ and gyrations.
inline ElementSet gyr_orbit(const FiniteTable& g, const std::vector<std::vector<std::size_t>>& maps, std::size_t x) {
    ElementSet orbit(g.order());
    std::vector<std::size_t> stack{x};
    orbit.insert(x);
    while (!stack.empty()) {
        const auto y = stack.back();
        stack.pop_back();
        auto visit = [&](std::size_t z) {
            if (!orbit.contains(z)) {
                orbit.insert(z);
                stack.push_back(z);
            }
        };
        visit(g.negate(y));
        for (const auto& p : maps) visit(p[y]);
    }
    return orbit;
}

/// Largest symmetric gyr-invariant subset of U (the union of the orbits it contains).
inline ElementSet invariant_core(const FiniteTable& g, const ElementSet& u) {
    const auto maps = gyration_maps(g);
    ElementSet core(g.order());
    for (auto x : u.elements())
        if (gyr_orbit(g, maps, x).subset_of(u)) core.insert(x);
    return core;
}

/**
 * A symmetric gyr-invariant V ∋ 0 inside U satisfying the flavor's law against U
 * (V⊕V ⊆ U, or V⊕(V⊕V) ⊆ U).
 *
 * Starts from the invariant core of U and repeatedly drops the orbits of the
 * largest element involved in any violation and of its inverse, so V stays
 * symmetric, until none remain. The result is
 * deterministic but not necessarily maximum.
 */
inline ElementSet shrink(const FiniteTable& g, const ElementSet& u, Flavor flavor = Flavor::weak) {
    if (!u.contains(0)) throw precondition_error("shrink: U must contain 0");
    if (!is_symmetric(g, u)) throw precondition_error("shrink: U must be symmetric");
    const auto maps = gyration_maps(g);
    ElementSet v = invariant_core(g, u);
    while (true) {
        std::size_t worst = 0;
        bool any = false;
        const auto els = v.elements();
        auto involve = [&](std::size_t e) {
            any = true;
            worst = std::max(worst, e);
        };
        if (flavor == Flavor::weak) {
            for (auto x : els)
                for (auto y : els)
                    if (!u.contains(g.add(x, y))) {
                        involve(x);
                        involve(y);
                    }
        } else {
            for (auto y : els)
                for (auto z : els) {
                    const auto yz = g.add(y, z);
                    for (auto x : els)
                        if (!u.contains(g.add(x, yz))) {
                            involve(x);
                            involve(y);
                            involve(z);
                        }
                }
        }
        if (!any) return v;
        if (worst == 0) throw invariant_error("shrink: identity involved in a violation");
        for (auto e : gyr_orbit(g, maps, worst).unite(gyr_orbit(g, maps, g.negate(worst))).elements()) v.erase(e);
    }
}

/// Radial version: the largest radius r with r⊕₁r ≤ R (weak) or r⊕₁(r⊕₁r) ≤ R.
inline double shrink_radius(double c, double big_r, Flavor flavor = Flavor::weak) {
    return flavor == Flavor::weak ? radial_half(c, big_r) : radial_third(c, big_r);
}

struct FiniteHull {
    FiniteChain chain;
    ElementSet subgroup;
};

/**
 * Builds an admissible chain inside U: U₀ is the invariant core of U and
 * U_{n+1} = shrink(U_n, admissible) until the chain stabilizes. The tail H is an
 * admissible L-subgyrogroup contained in U.
 */
inline FiniteHull admissible_hull(const FiniteTable& g, const ElementSet& u) {
    if (!u.contains(0)) throw precondition_error("admissible_hull: U must contain 0");
    if (!is_symmetric(g, u)) throw precondition_error("admissible_hull: U must be symmetric");
    FiniteChain chain{Flavor::admissible, {invariant_core(g, u)}};
    while (true) {
        ElementSet next = shrink(g, chain.sets.back(), Flavor::admissible);
        if (next == chain.sets.back()) break;
        chain.sets.push_back(std::move(next));
    }
    return {chain, chain.tail()};
}

/// Radial hull of a ball of radius R: radii R, R/3, R/9, ... in rapidity, `length` of them. H = {0}.
inline RadialChain admissible_hull(double c, double big_r, std::size_t length) {
    require_radius(c, big_r, "admissible_hull");
    return extend_radial_chain(RadialChain{Flavor::admissible, c, {big_r}}, std::max<std::size_t>(length, 1));
}

/**
 * Diagonal intersection V_n = ∩_{i ≤ n} U_{i,n} of admissible chains. The
 * result is admissible with tail ∩ H_i.
 */
inline FiniteHull admissible_intersection(const FiniteTable& g, const std::vector<FiniteChain>& chains) {
    if (chains.empty()) throw precondition_error("admissible_intersection: no chains");
    std::size_t length = chains.size();
    for (std::size_t i = 0; i < chains.size(); ++i) {
        if (chains[i].flavor != Flavor::admissible)
            throw precondition_error("admissible_intersection: chain " + std::to_string(i) + " is not admissible");
        if (auto v = validate_chain(g, chains[i]); !v)
            throw precondition_error("admissible_intersection: chain " + std::to_string(i) + " invalid: " + v.reason);
        length = std::max(length, chains[i].sets.size());
    }
    FiniteChain diag{Flavor::admissible, {}};
    for (std::size_t n = 0; n < length; ++n) {
        ElementSet v = chains[0].at(n);
        for (std::size_t i = 1; i <= n && i < chains.size(); ++i) v = v.intersect(chains[i].at(n));
        diag.sets.push_back(std::move(v));
    }
    diag = diag.normalized();
    return {diag, diag.tail()};
}

inline RadialChain admissible_intersection(const std::vector<RadialChain>& chains) {
    if (chains.empty()) throw precondition_error("admissible_intersection: no chains");
    std::size_t length = chains.size();
    for (const auto& ch : chains) {
        if (ch.flavor != Flavor::admissible) throw precondition_error("admissible_intersection: chain is not admissible");
        if (ch.c != chains[0].c) throw precondition_error("admissible_intersection: chains use different c");
        if (auto v = validate_chain(ch); !v) throw precondition_error("admissible_intersection: invalid chain: " + v.reason);
        length = std::max(length, ch.radii.size());
    }
    std::vector<RadialChain> ext;
    for (const auto& ch : chains) ext.push_back(extend_radial_chain(ch, length));
    RadialChain diag{Flavor::admissible, chains[0].c, {}};
    for (std::size_t n = 0; n < length; ++n) {
        double r = ext[0].radii[n];
        for (std::size_t i = 1; i <= n && i < ext.size(); ++i) r = std::min(r, ext[i].radii[n]);
        diag.radii.push_back(r);
    }
    return diag;
}

/// U_{n+1} ⊕ H ⊆ U_{n+1} ⊕ U_{n+1} ⊆ U_n for every n ≤ K. Witness (n, x, h) or (n, x, y).
inline ChainVerdict<std::size_t> admissible_quotient_inclusion_check(const FiniteTable& g, const FiniteChain& chain,
                                                                     const ElementSet& h) {
    for (std::size_t n = 0; n < chain.sets.size(); ++n) {
        const auto& next = chain.at(n + 1);
        const ElementSet doubled = set_add(g, next, next);
        for (auto x : next.elements())
            for (auto k : h.elements())
                if (!doubled.contains(g.add(x, k))) return {false, n, "U_{n+1}⊕H not inside U_{n+1}⊕U_{n+1}", {x, k}};
        if (auto w = detail::law_witness(g, Flavor::weak, next, chain.at(n)))
            return {false, n, "U_{n+1}⊕U_{n+1} not inside U_n", *w};
    }
    return {};
}

/// Radial form with H = {0}: r_{n+1} ⊕₁ 0 = r_{n+1} ≤ r_{n+1} ⊕₁ r_{n+1} ≤ r_n.
inline ChainVerdict<double> admissible_quotient_inclusion_check(const RadialChain& chain) {
    for (std::size_t n = 0; n + 1 < chain.radii.size(); ++n) {
        const double next = chain.radii[n + 1];
        const double with_h = radial_add(chain.c, next, 0.0);
        const double doubled = radial_add(chain.c, next, next);
        if (with_h > doubled || doubled > chain.radii[n] * (1.0 + 1e-12))
            return {false, n, "inclusion fails", {with_h, doubled, chain.radii[n]}};
    }
    return {};
}

}  // namespace gyro
