#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "gyro/element_set.hpp"
#include "gyro/errors.hpp"
#include "gyro/finite_table.hpp"
#include "gyro/gyration.hpp"
#include "gyro/subgyrogroup.hpp"

namespace gyro {

/// The left cosets a ⊕ H of a finite model, ordered by representative, where
/// each coset is represented by its smallest element.
struct CosetPartition {
    ElementSet subgroup;
    std::vector<ElementSet> cosets;
    std::vector<std::size_t> representatives;
    std::vector<std::size_t> coset_of;

    std::size_t count() const { return cosets.size(); }
};

/**
 * Partitions G into left cosets of an L-subgyrogroup H.
 *
 * Refuses (precondition_error) when H is not an L-subgyrogroup. Also verifies
 * (a⊕h)⊕H = a⊕H for all a ∈ G, h ∈ H; a failure there, or overlapping cosets,
 * raises invariant_error.
 */
inline CosetPartition left_cosets(const FiniteTable& g, const ElementSet& h) {
    if (auto l = is_L_subgyrogroup(g, h); !l)
        throw precondition_error("left_cosets: " + h.to_string() + " is not an L-subgyrogroup");
    const std::size_t n = g.order();
    CosetPartition p;
    p.subgroup = h;
    p.coset_of.assign(n, n);
    for (std::size_t a = 0; a < n; ++a) {
        if (p.coset_of[a] != n) continue;
        ElementSet c = translate(g, a, h);
        for (auto x : c.elements()) {
            if (p.coset_of[x] != n)
                throw invariant_error("left_cosets: cosets of " + std::to_string(a) + " and " +
                                      std::to_string(p.representatives[p.coset_of[x]]) + " overlap");
            p.coset_of[x] = p.cosets.size();
        }
        // a is the smallest element not yet covered, so it is the minimum of a ⊕ H.
        p.representatives.push_back(a);
        p.cosets.push_back(std::move(c));
    }
    for (std::size_t a = 0; a < n; ++a) {
        const ElementSet base = translate(g, a, h);
        for (auto k : h.elements()) {
            if (translate(g, g.add(a, k), h) != base)
                throw invariant_error("left_cosets: (a⊕h)⊕H != a⊕H at a=" + std::to_string(a) + ", h=" + std::to_string(k));
        }
    }
    return p;
}

/// π(a): index of the coset containing a.
inline std::size_t quotient_map(const CosetPartition& p, std::size_t a) {
    if (a >= p.coset_of.size()) throw carrier_error("quotient_map: element " + std::to_string(a) + " out of range");
    return p.coset_of[a];
}

/// π(a) = π(b) ⟺ ⊖a⊕b ∈ H. Works on any model with a membership test for H.
template <GyroModel M, typename Member>
bool same_coset(const M& m, const element_t<M>& a, const element_t<M>& b, Member&& in_h) {
    return in_h(gyro_difference(m, a, b));
}

/**
 * h_a(x⊕H) = (a⊕x)⊕H. Evaluates (a⊕x')⊕H for every representative x' of the
 * coset and raises invariant_error if they disagree.
 */
inline std::size_t homogeneity_translate(const FiniteTable& g, const CosetPartition& p, std::size_t a, std::size_t coset) {
    if (!g.contains(a)) throw carrier_error("homogeneity_translate: element out of range");
    if (coset >= p.count()) throw carrier_error("homogeneity_translate: coset index out of range");
    const auto members = p.cosets[coset].elements();
    const std::size_t image = p.coset_of[g.add(a, members.front())];
    for (auto x : members) {
        if (p.coset_of[g.add(a, x)] != image)
            throw invariant_error("homogeneity_translate: image depends on the representative (a=" + std::to_string(a) +
                                  ", x=" + std::to_string(x) + ")");
    }
    return image;
}

/// The translation carrying x⊕H to y⊕H: a = y ⊕ gyr[y, x](⊖x).
template <GyroModel M>
element_t<M> homogeneity_witness(const M& m, const element_t<M>& x, const element_t<M>& y) {
    return m.add(y, gyr(m, y, x, m.negate(x)));
}

}  // namespace gyro
