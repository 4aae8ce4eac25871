#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <random>

#include "gyro/element_set.hpp"
#include "gyro/errors.hpp"
#include "gyro/finite_table.hpp"
#include "gyro/gyration.hpp"
#include "gyro/prenorm.hpp"
#include "gyro/report.hpp"
#include "gyro/sampling.hpp"

namespace gyro {

/**
 * a⊕(b⊕V) = (a⊕b)⊕V for every a, b ∈ W, compared as exact sets. Witness
 * (a, b, p) with p in exactly one side. W must be a subset of V.
 */
inline CheckResult<std::size_t> micro_assoc_check(const FiniteTable& g, const ElementSet& w, const ElementSet& v) {
    if (w.empty()) throw precondition_error("micro_assoc_check: W is empty");
    if (!w.subset_of(v)) throw precondition_error("micro_assoc_check: W is not a subset of V");
    CheckResult<std::size_t> c{"micro_associativity"};
    for (auto a : w.elements()) {
        for (auto b : w.elements()) {
            const ElementSet lhs = translate(g, a, translate(g, b, v));
            const ElementSet rhs = translate(g, g.add(a, b), v);
            if (lhs == rhs) {
                c.record(0.0, 0.0, std::array<std::size_t, 2>{a, b});
            } else {
                const std::size_t p = lhs.subset_of(rhs) ? rhs.first_outside(lhs) : lhs.first_outside(rhs);
                c.fail({a, b, p});
            }
        }
    }
    return c;
}

/// Sampling setup for the ball-model check.
struct MicroAssocSpec {
    std::size_t pairs = 100;
    std::size_t directions = 256;
    std::uint64_t seed = 0;
    double tolerance = 1e-6;
};

/**
 * Ball-model version with W, V the open norm balls of radii w ≤ v. Both sides
 * are images of V under homeomorphisms, so they agree iff their boundaries do.
 * For boundary points p = a⊕(b⊕v·d) the residual is |‖⊖(a⊕b)⊕p‖ − v|, and for
 * q = (a⊕b)⊕v·d it is |‖⊖b⊕(⊖a⊕q)‖ − v|; the check reports the largest
 * residual over `directions` unit directions d and `pairs` sampled (a, b) ∈ W².
 */
template <BallModel M>
CheckResult<element_t<M>> micro_assoc_check(const M& m, double w, double v, const MicroAssocSpec& spec = {}) {
    using E = element_t<M>;
    if (!(w > 0.0) || !(w <= v) || !(v < m.c())) throw precondition_error("micro_assoc_check: need 0 < w <= v < c");
    CheckResult<E> c{"micro_associativity"};
    auto rng = make_rng(spec.seed, c.name);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    const auto boundary = m.sphere_points(v, spec.directions);

    auto in_w = [&] {
        E x = m.sample(rng);
        const double r = m.norm(x);
        if (r == 0.0) return x;
        const double f = w * unif(rng) / r;
        if constexpr (requires { x.real(); }) return E(x * f);
        else {
            for (auto& e : x) e *= f;
            return x;
        }
    };

    for (std::size_t s = 0; s < spec.pairs; ++s) {
        const E a = in_w();
        const E b = in_w();
        const E ab = m.add(a, b);
        const E neg_ab = m.negate(ab);
        const E neg_a = m.negate(a);
        const E neg_b = m.negate(b);
        double worst = 0.0;
        for (const auto& d : boundary) {
            const E p = m.add(a, m.add(b, d));
            worst = std::max(worst, std::abs(m.norm(m.add(neg_ab, p)) - v));
            const E q = m.add(ab, d);
            worst = std::max(worst, std::abs(m.norm(m.add(neg_b, m.add(neg_a, q))) - v));
        }
        c.record(worst, spec.tolerance, std::array<E, 2>{a, b});
    }
    return c;
}

}  // namespace gyro
