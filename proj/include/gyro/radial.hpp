#pragma once

#include <cmath>
#include <string>

#include "gyro/errors.hpp"

namespace gyro {

// Ball radii in [0, c) under the one-dimensional restriction of Einstein (and,
// for c = 1, Möbius) addition. This is a commutative group isomorphic to
// ([0, ∞), +) through the rapidity r ↦ c·artanh(r/c); the norm balls of the
// ball models add as  ball(r1) ⊕ ball(r2) = ball(r1 ⊕₁ r2).

inline void require_radius(double c, double r, const char* op) {
    if (!(c > 0.0)) throw std::domain_error(std::string(op) + ": c must be positive");
    if (!(r >= 0.0 && r < c)) throw carrier_error(std::string(op) + ": radius " + std::to_string(r) + " outside [0, c)");
}

/// r1 ⊕₁ r2 = (r1 + r2) / (1 + r1·r2/c²).
inline double radial_add(double c, double r1, double r2) {
    require_radius(c, r1, "radial_add");
    require_radius(c, r2, "radial_add");
    const double r = (r1 + r2) / (1.0 + r1 * r2 / (c * c));
    return r < c ? r : std::nextafter(c, 0.0);
}

/// Largest r with r ⊕₁ r ≤ R, i.e. the root of 2r/(1 + r²/c²) = R in [0, R].
inline double radial_half(double c, double big_r) {
    require_radius(c, big_r, "radial_half");
    if (big_r == 0.0) return 0.0;
    const double q = big_r / c;
    // c·(1 - sqrt(1 - q²))/q, written to avoid cancellation.
    return c * q / (1.0 + std::sqrt((1.0 - q) * (1.0 + q)));
}

/// Largest r with r ⊕₁ (r ⊕₁ r) ≤ R: a third of the rapidity.
inline double radial_third(double c, double big_r) {
    require_radius(c, big_r, "radial_third");
    return c * std::tanh(std::atanh(big_r / c) / 3.0);
}

/// Rapidity c·artanh(r/c); additive under ⊕₁.
inline double rapidity(double c, double r) {
    require_radius(c, r, "rapidity");
    return c * std::atanh(r / c);
}

}  // namespace gyro
