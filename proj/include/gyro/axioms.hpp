#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <string>
#include <vector>

#include "gyro/concepts.hpp"
#include "gyro/gyration.hpp"
#include "gyro/report.hpp"
#include "gyro/sampling.hpp"

namespace gyro {

namespace detail {

// Failures of the operation itself (carrier violations on a malformed model)
// are turned into report entries, never propagated.
template <typename E, std::size_t K, typename F>
void guarded(CheckResult<E>& check, double tol, const std::array<E, K>& t, F&& residual_of) {
    double r;
    try {
        r = residual_of();
    } catch (const std::exception&) {
        r = std::numeric_limits<double>::infinity();
    }
    check.record(r, tol, t);
}

}  // namespace detail

/**
 * Verifies the gyrogroup axioms with gyr computed by the closed formula:
 *
 *   G1  0⊕a = a = a⊕0
 *   G2  ⊖a⊕a = 0 = a⊕⊖a
 *   G3  x⊕(y⊕z) = (x⊕y)⊕gyr[x,y](z)
 *   G4  gyr[x⊕y, y] = gyr[x, y]
 *   gyr_automorphism  gyr[a,b](x⊕y) = gyr[a,b](x) ⊕ gyr[a,b](y)
 *
 * plus `gyr_bijective` on finite models and `gyr_isometry` on ball models. With
 * the formula gyration, these checks together hold exactly when the model is a
 * gyrogroup. Finite models are enumerated; continuous ones follow `spec`.
 */
template <GyroModel M>
AxiomReport<element_t<M>> check_axioms(const M& m, const SampleSpec& spec = {}) {
    using E = element_t<M>;
    const double tol = m.tolerance();
    AxiomReport<E> report;
    const E zero = m.identity();

    {
        CheckResult<E> c{"G1_identity"};
        for_each_tuple<1>(m, spec, c.name, [&](const std::array<E, 1>& t) {
            detail::guarded(c, tol, t, [&] {
                return std::max(m.residual(m.add(zero, t[0]), t[0]), m.residual(m.add(t[0], zero), t[0]));
            });
        });
        report.checks.push_back(std::move(c));
    }
    {
        CheckResult<E> c{"G2_inverse"};
        for_each_tuple<1>(m, spec, c.name, [&](const std::array<E, 1>& t) {
            detail::guarded(c, tol, t, [&] {
                const E inv = m.negate(t[0]);
                return std::max(m.residual(m.add(inv, t[0]), zero), m.residual(m.add(t[0], inv), zero));
            });
        });
        report.checks.push_back(std::move(c));
    }
    {
        CheckResult<E> c{"G3_gyroassociativity"};
        for_each_tuple<3>(m, spec, c.name, [&](const std::array<E, 3>& t) {
            detail::guarded(c, tol, t, [&] {
                const auto& [x, y, z] = t;
                return m.residual(m.add(x, m.add(y, z)), m.add(m.add(x, y), gyr(m, x, y, z)));
            });
        });
        report.checks.push_back(std::move(c));
    }
    {
        CheckResult<E> c{"G4_loop_property"};
        for_each_tuple<3>(m, spec, c.name, [&](const std::array<E, 3>& t) {
            detail::guarded(c, tol, t, [&] {
                const auto& [a, b, z] = t;
                return m.residual(gyr(m, m.add(a, b), b, z), gyr(m, a, b, z));
            });
        });
        report.checks.push_back(std::move(c));
    }
    {
        CheckResult<E> c{"gyr_automorphism"};
        for_each_tuple<4>(m, spec, c.name, [&](const std::array<E, 4>& t) {
            detail::guarded(c, tol, t, [&] {
                const auto& [a, b, x, y] = t;
                return m.residual(gyr(m, a, b, m.add(x, y)), m.add(gyr(m, a, b, x), gyr(m, a, b, y)));
            });
        });
        report.checks.push_back(std::move(c));
    }
    if constexpr (FiniteGyroModel<M>) {
        CheckResult<E> c{"gyr_bijective"};
        const std::size_t n = m.order();
        for_each_tuple<2>(m, spec, c.name, [&](const std::array<E, 2>& t) {
            std::vector<char> hit(n, 0);
            std::size_t z_dup = n;
            try {
                for (std::size_t z = 0; z < n && z_dup == n; ++z) {
                    const auto w = gyr(m, t[0], t[1], z);
                    if (hit[w]) z_dup = z;
                    hit[w] = 1;
                }
            } catch (const std::exception&) {
                z_dup = 0;
            }
            if (z_dup == n)
                c.record(0.0, tol, t);
            else
                c.fail({t[0], t[1], z_dup});
        });
        report.checks.push_back(std::move(c));
    }
    if constexpr (SampledGyroModel<M>) {
        CheckResult<E> c{"gyr_isometry"};
        for_each_tuple<3>(m, spec, c.name, [&](const std::array<E, 3>& t) {
            detail::guarded(c, tol, t, [&] { return std::abs(m.norm(gyr(m, t[0], t[1], t[2])) - m.norm(t[2])); });
        });
        report.checks.push_back(std::move(c));
    }
    report.sort_by_name();
    return report;
}

/**
 * Verifies the standard gyrogroup identities, for all x, y, z:
 *
 *   (1) (⊖x)⊕(x⊕y) = y
 *   (2) (x⊕(⊖y))⊕gyr[x,⊖y](y) = x
 *   (3) (x⊕gyr[x,y](⊖y))⊕y = x
 *   (4) gyr[x,y](z) = ⊖(x⊕y)⊕(x⊕(y⊕z)); checked against the model's closed-form
 *       gyration when it has one, and against the defining relation of G3 otherwise
 *   (5) (⊖x⊕y)⊕gyr[⊖x,y](⊖y⊕z) = ⊖x⊕z
 *   (6) ⊖(x⊕y) = gyr[x,y](⊖y⊖x)
 *
 * The second argument of the gyration in (5) is y; this is the instance of left
 * gyroassociativity x'⊕(y⊕z') = (x'⊕y)⊕gyr[x',y](z') with x' = ⊖x, z' = ⊖y⊕z.
 */
template <GyroModel M>
AxiomReport<element_t<M>> check_identities(const M& m, const SampleSpec& spec = {}) {
    using E = element_t<M>;
    const double tol = m.tolerance();
    AxiomReport<E> report;

    auto run3 = [&](const char* name, auto&& residual) {
        CheckResult<E> c{name};
        for_each_tuple<3>(m, spec, c.name, [&](const std::array<E, 3>& t) {
            detail::guarded(c, tol, t, [&] { return residual(t[0], t[1], t[2]); });
        });
        report.checks.push_back(std::move(c));
    };

    run3("left_cancellation", [&](const E& x, const E& y, const E&) {
        return m.residual(m.add(m.negate(x), m.add(x, y)), y);
    });
    run3("right_cancellation_gyr", [&](const E& x, const E& y, const E&) {
        const E ny = m.negate(y);
        return m.residual(m.add(m.add(x, ny), gyr(m, x, ny, y)), x);
    });
    run3("right_cancellation_gyr_inverse", [&](const E& x, const E& y, const E&) {
        return m.residual(m.add(m.add(x, gyr(m, x, y, m.negate(y))), y), x);
    });
    run3("gyration_formula", [&](const E& x, const E& y, const E& z) {
        const E formula = gyr(m, x, y, z);
        if constexpr (ClosedFormGyration<M>) {
            return m.residual(m.gyration(x, y, z), formula);
        } else {
            return m.residual(m.add(m.add(x, y), formula), m.add(x, m.add(y, z)));
        }
    });
    run3("difference_gyroassociative", [&](const E& x, const E& y, const E& z) {
        const E nx = m.negate(x);
        const E lhs = m.add(m.add(nx, y), gyr(m, nx, y, m.add(m.negate(y), z)));
        return m.residual(lhs, m.add(nx, z));
    });
    run3("inverse_of_sum", [&](const E& x, const E& y, const E&) {
        const E rhs = gyr(m, x, y, m.add(m.negate(y), m.negate(x)));
        return m.residual(m.negate(m.add(x, y)), rhs);
    });
    report.sort_by_name();
    return report;
}

/// Whether z ↦ gyr[a, b](z) permutes the carrier of a finite model.
template <FiniteGyroModel M>
bool gyration_is_permutation(const M& m, std::size_t a, std::size_t b) {
    std::vector<char> hit(m.order(), 0);
    for (std::size_t z = 0; z < m.order(); ++z) {
        const auto w = gyr(m, a, b, z);
        if (hit[w]) return false;
        hit[w] = 1;
    }
    return true;
}

}  // namespace gyro
