#pragma once

#include <concepts>
#include <cstddef>
#include <random>
#include <vector>

namespace gyro {

/**
 * A gyrogroup model: a carrier with identity, binary operation and inverse.
 *
 * Models supply the algebra only. Gyrations are derived from the operation by
 * the closed formula in gyration.hpp; a model may additionally expose
 * `gyration(a, b, z)` as a closed form, which is then cross-checked against the
 * formula rather than trusted.
 *
 * `residual(a, b)` is the comparison metric used by every verification routine:
 * componentwise absolute difference for continuous models, 0/1 for finite ones.
 * Two elements are equal when `residual(a, b) <= tolerance()`.
 */
template <typename M>
concept GyroModel = requires(const M& m, const typename M::element_type& a,
                             const typename M::element_type& b) {
    typename M::element_type;
    { m.identity() } -> std::convertible_to<typename M::element_type>;
    { m.add(a, b) } -> std::convertible_to<typename M::element_type>;
    { m.negate(a) } -> std::convertible_to<typename M::element_type>;
    { m.contains(a) } -> std::convertible_to<bool>;
    { m.residual(a, b) } -> std::convertible_to<double>;
    { m.tolerance() } -> std::convertible_to<double>;
};

/// Finite models enumerate their carrier as indices 0..order()-1 and are always
/// verified exhaustively.
template <typename M>
concept FiniteGyroModel = GyroModel<M> && requires(const M& m) {
    { m.order() } -> std::convertible_to<std::size_t>;
} && std::same_as<typename M::element_type, std::size_t>;

/// Continuous models draw pseudorandom carrier elements and provide fixed
/// near-boundary stress points.
template <typename M>
concept SampledGyroModel = GyroModel<M> && requires(const M& m, std::mt19937_64& rng) {
    { m.sample(rng) } -> std::convertible_to<typename M::element_type>;
    { m.stress_points() } -> std::convertible_to<std::vector<typename M::element_type>>;
    { m.norm(m.identity()) } -> std::convertible_to<double>;
};

/// Models that know a closed form for gyr[a, b](z).
template <typename M>
concept ClosedFormGyration = GyroModel<M> && requires(const M& m, const typename M::element_type& a) {
    { m.gyration(a, a, a) } -> std::convertible_to<typename M::element_type>;
};

template <typename M>
using element_t = typename M::element_type;

}  // namespace gyro
